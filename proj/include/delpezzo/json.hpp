#pragma once

#include <json.hpp>

#include "delpezzo/bridge.hpp"
#include "delpezzo/f2.hpp"
#include "delpezzo/lattice.hpp"

namespace delpezzo::json {

using nlohmann::json;

/// Orders go out as JSON integers when they fit in 64 bits, as decimal
/// strings otherwise; both forms are accepted on input.
json order_to_json(const groups::Order& x);
groups::Order order_from_json(const json& j);

json to_json(const bridge::VerificationReport& report);
bridge::VerificationReport report_from_json(const json& j);

/// {n, type, K, basis, gram}; gram as row-major rows.
json lattice_to_json(const lattice::DelPezzoLattice& L);
json roots_to_json(const std::vector<lattice::Root>& roots);
/// {dim, ambient_dim, model, basis, bilinear (bit rows), qdiag}; bit strings
/// list coordinate 0 first.
json space_to_json(const f2::F2QuadraticSpace& S);
json census_to_json(const f2::Census& c);
json summary_to_json(const bridge::SummaryRow& row);

}  // namespace delpezzo::json
