#include "delpezzo/json.hpp"

#include <limits>

namespace delpezzo::json {

namespace {

std::string bit_string(f2::Bits x, int width) {
  std::string s;
  for (int i = 0; i < width; ++i) s += ((x >> i) & 1) ? '1' : '0';
  return s;
}

}  // namespace

json order_to_json(const groups::Order& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return groups::to_string(x);
}

groups::Order order_from_json(const json& j) {
  if (j.is_number_unsigned()) return groups::Order(j.get<std::uint64_t>());
  if (j.is_number_integer()) return groups::Order(j.get<std::int64_t>());
  return groups::Order(j.get<std::string>());
}

json to_json(const bridge::VerificationReport& report) {
  json numbers = json::object();
  for (const auto& [key, value] : report.numbers) numbers[key] = order_to_json(value);
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back({{"check", w.name}, {"pass", w.pass}, {"detail", w.detail}});
  return {{"statement", report.statement}, {"n", report.n},        {"lattice", report.lattice},
          {"pass", report.pass},           {"numbers", numbers},   {"witnesses", witnesses}};
}

bridge::VerificationReport report_from_json(const json& j) {
  bridge::VerificationReport r;
  r.statement = j.at("statement").get<std::string>();
  r.n = j.at("n").get<int>();
  r.lattice = j.at("lattice").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& [key, value] : j.at("numbers").items()) r.numbers[key] = order_from_json(value);
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("check").get<std::string>(), w.at("pass").get<bool>(), w.at("detail").get<std::string>()});
  return r;
}

json lattice_to_json(const lattice::DelPezzoLattice& L) {
  json basis = json::array();
  for (const auto& b : L.basis) basis.push_back(b.coords);
  return {{"n", L.n},
          {"type", L.type_name()},
          {"metric", L.metric},
          {"K", L.K.coords},
          {"basis", basis},
          {"gram", L.gram},
          {"discriminant", L.expected_discriminant()}};
}

json roots_to_json(const std::vector<lattice::Root>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(r.coords);
  return out;
}

json space_to_json(const f2::F2QuadraticSpace& S) {
  json basis = json::array();
  for (auto b : S.basis()) basis.push_back(bit_string(b, S.ambient_dim()));
  json rows = json::array();
  for (auto row : S.bilinear_rows()) rows.push_back(bit_string(row, S.dim()));
  return {{"dim", S.dim()},
          {"ambient_dim", S.ambient_dim()},
          {"model", S.model() == f2::Model::Ambient ? "ambient" : "intrinsic"},
          {"basis", basis},
          {"bilinear", rows},
          {"qdiag", bit_string(S.qdiag(), S.dim())}};
}

json census_to_json(const f2::Census& c) { return {{"q0", c.q0}, {"q1", c.q1}}; }

json summary_to_json(const bridge::SummaryRow& row) {
  return {{"n", row.n},
          {"type", row.type},
          {"roots", row.roots},
          {"q1", row.q1},
          {"q0", row.q0},
          {"radical_dim", row.radical_dim},
          {"arf", row.arf < 0 ? json(nullptr) : json(row.arf)},
          {"weyl_order", order_to_json(row.weyl_order)},
          {"autL_order", order_to_json(row.autL_order)},
          {"oL2_order", order_to_json(row.oL2_order)},
          {"rho_image_order", order_to_json(row.rho_image_order)}};
}

}  // namespace delpezzo::json
