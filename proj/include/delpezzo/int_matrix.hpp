#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace delpezzo {

using IntVector = std::vector<std::int64_t>;
/// Row-major dense integer matrix.
using IntMatrix = std::vector<IntVector>;

namespace intmat {

IntMatrix identity(std::size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& a);

/// Row Hermite normal form of a full-row-rank matrix: upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Unique for the
/// row lattice. Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Integer kernel {v : <functional, v> = 0} as HNF rows sorted
/// lexicographically.
IntMatrix kernel_basis(const IntVector& functional);

/// Inverse of a unimodular matrix. Throws std::domain_error if |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// For each HNF row (in the given order), the column of its leading entry.
std::vector<std::size_t> pivot_columns(const IntMatrix& rows);

}  // namespace intmat
}  // namespace delpezzo
