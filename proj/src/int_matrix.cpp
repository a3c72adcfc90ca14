#include "delpezzo/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace delpezzo::intmat {

namespace {

std::int64_t checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("integer matrix entry overflow");
  return static_cast<std::int64_t>(x);
}

// Floor division, so the remainder has the sign of the divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void add_multiple(IntVector& dst, const IntVector& src, std::int64_t factor) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = checked(static_cast<__int128>(dst[i]) + static_cast<__int128>(factor) * src[i]);
}

}  // namespace

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        c[i][j] = checked(static_cast<__int128>(c[i][j]) + static_cast<__int128>(a[i][k]) * b[k][j]);
    }
  }
  return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("multiply: shape mismatch");
    __int128 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<__int128>(a[i][j]) * v[j];
    out[i] = checked(acc);
  }
  return out;
}

std::int64_t determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("determinant: matrix not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return checked(sign * m[n - 1][n - 1]);
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // Euclid on column `col` among rows pivot_row.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || std::abs(rows[r][col]) < std::abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        add_multiple(rows[r], rows[pivot_row], -(rows[r][col] / rows[pivot_row][col]));
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    const std::int64_t p = rows[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) add_multiple(rows[r], rows[pivot_row], -floor_div(rows[r][col], p));
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

IntMatrix kernel_basis(const IntVector& functional) {
  const std::size_t d = functional.size();
  // Column operations on the 1 x d row, mirrored on the rows of `transform`
  // (which hold the columns of the unimodular transform).
  IntVector row = functional;
  IntMatrix transform = identity(d);
  while (true) {
    std::size_t best = d;
    for (std::size_t j = 0; j < d; ++j) {
      if (row[j] == 0) continue;
      if (best == d || std::abs(row[j]) < std::abs(row[best])) best = j;
    }
    if (best == d) break;
    bool done = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == best || row[j] == 0) continue;
      const std::int64_t q = row[j] / row[best];
      row[j] -= q * row[best];
      add_multiple(transform[j], transform[best], -q);
      if (row[j] != 0) done = false;
    }
    if (done) break;
  }
  IntMatrix kernel;
  for (std::size_t j = 0; j < d; ++j)
    if (row[j] == 0) kernel.push_back(transform[j]);
  kernel = hermite_normal_form(std::move(kernel));
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix m = a;
  IntMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    while (true) {
      std::size_t best = n;
      for (std::size_t r = col; r < n; ++r) {
        if (m[r][col] == 0) continue;
        if (best == n || std::abs(m[r][col]) < std::abs(m[best][col])) best = r;
      }
      if (best == n) throw std::domain_error("inverse_unimodular: singular matrix");
      std::swap(m[col], m[best]);
      std::swap(inv[col], inv[best]);
      bool done = true;
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m[r][col] == 0) continue;
        const std::int64_t q = m[r][col] / m[col][col];
        add_multiple(m[r], m[col], -q);
        add_multiple(inv[r], inv[col], -q);
        if (m[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (std::abs(m[col][col]) != 1) throw std::domain_error("inverse_unimodular: determinant is not +-1");
    if (m[col][col] < 0) {
      for (auto& x : m[col]) x = -x;
      for (auto& x : inv[col]) x = -x;
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t r = 0; r < col; ++r) {
      const std::int64_t f = m[r][col];
      if (f == 0) continue;
      add_multiple(m[r], m[col], -f);
      add_multiple(inv[r], inv[col], -f);
    }
  }
  return inv;
}

std::vector<std::size_t> pivot_columns(const IntMatrix& rows) {
  std::vector<std::size_t> pivots;
  pivots.reserve(rows.size());
  for (const auto& r : rows) {
    std::size_t c = 0;
    while (c < r.size() && r[c] == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

}  // namespace delpezzo::intmat
