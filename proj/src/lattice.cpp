#include "delpezzo/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "delpezzo/error.hpp"

namespace delpezzo::lattice {

namespace {

std::int64_t isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

DelPezzoLattice make_lattice(LatticeKind kind, int n, std::vector<int> metric, AmbientVector K) {
  DelPezzoLattice L;
  L.kind = kind;
  L.n = n;
  L.metric = std::move(metric);
  L.K = std::move(K);
  IntVector functional(L.ambient_dim());
  for (std::size_t i = 0; i < functional.size(); ++i) functional[i] = L.metric[i] * L.K[i];
  for (auto& row : intmat::kernel_basis(functional)) L.basis.push_back(AmbientVector{std::move(row)});
  L.gram.assign(L.basis.size(), IntVector(L.basis.size()));
  for (std::size_t i = 0; i < L.basis.size(); ++i)
    for (std::size_t j = 0; j < L.basis.size(); ++j) L.gram[i][j] = L.inner(L.basis[i], L.basis[j]);
  check_invariants(L);
  return L;
}

IntMatrix basis_rows(const DelPezzoLattice& L) {
  IntMatrix rows;
  for (const auto& b : L.basis) rows.push_back(b.coords);
  return rows;
}

// Column j = coordinates of vectors[j] on the L-basis.
IntMatrix coordinate_columns(const DelPezzoLattice& L, const std::vector<AmbientVector>& vectors) {
  IntMatrix m(static_cast<std::size_t>(L.n), IntVector(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    auto c = L.coordinates(vectors[j]);
    if (!c) throw Error(ErrorKind::NotARoot, "vector is not in the lattice");
    for (std::size_t i = 0; i < c->size(); ++i) m[i][j] = (*c)[i];
  }
  return m;
}

}  // namespace

AmbientVector operator+(const AmbientVector& a, const AmbientVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "vector addition");
  AmbientVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

AmbientVector operator-(const AmbientVector& a, const AmbientVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "vector subtraction");
  AmbientVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

AmbientVector operator-(const AmbientVector& a) {
  AmbientVector r = a;
  for (auto& x : r.coords) x = -x;
  return r;
}

AmbientVector operator*(std::int64_t s, const AmbientVector& a) {
  AmbientVector r = a;
  for (auto& x : r.coords) x *= s;
  return r;
}

AmbientVector unit(std::size_t dim, std::size_t index) {
  AmbientVector e{IntVector(dim, 0)};
  e[index] = 1;
  return e;
}

std::int64_t DelPezzoLattice::expected_discriminant() const {
  return kind == LatticeKind::DelPezzo ? 9 - n : n + 1;
}

std::string DelPezzoLattice::type_name() const {
  if (kind == LatticeKind::PlainA) return "A" + std::to_string(n);
  static const char* names[] = {"A1xA2", "A4", "D5", "E6", "E7", "E8"};
  return names[n - 3];
}

std::int64_t DelPezzoLattice::inner(const AmbientVector& v, const AmbientVector& w) const {
  if (v.size() != metric.size() || w.size() != metric.size())
    throw Error(ErrorKind::LengthMismatch, "inner product on ambient vectors of different lengths");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < metric.size(); ++i) acc += metric[i] * v[i] * w[i];
  return acc;
}

bool DelPezzoLattice::contains(const AmbientVector& v) const { return coordinates(v).has_value(); }

std::optional<IntVector> DelPezzoLattice::coordinates(const AmbientVector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::LengthMismatch, "coordinates of a vector of wrong length");
  const auto pivots = intmat::pivot_columns(basis_rows(*this));
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  IntVector residual = v.coords;
  IntVector c(basis.size(), 0);
  for (std::size_t r : order) {
    const std::int64_t p = basis[r][pivots[r]];
    if (residual[pivots[r]] % p != 0) return std::nullopt;
    c[r] = residual[pivots[r]] / p;
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= c[r] * basis[r][i];
  }
  if (std::any_of(residual.begin(), residual.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
  return c;
}

AmbientVector DelPezzoLattice::from_coordinates(const IntVector& c) const {
  if (c.size() != basis.size()) throw Error(ErrorKind::LengthMismatch, "lattice coordinates of wrong length");
  AmbientVector v{IntVector(ambient_dim(), 0)};
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[r] * basis[r][i];
  return v;
}

std::int64_t inner_product(const AmbientVector& v, const AmbientVector& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::LengthMismatch, "inner product on vectors of different lengths");
  if (v.size() == 0) return 0;
  std::int64_t acc = -v[0] * w[0];
  for (std::size_t i = 1; i < v.size(); ++i) acc += v[i] * w[i];
  return acc;
}

DelPezzoLattice build_del_pezzo(int n) {
  if (n < 3 || n > 8) throw Error(ErrorKind::OutOfRange, "del Pezzo index must be in [3, 8], got " + std::to_string(n));
  std::vector<int> metric(static_cast<std::size_t>(n) + 1, 1);
  metric[0] = -1;
  AmbientVector K{IntVector(static_cast<std::size_t>(n) + 1, -1)};
  K[0] = 3;
  return make_lattice(LatticeKind::DelPezzo, n, std::move(metric), std::move(K));
}

DelPezzoLattice build_plain_root_lattice(int rank) {
  if (rank < 2 || rank > 10) throw Error(ErrorKind::OutOfRange, "A_n rank must be in [2, 10], got " + std::to_string(rank));
  const auto d = static_cast<std::size_t>(rank) + 1;
  return make_lattice(LatticeKind::PlainA, rank, std::vector<int>(d, 1), AmbientVector{IntVector(d, 1)});
}

void check_invariants(const DelPezzoLattice& L) {
  if (L.basis.size() != static_cast<std::size_t>(L.n))
    throw Error(ErrorKind::WrongShape, "basis has " + std::to_string(L.basis.size()) + " vectors, expected " +
                                           std::to_string(L.n));
  for (const auto& b : L.basis)
    if (L.inner(b, L.K) != 0) throw Error(ErrorKind::WrongShape, "basis vector not orthogonal to K");
  for (std::size_t i = 0; i < L.gram.size(); ++i)
    if (L.gram[i][i] % 2 != 0) throw Error(ErrorKind::WrongShape, "gram matrix is not even");
  for (std::size_t k = 1; k <= L.gram.size(); ++k) {
    IntMatrix minor(k, IntVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = L.gram[i][j];
    if (intmat::determinant(minor) <= 0) throw Error(ErrorKind::WrongShape, "gram matrix is not positive definite");
  }
  if (std::abs(intmat::determinant(L.gram)) != L.expected_discriminant())
    throw Error(ErrorKind::WrongShape, "unexpected discriminant");
}

std::int64_t leading_coordinate_bound(const DelPezzoLattice& L) {
  if (L.kind == LatticeKind::PlainA) return 0;
  // Cauchy-Schwarz on the positive part: 9 v0^2 <= n (2 + v0^2).
  return isqrt((2 * L.n) / (9 - L.n));
}

std::vector<Root> enumerate_roots(const DelPezzoLattice& L) {
  const std::size_t d = L.ambient_dim();
  std::vector<Root> roots;
  AmbientVector v{IntVector(d, 0)};
  // For the positive coordinates from `first` on: sum must equal `sum`,
  // sum of squares must equal `squares`.
  const std::size_t first = L.kind == LatticeKind::DelPezzo ? 1 : 0;
  std::function<void(std::size_t, std::int64_t, std::int64_t)> fill = [&](std::size_t pos, std::int64_t sum,
                                                                            std::int64_t squares) {
    const auto left = static_cast<std::int64_t>(d - pos);
    if (left == 0) {
      if (sum == 0 && squares == 0) roots.push_back(v);
      return;
    }
    if (sum * sum > left * squares) return;
    const std::int64_t bound = isqrt(squares);
    for (std::int64_t x = -bound; x <= bound; ++x) {
      v[pos] = x;
      fill(pos + 1, sum - x, squares - x * x);
    }
    v[pos] = 0;
  };
  if (L.kind == LatticeKind::DelPezzo) {
    const std::int64_t bound = leading_coordinate_bound(L);
    for (std::int64_t v0 = -bound; v0 <= bound; ++v0) {
      v[0] = v0;
      fill(first, -3 * v0, 2 + v0 * v0);
    }
  } else {
    fill(first, 0, 2);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_root(const DelPezzoLattice& L, const AmbientVector& v) {
  return v.size() == L.ambient_dim() && L.inner(v, v) == 2 && L.inner(v, L.K) == 0;
}

LatticeIsometry identity_isometry(const DelPezzoLattice& L) { return {intmat::identity(static_cast<std::size_t>(L.n))}; }

LatticeIsometry negation_isometry(const DelPezzoLattice& L) {
  auto m = intmat::identity(static_cast<std::size_t>(L.n));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = -1;
  return {m};
}

LatticeIsometry compose(const LatticeIsometry& outer, const LatticeIsometry& inner) {
  return {intmat::multiply(outer.matrix, inner.matrix)};
}

AmbientVector apply(const DelPezzoLattice& L, const LatticeIsometry& u, const AmbientVector& v) {
  auto c = L.coordinates(v);
  if (!c) throw Error(ErrorKind::BadInput, "vector is not in the lattice");
  return L.from_coordinates(intmat::multiply(u.matrix, *c));
}

bool preserves_gram(const DelPezzoLattice& L, const LatticeIsometry& u) {
  if (u.matrix.size() != L.gram.size()) return false;
  return intmat::multiply(intmat::transpose(u.matrix), intmat::multiply(L.gram, u.matrix)) == L.gram;
}

std::optional<IntMatrix> to_ambient(const DelPezzoLattice& L, const LatticeIsometry& u) {
  const std::size_t d = L.ambient_dim();
  const std::int64_t k2 = L.inner(L.K, L.K);
  const std::int64_t D = std::abs(k2);
  const std::int64_t s = k2 < 0 ? -1 : 1;
  IntMatrix out(d, IntVector(d));
  for (std::size_t col = 0; col < d; ++col) {
    const AmbientVector x = unit(d, col);
    const std::int64_t xk = L.inner(x, L.K);
    // D x = D w + s <x,K> K with D w in L.
    const AmbientVector scaled = (D * x) - ((s * xk) * L.K);
    const AmbientVector image = apply(L, u, scaled) + ((s * xk) * L.K);
    for (std::size_t r = 0; r < d; ++r) {
      if (image[r] % D != 0) return std::nullopt;
      out[r][col] = image[r] / D;
    }
  }
  return out;
}

LatticeIsometry from_ambient(const DelPezzoLattice& L, const IntMatrix& ambient) {
  const std::size_t d = L.ambient_dim();
  if (ambient.size() != d) throw Error(ErrorKind::LengthMismatch, "ambient matrix has wrong size");
  auto image_of = [&](const AmbientVector& v) { return AmbientVector{intmat::multiply(ambient, v.coords)}; };
  if (image_of(L.K) != L.K) throw Error(ErrorKind::NotIsometry, "ambient matrix does not fix K");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (L.inner(image_of(unit(d, i)), image_of(unit(d, j))) != L.inner(unit(d, i), unit(d, j)))
        throw Error(ErrorKind::NotIsometry, "ambient matrix does not preserve the metric");
  std::vector<AmbientVector> images;
  for (const auto& b : L.basis) images.push_back(image_of(b));
  return {coordinate_columns(L, images)};
}

LatticeIsometry root_reflection(const DelPezzoLattice& L, const Root& alpha) {
  if (!is_root(L, alpha)) throw Error(ErrorKind::NotARoot, "reflection requested in a non-root");
  const IntVector a = *L.coordinates(alpha);
  const IntVector ga = intmat::multiply(L.gram, a);
  const std::size_t n = a.size();
  IntMatrix m = intmat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= a[i] * ga[j];
  return {m};
}

std::int64_t height_functional(const AmbientVector& v) {
  std::int64_t f = 0;
  for (std::size_t i = 0; i < v.size(); ++i) f = 10 * f + v[i];
  return f;
}

std::vector<Root> simple_roots(const DelPezzoLattice& L) {
  const auto roots = enumerate_roots(L);
  std::set<Root> positive;
  for (const auto& r : roots) {
    const auto h = height_functional(r);
    if (h == 0) throw std::logic_error("height functional vanishes on a root");
    if (h > 0) positive.insert(r);
  }
  std::vector<Root> simple;
  for (const auto& r : roots) {
    if (!positive.count(r)) continue;
    const bool decomposable =
        std::any_of(positive.begin(), positive.end(), [&](const Root& p) { return positive.count(r - p) > 0; });
    if (!decomposable) simple.push_back(r);
  }
  if (simple.size() != static_cast<std::size_t>(L.n)) throw std::logic_error("simple root count differs from rank");
  return simple;
}

std::vector<LatticeIsometry> weyl_generators(const DelPezzoLattice& L) {
  std::vector<LatticeIsometry> gens;
  for (const auto& s : simple_roots(L)) gens.push_back(root_reflection(L, s));
  return gens;
}

LatticeIsometry isometry_from_simple_images(const DelPezzoLattice& L, const std::vector<Root>& images) {
  const auto simple = simple_roots(L);
  if (images.size() != simple.size()) throw Error(ErrorKind::LengthMismatch, "one image per simple root required");
  const IntMatrix S = coordinate_columns(L, simple);
  const IntMatrix R = coordinate_columns(L, images);
  LatticeIsometry u{intmat::multiply(R, intmat::inverse_unimodular(S))};
  if (!preserves_gram(L, u)) throw Error(ErrorKind::NotIsometry, "simple root images do not preserve the Gram values");
  return u;
}

namespace {

// Backtracks over assignments simple[i] -> candidates[...] preserving all
// pairwise inner products. `visit` gets candidate indices.
template <class Visit>
std::uint64_t backtrack_images(const DelPezzoLattice& L, const std::vector<Root>& simple,
                               const std::vector<Root>& candidates, Visit&& visit) {
  const std::size_t n = simple.size();
  const std::size_t m = candidates.size();
  std::vector<std::int64_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = L.inner(candidates[a], candidates[b]);
  IntMatrix cartan(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan[i][j] = L.inner(simple[i], simple[j]);

  std::vector<std::size_t> chosen(n);
  std::uint64_t count = 0;
  bool stop = false;
  std::function<void(std::size_t)> step = [&](std::size_t level) {
    if (level == n) {
      ++count;
      if (!visit(chosen)) stop = true;
      return;
    }
    for (std::size_t c = 0; c < m && !stop; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j) ok = table[c * m + chosen[j]] == cartan[level][j];
      if (!ok) continue;
      chosen[level] = c;
      step(level + 1);
    }
  };
  step(0);
  return count;
}

}  // namespace

std::vector<LatticeIsometry> diagram_automorphisms(const DelPezzoLattice& L) {
  const auto simple = simple_roots(L);
  std::vector<LatticeIsometry> result;
  backtrack_images(L, simple, simple, [&](const std::vector<std::size_t>& chosen) {
    bool identity = true;
    for (std::size_t i = 0; i < chosen.size(); ++i) identity = identity && chosen[i] == i;
    if (!identity) {
      std::vector<Root> images;
      for (auto c : chosen) images.push_back(simple[c]);
      result.push_back(isometry_from_simple_images(L, images));
    }
    return true;
  });
  return result;
}

std::vector<LatticeIsometry> automorphism_group(const DelPezzoLattice& L) {
  auto gens = weyl_generators(L);
  for (auto& g : diagram_automorphisms(L)) gens.push_back(std::move(g));
  gens.push_back(negation_isometry(L));
  return gens;
}

std::uint64_t for_each_isometry(const DelPezzoLattice& L,
                                const std::function<bool(const LatticeIsometry&)>& visit) {
  const auto simple = simple_roots(L);
  const auto roots = enumerate_roots(L);
  const IntMatrix simple_inverse = intmat::inverse_unimodular(coordinate_columns(L, simple));
  const IntMatrix root_coords = coordinate_columns(L, roots);
  const std::size_t n = simple.size();
  return backtrack_images(L, simple, roots, [&](const std::vector<std::size_t>& chosen) {
    IntMatrix R(n, IntVector(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) R[i][j] = root_coords[i][chosen[j]];
    return visit(LatticeIsometry{intmat::multiply(R, simple_inverse)});
  });
}

}  // namespace delpezzo::lattice
