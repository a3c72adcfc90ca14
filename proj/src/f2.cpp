#include "delpezzo/f2.hpp"

#include <algorithm>
#include <functional>

#include "delpezzo/error.hpp"

namespace delpezzo::f2 {

namespace {

Bits bit(int i) { return Bits{1} << i; }

Bits drop_bit(Bits x, int index) {
  const Bits low = x & (bit(index) - 1);
  return low | ((x >> (index + 1)) << index);
}

Bits insert_zero_bit(Bits x, int index) {
  const Bits low = x & (bit(index) - 1);
  return low | ((x >> index) << (index + 1));
}

RadicalSplit split_along_radical(const F2QuadraticSpace& S, int expected_q) {
  const auto rad = radical_coords(S);
  if (rad.size() != 2) throw Error(ErrorKind::WrongShape, "radical is not of order 2");
  RadicalSplit split;
  split.k_coords = rad[1];
  split.k = S.vector(split.k_coords);
  split.index = __builtin_ctz(split.k_coords);
  if (S.q_coords(split.k_coords) != expected_q)
    throw Error(ErrorKind::WrongShape, "q(k) = " + std::to_string(S.q_coords(split.k_coords)) + ", expected " +
                                           std::to_string(expected_q));
  return split;
}

// The form and q on the basis vectors other than b_index.
F2QuadraticSpace restrict_to_complement(const F2QuadraticSpace& S, int index) {
  std::vector<Bits> rows;
  for (int i = 0; i < S.dim(); ++i)
    if (i != index) rows.push_back(drop_bit(S.bilinear_rows()[static_cast<std::size_t>(i)], index));
  return F2QuadraticSpace::intrinsic(std::move(rows), drop_bit(S.qdiag(), index));
}

}  // namespace

F2Matrix::F2Matrix(int dim, std::vector<Bits> columns) : dim_(dim), columns_(std::move(columns)) {
  if (columns_.size() != static_cast<std::size_t>(dim_)) throw Error(ErrorKind::LengthMismatch, "F2 matrix shape");
  for (Bits c : columns_)
    if (c >> dim_) throw Error(ErrorKind::BadInput, "F2 matrix column out of range");
}

F2Matrix F2Matrix::identity(int dim) {
  std::vector<Bits> cols(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) cols[static_cast<std::size_t>(i)] = bit(i);
  return F2Matrix(dim, std::move(cols));
}

Bits F2Matrix::apply(Bits coords) const {
  Bits out = 0;
  for (int j = 0; coords; ++j, coords >>= 1)
    if (coords & 1) out ^= columns_[static_cast<std::size_t>(j)];
  return out;
}

bool F2Matrix::is_identity() const { return *this == identity(dim_); }

bool F2Matrix::is_invertible() const {
  std::vector<Bits> rows = columns_;
  int rank = 0;
  for (int b = 0; b < dim_; ++b) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [&](Bits r) { return r & bit(b); });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && (rows[r] & bit(b))) rows[r] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank == dim_;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::LengthMismatch, "composing F2 matrices of different size");
  std::vector<Bits> cols(b.columns_.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = a.apply(b.columns_[j]);
  return F2Matrix(a.dim_, std::move(cols));
}

F2QuadraticSpace F2QuadraticSpace::intrinsic(std::vector<Bits> bilinear_rows, Bits qdiag) {
  F2QuadraticSpace S;
  S.model_ = Model::Intrinsic;
  S.ambient_dim_ = static_cast<int>(bilinear_rows.size());
  for (int i = 0; i < S.ambient_dim_; ++i) S.basis_.push_back(bit(i));
  S.bilinear_ = std::move(bilinear_rows);
  S.qdiag_ = qdiag;
  S.index();
  return S;
}

F2QuadraticSpace F2QuadraticSpace::ambient(int ambient_dim, std::vector<Bits> basis, std::vector<Bits> bilinear_rows,
                                           Bits qdiag, std::vector<lattice::AmbientVector> lifts) {
  F2QuadraticSpace S;
  S.model_ = Model::Ambient;
  S.ambient_dim_ = ambient_dim;
  S.basis_ = std::move(basis);
  S.bilinear_ = std::move(bilinear_rows);
  S.qdiag_ = qdiag;
  S.lifts_ = std::move(lifts);
  if (S.bilinear_.size() != S.basis_.size()) throw Error(ErrorKind::LengthMismatch, "bilinear rows vs basis");
  S.index();
  return S;
}

void F2QuadraticSpace::index() {
  const int d = dim();
  if (d > 20 || ambient_dim_ > 20) throw Error(ErrorKind::OutOfRange, "F2 spaces are limited to 20 dimensions");
  for (int i = 0; i < d; ++i) {
    const Bits row = bilinear_[static_cast<std::size_t>(i)];
    if (row >> d) throw Error(ErrorKind::BadInput, "bilinear row out of range");
    if (row & bit(i)) throw Error(ErrorKind::BadInput, "form is not alternating");
    for (int j = 0; j < d; ++j)
      if (((row >> j) & 1) != ((bilinear_[static_cast<std::size_t>(j)] >> i) & 1))
        throw Error(ErrorKind::BadInput, "form is not symmetric");
  }
  ambient_of_.assign(size(), 0);
  coords_of_.assign(std::size_t{1} << ambient_dim_, -1);
  for (Bits c = 0; c < size(); ++c) {
    Bits v = 0;
    for (int i = 0; i < d; ++i)
      if (c & bit(i)) v ^= basis_[static_cast<std::size_t>(i)];
    if (v >> ambient_dim_ || coords_of_[v] >= 0) throw Error(ErrorKind::BadInput, "basis is not independent");
    ambient_of_[c] = v;
    coords_of_[v] = static_cast<std::int32_t>(c);
  }
}

bool F2QuadraticSpace::contains(F2Vector v) const {
  return (v.bits >> ambient_dim_) == 0 && coords_of_[v.bits] >= 0;
}

Bits F2QuadraticSpace::coords(F2Vector v) const {
  if (!contains(v)) throw Error(ErrorKind::NotInSpace, "vector " + std::to_string(v.bits) + " is not in the space");
  return static_cast<Bits>(coords_of_[v.bits]);
}

F2Vector F2QuadraticSpace::vector(Bits coords) const {
  if (coords >= size()) throw Error(ErrorKind::NotInSpace, "coordinates out of range");
  return {ambient_of_[coords]};
}

int F2QuadraticSpace::pair_coords(Bits x, Bits y) const {
  int r = 0;
  for (int i = 0; x; ++i, x >>= 1)
    if (x & 1) r ^= parity(bilinear_[static_cast<std::size_t>(i)] & y);
  return r;
}

int F2QuadraticSpace::q_coords(Bits x) const {
  int r = parity(x & qdiag_);
  for (int i = 0; i < dim(); ++i)
    if (x & bit(i)) r ^= parity(bilinear_[static_cast<std::size_t>(i)] & x & (bit(i) - 1));
  return r;
}

F2Vector reduce_vector(const lattice::AmbientVector& v) {
  Bits b = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] % 2 != 0) b |= bit(static_cast<int>(i));
  return {b};
}

F2QuadraticSpace reduce(const lattice::DelPezzoLattice& L) {
  std::vector<Bits> basis;
  std::vector<Bits> rows(L.basis.size(), 0);
  Bits qdiag = 0;
  for (std::size_t i = 0; i < L.basis.size(); ++i) {
    basis.push_back(reduce_vector(L.basis[i]).bits);
    for (std::size_t j = 0; j < L.basis.size(); ++j)
      if (L.gram[i][j] % 2 != 0) rows[i] |= bit(static_cast<int>(j));
    if ((L.gram[i][i] / 2) % 2 != 0) qdiag |= bit(static_cast<int>(i));
  }
  return F2QuadraticSpace::ambient(static_cast<int>(L.ambient_dim()), std::move(basis), std::move(rows), qdiag,
                                   L.basis);
}

F2QuadraticSpace reduce_gram(const IntMatrix& gram) {
  std::vector<Bits> rows(gram.size(), 0);
  Bits qdiag = 0;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i][i] % 2 != 0) throw Error(ErrorKind::BadInput, "gram matrix is not even");
    for (std::size_t j = 0; j < gram.size(); ++j)
      if (gram[i][j] % 2 != 0) rows[i] |= bit(static_cast<int>(j));
    if ((gram[i][i] / 2) % 2 != 0) qdiag |= bit(static_cast<int>(i));
  }
  return F2QuadraticSpace::intrinsic(std::move(rows), qdiag);
}

int eval_q(const F2QuadraticSpace& S, F2Vector v) { return S.q_coords(S.coords(v)); }

int pair(const F2QuadraticSpace& S, F2Vector v, F2Vector w) { return S.pair_coords(S.coords(v), S.coords(w)); }

std::vector<Bits> radical_coords(const F2QuadraticSpace& S) {
  std::vector<Bits> rad;
  for (Bits c = 0; c < S.size(); ++c) {
    bool in = true;
    for (Bits row : S.bilinear_rows()) in = in && parity(row & c) == 0;
    if (in) rad.push_back(c);
  }
  return rad;
}

std::vector<F2Vector> radical(const F2QuadraticSpace& S) {
  std::vector<F2Vector> out;
  for (Bits c : radical_coords(S)) out.push_back(S.vector(c));
  std::sort(out.begin(), out.end());
  return out;
}

Census value_census(const F2QuadraticSpace& S) {
  Census c;
  for (Bits x = 0; x < S.size(); ++x) (S.q_coords(x) ? c.q1 : c.q0) += 1;
  return c;
}

SymplecticBasis symplectic_basis(const F2QuadraticSpace& S) {
  if (radical_coords(S).size() != 1) throw Error(ErrorKind::DegenerateForm, "form has a nontrivial radical");
  std::vector<Bits> remaining;
  for (int i = 0; i < S.dim(); ++i) remaining.push_back(bit(i));
  SymplecticBasis B;
  while (!remaining.empty()) {
    const Bits x = remaining.front();
    auto partner = std::find_if(remaining.begin() + 1, remaining.end(), [&](Bits y) { return S.pair_coords(x, y); });
    if (partner == remaining.end()) throw Error(ErrorKind::DegenerateForm, "no hyperbolic partner");
    const Bits y = *partner;
    remaining.erase(partner);
    remaining.erase(remaining.begin());
    for (Bits& z : remaining) {
      const Bits adjust = (S.pair_coords(z, y) ? x : 0) ^ (S.pair_coords(z, x) ? y : 0);
      z ^= adjust;
    }
    B.deltas.push_back(S.vector(x));
    B.epsilons.push_back(S.vector(y));
  }
  return B;
}

bool is_symplectic_basis(const F2QuadraticSpace& S, const SymplecticBasis& B) {
  const std::size_t m = B.deltas.size();
  if (B.epsilons.size() != m || 2 * m != static_cast<std::size_t>(S.dim())) return false;
  for (const auto& v : B.deltas)
    if (!S.contains(v)) return false;
  for (const auto& v : B.epsilons)
    if (!S.contains(v)) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (pair(S, B.deltas[i], B.epsilons[j]) != (i == j ? 1 : 0)) return false;
      if (pair(S, B.deltas[i], B.deltas[j]) != 0 || pair(S, B.epsilons[i], B.epsilons[j]) != 0) return false;
    }
  // Pairing matrix is then invertible, so the 2m vectors span S.
  return true;
}

SymplecticBasis coordinate_symplectic_basis(int n) {
  SymplecticBasis B;
  for (int k = 1; 2 * k <= n; ++k) {
    const Bits below = bit(2 * k - 1) - 1;  // e_0 + ... + e_{2k-2}
    B.deltas.push_back({below | bit(2 * k - 1)});
    B.epsilons.push_back({below | bit(2 * k)});
  }
  return B;
}

int arf_of_basis(const F2QuadraticSpace& S, const SymplecticBasis& B) {
  int a = 0;
  for (std::size_t i = 0; i < B.deltas.size(); ++i) a ^= eval_q(S, B.deltas[i]) & eval_q(S, B.epsilons[i]);
  return a;
}

int arf(const F2QuadraticSpace& S) { return arf_of_basis(S, symplectic_basis(S)); }

int arf_by_majority(const F2QuadraticSpace& S) {
  if (radical_coords(S).size() != 1) throw Error(ErrorKind::DegenerateForm, "form has a nontrivial radical");
  const auto c = value_census(S);
  return c.q1 > c.q0 ? 1 : 0;
}

std::uint64_t q1_count_from_arf(int m, int arf_value) {
  const std::uint64_t half = std::uint64_t{1} << m;
  return (half / 2) * (arf_value ? half + 1 : half - 1);
}

F2Matrix transvection(const F2QuadraticSpace& S, Bits v) {
  std::vector<Bits> cols;
  for (int j = 0; j < S.dim(); ++j) cols.push_back(bit(j) ^ (S.pair_coords(bit(j), v) ? v : 0));
  return F2Matrix(S.dim(), std::move(cols));
}

F2Isometry f2_reflection(const F2QuadraticSpace& S, F2Vector v) {
  const Bits c = S.coords(v);
  if (S.q_coords(c) != 1) throw Error(ErrorKind::BadVector, "reflection needs q(v) = 1");
  return transvection(S, c);
}

std::vector<F2Isometry> orthogonal_generators(const F2QuadraticSpace& S) {
  std::vector<F2Isometry> gens;
  for (Bits c = 1; c < S.size(); ++c)
    if (S.q_coords(c) == 1) gens.push_back(transvection(S, c));
  return gens;
}

bool is_isometry(const F2QuadraticSpace& S, const F2Matrix& u) {
  if (u.dim() != S.dim() || !u.is_invertible()) return false;
  const auto& cols = u.columns();
  for (int i = 0; i < S.dim(); ++i) {
    if (S.q_coords(cols[static_cast<std::size_t>(i)]) != S.q_coords(bit(i))) return false;
    for (int j = 0; j < i; ++j)
      if (S.pair_coords(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) !=
          S.pair_coords(bit(i), bit(j)))
        return false;
  }
  return true;
}

bool preserves_q_exhaustive(const F2QuadraticSpace& S, const F2Matrix& u) {
  if (u.dim() != S.dim()) return false;
  for (Bits x = 0; x < S.size(); ++x)
    if (S.q_coords(u.apply(x)) != S.q_coords(x)) return false;
  return true;
}

std::uint64_t count_isometries_brute_force(const F2QuadraticSpace& S) {
  const int d = S.dim();
  const std::size_t size = S.size();
  std::vector<Bits> images(static_cast<std::size_t>(d));
  // span[level] marks the span of images[0..level-1].
  std::vector<std::vector<char>> span(static_cast<std::size_t>(d) + 1, std::vector<char>(size, 0));
  span[0][0] = 1;
  std::uint64_t count = 0;
  std::function<void(int)> step = [&](int level) {
    if (level == d) {
      ++count;
      return;
    }
    const auto& here = span[static_cast<std::size_t>(level)];
    for (Bits c = 1; c < size; ++c) {
      if (here[c] || S.q_coords(c) != S.q_coords(bit(level))) continue;
      bool ok = true;
      for (int j = 0; j < level && ok; ++j)
        ok = S.pair_coords(c, images[static_cast<std::size_t>(j)]) == S.pair_coords(bit(level), bit(j));
      if (!ok) continue;
      images[static_cast<std::size_t>(level)] = c;
      auto& next = span[static_cast<std::size_t>(level) + 1];
      next = here;
      for (Bits x = 0; x < size; ++x)
        if (here[x]) next[x ^ c] = 1;
      step(level + 1);
    }
  };
  step(0);
  return count;
}

std::vector<Bits> nonzero_points(int dim) {
  std::vector<Bits> points;
  for (Bits c = 1; c < bit(dim); ++c) points.push_back(c);
  return points;
}

groups::PermGroup matrix_group(int dim, const std::vector<F2Matrix>& generators) {
  return groups::perm_from_action(generators, nonzero_points(dim),
                                  [](const F2Matrix& m, Bits x) { return m.apply(x); });
}

SingularityReport exception_check_n4(const F2QuadraticSpace& S) {
  if (S.model() != Model::Ambient || S.ambient_dim() != 5 || S.dim() != 4)
    throw Error(ErrorKind::WrongShape, "exception check applies to the rank-4 ambient space");
  SingularityReport r;
  for (Bits c = 1; c < S.size(); ++c)
    if (S.q_coords(c) == 0) r.singular.push_back(S.vector(c));
  std::sort(r.singular.begin(), r.singular.end());
  const Bits k = 0b11111;
  r.expected.push_back({k ^ 1});
  for (int i = 1; i <= 4; ++i) r.expected.push_back({1u | bit(i)});
  std::sort(r.expected.begin(), r.expected.end());
  r.matches_expected = r.singular == r.expected;
  r.all_pairings_one = true;
  for (std::size_t i = 0; i < r.singular.size(); ++i)
    for (std::size_t j = i + 1; j < r.singular.size(); ++j)
      r.all_pairings_one = r.all_pairings_one && pair(S, r.singular[i], r.singular[j]) == 1;
  std::uint64_t pairs = 0;
  for (Bits x = 1; x < S.size(); ++x)
    for (Bits y = x + 1; y < S.size(); ++y)
      if (S.q_coords(x) == 0 && S.q_coords(y) == 0 && S.q_coords(x ^ y) == 0) ++pairs;
  r.singular_planes = pairs / 3;
  r.pass = r.matches_expected && r.all_pairings_one && r.singular_planes == 0 && r.singular.size() == 5;
  return r;
}

Bits RadicalSplit::project(Bits coords) const {
  if (coords & bit(index)) coords ^= k_coords;
  return drop_bit(coords, index);
}

Bits RadicalSplit::embed(Bits h_coords) const { return insert_zero_bit(h_coords, index); }

SpModel sp_model(const F2QuadraticSpace& S) {
  RadicalSplit split = split_along_radical(S, 1);
  F2QuadraticSpace H = restrict_to_complement(S, split.index);
  return SpModel(S, split, std::move(H));
}

std::vector<F2Vector> SpModel::hyperplane_basis() const {
  std::vector<F2Vector> out;
  for (int t = 0; t < hyperplane_.dim(); ++t) out.push_back(space_.vector(split_.embed(bit(t))));
  return out;
}

F2Matrix SpModel::forward(const F2Isometry& u) const {
  std::vector<Bits> cols;
  for (int t = 0; t < hyperplane_.dim(); ++t) cols.push_back(split_.project(u.apply(split_.embed(bit(t)))));
  return F2Matrix(hyperplane_.dim(), std::move(cols));
}

F2Matrix SpModel::transvection(Bits h_coords) const { return f2::transvection(hyperplane_, h_coords); }

F2Isometry SpModel::inverse_transvection(Bits h_coords) const {
  Bits v = split_.embed(h_coords);
  if (space_.q_coords(v) == 0) v ^= split_.k_coords;
  return f2_reflection(space_, space_.vector(v));
}

std::vector<F2Matrix> SpModel::transvection_generators() const {
  std::vector<F2Matrix> gens;
  for (Bits h = 1; h < hyperplane_.size(); ++h) gens.push_back(transvection(h));
  return gens;
}

QuotientModel quotient_by_radical(const F2QuadraticSpace& S) {
  RadicalSplit split = split_along_radical(S, 0);
  F2QuadraticSpace quotient = restrict_to_complement(S, split.index);
  std::vector<F2Vector> section;
  if (S.model() == Model::Ambient && S.ambient_dim() == 6) {
    for (int b = 1; b < 5; ++b) {
      const F2Vector v{1u | bit(b)};
      S.coords(v);  // throws NotInSpace
      section.push_back(v);
    }
  }
  return QuotientModel(S, split, std::move(quotient), std::move(section));
}

F2Isometry QuotientModel::project_isometry(const F2Isometry& u) const {
  std::vector<Bits> cols;
  for (int t = 0; t < quotient_.dim(); ++t) cols.push_back(split_.project(u.apply(split_.embed(bit(t)))));
  return F2Matrix(quotient_.dim(), std::move(cols));
}

std::vector<F2Isometry> QuotientModel::kernel_maps() const {
  std::vector<F2Isometry> maps;
  for (Bits l = 0; l < space_.size(); ++l) {
    if (parity(l & split_.k_coords)) continue;
    std::vector<Bits> cols;
    for (int j = 0; j < space_.dim(); ++j) cols.push_back(bit(j) ^ ((l & bit(j)) ? split_.k_coords : 0));
    maps.emplace_back(space_.dim(), std::move(cols));
  }
  return maps;
}

bool QuotientModel::section_is_isomorphism() const {
  if (section_.empty()) return false;
  std::vector<Bits> gens;
  for (const auto& v : section_) gens.push_back(space_.coords(v));
  std::vector<char> hit(quotient_.size(), 0);
  for (Bits s = 0; s < (Bits{1} << gens.size()); ++s) {
    Bits x = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (s & bit(static_cast<int>(i))) x ^= gens[i];
    const Bits image = quotient_map(x);
    if (hit[image]) return false;
    hit[image] = 1;
    if (quotient_.q_coords(image) != space_.q_coords(x)) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

}  // namespace delpezzo::f2
