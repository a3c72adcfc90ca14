#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "delpezzo/groups.hpp"
#include "delpezzo/lattice.hpp"

namespace delpezzo::f2 {

/// Bit mask; bit i is the coefficient of the i-th basis vector.
using Bits = std::uint32_t;

inline int parity(Bits x) { return __builtin_parity(x); }
inline int popcount(Bits x) { return __builtin_popcount(x); }

/// Vector of a quadratic space, given by its mask in the space's ambient
/// F2^N (for lattice reductions: bits over the images e0..en of E0..En).
struct F2Vector {
  Bits bits = 0;

  auto operator<=>(const F2Vector&) const = default;
};

inline F2Vector operator+(F2Vector a, F2Vector b) { return {a.bits ^ b.bits}; }

/// Linear map on basis coordinates; column j is the image of basis vector j.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int dim, std::vector<Bits> columns);

  static F2Matrix identity(int dim);

  int dim() const { return dim_; }
  const std::vector<Bits>& columns() const { return columns_; }
  Bits apply(Bits coords) const;
  bool is_identity() const;
  bool is_invertible() const;

  /// (a * b)(x) = a(b(x)).
  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
  bool operator==(const F2Matrix&) const = default;

 private:
  int dim_ = 0;
  std::vector<Bits> columns_;
};

/// Element of O(S) (or, inside an SpModel, of Sp(H)); a matrix on basis
/// coordinates.
using F2Isometry = F2Matrix;

enum class Model { Ambient, Intrinsic };

/// Quadratic space over F2 given on a basis b_0..b_{dim-1}: the Gram matrix
/// (b_i|b_j) of the alternating form and the values q(b_i). q extends by
/// q(x+y) = q(x) + q(y) + (x|y).
///
/// Ambient model: the basis vectors are masks in F2^N (N = ambient_dim) and
/// carry integer lifts. Intrinsic model: N = dim and the basis is the unit
/// vectors.
class F2QuadraticSpace {
 public:
  static F2QuadraticSpace intrinsic(std::vector<Bits> bilinear_rows, Bits qdiag);
  static F2QuadraticSpace ambient(int ambient_dim, std::vector<Bits> basis, std::vector<Bits> bilinear_rows,
                                  Bits qdiag, std::vector<lattice::AmbientVector> lifts);

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return ambient_dim_; }
  Model model() const { return model_; }
  std::size_t size() const { return std::size_t{1} << dim(); }

  const std::vector<Bits>& basis() const { return basis_; }
  const std::vector<Bits>& bilinear_rows() const { return bilinear_; }
  Bits qdiag() const { return qdiag_; }
  const std::vector<lattice::AmbientVector>& lifts() const { return lifts_; }

  bool contains(F2Vector v) const;
  /// Throws NotInSpace.
  Bits coords(F2Vector v) const;
  F2Vector vector(Bits coords) const;

  int pair_coords(Bits x, Bits y) const;
  int q_coords(Bits x) const;

 private:
  F2QuadraticSpace() = default;
  void index();

  Model model_ = Model::Intrinsic;
  int ambient_dim_ = 0;
  std::vector<Bits> basis_;
  std::vector<Bits> bilinear_;
  Bits qdiag_ = 0;
  std::vector<lattice::AmbientVector> lifts_;
  std::vector<std::int32_t> coords_of_;  // ambient mask -> coords, -1 outside
  std::vector<Bits> ambient_of_;         // coords -> ambient mask
};

/// L/2L in the ambient model: basis = L-basis mod 2, form = Gram mod 2,
/// q(b_i) = gram_ii / 2 mod 2.
F2QuadraticSpace reduce(const lattice::DelPezzoLattice& L);
/// Intrinsic space of an even integral Gram matrix.
F2QuadraticSpace reduce_gram(const IntMatrix& gram);

/// Parity mask of an ambient integer vector.
F2Vector reduce_vector(const lattice::AmbientVector& v);

/// Throws NotInSpace.
int eval_q(const F2QuadraticSpace& S, F2Vector v);
int pair(const F2QuadraticSpace& S, F2Vector v, F2Vector w);

/// All v with (v|x) = 0 for every x, including 0, ascending by mask.
std::vector<F2Vector> radical(const F2QuadraticSpace& S);
/// Radical as a subspace, in coordinates.
std::vector<Bits> radical_coords(const F2QuadraticSpace& S);

struct Census {
  std::uint64_t q0 = 0;
  std::uint64_t q1 = 0;

  bool operator==(const Census&) const = default;
};

Census value_census(const F2QuadraticSpace& S);

struct SymplecticBasis {
  std::vector<F2Vector> deltas;
  std::vector<F2Vector> epsilons;
};

/// Greedy hyperbolic-pair extraction in basis order. Throws DegenerateForm.
SymplecticBasis symplectic_basis(const F2QuadraticSpace& S);
bool is_symplectic_basis(const F2QuadraticSpace& S, const SymplecticBasis& B);

/// delta_k = e_0 + ... + e_{2k-1}, eps_k = e_0 + ... + e_{2k-2} + e_{2k}
/// for k = 1..n/2, as ambient masks.
SymplecticBasis coordinate_symplectic_basis(int n);

/// sum q(delta_i) q(eps_i) over a symplectic basis. Throws DegenerateForm.
int arf(const F2QuadraticSpace& S);
int arf_of_basis(const F2QuadraticSpace& S, const SymplecticBasis& B);
/// The value q takes on more than half of the vectors. Throws DegenerateForm.
int arf_by_majority(const F2QuadraticSpace& S);
/// 2^{m-1} (2^m - (-1)^arf).
std::uint64_t q1_count_from_arf(int m, int arf_value);

/// r_v(x) = x + (x|v) v. Throws BadVector unless q(v) = 1.
F2Isometry f2_reflection(const F2QuadraticSpace& S, F2Vector v);
/// x -> x + (x|v) v with no condition on q(v).
F2Matrix transvection(const F2QuadraticSpace& S, Bits v_coords);

/// {r_v : q(v) = 1}, ascending by coordinates of v.
std::vector<F2Isometry> orthogonal_generators(const F2QuadraticSpace& S);

/// Checks the form and q on the basis (enough by polarization) and invertibility.
bool is_isometry(const F2QuadraticSpace& S, const F2Matrix& u);
/// Checks q(u x) = q(x) on every vector.
bool preserves_q_exhaustive(const F2QuadraticSpace& S, const F2Matrix& u);

/// Counts O(S) by backtracking over basis images. Cost grows like |O(S)|;
/// meant for dim <= 7.
std::uint64_t count_isometries_brute_force(const F2QuadraticSpace& S);

/// Nonzero coordinate vectors 1..2^dim - 1, the point set for matrix groups.
std::vector<Bits> nonzero_points(int dim);
groups::PermGroup matrix_group(int dim, const std::vector<F2Matrix>& generators);

struct SingularityReport {
  std::vector<F2Vector> singular;   // nonzero v with q(v) = 0
  std::vector<F2Vector> expected;   // k + e0, e0 + e1, ..., e0 + e4
  bool matches_expected = false;
  bool all_pairings_one = false;
  std::uint64_t singular_planes = 0;  // 2-dim subspaces on which q vanishes
  bool pass = false;
};

/// Rules out the exceptional case for n = 4: no totally singular plane.
SingularityReport exception_check_n4(const F2QuadraticSpace& S);

/// Splitting S = H + F2 k along the radical vector k: H is spanned by every
/// basis vector except b_j, where j is the lowest coordinate of k equal to 1.
/// The projection x -> x + x_j k lands in H and doubles as the quotient map
/// S -> S/<k>.
struct RadicalSplit {
  F2Vector k;
  Bits k_coords = 0;
  int index = 0;

  Bits project(Bits coords) const;       // coords in H (dim - 1 bits)
  Bits embed(Bits h_coords) const;       // H coords -> S coords
};

/// Model of O(S) as Sp(H) when the radical is {0, k} with q(k) = 1.
class SpModel {
 public:
  const F2QuadraticSpace& space() const { return space_; }
  const RadicalSplit& split() const { return split_; }
  /// H with the restricted form and q, intrinsic model.
  const F2QuadraticSpace& hyperplane() const { return hyperplane_; }
  std::vector<F2Vector> hyperplane_basis() const;

  /// u -> p_H o u|_H.
  F2Matrix forward(const F2Isometry& u) const;
  /// Transvection of H at v (H coordinates).
  F2Matrix transvection(Bits h_coords) const;
  /// Reflection of S at v + (1 + q(v)) k.
  F2Isometry inverse_transvection(Bits h_coords) const;
  /// Transvections at every nonzero vector of H.
  std::vector<F2Matrix> transvection_generators() const;

 private:
  friend SpModel sp_model(const F2QuadraticSpace& S);
  SpModel(F2QuadraticSpace space, RadicalSplit split, F2QuadraticSpace hyperplane)
      : space_(std::move(space)), split_(split), hyperplane_(std::move(hyperplane)) {}
  F2QuadraticSpace space_;
  RadicalSplit split_;
  F2QuadraticSpace hyperplane_;
};

/// Throws WrongShape unless the radical is {0, k} with q(k) = 1.
SpModel sp_model(const F2QuadraticSpace& S);

/// S/<k> when the radical is {0, k} with q(k) = 0.
class QuotientModel {
 public:
  const F2QuadraticSpace& space() const { return space_; }
  const RadicalSplit& split() const { return split_; }
  /// S/<k> with the descended form, intrinsic model.
  const F2QuadraticSpace& quotient() const { return quotient_; }
  /// Span of e_a + e_b for a < b < 5 (ambient del Pezzo spaces of rank 5 only).
  const std::vector<F2Vector>& section() const { return section_; }

  Bits quotient_map(Bits coords) const { return split_.project(coords); }
  /// Isometry of the quotient induced by u.
  F2Isometry project_isometry(const F2Isometry& u) const;
  /// x -> x + l(x) k for every functional l with l(k) = 0 (identity included).
  std::vector<F2Isometry> kernel_maps() const;
  /// The quotient map restricted to the section is bijective and carries q
  /// to the descended form.
  bool section_is_isomorphism() const;

 private:
  friend QuotientModel quotient_by_radical(const F2QuadraticSpace& S);
  QuotientModel(F2QuadraticSpace space, RadicalSplit split, F2QuadraticSpace quotient,
                std::vector<F2Vector> section)
      : space_(std::move(space)), split_(split), quotient_(std::move(quotient)), section_(std::move(section)) {}
  F2QuadraticSpace space_;
  RadicalSplit split_;
  F2QuadraticSpace quotient_;
  std::vector<F2Vector> section_;
};

/// Throws WrongShape unless the radical is {0, k} with q(k) = 0.
QuotientModel quotient_by_radical(const F2QuadraticSpace& S);

}  // namespace delpezzo::f2
