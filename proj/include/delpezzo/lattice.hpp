#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/int_matrix.hpp"

namespace delpezzo::lattice {

/// Integer coordinates on the ambient basis E0..En.
struct AmbientVector {
  IntVector coords;

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  auto operator<=>(const AmbientVector&) const = default;
  bool operator==(const AmbientVector&) const = default;
};

AmbientVector operator+(const AmbientVector& a, const AmbientVector& b);
AmbientVector operator-(const AmbientVector& a, const AmbientVector& b);
AmbientVector operator-(const AmbientVector& a);
AmbientVector operator*(std::int64_t s, const AmbientVector& a);

/// Unit vector E_index in an ambient space of the given dimension.
AmbientVector unit(std::size_t dim, std::size_t index);

enum class LatticeKind { DelPezzo, PlainA };

/// L = K^perp inside Z^{n+1} with a diagonal +-1 metric.
///
/// DelPezzo: metric diag(-1, 1, ..., 1), K = 3E0 - (E1 + ... + En), 3 <= n <= 8.
/// PlainA:   metric diag(1, ..., 1),     K = E0 + ... + En,          2 <= n <= 10.
///
/// In both cases L has rank n; `basis` holds n ambient vectors in canonical
/// HNF order and `gram` is their Gram matrix.
struct DelPezzoLattice {
  LatticeKind kind = LatticeKind::DelPezzo;
  int n = 0;
  std::vector<int> metric;
  AmbientVector K;
  std::vector<AmbientVector> basis;
  IntMatrix gram;

  int rank() const { return n; }
  std::size_t ambient_dim() const { return metric.size(); }
  /// Expected |det gram|: 9 - n for del Pezzo lattices, n + 1 for A_n.
  std::int64_t expected_discriminant() const;
  /// Root system name, e.g. "A1xA2", "E8", "A8".
  std::string type_name() const;

  std::int64_t inner(const AmbientVector& v, const AmbientVector& w) const;
  bool contains(const AmbientVector& v) const;
  /// Coordinates of v in `basis`; nullopt if v is not in L.
  std::optional<IntVector> coordinates(const AmbientVector& v) const;
  AmbientVector from_coordinates(const IntVector& c) const;

};

/// Lorentzian form <v,w> = -v0 w0 + sum_{i>=1} vi wi. Throws LengthMismatch.
std::int64_t inner_product(const AmbientVector& v, const AmbientVector& w);

DelPezzoLattice build_del_pezzo(int n);
DelPezzoLattice build_plain_root_lattice(int rank);

/// Throws WrongShape describing the first violated lattice invariant.
void check_invariants(const DelPezzoLattice& L);

using Root = AmbientVector;

/// All v with <v,v> = 2 and <v,K> = 0, sorted lexicographically.
std::vector<Root> enumerate_roots(const DelPezzoLattice& L);
bool is_root(const DelPezzoLattice& L, const AmbientVector& v);

/// Upper bound for |v0| over roots of a del Pezzo lattice (0 for A_n, where
/// there is no negative coordinate).
std::int64_t leading_coordinate_bound(const DelPezzoLattice& L);

/// Isometry of L stored as an n x n integer matrix on the L-basis; column j
/// holds the coordinates of u(b_j).
struct LatticeIsometry {
  IntMatrix matrix;

  bool operator==(const LatticeIsometry&) const = default;
};

LatticeIsometry identity_isometry(const DelPezzoLattice& L);
LatticeIsometry negation_isometry(const DelPezzoLattice& L);
LatticeIsometry compose(const LatticeIsometry& outer, const LatticeIsometry& inner);
AmbientVector apply(const DelPezzoLattice& L, const LatticeIsometry& u, const AmbientVector& v);
bool preserves_gram(const DelPezzoLattice& L, const LatticeIsometry& u);

/// Extension of u to the ambient lattice fixing K, when it is integral.
std::optional<IntMatrix> to_ambient(const DelPezzoLattice& L, const LatticeIsometry& u);
/// Restriction of an ambient integer matrix that fixes K and preserves the
/// metric. Throws NotIsometry otherwise.
LatticeIsometry from_ambient(const DelPezzoLattice& L, const IntMatrix& ambient);

/// s_alpha(x) = x - <x,alpha> alpha. Throws NotARoot.
LatticeIsometry root_reflection(const DelPezzoLattice& L, const Root& alpha);

/// Generic functional used to split roots into positive and negative:
/// f(v) = sum_i 10^(d-1-i) v_i. Root coordinates are bounded by 4 in absolute
/// value, so f never vanishes on a root and its sign is the sign of the first
/// nonzero coordinate.
std::int64_t height_functional(const AmbientVector& v);

/// Positive roots that are not a sum of two positive roots, in root order.
std::vector<Root> simple_roots(const DelPezzoLattice& L);

/// Reflections in the simple roots.
std::vector<LatticeIsometry> weyl_generators(const DelPezzoLattice& L);

/// Non-identity isometries permuting the simple roots (Dynkin diagram
/// automorphisms), found by backtracking.
std::vector<LatticeIsometry> diagram_automorphisms(const DelPezzoLattice& L);

/// Generators of O(L): the Weyl generators, the diagram automorphisms, and -1.
/// Since L is spanned by its simple roots, O(L) = W x| Aut(Dynkin).
std::vector<LatticeIsometry> automorphism_group(const DelPezzoLattice& L);

/// Exhaustive backtracking over images of the simple roots in the full root
/// set. Calls `visit` on every isometry of L; stops early when it returns
/// false. Returns the number of isometries visited. Practical for n <= 7.
std::uint64_t for_each_isometry(const DelPezzoLattice& L,
                                const std::function<bool(const LatticeIsometry&)>& visit);

/// Isometry sending simple_roots(L)[i] to images[i] (given in ambient
/// coordinates). Throws NotIsometry if the images do not preserve the Gram
/// values.
LatticeIsometry isometry_from_simple_images(const DelPezzoLattice& L, const std::vector<Root>& images);

}  // namespace delpezzo::lattice
