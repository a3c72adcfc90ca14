#pragma once

#include <map>
#include <string>
#include <vector>

#include "delpezzo/f2.hpp"
#include "delpezzo/groups.hpp"
#include "delpezzo/lattice.hpp"

namespace delpezzo::bridge {

using lattice::DelPezzoLattice;
using lattice::LatticeIsometry;
using lattice::Root;

/// Reduction mod 2 of a root. Throws NotARoot.
f2::F2Vector phi(const DelPezzoLattice& L, const Root& alpha);

/// Explicit root with phi(alpha) = v, by the support I of v (m = #I):
///   0 not in I, m = 2:        E_i - E_j (i < j)
///   0 not in I, m = 6:        2E_0 - E_I
///   0 in I,     m = 4:        2E_0 - E_I
///   0 in I,     m = 8, n = 8: 4E_0 - E_I - 2E_l, l the index missing from I
/// Throws NoPreimage for n = 7 and v = k (every coordinate of a lift would be
/// odd, so its square is 6 mod 8), BadInput if v is not in L_2 or q(v) != 1.
Root phi_inverse(const DelPezzoLattice& L, f2::F2Vector v);

/// Matrix of u on the L-basis mod 2, acting on reduce(L). Throws NotIsometry.
f2::F2Isometry rho(const DelPezzoLattice& L, const LatticeIsometry& u);

/// Everything the verifications share for one lattice: roots, the reduction,
/// generator sets, and the permutation groups they generate (W and O(L) on
/// the roots, O(L_2) on the nonzero vectors of L_2).
struct Analysis {
  DelPezzoLattice lattice;
  std::vector<Root> roots;
  f2::F2QuadraticSpace space;
  f2::Census census;
  std::vector<LatticeIsometry> weyl_generators;
  std::vector<LatticeIsometry> automorphism_generators;
  std::vector<f2::F2Isometry> orthogonal_generators;
  groups::PermGroup weyl;
  groups::PermGroup automorphisms;
  groups::PermGroup orthogonal;

  groups::Permutation root_permutation(const LatticeIsometry& u) const;
  /// Order of the group generated by rho(generators).
  groups::Order rho_image_order(const std::vector<LatticeIsometry>& generators) const;
};

Analysis analyze(const DelPezzoLattice& L);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const Check&) const = default;
};

struct VerificationReport {
  std::string statement;  // lemma1a | lemma1b | prop1 | prop2 | corollary | remark1 | remark2
  int n = 0;
  std::string lattice;    // root system type, e.g. "E7"
  bool pass = true;
  std::map<std::string, groups::Order> numbers;
  std::vector<Check> witnesses;

  /// Records a sub-check; pass stays true only while every check passes.
  void check(std::string name, bool ok, std::string detail = {});
  bool operator==(const VerificationReport&) const = default;
};

/// Lemma part 1: phi(a) = phi(b) only for b = +-a, over all root pairs.
VerificationReport verify_lemma_roots(const Analysis& A);
/// Lemma part 2: the kernel of rho on O(L) is {+-1}, by order counting, plus
/// full enumeration of O(L) for n <= 4. For n = 3 the kernel has order 4.
VerificationReport verify_lemma_isometries(const Analysis& A);
/// Both parts, in order.
std::vector<VerificationReport> verify_lemma(const Analysis& A);

VerificationReport verify_prop1(const Analysis& A);
/// n >= 4, otherwise WrongRange.
VerificationReport verify_prop2(const Analysis& A);
/// 4 <= n <= 8, otherwise WrongRange.
VerificationReport verify_corollary(const Analysis& A);
/// n = 3 only, otherwise OutOfRange.
VerificationReport verify_remark1(const Analysis& A);
/// Plain A_rank for rank in [5, 10], otherwise OutOfRange.
VerificationReport verify_remark2(int rank);

/// Every statement that applies to del Pezzo lattice n, in a fixed order.
std::vector<VerificationReport> verify_all(int n);

struct SummaryRow {
  int n = 0;
  std::string type;
  std::size_t roots = 0;
  std::uint64_t q1 = 0;
  std::uint64_t q0 = 0;
  int radical_dim = 0;
  int arf = -1;  // -1 when the form is degenerate
  groups::Order weyl_order;
  groups::Order autL_order;
  groups::Order oL2_order;
  groups::Order rho_image_order;
};

SummaryRow summarize(const Analysis& A);

}  // namespace delpezzo::bridge
