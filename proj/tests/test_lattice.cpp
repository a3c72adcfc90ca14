#include <doctest.h>

#include <random>
#include <set>

#include "delpezzo/error.hpp"
#include "delpezzo/groups.hpp"
#include "delpezzo/lattice.hpp"
#include "oracles.hpp"

using namespace delpezzo;
using namespace delpezzo::lattice;

namespace {

std::vector<oracle::Vec> coords_of(const std::vector<Root>& roots) {
  std::vector<oracle::Vec> out;
  for (const auto& r : roots) out.push_back(r.coords);
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::BadInput;
}

groups::PermGroup group_on_roots(const DelPezzoLattice& L, const std::vector<Root>& roots,
                                 const std::vector<LatticeIsometry>& gens) {
  return groups::perm_from_action(gens, roots,
                                  [&](const LatticeIsometry& u, const Root& r) { return apply(L, u, r); });
}

}  // namespace

TEST_CASE("discriminant and invariants") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto L = build_del_pezzo(n);
    CHECK(L.rank() == n);
    CHECK(std::abs(intmat::determinant(L.gram)) == 9 - n);
    CHECK_NOTHROW(check_invariants(L));
    for (const auto& b : L.basis) {
      CHECK(inner_product(b, L.K) == 0);
      CHECK(inner_product(b, b) % 2 == 0);  // even
    }
  }
  CHECK(inner_product(build_del_pezzo(8).K, build_del_pezzo(8).K) == -1);
  CHECK(kind_of([] { build_del_pezzo(2); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { build_del_pezzo(9); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { inner_product(unit(3, 0), unit(4, 0)); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("K squared is n - 9") {
  for (int n = 3; n <= 8; ++n) CHECK(inner_product(build_del_pezzo(n).K, build_del_pezzo(n).K) == n - 9);
}

TEST_CASE("type names") {
  for (int n = 3; n <= 8; ++n) CHECK(build_del_pezzo(n).type_name() == oracle::types()[n - 3]);
  CHECK(build_plain_root_lattice(8).type_name() == "A8");
}

TEST_CASE("coordinates round trip") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int n = 3; n <= 8; ++n) {
    const auto L = build_del_pezzo(n);
    for (int t = 0; t < 50; ++t) {
      IntVector c(n);
      for (auto& x : c) x = d(rng);
      const auto v = L.from_coordinates(c);
      CHECK(L.contains(v));
      CHECK(L.coordinates(v) == c);
    }
    CHECK_FALSE(L.contains(unit(n + 1, 1)));
    CHECK_FALSE(L.coordinates(unit(n + 1, 0)).has_value());
  }
}

TEST_CASE("roots agree with a box search and with reflection closure") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto L = build_del_pezzo(n);
    const auto roots = coords_of(enumerate_roots(L));
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    if (n <= 6) CHECK(roots == oracle::roots_in_box(n, 4));
    CHECK(roots == oracle::reflection_closure(oracle::seed_roots(n)));
    const std::int64_t bound = leading_coordinate_bound(L);
    for (const auto& r : roots) CHECK(std::abs(r[0]) <= bound);
  }
}

TEST_CASE("plain A_n roots") {
  for (int rank = 2; rank <= 10; ++rank) {
    const auto L = build_plain_root_lattice(rank);
    CHECK(enumerate_roots(L).size() == static_cast<std::size_t>(rank * (rank + 1)));
    CHECK(std::abs(intmat::determinant(L.gram)) == rank + 1);
  }
  CHECK(kind_of([] { build_plain_root_lattice(11); }) == ErrorKind::OutOfRange);
}

TEST_CASE("reflections") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto L = build_del_pezzo(n);
    const auto roots = enumerate_roots(L);
    const std::set<Root> root_set(roots.begin(), roots.end());
    for (std::size_t i = 0; i < roots.size(); i += 7) {
      const auto s = root_reflection(L, roots[i]);
      CHECK(preserves_gram(L, s));
      CHECK(compose(s, s) == identity_isometry(L));
      CHECK(apply(L, s, roots[i]) == -roots[i]);
      for (std::size_t j = 0; j < roots.size(); j += 5) {
        const auto image = apply(L, s, roots[j]);
        CHECK(root_set.count(image) == 1);
        // matches the ambient formula directly
        CHECK(image == roots[j] - inner_product(roots[j], roots[i]) * roots[i]);
      }
    }
    CHECK(kind_of([&] { root_reflection(L, L.basis[0] + L.basis[0]); }) == ErrorKind::NotARoot);
  }
}

TEST_CASE("ambient extension") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto L = build_del_pezzo(n);
    for (const auto& s : weyl_generators(L)) {
      const auto M = to_ambient(L, s);
      REQUIRE(M.has_value());
      CHECK(intmat::multiply(*M, L.K.coords) == L.K.coords);
      CHECK(from_ambient(L, *M) == s);
    }
    // -1 need not extend integrally (it does not for n = 6); when it does, the
    // restriction must give it back
    if (auto M = to_ambient(L, negation_isometry(L))) CHECK(from_ambient(L, *M) == negation_isometry(L));
    IntMatrix swap01 = intmat::identity(n + 1);
    std::swap(swap01[0], swap01[1]);
    CHECK(kind_of([&] { from_ambient(L, swap01); }) == ErrorKind::NotIsometry);
  }
}

TEST_CASE("Weyl group order and -1") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto L = build_del_pezzo(n);
    const auto roots = enumerate_roots(L);
    const auto W = group_on_roots(L, roots, weyl_generators(L));
    CHECK(W.order() == oracle::weyl_order(L.type_name()));
    const auto minus = groups::induced_permutation(negation_isometry(L), roots,
                                                   [&](const LatticeIsometry& u, const Root& r) { return apply(L, u, r); });
    CHECK(W.contains(minus) == (n >= 7));
    CHECK(simple_roots(L).size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("simple reflections generate all root reflections") {
  for (int n = 3; n <= 6; ++n) {
    const auto L = build_del_pezzo(n);
    const auto roots = enumerate_roots(L);
    std::vector<LatticeIsometry> all;
    for (const auto& r : roots) all.push_back(root_reflection(L, r));
    CHECK(group_on_roots(L, roots, all).order() == group_on_roots(L, roots, weyl_generators(L)).order());
  }
}

TEST_CASE("O(L) generators preserve the Gram matrix and permute the roots") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto L = build_del_pezzo(n);
    const auto roots = enumerate_roots(L);
    const auto gens = automorphism_group(L);
    for (const auto& u : gens) CHECK(preserves_gram(L, u));
    const auto G = group_on_roots(L, roots, gens);
    CHECK(G.order() == oracle::weyl_order(L.type_name()) * oracle::dynkin_symmetries(L.type_name()));
  }
}

TEST_CASE("exhaustive isometry count matches the stabilizer chain") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto L = build_del_pezzo(n);
    const auto roots = enumerate_roots(L);
    std::uint64_t bad = 0;
    std::set<groups::Permutation, decltype([](const auto& a, const auto& b) { return a.images() < b.images(); })>
        perms;
    const auto count = for_each_isometry(L, [&](const LatticeIsometry& u) {
      if (!preserves_gram(L, u)) ++bad;
      if (n <= 5)
        perms.insert(groups::induced_permutation(u, roots, [&](const LatticeIsometry& g, const Root& r) {
          return apply(L, g, r);
        }));
      return true;
    });
    CHECK(bad == 0);
    CHECK(groups::Order(count) == group_on_roots(L, roots, automorphism_group(L)).order());
    // the action on roots is faithful: distinct isometries, distinct permutations
    if (n <= 5) CHECK(perms.size() == count);
  }
}

TEST_CASE("isometry from simple root images") {
  const auto L = build_del_pezzo(6);
  const auto simple = simple_roots(L);
  CHECK(isometry_from_simple_images(L, simple) == identity_isometry(L));
  std::vector<Root> neg;
  for (const auto& r : simple) neg.push_back(-r);
  CHECK(isometry_from_simple_images(L, neg) == negation_isometry(L));
  auto broken = simple;
  std::swap(broken[0], broken[1]);
  if (inner_product(simple[0], simple[2]) != inner_product(simple[1], simple[2]))
    CHECK(kind_of([&] { isometry_from_simple_images(L, broken); }) == ErrorKind::NotIsometry);
}
