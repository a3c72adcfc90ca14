#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "delpezzo/groups.hpp"
#include "oracles.hpp"

using namespace delpezzo;
using namespace delpezzo::groups;

namespace {

Permutation random_perm(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

Permutation cycle(std::size_t degree, std::vector<Point> pts) {
  std::vector<Point> p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(p);
}

std::vector<std::vector<Point>> images(const std::vector<Permutation>& gens) {
  std::vector<std::vector<Point>> out;
  for (const auto& g : gens) out.push_back(g.images());
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto a = cycle(5, {0, 1, 2});
  const auto b = cycle(5, {2, 3});
  CHECK((a * b)(2) == a(b(2)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.first_moved_point() == 0);
  CHECK(Permutation::identity(4).first_moved_point() == 4);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  try {
    (void)(a * Permutation::identity(3));
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
}

TEST_CASE("trivial and symmetric groups") {
  CHECK(PermGroup(6, {}).order() == 1);
  CHECK(PermGroup(6, {Permutation::identity(6)}).order() == 1);
  for (std::size_t d = 2; d <= 12; ++d) {
    std::vector<Point> all(d);
    std::iota(all.begin(), all.end(), 0);
    const PermGroup S(d, {cycle(d, {0, 1}), cycle(d, all)});
    CHECK(S.order() == oracle::factorial(static_cast<unsigned>(d)));
  }
  // alternating group from 3-cycles
  std::vector<Permutation> three;
  for (Point i = 0; i + 2 < 9; ++i) three.push_back(cycle(9, {i, i + 1, i + 2}));
  CHECK(PermGroup(9, three).order() == oracle::factorial(9) / 2);
}

TEST_CASE("order agrees with element enumeration on random small groups") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t degree = 4 + trial % 4;
    std::vector<Permutation> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) gens.push_back(random_perm(degree, rng));
    const PermGroup G(degree, gens);
    CHECK(G.order() == oracle::closure_order(images(gens), degree));
    CHECK(oracle::factorial(static_cast<unsigned>(degree)) % G.order() == 0);
  }
}

TEST_CASE("order does not depend on generator order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Permutation> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_perm(14, rng));
    const Order o = PermGroup(14, gens).order();
    auto rev = gens;
    std::reverse(rev.begin(), rev.end());
    CHECK(PermGroup(14, rev).order() == o);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens[0] * gens[1]);
    CHECK(PermGroup(14, gens).order() == o);
  }
}

TEST_CASE("membership") {
  std::mt19937_64 rng(99);
  // a block-preserving group on 8 points: {0..3} and {4..7}
  const std::vector<Permutation> gens = {cycle(8, {0, 1, 2, 3}), cycle(8, {0, 1}), cycle(8, {0, 4}),
                                         cycle(8, {4, 5, 6, 7})};
  const PermGroup G(8, {cycle(8, {0, 1, 2, 3}), cycle(8, {0, 1})});
  CHECK(G.order() == 24);
  for (int t = 0; t < 100; ++t) {
    Permutation g = Permutation::identity(8);
    for (int s = 0; s < 10; ++s) g = g * G.generators()[rng() % 2];
    CHECK(G.contains(g));
  }
  CHECK_FALSE(G.contains(cycle(8, {3, 4})));
  CHECK_THROWS_AS(G.contains(Permutation::identity(5)), Error);
  CHECK(PermGroup(8, gens).order() == oracle::factorial(8));
}

TEST_CASE("induced permutations") {
  const std::vector<int> pts = {-3, -1, 1, 3};
  const auto neg = induced_permutation(0, pts, [](int, int x) { return -x; });
  CHECK(neg.images() == std::vector<Point>{3, 2, 1, 0});
  try {
    induced_permutation(0, pts, [](int, int x) { return x + 2; });
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
  try {
    image_order(std::vector<int>{1, 2}, std::vector<int>{1}, pts, [](int, int x) { return x; });
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
  CHECK(to_string(oracle::factorial(25)) == "15511210043330985984000000");
}
