#include "delpezzo/bridge.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "delpezzo/error.hpp"

namespace delpezzo::bridge {

namespace {

using f2::Bits;
using f2::F2Vector;
using groups::Order;

std::string str(const Order& x) { return groups::to_string(x); }

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::string bits_string(F2Vector v, int width) {
  std::string s;
  for (int i = 0; i < width; ++i) s += ((v.bits >> i) & 1) ? '1' : '0';
  return s;
}


Bits all_ones(const DelPezzoLattice& L) { return (Bits{1} << L.ambient_dim()) - 1; }

VerificationReport start(std::string statement, const DelPezzoLattice& L) {
  VerificationReport r;
  r.statement = std::move(statement);
  r.n = L.n;
  r.lattice = L.type_name();
  return r;
}

bool divides(const Order& a, const Order& b) { return a != 0 && b % a == 0; }

}  // namespace

void VerificationReport::check(std::string name, bool ok, std::string detail) {
  witnesses.push_back(Check{std::move(name), ok, std::move(detail)});
  pass = pass && ok;
}

F2Vector phi(const DelPezzoLattice& L, const Root& alpha) {
  if (!lattice::is_root(L, alpha)) throw Error(ErrorKind::NotARoot, "phi is defined on roots only");
  return f2::reduce_vector(alpha);
}

Root phi_inverse(const DelPezzoLattice& L, F2Vector v) {
  if (L.kind != lattice::LatticeKind::DelPezzo)
    throw Error(ErrorKind::BadInput, "explicit preimages exist for del Pezzo lattices only");
  const auto S = f2::reduce(L);
  if (!S.contains(v)) throw Error(ErrorKind::BadInput, "vector is not in L_2");
  if (f2::eval_q(S, v) != 1) throw Error(ErrorKind::BadInput, "q(v) != 1");
  if (L.n == 7 && v.bits == all_ones(L))
    throw Error(ErrorKind::NoPreimage, "k has no root preimage: an all-odd lift has square 6 mod 8");

  const std::size_t d = L.ambient_dim();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < d; ++i)
    if ((v.bits >> i) & 1) support.push_back(i);
  const std::size_t m = support.size();
  const bool has_zero = (v.bits & 1) != 0;
  auto E = [&](std::size_t i) { return lattice::unit(d, i); };
  lattice::AmbientVector E_I{IntVector(d, 0)};
  for (auto i : support) E_I[i] = 1;

  Root alpha;
  if (!has_zero && m == 2) {
    alpha = E(support[0]) - E(support[1]);
  } else if ((!has_zero && m == 6) || (has_zero && m == 4)) {
    alpha = (2 * E(0)) - E_I;
  } else if (has_zero && m == 8 && L.n == 8) {
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < d; ++i)
      if (!((v.bits >> i) & 1)) missing.push_back(i);
    if (missing.size() != 1) throw std::logic_error("m = 8 case needs exactly one missing index");
    alpha = (4 * E(0)) - E_I - (2 * E(missing[0]));
  } else {
    throw Error(ErrorKind::BadInput, "no preimage case for support size " + std::to_string(m));
  }
  if (!lattice::is_root(L, alpha) || phi(L, alpha) != v) throw std::logic_error("preimage construction failed");
  return alpha;
}

f2::F2Isometry rho(const DelPezzoLattice& L, const LatticeIsometry& u) {
  if (!lattice::preserves_gram(L, u)) throw Error(ErrorKind::NotIsometry, "matrix does not preserve the Gram form");
  std::vector<Bits> cols(u.matrix.size(), 0);
  for (std::size_t i = 0; i < u.matrix.size(); ++i)
    for (std::size_t j = 0; j < u.matrix.size(); ++j)
      if (u.matrix[i][j] % 2 != 0) cols[j] |= Bits{1} << i;
  return f2::F2Isometry(L.n, std::move(cols));
}

groups::Permutation Analysis::root_permutation(const LatticeIsometry& u) const {
  return groups::induced_permutation(u, roots, [this](const LatticeIsometry& g, const Root& r) {
    return lattice::apply(lattice, g, r);
  });
}

Order Analysis::rho_image_order(const std::vector<LatticeIsometry>& generators) const {
  std::vector<f2::F2Isometry> images;
  for (const auto& g : generators) images.push_back(rho(lattice, g));
  return groups::image_order(generators, images, f2::nonzero_points(space.dim()),
                             [](const f2::F2Matrix& m, Bits x) { return m.apply(x); });
}

Analysis analyze(const DelPezzoLattice& L) {
  auto roots = lattice::enumerate_roots(L);
  auto space = f2::reduce(L);
  auto census = f2::value_census(space);
  auto weyl_gens = lattice::weyl_generators(L);
  auto aut_gens = lattice::automorphism_group(L);
  auto orth_gens = f2::orthogonal_generators(space);
  auto act = [&L](const LatticeIsometry& u, const Root& r) { return lattice::apply(L, u, r); };
  auto weyl = groups::perm_from_action(weyl_gens, roots, act);
  auto aut = groups::perm_from_action(aut_gens, roots, act);
  auto orth = f2::matrix_group(space.dim(), orth_gens);
  return Analysis{L,
                  std::move(roots),
                  std::move(space),
                  census,
                  std::move(weyl_gens),
                  std::move(aut_gens),
                  std::move(orth_gens),
                  std::move(weyl),
                  std::move(aut),
                  std::move(orth)};
}

VerificationReport verify_lemma_roots(const Analysis& A) {
  const auto& L = A.lattice;
  auto r = start("lemma1a", L);
  std::map<F2Vector, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < A.roots.size(); ++i) classes[phi(L, A.roots[i])].push_back(i);
  bool ok = true;
  std::string counterexample;
  for (const auto& [v, members] : classes) {
    const bool pair = members.size() == 2 && A.roots[members[0]] == -A.roots[members[1]];
    if (!pair && counterexample.empty()) counterexample = "image " + bits_string(v, static_cast<int>(L.ambient_dim()));
    ok = ok && pair;
  }
  r.numbers["roots"] = A.roots.size();
  r.numbers["phi_image_size"] = classes.size();
  r.check("fibres of phi are exactly {alpha, -alpha}", ok, ok ? std::to_string(classes.size()) + " fibres" : counterexample);
  r.check("image size is #R/2", classes.size() * 2 == A.roots.size());
  return r;
}

VerificationReport verify_lemma_isometries(const Analysis& A) {
  const auto& L = A.lattice;
  auto r = start("lemma1b", L);
  const bool product_case = L.kind == lattice::LatticeKind::DelPezzo && L.n == 3;
  const Order expected_kernel = product_case ? 4 : 2;
  const Order aut = A.automorphisms.order();
  const Order image = A.rho_image_order(A.automorphism_generators);
  r.numbers["autL_order"] = aut;
  r.numbers["rho_image_order"] = image;
  r.check("rho(-1) is the identity", rho(L, lattice::negation_isometry(L)).is_identity());
  if (!divides(image, aut)) {
    r.check("image order divides |O(L)|", false, str(image) + " vs " + str(aut));
    return r;
  }
  const Order kernel = aut / image;
  r.numbers["kernel_order"] = kernel;
  r.check(product_case ? "kernel of rho has order 4 ({+-1} x {+-1})" : "kernel of rho is {+-1}",
          kernel == expected_kernel, "|O(L)| = " + str(aut) + ", |rho(O(L))| = " + str(image));

  if (L.n <= 4) {
    std::uint64_t in_kernel = 0;
    bool only_signs = true;
    const auto id = lattice::identity_isometry(L);
    const auto minus = lattice::negation_isometry(L);
    const std::uint64_t total = lattice::for_each_isometry(L, [&](const LatticeIsometry& u) {
      if (rho(L, u).is_identity()) {
        ++in_kernel;
        only_signs = only_signs && (u == id || u == minus);
      }
      return true;
    });
    r.check("enumerated O(L) has the chain order", Order(total) == aut, std::to_string(total) + " isometries");
    r.check("enumerated kernel of rho has the expected order", Order(in_kernel) == expected_kernel,
            std::to_string(in_kernel) + " elements");
    if (!product_case) r.check("enumerated kernel is {1, -1}", only_signs);
  }
  return r;
}

std::vector<VerificationReport> verify_lemma(const Analysis& A) {
  return {verify_lemma_roots(A), verify_lemma_isometries(A)};
}

VerificationReport verify_prop1(const Analysis& A) {
  const auto& L = A.lattice;
  const auto& S = A.space;
  auto r = start("prop1", L);
  const F2Vector k{all_ones(L)};

  std::set<F2Vector> image;
  bool lands_in_quadric = true;
  for (const auto& alpha : A.roots) {
    const auto v = phi(L, alpha);
    image.insert(v);
    lands_in_quadric = lands_in_quadric && f2::eval_q(S, v) == 1;
  }
  std::set<F2Vector> quadric;
  for (Bits c = 0; c < S.size(); ++c)
    if (S.q_coords(c) == 1) quadric.insert(S.vector(c));
  std::set<F2Vector> target = quadric;
  if (L.n == 7) target.erase(k);

  r.numbers["roots"] = A.roots.size();
  r.numbers["q1_count"] = A.census.q1;
  r.numbers["q0_count"] = A.census.q0;
  r.check("phi(R) lies in q^-1(1)", lands_in_quadric);
  r.check(L.n == 7 ? "phi(R) = q^-1(1) minus {k}" : "phi(R) = q^-1(1)", image == target,
          std::to_string(image.size()) + " images, " + std::to_string(target.size()) + " targets");
  r.check("#R/2 equals the target size", A.roots.size() == 2 * target.size());
  if (L.n == 7) {
    r.check("k is not a root image", image.count(k) == 0);
    r.check("q(k) = 1", S.contains(k) && f2::eval_q(S, k) == 1);
    bool obstructed = false;
    try {
      phi_inverse(L, k);
    } catch (const Error& e) {
      obstructed = e.kind() == ErrorKind::NoPreimage;
    }
    r.check("phi_inverse(k) raises NoPreimage", obstructed);
  }

  const std::set<Root> root_set(A.roots.begin(), A.roots.end());
  bool round_trip = true;
  std::string failure;
  for (const auto& v : target) {
    const Root alpha = phi_inverse(L, v);
    const bool ok = root_set.count(alpha) && phi(L, alpha) == v;
    if (!ok && failure.empty()) failure = bits_string(v, static_cast<int>(L.ambient_dim()));
    round_trip = round_trip && ok;
  }
  r.check("phi(phi_inverse(v)) = v on every target", round_trip, failure);
  return r;
}

VerificationReport verify_prop2(const Analysis& A) {
  const auto& L = A.lattice;
  const auto& S = A.space;
  if (L.kind != lattice::LatticeKind::DelPezzo || L.n < 4)
    throw Error(ErrorKind::WrongRange, "the isomorphism statement covers del Pezzo lattices with n >= 4");
  auto r = start("prop2", L);
  const Order aut = A.automorphisms.order();
  const Order orth = A.orthogonal.order();
  const Order image = A.rho_image_order(A.automorphism_generators);
  r.numbers["autL_order"] = aut;
  r.numbers["oL2_order"] = orth;
  r.numbers["rho_image_order"] = image;
  r.check("|rho(O(L))| = |O(L)|/2", image * 2 == aut, str(image) + " vs " + str(aut));
  r.check("|rho(O(L))| = |O(L_2)| (rho is onto)", image == orth, str(image) + " vs " + str(orth));

  bool square = true;
  for (const auto& alpha : A.roots)
    square = square && rho(L, lattice::root_reflection(L, alpha)) == f2::f2_reflection(S, phi(L, alpha));
  r.check("rho(s_alpha) = r_phi(alpha) for every root", square);

  if (L.n == 4) {
    const auto ex = f2::exception_check_n4(S);
    std::vector<std::string> listed;
    for (const auto& v : ex.singular) listed.push_back(bits_string(v, 5));
    r.numbers["singular_vectors"] = ex.singular.size();
    r.check("nonzero singular vectors are k+e0, e0+e1..e0+e4", ex.matches_expected, join(listed));
    r.check("singular vectors pair to 1", ex.all_pairings_one);
    r.check("no totally singular plane", ex.singular_planes == 0);
  }
  if (L.n == 7) {
    const auto model = f2::sp_model(S);
    const auto transvections = model.transvection_generators();
    const Order sp = f2::matrix_group(model.hyperplane().dim(), transvections).order();
    std::vector<f2::F2Matrix> forward;
    for (const auto& g : A.orthogonal_generators) forward.push_back(model.forward(g));
    const Order forward_order = f2::matrix_group(model.hyperplane().dim(), forward).order();
    bool correspondence = true;
    bool inverse_isometries = true;
    for (Bits h = 1; h < model.hyperplane().size(); ++h) {
      const auto refl = model.inverse_transvection(h);
      correspondence = correspondence && model.forward(refl) == model.transvection(h);
      inverse_isometries = inverse_isometries && f2::is_isometry(S, refl) && A.orthogonal.contains(
          groups::induced_permutation(refl, f2::nonzero_points(S.dim()),
                                      [](const f2::F2Matrix& m, Bits x) { return m.apply(x); }));
    }
    r.numbers["sp_order"] = sp;
    r.check("|Sp(H)| = |O(L_2)|", sp == orth, str(sp) + " vs " + str(orth));
    r.check("forward map is onto Sp(H) and injective by order", forward_order == sp && forward_order == orth);
    r.check("transvection at v <-> reflection at v + (1+q(v))k", correspondence);
    r.check("reflections at v + (1+q(v))k lie in O(L_2)", inverse_isometries);
  }
  if (L.n == 5) {
    const auto model = f2::quotient_by_radical(S);
    const auto kernel = model.kernel_maps();
    const auto points = f2::nonzero_points(S.dim());
    auto act = [](const f2::F2Matrix& m, Bits x) { return m.apply(x); };
    bool kernel_ok = true;
    for (const auto& u : kernel)
      kernel_ok = kernel_ok && f2::is_isometry(S, u) && model.project_isometry(u).is_identity() &&
                  A.orthogonal.contains(groups::induced_permutation(u, points, act));
    std::vector<f2::F2Matrix> projected;
    for (const auto& g : A.orthogonal_generators) projected.push_back(model.project_isometry(g));
    const Order pi_image = f2::matrix_group(model.quotient().dim(), projected).order();
    const Order quotient_orth =
        f2::matrix_group(model.quotient().dim(), f2::orthogonal_generators(model.quotient())).order();
    const auto rank4 = f2::reduce(lattice::build_del_pezzo(4));
    const Order rank4_orth = f2::matrix_group(rank4.dim(), f2::orthogonal_generators(rank4)).order();
    bool section_matches_rank4 = true;
    for (Bits s = 0; s < 16; ++s) {
      Bits mask = 0;
      for (int i = 0; i < 4; ++i)
        if ((s >> i) & 1) mask ^= model.section()[static_cast<std::size_t>(i)].bits;
      section_matches_rank4 = section_matches_rank4 && rank4.contains({mask}) &&
                              f2::eval_q(rank4, {mask}) == f2::eval_q(S, {mask});
    }
    r.numbers["kernel_order"] = kernel.size();
    r.numbers["quotient_oL2_order"] = pi_image;
    r.check("kernel of pi has 16 elements x -> x + l(x)k", kernel.size() == 16 && kernel_ok);
    r.check("pi is onto O(L_2/<k>)", pi_image == quotient_orth, str(pi_image) + " vs " + str(quotient_orth));
    r.check("O(L_2/<k>) has the order of O(L'_2)", quotient_orth == rank4_orth);
    r.check("|O(L_2)| = 16 |O(L'_2)|", orth == 16 * rank4_orth, str(orth) + " = 16 * " + str(rank4_orth));
    r.check("quotient census equals the rank-4 census", f2::value_census(model.quotient()) == f2::value_census(rank4));
    r.check("N maps isomorphically onto L_2/<k>", model.section_is_isomorphism());
    r.check("N is isometric to L'_2", section_matches_rank4);
  }
  return r;
}

VerificationReport verify_corollary(const Analysis& A) {
  const auto& L = A.lattice;
  if (L.kind != lattice::LatticeKind::DelPezzo || L.n < 4)
    throw Error(ErrorKind::WrongRange, "the Weyl group statement covers del Pezzo lattices with 4 <= n <= 8");
  auto r = start("corollary", L);
  const Order weyl = A.weyl.order();
  const Order orth = A.orthogonal.order();
  const Order image = A.rho_image_order(A.weyl_generators);
  const bool minus_one = A.weyl.contains(A.root_permutation(lattice::negation_isometry(L)));
  r.numbers["weyl_order"] = weyl;
  r.numbers["oL2_order"] = orth;
  r.numbers["rho_image_order"] = image;
  r.check("-1 in W exactly for n = 7, 8", minus_one == (L.n >= 7), minus_one ? "-1 in W" : "-1 not in W");
  if (L.n <= 6)
    r.check("|W| = |O(L_2)|", weyl == orth, str(weyl) + " vs " + str(orth));
  else
    r.check("|W|/2 = |O(L_2)|", weyl == 2 * orth, str(weyl) + " vs " + str(orth));
  r.check("rho(W) = O(L_2)", image == orth, str(image) + " vs " + str(orth));
  return r;
}

VerificationReport verify_remark1(const Analysis& A) {
  const auto& L = A.lattice;
  if (L.kind != lattice::LatticeKind::DelPezzo || L.n != 3)
    throw Error(ErrorKind::OutOfRange, "the A1xA2 product check applies only to n = 3");
  auto r = start("remark1", L);
  const Order aut = A.automorphisms.order();
  const Order orth = A.orthogonal.order();
  const Order image = A.rho_image_order(A.automorphism_generators);
  r.numbers["autL_order"] = aut;
  r.numbers["oL2_order"] = orth;
  r.numbers["rho_image_order"] = image;
  r.numbers["kernel_order"] = divides(image, aut) ? Order(aut / image) : Order(0);
  r.check("|O(L)| = 24", aut == 24);
  r.check("rho is onto O(L_2)", image == orth, str(image) + " vs " + str(orth));
  r.check("kernel of rho has order 4", image * 4 == aut);

  // Irreducible components: connected under non-orthogonality.
  const std::size_t count = A.roots.size();
  std::vector<int> component(count, -1);
  int components = 0;
  for (std::size_t s = 0; s < count; ++s) {
    if (component[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    component[s] = components;
    while (!stack.empty()) {
      const auto a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < count; ++b)
        if (component[b] < 0 && L.inner(A.roots[a], A.roots[b]) != 0) {
          component[b] = components;
          stack.push_back(b);
        }
    }
    ++components;
  }
  std::vector<std::vector<Root>> parts(static_cast<std::size_t>(components));
  for (std::size_t i = 0; i < count; ++i) parts[static_cast<std::size_t>(component[i])].push_back(A.roots[i]);
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  r.check("root system splits as A1 + A2", parts.size() == 2 && parts[0].size() == 2 && parts[1].size() == 6);
  if (!r.pass) return r;

  auto act = [&L](const LatticeIsometry& u, const Root& x) { return lattice::apply(L, u, x); };
  const Order first = groups::perm_from_action(A.automorphism_generators, parts[0], act).order();
  const Order second = groups::perm_from_action(A.automorphism_generators, parts[1], act).order();
  r.numbers["autL1_order"] = first;
  r.numbers["autL2_order"] = second;
  r.check("O(L) = O(L') x O(L'') with orders 2 and 12", first == 2 && second == 12 && first * second == aut);

  // Reductions of the two summands, each on a basis of simple roots.
  const auto simple = lattice::simple_roots(L);
  std::vector<f2::F2QuadraticSpace> reductions;
  for (const auto& part : parts) {
    std::vector<Root> local;
    for (const auto& s : simple)
      if (std::find(part.begin(), part.end(), s) != part.end()) local.push_back(s);
    IntMatrix gram(local.size(), IntVector(local.size()));
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = 0; j < local.size(); ++j) gram[i][j] = L.inner(local[i], local[j]);
    reductions.push_back(f2::reduce_gram(gram));
  }
  const auto o1 = f2::count_isometries_brute_force(reductions[0]);
  const auto o2 = f2::count_isometries_brute_force(reductions[1]);
  r.numbers["oL2_1_order"] = o1;
  r.numbers["oL2_2_order"] = o2;
  r.check("O(L_2) = O(L'_2) x O(L''_2) = {1} x S_3", o1 == 1 && o2 == 6 && Order(o1 * o2) == orth);

  // Kernel elements act as independent signs on the two summands.
  std::set<std::pair<int, int>> signs;
  bool by_sign = true;
  lattice::for_each_isometry(L, [&](const LatticeIsometry& u) {
    if (!rho(L, u).is_identity()) return true;
    std::pair<int, int> s{0, 0};
    for (int p = 0; p < 2; ++p) {
      int sign = 0;
      for (const auto& x : parts[static_cast<std::size_t>(p)]) {
        const auto y = lattice::apply(L, u, x);
        const int here = y == x ? 1 : (y == -x ? -1 : 0);
        if (here == 0 || (sign != 0 && here != sign)) by_sign = false;
        sign = here;
      }
      (p == 0 ? s.first : s.second) = sign;
    }
    signs.insert(s);
    return true;
  });
  r.check("kernel = {+-1} x {+-1}", by_sign && signs.size() == 4);
  return r;
}

VerificationReport verify_remark2(int rank) {
  if (rank < 5 || rank > 10) throw Error(ErrorKind::OutOfRange, "the plain A_n check takes a rank in [5, 10]");
  const auto A = analyze(lattice::build_plain_root_lattice(rank));
  auto r = start("remark2", A.lattice);
  const Order aut = A.automorphisms.order();
  const Order orth = A.orthogonal.order();
  const Order image = A.rho_image_order(A.automorphism_generators);
  const std::uint64_t half_roots = A.roots.size() / 2;
  r.numbers["roots"] = A.roots.size();
  r.numbers["q1_count"] = A.census.q1;
  r.numbers["q0_count"] = A.census.q0;
  r.numbers["autL_order"] = aut;
  r.numbers["oL2_order"] = orth;
  r.numbers["rho_image_order"] = image;
  r.check("#R = n(n+1)", A.roots.size() == static_cast<std::size_t>(rank * (rank + 1)));
  r.check("lemma: |rho(O(L))| = |O(L)|/2", image * 2 == aut);
  const bool roots_differ = half_roots != A.census.q1;
  const bool groups_differ = aut != 2 * orth;
  const std::string root_cmp = std::to_string(half_roots) + (roots_differ ? " != " : " = ") + std::to_string(A.census.q1);
  const std::string group_cmp =
      str(aut) + (orth > aut ? " < " : (orth == aut ? " = " : " > ")) + str(orth) + " = |O(L_2)|";
  r.witnesses.push_back({"#R/2 vs #q^-1(1)", true, root_cmp});
  r.witnesses.push_back({"|O(L)| vs |O(L_2)|", true, group_cmp});
  r.check("root/quadric bijection or O(L)/{+-1} = O(L_2) fails", roots_differ || groups_differ);
  return r;
}

std::vector<VerificationReport> verify_all(int n) {
  const auto A = analyze(lattice::build_del_pezzo(n));
  auto reports = verify_lemma(A);
  reports.push_back(verify_prop1(A));
  if (n >= 4) {
    reports.push_back(verify_prop2(A));
    reports.push_back(verify_corollary(A));
  } else {
    reports.push_back(verify_remark1(A));
  }
  return reports;
}

SummaryRow summarize(const Analysis& A) {
  SummaryRow row;
  row.n = A.lattice.n;
  row.type = A.lattice.type_name();
  row.roots = A.roots.size();
  row.q1 = A.census.q1;
  row.q0 = A.census.q0;
  const auto rad = f2::radical_coords(A.space);
  row.radical_dim = __builtin_ctz(static_cast<unsigned>(rad.size()));
  if (rad.size() == 1) row.arf = f2::arf(A.space);
  row.weyl_order = A.weyl.order();
  row.autL_order = A.automorphisms.order();
  row.oL2_order = A.orthogonal.order();
  row.rho_image_order = A.rho_image_order(A.automorphism_generators);
  return row;
}

}  // namespace delpezzo::bridge
