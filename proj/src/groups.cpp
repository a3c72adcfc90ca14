#include "delpezzo/groups.hpp"

#include <numeric>

namespace delpezzo::groups {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorKind::BadInput, "not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const { return first_moved_point() == images_.size(); }

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  std::vector<Point> images(b.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "generator degree differs from group degree");
  for (const auto& g : generators_) insert(g, 0);
}

void PermGroup::push_level(Point base) {
  Level level;
  level.base = base;
  level.orbit.push_back(base);
  level.transversal_index.assign(degree_, -1);
  level.transversal_index[base] = 0;
  level.transversal.push_back(Permutation::identity(degree_));
  level.transversal_inverse.push_back(Permutation::identity(degree_));
  levels_.push_back(std::move(level));
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t level) const {
  for (; level < levels_.size(); ++level) {
    const Level& l = levels_[level];
    const std::int32_t t = l.transversal_index[g(l.base)];
    if (t < 0) return {std::move(g), level};
    g = l.transversal_inverse[static_cast<std::size_t>(t)] * g;
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::insert(const Permutation& g, std::size_t level) {
  auto [residue, stop] = strip(g, level);
  if (residue.is_identity()) return;
  if (stop == levels_.size()) push_level(residue.first_moved_point());
  for (std::size_t l = stop + 1; l-- > level;) add_to_level(l, residue);
}

void PermGroup::add_to_level(std::size_t level, const Permutation& g) {
  levels_[level].generators.push_back(g);
  const std::size_t added = levels_[level].generators.size() - 1;
  const std::size_t old_size = levels_[level].orbit.size();
  for (std::size_t i = 0; i < old_size; ++i) visit(level, levels_[level].orbit[i], added);
  for (std::size_t i = old_size; i < levels_[level].orbit.size(); ++i)
    for (std::size_t s = 0; s < levels_[level].generators.size(); ++s) visit(level, levels_[level].orbit[i], s);
}

// Either extends the orbit of the level's base by s(beta), or sifts the
// Schreier generator u_{s(beta)}^{-1} s u_beta into the next level.
void PermGroup::visit(std::size_t level, Point beta, std::size_t generator) {
  Level& l = levels_[level];
  const Permutation& s = l.generators[generator];
  const Point gamma = s(beta);
  const auto u_beta = static_cast<std::size_t>(l.transversal_index[beta]);
  if (l.transversal_index[gamma] < 0) {
    l.transversal_index[gamma] = static_cast<std::int32_t>(l.transversal.size());
    Permutation u = s * l.transversal[u_beta];
    l.transversal_inverse.push_back(u.inverse());
    l.transversal.push_back(std::move(u));
    l.orbit.push_back(gamma);
    return;
  }
  const auto u_gamma = static_cast<std::size_t>(l.transversal_index[gamma]);
  Permutation schreier = l.transversal_inverse[u_gamma] * (s * l.transversal[u_beta]);
  if (!schreier.is_identity()) insert(schreier, level + 1);
}

Order PermGroup::order() const {
  Order result = 1;
  for (const auto& l : levels_) result *= l.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "membership test with wrong degree");
  auto [residue, stop] = strip(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::vector<std::size_t> PermGroup::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& l : levels_) sizes.push_back(l.orbit.size());
  return sizes;
}

Order group_order(const PermGroup& group) { return group.order(); }

bool contains(const PermGroup& group, const Permutation& g) { return group.contains(g); }

std::string to_string(const Order& order) { return order.str(); }

}  // namespace delpezzo::groups
