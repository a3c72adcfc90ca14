#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "delpezzo/error.hpp"

namespace delpezzo::groups {

using Point = std::uint32_t;
using Order = boost::multiprecision::cpp_int;

/// Permutation of {0, ..., degree-1}; p(x) is images()[x].
class Permutation {
 public:
  Permutation() = default;
  /// Throws BadInput if `images` is not a bijection of {0..size-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

/// Permutation group with a stabilizer chain built by deterministic
/// Schreier-Sims. Base points are chosen as the smallest point moved by the
/// element that forces a new level.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Exact order: product of the basic orbit lengths.
  Order order() const;
  /// Membership by sifting. Throws DegreeMismatch.
  bool contains(const Permutation& g) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> transversal_index;  // per point, -1 if outside the orbit
    std::vector<Permutation> transversal;          // u with u(base) = point
    std::vector<Permutation> transversal_inverse;
  };

  // Residue of g after sifting from `level`, and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t level) const;
  void insert(const Permutation& g, std::size_t level);
  void add_to_level(std::size_t level, const Permutation& g);
  void visit(std::size_t level, Point beta, std::size_t generator);
  void push_level(Point base);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::deque<Level> levels_;
};

Order group_order(const PermGroup& group);
bool contains(const PermGroup& group, const Permutation& g);

/// Permutation of the sorted point list induced by `apply(element, point)`.
/// Throws NotClosed if an image falls outside `points` or two points collide.
template <class Element, class PointT, class Apply>
Permutation induced_permutation(const Element& element, const std::vector<PointT>& points, Apply&& apply) {
  std::vector<Point> images(points.size());
  std::vector<bool> hit(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PointT image = apply(element, points[i]);
    const auto it = std::lower_bound(points.begin(), points.end(), image);
    if (it == points.end() || *it != image)
      throw Error(ErrorKind::NotClosed, "action maps point " + std::to_string(i) + " outside the point set");
    const auto j = static_cast<std::size_t>(it - points.begin());
    if (hit[j]) throw Error(ErrorKind::NotClosed, "action is not injective on the point set");
    hit[j] = true;
    images[i] = static_cast<Point>(j);
  }
  return Permutation(std::move(images));
}

/// Group generated by the permutations the generators induce on `points`
/// (which must be sorted and unique). Faithfulness is the caller's concern.
template <class Element, class PointT, class Apply>
PermGroup perm_from_action(const std::vector<Element>& generators, const std::vector<PointT>& points,
                           Apply&& apply) {
  std::vector<Permutation> perms;
  perms.reserve(generators.size());
  for (const auto& g : generators) perms.push_back(induced_permutation(g, points, apply));
  return PermGroup(points.size(), std::move(perms));
}

/// Order of the group generated by image_generators[i] = phi(domain_generators[i]).
template <class DomainElement, class ImageElement, class PointT, class Apply>
Order image_order(const std::vector<DomainElement>& domain_generators,
                  const std::vector<ImageElement>& image_generators, const std::vector<PointT>& points,
                  Apply&& apply) {
  if (domain_generators.size() != image_generators.size())
    throw Error(ErrorKind::LengthMismatch, "one image per domain generator required");
  return perm_from_action(image_generators, points, apply).order();
}

/// Decimal representation.
std::string to_string(const Order& order);

}  // namespace delpezzo::groups
