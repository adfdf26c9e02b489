#include "tropocat/weighted_cospan.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "tropocat/error.hpp"

namespace tropocat {

namespace {

// Canonical order for weighted cospans: feet-hit classes in scan order, then
// closed classes by (label, previous position).
std::vector<std::size_t> weighted_order(const std::vector<std::size_t>& left_map,
                                        const std::vector<std::size_t>& right_map,
                                        const std::vector<WeightingMonoid::Element>& labels) {
  std::vector<char> seen(labels.size(), 0);
  std::vector<std::size_t> order;
  order.reserve(labels.size());
  for (auto x : left_map) {
    if (!seen[x]) seen[x] = 1, order.push_back(x);
  }
  for (auto x : right_map) {
    if (!seen[x]) seen[x] = 1, order.push_back(x);
  }
  std::vector<std::size_t> closed;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (!seen[x]) closed.push_back(x);
  }
  std::stable_sort(closed.begin(), closed.end(),
                   [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  order.insert(order.end(), closed.begin(), closed.end());
  return order;
}

}  // namespace

WeightedCospan::WeightedCospan(std::size_t left, std::size_t right,
                               std::vector<std::size_t> left_map,
                               std::vector<std::size_t> right_map, std::vector<Element> labels) {
  if (left_map.size() != left || right_map.size() != right) {
    throw Error(ErrorCode::InvalidArgument, "feet map size does not match feet");
  }
  const std::size_t k = labels.size();
  for (auto x : left_map) {
    if (x >= k) throw Error(ErrorCode::InvalidArgument, "left map out of range");
  }
  for (auto x : right_map) {
    if (x >= k) throw Error(ErrorCode::InvalidArgument, "right map out of range");
  }
  auto order = weighted_order(left_map, right_map, labels);
  std::vector<std::size_t> index(k);
  for (std::size_t n = 0; n < k; ++n) index[order[n]] = n;
  for (auto& x : left_map) x = index[x];
  for (auto& x : right_map) x = index[x];
  labels_.resize(k);
  for (std::size_t n = 0; n < k; ++n) labels_[n] = labels[order[n]];
  cospan_ = Cospan::from_classes(left, right, k, std::move(left_map), std::move(right_map));
}

WeightedCospan WeightedCospan::from_cospan(const Cospan& c, const std::vector<Element>& labels) {
  auto classes = c.apex().classes();
  if (labels.size() != classes.size()) {
    throw Error(ErrorCode::InvalidArgument, "one label per apex class required");
  }
  std::vector<std::size_t> index(c.apex().universe(), 0);
  for (std::size_t k = 0; k < classes.size(); ++k) index[classes[k]] = k;
  std::vector<std::size_t> left, right;
  for (auto x : c.left_map()) left.push_back(index[x]);
  for (auto x : c.right_map()) right.push_back(index[x]);
  return WeightedCospan(c.left_size(), c.right_size(), std::move(left), std::move(right), labels);
}

WeightedCospan WeightedCospan::identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return WeightedCospan(n, n, id, id, std::vector<Element>(n, 0));
}

WeightedCospan WeightedCospan::closed(std::vector<Element> labels) {
  return WeightedCospan(0, 0, {}, {}, std::move(labels));
}

std::vector<std::size_t> WeightedCospan::feet_per_class() const {
  std::vector<std::size_t> feet(labels_.size(), 0);
  for (auto x : left_map()) ++feet[x];
  for (auto x : right_map()) ++feet[x];
  return feet;
}

std::int64_t b1_of_class(std::size_t mid_hits, std::size_t part_count) {
  if (part_count == 0 || mid_hits + 1 < part_count) {
    throw Error(ErrorCode::NegativeBetti, "class with " + std::to_string(part_count) +
                                              " parts glued along " + std::to_string(mid_hits) +
                                              " points cannot be connected");
  }
  return static_cast<std::int64_t>(mid_hits) - static_cast<std::int64_t>(part_count) + 1;
}

WeightedCospan compose_weighted(const WeightedCospan& w1, const WeightedCospan& w2,
                                const WeightingMonoid& monoid) {
  Cospan glued = compose(w1.cospan(), w2.cospan());
  const PresentedSet& apex = glued.apex();
  const std::size_t shift = w1.class_count();
  const std::size_t universe = apex.universe();

  std::vector<WeightingMonoid::Element> sum(universe, monoid.zero());
  std::vector<std::size_t> parts(universe, 0), mid(universe, 0);
  for (std::size_t x = 0; x < w1.class_count(); ++x) {
    auto r = apex.find(x);
    sum[r] = monoid.add(sum[r], w1.labels()[x]);
    ++parts[r];
  }
  for (std::size_t y = 0; y < w2.class_count(); ++y) {
    auto r = apex.find(shift + y);
    sum[r] = monoid.add(sum[r], w2.labels()[y]);
    ++parts[r];
  }
  for (auto x : w1.right_map()) ++mid[apex.find(x)];

  auto classes = apex.classes();
  std::vector<WeightingMonoid::Element> labels;
  labels.reserve(classes.size());
  for (auto r : classes) {
    auto b1 = b1_of_class(mid[r], parts[r]);
    labels.push_back(monoid.add(sum[r], monoid.times(monoid.alpha(), b1)));
  }
  return WeightedCospan::from_cospan(glued, labels);
}

WeightedCospan tensor(const WeightedCospan& a, const WeightedCospan& b) {
  const std::size_t shift = a.class_count();
  std::vector<std::size_t> left = a.left_map(), right = a.right_map();
  for (auto x : b.left_map()) left.push_back(x + shift);
  for (auto x : b.right_map()) right.push_back(x + shift);
  std::vector<WeightingMonoid::Element> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return WeightedCospan(a.left_size() + b.left_size(), a.right_size() + b.right_size(),
                        std::move(left), std::move(right), std::move(labels));
}

WeightedCospan weighted_symmetry(std::size_t a, std::size_t b) {
  Cospan s = symmetry(a, b);
  return WeightedCospan(a + b, a + b, s.left_map(), s.right_map(),
                        std::vector<WeightingMonoid::Element>(a + b, 0));
}

bool is_stable(const WeightedCospan& w, const WeightingMonoid& monoid) {
  auto feet = w.feet_per_class();
  for (std::size_t x = 0; x < feet.size(); ++x) {
    if (feet[x] <= 1 && !monoid.in_A1(w.labels()[x])) return false;
  }
  return true;
}

bool has_valid_labels(const WeightedCospan& w, const WeightingMonoid& monoid) {
  return std::all_of(w.labels().begin(), w.labels().end(),
                     [&](auto l) { return monoid.contains(l); });
}

std::int64_t euler_characteristic(const WeightedCospan& w, const WeightingMonoid& monoid) {
  if (!monoid.is_natural()) {
    throw Error(ErrorCode::WrongMonoid, "Euler characteristic needs an ℕ-labelled cospan, got " +
                                            monoid.name());
  }
  auto feet = w.feet_per_class();
  std::int64_t chi = 0;
  for (std::size_t x = 0; x < feet.size(); ++x) {
    chi += 2 - 2 * w.labels()[x] - static_cast<std::int64_t>(feet[x]);
  }
  return chi;
}

MonoidGroupElement pb_genus_functor(const WeightedCospan& w, const WeightingMonoid& monoid) {
  MonoidGroupElement total{0};
  for (auto l : w.labels()) total = total + monoid.to_group(l);
  const auto excess = static_cast<std::int64_t>(w.right_size()) -
                      static_cast<std::int64_t>(w.class_count());
  total.value += monoid.to_group(monoid.alpha()).value * excess;
  return total;
}

WeightingMonoid::Element pb_genus_positive(const WeightedCospan& w,
                                           const WeightingMonoid& monoid) {
  if (!classify(w.cospan()).is_positive_boundary) {
    throw Error(ErrorCode::InvalidArgument, "morphism is not positive boundary");
  }
  WeightingMonoid::Element total = monoid.zero();
  for (auto l : w.labels()) total = monoid.add(total, l);
  const auto excess = static_cast<std::int64_t>(w.right_size() - w.class_count());
  return monoid.add(total, monoid.times(monoid.alpha(), excess));
}

ReducedClosedSplit split_reduced_closed(const WeightedCospan& w) {
  auto feet = w.feet_per_class();
  // Canonical form puts closed classes last, so the feet-hit classes are a prefix.
  std::size_t hit = 0;
  while (hit < feet.size() && feet[hit] > 0) ++hit;
  std::vector<WeightingMonoid::Element> reduced_labels(w.labels().begin(),
                                                       w.labels().begin() + hit);
  std::vector<WeightingMonoid::Element> closed(w.labels().begin() + hit, w.labels().end());
  std::sort(closed.begin(), closed.end());
  return {WeightedCospan(w.left_size(), w.right_size(), w.left_map(), w.right_map(),
                         std::move(reduced_labels)),
          std::move(closed)};
}

WeightedCospan join_reduced_closed(const WeightedCospan& reduced,
                                   const std::vector<WeightingMonoid::Element>& closed) {
  if (!classify(reduced.cospan()).is_reduced) {
    throw Error(ErrorCode::InvalidArgument, "first factor must be reduced");
  }
  return tensor(reduced, WeightedCospan::closed(closed));
}

}  // namespace tropocat
