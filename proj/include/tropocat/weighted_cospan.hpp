#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <tuple>
#include <utility>
#include <vector>

#include "tropocat/finset.hpp"
#include "tropocat/monoid.hpp"

namespace tropocat {

/// A cospan whose apex classes carry monoid labels. Always held in canonical
/// form: classes hit by feet are numbered in scan order (left feet, then right
/// feet), closed classes follow sorted by label. Two weighted cospans are
/// isomorphic iff they compare equal.
class WeightedCospan {
 public:
  using Element = WeightingMonoid::Element;

  WeightedCospan() = default;

  /// Classes are 0..labels.size()-1; maps index into them.
  WeightedCospan(std::size_t left, std::size_t right, std::vector<std::size_t> left_map,
                 std::vector<std::size_t> right_map, std::vector<Element> labels);

  /// `labels[k]` labels the k-th class of `c.apex().classes()`.
  static WeightedCospan from_cospan(const Cospan& c, const std::vector<Element>& labels);

  static WeightedCospan identity(std::size_t n);
  /// ∅ -> ∅ with one closed class per entry.
  static WeightedCospan closed(std::vector<Element> labels);

  const Cospan& cospan() const { return cospan_; }
  const std::vector<Element>& labels() const { return labels_; }
  std::size_t left_size() const { return cospan_.left_size(); }
  std::size_t right_size() const { return cospan_.right_size(); }
  std::size_t class_count() const { return labels_.size(); }
  const std::vector<std::size_t>& left_map() const { return cospan_.left_map(); }
  const std::vector<std::size_t>& right_map() const { return cospan_.right_map(); }

  /// Number of feet (left and right) hitting each class.
  std::vector<std::size_t> feet_per_class() const;

  bool operator==(const WeightedCospan&) const = default;
  auto operator<=>(const WeightedCospan& other) const {
    return std::tie(cospan_.left_map(), cospan_.right_map(), labels_, cospan_.left().size,
                    cospan_.right().size) <=>
           std::tie(other.cospan_.left_map(), other.cospan_.right_map(), other.labels_,
                    other.cospan_.left().size, other.cospan_.right().size);
  }

 private:
  Cospan cospan_;
  std::vector<Element> labels_;
};

/// First Betti number of one glued class: mid_hits - part_count + 1.
/// Throws NegativeBetti when part_count == 0 or mid_hits + 1 < part_count.
std::int64_t b1_of_class(std::size_t mid_hits, std::size_t part_count);

/// Composite w1 : A -> B then w2 : B -> C. Each glued class is labelled by the
/// sum of its constituent labels plus α·b₁ of the class.
WeightedCospan compose_weighted(const WeightedCospan& w1, const WeightedCospan& w2,
                                const WeightingMonoid& monoid);

WeightedCospan tensor(const WeightedCospan& a, const WeightedCospan& b);

/// Swap a ⊗ b -> b ⊗ a, all labels zero.
WeightedCospan weighted_symmetry(std::size_t a, std::size_t b);

/// Classes hit by at most one foot carry a label in A₁.
bool is_stable(const WeightedCospan& w, const WeightingMonoid& monoid);

/// Every label is an element of the monoid.
bool has_valid_labels(const WeightedCospan& w, const WeightingMonoid& monoid);

/// Σ over classes of (2 - 2·label - feet). Requires an ℕ-valued monoid
/// (WrongMonoid otherwise).
std::int64_t euler_characteristic(const WeightedCospan& w, const WeightingMonoid& monoid);

/// Σ labels + α·(|right feet| - |classes|) in the group completion.
MonoidGroupElement pb_genus_functor(const WeightedCospan& w, const WeightingMonoid& monoid);

/// Same formula computed inside A, defined only on positive-boundary
/// morphisms (InvalidArgument otherwise).
WeightingMonoid::Element pb_genus_positive(const WeightedCospan& w,
                                           const WeightingMonoid& monoid);

struct ReducedClosedSplit {
  WeightedCospan reduced;
  std::vector<WeightingMonoid::Element> closed;  // sorted labels of closed classes
};

ReducedClosedSplit split_reduced_closed(const WeightedCospan& w);

/// Inverse of split_reduced_closed.
WeightedCospan join_reduced_closed(const WeightedCospan& reduced,
                                   const std::vector<WeightingMonoid::Element>& closed);

}  // namespace tropocat
