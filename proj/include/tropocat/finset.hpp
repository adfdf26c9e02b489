#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tropocat {

/// A finite set {0, ..., size-1}, optionally carrying display labels.
struct FinSet {
  std::size_t size = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` distinct strings

  FinSet() = default;
  explicit FinSet(std::size_t n) : size(n) {}
  FinSet(std::size_t n, std::vector<std::string> names);

  bool operator==(const FinSet& other) const { return size == other.size; }
};

/// A presented set (l, X, R): X is a subset of {0, ..., l-1} and R an
/// equivalence relation on X. R is stored as a fully compressed union-find
/// array whose entries are the minimum element of each class, so two presented
/// sets are equal as triples iff their arrays are equal.
class PresentedSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  PresentedSet() = default;

  /// Builds (l, members, relation generated by `identify`).
  PresentedSet(std::size_t l, std::span<const std::size_t> members,
               std::span<const std::pair<std::size_t, std::size_t>> identify = {});

  /// ({0, ..., k-1}, equality).
  static PresentedSet discrete(std::size_t k);

  std::size_t universe() const { return rep_.size(); }
  bool contains(std::size_t x) const { return x < rep_.size() && rep_[x] != npos; }

  /// Class representative (the class minimum). Throws if x is not in X.
  std::size_t find(std::size_t x) const;

  /// Class representatives in increasing order.
  std::vector<std::size_t> classes() const;
  std::size_t class_count() const;

  /// Raw union-find array (npos marks elements outside X).
  const std::vector<std::size_t>& representatives() const { return rep_; }

  bool operator==(const PresentedSet& other) const = default;

 private:
  friend PresentedSet glue(const PresentedSet&, const PresentedSet&, std::span<const std::size_t>,
                           std::span<const std::size_t>);
  std::vector<std::size_t> rep_;
};

/// Glues P and Q along a set A with i: A -> P-classes and j: A -> Q-classes
/// (given as any element of the target class). Q's universe is shifted by l_P.
PresentedSet glue(const PresentedSet& p, const PresentedSet& q, std::span<const std::size_t> i,
                  std::span<const std::size_t> j);

/// A cospan left -> apex <- right. Feet maps store class representatives of
/// the apex presented set.
class Cospan {
 public:
  Cospan() = default;
  Cospan(FinSet left, FinSet right, PresentedSet apex, std::vector<std::size_t> left_map,
         std::vector<std::size_t> right_map);

  /// Cospan with discrete apex {0, ..., classes-1}.
  static Cospan from_classes(std::size_t left, std::size_t right, std::size_t classes,
                             std::vector<std::size_t> left_map,
                             std::vector<std::size_t> right_map);

  static Cospan identity(std::size_t n);

  const FinSet& left() const { return left_; }
  const FinSet& right() const { return right_; }
  std::size_t left_size() const { return left_.size; }
  std::size_t right_size() const { return right_.size; }
  const PresentedSet& apex() const { return apex_; }
  const std::vector<std::size_t>& left_map() const { return left_map_; }
  const std::vector<std::size_t>& right_map() const { return right_map_; }
  std::size_t class_count() const { return apex_.class_count(); }

  bool operator==(const Cospan& other) const = default;

 private:
  FinSet left_;
  FinSet right_;
  PresentedSet apex_;
  std::vector<std::size_t> left_map_;
  std::vector<std::size_t> right_map_;
};

/// Pushout composite: c1 : A -> B followed by c2 : B -> C.
/// Throws FootMismatch if c1.right_size() != c2.left_size().
Cospan compose(const Cospan& c1, const Cospan& c2);

/// Disjoint union (monoidal product); feet and classes of `a` come first.
Cospan tensor(const Cospan& a, const Cospan& b);

/// Apex class representatives in canonical scan order: classes first hit by
/// left feet (in index order), then by right feet, then the remaining classes
/// in increasing representative order.
std::vector<std::size_t> canonical_class_order(const Cospan& c);

/// Relabels apex classes 0..k-1 by canonical_class_order over a discrete apex.
Cospan canonicalize(const Cospan& c);

struct CospanClassification {
  bool is_reduced = false;
  bool is_connected = false;
  bool is_positive_boundary = false;
  std::vector<std::size_t> closed_classes;  // class representatives hit by no foot
};

CospanClassification classify(const Cospan& c);

/// Swap cospan a ⊗ b -> b ⊗ a with discrete apex.
Cospan symmetry(std::size_t a, std::size_t b);

}  // namespace tropocat
