#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tropocat {

/// Element of the group completion A^gp. For ℕ this is ℤ; for the trivial
/// monoid and the truncations ℕ/γ (which contain an absorbing element) the
/// group completion is the zero group, represented by the value 0.
struct MonoidGroupElement {
  std::int64_t value = 0;

  MonoidGroupElement operator+(MonoidGroupElement o) const { return {value + o.value}; }
  MonoidGroupElement operator-(MonoidGroupElement o) const { return {value - o.value}; }
  bool operator==(const MonoidGroupElement&) const = default;
};

enum class MonoidKind {
  Trivial,     // (0, 0, 0)
  Nat,         // (ℕ, ℕ, 1)
  NatStable,   // (ℕ, ℕ≥1, 1)
  NatMod,      // (ℕ/γ, ℕ/γ, 1), ℕ/γ = ℕ/(ℕ+γ)
  Integers,    // (ℤ, ℤ, 1); unchecked, no stability guarantees
};

/// A weighting monoid (A, A₁, α) with elements represented as int64.
///
/// Obligations (sampled by the test-suite, not proven here): A is commutative
/// and associative with unit 0, A₁ + A ⊆ A₁, and α ∈ A₁.
class WeightingMonoid {
 public:
  using Element = std::int64_t;

  static WeightingMonoid trivial() { return WeightingMonoid(MonoidKind::Trivial, 0); }
  static WeightingMonoid nat() { return WeightingMonoid(MonoidKind::Nat, 0); }
  static WeightingMonoid nat_stable() { return WeightingMonoid(MonoidKind::NatStable, 0); }
  static WeightingMonoid nat_mod(std::int64_t gamma);
  static WeightingMonoid integers_unchecked() {
    return WeightingMonoid(MonoidKind::Integers, 0);
  }

  /// Parses "trivial", "nat", "nat-stable", "nat-mod:γ", and (only with
  /// allow_unchecked) "int".
  static WeightingMonoid parse(std::string_view spec, bool allow_unchecked = false);

  MonoidKind kind() const { return kind_; }
  std::int64_t gamma() const { return gamma_; }
  std::string name() const;

  /// True for the monoids whose underlying set is ℕ (Nat, NatStable).
  bool is_natural() const { return kind_ == MonoidKind::Nat || kind_ == MonoidKind::NatStable; }

  Element zero() const { return 0; }
  Element alpha() const;
  bool contains(Element a) const;
  bool in_A1(Element a) const;
  Element add(Element a, Element b) const;
  /// n·a for n >= 0.
  Element times(Element a, std::int64_t n) const;

  /// Smallest element of A₁ in the representation order (used by samplers).
  Element min_A1() const;
  /// Largest representable element not exceeding `bound`.
  Element clamp(Element bound) const;

  MonoidGroupElement to_group(Element a) const;

  bool operator==(const WeightingMonoid&) const = default;

 private:
  WeightingMonoid(MonoidKind k, std::int64_t g) : kind_(k), gamma_(g) {}

  MonoidKind kind_;
  std::int64_t gamma_;
};

}  // namespace tropocat
