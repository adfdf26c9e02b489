#include "tropocat/monoid.hpp"

#include <algorithm>
#include <string>

#include "tropocat/error.hpp"

namespace tropocat {

WeightingMonoid WeightingMonoid::nat_mod(std::int64_t gamma) {
  if (gamma < 0) throw Error(ErrorCode::InvalidArgument, "nat-mod requires gamma >= 0");
  return WeightingMonoid(MonoidKind::NatMod, gamma);
}

WeightingMonoid WeightingMonoid::parse(std::string_view spec, bool allow_unchecked) {
  if (spec == "trivial") return trivial();
  if (spec == "nat") return nat();
  if (spec == "nat-stable") return nat_stable();
  if (spec == "int") {
    if (!allow_unchecked) {
      throw Error(ErrorCode::UnsupportedMonoid, "monoid 'int' requires the unchecked flag");
    }
    return integers_unchecked();
  }
  constexpr std::string_view prefix = "nat-mod:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::string rest(spec.substr(prefix.size()));
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::InvalidArgument, "bad gamma in '" + std::string(spec) + "'");
    }
    return nat_mod(std::stoll(rest));
  }
  throw Error(ErrorCode::UnsupportedMonoid, "unknown monoid '" + std::string(spec) + "'");
}

std::string WeightingMonoid::name() const {
  switch (kind_) {
    case MonoidKind::Trivial: return "trivial";
    case MonoidKind::Nat: return "nat";
    case MonoidKind::NatStable: return "nat-stable";
    case MonoidKind::NatMod: return "nat-mod:" + std::to_string(gamma_);
    case MonoidKind::Integers: return "int";
  }
  return "?";
}

WeightingMonoid::Element WeightingMonoid::alpha() const {
  switch (kind_) {
    case MonoidKind::Trivial: return 0;
    case MonoidKind::NatMod: return std::min<std::int64_t>(1, gamma_);
    default: return 1;
  }
}

bool WeightingMonoid::contains(Element a) const {
  switch (kind_) {
    case MonoidKind::Trivial: return a == 0;
    case MonoidKind::Nat:
    case MonoidKind::NatStable: return a >= 0;
    case MonoidKind::NatMod: return a >= 0 && a <= gamma_;
    case MonoidKind::Integers: return true;
  }
  return false;
}

bool WeightingMonoid::in_A1(Element a) const {
  if (!contains(a)) return false;
  return kind_ == MonoidKind::NatStable ? a >= 1 : true;
}

WeightingMonoid::Element WeightingMonoid::add(Element a, Element b) const {
  switch (kind_) {
    case MonoidKind::Trivial: return 0;
    case MonoidKind::NatMod: return std::min(a + b, gamma_);
    default: return a + b;
  }
}

WeightingMonoid::Element WeightingMonoid::times(Element a, std::int64_t n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative multiple in a monoid");
  switch (kind_) {
    case MonoidKind::Trivial: return 0;
    case MonoidKind::NatMod: return n == 0 ? 0 : std::min(a * n, gamma_);
    default: return a * n;
  }
}

WeightingMonoid::Element WeightingMonoid::min_A1() const {
  return kind_ == MonoidKind::NatStable ? 1 : 0;
}

WeightingMonoid::Element WeightingMonoid::clamp(Element bound) const {
  switch (kind_) {
    case MonoidKind::Trivial: return 0;
    case MonoidKind::NatMod: return std::min(bound, gamma_);
    default: return bound;
  }
}

MonoidGroupElement WeightingMonoid::to_group(Element a) const {
  switch (kind_) {
    case MonoidKind::Nat:
    case MonoidKind::NatStable:
    case MonoidKind::Integers: return {a};
    default: return {0};
  }
}

}  // namespace tropocat
