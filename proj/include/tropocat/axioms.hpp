#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tropocat/monoid.hpp"
#include "tropocat/parallel.hpp"
#include "tropocat/weighted_cospan.hpp"

namespace tropocat {

struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 10000;
  std::size_t max_feet = 3;
  std::size_t max_apex = 3;
  std::int64_t max_label = 2;
  /// Demands the exhaustive range; validate() rejects it for larger bounds.
  /// Within max_feet <= 3, max_apex <= 3, max_label <= 1 the exhaustive
  /// sweep runs in any case, alongside the random trials.
  bool exhaustive = false;

  /// Throws InvalidArgument unless trials >= 1, all bounds >= 1, and an
  /// exhaustive request lies within the exhaustive range.
  void validate() const;
  bool exhaustive_range() const { return max_feet <= 3 && max_apex <= 3 && max_label <= 1; }
};

/// A failing instance. `inputs` are the exact morphisms the property was
/// evaluated on, so replay() re-checks without any sampling.
struct Counterexample {
  std::string property;
  std::size_t trial = 0;  // trial index, or exhaustive case index
  int diagram = 0;        // surgery diagram 1..3, else 0
  std::vector<std::size_t> sizes;  // auxiliary object sizes used by the property
  std::vector<WeightedCospan> inputs;
  std::string detail;
};

struct Report {
  std::string check;
  std::string monoid;
  std::uint64_t seed = 0;
  std::size_t random_trials = 0;
  std::size_t exhaustive_cases = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

// Samplers -----------------------------------------------------------------

/// Feet are sent to a random class set; unhit classes become closed. With
/// force_closed at least one closed class is present. Labels are uniform in
/// [0, max_label] (clamped to the monoid), drawn from A₁ where stability
/// requires it.
WeightedCospan random_weighted_cospan(Rng& rng, const WeightingMonoid& monoid, std::size_t left,
                                      std::size_t right, std::size_t max_apex,
                                      std::int64_t max_label, bool force_closed);

/// A single-class cospan left -> * <- right.
WeightedCospan random_connected(Rng& rng, const WeightingMonoid& monoid, std::size_t left,
                                std::size_t right, std::int64_t max_label);

/// Every valid (stable where required) weighted cospan left -> right with at
/// most max_apex classes and labels in [0, max_label], each exactly once.
std::vector<WeightedCospan> all_weighted_cospans(const WeightingMonoid& monoid, std::size_t left,
                                                 std::size_t right, std::size_t max_apex,
                                                 std::int64_t max_label);

// Properties on explicit inputs ---------------------------------------------

bool associativity_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                         const WeightedCospan& w3, const WeightingMonoid& monoid);
bool euler_additivity_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                            const WeightingMonoid& monoid);
/// Functoriality of pb_genus_functor and, when both inputs are positive
/// boundary, agreement with the value computed inside A.
bool pb_functoriality_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                            const WeightingMonoid& monoid);
/// Hom(∅,∅) decomposes uniquely into connected closed morphisms.
bool closed_decomposition_holds(const WeightedCospan& w, const WeightingMonoid& monoid);
/// Hom^red × Hom(∅,∅) -> Hom is a bijection at w.
bool reduced_closed_bijection_holds(const WeightedCospan& w);
/// Pullback square at a pair of reduced morphisms (w1, w2): the product is
/// reduced, splits back uniquely, and the pair is the only lift of its
/// underlying cospans with labels <= max_label.
bool pullback_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                    const WeightingMonoid& monoid, std::int64_t max_label);
/// Surgery diagram `diagram` (1..3) for connected `morphism` with the
/// surgery data O = *, P = (* -> * <- * ⊔ *) labelled 0.
bool surgery_diagram_holds(int diagram, const WeightedCospan& morphism, std::size_t m,
                           std::size_t n, const WeightingMonoid& monoid);

/// Surgery data used above.
WeightedCospan surgery_P();
WeightedCospan surgery_T(const WeightingMonoid& monoid);

/// Re-evaluates a counterexample from its stored inputs.
bool replay(const Counterexample& c, const WeightingMonoid& monoid, std::int64_t max_label);

// Checks -------------------------------------------------------------------

Report check_associativity(const TrialConfig& cfg, const WeightingMonoid& monoid);
Report check_axiom_decomposition(const TrialConfig& cfg, const WeightingMonoid& monoid);
Report check_axiom_product(const TrialConfig& cfg, const WeightingMonoid& monoid);
Report check_surgery_diagrams(const TrialConfig& cfg, const WeightingMonoid& monoid);
Report check_euler_additivity(const TrialConfig& cfg, const WeightingMonoid& monoid);
Report check_pb_functoriality(const TrialConfig& cfg, const WeightingMonoid& monoid);

}  // namespace tropocat
