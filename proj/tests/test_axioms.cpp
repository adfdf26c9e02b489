#include <gtest/gtest.h>

#include <set>

#include "tropocat/axioms.hpp"
#include "tropocat/error.hpp"
#include "tropocat/json_io.hpp"

using namespace tropocat;

namespace {

// Every assignment of feet to classes 0..k-1 with every labelling, kept when
// stable and every class exists; canonical forms collected in a set.
std::set<WeightedCospan> brute_hom(const WeightingMonoid& m, std::size_t left, std::size_t right,
                                   std::size_t max_apex, std::int64_t max_label) {
  std::set<WeightedCospan> out;
  const std::size_t feet = left + right;
  for (std::size_t k = 0; k <= max_apex; ++k) {
    if (k == 0 && feet > 0) continue;
    std::size_t maps = 1, labellings = 1;
    for (std::size_t f = 0; f < feet; ++f) maps *= k;
    for (std::size_t c = 0; c < k; ++c) labellings *= static_cast<std::size_t>(max_label + 1);
    for (std::size_t code = 0; code < maps; ++code) {
      std::vector<std::size_t> lm(left), rm(right);
      std::size_t x = code;
      for (auto& v : lm) { v = x % k; x /= k; }
      for (auto& v : rm) { v = x % k; x /= k; }
      for (std::size_t lcode = 0; lcode < labellings; ++lcode) {
        std::vector<WeightingMonoid::Element> labels(k);
        std::size_t y = lcode;
        bool ok = true;
        for (auto& l : labels) {
          l = static_cast<std::int64_t>(y % static_cast<std::size_t>(max_label + 1));
          y /= static_cast<std::size_t>(max_label + 1);
          ok = ok && m.contains(l);
        }
        if (!ok) continue;
        WeightedCospan w(left, right, lm, rm, labels);
        if (is_stable(w, m)) out.insert(w);
      }
    }
  }
  return out;
}

TrialConfig small(std::uint64_t seed, std::size_t trials = 500) {
  TrialConfig c;
  c.seed = seed;
  c.trials = trials;
  return c;
}

}  // namespace

TEST(Axioms, EnumerationOfHomSetsMatchesBruteForce) {
  for (auto m : {WeightingMonoid::nat_stable(), WeightingMonoid::trivial(), WeightingMonoid::nat(),
                 WeightingMonoid::nat_mod(2)}) {
    for (std::size_t l = 0; l <= 2; ++l) {
      for (std::size_t r = 0; r + l <= 3; ++r) {
        auto lib = all_weighted_cospans(m, l, r, 3, 1);
        std::set<WeightedCospan> unique(lib.begin(), lib.end());
        EXPECT_EQ(unique.size(), lib.size()) << m.name();
        EXPECT_EQ(unique, brute_hom(m, l, r, 3, 1)) << m.name() << " " << l << "->" << r;
      }
    }
  }
}

TEST(Axioms, SamplersProduceValidStableMorphisms) {
  for (auto m : {WeightingMonoid::nat_stable(), WeightingMonoid::trivial(), WeightingMonoid::nat_mod(3)}) {
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
      auto w = random_weighted_cospan(rng, m, rng.below(4), rng.below(4), 3, 2, i % 2 == 0);
      EXPECT_TRUE(is_stable(w, m));
      EXPECT_TRUE(has_valid_labels(w, m));
      if (i % 2 == 0) {
        EXPECT_FALSE(split_reduced_closed(w).closed.empty());
      }
      auto c = random_connected(rng, m, rng.below(4), rng.below(4), 2);
      EXPECT_EQ(c.class_count(), 1u);
    }
  }
}

TEST(Axioms, ChecksPassOnSupportedMonoids) {
  for (auto m : {WeightingMonoid::nat_stable(), WeightingMonoid::trivial()}) {
    auto cfg = small(5);
    cfg.max_label = 2;
    for (auto r : {check_associativity(cfg, m), check_axiom_decomposition(cfg, m),
                   check_axiom_product(cfg, m), check_surgery_diagrams(cfg, m),
                   check_pb_functoriality(cfg, m)}) {
      EXPECT_TRUE(r.passed()) << r.check << " " << m.name();
      EXPECT_EQ(r.random_trials, 500u);
    }
  }
  EXPECT_TRUE(check_euler_additivity(small(5), WeightingMonoid::nat()).passed());
}

TEST(Axioms, ExhaustiveSweepRunsInRange) {
  auto cfg = small(1, 10);
  cfg.max_label = 1;
  cfg.max_feet = 2;
  auto r = check_associativity(cfg, WeightingMonoid::nat_stable());
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.exhaustive_cases, 0u);
  cfg.max_label = 2;
  EXPECT_EQ(check_associativity(cfg, WeightingMonoid::nat_stable()).exhaustive_cases, 0u);
}

TEST(Axioms, ConfigValidation) {
  auto cfg = small(1);
  EXPECT_NO_THROW(cfg.validate());
  cfg.exhaustive = true;
  cfg.max_label = 2;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.max_label = 1;
  EXPECT_NO_THROW(cfg.validate());
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Axioms, ReportsAreDeterministicInSeed) {
  const auto m = WeightingMonoid::nat_stable();
  auto a = to_json(check_axiom_product(small(9, 300), m));
  auto b = to_json(check_axiom_product(small(9, 300), m));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Axioms, ClosedDecompositionExamples) {
  const auto m = WeightingMonoid::nat_stable();
  EXPECT_TRUE(closed_decomposition_holds(WeightedCospan::closed({1, 2}), m));
  EXPECT_TRUE(closed_decomposition_holds(WeightedCospan::closed({}), m));
  auto split = split_reduced_closed(WeightedCospan::closed({1, 2}));
  EXPECT_EQ(split.closed, (std::vector<WeightingMonoid::Element>{1, 2}));
}

TEST(Axioms, SurgeryOnIdentityCylinder) {
  const auto m = WeightingMonoid::nat_stable();
  EXPECT_TRUE(surgery_diagram_holds(1, WeightedCospan::identity(1), 0, 0, m));
  EXPECT_TRUE(surgery_diagram_holds(1, WeightedCospan(2, 2, {0, 0}, {0, 0}, {0}), 1, 1, m));
  EXPECT_TRUE(surgery_diagram_holds(2, WeightedCospan(2, 0, {0, 0}, {}, {0}), 0, 0, m));
  EXPECT_TRUE(surgery_diagram_holds(3, WeightedCospan(1, 3, {0}, {0, 0, 0}, {2}), 1, 1, m));
  EXPECT_THROW(surgery_diagram_holds(4, WeightedCospan::identity(1), 0, 0, m), Error);
  EXPECT_EQ(surgery_P(), WeightedCospan(1, 2, {0}, {0, 0}, {0}));
  EXPECT_EQ(surgery_T(m).labels(), std::vector<WeightingMonoid::Element>{m.alpha()});
}

TEST(Axioms, ReplayReevaluatesStoredInputs) {
  const auto m = WeightingMonoid::nat_stable();
  Counterexample c;
  c.property = "associativity";
  c.inputs = {WeightedCospan::identity(1), WeightedCospan(1, 2, {0}, {0, 0}, {1}),
              WeightedCospan(2, 0, {0, 0}, {}, {0})};
  EXPECT_TRUE(replay(c, m, 2));
  c.property = "euler_additivity";
  EXPECT_TRUE(replay(c, WeightingMonoid::nat(), 2));
  c.property = "no-such-property";
  EXPECT_THROW(replay(c, m, 2), Error);
}

TEST(Axioms, PullbackRejectsNonReducedProducts) {
  const auto m = WeightingMonoid::nat_stable();
  WeightedCospan a(1, 1, {0}, {0}, {0}), b(2, 0, {0, 0}, {}, {1});
  EXPECT_TRUE(pullback_holds(a, b, m, 2));
}
