#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <queue>

#include "support.hpp"
#include "tropocat/error.hpp"
#include "tropocat/axioms.hpp"
#include "tropocat/finset.hpp"
#include "tropocat/weighted_cospan.hpp"

using namespace tropocat;
using testsupport::random_permutation;

namespace {

// Equivalence closure by repeated relaxation over a boolean matrix.
std::vector<std::vector<bool>> closure(std::size_t n,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) r[x][x] = true;
  for (auto [a, b] : pairs) r[a][b] = r[b][a] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

struct RandomPresented {
  PresentedSet set;
  std::vector<std::size_t> members;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

RandomPresented random_presented(Rng& rng) {
  RandomPresented out;
  const std::size_t l = 1 + rng.below(6);
  for (std::size_t x = 0; x < l; ++x) {
    if (rng.chance(3, 4)) out.members.push_back(x);
  }
  if (out.members.empty()) out.members.push_back(rng.below(l));
  const std::size_t k = rng.below(4);
  for (std::size_t i = 0; i < k; ++i) {
    out.pairs.emplace_back(out.members[rng.below(out.members.size())],
                           out.members[rng.below(out.members.size())]);
  }
  out.set = PresentedSet(l, out.members, out.pairs);
  return out;
}

Cospan random_cospan(Rng& rng, std::size_t max_classes) {
  const std::size_t left = rng.below(4), right = rng.below(4);
  const std::size_t classes = 1 + rng.below(max_classes);
  std::vector<std::size_t> lm(left), rm(right);
  for (auto& x : lm) x = rng.below(classes);
  for (auto& x : rm) x = rng.below(classes);
  return Cospan::from_classes(left, right, classes, lm, rm);
}

// Cospans with discrete apex, isomorphic iff some class bijection matches
// both feet maps.
bool brute_cospan_iso(const Cospan& a, const Cospan& b) {
  if (a.left_size() != b.left_size() || a.right_size() != b.right_size()) return false;
  const auto ca = a.apex().classes(), cb = b.apex().classes();
  if (ca.size() != cb.size()) return false;
  std::vector<std::size_t> perm(ca.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto index_of = [](const std::vector<std::size_t>& cls, std::size_t rep) {
    return static_cast<std::size_t>(std::find(cls.begin(), cls.end(), rep) - cls.begin());
  };
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.left_size() && ok; ++x) {
      ok = perm[index_of(ca, a.left_map()[x])] == index_of(cb, b.left_map()[x]);
    }
    for (std::size_t x = 0; x < a.right_size() && ok; ++x) {
      ok = perm[index_of(ca, a.right_map()[x])] == index_of(cb, b.right_map()[x]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Cospan permute_classes(const Cospan& c, const std::vector<std::size_t>& perm) {
  const auto cls = c.apex().classes();
  auto idx = [&](std::size_t rep) {
    return perm[static_cast<std::size_t>(std::find(cls.begin(), cls.end(), rep) - cls.begin())];
  };
  std::vector<std::size_t> lm, rm;
  for (auto x : c.left_map()) lm.push_back(idx(x));
  for (auto x : c.right_map()) rm.push_back(idx(x));
  return Cospan::from_classes(c.left_size(), c.right_size(), cls.size(), lm, rm);
}

// Independent weighted composite: build the class graph and take BFS
// components; each component's label is Σ labels + α·(edges - nodes + 1).
WeightedCospan oracle_compose(const WeightedCospan& w1, const WeightedCospan& w2,
                              const WeightingMonoid& m) {
  const std::size_t n1 = w1.class_count(), n = n1 + w2.class_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t b = 0; b < w1.right_size(); ++b) {
    const std::size_t x = w1.right_map()[b], y = n1 + w2.left_map()[b];
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::vector<WeightingMonoid::Element> labels;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != SIZE_MAX) continue;
    const std::size_t id = labels.size();
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = id;
    std::int64_t nodes = 0, half = 0;
    WeightingMonoid::Element label = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      ++nodes;
      label = m.add(label, v < n1 ? w1.labels()[v] : w2.labels()[v - n1]);
      for (auto u : adj[v]) {
        ++half;
        if (comp[u] == SIZE_MAX) {
          comp[u] = id;
          q.push(u);
        }
      }
    }
    labels.push_back(m.add(label, m.times(m.alpha(), half / 2 - nodes + 1)));
  }
  std::vector<std::size_t> lm, rm;
  for (auto x : w1.left_map()) lm.push_back(comp[x]);
  for (auto y : w2.right_map()) rm.push_back(comp[n1 + y]);
  return WeightedCospan(w1.left_size(), w2.right_size(), lm, rm, labels);
}

}  // namespace

TEST(PresentedSet, EmptyGluingIsDisjointUnion) {
  const std::size_t p_members[] = {0, 1};
  const std::size_t q_members[] = {0};
  PresentedSet p(2, p_members), q(1, q_members);
  auto g = glue(p, q, {}, {});
  EXPECT_EQ(g.universe(), 3u);
  EXPECT_EQ(g.class_count(), 3u);
}

TEST(PresentedSet, SinglePointGluing) {
  auto p = PresentedSet::discrete(1), q = PresentedSet::discrete(1);
  const std::size_t i[] = {0}, j[] = {0};
  auto g = glue(p, q, i, j);
  EXPECT_EQ(g.class_count(), 1u);
  EXPECT_EQ(g.find(1), g.find(0));
}

TEST(PresentedSet, CrossedGluing) {
  auto p = PresentedSet::discrete(2), q = PresentedSet::discrete(2);
  const std::size_t i[] = {0, 1}, j[] = {1, 0};
  auto g = glue(p, q, i, j);
  EXPECT_EQ(g.class_count(), 2u);
  EXPECT_EQ(g.find(0), g.find(3));
  EXPECT_EQ(g.find(1), g.find(2));
  EXPECT_NE(g.find(0), g.find(1));
}

TEST(PresentedSet, GlueMatchesClosureOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = random_presented(rng), q = random_presented(rng);
    const std::size_t a = rng.below(4);
    std::vector<std::size_t> i(a), j(a);
    for (auto& x : i) x = p.members[rng.below(p.members.size())];
    for (auto& x : j) x = q.members[rng.below(q.members.size())];
    const auto g = glue(p.set, q.set, i, j);

    const std::size_t shift = p.set.universe(), n = shift + q.set.universe();
    auto pairs = p.pairs;
    for (auto [x, y] : q.pairs) pairs.emplace_back(shift + x, shift + y);
    for (std::size_t k = 0; k < a; ++k) pairs.emplace_back(i[k], shift + j[k]);
    const auto r = closure(n, pairs);

    std::vector<std::size_t> members = p.members;
    for (auto x : q.members) members.push_back(shift + x);
    for (std::size_t x = 0; x < n; ++x) {
      const bool in = std::find(members.begin(), members.end(), x) != members.end();
      ASSERT_EQ(g.contains(x), in);
    }
    for (auto x : members)
      for (auto y : members) ASSERT_EQ(g.find(x) == g.find(y), r[x][y]) << trial;
  }
}

TEST(PresentedSet, GluingIsStrictlyAssociative) {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_presented(rng), q = random_presented(rng), s = random_presented(rng);
    std::vector<std::size_t> i1{p.members[0]}, j1{q.members.back()};
    std::vector<std::size_t> i2{q.members[0]}, j2{s.members.back()};
    auto left = glue(glue(p.set, q.set, i1, j1), s.set,
                     std::vector<std::size_t>{p.set.universe() + i2[0]}, j2);
    auto right = glue(p.set, glue(q.set, s.set, i2, j2), i1, j1);
    ASSERT_EQ(left, right);
  }
}

TEST(Cospan, ComposeCountsClassesAndHits) {
  auto c1 = Cospan::from_classes(1, 2, 1, {0}, {0, 0});
  auto c2 = Cospan::from_classes(2, 0, 1, {0, 0}, {});
  auto c = compose(c1, c2);
  EXPECT_EQ(c.class_count(), 1u);
  EXPECT_EQ(c.left_size(), 1u);
  EXPECT_EQ(c.right_size(), 0u);
  EXPECT_THROW(compose(c2, c1), Error);
}

TEST(Cospan, CanonicalizeIdempotentAndLabelInvariant) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto c = random_cospan(rng, 4);
    auto k = canonicalize(c);
    EXPECT_EQ(canonicalize(k), k);
    auto shuffled = permute_classes(c, random_permutation(rng, c.class_count()));
    EXPECT_EQ(canonicalize(shuffled), k);
  }
}

TEST(Cospan, CanonicalFormDecidesIsomorphism) {
  Rng rng(14);
  for (int trial = 0; trial < 400; ++trial) {
    auto a = random_cospan(rng, 6);
    auto b = rng.chance(1, 2) ? permute_classes(a, random_permutation(rng, a.class_count()))
                              : random_cospan(rng, 6);
    ASSERT_EQ(canonicalize(a) == canonicalize(b), brute_cospan_iso(a, b)) << trial;
  }
}

TEST(Cospan, Classify) {
  auto id = classify(Cospan::identity(1));
  EXPECT_TRUE(id.is_reduced);
  EXPECT_TRUE(id.is_positive_boundary);
  EXPECT_TRUE(id.is_connected);
  EXPECT_FALSE(classify(Cospan::identity(2)).is_connected);

  auto closed = classify(Cospan::from_classes(0, 0, 1, {}, {}));
  EXPECT_FALSE(closed.is_reduced);
  EXPECT_TRUE(closed.is_connected);
  EXPECT_EQ(closed.closed_classes.size(), 1u);

  auto mixed = classify(Cospan::from_classes(1, 1, 2, {0}, {0}));
  EXPECT_FALSE(mixed.is_reduced);
  EXPECT_FALSE(mixed.is_connected);
  EXPECT_EQ(mixed.closed_classes.size(), 1u);
}

TEST(Cospan, SymmetryIsInvolution) {
  auto s = compose(symmetry(2, 3), symmetry(3, 2));
  EXPECT_EQ(canonicalize(s), canonicalize(Cospan::identity(5)));
}

TEST(WeightedCospan, BettiOfClass) {
  EXPECT_EQ(b1_of_class(1, 2), 0);
  EXPECT_EQ(b1_of_class(2, 2), 1);
  EXPECT_EQ(b1_of_class(3, 2), 2);
  EXPECT_THROW(b1_of_class(0, 0), Error);
  EXPECT_THROW(b1_of_class(0, 2), Error);
}

TEST(WeightedCospan, ComposeExample) {
  const auto m = WeightingMonoid::nat_stable();
  WeightedCospan w1(1, 2, {0}, {0, 0}, {1});
  WeightedCospan w2(2, 0, {0, 0}, {}, {0});
  auto c = compose_weighted(w1, w2, m);
  EXPECT_EQ(c, WeightedCospan(1, 0, {0}, {}, {2}));
  EXPECT_EQ(euler_characteristic(w1, m) + euler_characteristic(w2, m), euler_characteristic(c, m));
  EXPECT_EQ(euler_characteristic(c, m), -3);
}

TEST(WeightedCospan, PantsAlongOneCircle) {
  const auto m = WeightingMonoid::nat_stable();
  WeightedCospan p1(2, 1, {0, 0}, {0}, {0});
  WeightedCospan p2(1, 2, {0}, {0, 0}, {0});
  auto c = compose_weighted(p1, p2, m);
  EXPECT_EQ(c, WeightedCospan(2, 2, {0, 0}, {0, 0}, {0}));
}

TEST(WeightedCospan, IdentityLaw) {
  const auto m = WeightingMonoid::nat_stable();
  Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_weighted_cospan(rng, m, rng.below(4), rng.below(4), 3, 2, false);
    EXPECT_EQ(compose_weighted(WeightedCospan::identity(w.left_size()), w, m), w);
    EXPECT_EQ(compose_weighted(w, WeightedCospan::identity(w.right_size()), m), w);
  }
}

TEST(WeightedCospan, ComposeMatchesComponentOracle) {
  for (auto m : {WeightingMonoid::nat_stable(), WeightingMonoid::nat(), WeightingMonoid::trivial(),
                 WeightingMonoid::nat_mod(3)}) {
    Rng rng(16);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t a = rng.below(4), b = rng.below(4), c = rng.below(4);
      auto w1 = random_weighted_cospan(rng, m, a, b, 4, 2, rng.chance(1, 4));
      auto w2 = random_weighted_cospan(rng, m, b, c, 4, 2, rng.chance(1, 4));
      ASSERT_EQ(compose_weighted(w1, w2, m), oracle_compose(w1, w2, m)) << m.name() << " " << trial;
    }
  }
}

TEST(WeightedCospan, CanonicalUnderClassRelabelling) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng.below(4);
    const std::size_t l = rng.below(4), r = rng.below(4);
    std::vector<std::size_t> lm(l), rm(r);
    for (auto& x : lm) x = rng.below(k);
    for (auto& x : rm) x = rng.below(k);
    std::vector<WeightingMonoid::Element> labels(k);
    for (auto& x : labels) x = rng.between(0, 3);
    auto perm = random_permutation(rng, k);
    std::vector<std::size_t> lm2, rm2;
    std::vector<WeightingMonoid::Element> labels2(k);
    for (auto x : lm) lm2.push_back(perm[x]);
    for (auto x : rm) rm2.push_back(perm[x]);
    for (std::size_t c = 0; c < k; ++c) labels2[perm[c]] = labels[c];
    EXPECT_EQ(WeightedCospan(l, r, lm, rm, labels), WeightedCospan(l, r, lm2, rm2, labels2));
  }
}

TEST(WeightedCospan, EulerExamples) {
  const auto m = WeightingMonoid::nat();
  EXPECT_EQ(euler_characteristic(WeightedCospan::closed({3}), m), -4);
  EXPECT_EQ(euler_characteristic(WeightedCospan(1, 1, {0}, {0}, {0}), m), 0);
  EXPECT_THROW(euler_characteristic(WeightedCospan::closed({0}), WeightingMonoid::nat_mod(2)), Error);
}

TEST(WeightedCospan, PbGenus) {
  const auto m = WeightingMonoid::nat_stable();
  EXPECT_EQ(pb_genus_functor(WeightedCospan::identity(1), m).value, 0);
  WeightedCospan w(1, 2, {0}, {0, 0}, {1});
  EXPECT_EQ(pb_genus_functor(w, m).value, 2);
  EXPECT_EQ(pb_genus_positive(w, m), 2);
}

TEST(WeightedCospan, SplitReducedClosed) {
  WeightedCospan red(1, 1, {0}, {0}, {0});
  auto s = split_reduced_closed(red);
  EXPECT_EQ(s.reduced, red);
  EXPECT_TRUE(s.closed.empty());

  auto t = split_reduced_closed(WeightedCospan::closed({2, 1}));
  EXPECT_EQ(t.reduced.class_count(), 0u);
  EXPECT_EQ(t.closed, (std::vector<WeightingMonoid::Element>{1, 2}));
  EXPECT_EQ(join_reduced_closed(t.reduced, t.closed), WeightedCospan::closed({1, 2}));
}

TEST(WeightedCospan, Stability) {
  const auto m = WeightingMonoid::nat_stable();
  EXPECT_FALSE(is_stable(WeightedCospan(1, 0, {0}, {}, {0}), m));
  EXPECT_TRUE(is_stable(WeightedCospan(1, 0, {0}, {}, {1}), m));
  EXPECT_TRUE(is_stable(WeightedCospan(1, 1, {0}, {0}, {0}), m));
  EXPECT_FALSE(is_stable(WeightedCospan::closed({0}), m));
}

TEST(Monoid, ParseAndArithmetic) {
  EXPECT_EQ(WeightingMonoid::parse("nat-mod:3"), WeightingMonoid::nat_mod(3));
  EXPECT_THROW(WeightingMonoid::parse("int"), Error);
  EXPECT_NO_THROW(WeightingMonoid::parse("int", true));
  EXPECT_THROW(WeightingMonoid::parse("bogus"), Error);
  const auto m = WeightingMonoid::nat_mod(3);
  EXPECT_EQ(m.add(2, 2), 3);
  EXPECT_EQ(m.times(1, 10), 3);
  const auto t = WeightingMonoid::trivial();
  EXPECT_EQ(t.alpha(), 0);
  EXPECT_TRUE(t.in_A1(0));
  EXPECT_FALSE(WeightingMonoid::nat_stable().in_A1(0));
}
