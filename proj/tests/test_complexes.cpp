#include <gtest/gtest.h>

#include "support.hpp"
#include "tropocat/error.hpp"
#include "tropocat/graph_complex.hpp"
#include "tropocat/linalg.hpp"
#include "tropocat/tropical_complex.hpp"

using namespace tropocat;
using namespace testsupport;

namespace {

std::vector<std::vector<Rational>> dense(const SparseRationalMatrix& m) {
  std::vector<std::vector<Rational>> d(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

SparseRationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int density_pct,
                                   bool fractions) {
  std::vector<SparseRationalMatrix::Entry> entries;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.below(100) < static_cast<std::uint64_t>(density_pct)) {
        Rational v(static_cast<long>(rng.between(-5, 5)), fractions ? 1 + rng.below(4) : 1UL);
        v.canonicalize();
        entries.push_back({i, j, v});
      }
  return SparseRationalMatrix(rows, cols, entries);
}

SparseRationalMatrix from_dense(const std::vector<std::vector<Rational>>& d) {
  std::vector<SparseRationalMatrix::Entry> entries;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j) entries.push_back({i, j, d[i][j]});
  return SparseRationalMatrix(d.size(), d.empty() ? 0 : d[0].size(), entries);
}

StableGraph k4() {
  return StableGraph({0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST(Linalg, TrivialRanks) {
  EXPECT_EQ(rank(SparseRationalMatrix(5, 7, {})), 0u);
  std::vector<SparseRationalMatrix::Entry> id;
  for (std::size_t i = 0; i < 9; ++i) id.push_back({i, i, 1});
  EXPECT_EQ(rank(SparseRationalMatrix(9, 9, id)), 9u);
}

TEST(Linalg, ConstructionSumsAndDropsZeros) {
  SparseRationalMatrix m(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 1, Rational(1, 2)}, {1, 1, Rational(1, 2)}});
  EXPECT_EQ(m.nonzeros(), 1u);
  EXPECT_EQ(m.at(1, 1), 1);
  EXPECT_EQ(m.at(0, 0), 0);
  EXPECT_THROW(SparseRationalMatrix(2, 2, {{2, 0, 1}}), Error);
}

TEST(Linalg, LowRankProduct) {
  Rng rng(31);
  auto a = random_matrix(rng, 50, 30, 100, false);
  auto b = random_matrix(rng, 30, 50, 100, false);
  auto p = multiply(a, b);
  EXPECT_EQ(p.rows(), 50u);
  EXPECT_EQ(p.cols(), 50u);
  const auto d = dense(p);
  EXPECT_EQ(dense_rank(d), 30u);
  EXPECT_EQ(rank(p), 30u);
  EXPECT_THROW(multiply(a, a), Error);
}

TEST(Linalg, ProductMatchesDense) {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(6), 40, true);
    auto b = random_matrix(rng, a.cols(), 1 + rng.below(6), 40, true);
    auto da = dense(a), db = dense(b);
    std::vector<std::vector<Rational>> dp(a.rows(), std::vector<Rational>(b.cols(), 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) dp[i][j] += da[i][k] * db[k][j];
    EXPECT_EQ(multiply(a, b), from_dense(dp));
  }
}

TEST(Linalg, RankMatchesDenseOracle) {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng.below(12), c = 1 + rng.below(12);
    auto m = random_matrix(rng, r, c, static_cast<int>(10 + rng.below(60)), rng.chance(1, 2));
    if (rng.chance(1, 3)) {
      auto k = random_matrix(rng, c, 1 + rng.below(4), 60, false);
      m = multiply(random_matrix(rng, r, k.rows(), 60, true), k);
    }
    const auto expected = dense_rank(dense(m));
    ASSERT_EQ(rank(m), expected) << trial;
    ASSERT_EQ(rank(m.transpose()), expected);
  }
}

TEST(Linalg, RankInvariantUnderPermutation) {
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(rng, 8, 10, 30, true);
    auto rp = random_permutation(rng, 8), cp = random_permutation(rng, 10);
    std::vector<SparseRationalMatrix::Entry> e;
    for (const auto& x : m.entries()) e.push_back({rp[x.row], cp[x.col], x.value});
    EXPECT_EQ(rank(SparseRationalMatrix(8, 10, e)), rank(m));
  }
}

TEST(Linalg, Betti) {
  EXPECT_EQ(betti({2, 3, 1}, {0, 0, 0}), (std::vector<std::int64_t>{2, 3, 1}));
  EXPECT_EQ(betti({1, 2, 1}, {0, 1, 1}), (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_THROW(betti({1, 2}, {0}), Error);
  EXPECT_THROW(betti({1, 1}, {0, 2}), Error);
}

TEST(DeltaComplex, BoundarySquaresToZero) {
  for (std::int64_t g : {2, 3, 4}) {
    auto d = build_complex(g);
    EXPECT_NO_THROW(d.complex.validate());
    EXPECT_TRUE(d.complex.boundary_squares_to_zero()) << g;
    EXPECT_EQ(d.complex.min_degree, -1);
    EXPECT_EQ(d.complex.max_degree(), 3 * g - 4);
  }
}

TEST(DeltaComplex, DegenerateCellsMatchBruteForce) {
  for (std::int64_t g : {2, 3}) {
    auto cells = generator_cells(g);
    EXPECT_EQ(cells.size(), g == 2 ? 6u : 41u);
    std::vector<std::size_t> expected_dims(3 * g - 2, 0);
    expected_dims[0] = 1;
    for (const auto& c : cells) {
      const bool odd = brute_has_odd_automorphism(c.graph);
      EXPECT_EQ(c.degenerate, odd);
      EXPECT_EQ(c.degree, static_cast<int>(c.graph.edge_count()) - 1);
      if (!odd) ++expected_dims[c.graph.edge_count()];
    }
    EXPECT_EQ(build_complex(g).complex.dims, expected_dims) << g;
  }
}

TEST(DeltaComplex, ReducedHomology) {
  for (const auto& row : reduced_homology(2)) EXPECT_EQ(row.betti, 0) << row.degree;
  for (const auto& row : reduced_homology(3)) EXPECT_EQ(row.betti, row.degree == 5 ? 1 : 0) << row.degree;
  for (const auto& row : reduced_homology(4)) EXPECT_EQ(row.betti, 0) << row.degree;
}

TEST(DeltaComplex, EulerCharacteristicMatchesHomology) {
  for (std::int64_t g : {2, 3, 4}) {
    EXPECT_EQ(delta_euler_characteristic(g), euler_characteristic(reduced_homology(g)));
  }
}

TEST(DeltaComplex, ReferenceOrderingDoesNotChangeHomology) {
  const auto base = build_complex(3).complex.homology();
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    DeltaOptions opt;
    opt.reference_seed = seed;
    auto d = build_complex(3, Budget::unlimited(), opt);
    EXPECT_TRUE(d.complex.boundary_squares_to_zero());
    auto h = d.complex.homology();
    ASSERT_EQ(h.size(), base.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      EXPECT_EQ(h[i].rank, base[i].rank);
      EXPECT_EQ(h[i].betti, base[i].betti);
    }
  }
}

TEST(DeltaComplex, StrategiesGiveSameComplex) {
  DeltaOptions direct;
  direct.strategy = EnumerationStrategy::Direct;
  auto a = build_complex(3, Budget::unlimited(), direct);
  auto b = build_complex(3);
  EXPECT_EQ(a.basis, b.basis);
  ASSERT_EQ(a.complex.boundaries.size(), b.complex.boundaries.size());
  for (std::size_t k = 0; k < a.complex.boundaries.size(); ++k) {
    EXPECT_EQ(a.complex.boundaries[k], b.complex.boundaries[k]);
  }
}

TEST(GraphComplex, BoundarySquaresToZero) {
  for (std::int64_t g : {2, 3, 4}) {
    auto gc = build_gc(g);
    EXPECT_NO_THROW(gc.complex.validate());
    EXPECT_TRUE(gc.complex.boundary_squares_to_zero()) << g;
  }
}

TEST(GraphComplex, GeneratorsAreLoopFreeTrivalentOrMore) {
  for (std::int64_t g : {2, 3}) {
    for (const auto& G : gc_graphs(g)) {
      EXPECT_EQ(G.first_betti(), g);
      for (std::size_t k = 0; k < G.edge_count(); ++k) EXPECT_FALSE(G.is_loop(k));
      for (auto v : G.valences()) EXPECT_GE(v, 3u);
    }
  }
}

TEST(GraphComplex, K4Class) {
  for (const auto& row : gc_homology(2)) EXPECT_EQ(row.betti, 0);
  for (const auto& row : gc_homology(3)) EXPECT_EQ(row.betti, row.degree == 6 ? 1 : 0);
  auto gc = build_gc(3);
  const auto& top = gc.basis[6];
  EXPECT_NE(std::find(top.begin(), top.end(), canonical_graph(k4())), top.end());
  EXPECT_FALSE(brute_has_odd_automorphism(k4()));
}

TEST(DualPipeline, BettiNumbersAgree) {
  for (std::int64_t g : {2, 3, 4}) {
    auto delta = reduced_homology(g);
    auto gc = gc_homology(g);
    for (const auto& row : gc) {
      auto it = std::find_if(delta.begin(), delta.end(),
                             [&](const HomologyRow& r) { return r.degree == row.degree - 1; });
      const std::int64_t d = it == delta.end() ? 0 : it->betti;
      EXPECT_EQ(d, row.betti) << "g=" << g << " e=" << row.degree;
    }
  }
}
