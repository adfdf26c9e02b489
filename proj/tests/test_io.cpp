#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>

#include "support.hpp"
#include "tropocat/error.hpp"
#include "tropocat/json_io.hpp"
#include "tropocat/parallel.hpp"
#include "tropocat/rational.hpp"

using namespace tropocat;
using namespace testsupport;

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_pq_string(Rational(2)), "2/1");
  EXPECT_EQ(to_pq_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  auto list = parse_rational_list("1/2,1/4,1/4");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[1], Rational(1, 4));
}

TEST(Json, WeightedCospanRoundTrip) {
  Rng rng(51);
  const auto m = WeightingMonoid::nat_stable();
  for (int i = 0; i < 200; ++i) {
    auto w = random_weighted_cospan(rng, m, rng.below(4), rng.below(4), 3, 2, rng.chance(1, 3));
    EXPECT_EQ(weighted_cospan_from_json(Json::parse(to_json(w).dump())), w);
  }
  EXPECT_THROW(weighted_cospan_from_json(Json::parse(R"({"left": 1})")), Error);
}

TEST(Json, GraphRoundTrip) {
  Rng rng(52);
  for (int i = 0; i < 200; ++i) {
    const std::size_t V = 1 + rng.below(4);
    auto g = random_graph(rng, V, V + rng.below(3), 2);
    EXPECT_EQ(graph_from_json(to_json(g)), g);
    MetricGraph mg{g, random_coordinates(rng, g.edge_count())};
    auto back = metric_graph_from_json(Json::parse(to_json(mg).dump()));
    EXPECT_EQ(back.graph, mg.graph);
    EXPECT_EQ(back.lengths, mg.lengths);
  }
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": [], "edges": [[0, 1]]})")), Error);
}

TEST(Json, ChainsRoundTrip) {
  Rng rng(53);
  const auto m = WeightingMonoid::nat_stable();
  for (int i = 0; i < 100; ++i) {
    auto s = random_cut_sample(rng);
    auto f = cut_to_factorization(s.graph, s.cuts);
    EXPECT_EQ(factorization_from_json(Json::parse(to_json(f).dump())).pieces, f.pieces);

    auto n = random_nerve_chain(rng);
    auto nb = nerve_from_json(Json::parse(to_json(n).dump()));
    EXPECT_EQ(nb.objects, n.objects);
    EXPECT_EQ(nb.morphisms, n.morphisms);

    auto j = random_simplex(rng);
    auto jb = simplex_from_json(Json::parse(to_json(j).dump()));
    EXPECT_EQ(jb.graphs, j.graphs);
    EXPECT_EQ(jb.steps, j.steps);
    EXPECT_NO_THROW(jb.validate(m));
  }
}

TEST(Json, SuspendedPointFields) {
  SuspendedPoint p{{StableGraph({1}, {{0, 0}}), {1}}, Rational(1, 3), Rational(1, 4), 2};
  auto j = to_json(p);
  EXPECT_EQ(j["a"], "1/3");
  EXPECT_EQ(j["b"], "1/4");
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["point"]["lengths"][0], "1/1");
}

TEST(Parallel, EveryIndexRunsOnce) {
  for (const char* threads : {"1", "3", "8"}) {
    setenv("TROPOCAT_THREADS", threads, 1);
    EXPECT_EQ(worker_count(), static_cast<std::size_t>(std::atoi(threads)));
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
  unsetenv("TROPOCAT_THREADS");
  EXPECT_GE(worker_count(), 1u);
}

TEST(Parallel, ExceptionsPropagate) {
  setenv("TROPOCAT_THREADS", "4", 1);
  EXPECT_THROW(parallel_for(100, [](std::size_t i) {
                 if (i == 57) throw Error(ErrorCode::InvalidArgument, "boom");
               }),
               Error);
  unsetenv("TROPOCAT_THREADS");
}

TEST(Parallel, RngStreamsAreStable) {
  Rng a = Rng::for_trial(7, 3), b = Rng::for_trial(7, 3), c = Rng::for_trial(7, 4);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.between(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
}
