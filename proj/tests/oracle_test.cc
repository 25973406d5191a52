#include "updom/oracle.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/corpus.h"
#include "updom/instance.h"

namespace updom {
namespace {

using testing::graph_from_edges;

Graph gen(const std::string& text) { return generate(parse_instance_spec(text)); }
Graph C4() { return graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

std::set<std::vector<Vertex>> as_set(const Enumeration& e) {
  std::set<std::vector<Vertex>> out;
  for (const VertexSet& s : e.sets) out.insert(std::vector<Vertex>(s.begin(), s.end()));
  return out;
}

TEST(EnumerateTest, Examples) {
  const Enumeration k3 = enumerate_minimal_dominating(gen("complete:3"));
  EXPECT_EQ(k3.sets, (std::vector<VertexSet>{{0}, {1}, {2}}));
  const Enumeration c4 = enumerate_minimal_dominating(C4());
  EXPECT_EQ(c4.sets, (std::vector<VertexSet>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(c4.total, 6u);
  EXPECT_FALSE(c4.truncated);
}

TEST(EnumerateTest, Truncation) {
  const Enumeration c4 = enumerate_minimal_dominating(C4(), 2);
  EXPECT_TRUE(c4.truncated);
  EXPECT_EQ(c4.sets, (std::vector<VertexSet>{{0, 1}, {0, 2}}));
  EXPECT_EQ(c4.total, 6u);
}

TEST(EnumerateTest, SizeLimit) {
  EXPECT_THROW(enumerate_minimal_dominating(gen("path:25")), UsageError);
  EXPECT_THROW(gamma_oracle(gen("path:25")), UsageError);
  EXPECT_THROW(alpha_oracle(gen("path:25")), UsageError);
  EXPECT_THROW(gamma_oracle(gen("path:10"), {.max_vertices = 8}), UsageError);
  EXPECT_THROW(gamma_oracle(gen("path:10"), {.max_vertices = 30}), UsageError);
}

TEST(EnumerateTest, MatchesBruteForceAndIsSorted) {
  for (const auto& [name, g] : testing::small_corpus(12)) {
    const Enumeration e = enumerate_minimal_dominating(g);
    EXPECT_EQ(as_set(e), testing::brute_minimal_dominating_sets(g)) << name;
    for (std::size_t i = 1; i < e.sets.size(); ++i) {
      const bool ordered = e.sets[i - 1].size() < e.sets[i].size() ||
                           (e.sets[i - 1].size() == e.sets[i].size() && e.sets[i - 1] < e.sets[i]);
      EXPECT_TRUE(ordered) << name;
    }
    for (const VertexSet& s : e.sets) EXPECT_TRUE(is_minimal_dominating(g, s)) << name;
  }
}

TEST(EnumerateTest, CountWithinExponentialBound) {
  for (const auto& [name, g] : testing::small_corpus(16)) {
    const double count = static_cast<double>(enumerate_minimal_dominating(g).total);
    EXPECT_LE(count, std::pow(1.7159, g.n())) << name;
  }
}

TEST(GammaOracleTest, Examples) {
  const GammaCertificate p4 = gamma_oracle(gen("path:4"));
  EXPECT_EQ(p4.gamma, 2);
  EXPECT_EQ(p4.provenance, Provenance::kOracle);
  EXPECT_TRUE(is_valid_certificate(gen("path:4"), p4));
  EXPECT_EQ(gamma_oracle(gen("flower_snark:3")).gamma, 5);
  // The three-vertex side is a minimal dominating set, so not 2.
  EXPECT_EQ(gamma_oracle(gen("complete_bipartite:2,3")).gamma, 3);
  EXPECT_EQ(gamma_oracle(gen("complete_bipartite:2,2")).gamma, 2);
  EXPECT_EQ(gamma_oracle(C4()).witness, (VertexSet{0, 1}));
}

TEST(GammaOracleTest, MatchesBruteForce) {
  for (const auto& [name, g] : testing::small_corpus(12)) {
    const GammaCertificate c = gamma_oracle(g);
    EXPECT_EQ(c.gamma, testing::brute_upper_domination(g)) << name;
    EXPECT_TRUE(is_valid_certificate(g, c)) << name;
  }
}

TEST(AlphaOracleTest, Examples) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(alpha_oracle(gen("complete:" + std::to_string(n))), 1);
  EXPECT_EQ(alpha_oracle(gen("cycle:5")), 2);
  EXPECT_EQ(alpha_oracle(gen("gen_petersen:5,2")), 4);
  EXPECT_EQ(alpha_oracle(graph_from_edges(5, {})), 5);
}

TEST(AlphaOracleTest, MatchesBruteForce) {
  for (const auto& [name, g] : testing::small_corpus(12)) {
    EXPECT_EQ(alpha_oracle(g), testing::brute_independence_number(g)) << name;
  }
}

// The OpenMP scans and the serial references must agree exactly.
TEST(ParallelKernelTest, MatchesSerialReference) {
  std::mt19937_64 rng(99);
  std::vector<Graph> graphs;
  for (const auto& [name, g] : testing::small_corpus(16)) graphs.push_back(g);
  for (int i = 0; i < 20; ++i) {
    graphs.push_back(testing::random_graph(rng, 10 + static_cast<Vertex>(rng() % 9), 0.25));
  }
  graphs.push_back(gen("knightkxk:4"));
  graphs.push_back(gen("flower_snark:5"));
  for (const Graph& g : graphs) {
    const Enumeration par = enumerate_minimal_dominating(g);
    const Enumeration ser = serial::enumerate_minimal_dominating(g);
    ASSERT_EQ(par.sets, ser.sets);
    EXPECT_EQ(par.total, ser.total);
    const Enumeration par_cap = enumerate_minimal_dominating(g, 5);
    const Enumeration ser_cap = serial::enumerate_minimal_dominating(g, 5);
    EXPECT_EQ(par_cap.sets, ser_cap.sets);
    EXPECT_EQ(par_cap.truncated, ser_cap.truncated);
    const GammaCertificate a = gamma_oracle(g);
    const GammaCertificate b = serial::gamma_oracle(g);
    EXPECT_EQ(a.gamma, b.gamma);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(alpha_oracle(g), serial::alpha_oracle(g));
  }
}

TEST(BoundsTest, RegularGraphs) {
  for (const auto& [name, g] : testing::small_corpus(14)) {
    int d = 0;
    if (!g.is_regular(&d)) continue;
    const BoundsReport b = bazgan_bounds(g);
    std::int64_t expected = std::max<std::int64_t>(b.alpha, g.n() / 2);
    if (d == 0) expected = b.alpha;
    if (b.corollary_applies) expected = std::min<std::int64_t>(expected, g.n() / 2);
    EXPECT_EQ(b.upper, expected) << name;
  }
}

TEST(BoundsTest, PetersenCubicCap) {
  const BoundsReport b = bazgan_bounds(gen("gen_petersen:7,2"));
  EXPECT_TRUE(b.corollary_applies);
  EXPECT_EQ(b.upper, 7);
  EXPECT_TRUE(bazgan_bounds(gen("gen_petersen:3,1")).corollary_applies);
  EXPECT_FALSE(bazgan_bounds(gen("complete:4")).corollary_applies);
}

TEST(BoundsTest, EdgelessGraph) {
  const BoundsReport b = bazgan_bounds(graph_from_edges(4, {}));
  EXPECT_EQ(b.alpha, 4);
  EXPECT_EQ(b.upper, 4);
}

// Irregular example worked by hand: star K_{1,3}, n = 4, D = 3, d = 1,
// alpha = 3: 4/2 + 3*2/6 - 2/3 = 7/3, floor 2, so upper = max(3, 2) = 3.
TEST(BoundsTest, StarByHand) {
  const BoundsReport b = bazgan_bounds(gen("complete_bipartite:1,3"));
  EXPECT_EQ(b.alpha, 3);
  EXPECT_EQ(b.upper, 3);
  EXPECT_EQ(b.min_degree, 1);
  EXPECT_EQ(b.max_degree, 3);
}

TEST(BoundsTest, SandwichOnCorpus) {
  for (const auto& [name, g] : testing::small_corpus(14)) {
    const BoundsReport b = bazgan_bounds(g);
    const std::int64_t gamma = gamma_oracle(g).gamma;
    EXPECT_EQ(b.lower, b.alpha);
    EXPECT_LE(b.lower, gamma) << name;
    EXPECT_LE(gamma, b.upper) << name;
    if (b.regular_alpha_cap_applies) {
      EXPECT_LE(b.alpha, g.n() / 2) << name;
    }
  }
}

TEST(GreedyTest, ProducesMinimalSets) {
  for (const auto& [name, g] : testing::small_corpus(16)) {
    EXPECT_TRUE(is_minimal_dominating(g, greedy_minimal_dominating(g))) << name;
  }
  EXPECT_EQ(greedy_minimal_dominating(gen("complete:4")), (VertexSet{0}));
}

}  // namespace
}  // namespace updom
