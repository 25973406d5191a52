#include "updom/instance.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "support/corpus.h"

namespace updom {
namespace {

Graph gen(const std::string& text) { return generate(parse_instance_spec(text)); }

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (Vertex v = 0; v < g.n(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(InstanceSpecTest, ParsesAndFormats) {
  const InstanceSpec a = parse_instance_spec("gen_petersen:7,2");
  EXPECT_EQ(a.family, Family::kGenPetersen);
  EXPECT_EQ(a.params, (std::vector<std::int64_t>{7, 2}));
  EXPECT_EQ(format_instance_spec(a), "gen_petersen:7,2");

  const InstanceSpec b = parse_instance_spec("erdos_renyi:40,4,seed=17");
  EXPECT_EQ(b.seed, 17u);
  EXPECT_EQ(format_instance_spec(b), "erdos_renyi:40,4,seed=17");
  EXPECT_EQ(format_params(b), "40;4;seed=17");
  EXPECT_EQ(format_params(a), "7;2");
}

TEST(InstanceSpecTest, RejectsBadGrammar) {
  EXPECT_THROW(parse_instance_spec("nosuch:3"), UsageError);
  EXPECT_THROW(parse_instance_spec("complete"), ParseError);
  EXPECT_THROW(parse_instance_spec("complete:"), ParseError);
  EXPECT_THROW(parse_instance_spec("complete:x"), ParseError);
  EXPECT_THROW(parse_instance_spec("complete:3,,4"), ParseError);
  EXPECT_THROW(parse_instance_spec("erdos_renyi:10,2,seed=1,4"), ParseError);
  EXPECT_THROW(parse_instance_spec("erdos_renyi:10,2,seed=-1"), ParseError);
}

TEST(GenerateTest, PetersenExample) {
  const Graph g = gen("gen_petersen:5,2");
  EXPECT_EQ(g.n(), 10);
  EXPECT_EQ(g.m(), 15);
  int d = 0;
  EXPECT_TRUE(g.is_regular(&d));
  EXPECT_EQ(d, 3);
}

TEST(GenerateTest, Rook2x3Example) {
  const Graph g = gen("rook2xk:2,3");
  EXPECT_EQ(g.n(), 6);
  EXPECT_EQ(g.m(), 9);
  EXPECT_EQ(gen("rook2xk:3"), g);
}

TEST(GenerateTest, ErdosRenyiZeroProbability) {
  const Graph g = gen("erdos_renyi:10,0,seed=1");
  EXPECT_EQ(g.n(), 10);
  EXPECT_EQ(g.m(), 0);
}

TEST(GenerateTest, ErdosRenyiFullProbabilityIsComplete) {
  EXPECT_EQ(gen("erdos_renyi:7,7,seed=3"), gen("complete:7"));
}

TEST(GenerateTest, BoardLayouts) {
  // Queen 2x3: (0,0) attacks everything except (1,2).
  const Graph q = gen("queen2xk:2,3");
  EXPECT_EQ(q.degree(0), 4);
  EXPECT_FALSE(q.adjacent(0, 5));
  EXPECT_TRUE(q.adjacent(0, 4));
  // Bishop 2x2: only the two diagonals.
  const Graph b = gen("bishopkxk:2");
  EXPECT_EQ(b.m(), 2);
  EXPECT_TRUE(b.adjacent(0, 3));
  EXPECT_TRUE(b.adjacent(1, 2));
  // Knight 3x3: centre square is isolated, the rest form an 8-cycle.
  const Graph k = gen("knightkxk:3");
  EXPECT_EQ(k.degree(4), 0);
  EXPECT_EQ(k.m(), 8);
  EXPECT_TRUE(k.adjacent(0, 5));
  EXPECT_TRUE(k.adjacent(0, 7));
  // Rook 3x3 is K3 x K3: 4-regular.
  int d = 0;
  EXPECT_TRUE(gen("rookkxk:3").is_regular(&d));
  EXPECT_EQ(d, 4);
}

TEST(GenerateTest, PetersenLayout) {
  const Graph g = gen("gen_petersen:7,3");
  for (Vertex i = 0; i < 7; ++i) {
    EXPECT_TRUE(g.adjacent(i, (i + 1) % 7));
    EXPECT_TRUE(g.adjacent(i, 7 + i));
    EXPECT_TRUE(g.adjacent(7 + i, 7 + (i + 3) % 7));
  }
}

TEST(GenerateTest, FlowerSnarkLayout) {
  const int k = 5;
  const Graph g = gen("flower_snark:5");
  EXPECT_EQ(g.n(), 4 * k);
  EXPECT_EQ(g.m(), 6 * k);
  for (Vertex i = 0; i < k; ++i) {
    EXPECT_TRUE(g.adjacent(i, k + i));
    EXPECT_TRUE(g.adjacent(i, 2 * k + i));
    EXPECT_TRUE(g.adjacent(i, 3 * k + i));
    EXPECT_TRUE(g.adjacent(k + i, k + (i + 1) % k));
  }
  EXPECT_TRUE(g.adjacent(2 * k + k - 1, 3 * k));
  EXPECT_TRUE(g.adjacent(3 * k + k - 1, 2 * k));
  EXPECT_FALSE(g.adjacent(2 * k + k - 1, 2 * k));
}

TEST(GenerateTest, CubicFamiliesAreThreeRegular) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const Graph g = gen("gen_petersen:" + std::to_string(n) + "," + std::to_string(k));
      for (Vertex v = 0; v < g.n(); ++v) ASSERT_EQ(g.degree(v), 3) << n << "," << k;
    }
  }
  for (int k = 3; k <= 12; ++k) {
    const Graph g = gen("flower_snark:" + std::to_string(k));
    for (Vertex v = 0; v < g.n(); ++v) ASSERT_EQ(g.degree(v), 3) << k;
  }
}

TEST(GenerateTest, IsDeterministic) {
  for (const std::string text :
       {"erdos_renyi:40,4,seed=17", "queen2xk:2,9", "flower_snark:7", "knightkxk:6"}) {
    EXPECT_EQ(to_text(gen(text)), to_text(gen(text))) << text;
  }
  EXPECT_NE(to_text(gen("erdos_renyi:40,6,seed=1")), to_text(gen("erdos_renyi:40,6,seed=2")));
}

TEST(GenerateTest, QueenTransposeHasSameDegreeSequence) {
  for (int k = 1; k <= 9; ++k) {
    const Graph a = gen("queen2xk:2," + std::to_string(k));
    const Graph b = gen("queen2xk:" + std::to_string(k) + ",2");
    EXPECT_EQ(a.m(), b.m()) << k;
    EXPECT_EQ(degree_sequence(a), degree_sequence(b)) << k;
  }
}

TEST(GenerateTest, ErdosRenyiEdgeCountWithinFiveSigma) {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{20, 4}, {30, 6}, {50, 5}}) {
    const double p = static_cast<double>(d) / n;
    const double pairs = n * (n - 1) / 2.0;
    const int seeds = 200;
    double total = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
      total += gen("erdos_renyi:" + std::to_string(n) + "," + std::to_string(d) +
                   ",seed=" + std::to_string(seed))
                   .m();
    }
    // Mean of 200 binomial samples.
    const double mean = total / seeds;
    const double sigma = std::sqrt(pairs * p * (1 - p) / seeds);
    EXPECT_LE(std::abs(mean - pairs * p), 5 * sigma) << n << "," << d;
  }
}

TEST(ValidateTest, RejectsOutOfRangeParameters) {
  for (const std::string text :
       {"gen_petersen:2,1", "gen_petersen:6,3", "gen_petersen:5,0", "flower_snark:2",
        "knightkxk:2", "bishopkxk:1", "rookkxk:0", "queen2xk:0", "rook2xk:2,0",
        "erdos_renyi:10,11", "erdos_renyi:10,-1", "cycle:2", "path:0", "complete:0",
        "complete_bipartite:0,3", "gen_petersen:5", "complete:3,4"}) {
    EXPECT_THROW(generate(parse_instance_spec(text)), UsageError) << text;
  }
}

TEST(ValidateTest, ErrorNamesTheBound) {
  try {
    generate(parse_instance_spec("gen_petersen:6,3"));
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("gen_petersen"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("k"), std::string::npos);
  }
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("queen2xk:2,7")), 4);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("flower_snark:3")), 5);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("flower_snark:4")), 8);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("erdos_renyi:20,4")), std::nullopt);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("rook2xk:2,6")), 6);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("rookkxk:4")), 4);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("bishopkxk:5")), 8);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("knightkxk:5")), 13);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("gen_petersen:8,3")), 8);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("complete:6")), 1);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("complete_bipartite:3,4")), 2);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("complete_bipartite:4,3")), 2);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("cycle:5")), std::nullopt);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("gen_petersen:6,3")), std::nullopt);
  EXPECT_EQ(closed_form_gamma(parse_instance_spec("knightkxk:2")), std::nullopt);
}

// Small closed forms checked against the brute-force definition.
TEST(ClosedFormTest, AgreesWithBruteForceOnSmallInstances) {
  for (const std::string text :
       {"queen2xk:2,1", "queen2xk:2,3", "queen2xk:2,5", "rook2xk:2,4", "rookkxk:3",
        "bishopkxk:3", "knightkxk:3", "flower_snark:3", "gen_petersen:5,2", "gen_petersen:6,1",
        "complete:5", "complete_bipartite:2,2"}) {
    const InstanceSpec spec = parse_instance_spec(text);
    EXPECT_EQ(closed_form_gamma(spec), testing::brute_upper_domination(generate(spec))) << text;
  }
}

// The stated value 2 only holds for K_{2,2}: each side of K_{m,n} is itself a
// minimal dominating set, so the true value is max(m, n).
TEST(ClosedFormTest, CompleteBipartiteStatedValueDiffersFromTrueValue) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      const InstanceSpec spec =
          parse_instance_spec("complete_bipartite:" + std::to_string(m) + "," + std::to_string(n));
      EXPECT_EQ(closed_form_gamma(spec), 2);
      EXPECT_EQ(testing::brute_upper_domination(generate(spec)), std::max(m, n));
    }
  }
}

TEST(FamilyTest, NamesRoundTrip) {
  for (const std::string name :
       {"complete", "complete_bipartite", "queen2xk", "rook2xk", "rookkxk", "bishopkxk",
        "knightkxk", "flower_snark", "gen_petersen", "erdos_renyi", "cycle", "path"}) {
    EXPECT_EQ(family_name(family_from_name(name)), name);
  }
  EXPECT_TRUE(is_random_family(Family::kErdosRenyi));
  EXPECT_FALSE(is_random_family(Family::kCycle));
}

}  // namespace
}  // namespace updom
