#include "oracles.hpp"

#include <crgkit/graph.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace crgkit;

namespace {

auto from_edges(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

// Induced P4 or C4 among four vertices, from edge count and degrees.
bool has_p4_or_c4(const Graph & g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int vs[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0}, edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) {
                                ++deg[i];
                                ++deg[j];
                                ++edges;
                            }
                    int ones = 0, twos = 0;
                    for (int x : deg) {
                        ones += x == 1;
                        twos += x == 2;
                    }
                    if ((edges == 3 && ones == 2 && twos == 2) || (edges == 4 && twos == 4))
                        return true;
                }
    return false;
}

// Random cograph: disjoint unions and joins of smaller ones.
auto random_cograph(int n, std::uint64_t seed, std::uint64_t & ctr) -> Graph
{
    if (n == 1)
        return Graph(1);
    const int left = 1 + static_cast<int>(counter_uniform(seed, ctr++) * (n - 1));
    const Graph a = random_cograph(left, seed, ctr);
    const Graph b = random_cograph(n - left, seed, ctr);
    const bool join = counter_uniform(seed, ctr++) < 0.5;
    Graph g(n);
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(left + u, left + v);
    if (join)
        for (int u = 0; u < left; ++u)
            for (int v = left; v < n; ++v)
                g.add_edge(u, v);
    return g;
}

} // namespace

TEST(SampleGnp, ZeroProbabilityGivesEmptyGraph)
{
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL})
        EXPECT_EQ(sample_gnp(5, 0.0, seed), empty_graph(5));
}

TEST(SampleGnp, CertaintyGivesCompleteGraph)
{
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL})
        EXPECT_EQ(sample_gnp(5, 1.0, seed), complete_graph(5));
}

TEST(SampleGnp, EdgeCountConcentratesAndSeedIsDeterministic)
{
    const auto g = sample_gnp(30, 0.5, 1);
    // 435 pairs: mean 217.5, sd about 10.4
    EXPECT_GE(g.edge_count(), 217.5 - 60);
    EXPECT_LE(g.edge_count(), 217.5 + 60);
    EXPECT_EQ(g, sample_gnp(30, 0.5, 1));
    EXPECT_NE(g, sample_gnp(30, 0.5, 2));
}

TEST(SampleGnp, SmallerOrderIsAPrefix)
{
    const auto big = sample_gnp(20, 0.4, 7);
    const auto small = sample_gnp(12, 0.4, 7);
    for (int u = 0; u < 12; ++u)
        for (int v = 0; v < 12; ++v)
            EXPECT_EQ(small.adjacent(u, v), big.adjacent(u, v));
}

TEST(SampleGnp, RejectsInvalidProbability)
{
    EXPECT_THROW(sample_gnp(5, -0.1, 1), InvalidInput);
    EXPECT_THROW(sample_gnp(5, 1.5, 1), InvalidInput);
    EXPECT_THROW(sample_gnp(5, std::nan(""), 1), InvalidInput);
}

TEST(Complement, CompleteGraphBecomesEmpty) { EXPECT_EQ(complement(complete_graph(3)), empty_graph(3)); }

TEST(Complement, PathOnThreeVertices)
{
    // P3 = 0-1-2; its complement is the single edge {0,2} plus isolated 1
    EXPECT_EQ(complement(path_graph(3)), from_edges(3, {{0, 2}}));
}

TEST(Complement, IsAnInvolution)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = sample_gnp(11, 0.45, seed);
        EXPECT_EQ(complement(complement(g)), g);
    }
}

TEST(Spectrum, LeastEigenvalueExamples)
{
    EXPECT_NEAR(min_adjacency_eigenvalue(path_graph(3)), -std::numbers::sqrt2, 1e-9);
    EXPECT_NEAR(min_adjacency_eigenvalue(cycle_graph(4)), -2.0, 1e-9);
    for (int t = 2; t <= 8; ++t)
        EXPECT_NEAR(min_adjacency_eigenvalue(complete_graph(t)), -1.0, 1e-9);
    EXPECT_THROW(min_adjacency_eigenvalue(Graph(0)), InvalidInput);
}

TEST(Spectrum, SortedWithZeroTrace)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto s = adjacency_spectrum(sample_gnp(12, 0.5, seed));
        ASSERT_EQ(s.eigenvalues.size(), 12U);
        EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
        double sum = 0.0;
        for (double v : s.eigenvalues)
            sum += v;
        EXPECT_NEAR(sum, 0.0, 1e-9);
    }
}

TEST(Spectrum, PathSpectrumExamples)
{
    EXPECT_NEAR(path_spectrum(3).eigenvalues.front(), -std::numbers::sqrt2, 1e-9);
    EXPECT_NEAR(path_spectrum(4).eigenvalues.front(), -std::numbers::phi, 1e-9);
    EXPECT_NEAR(path_spectrum(4).eigenvalues.front(), -2.0 * std::cos(std::numbers::pi / 5.0), 1e-12);
    const auto one = path_spectrum(1);
    ASSERT_EQ(one.eigenvalues.size(), 1U);
    EXPECT_NEAR(one.eigenvalues[0], 0.0, 1e-12);
    EXPECT_THROW(path_spectrum(0), InvalidInput);
}

TEST(Spectrum, PathSpectrumMatchesEigensolverAndIsSymmetric)
{
    for (int d = 1; d <= 20; ++d) {
        const auto closed = path_spectrum(d).eigenvalues;
        const auto numeric = adjacency_spectrum(path_graph(d)).eigenvalues;
        ASSERT_EQ(closed.size(), numeric.size());
        for (std::size_t i = 0; i < closed.size(); ++i) {
            EXPECT_NEAR(closed[i], numeric[i], 1e-9);
            EXPECT_NEAR(closed[i], -closed[closed.size() - 1 - i], 1e-9);
        }
    }
}

TEST(Spectrum, NotDisjointCliquesMeansEigenvalueAtMostMinusRootTwo)
{
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_count(n)); ++code) {
            const auto g = graph_from_code(n, code);
            if (g.edge_count() == 0 || is_disjoint_cliques(g))
                continue;
            ASSERT_LE(min_adjacency_eigenvalue(g), -std::numbers::sqrt2 + 1e-9) << render_graph(g);
        }
}

TEST(Chromatic, Examples)
{
    EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
    EXPECT_EQ(chromatic_number(complete_graph(6)), 6);
    EXPECT_EQ(chromatic_number(petersen_graph()), 3);
    EXPECT_EQ(oracle::chromatic_number(petersen_graph()), 3);
    EXPECT_EQ(chromatic_number(empty_graph(4)), 1);
    EXPECT_EQ(chromatic_number(Graph(0)), 0);
}

TEST(Chromatic, CapIsEnforced)
{
    EXPECT_THROW(chromatic_number(empty_graph(41)), CapExceeded);
    EXPECT_NO_THROW(chromatic_number(empty_graph(41), 41));
}

TEST(Chromatic, AgreesWithBruteForceUpToEightVertices)
{
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_count(n)); ++code) {
            const auto g = graph_from_code(n, code);
            ASSERT_EQ(chromatic_number(g), oracle::chromatic_number(g)) << render_graph(g);
        }
    for (int n : {6, 7, 8})
        for (double p : {0.3, 0.5, 0.7})
            for (std::uint64_t seed = 1; seed <= 15; ++seed) {
                const auto g = sample_gnp(n, p, seed);
                ASSERT_EQ(chromatic_number(g), oracle::chromatic_number(g)) << render_graph(g);
            }
}

TEST(Cocoloring, PathOnThreeVertices)
{
    const auto p3 = path_graph(3);
    EXPECT_TRUE(cocoloring_feasible(p3, 1, 1));
    EXPECT_FALSE(cocoloring_feasible(p3, 1, 0));
    EXPECT_FALSE(cocoloring_feasible(p3, 0, 1));
    EXPECT_TRUE(oracle::cocolorable(p3, 1, 1));
    EXPECT_FALSE(oracle::cocolorable(p3, 1, 0));
    EXPECT_FALSE(oracle::cocolorable(p3, 0, 1));
}

TEST(Cocoloring, SingletonsAlwaysSuffice)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = sample_gnp(9, 0.5, seed);
        EXPECT_TRUE(cocoloring_feasible(g, 9, 0));
    }
    EXPECT_THROW(cocoloring_feasible(path_graph(3), -1, 0), InvalidInput);
}

TEST(Cocoloring, AgreesWithPartitionOracleAndIsMonotone)
{
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_count(n)); ++code) {
            const auto g = graph_from_code(n, code);
            for (int w = 0; w <= 4; ++w)
                for (int b = 0; w + b <= 4; ++b) {
                    const bool got = cocoloring_feasible(g, w, b);
                    ASSERT_EQ(got, oracle::cocolorable(g, w, b)) << render_graph(g) << w << ',' << b;
                    if (got) {
                        ASSERT_TRUE(cocoloring_feasible(g, w + 1, b));
                        ASSERT_TRUE(cocoloring_feasible(g, w, b + 1));
                    }
                }
        }
}

TEST(Cocoloring, AgreesWithOracleOnLargerRandomGraphs)
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto g = sample_gnp(7, 0.5, seed);
        for (int w = 0; w <= 3; ++w)
            for (int b = 0; w + b <= 4; ++b)
                ASSERT_EQ(cocoloring_feasible(g, w, b), oracle::cocolorable(g, w, b)) << render_graph(g);
    }
}

TEST(DominantVertex, Examples)
{
    EXPECT_TRUE(has_dominant_vertex(star_graph(4)));
    EXPECT_FALSE(has_dominant_vertex(cycle_graph(5)));
    EXPECT_FALSE(is_p4_c4_free(path_graph(4)));
    EXPECT_FALSE(is_p4_c4_free(cycle_graph(4)));
    EXPECT_TRUE(is_p4_c4_free(star_graph(4)));
}

TEST(DominantVertex, P4C4ScanAgreesWithOracle)
{
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_count(n)); ++code) {
            const auto g = graph_from_code(n, code);
            ASSERT_EQ(is_p4_c4_free(g), !has_p4_or_c4(g)) << render_graph(g);
        }
}

TEST(DominantVertex, ConnectedP4C4FreeGraphsUpToSixVertices)
{
    int checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_count(n)); ++code) {
            const auto g = graph_from_code(n, code);
            if (!is_connected(g) || !is_p4_c4_free(g))
                continue;
            ++checked;
            ASSERT_TRUE(has_dominant_vertex(g)) << render_graph(g);
        }
    EXPECT_GT(checked, 100);
}

TEST(DominantVertex, RandomisedOnEightAndNineVertices)
{
    int checked = 0;
    for (int n : {8, 9})
        for (std::uint64_t seed = 1; seed <= 4000; ++seed) {
            std::uint64_t ctr = 0;
            const auto g = random_cograph(n, seed, ctr);
            if (!is_connected(g) || has_p4_or_c4(g))
                continue;
            ++checked;
            ASSERT_TRUE(has_dominant_vertex(g)) << render_graph(g);
        }
    EXPECT_GT(checked, 50);
}

TEST(GraphText, RoundTripAndComments)
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto g = sample_gnp(10, 0.4, seed);
        EXPECT_EQ(parse_graph(render_graph(g)), g);
    }
    EXPECT_EQ(parse_graph("# path\n3\n0 1\n\n1 2\n"), path_graph(3));
}

TEST(GraphText, MalformedInputIsAParseError)
{
    EXPECT_THROW(parse_graph(""), ParseError);
    EXPECT_THROW(parse_graph("x\n"), ParseError);
    EXPECT_THROW(parse_graph("3\n0 3\n"), ParseError);
    EXPECT_THROW(parse_graph("3\n1 1\n"), ParseError);
    EXPECT_THROW(parse_graph("3\n0 1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("65\n"), CapExceeded);
}
