#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "splotsel/selection.hpp"
#include "testutil.hpp"

using namespace splotsel;

namespace {

ScoreVector sv(double s1, double s2, double s3, double s4) {
    ScoreVector v{s1, s2, s3, s4, 0.0};
    v.norm = std::sqrt(s1 * s1 + s2 * s2 + s3 * s3 + s4 * s4);
    return v;
}

// Hand-assembled graph for traversal tests: topology and s4 fully controlled.
SimilarityGraph make_graph(const std::vector<double>& s4s,
                           const std::vector<std::pair<int, int>>& edges) {
    SimilarityGraph g;
    g.d_thres = 0.5;
    for (double s : s4s) g.scores.push_back(sv(0.1, 0.1, 0.1, s));
    g.adj.resize(s4s.size());
    g.colors.assign(s4s.size(), -1);
    for (auto [a, b] : edges) {
        g.edges.emplace_back(a, b);
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& neighbors : g.adj) std::sort(neighbors.begin(), neighbors.end());
    return g;
}

std::vector<ScoreVector> random_scores(testutil::Rng& rng, std::size_t n,
                                       bool with_zeros = false) {
    std::vector<ScoreVector> scores;
    for (std::size_t i = 0; i < n; ++i) {
        if (with_zeros && rng.uniform() < 0.15) {
            scores.push_back(sv(0, 0, 0, 0));
        } else {
            scores.push_back(sv(rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()));
        }
    }
    return scores;
}

}  // namespace

TEST_CASE("cosine_similarity") {
    const ScoreVector a = sv(0.3, 0.1, 0.8, 0.2);
    CHECK(cosine_similarity(a, a) == doctest::Approx(1.0));
    CHECK(cosine_similarity(sv(1, 0, 0, 0), sv(0, 1, 0, 0)) == doctest::Approx(0.0));
    CHECK(cosine_similarity(sv(1, 0, 1, 0), sv(1, 1, 0, 0)) == doctest::Approx(0.5));
    CHECK(cosine_similarity(sv(0, 0, 0, 0), a) == 0.0);  // zero vector rule
    CHECK(cosine_similarity(sv(0, 0, 0, 0), sv(0, 0, 0, 0)) == 0.0);
}

TEST_CASE("build_graph edge rule is strict") {
    testutil::Rng rng(64);
    const auto scores = random_scores(rng, 12);
    CHECK(build_graph(scores, 1.0).edges.empty());
    const SimilarityGraph complete = build_graph(scores, -1.0);
    CHECK(complete.edges.size() == 12 * 11 / 2);

    // parallel vectors are all at similarity exactly 1 > 0.9
    std::vector<ScoreVector> parallel;
    for (int i = 1; i <= 5; ++i)
        parallel.push_back(sv(0.1 * i, 0.2 * i, 0.05 * i, 0.15 * i));
    CHECK(build_graph(parallel, 0.9).edges.size() == 10);

    // edges come out in lexicographic order
    for (std::size_t e = 1; e < complete.edges.size(); ++e)
        CHECK(complete.edges[e - 1] < complete.edges[e]);
}

TEST_CASE("greedy_color on canonical graphs") {
    SUBCASE("edgeless graph is monochrome") {
        SimilarityGraph g = make_graph({0.5, 0.9, 0.1}, {});
        greedy_color(g);
        CHECK(g.colors == std::vector<int>{0, 0, 0});
        CHECK(g.color_count == 1);
    }
    SUBCASE("path colored from its highest-s4 end alternates") {
        SimilarityGraph g = make_graph({0.9, 0.5, 0.1}, {{0, 1}, {1, 2}});
        greedy_color(g);
        CHECK(g.colors == std::vector<int>{0, 1, 0});
        CHECK(g.color_count == 2);
    }
    SUBCASE("clique needs as many colors as vertices") {
        SimilarityGraph g =
            make_graph({0.1, 0.2, 0.3, 0.4}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        greedy_color(g);
        std::vector<int> sorted = g.colors;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{0, 1, 2, 3});
        CHECK(g.color_count == 4);
        CHECK(g.colors[3] == 0);  // highest s4 starts and takes color 0
    }
    SUBCASE("disconnected components restart at the highest uncolored s4") {
        // component {0,1}, component {2,3}; vertex 2 has the global max s4
        SimilarityGraph g = make_graph({0.4, 0.3, 0.9, 0.2}, {{0, 1}, {2, 3}});
        greedy_color(g);
        CHECK(g.colors == std::vector<int>{0, 1, 0, 1});
    }
}

TEST_CASE("greedy_color matches the replay oracle on small random graphs") {
    testutil::Rng rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + rng.uniform_int(0, 7);
        std::vector<double> s4s;
        for (int i = 0; i < n; ++i)
            s4s.push_back(trial % 7 == 0 ? 0.5 : rng.uniform());  // occasional full ties
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.uniform() < 0.4) edges.emplace_back(i, j);
        SimilarityGraph g = make_graph(s4s, edges);
        greedy_color(g);
        CHECK(g.colors == testutil::oracle_bfs_coloring(g.scores, edges));
        for (auto [a, b] : edges) CHECK(g.colors[a] != g.colors[b]);
        CHECK(g.color_count <= g.max_degree() + 1);
    }
}

TEST_CASE("choose_color_class picks the heaviest class") {
    SUBCASE("single color") {
        SimilarityGraph g = make_graph({0.1, 0.2}, {});
        greedy_color(g);
        CHECK(choose_color_class(g) == 0);
    }
    SUBCASE("sum of norms beats a single heavy vertex") {
        SimilarityGraph g;
        g.scores = {sv(1, 0, 0, 0), sv(0, 0.8, 0, 0), sv(0, 0, 1.5, 0)};
        g.adj = {{2}, {2}, {0, 1}};
        g.edges = {{0, 2}, {1, 2}};
        g.colors = {0, 0, 1};  // class 0 sums 1.8, class 1 sums 1.5
        g.color_count = 2;
        CHECK(choose_color_class(g, ColorSumRule::VectorNorm) == 0);
    }
    SUBCASE("ties go to the lowest color id") {
        SimilarityGraph g;
        g.scores = {sv(1, 0, 0, 0), sv(0, 1, 0, 0)};
        g.adj = {{1}, {0}};
        g.edges = {{0, 1}};
        g.colors = {0, 1};
        g.color_count = 2;
        CHECK(choose_color_class(g) == 0);
    }
    SUBCASE("scalar-s4 rule changes the winner") {
        SimilarityGraph g;
        g.scores = {sv(1, 1, 1, 0.0), sv(0, 0, 0, 0.9)};
        g.adj = {{1}, {0}};
        g.edges = {{0, 1}};
        g.colors = {0, 1};
        g.color_count = 2;
        CHECK(choose_color_class(g, ColorSumRule::VectorNorm) == 0);
        CHECK(choose_color_class(g, ColorSumRule::ScalarS4) == 1);
    }
}

TEST_CASE("select_top_k ranking and truncation") {
    SimilarityGraph g;
    g.scores = {sv(0.9, 0, 0, 0), sv(0.5, 0.5, 0.5, 0.5), sv(0.2, 0.1, 0, 0)};
    g.adj.resize(3);
    g.colors = {0, 0, 0};
    g.color_count = 1;

    SUBCASE("class smaller than K keeps everyone") {
        const SelectionResult r = select_top_k(g, 0, 16);
        CHECK(r.members.size() == 3);
        CHECK(r.selected.size() == 3);
    }
    SUBCASE("max component rules the order") {
        const SelectionResult r = select_top_k(g, 0, 2);
        CHECK(r.members == std::vector<int>{0, 1, 2});  // 0.9 > 0.5 > 0.2
        CHECK(r.selected == std::vector<int>{0, 1});
    }
    SUBCASE("ties break by norm then id") {
        SimilarityGraph t;
        t.scores = {sv(0.5, 0, 0, 0), sv(0.5, 0.5, 0, 0), sv(0.5, 0, 0, 0)};
        t.adj.resize(3);
        t.colors = {0, 0, 0};
        t.color_count = 1;
        const SelectionResult r = select_top_k(t, 0, 3);
        CHECK(r.members == std::vector<int>{1, 0, 2});
    }
    SUBCASE("invalid arguments throw") {
        CHECK_THROWS_AS(select_top_k(g, 5, 2), std::runtime_error);
        CHECK_THROWS_AS(select_top_k(g, 0, 0), std::runtime_error);
    }
}

TEST_CASE("selection never pairs similar scatterplots (R2)") {
    testutil::Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const auto scores = random_scores(rng, 2 + rng.uniform_int(0, 28), true);
        const double thr = trial % 3 == 0 ? rng.uniform(0.95, 1.0) : rng.uniform(-1.0, 1.0);
        SimilarityGraph g = build_graph(scores, thr);
        greedy_color(g);
        for (auto [a, b] : g.edges) CHECK(g.colors[a] != g.colors[b]);
        CHECK(g.color_count <= g.max_degree() + 1);
        const int chosen = choose_color_class(g);
        const int k = 1 + rng.uniform_int(0, 9);
        const SelectionResult r = select_top_k(g, chosen, k);
        CHECK(r.selected.size() ==
              std::min<std::size_t>(r.members.size(), static_cast<std::size_t>(k)));
        for (std::size_t i = 0; i < r.members.size(); ++i)
            for (std::size_t j = i + 1; j < r.members.size(); ++j)
                CHECK(cosine_similarity(g.scores[r.members[i]], g.scores[r.members[j]]) <=
                      g.d_thres);
        // R3 proxy: an all-zero vector never outranks a positive one
        for (std::size_t i = 1; i < r.members.size(); ++i) {
            const double prev = g.scores[r.members[i - 1]].max_component();
            const double curr = g.scores[r.members[i]].max_component();
            CHECK(prev >= curr);
        }
    }
}

TEST_CASE("coloring and selection are deterministic") {
    testutil::Rng rng(777);
    const auto scores = random_scores(rng, 20);
    SimilarityGraph g1 = build_graph(scores, 0.97);
    SimilarityGraph g2 = build_graph(scores, 0.97);
    greedy_color(g1);
    greedy_color(g2);
    CHECK(g1.colors == g2.colors);
    CHECK(select_top_k(g1, choose_color_class(g1), 5).selected ==
          select_top_k(g2, choose_color_class(g2), 5).selected);
}

TEST_CASE("threshold_sweep") {
    testutil::Rng rng(2718);
    const auto scores = random_scores(rng, 25);

    SUBCASE("threshold 1.0 gives an edgeless single-color graph") {
        const auto rows = threshold_sweep(scores, std::vector<double>{1.0});
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].edges == 0);
        CHECK(rows[0].colors == 1);
    }
    SUBCASE("edge counts are non-decreasing as the threshold drops") {
        const std::vector<double> thresholds{0.9995, 0.9975, 0.995, 0.9925, 0.99, 0.9, 0.5};
        const auto rows = threshold_sweep(scores, thresholds);
        REQUIRE(rows.size() == thresholds.size());
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].edges >= rows[i - 1].edges);
    }
}
