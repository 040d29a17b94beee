#include "splotsel/selection.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace splotsel {

double cosine_similarity(const ScoreVector& a, const ScoreVector& b) {
    const double na = std::sqrt(a.s1 * a.s1 + a.s2 * a.s2 + a.s3 * a.s3 + a.s4 * a.s4);
    const double nb = std::sqrt(b.s1 * b.s1 + b.s2 * b.s2 + b.s3 * b.s3 + b.s4 * b.s4);
    if (na <= 1e-12 || nb <= 1e-12) return 0.0;
    const double dot = a.s1 * b.s1 + a.s2 * b.s2 + a.s3 * b.s3 + a.s4 * b.s4;
    return dot / (na * nb);
}

int SimilarityGraph::max_degree() const {
    std::size_t deg = 0;
    for (const auto& neighbors : adj) deg = std::max(deg, neighbors.size());
    return static_cast<int>(deg);
}

SimilarityGraph build_graph(std::vector<ScoreVector> scores, double d_thres) {
    SimilarityGraph g;
    g.d_thres = d_thres;
    g.scores = std::move(scores);
    const int n = static_cast<int>(g.scores.size());
    g.adj.resize(n);
    g.colors.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (cosine_similarity(g.scores[i], g.scores[j]) > d_thres) {
                g.edges.emplace_back(i, j);
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    }
    return g;
}

namespace {

int highest_s4_uncolored(const SimilarityGraph& g) {
    int best = -1;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        if (g.colors[v] >= 0) continue;
        if (best < 0 || g.scores[v].s4 > g.scores[best].s4) best = v;
    }
    return best;
}

int min_absent_color(const SimilarityGraph& g, int v) {
    std::vector<char> used(g.adj[v].size() + 1, 0);
    for (int w : g.adj[v]) {
        const int c = g.colors[w];
        if (c >= 0 && c < static_cast<int>(used.size())) used[c] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    return c;
}

}  // namespace

void greedy_color(SimilarityGraph& g) {
    const int n = static_cast<int>(g.size());
    g.colors.assign(n, -1);
    g.color_count = 0;
    std::vector<char> enqueued(n, 0);
    int colored = 0;
    while (colored < n) {
        const int start = highest_s4_uncolored(g);
        std::queue<int> frontier;
        frontier.push(start);
        enqueued[start] = 1;
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            const int c = min_absent_color(g, v);
            g.colors[v] = c;
            g.color_count = std::max(g.color_count, c + 1);
            ++colored;
            for (int w : g.adj[v]) {  // adj is ascending, fixing the queue order
                if (!enqueued[w]) {
                    enqueued[w] = 1;
                    frontier.push(w);
                }
            }
        }
    }
}

std::vector<double> color_sums(const SimilarityGraph& g, ColorSumRule rule) {
    std::vector<double> sums(g.color_count, 0.0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        const int c = g.colors[v];
        if (c < 0) throw std::runtime_error("color_sums: graph is not colored yet");
        sums[c] += rule == ColorSumRule::VectorNorm ? g.scores[v].norm : g.scores[v].s4;
    }
    return sums;
}

int choose_color_class(const SimilarityGraph& g, ColorSumRule rule) {
    const std::vector<double> sums = color_sums(g, rule);
    if (sums.empty()) throw std::runtime_error("choose_color_class: empty graph");
    int best = 0;
    for (int c = 1; c < static_cast<int>(sums.size()); ++c)
        if (sums[c] > sums[best]) best = c;
    return best;
}

SelectionResult select_top_k(const SimilarityGraph& g, int color, int k) {
    if (color < 0 || color >= g.color_count)
        throw std::runtime_error("select_top_k: color " + std::to_string(color) +
                                 " not present (have " + std::to_string(g.color_count) + ")");
    if (k < 1) throw std::runtime_error("select_top_k: k must be >= 1");
    SelectionResult result;
    result.chosen_color = color;
    result.edge_count = g.edges.size();
    result.color_count = g.color_count;
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
        if (g.colors[v] == color) result.members.push_back(v);
    std::sort(result.members.begin(), result.members.end(), [&](int a, int b) {
        const double ma = g.scores[a].max_component();
        const double mb = g.scores[b].max_component();
        if (ma != mb) return ma > mb;
        if (g.scores[a].norm != g.scores[b].norm) return g.scores[a].norm > g.scores[b].norm;
        return a < b;
    });
    const std::size_t take = std::min<std::size_t>(result.members.size(),
                                                   static_cast<std::size_t>(k));
    result.selected.assign(result.members.begin(), result.members.begin() + take);
    return result;
}

std::vector<SweepRow> threshold_sweep(std::span<const ScoreVector> scores,
                                      std::span<const double> thresholds) {
    std::vector<SweepRow> rows;
    rows.reserve(thresholds.size());
    for (double t : thresholds) {
        SimilarityGraph g = build_graph({scores.begin(), scores.end()}, t);
        greedy_color(g);
        rows.push_back({t, g.edges.size(), g.color_count});
    }
    return rows;
}

}  // namespace splotsel
