#pragma once

#include <span>
#include <utility>
#include <vector>

#include "splotsel/metrics.hpp"

namespace splotsel {

/// Cosine similarity of two score vectors in [-1,1]. Vectors with
/// (numerically) zero norm are dissimilar to everything: 0.
double cosine_similarity(const ScoreVector& a, const ScoreVector& b);

/// Graph over scatterplot score vectors. Vertices are scatterplot ids; an
/// edge (i,j) exists iff cosine similarity d_ij > d_thres (strict).
struct SimilarityGraph {
    double d_thres = 0.0;
    std::vector<ScoreVector> scores;             // by vertex id
    std::vector<std::pair<int, int>> edges;      // i < j, lexicographic order
    std::vector<std::vector<int>> adj;           // neighbor ids, ascending
    std::vector<int> colors;                     // -1 until greedy_color runs
    int color_count = 0;

    std::size_t size() const { return scores.size(); }
    int max_degree() const;
};

SimilarityGraph build_graph(std::vector<ScoreVector> scores, double d_thres);

/// BFS greedy coloring. Starts at the vertex with the largest s4 (ties:
/// lowest id), assigns each visited vertex the minimum color absent among
/// its already-colored neighbors, enqueues neighbors in ascending id order,
/// and restarts from the highest-s4 uncolored vertex when a component is
/// exhausted. Produces a proper coloring with at most max_degree+1 colors.
void greedy_color(SimilarityGraph& g);

/// How a color class's weight is accumulated: sum of score-vector norms
/// (default) or sum of the scalar s4 components.
enum class ColorSumRule { VectorNorm, ScalarS4 };

std::vector<double> color_sums(const SimilarityGraph& g, ColorSumRule rule);

/// Color whose sum is largest; ties go to the lowest color id.
int choose_color_class(const SimilarityGraph& g, ColorSumRule rule = ColorSumRule::VectorNorm);

struct SelectionResult {
    int chosen_color = 0;
    std::vector<int> members;          // chosen class, ranked best-first
    std::vector<int> selected;         // first min(K, |members|) of members
    std::size_t edge_count = 0;
    int color_count = 0;
    std::vector<double> per_color_sums;
};

/// Ranks the chosen class by descending max component (ties: higher norm,
/// then lower id) and keeps the top K.
SelectionResult select_top_k(const SimilarityGraph& g, int color, int k);

struct SweepRow {
    double d_thres = 0.0;
    std::size_t edges = 0;
    int colors = 0;
};

/// Rebuilds and recolors the graph for each threshold, reporting edge and
/// color counts (the Table-3 style diagnostic).
std::vector<SweepRow> threshold_sweep(std::span<const ScoreVector> scores,
                                      std::span<const double> thresholds);

}  // namespace splotsel
