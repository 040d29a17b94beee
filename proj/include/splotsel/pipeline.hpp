#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "splotsel/selection.hpp"

namespace splotsel {

enum class PairMode { AllPairs, Bipartite };

/// Everything one run needs. Defaults follow the report-oriented setup:
/// d_thres 0.995, K 16, a 5x5 entropy grid.
struct RunConfig {
    std::string input;
    std::string label_column;
    PairMode mode = PairMode::AllPairs;
    std::vector<std::string> x_dims;  // bipartite only
    std::vector<std::string> y_dims;  // bipartite only
    double d_thres = 0.995;
    int k = 16;
    int grid = 5;
    std::optional<double> omega;          // fixed prune threshold override
    ColorSumRule color_sum = ColorSumRule::VectorNorm;
    std::string out_dir = ".";
    std::vector<double> sweep;            // optional threshold sweep
    char delimiter = ',';
    int dump_mesh_id = -1;                // debug mesh SVG for one scatterplot
    unsigned threads = 0;                 // 0 = hardware concurrency
};

/// Checks every config constraint and reports all violations by field name.
/// No side effects.
std::vector<std::string> validate(const RunConfig& config);

/// Runs the five-step flow: score every scatterplot, build the similarity
/// graph, color it, pick the best color class, rank and render. Writes
/// scores.csv, scores.json, graph.json, selection.svg, scores-chart.svg and
/// (when requested) sweep.csv under out_dir, then prints a summary to `out`.
/// On failure prints the diagnostic to `err`, removes any artifacts this run
/// wrote, and returns nonzero.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Report serialization, exposed for tests and other frontends.
std::string scores_to_csv(const Dataset& d, std::span<const ScatterplotSpec> specs,
                          std::span<const ScoreVector> scores);
std::string scores_to_json(const Dataset& d, std::span<const ScatterplotSpec> specs,
                           std::span<const ScoreVector> scores);
std::string graph_to_json(const Dataset& d, std::span<const ScatterplotSpec> specs,
                          const SimilarityGraph& g, const SelectionResult& sel);
std::string sweep_to_csv(std::span<const SweepRow> rows);

}  // namespace splotsel
