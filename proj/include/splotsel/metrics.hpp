#pragma once

#include <optional>
#include <span>
#include <vector>

#include "splotsel/dataset.hpp"
#include "splotsel/geometry.hpp"

namespace splotsel {

/// The four per-scatterplot scores. Every component is finite and clamped
/// to [0,1], so the Euclidean norm lies in [0,2].
struct ScoreVector {
    double s1 = 0.0;  // correlation
    double s2 = 0.0;  // thinness
    double s3 = 0.0;  // clumpy
    double s4 = 0.0;  // separateness
    double norm = 0.0;

    double max_component() const;
};

/// Spearman's rank correlation with average (fractional) ranks for ties.
/// Constant columns (or fewer than 2 rows) give 0. Throws on length mismatch.
double spearman(std::span<const double> x, std::span<const double> y);

/// s1 = rho^2 over the spec's two dimensions.
double score_correlation(const ScatterplotSpec& spec, const Dataset& d);

/// s2 = 1 - sqrt(4*pi*Area)/Perimeter of the pruned mesh on the normalized
/// points, clamped to [0,1]; 0 for an empty mesh. Near 0 for disk-like
/// blobs, near 1 for thin elongated regions.
double score_thinness(const ScatterplotSpec& spec, const Dataset& d,
                      std::optional<double> omega = std::nullopt);

/// s3 = 1 - e_maxr/omega with e_maxr the longest kept edge, clamped to
/// [0,1]; 0 for an empty mesh or omega = 0.
double score_clumpy(const ScatterplotSpec& spec, const Dataset& d,
                    std::optional<double> omega = std::nullopt);

/// Label entropy over a g x g binning of the normalized scatterplot.
/// cell_entropy[l] is weighted by cell population: (n_l/n) * H(labels in l),
/// in bits, so total() equals the dataset-level conditional label entropy.
struct EntropyGrid {
    int g = 1;
    int classes = 1;
    std::vector<int> class_counts;      // g*g*classes, cell-major
    std::vector<int> cell_totals;       // g*g
    std::vector<double> cell_entropy;   // g*g, population-weighted bits

    double total() const;
    int count(int cell, int cls) const { return class_counts[cell * classes + cls]; }
};

EntropyGrid entropy_grid(const ScatterplotSpec& spec, const Dataset& d, int g);

/// s4 = (H_max - H_k)/H_max over the run's entropy totals; all zero when
/// H_max is (numerically) zero.
double score_separateness(std::span<const double> entropy_totals, std::size_t k);

struct ScoreAllResult {
    std::vector<ScoreVector> scores;      // one per spec, same order
    std::vector<double> entropy_totals;   // sum of H_l per spec
    long clamp_events = 0;                // components that fell outside [0,1]
};

/// Computes every score vector. s4 needs the run-wide entropy maximum, so
/// the per-scatterplot pass runs first (in parallel when threads != 1) and
/// s4 is filled in afterwards. Results are identical for any thread count.
ScoreAllResult score_all(const Dataset& d, std::span<const ScatterplotSpec> specs,
                         int g, std::optional<double> omega = std::nullopt,
                         unsigned threads = 0);

}  // namespace splotsel
