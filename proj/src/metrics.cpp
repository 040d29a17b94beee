#include "splotsel/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace splotsel {

namespace {

double clamp01(double v, long& events) {
    if (v < 0.0) {
        ++events;
        return 0.0;
    }
    if (v > 1.0) {
        ++events;
        return 1.0;
    }
    return v;
}

std::vector<double> fractional_ranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && v[order[j]] == v[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j - 1) + 1.0;  // 1-based
        for (std::size_t t = i; t < j; ++t) ranks[order[t]] = avg;
        i = j;
    }
    return ranks;
}

// Extracts one dimension min-max mapped to [0,1]; constant columns map to 0.5.
std::vector<double> normalized_column(const Dataset& d, int dim) {
    const auto& col = d.columns[dim];
    auto [mn_it, mx_it] = std::minmax_element(col.begin(), col.end());
    const double mn = *mn_it, mx = *mx_it;
    std::vector<double> out(col.size());
    if (mx == mn) {
        std::fill(out.begin(), out.end(), 0.5);
    } else {
        for (std::size_t i = 0; i < col.size(); ++i) out[i] = (col[i] - mn) / (mx - mn);
    }
    return out;
}

std::vector<Vec2> normalized_points(const ScatterplotSpec& spec, const Dataset& d) {
    const std::vector<double> xs = normalized_column(d, spec.x_dim);
    const std::vector<double> ys = normalized_column(d, spec.y_dim);
    std::vector<Vec2> pts(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) pts[i] = {xs[i], ys[i]};
    return pts;
}

double thinness_from_mesh(const TriMesh& mesh, long& clamp_events) {
    if (mesh.empty() || mesh.total_perimeter <= 0.0) return 0.0;
    const double quotient =
        std::sqrt(4.0 * std::numbers::pi * mesh.total_area) / mesh.total_perimeter;
    return clamp01(1.0 - quotient, clamp_events);
}

double clumpy_from_mesh(const TriMesh& mesh, long& clamp_events) {
    if (mesh.empty() || mesh.prune_threshold <= 0.0) return 0.0;
    return clamp01(1.0 - longest_kept_edge(mesh) / mesh.prune_threshold, clamp_events);
}

}  // namespace

double ScoreVector::max_component() const {
    return std::max({s1, s2, s3, s4});
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::runtime_error("spearman: column lengths differ (" +
                                 std::to_string(x.size()) + " vs " +
                                 std::to_string(y.size()) + ")");
    const std::size_t n = x.size();
    if (n < 2) return 0.0;
    const std::vector<double> rx = fractional_ranks(x);
    const std::vector<double> ry = fractional_ranks(y);
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;  // constant column
    return sxy / std::sqrt(sxx * syy);
}

double score_correlation(const ScatterplotSpec& spec, const Dataset& d) {
    const double rho = spearman(d.columns[spec.x_dim], d.columns[spec.y_dim]);
    return rho * rho;
}

double score_thinness(const ScatterplotSpec& spec, const Dataset& d,
                      std::optional<double> omega) {
    long ignored = 0;
    return thinness_from_mesh(build_mesh(normalized_points(spec, d), omega), ignored);
}

double score_clumpy(const ScatterplotSpec& spec, const Dataset& d,
                    std::optional<double> omega) {
    long ignored = 0;
    return clumpy_from_mesh(build_mesh(normalized_points(spec, d), omega), ignored);
}

EntropyGrid entropy_grid(const ScatterplotSpec& spec, const Dataset& d, int g) {
    if (g < 1) throw std::runtime_error("entropy grid needs g >= 1");
    EntropyGrid grid;
    grid.g = g;
    grid.classes = std::max(1, d.n_classes());
    grid.class_counts.assign(static_cast<std::size_t>(g) * g * grid.classes, 0);
    grid.cell_totals.assign(static_cast<std::size_t>(g) * g, 0);
    grid.cell_entropy.assign(static_cast<std::size_t>(g) * g, 0.0);

    const std::vector<double> xs = normalized_column(d, spec.x_dim);
    const std::vector<double> ys = normalized_column(d, spec.y_dim);
    const std::size_t n = d.n_rows();
    auto bin = [g](double v) {
        return std::min(g - 1, static_cast<int>(v * static_cast<double>(g)));
    };
    for (std::size_t i = 0; i < n; ++i) {
        const int cell = bin(ys[i]) * g + bin(xs[i]);
        ++grid.class_counts[static_cast<std::size_t>(cell) * grid.classes + d.labels[i]];
        ++grid.cell_totals[cell];
    }
    for (std::size_t cell = 0; cell < grid.cell_totals.size(); ++cell) {
        const int total = grid.cell_totals[cell];
        if (total == 0) continue;
        double h = 0.0;
        for (int c = 0; c < grid.classes; ++c) {
            const int count = grid.count(static_cast<int>(cell), c);
            if (count == 0) continue;
            const double p = static_cast<double>(count) / static_cast<double>(total);
            h -= p * std::log2(p);
        }
        grid.cell_entropy[cell] = h * static_cast<double>(total) / static_cast<double>(n);
    }
    return grid;
}

double EntropyGrid::total() const {
    return std::accumulate(cell_entropy.begin(), cell_entropy.end(), 0.0);
}

double score_separateness(std::span<const double> entropy_totals, std::size_t k) {
    if (entropy_totals.empty()) return 0.0;
    const double h_max = *std::max_element(entropy_totals.begin(), entropy_totals.end());
    if (h_max <= 1e-12) return 0.0;
    return (h_max - entropy_totals[k]) / h_max;
}

ScoreAllResult score_all(const Dataset& d, std::span<const ScatterplotSpec> specs,
                         int g, std::optional<double> omega, unsigned threads) {
    ScoreAllResult result;
    const std::size_t n_specs = specs.size();
    result.scores.resize(n_specs);
    result.entropy_totals.resize(n_specs);
    std::vector<long> clamp_counts(n_specs, 0);

    const Dataset norm = normalize(d);
    auto compute_one = [&](std::size_t i) {
        const ScatterplotSpec& spec = specs[i];
        long& clamps = clamp_counts[i];
        ScoreVector& sv = result.scores[i];
        sv.s1 = clamp01(score_correlation(spec, norm), clamps);
        const TriMesh mesh = build_mesh(normalized_points(spec, norm), omega);
        sv.s2 = thinness_from_mesh(mesh, clamps);
        sv.s3 = clumpy_from_mesh(mesh, clamps);
        result.entropy_totals[i] = entropy_grid(spec, norm, g).total();
    };

    unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
    n_threads = std::max(1u, std::min<unsigned>(n_threads, static_cast<unsigned>(n_specs)));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n_specs; ++i) compute_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_specs; i = next.fetch_add(1))
                    compute_one(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    // s4 is relative to the run-wide entropy maximum, so it must wait for
    // every grid to finish.
    for (std::size_t i = 0; i < n_specs; ++i) {
        ScoreVector& sv = result.scores[i];
        sv.s4 = clamp01(score_separateness(result.entropy_totals, i), clamp_counts[i]);
        sv.norm = std::sqrt(sv.s1 * sv.s1 + sv.s2 * sv.s2 + sv.s3 * sv.s3 + sv.s4 * sv.s4);
        result.clamp_events += clamp_counts[i];
    }
    return result;
}

}  // namespace splotsel
