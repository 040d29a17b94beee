#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "splotsel/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"splotsel: score scatterplots of a labeled dataset, group similar "
                 "score vectors by graph coloring, and render a dissimilar, informative "
                 "selection as an SVG grid"};
    app.set_config("--config", "", "flat key=value config file (flags take precedence)");

    splotsel::RunConfig config;
    std::string mode = "all-pairs";
    std::string color_sum = "vector-norm";
    std::string delim = "comma";
    double omega = 0.0;

    app.add_option("--input", config.input, "input delimited text file with a header row")
        ->required();
    app.add_option("--label", config.label_column, "name of the categorical label column")
        ->required();
    app.add_option("--mode", mode, "all-pairs | bipartite")
        ->check(CLI::IsMember({"all-pairs", "bipartite"}));
    app.add_option("--x-dims", config.x_dims,
                   "bipartite: comma-separated horizontal dimension names")
        ->delimiter(',');
    app.add_option("--y-dims", config.y_dims,
                   "bipartite: comma-separated vertical dimension names")
        ->delimiter(',');
    app.add_option("--d-thres", config.d_thres,
                   "similarity threshold for graph edges, in [-1,1]");
    app.add_option("--k", config.k, "number of scatterplots to select");
    app.add_option("--grid", config.grid, "entropy grid cells per axis");
    auto* omega_opt =
        app.add_option("--omega", omega, "fixed mesh prune threshold (default: Tukey fence)");
    app.add_option("--color-sum", color_sum, "vector-norm | scalar-s4")
        ->check(CLI::IsMember({"vector-norm", "scalar-s4"}));
    app.add_option("--sweep", config.sweep,
                   "comma-separated thresholds for a d_thres sweep report")
        ->delimiter(',');
    app.add_option("--out-dir", config.out_dir, "output directory for artifacts");
    app.add_option("--delim", delim, "input field delimiter: comma | tab")
        ->check(CLI::IsMember({"comma", "tab"}));
    app.add_option("--dump-mesh", config.dump_mesh_id,
                   "also write the pruned mesh of this scatterplot id as SVG");
    app.add_option("--threads", config.threads,
                   "worker threads for metric computation (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    config.mode = mode == "bipartite" ? splotsel::PairMode::Bipartite
                                      : splotsel::PairMode::AllPairs;
    config.color_sum = color_sum == "scalar-s4" ? splotsel::ColorSumRule::ScalarS4
                                                : splotsel::ColorSumRule::VectorNorm;
    config.delimiter = delim == "tab" ? '\t' : ',';
    if (omega_opt->count() > 0) config.omega = omega;

    return splotsel::run(config, std::cout, std::cerr);
}
