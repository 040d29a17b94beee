#include "splotsel/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "splotsel/render.hpp"

namespace splotsel {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content,
                std::vector<fs::path>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    written.push_back(path);
}

json score_entry(const Dataset& d, const ScatterplotSpec& spec, const ScoreVector& sv) {
    return json{{"id", spec.id},
                {"x", d.dim_names[spec.x_dim]},
                {"y", d.dim_names[spec.y_dim]},
                {"s1", sv.s1},
                {"s2", sv.s2},
                {"s3", sv.s3},
                {"s4", sv.s4},
                {"norm", sv.norm}};
}

}  // namespace

std::vector<std::string> validate(const RunConfig& config) {
    std::vector<std::string> diags;
    if (config.input.empty()) diags.push_back("input: path must not be empty");
    if (config.label_column.empty()) diags.push_back("label: column name must not be empty");
    if (config.d_thres < -1.0 || config.d_thres > 1.0)
        diags.push_back("d_thres out of [-1,1]");
    if (config.k < 1) diags.push_back("k must be >= 1");
    if (config.grid < 1) diags.push_back("grid must be >= 1");
    if (config.omega && *config.omega <= 0.0) diags.push_back("omega must be > 0");
    if (config.mode == PairMode::Bipartite) {
        if (config.x_dims.empty() || config.y_dims.empty())
            diags.push_back("bipartite mode: x-dims and y-dims must be nonempty");
        for (const auto& x : config.x_dims)
            for (const auto& y : config.y_dims)
                if (x == y) diags.push_back("x-dims and y-dims overlap: '" + x + "'");
    } else if (!config.x_dims.empty() || !config.y_dims.empty()) {
        diags.push_back("x-dims/y-dims are only valid in bipartite mode");
    }
    for (double t : config.sweep)
        if (t < -1.0 || t > 1.0) diags.push_back("sweep value out of [-1,1]: " + fmt_num(t));
    if (config.delimiter != ',' && config.delimiter != '\t')
        diags.push_back("delimiter must be comma or tab");
    return diags;
}

std::string scores_to_csv(const Dataset& d, std::span<const ScatterplotSpec> specs,
                          std::span<const ScoreVector> scores) {
    std::ostringstream csv;
    csv << "id,x,y,s1,s2,s3,s4,norm\n";
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const ScatterplotSpec& spec = specs[i];
        const ScoreVector& sv = scores[i];
        csv << spec.id << ',' << d.dim_names[spec.x_dim] << ',' << d.dim_names[spec.y_dim]
            << ',' << fmt_num(sv.s1) << ',' << fmt_num(sv.s2) << ',' << fmt_num(sv.s3)
            << ',' << fmt_num(sv.s4) << ',' << fmt_num(sv.norm) << '\n';
    }
    return csv.str();
}

std::string scores_to_json(const Dataset& d, std::span<const ScatterplotSpec> specs,
                           std::span<const ScoreVector> scores) {
    json arr = json::array();
    for (std::size_t i = 0; i < specs.size(); ++i)
        arr.push_back(score_entry(d, specs[i], scores[i]));
    return arr.dump(2) + "\n";
}

std::string graph_to_json(const Dataset& d, std::span<const ScatterplotSpec> specs,
                          const SimilarityGraph& g, const SelectionResult& sel) {
    json doc;
    doc["d_thres"] = g.d_thres;
    doc["edge_count"] = g.edges.size();
    doc["color_count"] = g.color_count;
    doc["chosen_color"] = sel.chosen_color;
    doc["color_sums"] = sel.per_color_sums;
    doc["selection"] = sel.selected;
    json vertices = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        json v = score_entry(d, specs[i], g.scores[i]);
        v["color"] = g.colors[i];
        vertices.push_back(std::move(v));
    }
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const auto& [a, b] : g.edges) {
        edges.push_back(json{{"i", a},
                             {"j", b},
                             {"similarity", cosine_similarity(g.scores[a], g.scores[b])}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
    std::ostringstream csv;
    csv << "d_thres,edges,colors\n";
    for (const auto& row : rows)
        csv << fmt_num(row.d_thres) << ',' << row.edges << ',' << row.colors << '\n';
    return csv.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<std::string> diags = validate(config);
    if (!diags.empty()) {
        for (const auto& diag : diags) err << "config error: " << diag << "\n";
        return 1;
    }

    std::vector<fs::path> written;
    try {
        const Dataset raw = load_dataset_file(config.input, config.label_column,
                                              config.delimiter);
        const Dataset data = normalize(raw);
        const std::vector<ScatterplotSpec> specs =
            config.mode == PairMode::AllPairs
                ? enumerate_all_pairs(data)
                : enumerate_bipartite(data, config.x_dims, config.y_dims);

        const ScoreAllResult scored =
            score_all(data, specs, config.grid, config.omega, config.threads);

        SimilarityGraph graph = build_graph(scored.scores, config.d_thres);
        greedy_color(graph);
        const int chosen = choose_color_class(graph, config.color_sum);
        SelectionResult sel = select_top_k(graph, chosen, config.k);
        sel.per_color_sums = color_sums(graph, config.color_sum);

        const fs::path dir(config.out_dir);
        fs::create_directories(dir);
        write_file(dir / "scores.csv", scores_to_csv(data, specs, scored.scores), written);
        write_file(dir / "scores.json", scores_to_json(data, specs, scored.scores), written);
        write_file(dir / "graph.json", graph_to_json(data, specs, graph, sel), written);
        write_file(dir / "selection.svg",
                   render_grid(data, specs, scored.scores, sel.selected), written);
        write_file(dir / "scores-chart.svg",
                   render_score_chart(scored.scores, sel.selected), written);
        if (!config.sweep.empty()) {
            const auto rows = threshold_sweep(scored.scores, config.sweep);
            write_file(dir / "sweep.csv", sweep_to_csv(rows), written);
        }
        if (config.dump_mesh_id >= 0) {
            if (config.dump_mesh_id >= static_cast<int>(specs.size()))
                throw std::runtime_error("dump-mesh id out of range: " +
                                         std::to_string(config.dump_mesh_id));
            const ScatterplotSpec& spec = specs[config.dump_mesh_id];
            std::vector<Vec2> pts(data.n_rows());
            for (std::size_t i = 0; i < pts.size(); ++i)
                pts[i] = {data.columns[spec.x_dim][i], data.columns[spec.y_dim][i]};
            const TriMesh mesh = build_mesh(pts, config.omega);
            write_file(dir / ("mesh-" + std::to_string(config.dump_mesh_id) + ".svg"),
                       render_mesh(mesh), written);
        }

        out << "scatterplots: " << specs.size() << "\n";
        out << "edges: " << graph.edges.size() << " (d_thres " << fmt_num(config.d_thres)
            << ")\n";
        out << "colors: " << graph.color_count << "\n";
        out << "chosen color: " << sel.chosen_color << " (sum "
            << fmt_num(sel.per_color_sums[sel.chosen_color]) << ")\n";
        out << "selected:";
        for (int id : sel.selected) out << ' ' << id;
        out << "\n";
        out << "clamped score components: " << scored.clamp_events << "\n";
        out << "wrote " << written.size() << " artifact(s) to " << dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& path : written) {
            std::error_code ec;
            fs::remove(path, ec);
        }
        return 1;
    }
}

}  // namespace splotsel
