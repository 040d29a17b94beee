#include "splotsel/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace splotsel {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void open_svg(std::ostringstream& svg, double width, double height) {
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
        << fmt(height) << "\">\n";
    svg << "  <rect width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"white\"/>\n";
}

}  // namespace

const char* class_color(int class_index) {
    static const char* palette[8] = {
        "#1f4e9c",  // blue
        "#d62728",  // red
        "#2ca02c",  // green
        "#ff7f0e",  // orange
        "#9467bd",  // purple
        "#8c564b",  // brown
        "#17becf",  // teal
        "#e377c2",  // magenta
    };
    return palette[((class_index % 8) + 8) % 8];
}

std::string render_grid(const Dataset& d, std::span<const ScatterplotSpec> specs,
                        std::span<const ScoreVector> scores,
                        std::span<const int> selected, const PlotStyle& style) {
    if (selected.empty())
        throw std::runtime_error("render_grid: empty selection, nothing to draw");
    const int cols = std::max(1, style.grid_columns);
    const int rows = (static_cast<int>(selected.size()) + cols - 1) / cols;
    const double cell_w = style.plot_size + 2.0 * style.margin;
    const double cell_h = style.plot_size + 2.0 * style.margin;
    const double width = cols * cell_w;
    const double height = rows * cell_h;

    std::ostringstream svg;
    open_svg(svg, width, height);
    for (std::size_t s = 0; s < selected.size(); ++s) {
        const int id = selected[s];
        const ScatterplotSpec& spec = specs[id];
        const ScoreVector& sv = scores[id];
        const double ox = static_cast<double>(s % cols) * cell_w + style.margin;
        const double oy = static_cast<double>(s / cols) * cell_h + style.margin;
        svg << "  <g>\n";
        svg << "    <rect x=\"" << fmt(ox) << "\" y=\"" << fmt(oy) << "\" width=\""
            << fmt(style.plot_size) << "\" height=\"" << fmt(style.plot_size)
            << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        // caption: scores above the frame
        svg << "    <text x=\"" << fmt(ox) << "\" y=\"" << fmt(oy - 6.0)
            << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#333333\">"
            << fmt(sv.s1) << "/" << fmt(sv.s2) << "/" << fmt(sv.s3) << "/" << fmt(sv.s4)
            << "</text>\n";
        // x-dimension name below, y-dimension name rotated on the left
        svg << "    <text x=\"" << fmt(ox + style.plot_size / 2.0) << "\" y=\""
            << fmt(oy + style.plot_size + 16.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
               "fill=\"#000000\">"
            << xml_escape(d.dim_names[spec.x_dim]) << "</text>\n";
        svg << "    <text x=\"" << fmt(ox - 8.0) << "\" y=\""
            << fmt(oy + style.plot_size / 2.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
               "fill=\"#000000\" transform=\"rotate(-90 " << fmt(ox - 8.0) << " "
            << fmt(oy + style.plot_size / 2.0) << ")\">"
            << xml_escape(d.dim_names[spec.y_dim]) << "</text>\n";
        const auto& xs = d.columns[spec.x_dim];
        const auto& ys = d.columns[spec.y_dim];
        for (std::size_t i = 0; i < d.n_rows(); ++i) {
            const double px = ox + xs[i] * style.plot_size;
            const double py = oy + (1.0 - ys[i]) * style.plot_size;  // SVG y grows down
            svg << "    <circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py) << "\" r=\""
                << fmt(style.point_radius) << "\" fill=\"" << class_color(d.labels[i])
                << "\" fill-opacity=\"0.75\"/>\n";
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_score_chart(std::span<const ScoreVector> scores,
                               std::span<const int> selected) {
    static const char* metric_color[4] = {"#1f4e9c", "#d62728", "#2ca02c", "#ff7f0e"};
    static const char* metric_name[4] = {"s1", "s2", "s3", "s4"};
    const double bar_w = 9.0;
    const double group_gap = 14.0;
    const double group_w = 4.0 * bar_w + group_gap;
    const double chart_h = 180.0;
    const double margin = 36.0;
    const double width = margin * 2.0 + std::max<std::size_t>(1, selected.size()) * group_w;
    const double height = chart_h + margin * 2.0;

    std::ostringstream svg;
    open_svg(svg, width, height);
    // axis frame and a midline at 0.5
    svg << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin) << "\" x2=\""
        << fmt(margin) << "\" y2=\"" << fmt(margin + chart_h)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin + chart_h)
        << "\" x2=\"" << fmt(width - margin) << "\" y2=\"" << fmt(margin + chart_h)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin + chart_h / 2.0)
        << "\" x2=\"" << fmt(width - margin) << "\" y2=\"" << fmt(margin + chart_h / 2.0)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
    for (int m = 0; m < 4; ++m) {
        const double lx = margin + 60.0 * m;
        svg << "  <rect x=\"" << fmt(lx) << "\" y=\"" << fmt(margin - 24.0)
            << "\" width=\"10\" height=\"10\" fill=\"" << metric_color[m] << "\"/>\n";
        svg << "  <text x=\"" << fmt(lx + 14.0) << "\" y=\"" << fmt(margin - 15.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << metric_name[m]
            << "</text>\n";
    }
    for (std::size_t s = 0; s < selected.size(); ++s) {
        const ScoreVector& sv = scores[selected[s]];
        const double gx = margin + group_gap / 2.0 + static_cast<double>(s) * group_w;
        const double values[4] = {sv.s1, sv.s2, sv.s3, sv.s4};
        for (int m = 0; m < 4; ++m) {
            const double h = values[m] * chart_h;
            svg << "  <rect x=\"" << fmt(gx + m * bar_w) << "\" y=\""
                << fmt(margin + chart_h - h) << "\" width=\"" << fmt(bar_w - 1.0)
                << "\" height=\"" << fmt(h) << "\" fill=\"" << metric_color[m] << "\"/>\n";
        }
        svg << "  <text x=\"" << fmt(gx + 2.0 * bar_w) << "\" y=\""
            << fmt(margin + chart_h + 14.0)
            << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">"
            << selected[s] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_mesh(const TriMesh& mesh) {
    const double size = 480.0;
    const double margin = 20.0;
    auto px = [&](double v) { return margin + v * size; };
    auto py = [&](double v) { return margin + (1.0 - v) * size; };
    std::ostringstream svg;
    open_svg(svg, size + 2 * margin, size + 2 * margin);
    for (const auto& e : mesh.kept_edges) {
        svg << "  <line x1=\"" << fmt(px(mesh.points[e.a].x)) << "\" y1=\""
            << fmt(py(mesh.points[e.a].y)) << "\" x2=\"" << fmt(px(mesh.points[e.b].x))
            << "\" y2=\"" << fmt(py(mesh.points[e.b].y))
            << "\" stroke=\"#99bbdd\" stroke-width=\"1\"/>\n";
    }
    for (const auto& e : mesh.boundary_edges) {
        svg << "  <line x1=\"" << fmt(px(mesh.points[e.a].x)) << "\" y1=\""
            << fmt(py(mesh.points[e.a].y)) << "\" x2=\"" << fmt(px(mesh.points[e.b].x))
            << "\" y2=\"" << fmt(py(mesh.points[e.b].y))
            << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
    }
    for (const auto& p : mesh.points) {
        svg << "  <circle cx=\"" << fmt(px(p.x)) << "\" cy=\"" << fmt(py(p.y))
            << "\" r=\"2\" fill=\"#333333\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace splotsel
