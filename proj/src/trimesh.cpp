#include "splotsel/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace splotsel {

namespace {

double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * std::fabs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double quantile(const std::vector<double>& sorted, double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double prune_threshold(std::span<const double> edge_lengths) {
    if (edge_lengths.empty())
        throw std::runtime_error("prune_threshold: empty edge length list");
    std::vector<double> sorted(edge_lengths.begin(), edge_lengths.end());
    std::sort(sorted.begin(), sorted.end());
    const double q25 = quantile(sorted, 0.25);
    const double q75 = quantile(sorted, 0.75);
    return q75 + 1.5 * (q75 - q25);
}

TriMesh prune(const Triangulation& tri, double omega) {
    TriMesh mesh;
    mesh.points = tri.points;
    mesh.prune_threshold = omega;

    for (const auto& t : tri.triangles) {
        const double e01 = distance(tri.points[t[0]], tri.points[t[1]]);
        const double e02 = distance(tri.points[t[0]], tri.points[t[2]]);
        const double e12 = distance(tri.points[t[1]], tri.points[t[2]]);
        if (e01 <= omega && e02 <= omega && e12 <= omega) mesh.triangles.push_back(t);
    }

    std::map<std::pair<int, int>, int> incidence;
    for (const auto& t : mesh.triangles) {
        mesh.total_area += triangle_area(mesh.points[t[0]], mesh.points[t[1]], mesh.points[t[2]]);
        ++incidence[{t[0], t[1]}];
        ++incidence[{t[0], t[2]}];
        ++incidence[{t[1], t[2]}];
    }
    for (const auto& [edge, count] : incidence) {
        const MeshEdge e{edge.first, edge.second,
                         distance(mesh.points[edge.first], mesh.points[edge.second])};
        mesh.kept_edges.push_back(e);
        if (count == 1) {
            mesh.boundary_edges.push_back(e);
            mesh.total_perimeter += e.length;
        }
    }
    return mesh;
}

double longest_kept_edge(const TriMesh& mesh) {
    double longest = 0.0;
    for (const auto& e : mesh.kept_edges) longest = std::max(longest, e.length);
    return longest;
}

TriMesh build_mesh(std::span<const Vec2> points, std::optional<double> omega_override) {
    const Triangulation tri = delaunay(points);
    if (tri.empty()) {
        TriMesh mesh;
        mesh.points = tri.points;
        mesh.prune_threshold = omega_override.value_or(0.0);
        return mesh;
    }
    double omega = 0.0;
    if (omega_override) {
        omega = *omega_override;
    } else {
        const auto edges = tri.edges();
        std::vector<double> lengths;
        lengths.reserve(edges.size());
        for (const auto& e : edges) lengths.push_back(e.length);
        omega = prune_threshold(lengths);
    }
    return prune(tri, omega);
}

}  // namespace splotsel
