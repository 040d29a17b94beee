#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace splotsel {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

double distance(const Vec2& a, const Vec2& b);

/// An undirected mesh edge; `a < b` index into the owning point array.
struct MeshEdge {
    int a = 0;
    int b = 0;
    double length = 0.0;
};

/// Delaunay triangulation of a distinct point set. Triangles are stored as
/// ascending index triples, the list sorted lexicographically, so equal point
/// sets always produce identical output.
struct Triangulation {
    std::vector<Vec2> points;                    // deduplicated, lexicographically sorted
    std::vector<std::array<int, 3>> triangles;   // canonical form, empty when degenerate

    bool empty() const { return triangles.empty(); }
    std::vector<MeshEdge> edges() const;         // unique undirected edges with lengths
};

/// Builds the Delaunay triangulation of `points`. Exact duplicates are merged
/// first; fewer than 3 distinct non-collinear points yield an empty
/// triangulation. No input point lies strictly inside any triangle's
/// circumcircle. Cocircular quads keep the diagonal with the lexicographically
/// smallest index pair, making the result independent of input order.
Triangulation delaunay(std::span<const Vec2> points);

/// Upper Tukey fence of the edge lengths: q75 + 1.5 * (q75 - q25), with
/// quartiles by linear interpolation. Requires a nonempty list.
double prune_threshold(std::span<const double> edge_lengths);

/// A triangulation after removing every triangle with an edge longer than the
/// prune threshold, together with the derived area/boundary statistics the
/// thinness and clumpy metrics consume.
struct TriMesh {
    std::vector<Vec2> points;
    std::vector<std::array<int, 3>> triangles;   // kept triangles
    std::vector<MeshEdge> kept_edges;            // edges of kept triangles
    std::vector<MeshEdge> boundary_edges;        // edges with exactly one kept triangle
    double total_area = 0.0;                     // sum of kept-triangle areas
    double total_perimeter = 0.0;                // sum of boundary edge lengths
    double prune_threshold = 0.0;                // omega

    bool empty() const { return triangles.empty(); }
};

/// Keeps exactly the triangles whose three edges are all <= omega and
/// recomputes edges, boundary, area, and perimeter.
TriMesh prune(const Triangulation& tri, double omega);

/// Longest edge among kept_edges; 0 for an empty mesh.
double longest_kept_edge(const TriMesh& mesh);

/// Full mesh pipeline: triangulate, derive omega from the edge lengths (or
/// take the override), prune. An empty triangulation gives an empty mesh.
TriMesh build_mesh(std::span<const Vec2> points,
                   std::optional<double> omega_override = std::nullopt);

}  // namespace splotsel
