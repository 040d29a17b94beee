#include "splotsel/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace splotsel {

namespace {

// Index of the virtual hull vertex. Faces carrying it represent the
// unbounded region outside the current hull, so the hull needs no
// oversized super-triangle and all predicates stay on real coordinates.
constexpr int kGhost = -1;

// Tolerance on predicate determinants over normalized coordinates.
constexpr long double kEps = 1e-12L;

long double orient_ld(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(c.y) - a.y) -
           (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(c.x) - a.x);
}

// > 0 iff d lies strictly inside the circumcircle of the CCW triangle abc.
long double incircle_ld(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const long double adx = a.x - d.x, ady = a.y - d.y;
    const long double bdx = b.x - d.x, bdy = b.y - d.y;
    const long double cdx = c.x - d.x, cdy = c.y - d.y;
    const long double ad = adx * adx + ady * ady;
    const long double bd = bdx * bdx + bdy * bdy;
    const long double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
           ad * (bdx * cdy - bdy * cdx);
}

struct Face {
    int a, b, c;  // c == kGhost for hull faces; real faces are CCW
};

// Membership of p in a face's circumdisk. For a ghost face (u, v, G) the
// disk is the open half-plane strictly left of u->v (the outside of the
// hull) plus the open segment uv itself, so points landing exactly on a
// hull edge split it instead of producing a degenerate fan triangle.
bool in_disk(const Face& f, const std::vector<Vec2>& pts, const Vec2& p) {
    if (f.c != kGhost)
        return incircle_ld(pts[f.a], pts[f.b], pts[f.c], p) > kEps;
    const Vec2& u = pts[f.a];
    const Vec2& v = pts[f.b];
    const long double o = orient_ld(u, v, p);
    if (o > kEps) return true;
    if (o < -kEps) return false;
    const long double t = (static_cast<long double>(p.x) - u.x) * (static_cast<long double>(v.x) - u.x) +
                          (static_cast<long double>(p.y) - u.y) * (static_cast<long double>(v.y) - u.y);
    const long double len2 = (static_cast<long double>(v.x) - u.x) * (static_cast<long double>(v.x) - u.x) +
                             (static_cast<long double>(v.y) - u.y) * (static_cast<long double>(v.y) - u.y);
    return t > 0 && t < len2;
}

void insert_point(std::vector<Face>& faces, const std::vector<Vec2>& pts, int pi) {
    const Vec2& p = pts[pi];
    std::vector<Face> kept;
    kept.reserve(faces.size() + 2);
    std::vector<std::pair<int, int>> bad_edges;  // directed edges of removed faces
    for (const Face& f : faces) {
        if (in_disk(f, pts, p)) {
            bad_edges.emplace_back(f.a, f.b);
            bad_edges.emplace_back(f.b, f.c);
            bad_edges.emplace_back(f.c, f.a);
        } else {
            kept.push_back(f);
        }
    }
    if (bad_edges.empty()) return;  // cannot happen for points outside the hull or inside it

    std::sort(bad_edges.begin(), bad_edges.end());
    auto is_bad = [&](int x, int y) {
        return std::binary_search(bad_edges.begin(), bad_edges.end(), std::make_pair(x, y));
    };
    // Cavity boundary = directed edges whose reverse is not in the cavity.
    for (const auto& [u, v] : bad_edges) {
        if (is_bad(v, u)) continue;
        if (u == kGhost) {
            kept.push_back({v, pi, kGhost});
        } else if (v == kGhost) {
            kept.push_back({pi, u, kGhost});
        } else {
            if (orient_ld(p, pts[u], pts[v]) <= 0) continue;  // degenerate sliver guard
            kept.push_back({pi, u, v});
        }
    }
    faces = std::move(kept);
}

// Cocircular quads are flipped until each carries the lexicographically
// smallest diagonal, so the triangle set no longer depends on insertion
// order when four or more points share a circumcircle.
void canonical_cocircular_flips(std::vector<std::array<int, 3>>& tris,
                                const std::vector<Vec2>& pts) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, int>>> edge_map;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& tr = tris[t];
            for (int e = 0; e < 3; ++e) {
                int u = tr[e], v = tr[(e + 1) % 3], w = tr[(e + 2) % 3];
                if (u > v) std::swap(u, v);
                edge_map[{u, v}].push_back({t, w});
            }
        }
        for (const auto& [edge, inc] : edge_map) {
            if (inc.size() != 2) continue;
            const int a = edge.first, b = edge.second;
            const int c = inc[0].second, d = inc[1].second;
            const std::pair<int, int> old_diag{a, b};
            const std::pair<int, int> new_diag{std::min(c, d), std::max(c, d)};
            if (new_diag >= old_diag) continue;
            Vec2 A = pts[a], B = pts[b];
            const Vec2 &C = pts[c], &D = pts[d];
            int ai = a, bi = b;
            if (orient_ld(A, B, C) < 0) {
                std::swap(A, B);
                std::swap(ai, bi);
            }
            if (std::fabs(static_cast<double>(incircle_ld(A, B, C, D))) >
                static_cast<double>(kEps))
                continue;  // not cocircular, Delaunay already decided this quad
            const long double s1 = orient_ld(C, D, A);
            const long double s2 = orient_ld(C, D, B);
            if (!((s1 > kEps && s2 < -kEps) || (s1 < -kEps && s2 > kEps)))
                continue;  // flip would leave the quad
            auto sorted3 = [](int x, int y, int z) {
                std::array<int, 3> r{x, y, z};
                std::sort(r.begin(), r.end());
                return r;
            };
            tris[inc[0].first] = sorted3(c, d, a);
            tris[inc[1].first] = sorted3(c, d, b);
            changed = true;
            break;  // edge map is stale now; rebuild
        }
    }
}

}  // namespace

double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

Triangulation delaunay(std::span<const Vec2> points) {
    Triangulation out;
    out.points.assign(points.begin(), points.end());
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    const auto& pts = out.points;
    const int n = static_cast<int>(pts.size());
    if (n < 3) return out;

    // First non-collinear third point; none means the whole set is collinear.
    int k = -1;
    for (int i = 2; i < n; ++i) {
        if (std::fabs(static_cast<double>(orient_ld(pts[0], pts[1], pts[i]))) >
            static_cast<double>(kEps)) {
            k = i;
            break;
        }
    }
    if (k < 0) return out;

    std::vector<Face> faces;
    if (orient_ld(pts[0], pts[1], pts[k]) > 0)
        faces.push_back({0, 1, k});
    else
        faces.push_back({0, k, 1});
    const Face& f0 = faces.front();
    faces.push_back({f0.b, f0.a, kGhost});
    faces.push_back({f0.c, f0.b, kGhost});
    faces.push_back({f0.a, f0.c, kGhost});

    for (int i = 2; i < n; ++i) {
        if (i == k) continue;
        insert_point(faces, pts, i);
    }

    for (const Face& f : faces) {
        if (f.c == kGhost) continue;
        std::array<int, 3> t{f.a, f.b, f.c};
        std::sort(t.begin(), t.end());
        out.triangles.push_back(t);
    }
    canonical_cocircular_flips(out.triangles, pts);
    std::sort(out.triangles.begin(), out.triangles.end());
    return out;
}

std::vector<MeshEdge> Triangulation::edges() const {
    std::vector<std::pair<int, int>> raw;
    raw.reserve(triangles.size() * 3);
    for (const auto& t : triangles) {
        raw.emplace_back(t[0], t[1]);
        raw.emplace_back(t[0], t[2]);
        raw.emplace_back(t[1], t[2]);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<MeshEdge> result;
    result.reserve(raw.size());
    for (const auto& [a, b] : raw)
        result.push_back({a, b, distance(points[a], points[b])});
    return result;
}

}  // namespace splotsel
