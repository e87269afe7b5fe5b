#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oneplane/common.hpp"
#include "oneplane/drawing.hpp"
#include "oneplane/graph.hpp"

namespace oneplane {

/// Deterministic drawing generator. All randomness comes from mt19937_64
/// seeded per spec plus rejection sampling, so identical specs reproduce
/// bit-identical drawings on every platform.
enum class Family {
    Cycle,
    Wheel,
    Star,
    Complete,
    Triangulation,
    FanTriangulation,
    CrossedQuadrangulation,
    FanQuadrangulation,
    CrossedHexangulation,
    FanHexangulation,
};

struct GenSpec {
    Family family = Family::Cycle;
    int n = 10;
    double crossing_rate = 0.0;
    std::uint64_t seed = 0;
};

inline Family family_from_name(const std::string& name) {
    if (name == "cycle") return Family::Cycle;
    if (name == "wheel") return Family::Wheel;
    if (name == "star") return Family::Star;
    if (name == "complete") return Family::Complete;
    if (name == "plane-triangulation") return Family::Triangulation;
    if (name == "fan-triangulation") return Family::FanTriangulation;
    if (name == "crossed-quadrangulation") return Family::CrossedQuadrangulation;
    if (name == "fan-quadrangulation") return Family::FanQuadrangulation;
    if (name == "crossed-hexangulation") return Family::CrossedHexangulation;
    if (name == "fan-hexangulation") return Family::FanHexangulation;
    throw InputError("unknown family: " + name);
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Cycle: return "cycle";
        case Family::Wheel: return "wheel";
        case Family::Star: return "star";
        case Family::Complete: return "complete";
        case Family::Triangulation: return "plane-triangulation";
        case Family::FanTriangulation: return "fan-triangulation";
        case Family::CrossedQuadrangulation: return "crossed-quadrangulation";
        case Family::FanQuadrangulation: return "fan-quadrangulation";
        case Family::CrossedHexangulation: return "crossed-hexangulation";
        case Family::FanHexangulation: return "fan-hexangulation";
    }
    throw InputError("unknown family");
}

namespace detail {

/// New vertex inside a face joined to the corners at the given positions
/// (increasing). Sub-faces close because the new rotation runs opposite to
/// the face cycle.
inline int insert_star_in_face(DrawingBuilder& b, const std::vector<FaceCorner>& corners,
                               const std::vector<int>& positions,
                               VertexKind kind = VertexKind::True) {
    const int w = b.add_vertex(kind);
    std::vector<int> spokes;
    for (int p : positions) {
        const int s = b.add_edge(corners[p].vertex, w);
        splice_at_corner(b, corners[p], s);
        spokes.push_back(s);
    }
    for (auto it = spokes.rbegin(); it != spokes.rend(); ++it) b.rotation[w].push_back(*it);
    return w;
}

/// Hexangulation growth step: 2-path between the corners at positions a and
/// a+3 splits a hexagon into two hexagons. Returns the two new vertex ids.
inline std::pair<int, int> insert_path2_in_face(DrawingBuilder& b,
                                                const std::vector<FaceCorner>& corners,
                                                int a, int d) {
    const int x = b.add_vertex(VertexKind::True);
    const int y = b.add_vertex(VertexKind::True);
    const int ea = b.add_edge(corners[a].vertex, x);
    const int em = b.add_edge(x, y);
    const int ed = b.add_edge(y, corners[d].vertex);
    splice_at_corner(b, corners[a], ea);
    splice_at_corner(b, corners[d], ed);
    b.rotation[x] = {ea, em};
    b.rotation[y] = {em, ed};
    return {x, y};
}

inline DrawingBuilder cycle_builder(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    DrawingBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex(VertexKind::True);
    std::vector<int> ring(n);
    for (int i = 0; i < n; ++i) ring[i] = b.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) b.rotation[i] = {ring[i], ring[(i + n - 1) % n]};
    return b;
}

/// True original edges of the drawing being built plus diagonals already
/// introduced by crossings; used to keep recovered graphs simple.
inline std::set<Edge> recovered_edge_set(const DrawingBuilder& b) {
    std::set<Edge> out;
    for (const auto& [u, v] : b.edges)
        if (b.kinds[u] == VertexKind::True && b.kinds[v] == VertexKind::True)
            out.insert(make_edge(u, v));
    for (int x = 0; x < static_cast<int>(b.kinds.size()); ++x) {
        if (b.kinds[x] != VertexKind::False) continue;
        const auto& rot = b.rotation[x];
        auto other = [&](int e) {
            const auto& [p, q] = b.edges[e];
            return p == x ? q : p;
        };
        out.insert(make_edge(other(rot[0]), other(rot[2])));
        out.insert(make_edge(other(rot[1]), other(rot[3])));
    }
    return out;
}

} // namespace detail

/// Fill a seeded fraction of the 4-faces that have four distinct true
/// corners with a crossing pair (both diagonals, meeting at a new false
/// vertex). Faces whose diagonals would duplicate an existing original edge
/// are skipped, which keeps the recovered graph simple.
inline OnePlaneDrawing insert_crossings(const OnePlaneDrawing& d, double rate,
                                        std::uint64_t seed) {
    DrawingBuilder b = thaw(d);
    std::mt19937_64 rng(seed);
    std::set<Edge> present = detail::recovered_edge_set(b);
    for (int f = 0; f < d.face_count(); ++f) {
        if (d.faces()[f].degree() != 4) continue;
        const auto corners = face_corners(d, f);
        std::set<int> distinct;
        bool all_true = true;
        for (const auto& c : corners) {
            distinct.insert(c.vertex);
            all_true = all_true && !d.is_false_vertex(c.vertex);
        }
        if (!all_true || distinct.size() != 4) continue;
        const Edge d1 = make_edge(corners[0].vertex, corners[2].vertex);
        const Edge d2 = make_edge(corners[1].vertex, corners[3].vertex);
        if (present.count(d1) || present.count(d2)) continue;
        if (rng_unit(rng) >= rate) continue;
        fill_face_with_crossing(b, corners, {0, 1, 2, 3});
        present.insert(d1);
        present.insert(d2);
    }
    return freeze(b);
}

namespace detail {

/// Offset crossing inside a 6-face: corners r, r+1, r+3, r+5 carry the
/// crossing pair, leaving two 4-faces that contain the false vertex.
/// hub_middle, when >= 0 and on the face, rotates the pattern so that the
/// hub lands in the middle of one of those 4-faces.
inline OnePlaneDrawing insert_hex_crossings(const OnePlaneDrawing& d, double rate,
                                            std::uint64_t seed, int hub_middle) {
    DrawingBuilder b = thaw(d);
    std::mt19937_64 rng(seed);
    std::set<Edge> present = recovered_edge_set(b);
    for (int f = 0; f < d.face_count(); ++f) {
        if (d.faces()[f].degree() != 6) continue;
        const auto corners = face_corners(d, f);
        std::set<int> distinct;
        bool all_true = true;
        for (const auto& c : corners) {
            distinct.insert(c.vertex);
            all_true = all_true && !d.is_false_vertex(c.vertex);
        }
        if (!all_true || distinct.size() != 6) continue;
        if (rng_unit(rng) >= rate) continue;
        int r = static_cast<int>(rng_below(rng, 6));
        if (hub_middle >= 0) {
            for (int i = 0; i < 6; ++i)
                if (corners[i].vertex == hub_middle) r = (i + 4) % 6; // hub at r+2
        }
        const std::array<int, 4> p = {r, (r + 1) % 6, (r + 3) % 6, (r + 5) % 6};
        const Edge d1 = make_edge(corners[p[0]].vertex, corners[p[2]].vertex);
        const Edge d2 = make_edge(corners[p[1]].vertex, corners[p[3]].vertex);
        if (d1 == d2 || present.count(d1) || present.count(d2)) continue;
        // fill_face_with_crossing expects increasing positions; re-sort and
        // keep the opposite pairing by rotating into canonical form.
        std::array<int, 4> q = p;
        std::sort(q.begin(), q.end());
        // sorted q pairs (q0,q2),(q1,q3); check it matches {d1,d2}.
        const Edge s1 = make_edge(corners[q[0]].vertex, corners[q[2]].vertex);
        const Edge s2 = make_edge(corners[q[1]].vertex, corners[q[3]].vertex);
        if (!((s1 == d1 && s2 == d2) || (s1 == d2 && s2 == d1))) continue;
        fill_face_with_crossing(b, corners, q);
        present.insert(d1);
        present.insert(d2);
    }
    return freeze(b);
}

inline OnePlaneDrawing triangulation(int n, std::uint64_t seed, bool fan) {
    if (n < 3) throw InputError("triangulation needs n >= 3");
    DrawingBuilder b = cycle_builder(3);
    std::mt19937_64 rng(seed);
    for (int t = 3; t < n; ++t) {
        const OnePlaneDrawing d = freeze(b);
        std::vector<int> eligible;
        for (int f = 0; f < d.face_count(); ++f) {
            if (!fan) {
                eligible.push_back(f);
                continue;
            }
            for (int v : d.face_vertices(f))
                if (v == 0) {
                    eligible.push_back(f);
                    break;
                }
        }
        const int f = eligible[rng_below(rng, eligible.size())];
        insert_hub_in_face(b, face_corners(d, f));
    }
    return freeze(b);
}

inline OnePlaneDrawing quadrangulation(int n, std::uint64_t seed, bool fan) {
    if (n < 4 || n % 2 != 0) throw InputError("quadrangulation needs even n >= 4");
    DrawingBuilder b = cycle_builder(4);
    std::mt19937_64 rng(seed);
    for (int have = 4; have < n; ++have) {
        const OnePlaneDrawing d = freeze(b);
        std::vector<std::pair<int, int>> eligible; // (face, anchor position)
        for (int f = 0; f < d.face_count(); ++f) {
            if (d.faces()[f].degree() != 4) continue;
            const auto vs = d.face_vertices(f);
            for (int i = 0; i < 4; ++i) {
                if (vs[i] == vs[(i + 2) % 4]) continue;
                if (fan && vs[i] != 0) continue;
                eligible.emplace_back(f, i);
            }
        }
        if (eligible.empty()) throw InputError("quadrangulation growth stuck");
        const auto [f, i] = eligible[rng_below(rng, eligible.size())];
        const auto corners = face_corners(d, f);
        insert_star_in_face(b, corners, {std::min(i, (i + 2) % 4), std::max(i, (i + 2) % 4)});
    }
    return freeze(b);
}

inline OnePlaneDrawing hexangulation(int n, std::uint64_t seed, bool fan) {
    if (n < 6 || n % 2 != 0) throw InputError("hexangulation needs even n >= 6");
    DrawingBuilder b = cycle_builder(6);
    std::mt19937_64 rng(seed);
    for (int have = 6; have < n; have += 2) {
        const OnePlaneDrawing d = freeze(b);
        std::vector<std::pair<int, int>> eligible; // (face, position of path start)
        for (int f = 0; f < d.face_count(); ++f) {
            if (d.faces()[f].degree() != 6) continue;
            const auto vs = d.face_vertices(f);
            for (int i = 0; i < 6; ++i) {
                if (vs[i] == vs[(i + 3) % 6]) continue;
                if (fan && vs[i] != 0) continue;
                eligible.emplace_back(f, i);
            }
        }
        if (eligible.empty()) throw InputError("hexangulation growth stuck");
        const auto [f, i] = eligible[rng_below(rng, eligible.size())];
        insert_path2_in_face(b, face_corners(d, f), i, (i + 3) % 6);
    }
    return freeze(b);
}

inline OnePlaneDrawing wheel(int n) {
    if (n < 4) throw InputError("wheel needs n >= 4");
    DrawingBuilder b = cycle_builder(n - 1);
    const OnePlaneDrawing rim = freeze(b);
    insert_hub_in_face(b, face_corners(rim, 0));
    return freeze(b);
}

inline OnePlaneDrawing star(int n) {
    if (n < 2) throw InputError("star needs n >= 2");
    DrawingBuilder b;
    const int hub = b.add_vertex(VertexKind::True);
    for (int i = 1; i < n; ++i) {
        const int leaf = b.add_vertex(VertexKind::True);
        const int e = b.add_edge(hub, leaf);
        b.rotation[hub].push_back(e);
        b.rotation[leaf].push_back(e);
    }
    return freeze(b);
}

inline OnePlaneDrawing complete_plane(int n) {
    if (n == 3) return freeze(cycle_builder(3));
    if (n == 4) return wheel(4);
    throw InputError("complete plane drawings are provided for n in {3,4}");
}

} // namespace detail

inline OnePlaneDrawing generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::Cycle: return freeze(detail::cycle_builder(spec.n));
        case Family::Wheel: return detail::wheel(spec.n);
        case Family::Star: return detail::star(spec.n);
        case Family::Complete: return detail::complete_plane(spec.n);
        case Family::Triangulation: return detail::triangulation(spec.n, spec.seed, false);
        case Family::FanTriangulation: return detail::triangulation(spec.n, spec.seed, true);
        case Family::CrossedQuadrangulation: {
            const auto base = detail::quadrangulation(spec.n, spec.seed, false);
            return insert_crossings(base, spec.crossing_rate, split_seed(spec.seed, 1));
        }
        case Family::FanQuadrangulation: {
            const auto base = detail::quadrangulation(spec.n, spec.seed, true);
            return insert_crossings(base, spec.crossing_rate, split_seed(spec.seed, 1));
        }
        case Family::CrossedHexangulation: {
            const auto base = detail::hexangulation(spec.n, spec.seed, false);
            return detail::insert_hex_crossings(base, spec.crossing_rate,
                                                split_seed(spec.seed, 1), -1);
        }
        case Family::FanHexangulation: {
            const auto base = detail::hexangulation(spec.n, spec.seed, true);
            return detail::insert_hex_crossings(base, spec.crossing_rate,
                                                split_seed(spec.seed, 1), 0);
        }
    }
    throw InputError("unknown family");
}

// ---------------------------------------------------------------------------
// Named fixtures.

namespace detail {

inline DrawingBuilder prism_builder() {
    // Triangular prism: outer triangle 0,1,2, inner triangle 3,4,5, struts
    // i-(i+3). Rotations are a fixed plane embedding.
    DrawingBuilder b;
    for (int i = 0; i < 6; ++i) b.add_vertex(VertexKind::True);
    const int e01 = b.add_edge(0, 1), e12 = b.add_edge(1, 2), e02 = b.add_edge(0, 2);
    const int e34 = b.add_edge(3, 4), e45 = b.add_edge(4, 5), e35 = b.add_edge(3, 5);
    const int e03 = b.add_edge(0, 3), e14 = b.add_edge(1, 4), e25 = b.add_edge(2, 5);
    b.rotation[0] = {e01, e03, e02};
    b.rotation[1] = {e12, e14, e01};
    b.rotation[2] = {e02, e25, e12};
    b.rotation[3] = {e03, e34, e35};
    b.rotation[4] = {e45, e34, e14};
    b.rotation[5] = {e35, e45, e25};
    return b;
}

/// Split a face by a chord between two distinct vertices lying on a common
/// face of the frozen drawing; used by fixture constructions.
inline void split_face_by_vertices(DrawingBuilder& b, const OnePlaneDrawing& d, int u, int v) {
    for (int f = 0; f < d.face_count(); ++f) {
        const auto vs = d.face_vertices(f);
        int iu = -1, iv = -1;
        for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
            if (vs[i] == u && iu < 0) iu = i;
            if (vs[i] == v && iv < 0) iv = i;
        }
        if (iu < 0 || iv < 0) continue;
        const int L = static_cast<int>(vs.size());
        const int gap = (iv - iu + L) % L;
        if (gap <= 1 || gap == L - 1) continue; // endpoints adjacent on this face
        split_face_with_edge(b, face_corners(d, f), iu, iv);
        return;
    }
    throw InputError("split_face_by_vertices: no common face");
}

} // namespace detail

/// Curated drawings with verified properties; fixed test fixtures.
inline OnePlaneDrawing named_drawing(const std::string& name) {
    if (name == "C5") return generate({Family::Cycle, 5, 0.0, 0});
    if (name == "K3") return detail::complete_plane(3);
    if (name == "K4") return detail::complete_plane(4);
    if (name == "W18") return detail::wheel(19);
    if (name == "W20") return detail::wheel(21);
    if (name == "quad-crossed") {
        // A single quadrilateral with one crossing pair inside.
        DrawingBuilder b = detail::cycle_builder(4);
        const OnePlaneDrawing base = freeze(b);
        fill_face_with_crossing(b, face_corners(base, 0), {0, 1, 2, 3});
        return freeze(b);
    }
    if (name == "K6") {
        // Prism plus a crossing pair in each quadrilateral side; recovers K6.
        DrawingBuilder b = detail::prism_builder();
        const OnePlaneDrawing base = freeze(b);
        for (int f = 0; f < base.face_count(); ++f)
            if (base.faces()[f].degree() == 4)
                fill_face_with_crossing(b, face_corners(base, f), {0, 1, 2, 3});
        return freeze(b);
    }
    if (name == "K7-minus-matching") {
        // Hexagon + hub joined to 0,2,4; crossings fill the three inner
        // quads (spoke x short diagonal), outer chords 1-3, 3-5, 5-1.
        // Recovers K7 minus the matching {0-3, 1-4, 2-5}.
        DrawingBuilder b = detail::cycle_builder(6);
        OnePlaneDrawing d = freeze(b);
        detail::insert_star_in_face(b, face_corners(d, 0), {0, 2, 4});
        d = freeze(b);
        for (int f = 0; f < d.face_count(); ++f)
            if (d.faces()[f].degree() == 4)
                fill_face_with_crossing(b, face_corners(d, f), {0, 1, 2, 3});
        for (const auto& [u, v] : std::vector<std::pair<int, int>>{{1, 3}, {3, 5}, {5, 1}}) {
            d = freeze(b);
            detail::split_face_by_vertices(b, d, u, v);
        }
        return freeze(b);
    }
    throw InputError("unknown drawing name: " + name);
}

/// Abstract graph fixtures for structure tests.
inline Graph named_graph(const std::string& name) {
    if (name == "subdivided-K9") {
        std::vector<Edge> es;
        for (int u = 0; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v)
                if (!(u == 7 && v == 8)) es.push_back({u, v});
        es.push_back({7, 9});
        es.push_back({8, 9});
        return Graph(10, es);
    }
    if (name == "petersen") {
        std::vector<Edge> es;
        for (int i = 0; i < 5; ++i) {
            es.push_back(make_edge(i, (i + 1) % 5));
            es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
            es.push_back(make_edge(i, 5 + i));
        }
        return Graph(10, es);
    }
    if (name == "K7") {
        std::vector<Edge> es;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) es.push_back({u, v});
        return Graph(7, es);
    }
    if (name == "two-hubs") {
        // Two adjacent degree-8 vertices, everything else pendant.
        std::vector<Edge> es = {{0, 1}};
        int next = 2;
        for (int i = 0; i < 7; ++i) es.push_back({0, next++});
        for (int i = 0; i < 7; ++i) es.push_back({1, next++});
        return Graph(next, es);
    }
    throw InputError("unknown graph name: " + name);
}

/// Seeded corpus used by the acceptance suite and the check-theorem command:
/// connected drawings, minimum degree >= 2, 10 <= n <= 80.
inline std::vector<GenSpec> corpus_specs(int count, std::uint64_t seed) {
    std::vector<GenSpec> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(split_seed(seed, i));
        GenSpec s;
        s.seed = rng();
        switch (i % 8) {
            case 0:
                s.family = Family::Triangulation;
                s.n = 10 + static_cast<int>(rng_below(rng, 31)); // 10..40
                break;
            case 1:
                s.family = Family::CrossedQuadrangulation;
                s.n = 12 + 2 * static_cast<int>(rng_below(rng, 25)); // 12..60
                s.crossing_rate = 0.3 + 0.5 * rng_unit(rng);
                break;
            case 2:
                s.family = Family::CrossedHexangulation;
                s.n = 12 + 2 * static_cast<int>(rng_below(rng, 19)); // 12..48
                s.crossing_rate = 0.4 + 0.5 * rng_unit(rng);
                break;
            case 3:
                s.family = Family::Wheel;
                s.n = 11 + static_cast<int>(rng_below(rng, 11)); // 11..21
                break;
            case 4:
                s.family = Family::Cycle;
                s.n = 10 + static_cast<int>(rng_below(rng, 71)); // 10..80
                break;
            case 5:
                s.family = Family::FanTriangulation;
                s.n = 11 + static_cast<int>(rng_below(rng, 6)); // 11..16
                break;
            case 6:
                s.family = Family::FanQuadrangulation;
                s.n = 12 + 2 * static_cast<int>(rng_below(rng, 5)); // 12..20
                s.crossing_rate = 0.5;
                break;
            case 7:
                s.family = Family::FanHexangulation;
                s.n = 14 + 2 * static_cast<int>(rng_below(rng, 9)); // 14..30
                s.crossing_rate = 0.6;
                break;
        }
        out.push_back(s);
    }
    return out;
}

} // namespace oneplane
