#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oneplane/common.hpp"
#include "oneplane/graph.hpp"

namespace oneplane {

enum class VertexKind { True, False };

/// A face of the associated plane graph, stored as its half-edge cycle so
/// that repeated incidences of a vertex remain distinguishable. Half-edge
/// 2e runs u -> v for edge e = (u, v); 2e+1 runs v -> u. The boundary
/// vertex at position i is the source of half_edges[i].
struct Face {
    std::vector<int> half_edges;

    int degree() const { return static_cast<int>(half_edges.size()); }
};

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Findings of the crossing-minimality audit; warnings, not errors.
struct AuditFinding {
    std::string code; // "false-3-face-with-2-vertex", "3-vertex-no-5-face", "3-vertex-false-edge-two-3-faces"
    std::string detail;
};

class OnePlaneDrawing;
OnePlaneDrawing freeze(const struct DrawingBuilder& b);

/// Mutable staging area for drawings; frozen into an immutable
/// OnePlaneDrawing once construction is done.
struct DrawingBuilder {
    std::vector<VertexKind> kinds;
    std::vector<std::pair<int, int>> edges;   // edge id -> endpoints
    std::vector<std::vector<int>> rotation;   // vertex -> incident edge ids, cyclic

    int add_vertex(VertexKind kind) {
        kinds.push_back(kind);
        rotation.emplace_back();
        return static_cast<int>(kinds.size()) - 1;
    }

    int add_edge(int u, int v) {
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    }

    /// Insert edge id `e` into v's rotation directly after edge id `after`.
    void insert_after(int v, int after, int e) {
        auto& rot = rotation[v];
        const auto it = std::find(rot.begin(), rot.end(), after);
        if (it == rot.end()) throw InputError("insert_after: anchor edge not in rotation");
        rot.insert(it + 1, e);
    }
};

/// Associated plane graph of a 1-plane drawing: a rotation system over true
/// (original) and false (crossing) vertices. Immutable; the face list is
/// computed once at construction.
class OnePlaneDrawing {
public:
    OnePlaneDrawing(std::vector<VertexKind> kinds,
                    std::vector<std::pair<int, int>> edges,
                    std::vector<std::vector<int>> rotation)
        : kinds_(std::move(kinds)), edges_(std::move(edges)), rotation_(std::move(rotation)) {
        check_readable();
        trace_faces();
    }

    int vertex_count() const { return static_cast<int>(kinds_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    VertexKind kind(int v) const { return kinds_.at(v); }
    bool is_false_vertex(int v) const { return kinds_.at(v) == VertexKind::False; }

    const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_.at(e); }
    const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
    int degree(int v) const { return static_cast<int>(rotation_.at(v).size()); }

    const std::vector<Face>& faces() const { return faces_; }
    /// Face index containing a given half-edge.
    int face_of(int half) const { return face_of_.at(half); }

    int half_source(int h) const {
        const auto& [u, v] = edges_[h / 2];
        return (h & 1) ? v : u;
    }
    int half_target(int h) const {
        const auto& [u, v] = edges_[h / 2];
        return (h & 1) ? u : v;
    }

    /// Boundary vertices of a face in cyclic order (sources of its
    /// half-edge cycle); repeated incidences appear repeatedly.
    std::vector<int> face_vertices(int f) const {
        std::vector<int> out;
        out.reserve(faces_[f].half_edges.size());
        for (int h : faces_[f].half_edges) out.push_back(half_source(h));
        return out;
    }

    bool face_has_false_vertex(int f) const {
        for (int h : faces_[f].half_edges)
            if (is_false_vertex(half_source(h))) return true;
        return false;
    }

    /// Ids of true vertices in increasing order; recovery renumbers by rank
    /// in this list.
    std::vector<int> true_vertex_ids() const {
        std::vector<int> out;
        for (int v = 0; v < vertex_count(); ++v)
            if (!is_false_vertex(v)) out.push_back(v);
        return out;
    }

    ValidationReport validate() const {
        ValidationReport r;
        for (int v = 0; v < vertex_count(); ++v) {
            if (is_false_vertex(v) && degree(v) != 4)
                r.violations.push_back({"false-degree",
                                        "false vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(degree(v))});
        }
        for (int e = 0; e < edge_count(); ++e) {
            const auto& [u, v] = edges_[e];
            if (is_false_vertex(u) && is_false_vertex(v))
                r.violations.push_back({"adjacent-false-vertices",
                                        "edge " + std::to_string(e) + " joins false vertices " +
                                            std::to_string(u) + "," + std::to_string(v)});
        }
        check_genus(r);
        if (r.ok()) check_recovery(r);
        return r;
    }

    bool valid() const { return validate().ok(); }

    /// Undo the planarization: merge the two segment pairs at every false
    /// vertex back into the crossing original edges. The rotation decides
    /// the pairing: opposite slots merge.
    Graph recover_original() const {
        const auto rec = recovered_edges();
        if (!rec.error.empty()) throw InputError("recover_original: " + rec.error);
        return Graph(rec.true_count, rec.edges);
    }

    /// Lemma-style audit of crossing-minimal drawings; see paper's parts
    /// (b)-(d). Empty on crossing-minimal inputs; findings are warnings.
    std::vector<AuditFinding> lemma_nadj_audit() const;

private:
    struct Recovered {
        int true_count = 0;
        std::vector<Edge> edges;
        std::string error;
    };

    Recovered recovered_edges() const {
        Recovered out;
        std::vector<int> rank(vertex_count(), -1);
        for (int v = 0; v < vertex_count(); ++v)
            if (!is_false_vertex(v)) rank[v] = out.true_count++;

        std::set<Edge> seen;
        auto push = [&](int a, int b) -> bool {
            if (a == b) {
                out.error = "uncrossing creates a loop at vertex " + std::to_string(a);
                return false;
            }
            const Edge e = make_edge(rank[a], rank[b]);
            if (!seen.insert(e).second) {
                out.error = "uncrossing creates a multi-edge " + std::to_string(a) + "-" +
                            std::to_string(b);
                return false;
            }
            out.edges.push_back(e);
            return true;
        };

        for (int e = 0; e < edge_count(); ++e) {
            const auto& [u, v] = edges_[e];
            if (!is_false_vertex(u) && !is_false_vertex(v)) {
                if (!push(u, v)) return out;
            }
        }
        for (int x = 0; x < vertex_count(); ++x) {
            if (!is_false_vertex(x)) continue;
            const auto& rot = rotation_[x];
            if (rot.size() != 4) {
                out.error = "false vertex of degree != 4";
                return out;
            }
            int w[4];
            for (int i = 0; i < 4; ++i) {
                const auto& [a, b] = edges_[rot[i]];
                w[i] = (a == x) ? b : a;
                if (is_false_vertex(w[i])) {
                    out.error = "adjacent false vertices";
                    return out;
                }
            }
            if (!push(w[0], w[2]) || !push(w[1], w[3])) return out;
        }
        return out;
    }

    void check_readable() const {
        const int n = vertex_count();
        if (static_cast<int>(rotation_.size()) != n)
            throw InputError("rotation table size differs from vertex count");
        std::vector<int> deg(n, 0);
        for (int e = 0; e < edge_count(); ++e) {
            const auto& [u, v] = edges_[e];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError("edge " + std::to_string(e) + " references unknown vertex");
            if (u == v) throw InputError("edge " + std::to_string(e) + " is a self-loop");
            ++deg[u];
            ++deg[v];
        }
        std::vector<char> placed(2 * edge_count(), 0);
        for (int v = 0; v < n; ++v) {
            if (static_cast<int>(rotation_[v].size()) != deg[v])
                throw InputError("rotation length differs from degree at vertex " +
                                 std::to_string(v));
            for (int e : rotation_[v]) {
                if (e < 0 || e >= edge_count())
                    throw InputError("rotation references unknown edge id " + std::to_string(e));
                const auto& [a, b] = edges_[e];
                if (a != v && b != v)
                    throw InputError("rotation at vertex " + std::to_string(v) +
                                     " lists non-incident edge " + std::to_string(e));
                const int half = 2 * e + (a == v ? 0 : 1);
                if (placed[half]++)
                    throw InputError("half-edge appears twice in rotations (edge " +
                                     std::to_string(e) + ")");
            }
        }
    }

    /// Next half-edge of the face containing h: arrive at v = target(h),
    /// leave along the rotation successor of h's edge at v.
    int next_in_face(int h) const {
        const int v = half_target(h);
        const int e = h / 2;
        const auto& rot = rotation_[v];
        const auto it = std::find(rot.begin(), rot.end(), e);
        const int i = static_cast<int>(it - rot.begin());
        const int e2 = rot[(i + 1) % rot.size()];
        return 2 * e2 + (edges_[e2].first == v ? 0 : 1);
    }

    void trace_faces() {
        const int halves = 2 * edge_count();
        face_of_.assign(halves, -1);
        for (int h0 = 0; h0 < halves; ++h0) {
            if (face_of_[h0] != -1) continue;
            Face f;
            int h = h0;
            do {
                face_of_[h] = static_cast<int>(faces_.size());
                f.half_edges.push_back(h);
                h = next_in_face(h);
            } while (h != h0);
            faces_.push_back(std::move(f));
        }
        // next_in_face is cached as an index now that faces are fixed.
    }

    /// Genus check per connected component: V - E + F = 2, faces counted
    /// among the component's half-edges.
    void check_genus(ValidationReport& r) const {
        const int n = vertex_count();
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            comp[s] = ncomp;
            std::vector<int> stack = {s};
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int e : rotation_[v]) {
                    const auto& [a, b] = edges_[e];
                    const int w = (a == v) ? b : a;
                    if (comp[w] == -1) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<int> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
        for (int v = 0; v < n; ++v) ++vcnt[comp[v]];
        for (const auto& [u, v] : edges_) ++ecnt[comp[u]];
        for (const Face& f : faces_) ++fcnt[comp[half_source(f.half_edges[0])]];
        for (int c = 0; c < ncomp; ++c) {
            if (vcnt[c] == 1 && ecnt[c] == 0) continue; // isolated vertex, one implicit face
            if (vcnt[c] - ecnt[c] + fcnt[c] != 2)
                r.violations.push_back(
                    {"non-planar-embedding",
                     "component " + std::to_string(c) + ": V-E+F = " +
                         std::to_string(vcnt[c] - ecnt[c] + fcnt[c]) + ", expected 2"});
        }
    }

    void check_recovery(ValidationReport& r) const {
        const auto rec = recovered_edges();
        if (!rec.error.empty())
            r.violations.push_back({"not-simple-after-recovery", rec.error});
    }

    std::vector<VertexKind> kinds_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<Face> faces_;
    std::vector<int> face_of_;
};

inline OnePlaneDrawing freeze(const DrawingBuilder& b) {
    return OnePlaneDrawing(b.kinds, b.edges, b.rotation);
}

/// Builder initialized with the contents of an existing drawing.
inline DrawingBuilder thaw(const OnePlaneDrawing& d) {
    DrawingBuilder b;
    for (int v = 0; v < d.vertex_count(); ++v) {
        b.kinds.push_back(d.kind(v));
        b.rotation.push_back(d.rotation(v));
    }
    b.edges = d.edge_list();
    return b;
}

inline std::vector<AuditFinding> OnePlaneDrawing::lemma_nadj_audit() const {
    std::vector<AuditFinding> out;

    // (b): a false 3-face incident with a degree-2 true vertex.
    for (int fi = 0; fi < face_count(); ++fi) {
        const Face& f = faces_[fi];
        if (f.degree() != 3 || !face_has_false_vertex(fi)) continue;
        for (int h : f.half_edges) {
            const int v = half_source(h);
            if (!is_false_vertex(v) && degree(v) == 2)
                out.push_back({"false-3-face-with-2-vertex",
                               "face " + std::to_string(fi) + " vertex " + std::to_string(v)});
        }
    }

    // Per-vertex face incidence lists (with multiplicity).
    std::vector<std::vector<int>> vfaces(vertex_count());
    for (int fi = 0; fi < face_count(); ++fi)
        for (int h : faces_[fi].half_edges) vfaces[half_source(h)].push_back(fi);

    // (c): 3-vertex on two 3-faces with two false neighbors but no 5+-face.
    for (int v = 0; v < vertex_count(); ++v) {
        if (is_false_vertex(v) || degree(v) != 3) continue;
        int three = 0, five = 0, false_nbrs = 0;
        for (int fi : vfaces[v]) {
            if (faces_[fi].degree() == 3) ++three;
            if (faces_[fi].degree() >= 5) ++five;
        }
        for (int e : rotation_[v]) {
            const auto& [a, b] = edges_[e];
            if (is_false_vertex(a == v ? b : a)) ++false_nbrs;
        }
        if (three >= 2 && false_nbrs >= 2 && five == 0)
            out.push_back({"3-vertex-no-5-face", "vertex " + std::to_string(v)});
    }

    // (d): edge uv with d(u) = 3, v false, lying on two 3-faces.
    for (int e = 0; e < edge_count(); ++e) {
        const auto& [u, v] = edges_[e];
        const bool pattern = (!is_false_vertex(u) && degree(u) == 3 && is_false_vertex(v)) ||
                             (!is_false_vertex(v) && degree(v) == 3 && is_false_vertex(u));
        if (!pattern) continue;
        if (faces_[face_of(2 * e)].degree() == 3 && faces_[face_of(2 * e + 1)].degree() == 3)
            out.push_back({"3-vertex-false-edge-two-3-faces", "edge " + std::to_string(e)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Construction helpers. All of them splice rotations so that the result is
// again a plane rotation system; tests confirm via the Euler check.

/// One corner of a face: the boundary vertex together with its entering and
/// leaving boundary edges (cyclically consecutive in the vertex rotation).
struct FaceCorner {
    int vertex;
    int edge_in;  // edge of the half-edge arriving at vertex
    int edge_out; // edge of the half-edge leaving vertex
};

inline std::vector<FaceCorner> face_corners(const OnePlaneDrawing& d, int f) {
    const auto& cycle = d.faces()[f].half_edges;
    const int L = static_cast<int>(cycle.size());
    std::vector<FaceCorner> out(L);
    for (int i = 0; i < L; ++i) {
        const int h = cycle[i];
        out[i] = FaceCorner{d.half_source(h), cycle[(i + L - 1) % L] / 2, h / 2};
    }
    return out;
}

/// Insert a new edge e into the rotation of corner.vertex inside the corner
/// wedge, i.e. between edge_in and edge_out.
inline void splice_at_corner(DrawingBuilder& b, const FaceCorner& corner, int e) {
    auto& rot = b.rotation[corner.vertex];
    if (rot.size() <= 1) {
        rot.push_back(e);
        return;
    }
    const auto it = std::find(rot.begin(), rot.end(), corner.edge_in);
    if (it == rot.end()) throw InputError("splice_at_corner: edge_in missing from rotation");
    rot.insert(it + 1, e);
}

/// Split a face by a chord between the corners at positions a and b.
inline void split_face_with_edge(DrawingBuilder& b, const std::vector<FaceCorner>& corners,
                                 int a, int bpos) {
    const int u = corners[a].vertex, v = corners[bpos].vertex;
    if (u == v) throw InputError("split_face_with_edge: corners coincide");
    const int e = b.add_edge(u, v);
    splice_at_corner(b, corners[a], e);
    splice_at_corner(b, corners[bpos], e);
}

/// Add a new vertex inside a face joined to every corner (wheel-ifies the
/// face). Returns the hub id.
inline int insert_hub_in_face(DrawingBuilder& b, const std::vector<FaceCorner>& corners,
                              VertexKind kind = VertexKind::True) {
    const int hub = b.add_vertex(kind);
    const int L = static_cast<int>(corners.size());
    std::vector<int> spokes(L);
    for (int i = 0; i < L; ++i) {
        spokes[i] = b.add_edge(corners[i].vertex, hub);
        splice_at_corner(b, corners[i], spokes[i]);
    }
    // Hub rotation runs opposite to the face cycle so the sub-faces close.
    for (int i = L - 1; i >= 0; --i) b.rotation[hub].push_back(spokes[i]);
    return hub;
}

/// Insert a crossing pair inside a face: two new original edges joining the
/// corners at positions p[0]-p[2] and p[1]-p[3] (cyclic order p0<p1<p2<p3),
/// crossing at a fresh false vertex. Returns the false vertex id.
inline int fill_face_with_crossing(DrawingBuilder& b, const std::vector<FaceCorner>& corners,
                                   const std::array<int, 4>& p) {
    const int x = b.add_vertex(VertexKind::False);
    std::array<int, 4> spokes{};
    for (int i = 0; i < 4; ++i) {
        spokes[i] = b.add_edge(corners[p[i]].vertex, x);
        splice_at_corner(b, corners[p[i]], spokes[i]);
    }
    for (int i = 3; i >= 0; --i) b.rotation[x].push_back(spokes[i]);
    return x;
}

} // namespace oneplane
