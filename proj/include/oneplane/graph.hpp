#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "oneplane/common.hpp"

namespace oneplane {

/// Unordered vertex pair; always stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw InputError("edge endpoints must differ");
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite simple undirected graph over vertex ids 0..n-1. Immutable value
/// type: edits return new graphs, so instances can be shared across threads
/// and recursive solvers without copies-on-write discipline.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, const std::vector<Edge>& edges = {}) : n_(n), adj_(n) {
        if (n < 0) throw InputError("vertex count must be non-negative");
        for (const auto& [u, v] : edges) add_edge_internal(u, v);
        finish();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool has_edge(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    /// (delta, Delta) of a nonempty graph.
    std::pair<int, int> degree_extremes() const {
        if (n_ == 0) throw InputError("degree_extremes: empty graph");
        int lo = degree(0), hi = degree(0);
        for (int v = 1; v < n_; ++v) {
            lo = std::min(lo, degree(v));
            hi = std::max(hi, degree(v));
        }
        return {lo, hi};
    }

    int min_degree() const { return degree_extremes().first; }
    int max_degree() const { return degree_extremes().second; }

    /// True iff there is exactly one connected component. The empty graph
    /// counts as connected.
    bool is_connected() const {
        if (n_ <= 1) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
            }
        }
        return visited == n_;
    }

    Graph add_edge(int u, int v) const {
        const Edge e = make_edge(u, v);
        check_vertex(e.first);
        check_vertex(e.second);
        if (has_edge(u, v)) throw InputError("add_edge: edge already present");
        std::vector<Edge> es = edges_;
        es.push_back(e);
        return Graph(n_, es);
    }

    Graph remove_edge(int u, int v) const {
        const Edge e = make_edge(u, v);
        if (!has_edge(u, v)) throw InputError("remove_edge: edge not present");
        std::vector<Edge> es;
        es.reserve(edges_.size() - 1);
        for (const Edge& f : edges_)
            if (f != e) es.push_back(f);
        return Graph(n_, es);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("unknown vertex id " + std::to_string(v));
    }

    void add_edge_internal(int u, int v) {
        const Edge e = make_edge(u, v);
        check_vertex(e.first);
        check_vertex(e.second);
        edges_.push_back(e);
    }

    void finish() {
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw InputError("duplicate edge");
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Index of an edge within g.edges(); the coloring modules use this as a
/// dense edge id.
inline int edge_index(const Graph& g, int u, int v) {
    const Edge e = make_edge(u, v);
    const auto& es = g.edges();
    const auto it = std::lower_bound(es.begin(), es.end(), e);
    if (it == es.end() || *it != e) throw InputError("edge_index: edge not present");
    return static_cast<int>(it - es.begin());
}

} // namespace oneplane
