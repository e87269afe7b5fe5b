#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace oneplane {

/// Dinic max-flow on a small integer-capacity network; deterministic given
/// the edge insertion order. Sized for the degree-constrained assignment
/// instances here (a few hundred nodes), not for general use.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1) {}

    int add_edge(int from, int to, int cap) {
        const int id = static_cast<int>(to_.size());
        to_.push_back(to);
        cap_.push_back(cap);
        next_.push_back(head_[from]);
        head_[from] = id;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = id + 1;
        return id;
    }

    int run(int s, int t) {
        int total = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            int pushed;
            while ((pushed = dfs(s, t, std::numeric_limits<int>::max())) > 0) total += pushed;
        }
        s_ = s;
        return total;
    }

    /// Flow currently on forward edge `id` (as returned by add_edge).
    int flow(int id) const { return cap_[id ^ 1]; }

    /// Nodes reachable from the last run's source in the residual graph;
    /// the min-cut side used for infeasibility certificates.
    std::vector<char> residual_reachable() const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack = {s_};
        seen[s_] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e = head_[v]; e != -1; e = next_[e]) {
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    stack.push_back(to_[e]);
                }
            }
        }
        return seen;
    }

private:
    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = next_[e]) {
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[v] + 1;
                    q.push(to_[e]);
                }
            }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int limit) {
        if (v == t) return limit;
        for (int& e = iter_[v]; e != -1; e = next_[e]) {
            const int w = to_[e];
            if (cap_[e] > 0 && level_[w] == level_[v] + 1) {
                const int pushed = dfs(w, t, std::min(limit, cap_[e]));
                if (pushed > 0) {
                    cap_[e] -= pushed;
                    cap_[e ^ 1] += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, to_, cap_, next_, level_, iter_;
    int s_ = 0;
};

} // namespace oneplane
