#ifndef CLOSURELAB_STATS_HPP
#define CLOSURELAB_STATS_HPP

#include "closurelab/graph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace closurelab {

// Maximum matching via augmenting-path search with blossom contraction.
// Returns match[v] = partner of v, or -1 if v is unmatched.
inline std::vector<int> maximum_matching(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).to_vector();

    std::vector<int> match(n, -1), parent(n, -1), base(n);
    std::vector<bool> used(n, false), blossom(n, false);

    auto lowest_common_base = [&](int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };

    auto find_augmenting = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int b = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = find_augmenting(v);
        while (u != -1) {
            int pv = parent[u], ppv = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = ppv;
        }
    }
    return match;
}

inline int maximum_matching_size(const Graph& g) {
    auto match = maximum_matching(g);
    int cnt = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (match[v] > v) ++cnt;
    return cnt;
}

namespace detail {

inline void mis_search(const Graph& g, VertexSet candidates, int current, int& best) {
    int size = candidates.count();
    if (current + size <= best) return;
    if (size == 0) {
        best = std::max(best, current);
        return;
    }
    // degree within the candidate set; a max-degree branch vertex shrinks
    // the include-branch fastest
    int pick = -1, pick_deg = -1;
    candidates.for_each([&](int v) {
        int d = (g.neighbors(v) & candidates).count();
        if (d > pick_deg) { pick_deg = d; pick = v; }
    });
    if (pick_deg <= 1) {
        // candidate set induces a matching: take one endpoint per edge
        int edges = 0;
        candidates.for_each([&](int v) { edges += (g.neighbors(v) & candidates).count(); });
        best = std::max(best, current + size - edges / 2);
        return;
    }
    VertexSet with = candidates;
    with.subtract(g.neighbors(pick));
    with.reset(pick);
    mis_search(g, with, current + 1, best);
    VertexSet without = candidates;
    without.reset(pick);
    mis_search(g, without, current, best);
}

} // namespace detail

// Exact independence number; exponential-time branch and bound, intended
// for small instances.
inline int independence_number(const Graph& g) {
    VertexSet all(g.vertex_count());
    all.fill();
    int best = 0;
    detail::mis_search(g, all, 0, best);
    return best;
}

inline int max_codegree(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            best = std::max(best, common_neighbor_set(g, u, v).count());
    return best;
}

struct GraphStats {
    int min_degree = 0;
    int max_degree = 0;
    int maximum_matching_size = 0;
    std::optional<int> independence_number; // absent above the exact-computation cap
    bool distances_available = false;       // all pairwise distances finite
};

inline GraphStats graph_stats(const Graph& g, int alpha_cap = 40) {
    GraphStats s;
    const int n = g.vertex_count();
    if (n > 0) {
        s.min_degree = g.degree(0);
        s.max_degree = g.degree(0);
        for (int v = 1; v < n; ++v) {
            s.min_degree = std::min(s.min_degree, g.degree(v));
            s.max_degree = std::max(s.max_degree, g.degree(v));
        }
    }
    s.maximum_matching_size = maximum_matching_size(g);
    if (n <= alpha_cap) s.independence_number = independence_number(g);
    s.distances_available = g.connected();
    return s;
}

} // namespace closurelab

#endif
