#ifndef CLOSURELAB_NAMED_GRAPHS_HPP
#define CLOSURELAB_NAMED_GRAPHS_HPP

#include "closurelab/graph.hpp"

#include <random>
#include <vector>

namespace closurelab {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw argument_error("cycle needs at least 3 vertices");
    auto es = path_graph(n).edges();
    es.emplace_back(0, n - 1);
    return Graph::from_edges(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph::from_edges(a + b, es);
}

// Star with `leaves` leaves; vertex 0 is the center.
inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

// Disjoint union of k edges (a perfect matching on 2k vertices):
// edge i joins 2i and 2i+1.
inline Graph matching_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) es.emplace_back(2 * i, 2 * i + 1);
    return Graph::from_edges(2 * k, es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), es);
}

// Outer cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, es);
}

// 50-vertex 7-regular graph of girth 5: five pentagons P_h and five
// pentagrams Q_j, with P_{h,i} ~ Q_{j,k} exactly when k = h*j + i (mod 5).
// Vertex numbering: P_{h,i} = 5h + i, Q_{j,k} = 25 + 5j + k.
inline Graph hoffman_singleton_graph() {
    std::vector<std::pair<int, int>> es;
    auto P = [](int h, int i) { return 5 * h + i; };
    auto Q = [](int j, int k) { return 25 + 5 * j + k; };
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) es.emplace_back(P(h, i), P(h, (i + 1) % 5));
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) es.emplace_back(Q(j, k), Q(j, (k + 2) % 5));
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) es.emplace_back(P(h, i), Q(j, (h * j + i) % 5));
    return Graph::from_edges(50, es);
}

// 36-vertex 5-regular graph of girth 5, obtained from the 50-vertex graph
// above by deleting an edge's endpoints together with their neighborhoods.
inline Graph sylvester_graph() {
    Graph hs = hoffman_singleton_graph();
    int u = 0, v = 1; // adjacent: P_{0,0} ~ P_{0,1}
    VertexSet drop = hs.neighbors(u) | hs.neighbors(v);
    drop.set(u);
    drop.set(v);
    std::vector<int> keep;
    for (int w = 0; w < hs.vertex_count(); ++w)
        if (!drop.test(w)) keep.push_back(w);
    return hs.induced_subgraph(keep);
}

// Erdos-Renyi sample with a fixed seed; edge probability num/den.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> es;
    // 53-bit uniform draw, deterministic across platforms
    auto coin = [&]() {
        return (rng() >> 11) * (1.0 / 9007199254740992.0) < p;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin()) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

// Shortest cycle length; -1 for forests. BFS from every vertex.
inline int girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), par(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            bool done = false;
            g.neighbors(u).for_each([&](int w) {
                if (done) return;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    queue.push_back(w);
                } else if (w != par[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                    if (best == 3) done = true;
                }
            });
            if (best == 3) return 3;
        }
    }
    return best;
}

} // namespace closurelab

#endif
