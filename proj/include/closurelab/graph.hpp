#ifndef CLOSURELAB_GRAPH_HPP
#define CLOSURELAB_GRAPH_HPP

#include "closurelab/bitset.hpp"
#include "closurelab/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace closurelab {

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Adjacency is kept as one bitset row per vertex; rows are symmetric and
// irreflexive by construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw argument_error("vertex count must be nonnegative");
        Graph g;
        g.n_ = n;
        g.rows_.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw argument_error("edge endpoint out of range");
            if (u == v) throw argument_error("self-loop not allowed");
            g.rows_[u].set(v);
            g.rows_[v].set(u);
        }
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (const auto& row : rows_) total += row.count();
        return total / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return rows_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            rows_[u].for_each([&](int v) { if (u < v) out.emplace_back(u, v); });
        return out;
    }

    // Subgraph induced on `verts`; vertex i of the result is verts[i].
    Graph induced_subgraph(const std::vector<int>& verts) const {
        std::vector<int> pos(n_, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            check_vertex(verts[i]);
            pos[verts[i]] = static_cast<int>(i);
        }
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            rows_[verts[i]].for_each([&](int w) {
                if (pos[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), pos[w]);
            });
        }
        return from_edges(static_cast<int>(verts.size()), es);
    }

    // BFS distances from source; -1 for unreachable vertices.
    std::vector<int> distances_from(int source) const {
        check_vertex(source);
        std::vector<int> dist(n_, -1);
        std::vector<int> queue{source};
        dist[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            rows_[u].for_each([&](int v) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            });
        }
        return dist;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        auto dist = distances_from(0);
        return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw argument_error("vertex index out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

struct ClosureReport {
    int closure = 1;
    std::optional<std::pair<int, int>> witness_pair; // absent when closure == 1
};

// ---------------------------------------------------------------------------
// Graph file format: first line "n m", then m lines "u v" (0-based, u != v).
// '#'-prefixed lines are comments; duplicate edges collapse.
// ---------------------------------------------------------------------------

inline Graph load_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw parse_error("missing header line");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw parse_error("line " + std::to_string(lineno) + ": malformed header '" + header + "'");

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        std::string row;
        if (!next_data_line(row))
            throw parse_error("line " + std::to_string(lineno) + ": expected " +
                              std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream rs(row);
        long long u, v;
        if (!(rs >> u >> v))
            throw parse_error("line " + std::to_string(lineno) + ": malformed edge '" + row + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("line " + std::to_string(lineno) + ": vertex index out of range in '" + row + "'");
        if (u == v)
            throw parse_error("line " + std::to_string(lineno) + ": self-loop in '" + row + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

inline void save_graph(std::ostream& out, const Graph& g) {
    auto es = g.edges(); // already u < v, sorted
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    save_graph(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------
// c-closure primitives
// ---------------------------------------------------------------------------

// N(u) n N(v), excluding u and v themselves.
inline VertexSet common_neighbor_set(const Graph& g, int u, int v) {
    if (u == v) throw argument_error("common_neighbors requires distinct vertices");
    VertexSet s = g.neighbors(u) & g.neighbors(v);
    s.reset(u);
    s.reset(v);
    return s;
}

inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    return common_neighbor_set(g, u, v).to_vector();
}

// Smallest c >= 1 such that g is c-closed, with a witnessing nonadjacent
// pair achieving closure-1 common neighbors (absent for complete graphs).
inline ClosureReport closure_number(const Graph& g) {
    ClosureReport report;
    int best = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.adjacent(u, v)) continue;
            int c = common_neighbor_set(g, u, v).count();
            if (c > best) {
                best = c;
                report.witness_pair = {u, v};
            }
        }
    }
    if (best < 0) {
        report.closure = 1;
        report.witness_pair.reset();
    } else {
        report.closure = best + 1;
    }
    return report;
}

inline bool is_c_closed(const Graph& g, int c) {
    if (c < 1) throw argument_error("c must be >= 1");
    return closure_number(g).closure <= c;
}

// Adds edges between nonadjacent pairs with >= c common neighbors until the
// graph is c-closed. One edge is added per round; the candidate pair list is
// reshuffled each round with a generator seeded from `seed`, so results are
// reproducible for a fixed seed.
inline Graph c_closure_repair(const Graph& g, int c, std::uint64_t seed) {
    if (c < 1) throw argument_error("c must be >= 1");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    std::mt19937_64 rng(seed);
    auto fisher_yates = [&](std::vector<std::pair<int, int>>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[rng() % i]);
    };

    Graph cur = Graph::from_edges(n, edges);
    for (;;) {
        std::vector<std::pair<int, int>> candidates;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!cur.adjacent(u, v) && common_neighbor_set(cur, u, v).count() >= c)
                    candidates.emplace_back(u, v);
        if (candidates.empty()) return cur;
        fisher_yates(candidates);
        edges.push_back(candidates.front());
        cur = Graph::from_edges(n, edges);
    }
}

} // namespace closurelab

#endif
