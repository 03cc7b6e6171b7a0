#ifndef CLOSURELAB_CLIQUES_HPP
#define CLOSURELAB_CLIQUES_HPP

#include "closurelab/graph.hpp"

#include <algorithm>
#include <vector>

namespace closurelab {

namespace detail {

// Pivot expansion: recurse on current clique R, candidates P, excluded X.
inline void expand_cliques(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                           std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r.to_vector());
        return;
    }
    // pivot: vertex of P|X with most neighbors inside P
    int pivot = -1, best = -1;
    auto consider = [&](int v) {
        int c = (g.neighbors(v) & p).count();
        if (c > best) { best = c; pivot = v; }
    };
    p.for_each(consider);
    x.for_each(consider);

    VertexSet ext = p;
    if (pivot >= 0) ext.subtract(g.neighbors(pivot));
    std::vector<int> branch = ext.to_vector();
    for (int v : branch) {
        r.set(v);
        expand_cliques(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

} // namespace detail

// All inclusion-maximal cliques, each sorted ascending, listed in
// lexicographic order. Isolated vertices appear as singleton cliques.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    VertexSet r(n), p(n), x(n);
    p.fill();
    detail::expand_cliques(g, r, p, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adjacent(verts[i], verts[j])) return false;
    return true;
}

inline bool is_independent_set(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) return false;
    return true;
}

inline bool is_maximal_clique(const Graph& g, const std::vector<int>& verts) {
    if (!is_clique(g, verts)) return false;
    VertexSet s = VertexSet::of(g.vertex_count(), verts);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.test(v)) continue;
        if (s.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

} // namespace closurelab

#endif
