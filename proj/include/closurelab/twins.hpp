#ifndef CLOSURELAB_TWINS_HPP
#define CLOSURELAB_TWINS_HPP

#include "closurelab/cliques.hpp"
#include "closurelab/graph.hpp"

#include <algorithm>
#include <vector>

namespace closurelab {

// Two vertices are twins when N(v) \ {v'} = N(v') \ {v}. The twin relation
// is an equivalence; each class is either fully adjacent (clique group) or
// fully nonadjacent (independent group). Plus-twin groups are the classes
// of the refinement to adjacent twins.
struct TwinGroup {
    std::vector<int> members; // sorted
    bool is_clique_group = false;
    bool is_independent_group = false; // singletons are flagged as both
    bool is_bad = false;               // members' neighborhoods induce cliques
};

struct TwinDecomposition {
    std::vector<TwinGroup> groups;              // ordered by smallest member
    std::vector<std::vector<int>> plus_groups;  // refinement, same ordering
    std::vector<int> group_of;                  // vertex -> index into groups

    const TwinGroup& group_containing(int v) const { return groups[group_of[v]]; }
};

inline bool are_twins(const Graph& g, int u, int v) {
    VertexSet nu = g.neighbors(u);
    VertexSet nv = g.neighbors(v);
    nu.reset(v);
    nv.reset(u);
    return nu == nv;
}

// A vertex is bad when its neighborhood induces a clique; vertices with at
// most one neighbor are bad.
inline bool is_bad_vertex(const Graph& g, int v) {
    return is_clique(g, g.neighbors(v).to_vector());
}

inline TwinDecomposition twin_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    TwinDecomposition d;
    d.group_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (d.group_of[v] >= 0) continue;
        TwinGroup grp;
        grp.members.push_back(v);
        d.group_of[v] = static_cast<int>(d.groups.size());
        for (int w = v + 1; w < n; ++w) {
            if (d.group_of[w] < 0 && are_twins(g, v, w)) {
                grp.members.push_back(w);
                d.group_of[w] = d.group_of[v];
            }
        }
        if (grp.members.size() == 1) {
            grp.is_clique_group = true;
            grp.is_independent_group = true;
        } else {
            grp.is_clique_group = g.adjacent(grp.members[0], grp.members[1]);
            grp.is_independent_group = !grp.is_clique_group;
        }
        grp.is_bad = is_bad_vertex(g, grp.members[0]);
        d.groups.push_back(std::move(grp));
    }

    // plus twins: same twin group and mutually adjacent
    for (const TwinGroup& grp : d.groups) {
        if (grp.members.size() >= 2 && grp.is_clique_group) {
            d.plus_groups.push_back(grp.members);
        } else {
            for (int v : grp.members) d.plus_groups.push_back({v});
        }
    }
    return d;
}

inline std::vector<std::vector<int>> bad_twin_groups(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const TwinGroup& grp : twin_decomposition(g).groups)
        if (grp.is_bad) out.push_back(grp.members);
    return out;
}

} // namespace closurelab

#endif
