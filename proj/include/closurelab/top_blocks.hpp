#ifndef CLOSURELAB_TOP_BLOCKS_HPP
#define CLOSURELAB_TOP_BLOCKS_HPP

#include "closurelab/gadgets.hpp"
#include "closurelab/stats.hpp"
#include "closurelab/twins.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace closurelab {

enum class TopBlockType { Ia, Ib, II };

inline const char* to_string(TopBlockType t) {
    switch (t) {
        case TopBlockType::Ia: return "I(a)";
        case TopBlockType::Ib: return "I(b)";
        case TopBlockType::II: return "II";
    }
    return "?";
}

// One duplicated region: the chosen twin group's representative v, its
// special neighbor u, optional special second neighbors S, and the copy
// layers (layer 0 holds the original vertices).
struct TopBlock {
    std::vector<int> chosen_group; // [x] in H
    TopBlockType type = TopBlockType::Ia;
    int rep_v = -1;
    int rep_u = -1;
    std::vector<int> zone;                      // H vertices duplicated: [v] u [u] (u S)
    std::vector<std::vector<int>> layers;       // gadget ids per layer, parallel to zone
};

struct TopBlockLayout {
    std::vector<TopBlock> blocks;
    int copy_count = 2; // layers used for Type I(a) blocks
    int i_star = 0;
    std::vector<int> virtual_degree; // per gadget vertex
    std::vector<int> origin;         // per gadget vertex: the H vertex it copies
};

struct TopBlockParams {
    int copy_count = 2;  // C_d for Type I(a); types I(b) and II always use 2
    int block_budget = 1;
    int separation = 0;  // chosen groups must be more than this far apart
    std::optional<double> degree_class_fraction; // override for the i* rule
};

namespace detail {

struct GroupPlan {
    TopBlockType type;
    int v, u;
    std::vector<int> zone; // [v] u [u] (u S), sorted
};

// Type trichotomy for a chosen twin group of degree i*. The type is
// intrinsic to the group; among its representative choices the first one
// whose duplication zone avoids `blocked` (existing zones and their
// neighborhoods) is taken.
inline std::optional<GroupPlan> plan_group(const Graph& h, const TwinDecomposition& twins,
                                           const std::vector<int>& group, int i_star,
                                           const VertexSet& blocked) {
    const int x = group[0];
    auto dist = h.distances_from(x);

    auto group_of = [&](int v) { return twins.groups[twins.group_of[v]].members; };
    auto zone_clear = [&](const std::vector<int>& zone) {
        for (int z : zone)
            if (blocked.test(z)) return false;
        return true;
    };
    auto make_zone = [&](std::vector<int> zone, const std::vector<int>& more) {
        for (int w : more) zone.push_back(w);
        std::sort(zone.begin(), zone.end());
        zone.erase(std::unique(zone.begin(), zone.end()), zone.end());
        return zone;
    };

    // candidates for I(a): distance <= 2 from x (group members included)
    std::vector<int> near;
    for (int v = 0; v < h.vertex_count(); ++v)
        if ((dist[v] >= 0 && dist[v] <= 2) || twins.group_of[v] == twins.group_of[x])
            near.push_back(v);

    bool is_type_ia = false;
    std::optional<GroupPlan> fallback;
    for (int v : near) {
        if (h.degree(v) != i_star) continue;
        std::vector<int> mates;
        h.neighbors(v).for_each([&](int w) {
            if (twins.group_of[w] != twins.group_of[v] && h.degree(w) == i_star)
                mates.push_back(w);
        });
        for (int u : mates) {
            is_type_ia = true;
            auto zone = make_zone(group_of(v), group_of(u));
            if (!zone_clear(zone)) continue;
            GroupPlan plan;
            plan.type = TopBlockType::Ia;
            plan.v = v;
            plan.u = u;
            plan.zone = std::move(zone);
            return plan;
        }
    }
    if (is_type_ia) return std::nullopt; // type I(a) but every zone collides

    // I(b): a neighbor of x outside [x] with no degree-i* neighbor outside [x]
    std::vector<int> outside_nbrs;
    h.neighbors(x).for_each([&](int w) {
        if (twins.group_of[w] != twins.group_of[x]) outside_nbrs.push_back(w);
    });
    bool is_type_ib = false;
    for (int u : outside_nbrs) {
        bool touches_low = false;
        h.neighbors(u).for_each([&](int w) {
            if (twins.group_of[w] != twins.group_of[x] && h.degree(w) == i_star)
                touches_low = true;
        });
        if (touches_low) continue;
        is_type_ib = true;
        auto zone = make_zone(group_of(x), group_of(u));
        if (!zone_clear(zone)) continue;
        GroupPlan plan;
        plan.type = TopBlockType::Ib;
        plan.v = x;
        plan.u = u;
        plan.zone = std::move(zone);
        return plan;
    }
    if (is_type_ib) return std::nullopt;

    // II: v = x, u = an outside neighbor, S = u's degree-i* neighbors
    // outside [x]
    for (int u : outside_nbrs) {
        std::vector<int> special;
        h.neighbors(u).for_each([&](int w) {
            if (twins.group_of[w] != twins.group_of[x] && h.degree(w) == i_star)
                special.push_back(w);
        });
        if (special.empty()) return std::nullopt; // would have been type I(b)
        auto zone = make_zone(make_zone(group_of(x), group_of(u)), special);
        if (!zone_clear(zone)) continue;
        GroupPlan plan;
        plan.type = TopBlockType::II;
        plan.v = x;
        plan.u = u;
        plan.zone = std::move(zone);
        return plan;
    }
    return std::nullopt;
}

} // namespace detail

// Bounded-degree host construction: pick twin groups of the selected
// degree class, duplicate each group's region into copy layers, and wire
// externals to every layer. Selection is greedy in group order subject to
// the separation rule and to the regions being pairwise nonadjacent.
inline std::pair<GadgetGraph, TopBlockLayout>
build_bounded_degree_gadget(const Graph& h, const TopBlockParams& params = {}) {
    const int n = h.vertex_count();
    if (!h.connected()) throw argument_error("pattern must be connected");
    if (params.copy_count < 2) throw argument_error("copy_count must be >= 2");
    if (params.separation < 0) throw argument_error("separation must be >= 0");

    int max_deg = 0, min_deg = n == 0 ? 0 : h.degree(0);
    for (int v = 0; v < n; ++v) {
        max_deg = std::max(max_deg, h.degree(v));
        min_deg = std::min(min_deg, h.degree(v));
    }
    if (max_deg < 2) throw argument_error("pattern needs maximum degree >= 2");
    const double d = max_deg;

    // minimal degree class whose size clears the threshold
    std::vector<int> class_size(max_deg + 1, 0);
    for (int v = 0; v < n; ++v) ++class_size[h.degree(v)];
    int i_star = -1;
    for (int i = min_deg; i <= max_deg; ++i) {
        double threshold = params.degree_class_fraction
                               ? *params.degree_class_fraction * n
                               : n * std::pow(d, -(20.0 * (max_deg - i + 1) - 1));
        if (class_size[i] > threshold) { i_star = i; break; }
    }
    if (i_star < 0) i_star = min_deg; // the power rule always fires at desk scale

    auto twins = twin_decomposition(h);
    std::vector<detail::GroupPlan> chosen;
    std::vector<const TwinGroup*> chosen_groups;
    // zones already claimed, together with their neighborhoods: new zones
    // must avoid both so copy layers stay independent
    VertexSet blocked(n);
    for (const auto& grp : twins.groups) {
        if (static_cast<int>(chosen.size()) >= params.block_budget) break;
        if (h.degree(grp.members[0]) != i_star) continue;
        // separation between representatives
        bool ok = true;
        auto dist = h.distances_from(grp.members[0]);
        for (const auto& prev : chosen_groups)
            if (dist[prev->members[0]] >= 0 && dist[prev->members[0]] <= params.separation)
                ok = false;
        if (!ok) continue;
        auto plan = detail::plan_group(h, twins, grp.members, i_star, blocked);
        if (!plan) continue;
        for (int z : plan->zone) {
            blocked.set(z);
            blocked |= h.neighbors(z);
        }
        chosen.push_back(std::move(*plan));
        chosen_groups.push_back(&grp);
    }
    if (chosen.empty())
        throw precondition_error(
            "no eligible twin group under the separation constraint; relax separation");

    // assemble the gadget
    auto edges = h.edges();
    TopBlockLayout layout;
    layout.copy_count = params.copy_count;
    layout.i_star = i_star;
    int next_id = n;
    std::vector<char> duplicated(n, 0);

    for (std::size_t b = 0; b < chosen.size(); ++b) {
        const auto& plan = chosen[b];
        TopBlock block;
        block.chosen_group = chosen_groups[b]->members;
        block.type = plan.type;
        block.rep_v = plan.v;
        block.rep_u = plan.u;
        block.zone = plan.zone;
        for (int z : plan.zone) duplicated[z] = 1;

        const int layers = plan.type == TopBlockType::Ia ? params.copy_count : 2;
        block.layers.assign(layers, {});
        block.layers[0] = plan.zone;
        std::vector<int> pos_in_zone(n, -1);
        for (std::size_t i = 0; i < plan.zone.size(); ++i)
            pos_in_zone[plan.zone[i]] = static_cast<int>(i);

        for (int layer = 1; layer < layers; ++layer) {
            for (std::size_t i = 0; i < plan.zone.size(); ++i)
                block.layers[layer].push_back(next_id++);
            for (std::size_t i = 0; i < plan.zone.size(); ++i) {
                const int z = plan.zone[i];
                const int copy = block.layers[layer][i];
                h.neighbors(z).for_each([&](int w) {
                    if (pos_in_zone[w] >= 0) {
                        // zone-internal edge, mirrored within the layer
                        if (w < z) return; // once per pair
                        edges.emplace_back(copy, block.layers[layer][pos_in_zone[w]]);
                    } else {
                        edges.emplace_back(copy, w);
                    }
                });
            }
        }
        layout.blocks.push_back(std::move(block));
    }

    GadgetGraph gad;
    gad.case_tag = GadgetCase::BoundedDegree;
    gad.pattern = Pattern(h);
    gad.graph = Graph::from_edges(next_id, edges);
    for (int v = 0; v < n; ++v)
        if (!duplicated[v]) gad.core_set.push_back(v);
    gad.measured_closure = closure_number(gad.graph).closure;
    gad.claimed_closure = gad.measured_closure;

    layout.origin.resize(next_id);
    layout.virtual_degree.resize(next_id);
    for (int v = 0; v < n; ++v) layout.origin[v] = v;
    for (const auto& block : layout.blocks)
        for (std::size_t layer = 1; layer < block.layers.size(); ++layer)
            for (std::size_t i = 0; i < block.zone.size(); ++i)
                layout.origin[block.layers[layer][i]] = block.zone[i];
    for (int v = 0; v < next_id; ++v)
        layout.virtual_degree[v] = h.degree(layout.origin[v]);
    return {std::move(gad), std::move(layout)};
}

// All per-block layer selections: every combination of one layer per top
// block plus the untouched vertices. Each returned set induces a copy of
// the pattern via the origin map.
inline std::vector<std::vector<int>> naive_blowups(const GadgetGraph& gad,
                                                   const TopBlockLayout& layout) {
    std::vector<std::vector<int>> out;
    std::vector<std::size_t> pick(layout.blocks.size(), 0);
    for (;;) {
        std::vector<int> set = gad.core_set;
        for (std::size_t b = 0; b < layout.blocks.size(); ++b)
            for (int v : layout.blocks[b].layers[pick[b]]) set.push_back(v);
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
        std::size_t pos = 0;
        while (pos < layout.blocks.size() &&
               pick[pos] + 1 == layout.blocks[pos].layers.size())
            pick[pos++] = 0;
        if (pos == layout.blocks.size()) break;
        ++pick[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Degree behavior of the construction: untouched vertices adjacent to a
// duplicated region gain degree; everything else keeps its virtual degree.
struct TopBlockDegreeReport {
    bool holds = true;
    std::vector<int> violating_vertices;
};

inline TopBlockDegreeReport verify_top_block_degrees(const GadgetGraph& gad,
                                                     const TopBlockLayout& layout) {
    const Graph& g = gad.graph;
    std::vector<char> special(g.vertex_count(), 0);
    for (const auto& block : layout.blocks)
        for (const auto& layer : block.layers)
            for (int v : layer) special[v] = 1;

    TopBlockDegreeReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool touches = false;
        g.neighbors(v).for_each([&](int w) { touches = touches || special[w]; });
        const int deg = g.degree(v);
        const bool expected_larger = !special[v] && touches;
        const bool ok = expected_larger ? deg > layout.virtual_degree[v]
                                        : deg == layout.virtual_degree[v];
        if (!ok) {
            report.holds = false;
            report.violating_vertices.push_back(v);
        }
    }
    return report;
}

} // namespace closurelab

#endif
