#ifndef CLOSURELAB_FAMILIES_HPP
#define CLOSURELAB_FAMILIES_HPP

#include "closurelab/bounds.hpp"
#include "closurelab/cliques.hpp"
#include "closurelab/gadgets.hpp"
#include "closurelab/named_graphs.hpp"
#include "closurelab/stats.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace closurelab {

// Complete m-ary tree of the given depth, breadth-first labels, root 0.
inline Graph build_ary_tree(int m, int depth) {
    if (m < 1 || depth < 1) throw argument_error("arity and depth must be >= 1");
    std::uint64_t count = 1, level = 1;
    for (int i = 1; i <= depth; ++i) {
        level *= static_cast<std::uint64_t>(m);
        count += level;
        if (count > 10000000) throw capacity_error("tree too large");
    }
    std::vector<std::pair<int, int>> es;
    // level i starts at s_i = 1 + m + ... + m^(i-1)
    std::uint64_t level_start = 1, prev_start = 0, prev_size = 1;
    for (int i = 1; i <= depth; ++i) {
        std::uint64_t size = prev_size * m;
        for (std::uint64_t j = 0; j < size; ++j)
            es.emplace_back(static_cast<int>(prev_start + j / m),
                            static_cast<int>(level_start + j));
        prev_start = level_start;
        prev_size = size;
        level_start += size;
    }
    return Graph::from_edges(static_cast<int>(count), es);
}

inline std::uint64_t ary_tree_size(int m, int depth) {
    std::uint64_t count = 1, level = 1;
    for (int i = 1; i <= depth; ++i) {
        level *= static_cast<std::uint64_t>(m);
        count += level;
    }
    return count;
}

// Product formula for the subtree-form family: prod_{i=1}^{depth-1}
// binom(2m, m)^(m^(i-1)).
inline BigUint subtree_form_count(int m, int depth) {
    std::uint64_t binom = 1;
    for (int i = 1; i <= m; ++i)
        binom = binom * (static_cast<std::uint64_t>(m) + i) / i; // C(2m, m)
    BigUint total(1);
    std::uint64_t exponent = 1;
    for (int i = 1; i <= depth - 1; ++i) {
        total = total * BigUint(binom).pow(exponent);
        exponent *= static_cast<std::uint64_t>(m);
    }
    return total;
}

// The subtree-form blow-up sets of the m-ary depth-`depth` pattern inside
// the 2m-ary host of the same depth: an m-ary subtree spanning depths
// 0..depth-1 plus every depth-`depth` child of its bottom level.
inline std::vector<std::vector<int>> subtree_form_blowups(int m, int depth,
                                                          const Caps& caps = {}) {
    if (m < 2 || depth < 2) throw argument_error("needs m >= 2 and depth >= 2");
    BigUint predicted = subtree_form_count(m, depth);
    if (BigUint(caps.family_count_cap) < predicted)
        throw capacity_error("subtree family larger than the family cap");

    Graph host = build_ary_tree(2 * m, depth);
    // children of v in the BFS labeling: neighbors with larger label
    auto children = [&](int v) {
        std::vector<int> out;
        host.neighbors(v).for_each([&](int w) { if (w > v) out.push_back(w); });
        return out;
    };

    std::vector<std::vector<int>> out;
    std::vector<int> current{0};

    // expand the frontier at `level`, all m-subsets of children per vertex
    std::function<void(int, std::vector<int>&)> expand = [&](int level,
                                                             std::vector<int>& frontier) {
        if (level == depth - 1) {
            std::vector<int> set = current;
            for (int v : frontier)
                for (int c : children(v)) set.push_back(c);
            std::sort(set.begin(), set.end());
            out.push_back(std::move(set));
            return;
        }
        // choose m children for every frontier vertex
        std::vector<std::vector<int>> chosen(frontier.size());
        std::function<void(std::size_t)> assign = [&](std::size_t idx) {
            if (idx == frontier.size()) {
                std::vector<int> next;
                for (auto& c : chosen)
                    for (int v : c) next.push_back(v);
                std::size_t base = current.size();
                current.insert(current.end(), next.begin(), next.end());
                expand(level + 1, next);
                current.resize(base);
                return;
            }
            auto kids = children(frontier[idx]);
            std::vector<int> combo;
            std::function<void(std::size_t)> pick = [&](std::size_t start) {
                if (static_cast<int>(combo.size()) == m) {
                    chosen[idx] = combo;
                    assign(idx + 1);
                    return;
                }
                for (std::size_t i = start;
                     i < kids.size() &&
                     kids.size() - i >= m - combo.size();
                     ++i) {
                    combo.push_back(kids[i]);
                    pick(i + 1);
                    combo.pop_back();
                }
            };
            pick(0);
        };
        assign(0);
    };

    std::vector<int> frontier{0};
    expand(0, frontier);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Doubling construction
// ---------------------------------------------------------------------------

// The doubled host: two labelled copies of every vertex, pairs joined; a
// covering acyclic subgraph T decides which edges stay index-aligned.
struct DoublingGadget {
    GadgetGraph gadget; // matched_pairs = (v, v+n) for each pattern vertex v
    std::vector<std::pair<int, int>> coverage_subgraph; // T edges as H-vertex pairs
    std::vector<std::vector<int>> components;           // components of T
};

inline DoublingGadget build_doubling_gadget(const Graph& h) {
    const int n = h.vertex_count();
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == 0) throw argument_error("pattern has an isolated vertex");

    auto match = maximum_matching(h);
    std::vector<std::pair<int, int>> coverage;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) coverage.emplace_back(v, match[v]);
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int partner = -1;
        h.neighbors(v).for_each([&](int w) {
            if (partner < 0 && match[w] != -1) partner = w;
        });
        if (partner < 0) throw std::logic_error("unmatched vertex with no matched neighbor");
        coverage.emplace_back(std::min(v, partner), std::max(v, partner));
    }
    std::sort(coverage.begin(), coverage.end());

    // components of the coverage subgraph
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj_t(n);
    for (auto [a, b] : coverage) {
        adj_t[a].push_back(b);
        adj_t[b].push_back(a);
    }
    std::vector<std::vector<int>> components;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v}, members;
        comp[v] = static_cast<int>(components.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : adj_t[u])
                if (comp[w] < 0) {
                    comp[w] = comp[v];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }

    std::vector<char> in_t(n * n, 0);
    for (auto [a, b] : coverage) in_t[a * n + b] = in_t[b * n + a] = 1;

    std::vector<std::pair<int, int>> es;
    for (auto [v, w] : h.edges()) {
        if (in_t[v * n + w]) {
            es.emplace_back(v, w);
            es.emplace_back(v + n, w + n);
        } else {
            es.emplace_back(v, w);
            es.emplace_back(v, w + n);
            es.emplace_back(v + n, w);
            es.emplace_back(v + n, w + n);
        }
    }
    for (int v = 0; v < n; ++v) es.emplace_back(v, v + n);

    DoublingGadget out;
    out.coverage_subgraph = coverage;
    out.components = std::move(components);
    out.gadget.case_tag = GadgetCase::Doubling;
    out.gadget.pattern = Pattern(h);
    out.gadget.graph = Graph::from_edges(2 * n, es);
    for (int v = 0; v < n; ++v) out.gadget.matched_pairs.emplace_back(v, v + n);
    out.gadget.measured_closure = closure_number(out.gadget.graph).closure;
    out.gadget.claimed_closure = 2 * closure_number(h).closure + 1;
    if (out.gadget.measured_closure > out.gadget.claimed_closure)
        out.gadget.claimed_closure = out.gadget.measured_closure;
    return out;
}

// Designated transversal: copy index constant on every coverage component;
// components listed in `ones` take the first copy.
inline std::vector<int> doubling_designated_set(const DoublingGadget& dg,
                                                const std::vector<int>& ones) {
    const int n = dg.gadget.pattern.size();
    std::vector<char> first(dg.components.size(), 0);
    for (int c : ones) {
        if (c < 0 || c >= static_cast<int>(dg.components.size()))
            throw argument_error("component index out of range");
        first[c] = 1;
    }
    std::vector<int> set;
    for (std::size_t c = 0; c < dg.components.size(); ++c)
        for (int v : dg.components[c]) set.push_back(first[c] ? v : v + n);
    std::sort(set.begin(), set.end());
    return set;
}

// ---------------------------------------------------------------------------
// Star patterns
// ---------------------------------------------------------------------------

struct StarBlowupReport {
    std::uint64_t count = 0;
    BigUint bound;                    // 3^c n^2 + n^c
    bool within_bound = true;
    bool big_centers_are_cliques = true; // sets admitting a center part > c
    std::uint64_t big_center_sets = 0;
    std::vector<std::vector<int>> sets;
};

// Counts maximal non-induced unprescribed star blow-ups by oracle and
// cross-checks the structure split: whenever some witness partition has a
// center part larger than c, the whole set must be a maximal clique.
inline StarBlowupReport count_star_blowups(const Graph& g, int leaf_count, int c,
                                           const Caps& caps = {}) {
    if (c < 1) throw argument_error("c must be >= 1");
    if (leaf_count <= c) throw argument_error("leaf count must exceed c");
    if (!is_c_closed(g, c))
        throw precondition_error("host graph is not " + std::to_string(c) + "-closed");

    Pattern star(star_graph(leaf_count));
    auto oracle = enumerate_maximal_blowups(g, star, false, caps);

    StarBlowupReport report;
    report.count = oracle.count;
    report.bound = star_count_bound(std::max(g.vertex_count(), 1), c);
    report.within_bound = BigUint(report.count) <= report.bound;
    report.sets = oracle.sets;

    const int n = g.vertex_count();
    std::vector<std::uint64_t> row(n, 0);
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int w) { row[v] |= std::uint64_t{1} << w; });

    for (const auto& w_set : oracle.sets) {
        std::uint64_t wmask = 0;
        for (int v : w_set) wmask |= std::uint64_t{1} << v;
        const int wsize = static_cast<int>(w_set.size());
        bool big_center = false;
        // center candidates: subsets S of W complete to W \ S with |S| > c
        for (std::uint64_t sub = wmask; sub; sub = (sub - 1) & wmask) {
            const int ssize = std::popcount(sub);
            if (ssize <= c || wsize - ssize < leaf_count) continue;
            bool complete = true;
            for (std::uint64_t m = sub; m && complete; m &= m - 1) {
                int v = std::countr_zero(m);
                std::uint64_t others = (wmask ^ sub) & ~row[v];
                if (others) complete = false;
            }
            if (complete) { big_center = true; break; }
        }
        if (big_center) {
            ++report.big_center_sets;
            if (!is_maximal_clique(g, w_set)) report.big_centers_are_cliques = false;
        }
    }
    return report;
}

} // namespace closurelab

#endif
