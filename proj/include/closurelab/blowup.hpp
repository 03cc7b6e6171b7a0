#ifndef CLOSURELAB_BLOWUP_HPP
#define CLOSURELAB_BLOWUP_HPP

#include "closurelab/caps.hpp"
#include "closurelab/pattern.hpp"
#include "closurelab/stats.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace closurelab {

// A witness that G[host_set] is a blow-up of the pattern: part_of[i] is the
// pattern vertex assigned to host_set[i]; fibers are the parts A_i.
struct BlowupAssignment {
    std::vector<int> host_set; // sorted
    std::vector<int> part_of;  // parallel to host_set
    bool induced = false;

    std::vector<std::vector<int>> fibers(int k) const {
        std::vector<std::vector<int>> out(k);
        for (std::size_t i = 0; i < host_set.size(); ++i)
            out[part_of[i]].push_back(host_set[i]);
        return out;
    }
};

struct EnumerationResult {
    std::vector<std::vector<int>> sets; // canonical: each sorted, list lex-sorted
    std::uint64_t count = 0;
    double elapsed_seconds = 0.0;
    std::string mode; // "oracle" or "fast"
    // fast-mode diagnostics
    std::uint64_t candidates_generated = 0;
    std::uint64_t candidates_passing = 0;
};

// Validates a fully specified assignment against the blow-up rules:
// nonempty fibers, completeness across pattern edges, emptiness across
// pattern non-edges in induced mode, and the U+ / U- part prescriptions.
inline bool check_blowup_assignment(const Graph& g, const Pattern& p,
                                    const BlowupAssignment& a) {
    const int k = p.size();
    if (a.host_set.size() != a.part_of.size()) return false;
    std::vector<char> seen(k, 0);
    for (std::size_t i = 0; i < a.host_set.size(); ++i) {
        int part = a.part_of[i];
        if (part < 0 || part >= k) return false;
        seen[part] = 1;
    }
    for (int i = 0; i < k; ++i)
        if (!seen[i]) return false;

    for (std::size_t i = 0; i < a.host_set.size(); ++i) {
        for (std::size_t j = i + 1; j < a.host_set.size(); ++j) {
            int u = a.host_set[i], v = a.host_set[j];
            int pu = a.part_of[i], pv = a.part_of[j];
            bool edge = g.adjacent(u, v);
            if (pu == pv) {
                if (p.in_clique_set(pu) && !edge) return false;
                if (a.induced && p.in_indep_set(pu) && edge) return false;
            } else if (p.h.adjacent(pu, pv)) {
                if (!edge) return false;
            } else if (a.induced && edge) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {

// Backtracking assignment search over flat word buffers. Vertices are
// picked most-constrained-first with deterministic tie-breaks; pattern
// candidates go by index, so the witness is the first assignment in that
// canonical order. allowed[i] tracks which unassigned vertices may still
// join part i, tightened by adjacency masks, same-part codegree
// requirements, and capacity propagation over still-empty neighbor parts.
// When only one or two parts can exceed size one, the decision is settled
// by enumerating the merge packings and solving a quotient bijection.
class BlowupSearch {
public:
    BlowupSearch(const Graph& g, std::vector<int> s, const Pattern& p, bool induced)
        : g_(g), p_(p), induced_(induced), k_(p.size()), s_(std::move(s)) {
        std::sort(s_.begin(), s_.end());
        s_.erase(std::unique(s_.begin(), s_.end()), s_.end());
        for (int v : s_)
            if (v < 0 || v >= g.vertex_count())
                throw argument_error("host set vertex out of range");
    }

    std::optional<BlowupAssignment> run() {
        const int m = static_cast<int>(s_.size());
        if (m < k_) return std::nullopt;

        // compact S to indices 0..m-1
        words_ = (m + 63) / 64;
        std::vector<int> local_of(g_.vertex_count(), -1);
        for (int i = 0; i < m; ++i) local_of[s_[i]] = i;

        nbr_.assign(static_cast<std::size_t>(m) * words_, 0);
        non_nbr_.assign(static_cast<std::size_t>(m) * words_, 0);
        deg_.assign(m, 0);
        for (int i = 0; i < m; ++i) {
            g_.neighbors(s_[i]).for_each([&](int w) {
                int j = local_of[w];
                if (j >= 0) {
                    nbr_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                    ++deg_[i];
                }
            });
        }
        std::uint64_t tail = (m % 64) ? ((std::uint64_t{1} << (m % 64)) - 1)
                                      : ~std::uint64_t{0};
        for (int i = 0; i < m; ++i) {
            for (int w = 0; w < words_; ++w)
                non_nbr_[i * words_ + w] = ~nbr_[i * words_ + w];
            non_nbr_[i * words_ + words_ - 1] &= tail;
            non_nbr_[i * words_ + (i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
        }

        pattern_degree_.resize(k_);
        int min_pattern_degree = p_.h.degree(0);
        for (int i = 0; i < k_; ++i) {
            pattern_degree_[i] = p_.h.degree(i);
            min_pattern_degree = std::min(min_pattern_degree, pattern_degree_[i]);
        }
        for (int i = 0; i < m; ++i)
            if (deg_[i] < min_pattern_degree) return std::nullopt;

        // Two vertices in one part are both complete to that part's
        // nonempty neighbor parts, so they share >= delta(H) neighbors in
        // S. A partition into k parts merges m - k times, and the merges
        // within each part contain floor(size/2) disjoint shareable
        // pairs, so m - 2 * matching(shareable pairs) <= k is necessary.
        // The pairwise codegrees also feed the same-part filter in apply().
        if (m > k_) {
            codeg_.assign(static_cast<std::size_t>(m) * m, 0);
            std::vector<std::pair<int, int>> shareable;
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    int codeg = 0;
                    for (int w = 0; w < words_; ++w)
                        codeg += std::popcount(nbr_[i * words_ + w] & nbr_[j * words_ + w]);
                    codeg_[i * m + j] = codeg_[j * m + i] = codeg;
                    if (codeg >= min_pattern_degree) shareable.emplace_back(i, j);
                }
            }
            if (min_pattern_degree > 0) {
                if (m - 2 * static_cast<int>(shareable.size()) > k_) return std::nullopt;
                if (shareable.size() <= 512) {
                    Graph sh = Graph::from_edges(m, shareable);
                    if (m - 2 * maximum_matching_size(sh) > k_) return std::nullopt;
                }
            }
            // With one or two merges the size->=2 parts are exactly a
            // small packing of shareable cliques: decide by enumerating
            // the packings and solving the quotient bijection, which the
            // quotient degree filters usually settle outright.
            if (m - k_ <= 2 && m <= 64 && min_pattern_degree > 0 &&
                shareable.size() <= 256) {
                auto decided = decide_with_merges(shareable);
                if (decided) return *decided;
            }
        }

        assigned_.assign(m, 0);
        pool_.assign(words_, 0);
        node_pool_.assign(static_cast<std::size_t>(m + 1) * k_ * words_, 0);
        node_empty_.assign(static_cast<std::size_t>(m + 1) * k_, 0);
        pattern_nbrs_.resize(k_);
        for (int i = 0; i < k_; ++i) pattern_nbrs_[i] = p_.h.neighbors(i).to_vector();

        allowed_.assign(static_cast<std::size_t>(k_) * words_, 0);
        for (int i = 0; i < k_; ++i) {
            for (int w = 0; w < words_ - 1; ++w) allowed_[i * words_ + w] = ~std::uint64_t{0};
            allowed_[i * words_ + words_ - 1] = tail;
        }
        if (!node_filters_.empty()) {
            for (int v = 0; v < m; ++v)
                for (int i = 0; i < k_; ++i)
                    if (!(node_filters_[v] >> i & 1))
                        allowed_[static_cast<std::size_t>(i) * words_ + (v >> 6)] &=
                            ~(std::uint64_t{1} << (v & 63));
        }
        saved_.assign(static_cast<std::size_t>(m) * k_ * words_, 0);
        assignment_.assign(m, -1);
        part_size_.assign(k_, 0);
        empty_parts_ = k_;

        if (!extend(0)) return std::nullopt;

        BlowupAssignment out;
        out.host_set = s_;
        out.induced = induced_;
        out.part_of.reserve(m);
        for (int i = 0; i < m; ++i) out.part_of.push_back(assignment_[i]);
        return out;
    }

    // pattern-candidate restriction per local vertex, used by the
    // quotient recursion (bit i allows pattern vertex i); empty = no
    // restriction
    std::vector<std::uint64_t> node_filters_;

private:
    bool allowed_test(int part, int v) const {
        return (allowed_[part * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    bool pair_shareable(const std::vector<std::pair<int, int>>& shareable, int a, int b) const {
        return std::binary_search(shareable.begin(), shareable.end(),
                                  std::make_pair(std::min(a, b), std::max(a, b)));
    }

    // Exact decision for m - k in {1, 2}: every partition's non-singleton
    // parts form a packing of shareable cliques with total excess m - k.
    // Returns the inner optional when decided; outer nullopt means the
    // packing space was too large and the caller should fall back.
    std::optional<std::optional<BlowupAssignment>> decide_with_merges(
        const std::vector<std::pair<int, int>>& shareable) {
        const int m = static_cast<int>(s_.size());
        std::vector<std::vector<std::vector<int>>> packings;
        if (m - k_ == 1) {
            for (auto [a, b] : shareable) packings.push_back({{a, b}});
        } else {
            for (auto [a, b] : shareable)
                for (int c = b + 1; c < m; ++c)
                    if (pair_shareable(shareable, a, c) && pair_shareable(shareable, b, c))
                        packings.push_back({{a, b, c}});
            for (std::size_t i = 0; i < shareable.size(); ++i)
                for (std::size_t j = i + 1; j < shareable.size(); ++j) {
                    auto [a, b] = shareable[i];
                    auto [c, d] = shareable[j];
                    if (a != c && a != d && b != c && b != d)
                        packings.push_back({{a, b}, {c, d}});
                }
        }
        if (packings.size() > 512) return std::nullopt;

        for (const auto& groups : packings) {
            auto witness = try_merge_packing(groups);
            if (witness) return std::make_optional(std::move(witness));
        }
        // decided: no packing admits a bijection, hence no blow-up
        return std::make_optional(std::optional<BlowupAssignment>{});
    }

    std::optional<BlowupAssignment> try_merge_packing(
        const std::vector<std::vector<int>>& groups) {
        const int m = static_cast<int>(s_.size());
        // quotient nodes: merged groups first, then the singletons
        std::vector<std::vector<int>> nodes = groups;
        std::vector<char> grouped(m, 0);
        for (const auto& g : groups)
            for (int v : g) grouped[v] = 1;
        for (int v = 0; v < m; ++v)
            if (!grouped[v]) nodes.push_back({v});
        const int q = static_cast<int>(nodes.size());
        if (q != k_) return std::nullopt;

        auto adjacent_local = [&](int a, int b) {
            return (nbr_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1u;
        };
        auto is_clique_grp = [&](const std::vector<int>& g) {
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = i + 1; j < g.size(); ++j)
                    if (!adjacent_local(g[i], g[j])) return false;
            return true;
        };
        auto is_indep_grp = [&](const std::vector<int>& g) {
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = i + 1; j < g.size(); ++j)
                    if (adjacent_local(g[i], g[j])) return false;
            return true;
        };

        std::vector<std::pair<int, int>> q_edges;
        for (int a = 0; a < q; ++a) {
            for (int b = a + 1; b < q; ++b) {
                int cross = 0;
                for (int u : nodes[a])
                    for (int v : nodes[b])
                        if (adjacent_local(u, v)) ++cross;
                const int total = static_cast<int>(nodes[a].size() * nodes[b].size());
                if (cross == total) q_edges.emplace_back(a, b);
                else if (induced_ && cross != 0) return std::nullopt; // mixed pair
            }
        }
        Graph quotient = Graph::from_edges(q, q_edges);

        std::vector<std::uint64_t> filters(q, 0);
        for (int x = 0; x < q; ++x) {
            const bool cliq = is_clique_grp(nodes[x]);
            const bool indep = is_indep_grp(nodes[x]);
            for (int i = 0; i < k_; ++i) {
                if (p_.in_clique_set(i) && !cliq) continue;
                if (induced_ && p_.in_indep_set(i) && !indep) continue;
                filters[x] |= std::uint64_t{1} << i;
            }
        }

        std::vector<int> all(q);
        for (int x = 0; x < q; ++x) all[x] = x;
        BlowupSearch sub(quotient, all, p_, induced_);
        sub.node_filters_ = filters;
        auto w = sub.run();
        if (!w) return std::nullopt;

        BlowupAssignment out;
        out.host_set = s_;
        out.induced = induced_;
        out.part_of.assign(m, -1);
        for (int x = 0; x < q; ++x)
            for (int v : nodes[x]) out.part_of[v] = w->part_of[x];
        return out;
    }

    // most-constrained vertex first: fewest allowed parts, ties broken by
    // degree then index, so the search follows the constraint cascade
    int select_vertex(int m) const {
        int pick = -1, pick_count = k_ + 1;
        for (int v = 0; v < m; ++v) {
            if (assigned_[v]) continue;
            int count = 0;
            for (int i = 0; i < k_ && count < pick_count; ++i)
                if (allowed_test(i, v) && deg_[v] >= pattern_degree_[i]) ++count;
            if (count < pick_count ||
                (count == pick_count && pick >= 0 && deg_[v] > deg_[pick])) {
                pick = v;
                pick_count = count;
            }
        }
        return pick;
    }

    bool extend(int pos) {
        const int m = static_cast<int>(s_.size());
        if (pos == m) return empty_parts_ == 0;
        const int v = select_vertex(m);
        const int remaining = m - pos - 1;

        // per-part empty-neighbor pools, shared by every candidate below
        std::uint64_t* pools = &node_pool_[static_cast<std::size_t>(pos) * k_ * words_];
        for (int i = 0; i < k_; ++i) {
            int empty_nbrs = 0;
            std::uint64_t* pool = pools + static_cast<std::size_t>(i) * words_;
            for (int w = 0; w < words_; ++w) pool[w] = 0;
            for (int j : pattern_nbrs_[i]) {
                if (part_size_[j] > 0) continue;
                ++empty_nbrs;
                const std::uint64_t* dom = &allowed_[static_cast<std::size_t>(j) * words_];
                for (int w = 0; w < words_; ++w) pool[w] |= dom[w];
            }
            node_empty_[pos * k_ + i] = empty_nbrs;
        }

        const std::uint64_t* nv = &nbr_[static_cast<std::size_t>(v) * words_];
        for (int part = 0; part < k_; ++part) {
            if (!allowed_test(part, v)) continue;
            if (deg_[v] < pattern_degree_[part]) continue;
            const int empties = empty_parts_ - (part_size_[part] == 0 ? 1 : 0);
            if (empties > remaining) continue;
            // capacity pre-check before the expensive apply/propagate
            const int need = node_empty_[pos * k_ + part];
            if (need > 0) {
                const std::uint64_t* pool = pools + static_cast<std::size_t>(part) * words_;
                int reach = 0;
                for (int w = 0; w < words_; ++w) reach += std::popcount(nv[w] & pool[w]);
                if (reach < need) continue;
            }

            std::uint64_t* save = &saved_[static_cast<std::size_t>(pos) * k_ * words_];
            std::memcpy(save, allowed_.data(), sizeof(std::uint64_t) * k_ * words_);
            const int saved_empty = empty_parts_;
            assigned_[v] = 1;
            if (apply(v, part) && extend(pos + 1)) return true;
            std::memcpy(allowed_.data(), save, sizeof(std::uint64_t) * k_ * words_);
            empty_parts_ = saved_empty;
            assigned_[v] = 0;
            assignment_[v] = -1;
            --part_size_[part];
        }
        return false;
    }

    // Applies the assignment v -> part; false when some still-empty part
    // has no candidates left or some unassigned vertex lost its last
    // candidate part.
    bool apply(int v, int part) {
        assignment_[v] = part;
        if (part_size_[part]++ == 0) --empty_parts_;
        const std::uint64_t* nv = &nbr_[static_cast<std::size_t>(v) * words_];
        const std::uint64_t* cv = &non_nbr_[static_cast<std::size_t>(v) * words_];
        bool feasible = true;
        for (int i = 0; i < k_; ++i) {
            std::uint64_t* row = &allowed_[static_cast<std::size_t>(i) * words_];
            if (i == part) {
                if (p_.in_clique_set(part)) {
                    for (int w = 0; w < words_; ++w) row[w] &= nv[w];
                } else if (induced_ && p_.in_indep_set(part)) {
                    for (int w = 0; w < words_; ++w) row[w] &= cv[w];
                }
                // future co-members share the nonempty neighbor parts with
                // v, hence at least deg_H(part) common neighbors inside S
                if (!codeg_.empty()) {
                    const int m = static_cast<int>(s_.size());
                    const int thr = pattern_degree_[part];
                    for (int w = 0; w < m; ++w)
                        if (codeg_[static_cast<std::size_t>(v) * m + w] < thr)
                            row[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
                }
            } else if (p_.h.adjacent(i, part)) {
                for (int w = 0; w < words_; ++w) row[w] &= nv[w];
            } else if (induced_) {
                for (int w = 0; w < words_; ++w) row[w] &= cv[w];
            }
            row[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            if (part_size_[i] == 0) {
                std::uint64_t any = 0;
                for (int w = 0; w < words_; ++w) any |= row[w];
                if (!any) feasible = false;
            }
        }
        if (feasible) feasible = propagate();
        return feasible;
    }

    // Capacity filtering to a fixpoint: a vertex in part i must see every
    // still-empty pattern-neighbor part of i inside its own neighborhood,
    // via disjoint nonempty sets, so it needs at least that many distinct
    // candidates from those domains. Afterwards every still-empty part
    // needs a candidate and every unassigned vertex a live part.
    bool propagate() {
        const int m = static_cast<int>(s_.size());
        bool changed = true;
        for (int pass = 0; pass < 3 && changed; ++pass) {
            changed = false;
            for (int i = 0; i < k_; ++i) {
                int empty_nbrs = 0;
                for (int j : pattern_nbrs_[i])
                    if (part_size_[j] == 0) ++empty_nbrs;
                if (empty_nbrs == 0) continue;
                for (int w = 0; w < words_; ++w) pool_[w] = 0;
                for (int j : pattern_nbrs_[i]) {
                    if (part_size_[j] > 0) continue;
                    const std::uint64_t* dom = &allowed_[static_cast<std::size_t>(j) * words_];
                    for (int w = 0; w < words_; ++w) pool_[w] |= dom[w];
                }
                // assigned members of part i must retain enough candidates
                for (int v = 0; v < m; ++v) {
                    if (assignment_[v] != i) continue;
                    int reach = 0;
                    const std::uint64_t* nv = &nbr_[static_cast<std::size_t>(v) * words_];
                    for (int w = 0; w < words_; ++w)
                        reach += std::popcount(nv[w] & pool_[w]);
                    if (reach < empty_nbrs) return false;
                }
                // filter future candidates of part i the same way
                std::uint64_t* row = &allowed_[static_cast<std::size_t>(i) * words_];
                std::uint64_t any = 0;
                for (int w = 0; w < words_; ++w) {
                    std::uint64_t bits = row[w];
                    while (bits) {
                        const int v = w * 64 + std::countr_zero(bits);
                        bits &= bits - 1;
                        int reach = 0;
                        const std::uint64_t* nv = &nbr_[static_cast<std::size_t>(v) * words_];
                        for (int x = 0; x < words_; ++x)
                            reach += std::popcount(nv[x] & pool_[x]);
                        if (reach < empty_nbrs) {
                            row[w] &= ~(std::uint64_t{1} << (v & 63));
                            changed = true;
                        }
                    }
                    any |= row[w];
                }
                if (part_size_[i] == 0 && !any) return false;
            }
        }
        // every vertex still to assign needs a live part
        for (int u = 0; u < m; ++u) {
            if (assigned_[u]) continue;
            bool live = false;
            for (int i = 0; i < k_ && !live; ++i)
                live = (allowed_[static_cast<std::size_t>(i) * words_ + (u >> 6)] >>
                        (u & 63)) & 1u;
            if (!live) return false;
        }
        return true;
    }

    const Graph& g_;
    const Pattern& p_;
    bool induced_;
    int k_;
    std::vector<int> s_;
    int words_ = 1;
    std::vector<std::uint64_t> nbr_, non_nbr_, allowed_, saved_;
    std::vector<int> codeg_;
    std::vector<int> deg_, pattern_degree_, assignment_, part_size_;
    std::vector<char> assigned_;
    std::vector<std::uint64_t> pool_, node_pool_;
    std::vector<int> node_empty_;
    std::vector<std::vector<int>> pattern_nbrs_;
    int empty_parts_ = 0;
public:
    static inline long long debug_nodes = 0;
private:
};

} // namespace detail

// Searches for a surjection of S onto V(H) satisfying the blow-up rules;
// absent when none exists. Non-induced mode rejects patterns with U-.
inline std::optional<BlowupAssignment> find_blowup_assignment(
    const Graph& g, const std::vector<int>& s, const Pattern& p, bool induced) {
    if (!induced && !p.indep_prescribed.empty())
        throw argument_error("non-induced blow-ups admit only clique prescriptions");
    return detail::BlowupSearch(g, s, p, induced).run();
}

inline bool is_blowup(const Graph& g, const std::vector<int>& s, const Pattern& p,
                      bool induced) {
    return find_blowup_assignment(g, s, p, induced).has_value();
}

// True iff no strict superset of s is a blow-up. The search walks every
// superset: one-vertex extension failure proves nothing here, because
// larger blow-ups may regroup the existing vertices.
inline bool is_maximal_blowup(const Graph& g, const std::vector<int>& s, const Pattern& p,
                              bool induced, const Caps& caps = {}) {
    if (!is_blowup(g, s, p, induced))
        throw precondition_error("is_maximal_blowup requires a blow-up as input");

    VertexSet in_s = VertexSet::of(g.vertex_count(), s);
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_s.test(v)) rest.push_back(v);
    const int r = static_cast<int>(rest.size());
    if (r > caps.superset_bits_cap)
        throw capacity_error("superset space 2^" + std::to_string(r) +
                             " exceeds cap 2^" + std::to_string(caps.superset_bits_cap) +
                             " (raise superset cap)");

    // single-vertex extensions first: a cheap chance to answer early
    std::vector<int> candidate(s.begin(), s.end());
    for (int v : rest) {
        candidate.push_back(v);
        if (is_blowup(g, candidate, p, induced)) return false;
        candidate.pop_back();
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        if (std::popcount(mask) < 2) continue;
        candidate.assign(s.begin(), s.end());
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) candidate.push_back(rest[i]);
        if (is_blowup(g, candidate, p, induced)) return false;
    }
    return true;
}

// Ground-truth enumeration: every subset is tested for being a blow-up,
// and the inclusion-maximal ones among them are returned. Subsets are
// walked in increasing size while a running antichain keeps only sets not
// contained in a later, larger blow-up.
inline EnumerationResult enumerate_maximal_blowups(const Graph& g, const Pattern& p,
                                                   bool induced, const Caps& caps = {},
                                                   int workers = 1) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    const int k = p.size();
    if (n > caps.oracle_vertex_cap)
        throw capacity_error("oracle enumeration needs n <= " +
                             std::to_string(caps.oracle_vertex_cap) + " (raise oracle cap)");
    if (n > 62) throw capacity_error("oracle enumeration is limited to 62 vertices");
    if (!induced && !p.indep_prescribed.empty())
        throw argument_error("non-induced blow-ups admit only clique prescriptions");

    EnumerationResult result;
    result.mode = "oracle";
    if (k > n) {
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    // per-vertex adjacency masks for the quick degree filter
    std::vector<std::uint64_t> row(n, 0);
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int w) { row[v] |= std::uint64_t{1} << w; });
    int min_pattern_degree = p.h.degree(0);
    for (int i = 1; i < k; ++i) min_pattern_degree = std::min(min_pattern_degree, p.h.degree(i));

    auto mask_is_blowup = [&](std::uint64_t mask) {
        std::vector<int> verts;
        verts.reserve(std::popcount(mask));
        for (std::uint64_t m = mask; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (std::popcount(row[v] & mask) < min_pattern_degree) return false;
            verts.push_back(v);
        }
        return is_blowup(g, verts, p, induced);
    };

    workers = std::max(1, workers);
    std::vector<std::vector<std::uint64_t>> found(workers);
    auto scan = [&](int w) {
        std::uint64_t index = 0;
        for (int size = k; size <= n; ++size) {
            std::uint64_t mask = (std::uint64_t{1} << size) - 1;
            const std::uint64_t limit = std::uint64_t{1} << n;
            while (mask < limit) {
                if (index++ % static_cast<std::uint64_t>(workers) == static_cast<std::uint64_t>(w) &&
                    mask_is_blowup(mask)) {
                    // running antichain within this worker's share
                    auto& mine = found[w];
                    mine.erase(std::remove_if(mine.begin(), mine.end(),
                                              [&](std::uint64_t s) { return (s & mask) == s; }),
                               mine.end());
                    mine.push_back(mask);
                }
                std::uint64_t c = mask & -mask;
                std::uint64_t r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool contained = false;
        for (std::size_t j = i + 1; j < all.size() && !contained; ++j)
            contained = (all[i] & all[j]) == all[i] && all[i] != all[j];
        if (contained) continue;
        std::vector<int> verts;
        for (std::uint64_t m = all[i]; m; m &= m - 1)
            verts.push_back(std::countr_zero(m));
        result.sets.push_back(std::move(verts));
    }
    std::sort(result.sets.begin(), result.sets.end());
    result.count = result.sets.size();
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace closurelab

#endif
