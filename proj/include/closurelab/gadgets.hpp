#ifndef CLOSURELAB_GADGETS_HPP
#define CLOSURELAB_GADGETS_HPP

#include "closurelab/blowup.hpp"
#include "closurelab/dichotomy.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace closurelab {

enum class GadgetCase {
    Case1, Case2, Case3, Case4, Case5, Case6,
    BoundedDegree, StarHost, AryTree, Doubling
};

inline const char* to_string(GadgetCase c) {
    switch (c) {
        case GadgetCase::Case1: return "case1";
        case GadgetCase::Case2: return "case2";
        case GadgetCase::Case3: return "case3";
        case GadgetCase::Case4: return "case4";
        case GadgetCase::Case5: return "case5";
        case GadgetCase::Case6: return "case6";
        case GadgetCase::BoundedDegree: return "bounded_degree";
        case GadgetCase::StarHost: return "star_host";
        case GadgetCase::AryTree: return "ary_tree";
        case GadgetCase::Doubling: return "doubling";
    }
    return "?";
}

inline std::optional<GadgetCase> gadget_case_from_string(const std::string& s) {
    for (GadgetCase c : {GadgetCase::Case1, GadgetCase::Case2, GadgetCase::Case3,
                         GadgetCase::Case4, GadgetCase::Case5, GadgetCase::Case6,
                         GadgetCase::BoundedDegree, GadgetCase::StarHost,
                         GadgetCase::AryTree, GadgetCase::Doubling})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

// A constructed host graph realizing an exponential family of maximal
// blow-ups: matched endpoint pairs whose transversals extend the core to a
// blow-up of the target pattern.
struct GadgetGraph {
    Graph graph;
    std::vector<std::pair<int, int>> matched_pairs; // (a_i, b_i)
    std::vector<int> core_set;                      // untouched pattern remnant
    int claimed_closure = 1;                        // is_c_closed(graph, claimed_closure) holds
    int measured_closure = 1;
    GadgetCase case_tag = GadgetCase::Case1;
    Pattern pattern;
};

namespace detail {

// Shared two-sided construction: one or two pattern vertices are replaced
// by K-vertex copies (clique or independent inside), each side anchored to
// the replaced vertex's neighborhood, joined by the perfect matching
// (a_i, b_i). With blown2 < 0, both sides replace blown1 together (the
// matching blow-up of a single vertex).
inline GadgetGraph build_two_sided(const Pattern& p, GadgetCase tag, int blown1, int blown2,
                                   bool side1_clique, bool side2_clique, int K) {
    const int k = p.size();
    GadgetGraph out;
    out.case_tag = tag;
    out.pattern = p;

    std::vector<int> core_id(k, -1);
    int next = 0;
    for (int v = 0; v < k; ++v)
        if (v != blown1 && v != blown2) core_id[v] = next++;
    const int base_a = next;
    const int base_b = next + K;
    const int n = next + 2 * K;

    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : p.h.edges())
        if (core_id[u] >= 0 && core_id[v] >= 0)
            es.emplace_back(core_id[u], core_id[v]);

    const int anchor2 = blown2 >= 0 ? blown2 : blown1;
    for (int i = 0; i < K; ++i) {
        p.h.neighbors(blown1).for_each([&](int w) {
            if (core_id[w] >= 0) es.emplace_back(base_a + i, core_id[w]);
        });
        p.h.neighbors(anchor2).for_each([&](int w) {
            if (core_id[w] >= 0) es.emplace_back(base_b + i, core_id[w]);
        });
        es.emplace_back(base_a + i, base_b + i);
        if (side1_clique)
            for (int j = i + 1; j < K; ++j) es.emplace_back(base_a + i, base_a + j);
        if (side2_clique)
            for (int j = i + 1; j < K; ++j) es.emplace_back(base_b + i, base_b + j);
    }

    out.graph = Graph::from_edges(n, es);
    for (int i = 0; i < K; ++i) out.matched_pairs.emplace_back(base_a + i, base_b + i);
    for (int v = 0; v < k; ++v)
        if (core_id[v] >= 0) out.core_set.push_back(core_id[v]);
    return out;
}

inline int smallest_outside(const std::vector<int>& group, const Pattern& p, bool avoid_uminus) {
    for (int v : group)
        if (!avoid_uminus || !p.in_indep_set(v)) return v;
    throw std::logic_error("gadget case selection: no eligible vertex in bad group");
}

} // namespace detail

// Builds the exponential-side host for an exponential-classified pattern:
// a graph on target_n or target_n + 1 vertices whose matched-pair
// transversals, together with the core, form maximal induced prescribed
// blow-ups. With sharper_claim the closure claim is tightened towards
// closure(H) + 2 when the construction achieves it; the claimed value is
// always verified against the measured closure.
inline GadgetGraph build_induced_exponential_gadget(const Pattern& p, int target_n,
                                                    bool sharper_claim = false) {
    const int k = p.size();
    auto verdict = classify_dichotomy(p);
    if (verdict.kind != GrowthKind::Exponential)
        throw argument_error("pattern is polynomial-classified; no exponential gadget exists");
    if (target_n < k + 4)
        throw argument_error("target_n must be at least k + 4");

    auto bad = bad_twin_groups(p.h);
    auto contained_in_uminus = [&](const std::vector<int>& grp) {
        return std::all_of(grp.begin(), grp.end(), [&](int v) { return p.in_indep_set(v); });
    };

    GadgetGraph out;
    if (verdict.case_tag == CaseTag::MultiBad) {
        std::vector<const std::vector<int>*> outside, inside;
        for (const auto& grp : bad)
            (contained_in_uminus(grp) ? inside : outside).push_back(&grp);
        const int K = (target_n - (k - 2) + 1) / 2;
        if (outside.size() >= 2) {
            int v1 = detail::smallest_outside(*outside[0], p, true);
            int v2 = detail::smallest_outside(*outside[1], p, true);
            out = detail::build_two_sided(p, GadgetCase::Case1, v1, v2, true, true, K);
        } else if (outside.size() == 1) {
            int v = detail::smallest_outside(*outside[0], p, true);
            int w = inside[0]->front();
            out = detail::build_two_sided(p, GadgetCase::Case2, v, w, true, false, K);
        } else {
            int v = inside[0]->front();
            int w = inside[1]->front();
            out = detail::build_two_sided(p, GadgetCase::Case3, v, w, false, false, K);
        }
    } else if (verdict.case_tag == CaseTag::E2c) {
        // one independent bad group with two members outside U-
        const auto& B = bad.front();
        std::vector<int> pick;
        for (int v : B)
            if (!p.in_indep_set(v) && pick.size() < 2) pick.push_back(v);
        if (pick.size() < 2) throw std::logic_error("case 4 needs two members outside U-");
        const int K = (target_n - (k - 2) + 1) / 2;
        out = detail::build_two_sided(p, GadgetCase::Case4, pick[0], pick[1], true, true, K);
    } else {
        // cases 5 and 6 share one construction: blow the U- member into a
        // perfect matching on 2K vertices
        const auto& B = bad.front();
        int x = -1;
        for (int v : B)
            if (p.in_indep_set(v)) { x = v; break; }
        if (x < 0) throw std::logic_error("cases 5/6 need a U- member in the bad group");
        const int K = (target_n - (k - 1) + 1) / 2;
        GadgetCase tag = verdict.case_tag == CaseTag::E2a ? GadgetCase::Case5 : GadgetCase::Case6;
        out = detail::build_two_sided(p, tag, x, -1, false, false, K);
    }

    out.measured_closure = closure_number(out.graph).closure;
    out.claimed_closure = k + 1;
    if (sharper_claim)
        out.claimed_closure = std::min(out.claimed_closure,
                                       closure_number(p.h).closure + 2);
    // the k+1 claim holds for every case; the sharper c+2 claim can fail
    // for case-5 patterns whose blown vertex has a large clique
    // neighborhood, in which case the measured value is reported instead
    if (out.measured_closure > out.claimed_closure) {
        if (!sharper_claim)
            throw std::logic_error("gadget exceeded the k+1 closure claim");
        out.claimed_closure = out.measured_closure;
    }
    return out;
}

// Convenience: the smallest target_n that yields exactly K matched pairs.
inline GadgetGraph build_gadget_with_pairs(const Pattern& p, int K, bool sharper_claim = false) {
    const int k = p.size();
    auto verdict = classify_dichotomy(p);
    if (verdict.kind != GrowthKind::Exponential)
        throw argument_error("pattern is polynomial-classified; no exponential gadget exists");
    const bool single = verdict.case_tag == CaseTag::E2a || verdict.case_tag == CaseTag::E2b;
    int target = single ? 2 * K + (k - 1) : 2 * K + (k - 2);
    if (target < k + 4)
        throw argument_error("K too small: the gadget needs at least k + 4 vertices");
    return build_induced_exponential_gadget(p, target, sharper_claim);
}

// A_S = {a_i : i in S} u {b_i : i not in S} u core. S is 0-based into
// matched_pairs and must be a proper nonempty subset.
inline std::vector<int> designated_blowup_set(const GadgetGraph& gad,
                                              const std::vector<int>& s) {
    const int K = static_cast<int>(gad.matched_pairs.size());
    std::vector<char> in_s(K, 0);
    int distinct = 0;
    for (int i : s) {
        if (i < 0 || i >= K) throw argument_error("pair index out of range");
        if (!in_s[i]) ++distinct;
        in_s[i] = 1;
    }
    if (distinct == 0 || distinct == K)
        throw argument_error("index subset must be proper and nonempty");
    std::vector<int> out = gad.core_set;
    for (int i = 0; i < K; ++i)
        out.push_back(in_s[i] ? gad.matched_pairs[i].first : gad.matched_pairs[i].second);
    std::sort(out.begin(), out.end());
    return out;
}

struct GadgetConditionsReport {
    bool transversal_condition = false;     // every proper mixed transversal extends the core to a blow-up
    bool bounded_overlap_condition = false; // blow-ups covering every pair use at most K + 3k^2 pair vertices
    std::uint64_t transversals_checked = 0;
    std::uint64_t cover_sets_checked = 0;
    std::optional<std::vector<int>> transversal_witness; // failing transversal set
    std::optional<std::vector<int>> overlap_witness;     // oversized blow-up
    std::uint64_t maximal_count = 0;                     // oracle count over the gadget
    std::uint64_t count_lower_bound = 0;                 // ceil((2^K - 2) / 2^(2k))
};

// Brute-force check of the two hypotheses behind the exponential count:
// (i) all proper mixed transversals yield induced prescribed blow-ups;
// (ii) any induced blow-up containing the core and covering every pair
// holds at most K + 3k^2 matched-pair vertices.
inline GadgetConditionsReport verify_gadget_conditions(const GadgetGraph& gad,
                                                       std::uint64_t sample_budget = 1 << 20,
                                                       const Caps& caps = {}) {
    const int K = static_cast<int>(gad.matched_pairs.size());
    const int k = gad.pattern.size();
    if (K > 62) throw capacity_error("gadget verification needs K <= 62");
    GadgetConditionsReport report;

    report.transversal_condition = true;
    const std::uint64_t total = (std::uint64_t{1} << K) - 2;
    std::uint64_t budget = std::min(total, sample_budget);
    for (std::uint64_t mask = 1; mask <= total && report.transversals_checked < budget;
         ++mask) {
        std::vector<int> set = gad.core_set;
        for (int i = 0; i < K; ++i)
            set.push_back(mask >> i & 1 ? gad.matched_pairs[i].first
                                        : gad.matched_pairs[i].second);
        std::sort(set.begin(), set.end());
        ++report.transversals_checked;
        if (!is_blowup(gad.graph, set, gad.pattern, true)) {
            report.transversal_condition = false;
            report.transversal_witness = set;
            break;
        }
    }

    report.bounded_overlap_condition = true;
    const std::uint64_t limit = static_cast<std::uint64_t>(K) + 3ULL * k * k;
    // each pair contributes a, b, or both: 3^K covering choices
    std::vector<int> choice(K, 0);
    for (;;) {
        std::vector<int> set = gad.core_set;
        std::uint64_t pair_vertices = 0;
        for (int i = 0; i < K; ++i) {
            if (choice[i] != 1) { set.push_back(gad.matched_pairs[i].first); ++pair_vertices; }
            if (choice[i] != 0) { set.push_back(gad.matched_pairs[i].second); ++pair_vertices; }
        }
        std::sort(set.begin(), set.end());
        ++report.cover_sets_checked;
        if (pair_vertices > limit && is_blowup(gad.graph, set, gad.pattern, true)) {
            report.bounded_overlap_condition = false;
            report.overlap_witness = set;
            break;
        }
        int pos = 0;
        while (pos < K && choice[pos] == 2) choice[pos++] = 0;
        if (pos == K) break;
        ++choice[pos];
    }

    auto oracle = enumerate_maximal_blowups(gad.graph, gad.pattern, true, caps);
    report.maximal_count = oracle.count;
    std::uint64_t denom = k < 31 ? (std::uint64_t{1} << (2 * k)) : ~std::uint64_t{0};
    report.count_lower_bound = (total + denom - 1) / denom;
    return report;
}

// Gadget serialization: graph block followed by a '#'-comment sidecar
// naming the case, claimed closure, core set, and matched pairs.
inline void save_gadget(std::ostream& out, const GadgetGraph& gad) {
    save_graph(out, gad.graph);
    out << "# gadget case " << to_string(gad.case_tag) << '\n';
    out << "# closure " << gad.claimed_closure << '\n';
    out << "# core";
    for (int v : gad.core_set) out << ' ' << v;
    out << '\n';
    out << "# pairs";
    for (auto [a, b] : gad.matched_pairs) out << ' ' << a << ':' << b;
    out << '\n';
    out << "# pattern\n";
    std::ostringstream ps;
    save_pattern(ps, gad.pattern);
    std::istringstream pi(ps.str());
    std::string line;
    while (std::getline(pi, line)) out << "# " << line << '\n';
}

} // namespace closurelab

#endif
