#ifndef CLOSURELAB_HARNESS_HPP
#define CLOSURELAB_HARNESS_HPP

#include "closurelab/bounds.hpp"
#include "closurelab/families.hpp"
#include "closurelab/fast_enum.hpp"
#include "closurelab/top_blocks.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace closurelab {

// Shared run configuration: caps, seeds, worker count. Seeds are recorded
// in every produced artifact for reproducibility.
struct SuiteConfig {
    Caps caps;
    std::uint64_t seed = 0;
    int workers = 1;
};

inline std::string render_set(const std::vector<int>& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << s[i];
    }
    out << '}';
    return out.str();
}

inline void render_graph_analysis(std::ostream& out, const Graph& g, const Caps& caps) {
    out << "vertices " << g.vertex_count() << '\n';
    out << "edges " << g.edge_count() << '\n';
    auto closure = closure_number(g);
    out << "closure " << closure.closure;
    if (closure.witness_pair)
        out << " (witness " << closure.witness_pair->first << ' '
            << closure.witness_pair->second << ')';
    out << '\n';
    auto stats = graph_stats(g, caps.alpha_vertex_cap);
    out << "min_degree " << stats.min_degree << '\n';
    out << "max_degree " << stats.max_degree << '\n';
    out << "maximum_matching " << stats.maximum_matching_size << '\n';
    if (stats.independence_number)
        out << "independence_number " << *stats.independence_number << '\n';
    else
        out << "independence_number (above cap)\n";
    out << "connected " << (stats.distances_available ? "yes" : "no") << '\n';
}

inline void render_pattern_analysis(std::ostream& out, const Pattern& p) {
    out << "pattern_vertices " << p.size() << '\n';
    out << "U+ " << render_set(p.clique_prescribed) << '\n';
    out << "U- " << render_set(p.indep_prescribed) << '\n';
    auto twins = twin_decomposition(p.h);
    out << "twin_groups";
    for (const auto& grp : twins.groups) {
        out << ' ' << render_set(grp.members);
        if (grp.members.size() >= 2)
            out << (grp.is_clique_group ? "[clique]" : "[independent]");
        if (grp.is_bad) out << "[bad]";
    }
    out << '\n';
    out << "bad_twin_groups";
    auto bad = bad_twin_groups(p.h);
    if (bad.empty()) out << " none";
    for (const auto& grp : bad) out << ' ' << render_set(grp);
    out << '\n';
    auto verdict = classify_dichotomy(p);
    out << "verdict " << to_string(verdict.kind) << " (" << to_string(verdict.case_tag)
        << ")\n";
    out << "bound " << verdict.bound_note << '\n';
}

struct EnumerateOptions {
    bool induced = false;
    std::string mode = "oracle"; // oracle | fast
    int c = 2;                   // fast mode: promised closure of the host
    bool list = false;
    int workers = 1;
    Caps caps;
};

inline EnumerationResult run_enumeration(const Graph& g, const Pattern& p,
                                         const EnumerateOptions& opt) {
    if (opt.mode == "oracle")
        return enumerate_maximal_blowups(g, p, opt.induced, opt.caps, opt.workers);
    if (opt.mode == "fast") {
        if (opt.induced)
            throw precondition_error("fast mode enumerates non-induced blow-ups only");
        return enumerate_maximal_fast(g, p, opt.c, opt.workers);
    }
    throw argument_error("mode must be 'oracle' or 'fast'");
}

inline void render_enumeration(std::ostream& out, const EnumerationResult& res,
                               bool list) {
    out << "count " << res.count << '\n';
    out << std::fixed << std::setprecision(3) << "elapsed " << res.elapsed_seconds
        << "s\n";
    out << "mode " << res.mode << '\n';
    if (res.mode == "fast")
        out << "candidates " << res.candidates_passing << '/' << res.candidates_generated
            << " pass the blow-up check\n";
    if (list)
        for (const auto& s : res.sets) out << render_set(s) << '\n';
}

// ---------------------------------------------------------------------------
// Growth experiments
// ---------------------------------------------------------------------------

struct GrowthRow {
    std::string case_tag;
    int k = 0;
    int K = 0;
    int n = 0;
    std::uint64_t count = 0;
    double seconds = 0.0;
    std::uint64_t seed = 0;
};

// One oracle-measured row per K: gadget built for the pattern, maximal
// induced blow-ups counted exactly.
inline std::vector<GrowthRow> run_growth(const Pattern& p, GadgetCase expected_case,
                                         int k_min, int k_max, const SuiteConfig& cfg) {
    if (k_min < 1 || k_max < k_min) throw argument_error("bad K range");
    std::vector<GrowthRow> rows;
    for (int K = k_min; K <= k_max; ++K) {
        auto gad = build_gadget_with_pairs(p, K);
        if (gad.case_tag != expected_case)
            throw precondition_error(std::string("pattern builds ") + to_string(gad.case_tag) +
                                     ", not " + to_string(expected_case));
        auto oracle =
            enumerate_maximal_blowups(gad.graph, gad.pattern, true, cfg.caps, cfg.workers);
        GrowthRow row;
        row.case_tag = to_string(gad.case_tag);
        row.k = p.size();
        row.K = K;
        row.n = gad.graph.vertex_count();
        row.count = oracle.count;
        row.seconds = oracle.elapsed_seconds;
        row.seed = cfg.seed;
        rows.push_back(row);
    }
    return rows;
}

// CSV contract: header case,k,K,n,count,seconds,seed; one row per K; the
// growth-ratio summary rides in a trailing comment. Every column except
// seconds is deterministic for a fixed seed.
inline void write_growth_csv(std::ostream& out, const std::vector<GrowthRow>& rows) {
    out << "case,k,K,n,count,seconds,seed\n";
    for (const auto& r : rows) {
        out << r.case_tag << ',' << r.k << ',' << r.K << ',' << r.n << ',' << r.count << ','
            << std::fixed << std::setprecision(3) << r.seconds << ',' << r.seed << '\n';
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double ratio = rows[i - 1].count == 0
                           ? 0.0
                           : static_cast<double>(rows[i].count) / rows[i - 1].count;
        out << "# growth K=" << rows[i - 1].K << "->" << rows[i].K << " ratio "
            << std::fixed << std::setprecision(3) << ratio << '\n';
    }
}

} // namespace closurelab

#endif
