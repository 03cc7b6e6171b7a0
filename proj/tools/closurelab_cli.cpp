// Command-line surface for the c-closed blow-up toolkit. Subcommands:
//   analyze    closure, structure, and dichotomy verdict for graph/pattern files
//   closure    closure number of a graph
//   cliques    maximal clique enumeration
//   classify   polynomial/exponential verdict for a pattern
//   enumerate  maximal blow-up enumeration (oracle or guided fast mode)
//   construct  gadget and family builders, written in graph format
//   verify     gadget property verification suites
//   growth     oracle-counted growth experiments as CSV
// Exit codes: 0 success, 2 parse error, 3 capacity, 4 precondition.

#include "closurelab/closurelab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace closurelab;

namespace {

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    try {
        return load_graph(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

Pattern read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    try {
        return load_pattern(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw parse_error("cannot open output " + path);
    return file;
}

std::pair<int, int> parse_k_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(text);
        return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct ConstructArgs {
    std::string input;
    std::string case_name;
    std::string out_path;
    int K = 4;
    int m = 2, depth = 2;
    int leaves = 4;
    int copies = 2, blocks = 1, separation = 0;
    bool sharper = false;
};

int run_construct(const ConstructArgs& args) {
    auto tag = gadget_case_from_string(args.case_name);
    if (!tag) throw argument_error("unknown case: " + args.case_name);
    std::ofstream file;
    std::ostream& out = open_output(file, args.out_path);

    switch (*tag) {
        case GadgetCase::Case1:
        case GadgetCase::Case2:
        case GadgetCase::Case3:
        case GadgetCase::Case4:
        case GadgetCase::Case5:
        case GadgetCase::Case6: {
            Pattern p = read_pattern_file(args.input);
            auto gad = build_gadget_with_pairs(p, args.K, args.sharper);
            if (gad.case_tag != *tag)
                throw precondition_error(std::string("pattern builds ") +
                                         to_string(gad.case_tag) + ", not " + args.case_name);
            save_gadget(out, gad);
            std::cerr << "built " << to_string(gad.case_tag) << " gadget: n="
                      << gad.graph.vertex_count() << " K=" << gad.matched_pairs.size()
                      << " closure<=" << gad.claimed_closure << '\n';
            break;
        }
        case GadgetCase::BoundedDegree: {
            Graph h = read_graph_file(args.input);
            TopBlockParams params;
            params.copy_count = args.copies;
            params.block_budget = args.blocks;
            params.separation = args.separation;
            auto [gad, layout] = build_bounded_degree_gadget(h, params);
            save_gadget(out, gad);
            std::cerr << "built bounded-degree gadget: n=" << gad.graph.vertex_count()
                      << " blocks=" << layout.blocks.size() << " i*=" << layout.i_star
                      << '\n';
            break;
        }
        case GadgetCase::AryTree: {
            save_graph(out, build_ary_tree(args.m, args.depth));
            break;
        }
        case GadgetCase::StarHost: {
            save_graph(out, star_graph(args.leaves));
            break;
        }
        case GadgetCase::Doubling: {
            Graph h = read_graph_file(args.input);
            auto dg = build_doubling_gadget(h);
            save_gadget(out, dg.gadget);
            std::cerr << "built doubling gadget: n=" << dg.gadget.graph.vertex_count()
                      << " designated=2^" << dg.components.size() << '\n';
            break;
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string input;
    std::string case_name;
    int K = 4;
    int m = 2, depth = 2;
    int leaves = 4;
    int c = 2;
    int copies = 2, blocks = 1, separation = 0;
    std::uint64_t budget = 1 << 20;
};

int run_verify(const VerifyArgs& args, const SuiteConfig& cfg) {
    auto tag = gadget_case_from_string(args.case_name);
    if (!tag) throw argument_error("unknown case: " + args.case_name);
    bool ok = true;
    auto line = [&](bool pass, const std::string& what) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << what << '\n';
        ok = ok && pass;
    };

    switch (*tag) {
        case GadgetCase::Case1:
        case GadgetCase::Case2:
        case GadgetCase::Case3:
        case GadgetCase::Case4:
        case GadgetCase::Case5:
        case GadgetCase::Case6: {
            Pattern p = read_pattern_file(args.input);
            auto gad = build_gadget_with_pairs(p, args.K);
            line(gad.case_tag == *tag,
                 std::string("construction case is ") + args.case_name);
            line(is_c_closed(gad.graph, gad.claimed_closure),
                 "closure claim " + std::to_string(gad.claimed_closure));
            auto report = verify_gadget_conditions(gad, args.budget, cfg.caps);
            line(report.transversal_condition, "every proper mixed transversal is a blow-up");
            line(report.bounded_overlap_condition,
                 "covering blow-ups stay within K + 3k^2 pair vertices");
            line(report.maximal_count >= report.count_lower_bound,
                 "oracle count " + std::to_string(report.maximal_count) + " >= bound " +
                     std::to_string(report.count_lower_bound));
            break;
        }
        case GadgetCase::BoundedDegree: {
            Graph h = read_graph_file(args.input);
            TopBlockParams params;
            params.copy_count = args.copies;
            params.block_budget = args.blocks;
            params.separation = args.separation;
            auto [gad, layout] = build_bounded_degree_gadget(h, params);
            auto naive = naive_blowups(gad, layout);
            bool all_blowups = true;
            for (const auto& s : naive)
                all_blowups = all_blowups && is_blowup(gad.graph, s, gad.pattern, true);
            line(all_blowups, "all " + std::to_string(naive.size()) +
                                  " layer selections are induced blow-ups");
            line(verify_top_block_degrees(gad, layout).holds,
                 "degree behavior matches the construction");
            break;
        }
        case GadgetCase::AryTree: {
            auto sets = subtree_form_blowups(args.m, args.depth, cfg.caps);
            Graph host = build_ary_tree(2 * args.m, args.depth);
            Pattern fm(build_ary_tree(args.m, args.depth));
            bool all_max = true;
            for (const auto& s : sets)
                all_max = all_max && is_maximal_blowup(host, s, fm, false, cfg.caps);
            line(all_max, std::to_string(sets.size()) + " subtree-form sets are maximal");
            line(BigUint(sets.size()) == subtree_form_count(args.m, args.depth),
                 "family size matches the product formula");
            break;
        }
        case GadgetCase::StarHost: {
            Graph g = read_graph_file(args.input);
            auto rep = count_star_blowups(g, args.leaves, args.c, cfg.caps);
            line(rep.within_bound, "count " + std::to_string(rep.count) +
                                       " within bound " + rep.bound.to_string());
            line(rep.big_centers_are_cliques,
                 "large-center blow-ups are maximal cliques (" +
                     std::to_string(rep.big_center_sets) + " sets)");
            break;
        }
        case GadgetCase::Doubling: {
            Graph h = read_graph_file(args.input);
            auto dg = build_doubling_gadget(h);
            line(static_cast<int>(dg.components.size()) == maximum_matching_size(h),
                 "designated exponent equals the maximum matching size");
            line(is_c_closed(dg.gadget.graph, dg.gadget.claimed_closure),
                 "closure claim " + std::to_string(dg.gadget.claimed_closure));
            break;
        }
    }
    return ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-closed graph blow-up toolkit"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    try {
        cfg.caps = caps_from_env();
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    }
    app.add_option("--workers", cfg.workers, "worker threads for enumeration");
    app.add_option("--seed", cfg.seed, "seed recorded in outputs");

    std::string graph_path, pattern_path, csv_path, mode = "oracle", case_name,
                k_range = "4";
    bool induced = false, list = false;
    int c_value = 2;

    auto* analyze = app.add_subcommand("analyze", "closure, twins, and verdict");
    analyze->add_option("file", graph_path, "graph or pattern file")->required();
    analyze->add_option("pattern", pattern_path, "optional pattern file");

    auto* closure = app.add_subcommand("closure", "closure number of a graph");
    closure->add_option("graph", graph_path)->required();

    auto* cliques = app.add_subcommand("cliques", "maximal cliques of a graph");
    cliques->add_option("graph", graph_path)->required();
    cliques->add_flag("--list", list, "print each clique");

    auto* classify = app.add_subcommand("classify", "dichotomy verdict for a pattern");
    classify->add_option("pattern", pattern_path)->required();

    auto* enumerate = app.add_subcommand("enumerate", "maximal blow-ups of a pattern");
    enumerate->add_option("graph", graph_path)->required();
    enumerate->add_option("pattern", pattern_path)->required();
    enumerate->add_option("--mode", mode, "oracle or fast");
    enumerate->add_flag("--induced", induced, "induced blow-ups");
    enumerate->add_option("--c", c_value, "closure promise for fast mode");
    enumerate->add_flag("--list", list, "print each set");

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "build gadgets and families");
    construct->add_option("input", cargs.input, "pattern or graph file");
    construct->add_option("--case", cargs.case_name, "construction name")->required();
    construct->add_option("--K", cargs.K, "matched pair count");
    construct->add_option("--m", cargs.m, "tree arity");
    construct->add_option("--depth", cargs.depth, "tree depth");
    construct->add_option("--leaves", cargs.leaves, "star leaves");
    construct->add_option("--copies", cargs.copies, "copy layers");
    construct->add_option("--blocks", cargs.blocks, "top block budget");
    construct->add_option("--separation", cargs.separation, "top block separation");
    construct->add_flag("--sharper", cargs.sharper, "claim closure(H)+2 when possible");
    construct->add_option("--out", cargs.out_path, "output path (default stdout)");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "verify gadget properties");
    verify->add_option("input", vargs.input, "pattern or graph file");
    verify->add_option("--case", vargs.case_name, "construction name")->required();
    verify->add_option("--K", vargs.K, "matched pair count");
    verify->add_option("--m", vargs.m, "tree arity");
    verify->add_option("--depth", vargs.depth, "tree depth");
    verify->add_option("--leaves", vargs.leaves, "star pattern leaves");
    verify->add_option("--c", vargs.c, "closure parameter");
    verify->add_option("--copies", vargs.copies, "copy layers");
    verify->add_option("--blocks", vargs.blocks, "top block budget");
    verify->add_option("--separation", vargs.separation, "top block separation");
    verify->add_option("--budget", vargs.budget, "transversal sample budget");

    auto* growth = app.add_subcommand("growth", "oracle growth rows as CSV");
    growth->add_option("pattern", pattern_path)->required();
    growth->add_option("--case", case_name, "expected construction case")->required();
    growth->add_option("--K", k_range, "K range, e.g. 3..5");
    growth->add_option("--csv", csv_path, "output CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            Pattern p = read_pattern_file(graph_path);
            render_graph_analysis(std::cout, p.h, cfg.caps);
            render_pattern_analysis(std::cout, p);
            if (!pattern_path.empty()) {
                Pattern q = read_pattern_file(pattern_path);
                render_pattern_analysis(std::cout, q);
            }
        } else if (closure->parsed()) {
            auto report = closure_number(read_graph_file(graph_path));
            std::cout << "closure " << report.closure;
            if (report.witness_pair)
                std::cout << " (witness " << report.witness_pair->first << ' '
                          << report.witness_pair->second << ')';
            std::cout << '\n';
        } else if (cliques->parsed()) {
            Graph g = read_graph_file(graph_path);
            if (g.vertex_count() > cfg.caps.clique_vertex_cap)
                throw capacity_error("graph exceeds the clique cap (raise cliques cap)");
            auto cs = maximal_cliques(g);
            std::cout << "count " << cs.size() << '\n';
            if (list)
                for (const auto& cl : cs) std::cout << render_set(cl) << '\n';
        } else if (classify->parsed()) {
            auto verdict = classify_dichotomy(read_pattern_file(pattern_path));
            std::cout << to_string(verdict.kind) << " (" << to_string(verdict.case_tag)
                      << ")\n"
                      << verdict.bound_note << '\n';
        } else if (enumerate->parsed()) {
            EnumerateOptions opt;
            opt.induced = induced;
            opt.mode = mode;
            opt.c = c_value;
            opt.list = list;
            opt.workers = cfg.workers;
            opt.caps = cfg.caps;
            auto res = run_enumeration(read_graph_file(graph_path),
                                       read_pattern_file(pattern_path), opt);
            render_enumeration(std::cout, res, list);
        } else if (construct->parsed()) {
            return run_construct(cargs);
        } else if (verify->parsed()) {
            return run_verify(vargs, cfg);
        } else if (growth->parsed()) {
            auto tag = gadget_case_from_string(case_name);
            if (!tag) throw argument_error("unknown case: " + case_name);
            auto [kmin, kmax] = parse_k_range(k_range);
            auto rows = run_growth(read_pattern_file(pattern_path), *tag, kmin, kmax, cfg);
            std::ofstream file;
            std::ostream& out = open_output(file, csv_path);
            write_growth_csv(out, rows);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
