#include "closurelab/dichotomy.hpp"
#include "closurelab/named_graphs.hpp"
#include "closurelab/pattern.hpp"
#include "closurelab/twins.hpp"

#include <catch2/catch.hpp>

#include <array>
#include <sstream>

using namespace closurelab;

namespace {

// All labeled graphs on k vertices via edge masks.
Graph graph_from_mask(int k, std::uint64_t mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v, ++bit)
            if (mask >> bit & 1) es.emplace_back(u, v);
    return Graph::from_edges(k, es);
}

} // namespace

TEST_CASE("pattern files parse prescriptions") {
    Pattern p = load_pattern("2 1\n0 1\nU+ 0 1\n");
    CHECK(p.size() == 2);
    CHECK(p.in_clique_set(0));
    CHECK(p.in_clique_set(1));
    CHECK(p.indep_prescribed.empty());

    Pattern q = load_pattern("# K1 forced independent\n1 0\nU- 0\n");
    CHECK(q.in_indep_set(0));

    CHECK_THROWS_AS(load_pattern("2 1\n0 1\nU+ 0\nU- 0\n"), parse_error);
    CHECK_THROWS_AS(load_pattern("2 1\n0 1\nU+ 5\n"), parse_error);
    CHECK_THROWS_AS(load_pattern("2 1\n0 1\nbogus\n"), parse_error);

    // save/load round trip with both prescription kinds
    Pattern both(star_graph(2), {1}, {2});
    std::ostringstream out;
    save_pattern(out, both);
    Pattern back = load_pattern(out.str());
    CHECK(back.h.edges() == both.h.edges());
    CHECK(back.clique_prescribed == both.clique_prescribed);
    CHECK(back.indep_prescribed == both.indep_prescribed);
}

TEST_CASE("twin decomposition on named graphs") {
    // C4: two independent non-bad groups {0,2}, {1,3}
    auto c4 = twin_decomposition(cycle_graph(4));
    REQUIRE(c4.groups.size() == 2);
    CHECK(c4.groups[0].members == std::vector<int>{0, 2});
    CHECK(c4.groups[1].members == std::vector<int>{1, 3});
    for (const auto& g : c4.groups) {
        CHECK(g.is_independent_group);
        CHECK_FALSE(g.is_clique_group);
        CHECK_FALSE(g.is_bad);
    }

    // K3: one clique group, bad, single plus-twin group
    auto k3 = twin_decomposition(complete_graph(3));
    REQUIRE(k3.groups.size() == 1);
    CHECK(k3.groups[0].members == std::vector<int>{0, 1, 2});
    CHECK(k3.groups[0].is_clique_group);
    CHECK(k3.groups[0].is_bad);
    REQUIRE(k3.plus_groups.size() == 1);
    CHECK(k3.plus_groups[0] == std::vector<int>{0, 1, 2});

    // star with 3 leaves: center not bad, leaf group independent and bad
    auto f3 = twin_decomposition(star_graph(3));
    REQUIRE(f3.groups.size() == 2);
    CHECK(f3.groups[0].members == std::vector<int>{0});
    CHECK_FALSE(f3.groups[0].is_bad);
    CHECK(f3.groups[1].members == std::vector<int>{1, 2, 3});
    CHECK(f3.groups[1].is_independent_group);
    CHECK(f3.groups[1].is_bad);
    // independent group splits into singleton plus-twin groups
    CHECK(f3.plus_groups.size() == 4);
}

TEST_CASE("bad twin groups") {
    CHECK(bad_twin_groups(complete_graph(2)) ==
          std::vector<std::vector<int>>{{0, 1}});
    CHECK(bad_twin_groups(cycle_graph(5)).empty());
    CHECK(bad_twin_groups(empty_graph(2)) ==
          std::vector<std::vector<int>>{{0, 1}});
}

namespace {

// Mask-based re-implementation of the twin / bad predicates, independent
// of the library path it cross-checks.
struct MaskGraph {
    int k = 0;
    std::array<std::uint64_t, 8> adj{};

    static MaskGraph from_edge_mask(int k, std::uint64_t mask) {
        MaskGraph g;
        g.k = k;
        int bit = 0;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v, ++bit)
                if (mask >> bit & 1) {
                    g.adj[u] |= std::uint64_t{1} << v;
                    g.adj[v] |= std::uint64_t{1} << u;
                }
        return g;
    }
    bool edge(int u, int v) const { return adj[u] >> v & 1; }
    bool twins(int u, int v) const {
        std::uint64_t strip = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return (adj[u] & strip) == (adj[v] & strip);
    }
    bool bad(int v) const {
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (edge(v, a) && edge(v, b) && !edge(a, b)) return false;
        return true;
    }
};

} // namespace

TEST_CASE("twin relation is an equivalence and groups are homogeneous") {
    long long violations = 0;
    for (int k = 1; k <= 7; ++k) {
        const int bits = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            MaskGraph g = MaskGraph::from_edge_mask(k, mask);
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    if (!g.twins(a, b)) continue;
                    for (int c = b + 1; c < k; ++c)
                        if (g.twins(b, c) && !g.twins(a, c)) ++violations;
                }
        }
    }
    REQUIRE(violations == 0);

    // library decomposition cross-checked exhaustively for k <= 5 and on a
    // sample of larger graphs
    auto check_graph = [&](int k, std::uint64_t mask) {
        Graph h = graph_from_mask(k, mask);
        MaskGraph g = MaskGraph::from_edge_mask(k, mask);
        auto d = twin_decomposition(h);
        for (const auto& grp : d.groups) {
            for (std::size_t i = 0; i < grp.members.size(); ++i)
                for (std::size_t j = i + 1; j < grp.members.size(); ++j) {
                    if (!g.twins(grp.members[i], grp.members[j])) ++violations;
                    if (h.adjacent(grp.members[i], grp.members[j]) != grp.is_clique_group)
                        ++violations;
                }
            for (int v : grp.members)
                if (g.bad(v) != grp.is_bad) ++violations;
        }
        // distinct groups are not twins
        for (std::size_t gi = 0; gi < d.groups.size(); ++gi)
            for (std::size_t gj = gi + 1; gj < d.groups.size(); ++gj)
                if (g.twins(d.groups[gi].members[0], d.groups[gj].members[0])) ++violations;
    };
    for (int k = 1; k <= 5; ++k)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * (k - 1) / 2)); ++mask)
            check_graph(k, mask);
    std::mt19937_64 rng(321);
    for (int iter = 0; iter < 4000; ++iter) {
        int k = 6 + static_cast<int>(rng() % 2);
        check_graph(k, rng() & ((std::uint64_t{1} << (k * (k - 1) / 2)) - 1));
    }
    REQUIRE(violations == 0);
}

TEST_CASE("different bad twin groups are pairwise nonadjacent") {
    long long violations = 0;
    for (int k = 1; k <= 7; ++k) {
        const int bits = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            MaskGraph g = MaskGraph::from_edge_mask(k, mask);
            // adjacent bad vertices must be twins (one bad group per clump)
            for (int v = 0; v < k; ++v)
                for (int w = v + 1; w < k; ++w)
                    if (g.edge(v, w) && g.bad(v) && g.bad(w) && !g.twins(v, w))
                        ++violations;
        }
    }
    REQUIRE(violations == 0);

    // same claim through the library surface on all k <= 5
    for (int k = 1; k <= 5; ++k) {
        const int bits = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph h = graph_from_mask(k, mask);
            auto bad = bad_twin_groups(h);
            for (std::size_t i = 0; i < bad.size(); ++i)
                for (std::size_t j = i + 1; j < bad.size(); ++j)
                    for (int v : bad[i])
                        for (int w : bad[j])
                            if (h.adjacent(v, w)) ++violations;
        }
    }
    REQUIRE(violations == 0);
}

TEST_CASE("groups with identical outside adjacency differ in kind") {
    // if [w] != [t] see the same other groups, then not both clique groups
    // with w~t, and not both independent groups with w!~t
    long long violations = 0;
    for (int k = 2; k <= 6; ++k) {
        const int bits = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph h = graph_from_mask(k, mask);
            auto d = twin_decomposition(h);
            for (std::size_t gi = 0; gi < d.groups.size(); ++gi) {
                for (std::size_t gj = gi + 1; gj < d.groups.size(); ++gj) {
                    int w = d.groups[gi].members[0];
                    int t = d.groups[gj].members[0];
                    bool same_outside = true;
                    for (int x = 0; x < k && same_outside; ++x) {
                        if (d.group_of[x] == static_cast<int>(gi) ||
                            d.group_of[x] == static_cast<int>(gj))
                            continue;
                        if (h.adjacent(w, x) != h.adjacent(t, x)) same_outside = false;
                    }
                    if (!same_outside) continue;
                    const bool both_clique =
                        d.groups[gi].is_clique_group && d.groups[gj].is_clique_group;
                    const bool both_indep =
                        d.groups[gi].is_independent_group && d.groups[gj].is_independent_group;
                    if (both_clique && h.adjacent(w, t)) ++violations;
                    if (both_indep && !h.adjacent(w, t)) ++violations;
                }
            }
        }
    }
    REQUIRE(violations == 0);
}

TEST_CASE("classifier on the worked examples") {
    Graph k1 = empty_graph(1);
    auto v1 = classify_dichotomy(Pattern(k1, {0}, {}));
    CHECK(v1.kind == GrowthKind::Polynomial);
    CHECK(v1.case_tag == CaseTag::P1b);

    auto v2 = classify_dichotomy(Pattern(k1, {}, {0}));
    CHECK(v2.kind == GrowthKind::Exponential);
    CHECK(v2.case_tag == CaseTag::E2a);

    auto v3 = classify_dichotomy(Pattern(complete_graph(2)));
    CHECK(v3.kind == GrowthKind::Polynomial);
    CHECK(v3.case_tag == CaseTag::P1a);

    auto v4 = classify_dichotomy(Pattern(empty_graph(2)));
    CHECK(v4.kind == GrowthKind::Exponential);
    CHECK(v4.case_tag == CaseTag::E2c);

    auto v5 = classify_dichotomy(Pattern(cycle_graph(4)));
    CHECK(v5.kind == GrowthKind::Polynomial);
    CHECK(v5.case_tag == CaseTag::NoBad);
}

TEST_CASE("classifier total and consistent over all small patterns") {
    long long violations = 0;
    long long classified = 0;
    for (int k = 1; k <= 5; ++k) {
        const int bits = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph h = graph_from_mask(k, mask);
            // all 3^k prescriptions: each vertex none / U+ / U-
            std::vector<int> code(k, 0);
            for (;;) {
                std::vector<int> uplus, uminus;
                for (int v = 0; v < k; ++v) {
                    if (code[v] == 1) uplus.push_back(v);
                    if (code[v] == 2) uminus.push_back(v);
                }
                auto verdict = classify_dichotomy(Pattern(h, uplus, uminus));
                ++classified;
                const bool poly = verdict.kind == GrowthKind::Polynomial;
                const bool poly_tag = verdict.case_tag == CaseTag::NoBad ||
                                      verdict.case_tag == CaseTag::P1a ||
                                      verdict.case_tag == CaseTag::P1b ||
                                      verdict.case_tag == CaseTag::P1c;
                if (poly != poly_tag) ++violations;
                int pos = 0;
                while (pos < k && code[pos] == 2) code[pos++] = 0;
                if (pos == k) break;
                ++code[pos];
            }
        }
    }
    REQUIRE(violations == 0);
    // every labeled pattern with k <= 5 got exactly one verdict
    long long expected = 0;
    for (int k = 1; k <= 5; ++k) {
        long long graphs = 1LL << (k * (k - 1) / 2);
        long long prescriptions = 1;
        for (int i = 0; i < k; ++i) prescriptions *= 3;
        expected += graphs * prescriptions;
    }
    REQUIRE(classified == expected);
}
