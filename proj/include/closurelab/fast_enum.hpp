#ifndef CLOSURELAB_FAST_ENUM_HPP
#define CLOSURELAB_FAST_ENUM_HPP

#include "closurelab/blowup.hpp"
#include "closurelab/bounds.hpp"
#include "closurelab/cliques.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>
#include <vector>

namespace closurelab {

// One candidate seed for the guided enumeration: an independent set T of
// pattern vertices whose parts will be reconstructed from common
// neighborhoods, explicit small parts for the remaining pattern vertices,
// and a maximal-clique choice for each clique-prescribed member of T.
struct CandidateSeed {
    std::vector<int> t_set;                    // independent in H
    std::vector<std::vector<int>> small_parts; // by pattern vertex; empty for i in T
    std::vector<int> clique_choice;            // by pattern vertex; -1 unless i in T and prescribed
};

namespace detail {

class CandidateGenerator {
public:
    CandidateGenerator(const Graph& g, const Pattern& p, int c)
        : g_(g), p_(p), c_(c), n_(g.vertex_count()), k_(p.size()) {}

    // Calls fn(seed, set) for every seed in canonical order.
    void run(const std::function<void(const CandidateSeed&, const std::vector<int>&)>& fn) {
        fn_ = &fn;
        bool need_cliques = !p_.clique_prescribed.empty();
        if (need_cliques) cliques_ = maximal_cliques(g_);

        // independent T subsets, by increasing size then lexicographic
        std::vector<std::vector<int>> t_choices;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k_); ++mask) {
            std::vector<int> t;
            for (int i = 0; i < k_; ++i)
                if (mask >> i & 1) t.push_back(i);
            if (is_independent_set(p_.h, t)) t_choices.push_back(std::move(t));
        }
        std::sort(t_choices.begin(), t_choices.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });

        for (const auto& t : t_choices) {
            in_t_.assign(k_, false);
            for (int i : t) in_t_[i] = true;
            seed_.t_set = t;
            seed_.small_parts.assign(k_, {});
            seed_.clique_choice.assign(k_, -1);
            part_cap_.assign(k_, std::max(c_ - 1, 1));
            for (int i = 0; i < k_; ++i) {
                if (in_t_[i]) continue;
                for (int j : t)
                    if (p_.h.adjacent(i, j)) { part_cap_[i] = 1; break; }
            }
            used_ = VertexSet(n_);
            choose_part(0);
        }
    }

private:
    void choose_part(int i) {
        while (i < k_ && in_t_[i]) ++i;
        if (i == k_) {
            finish_small_parts();
            return;
        }
        // vertices usable for part i: unused and complete to every chosen
        // part adjacent to i in the pattern
        VertexSet allowed(n_);
        allowed.fill();
        allowed.subtract(used_);
        for (int j = 0; j < k_; ++j) {
            if (j == i || in_t_[j] || seed_.small_parts[j].empty()) continue;
            if (!p_.h.adjacent(i, j)) continue;
            for (int v : seed_.small_parts[j]) allowed &= g_.neighbors(v);
        }
        std::vector<int> pool = allowed.to_vector();
        extend_part(i, pool, 0);
    }

    void extend_part(int i, const std::vector<int>& pool, std::size_t start) {
        auto& part = seed_.small_parts[i];
        for (std::size_t idx = start; idx < pool.size(); ++idx) {
            int v = pool[idx];
            if (p_.in_clique_set(i)) {
                bool ok = true;
                for (int w : part)
                    if (!g_.adjacent(v, w)) { ok = false; break; }
                if (!ok) continue;
            }
            part.push_back(v);
            used_.set(v);
            choose_part(i + 1);
            if (static_cast<int>(part.size()) < part_cap_[i])
                extend_part(i, pool, idx + 1);
            used_.reset(v);
            part.pop_back();
        }
    }

    void finish_small_parts() {
        // common neighborhoods around T determined by the singleton
        // neighbor parts
        piece_.assign(k_, {});
        for (int i : seed_.t_set) {
            VertexSet boundary(n_);
            bool any = false;
            for (int j = 0; j < k_; ++j) {
                if (in_t_[j] || !p_.h.adjacent(i, j)) continue;
                for (int v : seed_.small_parts[j]) {
                    boundary.set(v);
                    any = true;
                }
            }
            VertexSet hood(n_);
            hood.fill();
            if (any) {
                boundary.for_each([&](int v) { hood &= g_.neighbors(v); });
                hood.subtract(boundary);
            }
            if (!p_.in_clique_set(i) && hood.empty()) return; // forced part empty
            piece_[i] = hood;
        }
        choose_clique(0);
    }

    void choose_clique(std::size_t t_idx) {
        if (t_idx == seed_.t_set.size()) {
            emit();
            return;
        }
        int i = seed_.t_set[t_idx];
        if (!p_.in_clique_set(i)) {
            choose_clique(t_idx + 1);
            return;
        }
        for (std::size_t ci = 0; ci < cliques_.size(); ++ci) {
            VertexSet piece = piece_[i] & VertexSet::of(n_, cliques_[ci]);
            if (piece.empty()) continue;
            seed_.clique_choice[i] = static_cast<int>(ci);
            VertexSet saved = piece_[i];
            piece_[i] = piece;
            choose_clique(t_idx + 1);
            piece_[i] = saved;
            seed_.clique_choice[i] = -1;
        }
    }

    void emit() {
        VertexSet s = used_;
        for (int i : seed_.t_set) s |= piece_[i];
        (*fn_)(seed_, s.to_vector());
    }

    const Graph& g_;
    const Pattern& p_;
    int c_, n_, k_;
    const std::function<void(const CandidateSeed&, const std::vector<int>&)>* fn_ = nullptr;
    std::vector<std::vector<int>> cliques_;
    std::vector<char> in_t_;
    std::vector<int> part_cap_;
    CandidateSeed seed_;
    VertexSet used_;
    std::vector<VertexSet> piece_;
};

} // namespace detail

namespace detail {

inline void check_candidate_preconditions(const Graph& g, const Pattern& p, int c) {
    if (c < 1) throw argument_error("c must be >= 1");
    if (p.size() < 2)
        throw precondition_error("guided enumeration needs a pattern with k >= 2");
    if (!p.indep_prescribed.empty())
        throw precondition_error("guided enumeration handles clique prescriptions only");
    if (!is_c_closed(g, c))
        throw precondition_error("host graph is not " + std::to_string(c) + "-closed");
}

} // namespace detail

// Walks every candidate seed in canonical order (T by size then
// lexicographic, part choices lexicographic, cliques in enumeration
// order) and hands the seed with its emitted set to fn.
inline void for_each_candidate_seed(
    const Graph& g, const Pattern& p, int c,
    const std::function<void(const CandidateSeed&, const std::vector<int>&)>& fn) {
    detail::check_candidate_preconditions(g, p, c);
    detail::CandidateGenerator gen(g, p, c);
    gen.run(fn);
}

// Generates a deduplicated family of candidate sets guaranteed to contain
// every maximal prescribed (non-induced) blow-up of the pattern in a
// c-closed host. Requires k >= 2, no U-, and a genuinely c-closed host.
inline std::vector<std::vector<int>> generate_candidates(const Graph& g, const Pattern& p,
                                                         int c) {
    detail::check_candidate_preconditions(g, p, c);
    std::vector<std::vector<int>> out;
    detail::CandidateGenerator gen(g, p, c);
    gen.run([&](const CandidateSeed&, const std::vector<int>& set) { out.push_back(set); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Guided enumeration: filter the candidate family down to blow-ups and
// keep the inclusion-maximal ones. Every blow-up extends to a maximal one
// and every maximal one is a candidate, so no superset search over the
// host is needed.
inline EnumerationResult enumerate_maximal_fast(const Graph& g, const Pattern& p, int c,
                                                int workers = 1) {
    const auto start = std::chrono::steady_clock::now();
    auto candidates = generate_candidates(g, p, c);

    EnumerationResult result;
    result.mode = "fast";
    result.candidates_generated = candidates.size();

    workers = std::max(1, workers);
    std::vector<char> pass(candidates.size(), 0);
    auto filter = [&](int w) {
        for (std::size_t i = w; i < candidates.size(); i += workers)
            pass[i] = is_blowup(g, candidates[i], p, false) ? 1 : 0;
    };
    if (workers == 1) {
        filter(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(filter, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::vector<int>> blowups;
    std::vector<VertexSet> masks;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!pass[i]) continue;
        masks.push_back(VertexSet::of(g.vertex_count(), candidates[i]));
        blowups.push_back(std::move(candidates[i]));
    }
    result.candidates_passing = blowups.size();

    for (std::size_t i = 0; i < blowups.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < blowups.size() && !contained; ++j)
            contained = i != j && blowups[i].size() < blowups[j].size() &&
                        masks[i].is_subset_of(masks[j]);
        if (!contained) result.sets.push_back(blowups[i]);
    }
    std::sort(result.sets.begin(), result.sets.end());
    result.count = result.sets.size();
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace closurelab

#endif
