#ifndef CLOSURELAB_DICHOTOMY_HPP
#define CLOSURELAB_DICHOTOMY_HPP

#include "closurelab/pattern.hpp"
#include "closurelab/twins.hpp"

#include <string>
#include <vector>

namespace closurelab {

enum class GrowthKind { Polynomial, Exponential };

enum class CaseTag { NoBad, P1a, P1b, P1c, E2a, E2b, E2c, MultiBad };

inline const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::NoBad: return "no-bad";
        case CaseTag::P1a: return "1a";
        case CaseTag::P1b: return "1b";
        case CaseTag::P1c: return "1c";
        case CaseTag::E2a: return "2a";
        case CaseTag::E2b: return "2b";
        case CaseTag::E2c: return "2c";
        case CaseTag::MultiBad: return "multi-bad";
    }
    return "?";
}

inline const char* to_string(GrowthKind k) {
    return k == GrowthKind::Polynomial ? "Polynomial" : "Exponential";
}

struct DichotomyVerdict {
    GrowthKind kind = GrowthKind::Polynomial;
    CaseTag case_tag = CaseTag::NoBad;
    std::vector<int> bad_group; // the single bad twin group, when one exists
    std::string bound_note;
};

// Classifies (H, U+, U-) by the count of maximal induced prescribed
// blow-ups achievable in c-closed hosts: polynomially bounded for every c,
// or exponential for some c. Decision tree over the bad twin groups:
//   - no bad group: polynomial;
//   - two or more bad groups: exponential;
//   - exactly one bad group B, B a clique group or a singleton:
//       unprescribed member -> 1a; B inside U+ -> 1b; otherwise 2a;
//   - exactly one bad group B, independent with |B| >= 2:
//       exactly one unprescribed member and the rest in U- -> 1c;
//       fully prescribed with a U- member -> 2b;
//       at least two members outside U- -> 2c.
inline DichotomyVerdict classify_dichotomy(const Pattern& p) {
    const int k = p.size();
    auto bad = bad_twin_groups(p.h);

    DichotomyVerdict v;
    auto polynomial_note = [&]() {
        return "count <= (2n)^" + std::to_string(k) + " * (n^2*2^c)^" + std::to_string(k) +
               " in every c-closed host";
    };
    auto exponential_note = [&]() {
        return "count >= 2^(-3*" + std::to_string(k) + "^2 - 2*" + std::to_string(k) +
               " + n/2) in some (" + std::to_string(k + 1) + ")-closed host";
    };

    if (bad.empty()) {
        v.kind = GrowthKind::Polynomial;
        v.case_tag = CaseTag::NoBad;
        v.bound_note = polynomial_note();
        return v;
    }
    if (bad.size() >= 2) {
        v.kind = GrowthKind::Exponential;
        v.case_tag = CaseTag::MultiBad;
        v.bound_note = exponential_note();
        return v;
    }

    const std::vector<int>& B = bad.front();
    v.bad_group = B;
    int unprescribed = 0, in_plus = 0, in_minus = 0;
    for (int x : B) {
        if (p.in_clique_set(x)) ++in_plus;
        else if (p.in_indep_set(x)) ++in_minus;
        else ++unprescribed;
    }
    const bool clique_branch =
        B.size() == 1 || p.h.adjacent(B[0], B[1]); // singletons use the clique branch

    if (clique_branch) {
        if (unprescribed > 0) {
            v.kind = GrowthKind::Polynomial;
            v.case_tag = CaseTag::P1a;
        } else if (in_plus == static_cast<int>(B.size())) {
            v.kind = GrowthKind::Polynomial;
            v.case_tag = CaseTag::P1b;
        } else {
            v.kind = GrowthKind::Exponential;
            v.case_tag = CaseTag::E2a;
        }
    } else {
        if (unprescribed == 1 && in_minus == static_cast<int>(B.size()) - 1) {
            v.kind = GrowthKind::Polynomial;
            v.case_tag = CaseTag::P1c;
        } else if (unprescribed == 0 && in_minus > 0) {
            v.kind = GrowthKind::Exponential;
            v.case_tag = CaseTag::E2b;
        } else {
            // remaining shapes all leave at least two members outside U-
            v.kind = GrowthKind::Exponential;
            v.case_tag = CaseTag::E2c;
        }
    }
    v.bound_note = v.kind == GrowthKind::Polynomial ? polynomial_note() : exponential_note();
    return v;
}

} // namespace closurelab

#endif
