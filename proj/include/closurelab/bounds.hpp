#ifndef CLOSURELAB_BOUNDS_HPP
#define CLOSURELAB_BOUNDS_HPP

#include "closurelab/bigint.hpp"
#include "closurelab/errors.hpp"

#include <cstdint>

namespace closurelab {

// Count bounds evaluated exactly in integer arithmetic. The clique-count
// bound for c-closed graphs is min{3^((c-1)/3) n^2, 4^((c+4)(c-1)/2) n^(2-2^(1-c))};
// fractional powers are handled by comparing integer powers of both sides,
// never through floating point.

// count <= 3^((c-1)/3) n^2  <=>  count^3 <= 3^(c-1) n^6
inline bool clique_bound_branch_a_holds(std::uint64_t count, int n, int c) {
    BigUint lhs = BigUint(count).pow(3);
    BigUint rhs = BigUint(3).pow(c - 1) * BigUint(n).pow(6);
    return lhs <= rhs;
}

// count <= 4^((c+4)(c-1)/2) n^((2^c-1)/2^(c-1))
//   <=>  count^(2^(c-1)) <= 4^((c+4)(c-1)/2 * 2^(c-1)) n^(2^c-1)
inline bool clique_bound_branch_b_holds(std::uint64_t count, int n, int c) {
    const std::uint64_t half_pow = std::uint64_t{1} << (c - 1); // 2^(c-1)
    const std::uint64_t e4 = static_cast<std::uint64_t>(c + 4) * (c - 1) / 2 * half_pow;
    BigUint lhs = BigUint(count).pow(half_pow);
    BigUint rhs = BigUint(4).pow(e4) * BigUint(n).pow(2 * half_pow - 1);
    return lhs <= rhs;
}

// Exact check of count <= min{branch a, branch b}.
inline bool clique_count_obeys_bound(std::uint64_t count, int n, int c) {
    if (n < 1 || c < 1) throw argument_error("clique bound needs n, c >= 1");
    return clique_bound_branch_a_holds(count, n, c) &&
           clique_bound_branch_b_holds(count, n, c);
}

// Ceiling of the clique-count bound (fractional exponents rounded up).
inline BigUint clique_count_bound_ceil(int n, int c) {
    if (n < 1 || c < 1) throw argument_error("clique bound needs n, c >= 1");
    // ceil(3^((c-1)/3) n^2) = smallest m with m^3 >= 3^(c-1) n^6
    BigUint a = ceil_root(BigUint(3).pow(c - 1) * BigUint(n).pow(6), 3);
    const std::uint64_t half_pow = std::uint64_t{1} << (c - 1);
    const std::uint64_t e4 = static_cast<std::uint64_t>(c + 4) * (c - 1) / 2 * half_pow;
    BigUint b = ceil_root(BigUint(4).pow(e4) * BigUint(n).pow(2 * half_pow - 1), half_pow);
    return a <= b ? a : b;
}

// Maximal-blow-up count bound for k-vertex patterns in c-closed hosts:
// (n^max(c-1,1) + min-branch)^k, fractional exponents rounded up.
inline BigUint blowup_count_bound(int n, int k, int c) {
    if (n < 1 || k < 1 || c < 1) throw argument_error("blow-up bound needs n, k, c >= 1");
    const int e = c - 1 > 1 ? c - 1 : 1;
    BigUint base = BigUint(n).pow(e) + clique_count_bound_ceil(n, c);
    return base.pow(k);
}

// Polynomial-side bound for maximal induced prescribed blow-ups:
// (2n)^k * (n^2 2^c)^k.
inline BigUint induced_poly_bound(int n, int k, int c) {
    if (n < 1 || k < 1 || c < 1) throw argument_error("induced bound needs n, k, c >= 1");
    BigUint a = BigUint(2 * static_cast<std::uint64_t>(n)).pow(k);
    BigUint b = (BigUint(n).pow(2) * BigUint(2).pow(c)).pow(k);
    return a * b;
}

// Star-pattern bound 3^c n^2 + n^c for hosts within desk scale.
inline BigUint star_count_bound(int n, int c) {
    if (n < 1 || c < 1) throw argument_error("star bound needs n, c >= 1");
    return BigUint(3).pow(c) * BigUint(n).pow(2) + BigUint(n).pow(c);
}

} // namespace closurelab

#endif
