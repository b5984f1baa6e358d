#pragma once

/// Closed-form rank formulas for the wreath-product families and for
/// Sylow l-subgroups of GL_d(F_p).

#include <cstdint>
#include <string>

#include "ranklab/arith.hpp"

namespace ranklab {

struct GlRankValue {
    std::uint64_t value;
    std::string case_tag; // which branch fired
};

/// rk_l(GL_d(F_p)): floor(d/m) when p != 1 mod l; (3d - d0)/2 when l = 2
/// and p = 1 mod 4; d otherwise.
inline GlRankValue gl_rank_formula(std::uint64_t p, std::uint64_t ell, std::uint64_t d) {
    if (!is_prime(p) || !is_prime(ell)) throw domain_error("gl_rank_formula: p, l must be prime");
    if (p == 2) throw domain_error("gl_rank_formula: p must be odd");
    if (ell == p) throw domain_error("gl_rank_formula: l must differ from p");
    if (d < 1) throw domain_error("gl_rank_formula: d must be >= 1");
    if (p % ell != 1) {
        std::uint64_t m = mult_order(p, ell);
        return {d / m, "floor(d/m)"};
    }
    if (ell == 2 && p % 4 == 1) {
        std::uint64_t d0 = d % 2;
        return {(3 * d - d0) / 2, "(3d-d0)/2"};
    }
    return {d, "d"};
}

/// rk(X_{a,r}(l)) = 3*2^(r-1) for l = 2, a >= 2, r >= 1; l^r otherwise.
inline std::uint64_t x_rank_formula(std::uint64_t ell, std::uint64_t a, std::uint64_t r) {
    if (a < 1) throw domain_error("x_rank_formula: a must be >= 1");
    if (ell == 2 && a >= 2 && r >= 1) return 3 * (std::uint64_t(1) << (r - 1));
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < r; ++i) v *= ell;
    return v;
}

/// rk(Y_{c,r}) = 2^(r+1).
inline std::uint64_t y_rank_formula(std::uint64_t c, std::uint64_t r) {
    if (c < 3) throw domain_error("y_rank_formula: c must be >= 3");
    return std::uint64_t(1) << (r + 1);
}

/// rk(W_r(l)) = l^(r-1) for r >= 1 (W_r = X_{1,r-1}), 0 for the trivial W_0.
inline std::uint64_t w_rank_formula(std::uint64_t ell, std::uint64_t r) {
    if (r == 0) return 0;
    return x_rank_formula(ell, 1, r - 1);
}

/// Rank of a maximal finite p-subgroup of GL_d(Q_p): floor(d/(p-1)).
inline std::uint64_t qp_max_p_rank(std::uint64_t p, std::uint64_t d) {
    if (!is_prime(p) || p == 2) throw domain_error("qp_max_p_rank: p must be an odd prime");
    if (d < 1) throw domain_error("qp_max_p_rank: d must be >= 1");
    return d / (p - 1);
}

/// Bound on rk_2 in terms of the dimension: floor(3 dim / 2) for
/// p = 1 mod 4, dim for p = 3 mod 4.
inline std::uint64_t thmA_rk2_bound(std::uint64_t p, std::uint64_t dim) {
    if (!is_prime(p) || p == 2) throw domain_error("thmA_rk2_bound: p must be an odd prime");
    return (p % 4 == 1) ? (3 * dim) / 2 : dim;
}

} // namespace ranklab
