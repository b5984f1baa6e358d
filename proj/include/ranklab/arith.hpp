#pragma once

/// Exact integer arithmetic for the numerical invariants m(p,l), a(p,l),
/// c(p,2) attached to a pair of primes, plus order formulas for iterated
/// wreath products and Sylow subgroups of symmetric groups.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ranklab/errors.hpp"

namespace ranklab {

using bigint = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime_pair(std::uint64_t p, std::uint64_t ell) {
    if (!is_prime(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
    if (!is_prime(ell)) throw domain_error("l = " + std::to_string(ell) + " is not prime");
    if (p == 2 && ell == 2) throw domain_error("the case p = l = 2 is excluded");
}

/// m(p,l): multiplicative order of p mod l for p != l, and p-1 for p = l.
inline std::uint64_t mult_order(std::uint64_t p, std::uint64_t ell) {
    require_prime_pair(p, ell);
    if (p == ell) return p - 1;
    std::uint64_t pw = p % ell;
    for (std::uint64_t n = 1; n <= ell; ++n) {
        if (pw == 1) return n;
        pw = (pw * p) % ell;
    }
    throw domain_error("mult_order: no order found (unreachable for prime l)");
}

/// a(p,l): exact l-adic valuation of p^m(p,l) - 1 for p != l, and 1 for p = l.
inline std::uint64_t depth_a(std::uint64_t p, std::uint64_t ell) {
    require_prime_pair(p, ell);
    if (p == ell) return 1;
    std::uint64_t m = mult_order(p, ell);
    bigint v = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(m)) - 1;
    std::uint64_t a = 0;
    while (v % ell == 0) { v /= ell; ++a; }
    return a;
}

/// c(p,2) = v_2(p^2 - 1), defined for p = 3 mod 4; always >= 3.
inline std::uint64_t depth_c(std::uint64_t p) {
    if (!is_prime(p)) throw domain_error("p is not prime");
    if (p % 4 != 3) throw domain_error("c(p,2) requires p = 3 mod 4");
    bigint v = bigint(p) * p - 1;
    std::uint64_t c = 0;
    while (v % 2 == 0) { v /= 2; ++c; }
    return c;
}

/// The invariant triple (m, a, and c when l = 2 and p = 3 mod 4).
struct InvariantTriple {
    std::uint64_t p = 0;
    std::uint64_t ell = 0;
    std::uint64_t m = 0;
    std::uint64_t a = 0;
    std::optional<std::uint64_t> c;
};

inline InvariantTriple invariants(std::uint64_t p, std::uint64_t ell) {
    InvariantTriple t;
    t.p = p;
    t.ell = ell;
    t.m = mult_order(p, ell);
    t.a = depth_a(p, ell);
    if (ell == 2 && p % 4 == 3) t.c = depth_c(p);
    return t;
}

/// l-adic digits of n, least significant first; empty for n = 0.
inline std::vector<std::uint64_t> ladic_expansion(std::uint64_t n, std::uint64_t ell) {
    if (ell < 2) throw domain_error("ladic_expansion: base must be >= 2");
    std::vector<std::uint64_t> digits;
    while (n > 0) {
        digits.push_back(n % ell);
        n /= ell;
    }
    return digits;
}

/// |W_r(l)| = l^((l^r - 1)/(l - 1)) for the r-fold iterated wreath product.
inline bigint wreath_order(std::uint64_t ell, std::uint64_t r) {
    if (ell < 2) throw domain_error("wreath_order: l must be >= 2");
    bigint lr = boost::multiprecision::pow(bigint(ell), static_cast<unsigned>(r));
    bigint expo = (lr - 1) / (bigint(ell) - 1);
    if (expo > 1'000'000) throw domain_error("wreath_order: exponent too large");
    return boost::multiprecision::pow(bigint(ell), static_cast<unsigned>(expo));
}

/// Legendre's formula: v_l(n!) = sum_{i>=1} floor(n / l^i).
inline std::uint64_t sylow_sym_valuation(std::uint64_t n, std::uint64_t ell) {
    if (ell < 2) throw domain_error("sylow_sym_valuation: l must be >= 2");
    std::uint64_t v = 0;
    for (std::uint64_t q = n / ell; q > 0; q /= ell) v += q;
    return v;
}

/// |GL_d(F_p)| = prod_{i=0}^{d-1} (p^d - p^i).
inline bigint gl_order(std::uint64_t d, std::uint64_t p) {
    bigint pd = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(d));
    bigint ord = 1;
    bigint pi = 1;
    for (std::uint64_t i = 0; i < d; ++i) {
        ord *= pd - pi;
        pi *= p;
    }
    return ord;
}

/// l-adic valuation of a big integer.
inline std::uint64_t valuation(bigint n, std::uint64_t ell) {
    if (n == 0) throw domain_error("valuation of zero");
    std::uint64_t v = 0;
    while (n % ell == 0) { n /= ell; ++v; }
    return v;
}

} // namespace ranklab
