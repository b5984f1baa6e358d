#pragma once

/// Modules over Z/l^k with a monomial cyclic action: minimal generator
/// counts over (Z/l^k)[h], the 2n/l bound suite, Heller-Reiner
/// decomposition multiplicities, and the d(G) + d_RG(M) <= rank(M) check.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ranklab/arith.hpp"
#include "ranklab/constructions.hpp"
#include "ranklab/group.hpp"
#include "ranklab/perm.hpp"
#include "ranklab/zmod.hpp"

namespace ranklab {

/// Monomial matrix over Z/l^k: entry (i, sigma(i)) = units[i], zero elsewhere.
struct MonomialMatrix {
    std::uint32_t n;
    std::uint64_t ell;
    std::uint32_t k;
    Perm sigma;
    ZVec units;

    RingZM ring() const { return RingZM(ell, k); }

    ZMat to_matrix() const {
        ZMat M(n, ZVec(n, 0));
        RingZM R = ring();
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!R.is_unit(units[i])) throw domain_error("MonomialMatrix: entry is not a unit");
            M[i][sigma.images[i]] = units[i] % R.mod;
        }
        return M;
    }
};

/// Closure of a vector set under the action of h: the smallest
/// h-invariant submodule containing the given rows.
inline ZMat h_closure(const RingZM& R, ZMat rows, const ZMat& H) {
    ZMat basis = howell_basis(R, rows);
    while (true) {
        ZMat next(basis);
        for (const auto& b : basis) next.push_back(zvec_apply(R, b, H));
        next = howell_basis(R, std::move(next));
        if (next == basis) return basis;
        basis = std::move(next);
    }
}

namespace detail {

using FPoly = std::vector<std::uint64_t>; // over F_l, low degree first

/// Minimal polynomial of the matrix H over F_l (entries reduced mod l).
inline FPoly min_poly_mod_ell(std::uint64_t ell, const ZMat& H) {
    std::size_t n = H.size();
    RingZM R(ell, 1);
    // Krylov on flattened powers: find the first linear dependence among
    // I, H, H^2, ... with recorded coefficients.
    ZMat powers;   // flattened n*n vectors
    ZMat combos;   // polynomial coefficients expressing each reduced power
    ZMat reduced;  // row-reduced forms of the powers
    ZMat Hmod(n, ZVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Hmod[i][j] = H[i][j] % ell;
    ZMat cur(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) cur[i][i] = 1;
    auto inv = [&](std::uint64_t a) {
        std::uint64_t r = 1, b = a % ell, e = ell - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % ell;
            b = (b * b) % ell;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t deg = 0; deg <= n; ++deg) {
        ZVec flat;
        flat.reserve(n * n);
        for (const auto& row : cur)
            for (auto x : row) flat.push_back(x % ell);
        ZVec combo(n + 2, 0);
        combo[deg] = 1;
        // reduce flat against stored reduced rows
        for (std::size_t r2 = 0; r2 < reduced.size(); ++r2) {
            std::size_t c = 0;
            while (c < flat.size() && reduced[r2][c] == 0) ++c;
            if (c == flat.size() || flat[c] == 0) continue;
            std::uint64_t f = flat[c]; // reduced rows have pivot 1
            for (std::size_t j = 0; j < flat.size(); ++j)
                flat[j] = (flat[j] + (ell - f) * reduced[r2][j]) % ell;
            for (std::size_t j = 0; j < combo.size(); ++j)
                combo[j] = (combo[j] + (ell - f) * combos[r2][j]) % ell;
        }
        bool zero = true;
        for (auto x : flat)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) {
            // monic minimal polynomial of degree `deg`
            std::uint64_t lead = combo[deg];
            std::uint64_t il = inv(lead);
            FPoly mp(deg + 1);
            for (std::size_t j = 0; j <= deg; ++j) mp[j] = (combo[j] * il) % ell;
            return mp;
        }
        // normalize pivot to 1 and store
        std::size_t c = 0;
        while (flat[c] == 0) ++c;
        std::uint64_t il = inv(flat[c]);
        for (auto& x : flat) x = (x * il) % ell;
        for (auto& x : combo) x = (x * il) % ell;
        reduced.push_back(std::move(flat));
        combos.push_back(std::move(combo));
        // next power
        ZMat nxt(n, ZVec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t s = 0;
                for (std::size_t t = 0; t < n; ++t) s = (s + cur[i][t] * Hmod[t][j]) % ell;
                nxt[i][j] = s;
            }
        cur = std::move(nxt);
    }
    throw domain_error("min_poly_mod_ell: no dependence found (unreachable)");
}

inline FPoly fpoly_mul(std::uint64_t ell, const FPoly& a, const FPoly& b) {
    FPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % ell;
    return c;
}

/// Polynomial division over F_l; returns true and the quotient when the
/// remainder is zero.
inline bool fpoly_divides(std::uint64_t ell, const FPoly& divisor, FPoly dividend,
                          FPoly* quotient) {
    auto inv = [&](std::uint64_t a) {
        std::uint64_t r = 1, b = a % ell, e = ell - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % ell;
            b = (b * b) % ell;
            e >>= 1;
        }
        return r;
    };
    std::size_t dd = divisor.size() - 1;
    if (dividend.size() < divisor.size()) return false;
    std::uint64_t ilead = inv(divisor.back());
    FPoly q(dividend.size() - dd, 0);
    for (std::size_t i = dividend.size(); i-- > dd;) {
        std::uint64_t f = (dividend[i] * ilead) % ell;
        if (f == 0) continue;
        q[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j)
            dividend[i - dd + j] =
                (dividend[i - dd + j] + (ell - f) * divisor[j] % ell) % ell;
    }
    for (std::size_t j = 0; j < dd; ++j)
        if (dividend[j] != 0) return false;
    *quotient = std::move(q);
    return true;
}

/// Distinct monic irreducible factors of a polynomial over F_l, found by
/// trial division in increasing degree (first factor found is irreducible).
inline std::vector<FPoly> distinct_irreducible_factors(std::uint64_t ell, FPoly f) {
    std::vector<FPoly> factors;
    while (f.size() > 1) {
        bool found = false;
        for (std::size_t deg = 1; deg < f.size() && !found; ++deg) {
            // iterate monic candidates of this degree
            std::vector<std::uint64_t> coeffs(deg, 0);
            while (true) {
                FPoly cand(coeffs);
                cand.push_back(1);
                FPoly q;
                if (fpoly_divides(ell, cand, f, &q)) {
                    factors.push_back(cand);
                    // strip all powers of this factor
                    f = std::move(q);
                    FPoly q2;
                    while (f.size() > 1 && fpoly_divides(ell, cand, f, &q2)) f = std::move(q2);
                    found = true;
                    break;
                }
                std::size_t i = 0;
                while (i < deg && ++coeffs[i] == ell) coeffs[i++] = 0;
                if (i == deg) break;
            }
        }
        if (!found) { // f itself is irreducible
            factors.push_back(f);
            break;
        }
    }
    return factors;
}

/// Evaluate a polynomial (over F_l, lifted) at the matrix H over Z/l^k.
inline ZMat fpoly_at_matrix(const RingZM& R, const FPoly& f, const ZMat& H) {
    std::size_t n = H.size();
    ZMat acc(n, ZVec(n, 0));
    ZMat pw(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
    for (std::size_t deg = 0; deg < f.size(); ++deg) {
        if (f[deg] != 0)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    acc[i][j] = (acc[i][j] + f[deg] % R.mod * pw[i][j]) % R.mod;
        if (deg + 1 < f.size()) {
            ZMat nxt(n, ZVec(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::uint64_t s = 0;
                    for (std::size_t t = 0; t < n; ++t)
                        s = (s + pw[i][t] * (H[t][j] % R.mod)) % R.mod;
                    nxt[i][j] = s;
                }
            pw = std::move(nxt);
        }
    }
    return acc;
}

} // namespace detail

/// Exact minimal number of generators of an h-invariant module M (given by
/// a Howell basis) over the commutative ring (Z/l^k)[h]: the maximum over
/// maximal ideals m of dim_{R/m}(M/mM).  Maximal ideals correspond to the
/// irreducible factors of the minimal polynomial of h mod l.
inline std::uint64_t min_gen_count(const RingZM& R, const ZMat& basis, const ZMat& H) {
    if (basis.empty()) return 0;
    for (const auto& b : basis)
        if (!in_span(R, zvec_apply(R, b, H), basis))
            throw not_invariant("min_gen_count: module is not h-invariant");
    auto mp = detail::min_poly_mod_ell(R.ell, H);
    auto factors = detail::distinct_irreducible_factors(R.ell, mp);
    std::uint64_t logM = span_log(R, basis);
    std::uint64_t best = 0;
    for (const auto& f : factors) {
        ZMat fH = detail::fpoly_at_matrix(R, f, H);
        ZMat mM;
        for (const auto& b : basis) {
            mM.push_back(zvec_scale(R, b, R.ell));
            mM.push_back(zvec_apply(R, b, fH));
        }
        std::uint64_t logmM = span_log(R, howell_basis(R, std::move(mM)));
        std::uint64_t dimq = logM - logmM; // dim over F_l of M/mM
        std::uint64_t degf = f.size() - 1;
        if (dimq % degf != 0)
            throw domain_error("min_gen_count: quotient dimension not divisible by residue degree");
        best = std::max(best, dimq / degf);
    }
    return best;
}

struct Lemma32Report {
    std::uint64_t ell, n, k, trials, seed;
    std::uint64_t bound;         // 2n/l
    std::uint64_t violations;    // count of trials exceeding the bound
    std::uint64_t max_observed;  // largest generator count seen
};

/// Sample (h, M) pairs per the fixed-point-free monomial setting and count
/// violations of d(M) <= 2n/l.  Each result is recomputed at precision k+1
/// with the same integer data; a bound verdict that differs between the
/// two precisions counts as a violation.
inline Lemma32Report verify_lemma32(std::uint64_t ell, std::uint64_t n, std::uint32_t k,
                                    std::uint64_t trials, std::uint64_t seed) {
    if (n % ell != 0) throw domain_error("verify_lemma32: n must be a multiple of l");
    Lemma32Report rep{ell, n, k, trials, seed, 2 * n / ell, 0, 0};
    std::mt19937_64 rng(seed);
    RingZM R(ell, k);
    RingZM R1(ell, k + 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
        // sigma: fixed-point-free permutation of l-power order (rejection sampling)
        Perm sigma;
        while (true) {
            std::vector<std::uint32_t> img(n);
            std::iota(img.begin(), img.end(), 0u);
            for (std::size_t i = n; i-- > 1;)
                std::swap(img[i], img[rng() % (i + 1)]);
            Perm cand{img};
            bool ok = true;
            // all cycle lengths must be l-powers > 1
            std::vector<bool> seen(n, false);
            for (std::uint32_t i = 0; i < n && ok; ++i) {
                if (seen[i]) continue;
                std::uint32_t len = 0, j = i;
                do {
                    seen[j] = true;
                    j = cand.images[j];
                    ++len;
                } while (j != i);
                std::uint32_t m = len;
                while (m % ell == 0) m /= static_cast<std::uint32_t>(ell);
                if (m != 1 || len == 1) ok = false;
            }
            if (ok) {
                sigma = std::move(cand);
                break;
            }
        }
        ZVec units(n);
        for (auto& u : units) {
            do {
                u = rng() % R.mod;
            } while (!R.is_unit(u));
        }
        MonomialMatrix h{static_cast<std::uint32_t>(n), ell, k, sigma, units};
        ZMat H = h.to_matrix();
        MonomialMatrix h1{static_cast<std::uint32_t>(n), ell, k + 1, sigma, units};
        ZMat H1 = h1.to_matrix();
        // M: h-closure of a random vector set
        std::uint64_t nvec = 1 + rng() % n;
        ZMat vecs;
        for (std::uint64_t i = 0; i < nvec; ++i) {
            ZVec v(n);
            for (auto& x : v) x = rng() % R.mod;
            vecs.push_back(std::move(v));
        }
        ZMat M = h_closure(R, vecs, H);
        ZMat M1 = h_closure(R1, vecs, H1);
        std::uint64_t d = min_gen_count(R, M, H);
        std::uint64_t d1 = min_gen_count(R1, M1, H1);
        rep.max_observed = std::max({rep.max_observed, d, d1});
        if (d > rep.bound || d1 > rep.bound) ++rep.violations;
    }
    return rep;
}

/// Multiplicities of the three indecomposable lattice types for a cyclic
/// group of order p: (trivial, Phi-quotient, free).
struct HRMultiplicities {
    std::uint64_t a = 0, b = 0, c = 0;
};

/// Recover (a,b,c) for a free Z/p^k module with an order-p action X from
/// the mod-p invariants: dim ker(X-1 mod p) = a+b+c and
/// rank(norm(X) mod p) = c.
inline HRMultiplicities hr_decompose(std::uint64_t p, std::uint32_t k, const ZMat& X) {
    if (k < 2) throw domain_error("hr_decompose: precision k must be >= 2");
    RingZM R(p, k);
    std::size_t n = X.size();
    // action must have order p
    ZMat pw(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
    ZMat norm(n, ZVec(n, 0)); // 1 + X + ... + X^(p-1)
    bool is_identity = true;
    for (std::uint64_t e = 0; e < p; ++e) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                norm[i][j] = (norm[i][j] + pw[i][j]) % R.mod;
        ZMat nxt(n, ZVec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t s = 0;
                for (std::size_t t = 0; t < n; ++t)
                    s = (s + pw[i][t] * (X[t][j] % R.mod)) % R.mod;
                nxt[i][j] = s;
            }
        pw = std::move(nxt);
    }
    // after the loop pw = X^p, which must be the identity
    for (std::size_t i = 0; i < n && is_identity; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (pw[i][j] % R.mod != (i == j ? 1u : 0u)) {
                is_identity = false;
                break;
            }
    if (!is_identity) throw not_decomposable("hr_decompose: action does not have order p");
    ZMat XmI(X);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            XmI[i][j] %= R.mod;
            if (i == j) XmI[i][j] = (XmI[i][j] + R.mod - 1) % R.mod;
        }
    if (p < 3) throw domain_error("hr_decompose: p must be odd");
    std::uint64_t s1 = n - fl_rank(p, XmI);      // a + b + c
    std::uint64_t c = fl_rank(p, norm);          // free multiplicity
    std::int64_t bnum = std::int64_t(n) - std::int64_t(s1) - std::int64_t(c) * (p - 1);
    if (bnum < 0 || bnum % std::int64_t(p - 2) != 0)
        throw not_decomposable("hr_decompose: inconsistent invariants");
    std::uint64_t b = std::uint64_t(bnum) / (p - 2);
    if (s1 < b + c) throw not_decomposable("hr_decompose: inconsistent invariants");
    std::uint64_t a = s1 - b - c;
    if (a + b * (p - 1) + c * p != n)
        throw not_decomposable("hr_decompose: multiplicities do not add up");
    return {a, b, c};
}

/// d_RG(M) for a p-group G of matrices over Z/p^k acting on the full free
/// module: the group ring is local, so d = dim_Fp M/(pM + M*I(G)).
inline std::uint64_t d_module_over_pgroup(const RingZM& R,
                                          const std::vector<ZMat>& gens) {
    std::size_t n = gens.empty() ? 0 : gens[0].size();
    if (n == 0) throw domain_error("d_module_over_pgroup: no generators");
    ZMat rows;
    for (std::size_t i = 0; i < n; ++i) {
        ZVec pe(n, 0);
        pe[i] = R.ell % R.mod;
        rows.push_back(std::move(pe));
    }
    for (const auto& G : gens)
        for (std::size_t i = 0; i < n; ++i) {
            ZVec row(G[i]);
            for (auto& x : row) x %= R.mod;
            row[i] = (row[i] + R.mod - 1) % R.mod;
            rows.push_back(std::move(row));
        }
    std::uint64_t logq = std::uint64_t(n) * R.k - span_log(R, howell_basis(R, std::move(rows)));
    return logq;
}

struct PropKeyReport {
    bool holds = false;
    std::uint64_t d_group = 0;
    std::uint64_t d_module = 0;
    std::uint64_t rank = 0;
};

/// Enumerate the matrix group generated by G (elements as flat row-major
/// vectors mod G.modulus), up to `cap` elements.
inline std::vector<std::vector<std::uint64_t>> matrix_group_elements(
    const MatrixGroupSpec& G, std::size_t cap = kDefaultTableCap) {
    std::uint32_t d = G.d;
    std::uint64_t mod = G.modulus;
    auto mul = [&](const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B) {
        std::vector<std::uint64_t> C(std::size_t(d) * d, 0);
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t t = 0; t < d; ++t) {
                std::uint64_t a = A[std::size_t(i) * d + t];
                if (a == 0) continue;
                for (std::uint32_t j = 0; j < d; ++j)
                    C[std::size_t(i) * d + j] =
                        (C[std::size_t(i) * d + j] + a * B[std::size_t(t) * d + j]) % mod;
            }
        return C;
    };
    std::vector<std::uint64_t> id(std::size_t(d) * d, 0);
    for (std::uint32_t i = 0; i < d; ++i) id[std::size_t(i) * d + i] = 1;
    std::set<std::vector<std::uint64_t>> seen{id};
    std::vector<std::vector<std::uint64_t>> todo{id};
    std::vector<std::vector<std::uint64_t>> gens;
    for (auto g : G.generators) {
        for (auto& x : g) x %= mod;
        gens.push_back(std::move(g));
    }
    while (!todo.empty()) {
        auto cur = std::move(todo.back());
        todo.pop_back();
        for (const auto& g : gens) {
            auto prod = mul(cur, g);
            if (seen.insert(prod).second) {
                if (seen.size() > cap)
                    throw cap_exceeded("matrix_group_elements: cap exceeded", seen.size());
                todo.push_back(std::move(prod));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

/// Check d(G) + d_RG(M) <= rank(M) for a finite p-subgroup of GL_n(Z/p^k)
/// acting on its natural module.  The group is enumerated directly on
/// matrices; its structure is analysed in the regular representation.
inline PropKeyReport verify_prop_key(std::uint64_t p, const MatrixGroupSpec& G) {
    if (G.p != p) throw domain_error("verify_prop_key: prime mismatch");
    G.validate();
    RingZM R(p, G.k);
    auto elements = matrix_group_elements(G);
    {
        std::size_t n = elements.size();
        while (n % p == 0) n /= p;
        if (n != 1) throw not_faithful("verify_prop_key: matrix group is not a p-group");
    }
    // regular representation: point i -> index of elements[i] * g
    std::map<std::vector<std::uint64_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
    std::uint32_t d = G.d;
    std::uint64_t mod = G.modulus;
    auto mul = [&](const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B) {
        std::vector<std::uint64_t> C(std::size_t(d) * d, 0);
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t t = 0; t < d; ++t) {
                std::uint64_t a = A[std::size_t(i) * d + t];
                if (a == 0) continue;
                for (std::uint32_t j = 0; j < d; ++j)
                    C[std::size_t(i) * d + j] =
                        (C[std::size_t(i) * d + j] + a * B[std::size_t(t) * d + j]) % mod;
            }
        return C;
    };
    GroupSpec reg;
    reg.degree = static_cast<std::uint32_t>(elements.size());
    reg.name = G.name;
    for (auto g : G.generators) {
        for (auto& x : g) x %= mod;
        Perm perm(reg.degree);
        for (std::uint32_t i = 0; i < elements.size(); ++i)
            perm.images[i] = index.at(mul(elements[i], g));
        reg.generators.push_back(std::move(perm));
    }
    GroupTable T = GroupTable::closure(reg);
    PropKeyReport rep;
    rep.rank = G.d;
    rep.d_group = (T.order() == 1) ? 0 : d_frattini(T, p);
    std::vector<ZMat> gens;
    for (const auto& flat : G.generators) {
        ZMat M(G.d, ZVec(G.d));
        for (std::uint32_t i = 0; i < G.d; ++i)
            for (std::uint32_t j = 0; j < G.d; ++j) M[i][j] = flat[std::size_t(i) * G.d + j];
        gens.push_back(std::move(M));
    }
    if (gens.empty()) {
        rep.d_module = G.d; // free module over Z/p^k itself
    } else {
        rep.d_module = d_module_over_pgroup(R, gens);
        // cross-route when G is cyclic: commutative max-over-maximal-ideals
        // on a single generating matrix must agree
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            GroupTable C = GroupTable::closure(
                GroupSpec{reg.degree, {reg.generators[gi]}, "cyc"});
            if (C.order() == T.order()) {
                ZMat full;
                for (std::uint32_t i = 0; i < G.d; ++i) {
                    ZVec e(G.d, 0);
                    e[i] = 1;
                    full.push_back(std::move(e));
                }
                std::uint64_t alt = min_gen_count(R, full, gens[gi]);
                if (alt != rep.d_module)
                    throw domain_error("verify_prop_key: cyclic cross-route disagrees");
                break;
            }
        }
    }
    rep.holds = rep.d_group + rep.d_module <= rep.rank;
    return rep;
}

} // namespace ranklab
