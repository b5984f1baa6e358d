#pragma once

/// Builders for the concrete groups under study: cyclic and semidihedral
/// groups, (iterated) wreath products, Sylow subgroups of symmetric groups,
/// explicit Sylow l-subgroups of GL_d(F_p), and the affine/dihedral models.

#include <cstdint>
#include <string>
#include <vector>

#include "ranklab/arith.hpp"
#include "ranklab/group.hpp"
#include "ranklab/perm.hpp"

namespace ranklab {

// --- elementary permutation builders ------------------------------------

/// Regular representation of C_n on n points.
inline GroupSpec cyclic(std::uint64_t n) {
    if (n < 1) throw domain_error("cyclic: n must be >= 1");
    GroupSpec s;
    s.degree = static_cast<std::uint32_t>(n);
    s.name = "C" + std::to_string(n);
    if (n > 1) {
        Perm g(s.degree);
        for (std::uint32_t i = 0; i < n; ++i) g.images[i] = (i + 1) % n;
        s.generators.push_back(std::move(g));
    }
    return s;
}

/// Regular representation of SD_{2^(c+1)} = <x,y | x^2 = y^(2^c) = 1,
/// y^x = y^(-(1+2^(c-1)))>.  Points are the group elements y^i x^j,
/// indexed as 2i + j.
inline GroupSpec semidihedral(std::uint64_t c) {
    if (c < 3) throw domain_error("semidihedral: c must be >= 3");
    std::uint64_t q = std::uint64_t(1) << c;           // order of y
    std::uint64_t t = (2 * q - 1 - (q >> 1)) % q;      // -(1 + 2^(c-1)) mod 2^c
    GroupSpec s;
    s.degree = static_cast<std::uint32_t>(2 * q);
    s.name = "SD" + std::to_string(2 * q);
    Perm gy(s.degree), gx(s.degree);
    for (std::uint64_t i = 0; i < q; ++i)
        for (std::uint64_t j = 0; j < 2; ++j) {
            // right multiplication by y:  y^i x^j . y = y^(i + t^j) x^j
            std::uint64_t iy = (i + (j ? t : 1)) % q;
            gy.images[2 * i + j] = static_cast<std::uint32_t>(2 * iy + j);
            // right multiplication by x:  y^i x^j . x = y^i x^(1-j)
            gx.images[2 * i + j] = static_cast<std::uint32_t>(2 * i + (1 - j));
        }
    s.generators.push_back(std::move(gy));
    s.generators.push_back(std::move(gx));
    return s;
}

/// Permutational wreath product base wr top: top (degree t) permutes t
/// blocks, base acts within each block.  Point (block b, offset j) is
/// b*deg(base) + j.
inline GroupSpec wreath(const GroupSpec& base, const GroupSpec& top) {
    std::uint32_t bd = base.degree;
    std::uint32_t t = top.degree;
    GroupSpec s;
    s.degree = bd * t;
    s.name = "(" + base.name + ") wr (" + top.name + ")";
    for (std::uint32_t b = 0; b < t; ++b)
        for (const auto& g : base.generators) {
            Perm p(s.degree);
            for (std::uint32_t j = 0; j < bd; ++j)
                p.images[b * bd + j] = b * bd + g.images[j];
            s.generators.push_back(std::move(p));
        }
    for (const auto& g : top.generators) {
        Perm p(s.degree);
        for (std::uint32_t b = 0; b < t; ++b)
            for (std::uint32_t j = 0; j < bd; ++j)
                p.images[b * bd + j] = g.images[b] * bd + j;
        s.generators.push_back(std::move(p));
    }
    return s;
}

/// W_r(l): r-fold iterated wreath product of C_l, degree l^r.
inline GroupSpec iterated_wreath(std::uint64_t ell, std::uint64_t r) {
    GroupSpec s = cyclic(1);
    for (std::uint64_t i = 0; i < r; ++i) s = wreath(s, cyclic(ell));
    s.name = "W_" + std::to_string(r) + "(" + std::to_string(ell) + ")";
    return s;
}

/// X_{a,r}(l) = C_{l^a} wr W_r(l).
inline GroupSpec xgroup(std::uint64_t ell, std::uint64_t a, std::uint64_t r) {
    if (a < 1) throw domain_error("xgroup: a must be >= 1");
    bigint la = boost::multiprecision::pow(bigint(ell), static_cast<unsigned>(a));
    if (la > (std::uint64_t(1) << 24)) throw domain_error("xgroup: l^a too large");
    GroupSpec s = wreath(cyclic(la.convert_to<std::uint64_t>()), iterated_wreath(ell, r));
    s.name = "X_{" + std::to_string(a) + "," + std::to_string(r) + "}(" + std::to_string(ell) + ")";
    return s;
}

/// Y_{c,r} = SD_{2^(c+1)} wr W_r(2).
inline GroupSpec ygroup(std::uint64_t c, std::uint64_t r) {
    if (c < 3) throw domain_error("ygroup: c must be >= 3");
    GroupSpec s = wreath(semidihedral(c), iterated_wreath(2, r));
    s.name = "Y_{" + std::to_string(c) + "," + std::to_string(r) + "}";
    return s;
}

/// Sylow l-subgroup of Sym(n) on exactly n points: n_0 fixed points first,
/// then n_i blocks carrying W_i(l) for each l-adic digit n_i, in
/// increasing i.
inline GroupSpec sylow_sym(std::uint64_t n, std::uint64_t ell) {
    auto digits = ladic_expansion(n, ell);
    GroupSpec s;
    s.degree = 0;
    s.name = "SylSym(" + std::to_string(n) + "," + std::to_string(ell) + ")";
    std::uint32_t offset = digits.empty() ? 0 : static_cast<std::uint32_t>(digits[0]);
    s.degree = offset; // fixed points
    std::uint64_t block = ell;
    for (std::size_t i = 1; i < digits.size(); ++i, block *= ell) {
        if (digits[i] == 0) continue;
        GroupSpec w = iterated_wreath(ell, i);
        for (std::uint64_t copy = 0; copy < digits[i]; ++copy) {
            for (const auto& g : w.generators) {
                Perm p(static_cast<std::uint32_t>(n));
                for (std::uint32_t j = 0; j < n; ++j) p.images[j] = j;
                for (std::uint32_t j = 0; j < w.degree; ++j)
                    p.images[s.degree + j] = s.degree + g.images[j];
                p.images.resize(n);
                s.generators.push_back(std::move(p));
            }
            s.degree += w.degree;
        }
    }
    s.degree = static_cast<std::uint32_t>(n);
    for (auto& g : s.generators) g.images.resize(n);
    // pad any short generator images (cannot happen, but keep degree exact)
    return s;
}

/// Finite model of the pro-2 dihedral group: C_2 acting by inversion on
/// Z/2^k, realized on 2^k points.
inline GroupSpec dihedral_model(std::uint64_t k) {
    if (k < 2) throw domain_error("dihedral_model: k must be >= 2");
    std::uint64_t n = std::uint64_t(1) << k;
    GroupSpec s;
    s.degree = static_cast<std::uint32_t>(n);
    s.name = "D" + std::to_string(2 * n);
    Perm shift(s.degree), neg(s.degree);
    for (std::uint64_t i = 0; i < n; ++i) {
        shift.images[i] = static_cast<std::uint32_t>((i + 1) % n);
        neg.images[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    s.generators.push_back(std::move(shift));
    s.generators.push_back(std::move(neg));
    return s;
}

// --- matrix groups -------------------------------------------------------

/// A matrix group over Z/p^k given by generator matrices (row-major).
struct MatrixGroupSpec {
    std::uint32_t d = 1;
    std::uint64_t p = 3;       // odd prime base
    std::uint32_t k = 1;       // modulus = p^k
    std::uint64_t modulus = 3;
    std::vector<std::vector<std::uint64_t>> generators; // d*d entries each
    std::string name;

    void validate() const;
};

namespace ffield {

// arithmetic in F_p and in F_p[x]/(g)

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    return powmod(a % p, p - 2, p);
}

using Poly = std::vector<std::uint64_t>; // coefficients, low degree first

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p) {
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce mod monic g of degree m
    std::size_t m = g.size() - 1;
    for (std::size_t i = prod.size(); i-- > m;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            prod[i - m + j] = (prod[i - m + j] + (p - g[j] % p) * c) % p;
    }
    prod.resize(m);
    return prod;
}

inline Poly poly_powmod(Poly b, bigint e, const Poly& g, std::uint64_t p) {
    std::size_t m = g.size() - 1;
    Poly r(m, 0);
    r[0] = 1;
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(r, b, g, p);
        b = poly_mulmod(b, b, g, p);
        e >>= 1;
    }
    return r;
}

inline bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

inline bool poly_is_x(const Poly& a) {
    if (a.size() < 2 || a[0] != 0 || a[1] != 1) return false;
    for (std::size_t i = 2; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

/// Lexicographically first monic irreducible polynomial of degree m over F_p.
inline Poly find_irreducible(std::uint64_t m, std::uint64_t p) {
    if (m == 1) return Poly{0, 1}; // x itself; unused in practice
    std::vector<std::uint64_t> coeffs(m, 0); // low coefficients, leading 1 implicit
    auto candidate_ok = [&](const Poly& g) {
        // g irreducible iff x^(p^m) = x mod g and x^(p^(m/q)) != x for prime q | m
        Poly x{0, 1};
        x.resize(m, 0);
        bigint pm = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(m));
        if (!poly_is_x(poly_powmod(x, pm, g, p))) return false;
        for (std::uint64_t q = 2; q <= m; ++q) {
            if (m % q != 0 || !is_prime(q)) continue;
            bigint pq = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(m / q));
            if (poly_is_x(poly_powmod(x, pq, g, p))) return false;
        }
        return true;
    };
    while (true) {
        Poly g(coeffs);
        g.push_back(1);
        if (candidate_ok(g)) return g;
        // increment coefficient vector lexicographically (low index = least significant)
        std::size_t i = 0;
        while (i < m && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == m) throw domain_error("find_irreducible: search exhausted (unreachable)");
    }
}

/// Multiplicative order of a field element, given that it divides `bound`.
inline bigint elt_order(const Poly& a, const Poly& g, std::uint64_t p, bigint bound) {
    bigint ord = bound;
    for (bigint q = 2; q <= ord; ++q) {
        while (ord % q == 0 && poly_is_one(poly_powmod(a, ord / q, g, p))) ord /= q;
    }
    return ord;
}

} // namespace ffield

inline void MatrixGroupSpec::validate() const {
    for (const auto& M : generators) {
        if (M.size() != std::size_t(d) * d)
            throw domain_error("matrix generator has wrong size");
        // invertible mod p^k iff invertible mod p: Gaussian elimination over F_p
        std::vector<std::uint64_t> A(M);
        for (auto& v : A) v %= p;
        std::uint32_t rank = 0;
        for (std::uint32_t col = 0; col < d && rank < d; ++col) {
            std::uint32_t piv = rank;
            while (piv < d && A[std::size_t(piv) * d + col] == 0) ++piv;
            if (piv == d) continue;
            std::swap_ranges(A.begin() + std::size_t(piv) * d, A.begin() + std::size_t(piv + 1) * d,
                             A.begin() + std::size_t(rank) * d);
            std::uint64_t ipiv = ffield::inv_mod_prime(A[std::size_t(rank) * d + col], p);
            for (std::uint32_t j = 0; j < d; ++j)
                A[std::size_t(rank) * d + j] = (A[std::size_t(rank) * d + j] * ipiv) % p;
            for (std::uint32_t r2 = 0; r2 < d; ++r2) {
                if (r2 == rank) continue;
                std::uint64_t f = A[std::size_t(r2) * d + col];
                if (f == 0) continue;
                for (std::uint32_t j = 0; j < d; ++j)
                    A[std::size_t(r2) * d + j] =
                        (A[std::size_t(r2) * d + j] + (p - f) * A[std::size_t(rank) * d + j]) % p;
            }
            ++rank;
        }
        if (rank < d) throw domain_error("matrix generator is singular mod p");
    }
}

inline constexpr std::uint64_t kDefaultPermPointCap = 59049; // 3^10

/// Faithful permutation action of a matrix group on the modulus^d row
/// vectors of its natural module; point index is the base-modulus digit
/// vector, least significant coordinate first.
inline GroupSpec matrix_to_perm(const MatrixGroupSpec& M,
                                std::uint64_t point_cap = kDefaultPermPointCap) {
    M.validate();
    bigint pts = boost::multiprecision::pow(bigint(M.modulus), M.d);
    if (pts > point_cap)
        throw cap_exceeded("matrix_to_perm: " + pts.str() + " points exceed cap",
                           point_cap);
    std::uint64_t n = pts.convert_to<std::uint64_t>();
    GroupSpec s;
    s.degree = static_cast<std::uint32_t>(n);
    s.name = M.name;
    std::vector<std::uint64_t> v(M.d);
    for (const auto& A : M.generators) {
        Perm g(s.degree);
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            std::uint64_t rest = idx;
            for (std::uint32_t i = 0; i < M.d; ++i) {
                v[i] = rest % M.modulus;
                rest /= M.modulus;
            }
            std::uint64_t out = 0;
            for (std::uint32_t j = M.d; j-- > 0;) {
                std::uint64_t w = 0;
                for (std::uint32_t i = 0; i < M.d; ++i)
                    w = (w + v[i] * A[std::size_t(i) * M.d + j]) % M.modulus;
                out = out * M.modulus + w;
            }
            g.images[idx] = static_cast<std::uint32_t>(out);
        }
        s.generators.push_back(std::move(g));
    }
    return s;
}

namespace detail {

/// m x m matrix over F_p realizing multiplication by an element of exact
/// order l^a in F_{p^m}, in the power basis of F_p[x]/(g).
inline std::vector<std::uint64_t> order_la_block(std::uint64_t p, std::uint64_t ell,
                                                 std::uint64_t a, std::uint64_t m) {
    using namespace ffield;
    bigint la = boost::multiprecision::pow(bigint(ell), static_cast<unsigned>(a));
    if (m == 1) {
        // scalar of exact order l^a in F_p^*
        std::uint64_t la64 = la.convert_to<std::uint64_t>();
        for (std::uint64_t u = 2; u < p; ++u) {
            std::uint64_t w = powmod(u, (p - 1) / la64, p);
            if (powmod(w, la64 / ell, p) != 1) return {w};
        }
        throw domain_error("order_la_block: no scalar of required order (unreachable)");
    }
    Poly g = find_irreducible(m, p);
    bigint field_units = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(m)) - 1;
    bigint cof = field_units / la;
    // first element (in lex order of coefficient vectors) whose cofactor
    // power has exact order l^a
    std::vector<std::uint64_t> coeffs(m, 0);
    while (true) {
        std::size_t i = 0;
        while (i < m && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == m) throw domain_error("order_la_block: search exhausted (unreachable)");
        Poly z(coeffs);
        Poly w = poly_powmod(z, cof, g, p);
        if (poly_is_one(w)) continue;
        if (!poly_is_one(poly_powmod(w, la / ell, g, p))) {
            // matrix of multiplication by w: row i = coefficients of x^i * w
            std::vector<std::uint64_t> Z(m * m, 0);
            Poly xi(m, 0);
            xi[0] = 1;
            Poly xpoly(m, 0);
            if (m > 1) xpoly[1] = 1;
            for (std::uint64_t i2 = 0; i2 < m; ++i2) {
                Poly row = poly_mulmod(xi, w, g, p);
                for (std::uint64_t j = 0; j < m; ++j) Z[i2 * m + j] = row[j];
                xi = poly_mulmod(xi, xpoly, g, p);
            }
            return Z;
        }
    }
}

/// 2x2 matrices (Y, X) over F_p realizing SD_{2^(c+1)} for p = 3 mod 4:
/// Y is multiplication by an order-2^c element of F_{p^2}^*, X is the
/// Frobenius.  The presentation relations are verified explicitly.
inline std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
sd_block(std::uint64_t p, std::uint64_t c) {
    using namespace ffield;
    // F_{p^2} = F_p[u]/(u^2 - s) for the least non-residue s
    std::uint64_t s = 0;
    for (std::uint64_t cand = 2; cand < p; ++cand)
        if (powmod(cand, (p - 1) / 2, p) == p - 1) {
            s = cand;
            break;
        }
    if (s == 0) throw domain_error("sd_block: no quadratic non-residue (p = 2?)");
    Poly g{(p - s) % p, 0, 1}; // u^2 - s
    bigint units = bigint(p) * p - 1;
    std::uint64_t twoc = std::uint64_t(1) << c;
    bigint cof = units / twoc;
    Poly w;
    std::vector<std::uint64_t> coeffs(2, 0);
    while (true) {
        std::size_t i = 0;
        while (i < 2 && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == 2) throw domain_error("sd_block: search exhausted (unreachable)");
        Poly z(coeffs);
        Poly cand = poly_powmod(z, cof, g, p);
        if (poly_is_one(cand)) continue;
        if (!poly_is_one(poly_powmod(cand, twoc / 2, g, p))) {
            w = cand;
            break;
        }
    }
    // Y = multiplication by w in basis {1, u}:  1*w = (w0, w1), u*w = (w1*s, w0)
    std::vector<std::uint64_t> Y{w[0], w[1], (w[1] * s) % p, w[0]};
    // X = Frobenius: fixes 1, negates u (since u^p = s^((p-1)/2) u = -u)
    std::vector<std::uint64_t> X{1, 0, 0, p - 1};
    // verify the semidihedral relations
    auto mul2 = [&](const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B) {
        std::vector<std::uint64_t> C(4);
        C[0] = (A[0] * B[0] + A[1] * B[2]) % p;
        C[1] = (A[0] * B[1] + A[1] * B[3]) % p;
        C[2] = (A[2] * B[0] + A[3] * B[2]) % p;
        C[3] = (A[2] * B[1] + A[3] * B[3]) % p;
        return C;
    };
    auto matpow = [&](std::vector<std::uint64_t> A, std::uint64_t e) {
        std::vector<std::uint64_t> R{1, 0, 0, 1};
        while (e > 0) {
            if (e & 1) R = mul2(R, A);
            A = mul2(A, A);
            e >>= 1;
        }
        return R;
    };
    std::vector<std::uint64_t> I{1, 0, 0, 1};
    std::uint64_t texp = (2 * twoc - 1 - (twoc >> 1)) % twoc; // -(1+2^(c-1)) mod 2^c
    bool ok = mul2(X, X) == I && matpow(Y, twoc) == I && matpow(Y, twoc / 2) != I &&
              mul2(mul2(X, Y), X) == matpow(Y, texp);
    if (!ok) throw domain_error("sd_block: semidihedral relations failed to hold");
    return {Y, X};
}

inline void place_block(std::vector<std::uint64_t>& M, std::uint32_t d,
                        const std::vector<std::uint64_t>& B, std::uint32_t bsize,
                        std::uint32_t offset) {
    for (std::uint32_t i = 0; i < bsize; ++i)
        for (std::uint32_t j = 0; j < bsize; ++j)
            M[std::size_t(offset + i) * d + offset + j] = B[std::size_t(i) * bsize + j];
}

inline std::vector<std::uint64_t> identity_matrix(std::uint32_t d) {
    std::vector<std::uint64_t> M(std::size_t(d) * d, 0);
    for (std::uint32_t i = 0; i < d; ++i) M[std::size_t(i) * d + i] = 1;
    return M;
}

} // namespace detail

/// An explicit Sylow l-subgroup of GL_d(F_p): block-diagonal torsion blocks
/// together with block permutations realizing a Sylow l-subgroup of the
/// symmetric group on the blocks.
inline MatrixGroupSpec gl_sylow_matrix(std::uint32_t d, std::uint64_t p, std::uint64_t ell) {
    if (!is_prime(p) || !is_prime(ell)) throw domain_error("gl_sylow_matrix: p, l must be prime");
    if (p == 2) throw domain_error("gl_sylow_matrix: p must be odd");
    if (ell == p) throw domain_error("gl_sylow_matrix: l must differ from p");
    MatrixGroupSpec M;
    M.d = d;
    M.p = p;
    M.k = 1;
    M.modulus = p;
    M.name = "GLSyl(" + std::to_string(d) + "," + std::to_string(p) + "," + std::to_string(ell) + ")";

    std::uint64_t bsize;                 // size of one torsion block
    std::vector<std::vector<std::uint64_t>> block_gens;
    bool odd_leftover_minus_one = false; // central -1 on the leftover coordinate

    if (ell != 2 || p % 4 == 1) {
        std::uint64_t m = mult_order(p, ell);
        std::uint64_t a = depth_a(p, ell);
        bsize = m;
        block_gens.push_back(detail::order_la_block(p, ell, a, m));
    } else {
        std::uint64_t c = depth_c(p);
        bsize = 2;
        auto [Y, X] = detail::sd_block(p, c);
        block_gens.push_back(Y);
        block_gens.push_back(X);
        if (d % 2 == 1) odd_leftover_minus_one = true;
    }
    std::uint32_t t = static_cast<std::uint32_t>(d / bsize);
    // one copy of the torsion generators per block
    for (std::uint32_t b = 0; b < t; ++b)
        for (const auto& B : block_gens) {
            auto G = detail::identity_matrix(d);
            detail::place_block(G, d, B, static_cast<std::uint32_t>(bsize),
                                static_cast<std::uint32_t>(b * bsize));
            M.generators.push_back(std::move(G));
        }
    // block permutations from the Sylow l-subgroup of Sym(t)
    GroupSpec sym = sylow_sym(t, ell);
    for (const auto& sigma : sym.generators) {
        std::vector<std::uint64_t> G(std::size_t(d) * d, 0);
        for (std::uint32_t b = 0; b < t; ++b)
            for (std::uint32_t j = 0; j < bsize; ++j)
                G[std::size_t(b * bsize + j) * d + sigma.images[b] * bsize + j] = 1;
        for (std::uint32_t i = static_cast<std::uint32_t>(t * bsize); i < d; ++i)
            G[std::size_t(i) * d + i] = 1;
        M.generators.push_back(std::move(G));
    }
    if (odd_leftover_minus_one) {
        auto G = detail::identity_matrix(d);
        G[std::size_t(d - 1) * d + (d - 1)] = p - 1;
        M.generators.push_back(std::move(G));
    }
    M.validate();
    return M;
}

/// The order-16 matrix group of three generators over F_p (p = 1 mod 4)
/// with sqrt(-1) taken as the least such residue.
inline MatrixGroupSpec remark_s_group(std::uint64_t p) {
    if (!is_prime(p) || p % 4 != 1) throw domain_error("remark_s_group: p must be prime, 1 mod 4");
    std::uint64_t root = 0;
    for (std::uint64_t i = 2; i < p; ++i)
        if ((i * i) % p == p - 1) {
            root = i;
            break;
        }
    MatrixGroupSpec M;
    M.d = 2;
    M.p = p;
    M.k = 1;
    M.modulus = p;
    M.name = "S(" + std::to_string(p) + ")";
    M.generators.push_back({0, 1, 1, 0});
    M.generators.push_back({root, 0, 0, root});
    M.generators.push_back({p - 1, 0, 0, 1});
    M.validate();
    return M;
}

/// Finite model C_m x| (Z/p^k)^d with C_m acting by an order-m scalar,
/// realized on the p^(kd) module vectors.
inline GroupSpec remark_affine(std::uint64_t p, std::uint64_t m, std::uint64_t d,
                               std::uint64_t k) {
    if (!is_prime(p)) throw domain_error("remark_affine: p must be prime");
    if (m == 1 || (p - 1) % m != 0)
        throw domain_error("remark_affine: m must be a divisor of p-1 with m != 1");
    if (k < 1) throw domain_error("remark_affine: k must be >= 1");
    bigint modb = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(k));
    bigint ptsb = boost::multiprecision::pow(modb, static_cast<unsigned>(d));
    if (ptsb > kDefaultPermPointCap) throw cap_exceeded("remark_affine: too many points", 0);
    std::uint64_t mod = modb.convert_to<std::uint64_t>();
    std::uint64_t npts = ptsb.convert_to<std::uint64_t>();
    // least unit of multiplicative order exactly m mod p^k
    std::uint64_t u = 0;
    for (std::uint64_t cand = 2; cand < mod; ++cand) {
        if (cand % p == 0) continue;
        std::uint64_t w = 1;
        std::uint64_t ord = 0;
        for (std::uint64_t e = 1; e <= m; ++e) {
            w = (w * cand) % mod;
            if (w == 1) {
                ord = e;
                break;
            }
        }
        if (ord == m) {
            u = cand;
            break;
        }
    }
    if (u == 0) throw domain_error("remark_affine: no unit of order m (unreachable)");
    GroupSpec s;
    s.degree = static_cast<std::uint32_t>(npts);
    s.name = "C" + std::to_string(m) + " x| (Z/" + std::to_string(mod) + ")^" + std::to_string(d);
    auto decode = [&](std::uint64_t idx, std::vector<std::uint64_t>& v) {
        for (std::uint64_t i = 0; i < d; ++i) {
            v[i] = idx % mod;
            idx /= mod;
        }
    };
    auto encode = [&](const std::vector<std::uint64_t>& v) {
        std::uint64_t idx = 0;
        for (std::uint64_t i = d; i-- > 0;) idx = idx * mod + v[i];
        return idx;
    };
    std::vector<std::uint64_t> v(d);
    for (std::uint64_t i = 0; i < d; ++i) {
        Perm t(s.degree);
        for (std::uint64_t idx = 0; idx < npts; ++idx) {
            decode(idx, v);
            v[i] = (v[i] + 1) % mod;
            t.images[idx] = static_cast<std::uint32_t>(encode(v));
        }
        s.generators.push_back(std::move(t));
    }
    Perm sc(s.degree);
    for (std::uint64_t idx = 0; idx < npts; ++idx) {
        decode(idx, v);
        for (auto& x : v) x = (x * u) % mod;
        sc.images[idx] = static_cast<std::uint32_t>(encode(v));
    }
    s.generators.push_back(std::move(sc));
    return s;
}

} // namespace ranklab
