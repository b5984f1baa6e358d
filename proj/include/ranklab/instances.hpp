#pragma once

/// Deterministic random generation of faithful p-group instances for the
/// module property suites.  Every instance is the mod-p^k reduction of a
/// genuine integral representation of a finite abelian p-group: a
/// block-diagonal sum of p-cycle permutation blocks (free type, size p),
/// cyclotomic companion blocks (size p-1) and trivial blocks (size 1),
/// conjugated by a random unimodular matrix.

#include <cstdint>
#include <random>
#include <vector>

#include "ranklab/constructions.hpp"

namespace ranklab {

using FlatMat = std::vector<std::uint64_t>;

inline FlatMat flat_mul(const FlatMat& A, const FlatMat& B, std::uint32_t d,
                        std::uint64_t mod) {
    FlatMat C(std::size_t(d) * d, 0);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t t = 0; t < d; ++t) {
            std::uint64_t a = A[std::size_t(i) * d + t];
            if (a == 0) continue;
            for (std::uint32_t j = 0; j < d; ++j)
                C[std::size_t(i) * d + j] =
                    (C[std::size_t(i) * d + j] + a * B[std::size_t(t) * d + j]) % mod;
        }
    return C;
}

inline FlatMat flat_identity(std::uint32_t d) {
    FlatMat M(std::size_t(d) * d, 0);
    for (std::uint32_t i = 0; i < d; ++i) M[std::size_t(i) * d + i] = 1;
    return M;
}

/// Inverse of a unitriangular matrix via the nilpotent Neumann series.
inline FlatMat unitriangular_inverse(const FlatMat& T, std::uint32_t d, std::uint64_t mod) {
    FlatMat N(T);
    for (std::uint32_t i = 0; i < d; ++i)
        N[std::size_t(i) * d + i] = (N[std::size_t(i) * d + i] + mod - 1) % mod;
    FlatMat inv = flat_identity(d);
    FlatMat pw = flat_identity(d);
    std::uint64_t sign = 1;
    for (std::uint32_t e = 1; e < d; ++e) {
        pw = flat_mul(pw, N, d, mod);
        sign = mod - sign % mod; // alternate +/-
        for (std::size_t i = 0; i < inv.size(); ++i)
            inv[i] = (inv[i] + sign * pw[i]) % mod;
    }
    return inv;
}

/// A random unimodular matrix (lower unitriangular times upper
/// unitriangular) and its inverse.
inline std::pair<FlatMat, FlatMat> random_unimodular(std::mt19937_64& rng, std::uint32_t d,
                                                     std::uint64_t mod) {
    FlatMat L = flat_identity(d), U = flat_identity(d);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < i; ++j) {
            L[std::size_t(i) * d + j] = rng() % mod;
            U[std::size_t(j) * d + i] = rng() % mod;
        }
    FlatMat A = flat_mul(L, U, d, mod);
    FlatMat Ainv =
        flat_mul(unitriangular_inverse(U, d, mod), unitriangular_inverse(L, d, mod), d, mod);
    return {A, Ainv};
}

/// Instances over Z/p^k of total dimension <= max_dim: block sums of the
/// three integral C_p lattice types, one independent order-p generator per
/// nontrivial block, conjugated by a shared random unimodular matrix.
inline std::vector<MatrixGroupSpec> random_pgroup_instances(std::uint64_t p, std::uint32_t k,
                                                            std::size_t count,
                                                            std::uint64_t seed,
                                                            std::uint32_t max_dim = 6) {
    std::mt19937_64 rng(seed);
    std::uint64_t mod = 1;
    for (std::uint32_t i = 0; i < k; ++i) mod *= p;
    std::vector<MatrixGroupSpec> out;
    while (out.size() < count) {
        // choose a block profile with at least one nontrivial block
        std::vector<std::uint32_t> blocks;
        std::uint32_t used = 0;
        while (true) {
            std::vector<std::uint32_t> fits;
            if (used + p <= max_dim) fits.push_back(static_cast<std::uint32_t>(p)); // free
            if (used + (p - 1) <= max_dim)
                fits.push_back(static_cast<std::uint32_t>(p - 1)); // cyclotomic
            if (!blocks.empty() && used + 1 <= max_dim) fits.push_back(1); // trivial
            if (fits.empty() || (!blocks.empty() && rng() % 3 == 0)) break;
            blocks.push_back(fits[rng() % fits.size()]);
            used += blocks.back();
        }
        if (blocks.empty()) continue;
        std::uint32_t d = used;
        auto [A, Ainv] = random_unimodular(rng, d, mod);
        MatrixGroupSpec M;
        M.d = d;
        M.p = p;
        M.k = k;
        M.modulus = mod;
        M.name = "abelian-" + std::to_string(p) + "-" + std::to_string(d) + "-" +
                 std::to_string(out.size());
        std::uint32_t off = 0;
        for (std::uint32_t b : blocks) {
            if (b > 1) {
                FlatMat G = flat_identity(d);
                if (b == p) {
                    // permutation p-cycle on the block
                    for (std::uint32_t i = 0; i < b; ++i) {
                        G[std::size_t(off + i) * d + off + i] = 0;
                        G[std::size_t(off + i) * d + off + (i + 1) % b] = 1;
                    }
                } else {
                    // companion matrix of 1 + x + ... + x^(p-1)
                    for (std::uint32_t i = 0; i < b; ++i)
                        G[std::size_t(off + i) * d + off + i] = 0;
                    for (std::uint32_t i = 0; i + 1 < b; ++i)
                        G[std::size_t(off + i) * d + off + i + 1] = 1;
                    for (std::uint32_t j = 0; j < b; ++j)
                        G[std::size_t(off + b - 1) * d + off + j] = mod - 1;
                }
                // a random nonzero power of the block generator
                std::uint64_t e = 1 + rng() % (p - 1);
                FlatMat Ge = flat_identity(d);
                for (std::uint64_t i = 0; i < e; ++i) Ge = flat_mul(Ge, G, d, mod);
                M.generators.push_back(flat_mul(flat_mul(Ainv, Ge, d, mod), A, d, mod));
            }
            off += b;
        }
        // occasionally merge to a single cyclic generator (product of blocks)
        if (M.generators.size() > 1 && rng() % 2 == 0) {
            FlatMat prod = flat_identity(d);
            for (const auto& G : M.generators) prod = flat_mul(prod, G, d, mod);
            M.generators = {prod};
        }
        out.push_back(std::move(M));
    }
    return out;
}

} // namespace ranklab
