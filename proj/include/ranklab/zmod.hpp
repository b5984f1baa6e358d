#pragma once

/// Exact linear algebra over Z/l^k: canonical Howell bases for row spans,
/// span membership, kernels within a module, and F_l rank computations.

#include <cstdint>
#include <vector>

#include "ranklab/errors.hpp"

namespace ranklab {

/// The coefficient ring Z/l^k.
struct RingZM {
    std::uint64_t ell;
    std::uint32_t k;
    std::uint64_t mod; // l^k

    RingZM(std::uint64_t ell_, std::uint32_t k_) : ell(ell_), k(k_) {
        mod = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            mod *= ell;
            if (mod > (std::uint64_t(1) << 40)) throw domain_error("RingZM: modulus too large");
        }
    }

    std::uint32_t valuation(std::uint64_t x) const {
        if (x % mod == 0) return k;
        std::uint32_t v = 0;
        x %= mod;
        while (x % ell == 0) {
            x /= ell;
            ++v;
        }
        return v;
    }

    bool is_unit(std::uint64_t x) const { return x % ell != 0; }

    std::uint64_t inv_unit(std::uint64_t x) const {
        if (!is_unit(x)) throw domain_error("inv_unit: not a unit");
        // phi(l^k) = l^(k-1)(l-1); x^(phi-1) is the inverse
        std::uint64_t phi = (mod / ell) * (ell - 1);
        std::uint64_t e = phi - 1;
        std::uint64_t r = 1, b = x % mod;
        while (e > 0) {
            if (e & 1) r = (r * b) % mod;
            b = (b * b) % mod;
            e >>= 1;
        }
        return r;
    }

    std::uint64_t pow_ell(std::uint32_t e) const {
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < e; ++i) r *= ell;
        return r;
    }
};

using ZVec = std::vector<std::uint64_t>;
using ZMat = std::vector<ZVec>; // list of row vectors

inline ZVec zvec_scale(const RingZM& R, const ZVec& v, std::uint64_t c) {
    ZVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] * c) % R.mod;
    return out;
}

inline void zvec_submul(const RingZM& R, ZVec& v, const ZVec& w, std::uint64_t c) {
    std::uint64_t nc = (R.mod - c % R.mod) % R.mod;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + w[i] * nc) % R.mod;
}

/// v * A for a row vector v and row-major square/rectangular matrix rows A.
inline ZVec zvec_apply(const RingZM& R, const ZVec& v, const ZMat& A) {
    ZVec out(A.empty() ? 0 : A[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = (out[j] + v[i] * A[i][j]) % R.mod;
    }
    return out;
}

/// Canonical Howell basis of the row span.  Idempotent; rows are in
/// echelon order with pivot entries l^v and entries above each pivot
/// reduced mod l^v.
inline ZMat howell_basis(const RingZM& R, ZMat rows) {
    for (auto& r : rows)
        for (auto& x : r) x %= R.mod;
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    ZMat result;
    for (std::size_t col = 0; col < n; ++col) {
        // pick the remaining row with minimal valuation at this column
        std::size_t best = rows.size();
        std::uint32_t bestv = R.k;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::uint32_t v = R.valuation(rows[i][col]);
            if (v < bestv) {
                bestv = v;
                best = i;
            }
        }
        if (best == rows.size()) continue; // column is zero in all rows
        ZVec piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        std::uint64_t pl = R.pow_ell(bestv);
        piv = zvec_scale(R, piv, R.inv_unit(piv[col] / pl));
        for (auto& r : rows) {
            if (r[col] == 0) continue;
            zvec_submul(R, r, piv, r[col] / pl);
        }
        if (bestv > 0) rows.push_back(zvec_scale(R, piv, R.pow_ell(R.k - bestv)));
        result.push_back(std::move(piv));
    }
    // back-reduction: entries above each pivot reduced mod l^v
    std::vector<std::size_t> pivcol(result.size());
    std::vector<std::uint32_t> pivval(result.size());
    for (std::size_t i = 0; i < result.size(); ++i) {
        std::size_t c = 0;
        while (result[i][c] == 0) ++c;
        pivcol[i] = c;
        pivval[i] = R.valuation(result[i][c]);
    }
    for (std::size_t i = 0; i < result.size(); ++i)
        for (std::size_t j = i + 1; j < result.size(); ++j) {
            std::uint64_t e = result[i][pivcol[j]];
            std::uint64_t pl = R.pow_ell(pivval[j]);
            if (e / pl > 0) zvec_submul(R, result[i], result[j], e / pl);
        }
    return result;
}

/// Reduce v against a Howell basis; returns the residue (zero iff member).
inline ZVec reduce_against(const RingZM& R, ZVec v, const ZMat& basis) {
    for (auto& x : v) x %= R.mod;
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        std::uint64_t pl = R.pow_ell(R.valuation(row[c]));
        if (v[c] % pl != 0) continue; // cannot clear; leave for the verdict
        zvec_submul(R, v, row, v[c] / pl);
    }
    return v;
}

inline bool in_span(const RingZM& R, const ZVec& v, const ZMat& basis) {
    ZVec r = reduce_against(R, v, basis);
    for (auto x : r)
        if (x % R.mod != 0) return false;
    return true;
}

/// log_l of the span size: sum of (k - pivot valuation) over basis rows.
inline std::uint64_t span_log(const RingZM& R, const ZMat& basis) {
    std::uint64_t s = 0;
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        s += R.k - R.valuation(row[c]);
    }
    return s;
}

/// Kernel of the linear map v -> v*A restricted to the module spanned by
/// `basis`: Howell basis of { v in span(basis) : v*A = 0 }.
inline ZMat kernel_in_module(const RingZM& R, const ZMat& basis, const ZMat& A) {
    if (basis.empty()) return {};
    std::size_t n = basis[0].size();
    std::size_t ncols = A.empty() ? 0 : A[0].size();
    // rows (b*A | b); Howell rows with zero left part give the kernel
    ZMat aug;
    for (const auto& b : basis) {
        ZVec row = zvec_apply(R, b, A);
        row.insert(row.end(), b.begin(), b.end());
        aug.push_back(std::move(row));
    }
    ZMat h = howell_basis(R, std::move(aug));
    ZMat out;
    for (const auto& row : h) {
        bool leftzero = true;
        for (std::size_t j = 0; j < ncols; ++j)
            if (row[j] != 0) {
                leftzero = false;
                break;
            }
        if (!leftzero) continue;
        out.emplace_back(row.begin() + ncols, row.end());
    }
    (void)n;
    return howell_basis(R, std::move(out));
}

/// Rank over F_l of a matrix with entries taken mod l.
inline std::uint64_t fl_rank(std::uint64_t ell, ZMat rows) {
    if (rows.empty()) return 0;
    std::size_t n = rows[0].size();
    for (auto& r : rows)
        for (auto& x : r) x %= ell;
    std::uint64_t rank = 0;
    std::size_t rpos = 0;
    auto inv = [&](std::uint64_t a) {
        std::uint64_t r = 1, b = a % ell, e = ell - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % ell;
            b = (b * b) % ell;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t col = 0; col < n && rpos < rows.size(); ++col) {
        std::size_t piv = rpos;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rpos]);
        std::uint64_t ip = inv(rows[rpos][col]);
        for (auto& x : rows[rpos]) x = (x * ip) % ell;
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rpos || rows[r2][col] == 0) continue;
            std::uint64_t f = rows[r2][col];
            for (std::size_t j = 0; j < n; ++j)
                rows[r2][j] = (rows[r2][j] + (ell - f) * rows[rpos][j]) % ell;
        }
        ++rpos;
        ++rank;
    }
    return rank;
}

} // namespace ranklab
