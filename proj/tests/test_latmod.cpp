#include <doctest.h>

#include <random>
#include <set>

#include "ranklab/instances.hpp"
#include "ranklab/latmod.hpp"

using namespace ranklab;

namespace {

// all elements of the module spanned by `basis` (closure under addition)
std::set<ZVec> module_elements(const RingZM& R, const ZMat& basis) {
    std::size_t n = basis.empty() ? 0 : basis[0].size();
    std::set<ZVec> elems;
    elems.insert(ZVec(n, 0));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ZVec> cur(elems.begin(), elems.end());
        for (const auto& v : cur)
            for (const auto& b : basis) {
                ZVec w(n);
                for (std::size_t i = 0; i < n; ++i) w[i] = (v[i] + b[i]) % R.mod;
                if (elems.insert(w).second) grew = true;
            }
    }
    return elems;
}

// independent oracle: smallest s such that some s-subset of M generates M
// over (Z/l^k)[h]
std::uint64_t min_gen_oracle(const RingZM& R, const ZMat& basis, const ZMat& H) {
    auto elems = module_elements(R, basis);
    std::vector<ZVec> list(elems.begin(), elems.end());
    ZMat canon = howell_basis(R, basis);
    if (span_log(R, canon) == 0) return 0;
    // s = 1
    for (const auto& v : list)
        if (h_closure(R, {v}, H) == canon) return 1;
    // s = 2
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (h_closure(R, {list[i], list[j]}, H) == canon) return 2;
    // s = 3
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            for (std::size_t l2 = j + 1; l2 < list.size(); ++l2)
                if (h_closure(R, {list[i], list[j], list[l2]}, H) == canon) return 3;
    throw std::runtime_error("min_gen_oracle: more than 3 generators needed");
}

ZMat monomial(const RingZM& R, const std::vector<std::uint32_t>& sigma, const ZVec& units) {
    MonomialMatrix m{static_cast<std::uint32_t>(sigma.size()), R.ell, R.k, Perm{sigma}, units};
    return m.to_matrix();
}

} // namespace

TEST_CASE("h_closure is h-invariant and contains the seed") {
    RingZM R(2, 3);
    ZMat H = monomial(R, {1, 0}, {1, 3});
    ZMat M = h_closure(R, {{1, 0}}, H);
    CHECK(in_span(R, {1, 0}, M));
    for (const auto& b : M) CHECK(in_span(R, zvec_apply(R, b, H), M));
}

TEST_CASE("min_gen_count matches the exhaustive oracle on random instances") {
    std::mt19937_64 rng(17);
    struct Grid {
        std::uint64_t ell;
        std::uint32_t k;
        std::uint32_t n;
        int trials;
    };
    for (auto [ell, k, n, trials] :
         {Grid{2, 2, 2, 30}, Grid{2, 3, 2, 20}, Grid{3, 2, 2, 20}, Grid{2, 2, 4, 10}}) {
        RingZM R(ell, k);
        for (int t = 0; t < trials; ++t) {
            std::vector<std::uint32_t> sigma(n);
            std::iota(sigma.begin(), sigma.end(), 0u);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            ZVec units(n);
            for (auto& u : units)
                do {
                    u = rng() % R.mod;
                } while (!R.is_unit(u));
            ZMat H = monomial(R, sigma, units);
            ZMat seeds;
            std::uint64_t nv = 1 + rng() % 2;
            for (std::uint64_t i = 0; i < nv; ++i) {
                ZVec v(n);
                for (auto& x : v) x = rng() % R.mod;
                seeds.push_back(std::move(v));
            }
            ZMat M = h_closure(R, seeds, H);
            if (span_log(R, M) > 5) continue; // keep the oracle cheap
            INFO("ell=", ell, " k=", k, " n=", n, " trial=", t);
            CHECK(min_gen_count(R, M, H) == min_gen_oracle(R, M, H));
        }
    }
}

TEST_CASE("min_gen_count rejects non-invariant modules") {
    RingZM R(2, 2);
    ZMat H = monomial(R, {1, 0}, {1, 1});
    // span{e0} is not invariant under the swap
    ZMat basis = howell_basis(R, {{1, 0}});
    CHECK_THROWS_AS(min_gen_count(R, basis, H), not_invariant);
}

TEST_CASE("min_gen_count on full modules") {
    // swap with unit twist on (Z/4)^2: cyclic module
    RingZM R(2, 2);
    ZMat full = howell_basis(R, {{1, 0}, {0, 1}});
    CHECK(min_gen_count(R, full, monomial(R, {1, 0}, {1, 3})) == 1);
    // identity action: (Z/4)^2 over (Z/4)[h]/(h-1) needs 2 generators
    CHECK(min_gen_count(R, full, monomial(R, {0, 1}, {1, 1})) == 2);
}

TEST_CASE("verify_lemma32 grid points report zero violations") {
    for (auto [ell, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {3, 3}}) {
        for (std::uint32_t k : {2u, 3u}) {
            Lemma32Report rep = verify_lemma32(ell, n, k, 40, 12345);
            CHECK(rep.violations == 0);
            CHECK(rep.bound == 2 * n / ell);
            CHECK(rep.max_observed <= rep.bound);
            CHECK(rep.max_observed >= 1);
        }
    }
}

TEST_CASE("verify_lemma32 is deterministic in the seed") {
    Lemma32Report a = verify_lemma32(2, 4, 2, 15, 99);
    Lemma32Report b = verify_lemma32(2, 4, 2, 15, 99);
    CHECK(a.violations == b.violations);
    CHECK(a.max_observed == b.max_observed);
    CHECK_THROWS_AS(verify_lemma32(2, 3, 2, 5, 1), domain_error); // n not a multiple of l
}

TEST_CASE("hr_decompose recovers block multiplicities") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {3, 5}) {
        for (std::uint32_t k : {2u, 3u}) {
            std::uint64_t mod = 1;
            for (std::uint32_t i = 0; i < k; ++i) mod *= p;
            struct Want {
                std::uint64_t a, b, c;
            };
            std::vector<Want> wants = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 1, 1}, {0, 2, 1},
                                       {1, 1, 0}, {3, 0, 2}};
            for (auto [wa, wb, wc] : wants) {
                std::uint32_t n =
                    static_cast<std::uint32_t>(wa + wb * (p - 1) + wc * p);
                if (n > 12) continue;
                FlatMat X = flat_identity(n);
                std::uint32_t off = static_cast<std::uint32_t>(wa);
                for (std::uint64_t b = 0; b < wb; ++b) {
                    std::uint32_t s = static_cast<std::uint32_t>(p - 1);
                    for (std::uint32_t i = 0; i < s; ++i) X[std::size_t(off + i) * n + off + i] = 0;
                    for (std::uint32_t i = 0; i + 1 < s; ++i)
                        X[std::size_t(off + i) * n + off + i + 1] = 1;
                    for (std::uint32_t j = 0; j < s; ++j)
                        X[std::size_t(off + s - 1) * n + off + j] = mod - 1;
                    off += s;
                }
                for (std::uint64_t c2 = 0; c2 < wc; ++c2) {
                    std::uint32_t s = static_cast<std::uint32_t>(p);
                    for (std::uint32_t i = 0; i < s; ++i) {
                        X[std::size_t(off + i) * n + off + i] = 0;
                        X[std::size_t(off + i) * n + off + (i + 1) % s] = 1;
                    }
                    off += s;
                }
                // random basis change must not affect the answer
                auto [A, Ainv] = random_unimodular(rng, n, mod);
                FlatMat Xc = flat_mul(flat_mul(Ainv, X, n, mod), A, n, mod);
                for (const FlatMat& mat : {X, Xc}) {
                    ZMat Z(n, ZVec(n));
                    for (std::uint32_t i = 0; i < n; ++i)
                        for (std::uint32_t j = 0; j < n; ++j) Z[i][j] = mat[std::size_t(i) * n + j];
                    HRMultiplicities got = hr_decompose(p, k, Z);
                    INFO("p=", p, " k=", k, " want=(", wa, ",", wb, ",", wc, ")");
                    CHECK(got.a == wa);
                    CHECK(got.b == wb);
                    CHECK(got.c == wc);
                }
            }
        }
    }
}

TEST_CASE("hr_decompose rejects non-order-p actions") {
    RingZM R(3, 2);
    ZMat X = {{2, 0}, {0, 1}}; // order 2, not order 3
    CHECK_THROWS_AS(hr_decompose(3, 2, X), not_decomposable);
    CHECK_THROWS_AS(hr_decompose(3, 1, X), domain_error); // k must be >= 2
}

TEST_CASE("d_module_over_pgroup examples") {
    RingZM R(3, 2);
    // trivial action: d = rank of the free module
    ZMat id = {{1, 0}, {0, 1}};
    CHECK(d_module_over_pgroup(R, {id}) == 2);
    // free cyclic action: 3-cycle permutation matrix on (Z/9)^3 gives d = 1
    ZMat cyc = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    RingZM R3(3, 2);
    CHECK(d_module_over_pgroup(R3, {cyc}) == 1);
}

TEST_CASE("verify_prop_key on explicit instances") {
    // cyclic shift on (Z/9)^3: d(G) = 1, d_RG(M) = 1, rank 3
    MatrixGroupSpec M;
    M.d = 3;
    M.p = 3;
    M.k = 2;
    M.modulus = 9;
    M.generators = {{0, 1, 0, 0, 0, 1, 1, 0, 0}};
    M.name = "shift3";
    PropKeyReport rep = verify_prop_key(3, M);
    CHECK(rep.holds);
    CHECK(rep.d_group == 1);
    CHECK(rep.d_module == 1);
    CHECK(rep.rank == 3);

    // non-p-group is rejected
    MatrixGroupSpec bad;
    bad.d = 1;
    bad.p = 3;
    bad.k = 2;
    bad.modulus = 9;
    bad.generators = {{8}}; // order 2
    CHECK_THROWS_AS(verify_prop_key(3, bad), not_faithful);
}

TEST_CASE("verify_prop_key holds on generated instances") {
    for (std::uint64_t p : {3, 5}) {
        auto instances = random_pgroup_instances(p, 2, 10, 42 + p);
        for (const auto& inst : instances) {
            PropKeyReport rep = verify_prop_key(p, inst);
            INFO(inst.name);
            CHECK(rep.holds);
        }
    }
}
