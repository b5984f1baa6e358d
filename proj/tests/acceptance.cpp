// End-to-end acceptance gate: runs every headline check of the library and
// prints one pass/fail line per criterion.  Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ranklab/arith.hpp"
#include "ranklab/constructions.hpp"
#include "ranklab/crosscheck.hpp"
#include "ranklab/formulas.hpp"
#include "ranklab/groupfile.hpp"
#include "ranklab/instances.hpp"
#include "ranklab/latmod.hpp"
#include "ranklab/subgroups.hpp"

using namespace ranklab;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& log, const std::string& msg) {
    if (!cond) log += (log.empty() ? "" : "; ") + msg;
    return cond;
}

// ---------------------------------------------------------------- corpus ---

struct CorpusEntry {
    std::string desc;
    GroupTable G;
    std::uint64_t ell = 0; // prime when G is an l-group, 0 otherwise
};

std::uint64_t prime_base(std::size_t n) {
    if (n < 2) return 0;
    for (std::uint64_t ell = 2; ell <= n; ++ell) {
        if (n % ell != 0) continue;
        std::size_t m = n;
        while (m % ell == 0) m /= ell;
        return m == 1 ? ell : 0;
    }
    return 0;
}

GroupSpec sym4() {
    GroupSpec s;
    s.degree = 4;
    s.generators.push_back(Perm{std::vector<std::uint32_t>{1, 0, 2, 3}});
    s.generators.push_back(Perm{std::vector<std::uint32_t>{1, 2, 3, 0}});
    s.name = "Sym(4)";
    return s;
}

MatrixGroupSpec gl2f3_matrices() {
    MatrixGroupSpec M;
    M.d = 2;
    M.p = 3;
    M.k = 1;
    M.modulus = 3;
    M.name = "GL2(F3)";
    M.generators = {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 0, 0, 1}};
    M.validate();
    return M;
}

/// Sym(4), GL2(F3), every X/Y/W group of order <= 512, and the three
/// affine/dihedral models.  Built once and shared by the corpus criteria.
std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> c;
    if (!c.empty()) return c;
    const bigint kMaxOrder = 512;
    auto add = [&](std::string desc, GroupSpec spec) {
        GroupTable G = GroupTable::closure(std::move(spec));
        std::uint64_t ell = prime_base(G.order());
        c.push_back({std::move(desc), std::move(G), ell});
    };
    add("Sym(4)", sym4());
    add("GL2(F3)", matrix_to_perm(gl2f3_matrices()));
    // W_r(l) for every prime l; W_1(l) = C_l covers the cyclic prime case
    for (std::uint64_t ell = 2; ell <= 512; ++ell) {
        if (!is_prime(ell)) continue;
        for (std::uint64_t r = 1; wreath_order(ell, r) <= kMaxOrder; ++r)
            add("W_" + std::to_string(r) + "(" + std::to_string(ell) + ")",
                iterated_wreath(ell, r));
    }
    // X_{a,r}(l) for a >= 2 (X_{1,r} coincides with W_{r+1})
    for (std::uint64_t ell = 2; ell <= 512; ++ell) {
        if (!is_prime(ell)) continue;
        for (std::uint64_t a = 2;; ++a) {
            bigint la = boost::multiprecision::pow(bigint(ell), static_cast<unsigned>(a));
            if (la > kMaxOrder) break;
            for (std::uint64_t r = 0;; ++r) {
                bigint lr = boost::multiprecision::pow(bigint(ell), static_cast<unsigned>(r));
                bigint order = boost::multiprecision::pow(la, lr.convert_to<unsigned>()) *
                               wreath_order(ell, r);
                if (order > kMaxOrder) break;
                add("X_{" + std::to_string(a) + "," + std::to_string(r) + "}(" +
                        std::to_string(ell) + ")",
                    xgroup(ell, a, r));
            }
        }
    }
    // Y_{c,r} of order 2^((c+1) 2^r + 2^r - 1)
    for (std::uint64_t cc = 3; cc <= 8; ++cc)
        for (std::uint64_t r = 0;; ++r) {
            std::uint64_t e = (cc + 1) * (std::uint64_t(1) << r) + (std::uint64_t(1) << r) - 1;
            if (e > 9) break;
            add("Y_{" + std::to_string(cc) + "," + std::to_string(r) + "}", ygroup(cc, r));
        }
    add("S(5) model", matrix_to_perm(remark_s_group(5)));
    add("C2 x| (Z/9)^2", remark_affine(3, 2, 2, 2));
    add("D8 x D8", direct_product(dihedral_model(2), dihedral_model(2)));
    return c;
}

// ------------------------------------------------------------- criteria ---

bool crit_invariants_grid(std::string& log) {
    bool ok = true;
    for (std::uint64_t p = 3; p < 50; p += 2) {
        if (!is_prime(p)) continue;
        for (std::uint64_t ell = 2; ell < 20; ++ell) {
            if (!is_prime(ell)) continue;
            std::string at = " at p=" + std::to_string(p) + " l=" + std::to_string(ell);
            // independent naive loops
            std::uint64_t m_naive;
            if (p == ell) {
                m_naive = p - 1;
            } else {
                std::uint64_t pw = p % ell;
                m_naive = 1;
                while (pw != 1) {
                    pw = (pw * p) % ell;
                    ++m_naive;
                }
            }
            std::uint64_t a_naive = 1;
            if (p != ell) {
                bigint v = boost::multiprecision::pow(bigint(p),
                                                      static_cast<unsigned>(m_naive)) - 1;
                a_naive = 0;
                while (v % ell == 0) {
                    v /= ell;
                    ++a_naive;
                }
            }
            InvariantTriple t = invariants(p, ell);
            ok &= expect(t.m == m_naive, log, "m mismatch" + at);
            ok &= expect(t.a == a_naive, log, "a mismatch" + at);
            if (ell == 2 && p % 4 == 3) {
                std::uint64_t c_naive = 0;
                bigint v = bigint(p) * p - 1;
                while (v % 2 == 0) {
                    v /= 2;
                    ++c_naive;
                }
                ok &= expect(t.c.has_value() && *t.c == c_naive, log, "c mismatch" + at);
            } else {
                ok &= expect(!t.c.has_value(), log, "unexpected c" + at);
            }
        }
    }
    return ok;
}

bool check_target(const CrosscheckTarget& t, std::uint64_t want, std::string& log) {
    RankReport rep = crosscheck(t);
    bool ok = expect(rep.status == CheckStatus::Match, log,
                     rep.target + ": status " + to_string(rep.status));
    ok &= expect(rep.formula_value == want, log,
                 rep.target + ": formula " + std::to_string(rep.formula_value));
    ok &= expect(rep.brute_value.has_value() && *rep.brute_value == want, log,
                 rep.target + ": brute value off");
    return ok;
}

bool crit_x_even(std::string& log) {
    bool ok = expect(GroupTable::closure(xgroup(2, 2, 1)).order() == 32, log,
                     "|X_{2,1}(2)| != 32");
    ok &= expect(GroupTable::closure(iterated_wreath(2, 2)).order() == 8, log,
                 "|W_2(2)| != 8");
    ok &= check_target(CrosscheckTarget::xgroup(2, 2, 1), 3, log);
    ok &= check_target(CrosscheckTarget::wgroup(2, 2), 2, log);
    return ok;
}

bool crit_x_odd(std::string& log) {
    bool ok = expect(GroupTable::closure(xgroup(3, 1, 1)).order() == 81, log,
                     "|X_{1,1}(3)| != 81");
    ok &= check_target(CrosscheckTarget::xgroup(3, 1, 1), 3, log);
    return ok;
}

bool crit_y(std::string& log) {
    bool ok = expect(GroupTable::closure(ygroup(3, 0)).order() == 16, log,
                     "|Y_{3,0}| != 16");
    ok &= check_target(CrosscheckTarget::ygroup(3, 0), 2, log);
    ok &= expect(GroupTable::closure(ygroup(3, 1)).order() == 512, log,
                 "|Y_{3,1}| != 512");
    ok &= check_target(CrosscheckTarget::ygroup(3, 1), 4, log);
    return ok;
}

bool crit_gl_sylow(std::string& log) {
    bool ok = expect(GroupTable::closure(matrix_to_perm(gl_sylow_matrix(2, 5, 2))).order() == 32,
                     log, "|Syl_2 GL2(F5)| != 32");
    ok &= expect(gl_rank_formula(5, 2, 2).value == 3 &&
                     gl_rank_formula(5, 2, 2).case_tag == "(3d-d0)/2",
                 log, "formula branch at (5,2,2)");
    ok &= check_target(CrosscheckTarget::gl(2, 5, 2), 3, log);

    // Syl_2 GL2(F3): order 16 and the semidihedral presentation holds
    GroupTable H = GroupTable::closure(matrix_to_perm(gl_sylow_matrix(2, 3, 2)));
    ok &= expect(H.order() == 16, log, "|Syl_2 GL2(F3)| != 16");
    H.ensure_table();
    bool sd = false;
    for (EltId y = 0; y < H.order() && !sd; ++y) {
        if (H.elt_order(y) != 8) continue;
        EltSet cyc = H.span(EltSet{y});
        std::vector<bool> in(H.order(), false);
        for (EltId z : cyc) in[z] = true;
        for (EltId x = 0; x < H.order(); ++x)
            if (!in[x] && H.elt_order(x) == 2 && H.conj(y, x) == H.power(y, 3)) sd = true;
    }
    ok &= expect(sd, log, "SD16 relations not satisfied in Syl_2 GL2(F3)");
    ok &= check_target(CrosscheckTarget::gl(2, 3, 2), 2, log);

    ok &= expect(GroupTable::closure(matrix_to_perm(gl_sylow_matrix(2, 5, 3))).order() == 3, log,
                 "|Syl_3 GL2(F5)| != 3");
    ok &= check_target(CrosscheckTarget::gl(2, 5, 3), 1, log);
    return ok;
}

bool crit_sylow_sym(std::string& log) {
    bool ok = true;
    for (std::uint64_t n = 1; n <= 20; ++n)
        for (std::uint64_t ell : {2, 3, 5}) {
            bigint want = boost::multiprecision::pow(
                bigint(ell), static_cast<unsigned>(sylow_sym_valuation(n, ell)));
            GroupTable G = GroupTable::closure(sylow_sym(n, ell));
            ok &= expect(G.order_big() == want, log,
                         "order off at n=" + std::to_string(n) + " l=" + std::to_string(ell));
        }
    return ok;
}

bool crit_monomial_bound(std::string& log) {
    bool ok = true;
    for (auto [ell, n] :
         std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {2, 4}, {3, 3}, {3, 6}})
        for (std::uint32_t k : {2u, 3u}) {
            Lemma32Report rep = verify_lemma32(ell, n, k, 200, 20260826);
            std::string at = " at l=" + std::to_string(ell) + " n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
            ok &= expect(rep.violations == 0, log,
                         std::to_string(rep.violations) + " violations" + at);
            ok &= expect(rep.max_observed >= 1 && rep.max_observed <= rep.bound, log,
                         "observed range off" + at);
        }
    return ok;
}

bool crit_lattice_recovery(std::string& log) {
    bool ok = true;
    std::mt19937_64 rng(20260826);
    for (std::uint64_t p : {3, 5})
        for (std::uint32_t k : {2u, 3u}) {
            std::uint64_t mod = 1;
            for (std::uint32_t i = 0; i < k; ++i) mod *= p;
            // every block profile (a,b,c) with b+c >= 1 and total rank <= 8
            for (std::uint64_t wa = 0; wa <= 8; ++wa)
                for (std::uint64_t wb = 0; wa + wb * (p - 1) <= 8; ++wb)
                    for (std::uint64_t wc = wb == 0 ? 1 : 0;
                         wa + wb * (p - 1) + wc * p <= 8; ++wc) {
                        auto n = static_cast<std::uint32_t>(wa + wb * (p - 1) + wc * p);
                        FlatMat X = flat_identity(n);
                        std::uint32_t off = static_cast<std::uint32_t>(wa);
                        for (std::uint64_t b = 0; b < wb; ++b) {
                            auto s = static_cast<std::uint32_t>(p - 1);
                            for (std::uint32_t i = 0; i < s; ++i)
                                X[std::size_t(off + i) * n + off + i] = 0;
                            for (std::uint32_t i = 0; i + 1 < s; ++i)
                                X[std::size_t(off + i) * n + off + i + 1] = 1;
                            for (std::uint32_t j = 0; j < s; ++j)
                                X[std::size_t(off + s - 1) * n + off + j] = mod - 1;
                            off += s;
                        }
                        for (std::uint64_t c2 = 0; c2 < wc; ++c2) {
                            auto s = static_cast<std::uint32_t>(p);
                            for (std::uint32_t i = 0; i < s; ++i) {
                                X[std::size_t(off + i) * n + off + i] = 0;
                                X[std::size_t(off + i) * n + off + (i + 1) % s] = 1;
                            }
                            off += s;
                        }
                        auto [A, Ainv] = random_unimodular(rng, n, mod);
                        FlatMat Xc = flat_mul(flat_mul(Ainv, X, n, mod), A, n, mod);
                        std::string at = " at p=" + std::to_string(p) + " k=" +
                                         std::to_string(k) + " (" + std::to_string(wa) + "," +
                                         std::to_string(wb) + "," + std::to_string(wc) + ")";
                        for (const FlatMat& mat : {X, Xc}) {
                            ZMat Z(n, ZVec(n));
                            for (std::uint32_t i = 0; i < n; ++i)
                                for (std::uint32_t j = 0; j < n; ++j)
                                    Z[i][j] = mat[std::size_t(i) * n + j];
                            HRMultiplicities got = hr_decompose(p, k, Z);
                            ok &= expect(got.a == wa && got.b == wb && got.c == wc, log,
                                         "profile mismatch" + at);
                        }
                    }
        }
    return ok;
}

bool crit_module_inequality(std::string& log) {
    bool ok = true;
    std::size_t total = 0;
    for (std::uint64_t p : {3, 5}) {
        auto instances = random_pgroup_instances(p, 2, 25, 20260826 + p);
        for (const auto& inst : instances) {
            ++total;
            PropKeyReport rep = verify_prop_key(p, inst);
            ok &= expect(rep.rank <= 6, log, inst.name + ": rank > 6");
            ok &= expect(rep.holds, log,
                         inst.name + ": d_group=" + std::to_string(rep.d_group) +
                             " d_module=" + std::to_string(rep.d_module) +
                             " rank=" + std::to_string(rep.rank));
        }
    }
    ok &= expect(total >= 50, log, "fewer than 50 instances");
    return ok;
}

bool crit_model_groups(std::string& log) {
    GroupTable S = GroupTable::closure(matrix_to_perm(remark_s_group(5)));
    bool ok = expect(S.order() == 16, log, "|S(5)| != 16");
    ok &= expect(d_frattini(S, 2) == 3, log, "d(S(5)) != 3");
    ok &= expect(rank_brute(S).value == thmA_rk2_bound(5, 2), log, "rk(S(5)) != 3");

    GroupTable A = GroupTable::closure(remark_affine(3, 2, 2, 2));
    ok &= expect(A.order() == 162, log, "|C2 x| (Z/9)^2| != 162");
    ok &= expect(rank_brute(A).value == 3, log, "rk of the affine model != 3");

    GroupTable D = GroupTable::closure(direct_product(dihedral_model(2), dihedral_model(2)));
    ok &= expect(D.order() == 64, log, "|D8 x D8| != 64");
    ok &= expect(rank_brute(D).value == 4, log, "rk(D8 x D8) != 4");
    return ok;
}

bool crit_rank_vs_sylow(std::string& log) {
    bool ok = true;
    for (const auto& e : corpus()) {
        GLCheckDetail det = guralnick_lucchini_check(e.G);
        ok &= expect(det.holds, log, e.desc + ": bound violated (rk=" +
                                         std::to_string(det.rank) + ")");
    }
    ok &= expect(corpus().size() >= 100, log, "corpus unexpectedly small");
    return ok;
}

bool crit_dmaximal(std::string& log) {
    bool ok = true;
    std::size_t seen = 0;
    for (const auto& e : corpus()) {
        if (e.ell == 0 || e.ell == 2) continue;
        ++seen;
        GroupTable G = e.G;
        std::uint64_t d = d_frattini(G, e.ell);
        std::uint64_t w1 = ell_log(omega1_ids(G, e.ell).size(), e.ell);
        ok &= expect(d <= w1, log, e.desc + ": d > log|Omega_1|");
        if (is_d_maximal(G))
            ok &= expect(nilpotency_class(G) <= 2, log,
                         e.desc + ": d-maximal with class > 2");
    }
    ok &= expect(seen >= 50, log, "odd-order corpus unexpectedly small");
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"invariants grid vs naive loops", 1, crit_invariants_grid},
        {"X-family rank, l = 2", 10, crit_x_even},
        {"X-family rank, l = 3 (order 81)", 60, crit_x_odd},
        {"Y-family rank (orders 16, 512)", 600, crit_y},
        {"GL Sylow ranks vs brute force", 60, crit_gl_sylow},
        {"Sylow-of-Sym orders, n <= 20", 30, crit_sylow_sym},
        {"monomial generator bound suite", 300, crit_monomial_bound},
        {"lattice type recovery", 60, crit_lattice_recovery},
        {"module generator inequality suite", 300, crit_module_inequality},
        {"affine and dihedral models", 300, crit_model_groups},
        {"rank vs Sylow-rank corpus bound", 900, crit_rank_vs_sylow},
        {"d-maximal class and Omega_1 bounds", 600, crit_dmaximal},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string log;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log += (log.empty() ? "" : "; ") + std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            ok = false;
            log += (log.empty() ? "" : "; ") + std::string("over time budget of ") +
                   std::to_string(c.budget_seconds) + "s";
        }
        std::printf("[%2zu/12] %-36s %s (%.2fs)\n", i + 1, c.name.c_str(),
                    ok ? "PASS" : "FAIL", secs);
        if (!ok) {
            std::printf("        %s\n", log.c_str());
            ++failures;
        }
    }
    return failures;
}
