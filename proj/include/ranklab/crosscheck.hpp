#pragma once

/// Formula-vs-brute-force cross-validation harness and the
/// Guralnick-Lucchini corpus check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ranklab/constructions.hpp"
#include "ranklab/formulas.hpp"
#include "ranklab/group.hpp"
#include "ranklab/subgroups.hpp"

namespace ranklab {

enum class CheckStatus { Match, Mismatch, BruteSkipped, LowerBoundOnly };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Match: return "Match";
        case CheckStatus::Mismatch: return "Mismatch";
        case CheckStatus::BruteSkipped: return "BruteSkipped";
        case CheckStatus::LowerBoundOnly: return "LowerBoundOnly";
    }
    return "?";
}

struct RankReport {
    std::string target;
    std::uint64_t formula_value = 0;
    std::optional<std::uint64_t> brute_value;
    std::optional<std::vector<Perm>> witness; // elements of a witness subgroup
    CheckStatus status = CheckStatus::BruteSkipped;
    std::string note;
};

/// A recognized construction descriptor for the crosscheck harness.
struct CrosscheckTarget {
    enum class Kind { XGroup, YGroup, WGroup, GLSylow } kind;
    std::uint64_t p1 = 0, p2 = 0, p3 = 0; // parameters, meaning depends on kind

    static CrosscheckTarget xgroup(std::uint64_t ell, std::uint64_t a, std::uint64_t r) {
        return {Kind::XGroup, ell, a, r};
    }
    static CrosscheckTarget ygroup(std::uint64_t c, std::uint64_t r) {
        return {Kind::YGroup, c, r, 0};
    }
    static CrosscheckTarget wgroup(std::uint64_t ell, std::uint64_t r) {
        return {Kind::WGroup, ell, r, 0};
    }
    static CrosscheckTarget gl(std::uint64_t d, std::uint64_t p, std::uint64_t ell) {
        return {Kind::GLSylow, d, p, ell};
    }

    std::string describe() const {
        switch (kind) {
            case Kind::XGroup:
                return "xgroup l=" + std::to_string(p1) + " a=" + std::to_string(p2) +
                       " r=" + std::to_string(p3);
            case Kind::YGroup:
                return "ygroup c=" + std::to_string(p1) + " r=" + std::to_string(p2);
            case Kind::WGroup:
                return "wgroup l=" + std::to_string(p1) + " r=" + std::to_string(p2);
            case Kind::GLSylow:
                return "gl d=" + std::to_string(p1) + " p=" + std::to_string(p2) +
                       " l=" + std::to_string(p3);
        }
        return "?";
    }

    GroupSpec build() const {
        switch (kind) {
            case Kind::XGroup: return xgroup_spec();
            case Kind::YGroup: return ::ranklab::ygroup(p1, p2);
            case Kind::WGroup: return iterated_wreath(p1, p2);
            case Kind::GLSylow: return matrix_to_perm(gl_sylow_matrix(
                static_cast<std::uint32_t>(p1), p2, p3));
        }
        throw domain_error("unknown target kind");
    }

    std::uint64_t formula() const {
        switch (kind) {
            case Kind::XGroup: return x_rank_formula(p1, p2, p3);
            case Kind::YGroup: return y_rank_formula(p1, p2);
            case Kind::WGroup: return w_rank_formula(p1, p2);
            case Kind::GLSylow: return gl_rank_formula(p2, p3, p1).value;
        }
        throw domain_error("unknown target kind");
    }

  private:
    GroupSpec xgroup_spec() const { return ::ranklab::xgroup(p1, p2, p3); }
};

/// Build the target, compute its brute-force rank, compare to the formula.
/// A cap or budget hit downgrades to BruteSkipped, never to Match.
inline RankReport crosscheck(const CrosscheckTarget& target,
                             std::size_t budget = kDefaultClassBudget,
                             std::size_t closure_cap = kDefaultClosureCap) {
    RankReport rep;
    rep.target = target.describe();
    rep.formula_value = target.formula();
    GroupTable G;
    try {
        G = GroupTable::closure(target.build(), closure_cap);
    } catch (const cap_exceeded& e) {
        rep.status = CheckStatus::BruteSkipped;
        rep.note = e.what();
        return rep;
    }
    BruteRank r;
    try {
        r = rank_brute(G, budget);
    } catch (const budget_exceeded& e) {
        rep.status = CheckStatus::BruteSkipped;
        rep.note = e.what();
        return rep;
    } catch (const cap_exceeded& e) {
        rep.status = CheckStatus::BruteSkipped;
        rep.note = e.what();
        return rep;
    }
    rep.brute_value = r.value;
    std::vector<Perm> wit;
    for (EltId i : r.witness) wit.push_back(G.elements[i]);
    rep.witness = std::move(wit);
    rep.status = (r.value == rep.formula_value) ? CheckStatus::Match : CheckStatus::Mismatch;
    return rep;
}

struct GLCheckDetail {
    std::uint64_t rank = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sylow_ranks; // (l, rk_l)
    bool holds = false;
};

/// Checks rk(G) <= max_l rk_l(G) + 1 over all primes l, everything brute force.
inline GLCheckDetail guralnick_lucchini_check(const GroupTable& G,
                                              std::size_t budget = kDefaultClassBudget) {
    GLCheckDetail det;
    det.rank = rank_brute(G, budget).value;
    std::size_t n = G.order();
    std::uint64_t maxsyl = 0;
    for (std::uint64_t ell = 2; ell <= n; ++ell) {
        if (n % ell != 0 || !is_prime(ell)) continue;
        while (n % ell == 0) n /= ell;
        GroupTable S = sylow(G, ell);
        // the Sylow subgroup of an l-group is the group itself
        std::uint64_t rk =
            (S.order() == G.order()) ? det.rank : rank_brute(S, budget).value;
        det.sylow_ranks.emplace_back(ell, rk);
        maxsyl = std::max(maxsyl, rk);
    }
    det.holds = det.rank <= maxsyl + 1;
    return det;
}

} // namespace ranklab
