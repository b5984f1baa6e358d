#pragma once

/// Subgroup lattice enumeration up to conjugacy, brute-force rank, and
/// d-maximality.  l-groups are enumerated by cyclic extension (each
/// subgroup of order l^(j+1) arises from a normal maximal subgroup of
/// order l^j); general groups by join closure of cyclic subgroups.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ranklab/group.hpp"

namespace ranklab {

inline constexpr std::size_t kDefaultClassBudget = 1'000'000;

struct SubgroupClass {
    EltSet rep;             // sorted element ids, lexicographically least in its class
    std::size_t class_size; // number of conjugates
};

struct SubgroupClassList {
    std::vector<SubgroupClass> classes;
    bool exhaustive = true;

    std::size_t total_subgroups() const {
        std::size_t t = 0;
        for (const auto& c : classes) t += c.class_size;
        return t;
    }
};

namespace detail {

inline EltSet conj_set(const GroupTable& G, const EltSet& ids, EltId g) {
    EltSet out;
    out.reserve(ids.size());
    for (EltId x : ids) out.push_back(G.conj(x, g));
    std::sort(out.begin(), out.end());
    return out;
}

/// Orbit of a subgroup under conjugation by the group; returns the
/// lexicographically least member and the orbit size.
inline std::pair<EltSet, std::size_t> canonical_class(const GroupTable& G, const EltSet& ids) {
    std::set<EltSet> orbit;
    std::vector<EltSet> todo{ids};
    orbit.insert(ids);
    // conjugation by generators suffices to generate the conjugation action
    std::vector<EltId> gen_ids;
    for (const auto& g : G.spec.generators) gen_ids.push_back(G.id_of(g));
    while (!todo.empty()) {
        EltSet cur = std::move(todo.back());
        todo.pop_back();
        for (EltId g : gen_ids) {
            EltSet c = conj_set(G, cur, g);
            if (orbit.insert(c).second) todo.push_back(std::move(c));
        }
    }
    return {*orbit.begin(), orbit.size()};
}

inline SubgroupClassList subgroup_classes_pgroup(const GroupTable& G, std::uint64_t ell,
                                                 std::size_t budget) {
    G.ensure_table();
    SubgroupClassList out;
    std::set<EltSet> canon_seen;
    std::vector<EltSet> level{EltSet{0}};
    canon_seen.insert(EltSet{0});
    out.classes.push_back({EltSet{0}, 1});
    while (!level.empty()) {
        std::vector<EltSet> next;
        std::set<EltSet> raw_seen;
        for (const EltSet& U : level) {
            if (U.size() == G.order()) continue;
            EltSet N = G.normalizer(U);
            std::vector<bool> inU(G.order(), false);
            for (EltId x : U) inU[x] = true;
            std::vector<bool> covered(inU);
            for (EltId g : N) {
                if (covered[g]) continue;
                for (EltId x : U) covered[G.mul(x, g)] = true;
                if (!inU[G.power(g, ell)]) continue;
                // H = union of the cosets U g^i, i < l
                EltSet H(U);
                EltId gi = g;
                for (std::uint64_t i = 1; i < ell; ++i) {
                    for (EltId x : U) H.push_back(G.mul(x, gi));
                    gi = G.mul(gi, g);
                }
                std::sort(H.begin(), H.end());
                if (!raw_seen.insert(H).second) continue;
                auto [canon, size] = canonical_class(G, H);
                if (canon_seen.insert(canon).second) {
                    out.classes.push_back({canon, size});
                    if (out.classes.size() > budget)
                        throw budget_exceeded("subgroup_classes: class budget exceeded",
                                              out.classes.size());
                    next.push_back(canon);
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

inline SubgroupClassList subgroup_classes_general(const GroupTable& G, std::size_t budget) {
    G.ensure_table();
    // all cyclic subgroups, deduplicated by element set
    std::set<EltSet> cyc_set;
    for (EltId x = 0; x < G.order(); ++x) cyc_set.insert(G.span(EltSet{x}));
    std::vector<std::pair<EltSet, EltId>> cyclics; // set + a generator
    for (const auto& c : cyc_set) {
        EltId gen = 0;
        for (EltId x : c)
            if (G.elt_order(x) == c.size()) {
                gen = x;
                break;
            }
        cyclics.emplace_back(c, gen);
    }
    SubgroupClassList out;
    std::set<EltSet> canon_seen;
    std::vector<EltSet> todo{EltSet{0}};
    canon_seen.insert(EltSet{0});
    out.classes.push_back({EltSet{0}, 1});
    while (!todo.empty()) {
        EltSet H = std::move(todo.back());
        todo.pop_back();
        if (H.size() == G.order()) continue;
        std::vector<bool> in(G.order(), false);
        for (EltId x : H) in[x] = true;
        for (const auto& [cset, cgen] : cyclics) {
            if (in[cgen]) continue;
            EltSet gens(H);
            gens.push_back(cgen);
            EltSet J = G.span(gens);
            auto [canon, size] = canonical_class(G, J);
            if (canon_seen.insert(canon).second) {
                out.classes.push_back({canon, size});
                if (out.classes.size() > budget)
                    throw budget_exceeded("subgroup_classes: class budget exceeded",
                                          out.classes.size());
                todo.push_back(canon);
            }
        }
    }
    return out;
}

} // namespace detail

inline SubgroupClassList subgroup_classes(const GroupTable& G,
                                          std::size_t budget = kDefaultClassBudget) {
    std::size_t n = G.order();
    if (n == 1) {
        SubgroupClassList out;
        out.classes.push_back({EltSet{0}, 1});
        return out;
    }
    // prime-power order: cyclic extension method
    for (std::uint64_t ell = 2; ell <= n; ++ell) {
        if (n % ell == 0) {
            std::size_t m = n;
            while (m % ell == 0) m /= ell;
            SubgroupClassList out = (m == 1) ? detail::subgroup_classes_pgroup(G, ell, budget)
                                             : detail::subgroup_classes_general(G, budget);
            std::sort(out.classes.begin(), out.classes.end(),
                      [](const SubgroupClass& a, const SubgroupClass& b) {
                          if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
                          return a.rep < b.rep;
                      });
            return out;
        }
    }
    throw domain_error("subgroup_classes: unreachable");
}

/// d(H) for a subgroup given by its element ids inside G: Frattini count
/// for prime-power orders, generating-tuple search otherwise.
inline std::uint64_t d_of_subgroup(const GroupTable& G, const EltSet& H,
                                   std::uint64_t max_d = kDefaultMaxD) {
    if (H.size() == 1) return 0;
    G.ensure_table();
    // prime-power order: d = log_l |H / Phi(H)|
    for (std::uint64_t ell = 2; ell <= H.size(); ++ell) {
        if (H.size() % ell == 0) {
            std::size_t m = H.size();
            while (m % ell == 0) m /= ell;
            if (m != 1) break; // not an l-group; fall through to search
            EltSet gens;
            std::vector<bool> seen(G.order(), false);
            for (EltId x : H) {
                EltId p = G.power(x, ell);
                if (!seen[p]) {
                    seen[p] = true;
                    gens.push_back(p);
                }
            }
            for (std::size_t i = 0; i < H.size(); ++i)
                for (std::size_t j = i + 1; j < H.size(); ++j) {
                    EltId c = G.commutator(H[i], H[j]);
                    if (!seen[c]) {
                        seen[c] = true;
                        gens.push_back(c);
                    }
                }
            EltSet phi = G.span(gens);
            return ell_log(H.size() / phi.size(), ell);
        }
    }
    // general: incremental tuple search within H
    std::vector<bool> inH(G.order(), false);
    for (EltId x : H) inH[x] = true;
    std::function<bool(const EltSet&, std::size_t, std::uint64_t)> extend =
        [&](const EltSet& cur_span, std::size_t start, std::uint64_t remaining) -> bool {
        if (cur_span.size() == H.size()) return true;
        if (remaining == 0) return false;
        std::vector<bool> in(G.order(), false);
        for (EltId x : cur_span) in[x] = true;
        for (std::size_t k = start; k < H.size(); ++k) {
            EltId g = H[k];
            if (in[g]) continue;
            EltSet gens(cur_span);
            gens.push_back(g);
            EltSet sp = G.span(gens);
            if (extend(sp, k + 1, remaining - 1)) return true;
        }
        return false;
    };
    for (std::uint64_t d = 1; d <= max_d; ++d) {
        EltSet trivial{0};
        if (extend(trivial, 0, d)) return d;
    }
    throw search_exhausted("d_of_subgroup: d(H) exceeds max_d");
}

struct BruteRank {
    std::uint64_t value = 0;
    EltSet witness;         // lexicographically least class rep attaining the max
    bool exhaustive = true; // false when the class budget was hit (lower bound only)
};

/// rk(G) = max over subgroup-class representatives of d(H).
inline BruteRank rank_brute(const GroupTable& G, std::size_t budget = kDefaultClassBudget) {
    BruteRank r;
    SubgroupClassList classes;
    try {
        classes = subgroup_classes(G, budget);
    } catch (const budget_exceeded&) {
        throw; // caller decides how to downgrade; never report a rank from a partial list
    }
    for (const auto& c : classes.classes) {
        std::uint64_t d = d_of_subgroup(G, c.rep);
        if (d > r.value || (d == r.value && (r.witness.empty() || c.rep < r.witness))) {
            r.value = d;
            r.witness = c.rep;
        }
    }
    return r;
}

/// True iff every proper subgroup needs strictly fewer generators than G.
inline bool is_d_maximal(const GroupTable& G, std::size_t budget = kDefaultClassBudget) {
    SubgroupClassList classes = subgroup_classes(G, budget);
    std::uint64_t dG = d_of_subgroup(G, G.all_ids());
    for (const auto& c : classes.classes) {
        if (c.rep.size() == G.order()) continue;
        if (d_of_subgroup(G, c.rep) >= dG) return false;
    }
    return true;
}

} // namespace ranklab
