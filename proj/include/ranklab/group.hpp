#pragma once

/// Exact finite-group engine on fully enumerated permutation groups:
/// closure, multiplication tables, derived/agemo/omega subgroups, Frattini
/// quotients, minimal generator numbers, Sylow subgroups, nilpotency class.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ranklab/arith.hpp"
#include "ranklab/perm.hpp"

namespace ranklab {

inline constexpr std::size_t kDefaultClosureCap = std::size_t(1) << 20;
inline constexpr std::size_t kDefaultTableCap = 4096;

using EltId = std::uint32_t;
using EltSet = std::vector<EltId>; // sorted ids

/// A fully enumerated finite permutation group.  Elements are stored in
/// canonical (lexicographic) order; element 0 is the identity.
class GroupTable {
  public:
    GroupSpec spec;
    std::vector<Perm> elements; // sorted lexicographically

    static GroupTable closure(GroupSpec s, std::size_t cap = kDefaultClosureCap) {
        s.validate();
        if (cap < 1) throw domain_error("closure: cap must be >= 1");
        std::unordered_set<Perm, PermHash> seen;
        std::deque<Perm> todo;
        Perm id(s.degree);
        seen.insert(id);
        todo.push_back(id);
        while (!todo.empty()) {
            Perm cur = std::move(todo.front());
            todo.pop_front();
            for (const auto& g : s.generators) {
                Perm prod = cur * g;
                if (seen.insert(prod).second) {
                    if (seen.size() > cap)
                        throw cap_exceeded("closure: group exceeds cap of " +
                                               std::to_string(cap) + " elements",
                                           seen.size());
                    todo.push_back(std::move(prod));
                }
            }
        }
        GroupTable t;
        t.spec = std::move(s);
        t.elements.assign(seen.begin(), seen.end());
        std::sort(t.elements.begin(), t.elements.end());
        t.index_elements();
        return t;
    }

    /// Build directly from a known element set (must be closed).
    static GroupTable from_elements(std::uint32_t degree, std::vector<Perm> elts,
                                    std::string name = "") {
        GroupTable t;
        t.spec.degree = degree;
        t.spec.name = std::move(name);
        t.spec.generators = elts;
        t.elements = std::move(elts);
        std::sort(t.elements.begin(), t.elements.end());
        t.elements.erase(std::unique(t.elements.begin(), t.elements.end()), t.elements.end());
        t.index_elements();
        return t;
    }

    std::size_t order() const { return elements.size(); }
    bigint order_big() const { return bigint(elements.size()); }

    EltId id_of(const Perm& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw domain_error("element not in group");
        return it->second;
    }

    bool contains(const Perm& p) const { return index_.count(p) != 0; }

    // --- multiplication table layer -------------------------------------

    void ensure_table(std::size_t table_cap = kDefaultTableCap) const {
        if (!table_.empty()) return;
        std::size_t n = elements.size();
        if (n > table_cap)
            throw cap_exceeded("multiplication table: order " + std::to_string(n) +
                                   " exceeds table cap " + std::to_string(table_cap),
                               n);
        table_.resize(n * n);
        inv_.resize(n);
        elt_order_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                table_[a * n + b] = id_of(elements[a] * elements[b]);
            inv_[a] = id_of(elements[a].inverse());
        }
        for (std::size_t a = 0; a < n; ++a) {
            EltId x = static_cast<EltId>(a);
            std::size_t ord = 1;
            while (x != 0) {
                x = mul(x, static_cast<EltId>(a));
                ++ord;
            }
            elt_order_[a] = ord;
        }
    }

    EltId mul(EltId a, EltId b) const { return table_[std::size_t(a) * elements.size() + b]; }
    EltId inv(EltId a) const { return inv_[a]; }
    std::size_t elt_order(EltId a) const { return elt_order_[a]; }
    EltId conj(EltId h, EltId g) const { return mul(mul(inv_[g], h), g); }
    EltId commutator(EltId x, EltId y) const {
        return mul(mul(inv_[x], inv_[y]), mul(x, y));
    }
    EltId power(EltId a, std::uint64_t e) const {
        EltId r = 0;
        EltId b = a;
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    /// Subgroup generated by the given element ids (requires table).
    EltSet span(const EltSet& gens) const {
        std::size_t n = elements.size();
        std::vector<bool> in(n, false);
        std::vector<EltId> stack;
        in[0] = true;
        stack.push_back(0);
        for (EltId g : gens)
            if (!in[g]) {
                in[g] = true;
                stack.push_back(g);
            }
        EltSet work(stack);
        while (!stack.empty()) {
            EltId x = stack.back();
            stack.pop_back();
            for (EltId g : gens) {
                EltId y = mul(x, g);
                if (!in[y]) {
                    in[y] = true;
                    stack.push_back(y);
                }
                y = mul(g, x);
                if (!in[y]) {
                    in[y] = true;
                    stack.push_back(y);
                }
            }
        }
        EltSet out;
        for (EltId i = 0; i < n; ++i)
            if (in[i]) out.push_back(i);
        return out;
    }

    EltSet all_ids() const {
        EltSet out(elements.size());
        std::iota(out.begin(), out.end(), 0u);
        return out;
    }

    /// Normalizer of a subgroup (given as sorted id set) in the whole group.
    EltSet normalizer(const EltSet& sub) const {
        std::vector<bool> in(elements.size(), false);
        for (EltId x : sub) in[x] = true;
        EltSet out;
        for (EltId g = 0; g < elements.size(); ++g) {
            bool ok = true;
            for (EltId x : sub)
                if (!in[conj(x, g)]) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(g);
        }
        return out;
    }

    /// GroupTable for the subgroup with the given element ids.
    GroupTable subtable(const EltSet& ids, std::string name = "") const {
        std::vector<Perm> elts;
        elts.reserve(ids.size());
        for (EltId i : ids) elts.push_back(elements[i]);
        return from_elements(spec.degree, std::move(elts), std::move(name));
    }

  private:
    void index_elements() {
        index_.clear();
        for (std::size_t i = 0; i < elements.size(); ++i)
            index_.emplace(elements[i], static_cast<EltId>(i));
    }

    std::unordered_map<Perm, EltId, PermHash> index_;
    mutable std::vector<EltId> table_;
    mutable std::vector<EltId> inv_;
    mutable std::vector<std::size_t> elt_order_;
};

// --- structural subgroups ----------------------------------------------

inline EltSet derived_ids(const GroupTable& G) {
    G.ensure_table();
    EltSet gens;
    std::vector<bool> seen(G.order(), false);
    for (EltId x = 0; x < G.order(); ++x)
        for (EltId y = 0; y < G.order(); ++y) {
            EltId c = G.commutator(x, y);
            if (!seen[c]) {
                seen[c] = true;
                gens.push_back(c);
            }
        }
    return G.span(gens);
}

inline GroupTable derived_subgroup(const GroupTable& G) {
    return G.subtable(derived_ids(G));
}

inline EltSet agemo_ids(const GroupTable& G, std::uint64_t ell) {
    G.ensure_table();
    EltSet gens;
    std::vector<bool> seen(G.order(), false);
    for (EltId x = 0; x < G.order(); ++x) {
        EltId p = G.power(x, ell);
        if (!seen[p]) {
            seen[p] = true;
            gens.push_back(p);
        }
    }
    return G.span(gens);
}

inline GroupTable agemo(const GroupTable& G, std::uint64_t ell) {
    return G.subtable(agemo_ids(G, ell));
}

inline bool is_ell_group(const GroupTable& G, std::uint64_t ell) {
    std::size_t n = G.order();
    while (n % ell == 0) n /= ell;
    return n == 1;
}

/// log_l |G| for an l-group.
inline std::uint64_t ell_log(std::size_t n, std::uint64_t ell) {
    std::uint64_t e = 0;
    while (n % ell == 0) {
        n /= ell;
        ++e;
    }
    if (n != 1) throw not_prime_power("order is not a power of " + std::to_string(ell));
    return e;
}

/// Frattini subgroup G^l [G,G] of an l-group, as an id set.
inline EltSet frattini_ids(const GroupTable& G, std::uint64_t ell) {
    G.ensure_table();
    EltSet gens;
    std::vector<bool> seen(G.order(), false);
    for (EltId x = 0; x < G.order(); ++x) {
        EltId p = G.power(x, ell);
        if (!seen[p]) {
            seen[p] = true;
            gens.push_back(p);
        }
    }
    for (EltId x = 0; x < G.order(); ++x)
        for (EltId y = x + 1; y < G.order(); ++y) {
            EltId c = G.commutator(x, y);
            if (!seen[c]) {
                seen[c] = true;
                gens.push_back(c);
            }
        }
    return G.span(gens);
}

/// d(G) = log_l |G / Phi(G)| for an l-group G.
inline std::uint64_t d_frattini(const GroupTable& G, std::uint64_t ell) {
    if (!is_ell_group(G, ell))
        throw not_prime_power("d_frattini: |G| = " + std::to_string(G.order()) +
                              " is not a power of " + std::to_string(ell));
    if (G.order() == 1) return 0;
    EltSet phi = frattini_ids(G, ell);
    return ell_log(G.order() / phi.size(), ell);
}

inline constexpr std::uint64_t kDefaultMaxD = 6;

/// Exact d(G) by incremental search over generating tuples.
inline std::uint64_t d_search(const GroupTable& G, std::uint64_t max_d = kDefaultMaxD) {
    if (G.order() == 1) return 0;
    G.ensure_table();
    std::size_t n = G.order();
    // DFS over id-increasing tuples
    std::function<bool(EltSet&, EltId, std::uint64_t)> extend =
        [&](EltSet& cur_span, EltId start, std::uint64_t remaining) -> bool {
        if (cur_span.size() == n) return true;
        if (remaining == 0) return false;
        std::vector<bool> in(n, false);
        for (EltId x : cur_span) in[x] = true;
        for (EltId g = start; g < n; ++g) {
            if (in[g]) continue;
            EltSet gens(cur_span);
            gens.push_back(g);
            EltSet sp = G.span(gens);
            if (extend(sp, g + 1, remaining - 1)) return true;
        }
        return false;
    };
    for (std::uint64_t d = 1; d <= max_d; ++d) {
        EltSet trivial{0};
        if (extend(trivial, 1, d)) return d;
    }
    throw search_exhausted("d_search: d(G) exceeds max_d = " + std::to_string(max_d));
}

/// Omega_1: subgroup generated by elements of order dividing l.
inline EltSet omega1_ids(const GroupTable& G, std::uint64_t ell) {
    if (!is_ell_group(G, ell))
        throw not_prime_power("omega1: |G| is not a power of " + std::to_string(ell));
    G.ensure_table();
    EltSet gens;
    for (EltId x = 0; x < G.order(); ++x)
        if (G.elt_order(x) == ell || x == 0) gens.push_back(x);
    return G.span(gens);
}

inline GroupTable omega1(const GroupTable& G, std::uint64_t ell) {
    return G.subtable(omega1_ids(G, ell));
}

/// A Sylow l-subgroup found by greedy normalizer extension.
inline GroupTable sylow(const GroupTable& G, std::uint64_t ell) {
    G.ensure_table();
    std::size_t n = G.order();
    std::size_t target = 1;
    {
        std::size_t m = n;
        while (m % ell == 0) {
            m /= ell;
            target *= ell;
        }
    }
    if (target == 1) return G.subtable(EltSet{0}, "trivial");
    // seed with the l-part of some element of order divisible by l
    EltSet P{0};
    for (EltId x = 1; x < n; ++x) {
        std::size_t o = G.elt_order(x);
        if (o % ell == 0) {
            std::size_t m = o;
            while (m % ell == 0) m /= ell;
            P = G.span(EltSet{G.power(x, m)});
            break;
        }
    }
    while (P.size() < target) {
        EltSet N = G.normalizer(P);
        std::vector<bool> inP(n, false);
        for (EltId x : P) inP[x] = true;
        bool grew = false;
        for (EltId g : N) {
            if (inP[g]) continue;
            // order of the coset gP in N/P
            std::size_t j = 1;
            EltId y = g;
            while (!inP[y]) {
                y = G.mul(y, g);
                ++j;
            }
            if (j % ell != 0) continue;
            EltId h = G.power(g, j / ell); // coset of order l
            EltSet gens(P);
            gens.push_back(h);
            P = G.span(gens);
            grew = true;
            break;
        }
        if (!grew)
            throw domain_error("sylow: normalizer extension stalled (internal error)");
    }
    return G.subtable(P, "sylow-" + std::to_string(ell));
}

/// Length of the lower central series until it reaches the trivial group.
inline std::uint64_t nilpotency_class(const GroupTable& G) {
    G.ensure_table();
    if (G.order() == 1) return 0;
    EltSet gamma = G.all_ids();
    std::uint64_t c = 0;
    while (gamma.size() > 1) {
        EltSet gens;
        std::vector<bool> seen(G.order(), false);
        for (EltId a : gamma)
            for (EltId g = 0; g < G.order(); ++g) {
                EltId x = G.commutator(a, g);
                if (!seen[x]) {
                    seen[x] = true;
                    gens.push_back(x);
                }
            }
        EltSet next = G.span(gens);
        if (next.size() == gamma.size())
            throw not_nilpotent("lower central series stabilised above the trivial group");
        gamma = std::move(next);
        ++c;
    }
    return c;
}

} // namespace ranklab
