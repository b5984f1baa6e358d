#pragma once

/// Permutations on {0..degree-1} stored as flat image arrays, and group
/// specifications (degree + generator list).

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ranklab/errors.hpp"

namespace ranklab {

struct Perm {
    std::vector<std::uint32_t> images;

    Perm() = default;
    explicit Perm(std::size_t degree) : images(degree) {
        std::iota(images.begin(), images.end(), 0u);
    }
    explicit Perm(std::vector<std::uint32_t> imgs) : images(std::move(imgs)) {}

    std::size_t degree() const { return images.size(); }

    std::uint32_t operator()(std::uint32_t i) const { return images[i]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != i) return false;
        return true;
    }

    bool is_bijection() const {
        std::vector<bool> seen(images.size(), false);
        for (auto v : images) {
            if (v >= images.size() || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }

    // (a * b)(i) = b(a(i)): apply a first, then b.
    friend Perm operator*(const Perm& a, const Perm& b) {
        Perm r;
        r.images.resize(a.images.size());
        for (std::size_t i = 0; i < a.images.size(); ++i)
            r.images[i] = b.images[a.images[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.images.resize(images.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            r.images[images[i]] = static_cast<std::uint32_t>(i);
        return r;
    }

    auto operator<=>(const Perm&) const = default;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : p.images) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct GroupSpec {
    std::uint32_t degree = 1;
    std::vector<Perm> generators;
    std::string name;

    void validate() const {
        for (const auto& g : generators) {
            if (g.degree() != degree)
                throw domain_error("generator degree mismatch in group spec '" + name + "'");
            if (!g.is_bijection())
                throw domain_error("generator is not a bijection in group spec '" + name + "'");
        }
    }
};

/// Direct product on the disjoint union of the two domains.
inline GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
    GroupSpec r;
    r.degree = a.degree + b.degree;
    r.name = a.name.empty() || b.name.empty() ? "" : a.name + " x " + b.name;
    for (const auto& g : a.generators) {
        Perm p(r.degree);
        for (std::uint32_t i = 0; i < a.degree; ++i) p.images[i] = g.images[i];
        r.generators.push_back(std::move(p));
    }
    for (const auto& g : b.generators) {
        Perm p(r.degree);
        for (std::uint32_t i = 0; i < b.degree; ++i) p.images[a.degree + i] = a.degree + g.images[i];
        r.generators.push_back(std::move(p));
    }
    return r;
}

} // namespace ranklab
