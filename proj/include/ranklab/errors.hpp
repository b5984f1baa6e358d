#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

// Domain errors: bad parameters, excluded cases (e.g. p = l = 2).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration hit the element cap; carries the partial count seen so far.
struct cap_exceeded : std::runtime_error {
    std::size_t partial_count;
    cap_exceeded(const std::string& msg, std::size_t partial)
        : std::runtime_error(msg), partial_count(partial) {}
};

// Subgroup-class enumeration hit its budget.
struct budget_exceeded : std::runtime_error {
    std::size_t classes_found;
    budget_exceeded(const std::string& msg, std::size_t found)
        : std::runtime_error(msg), classes_found(found) {}
};

struct not_prime_power : std::runtime_error {
    explicit not_prime_power(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_nilpotent : std::runtime_error {
    explicit not_nilpotent(const std::string& msg) : std::runtime_error(msg) {}
};

struct search_exhausted : std::runtime_error {
    explicit search_exhausted(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_invariant : std::runtime_error {
    explicit not_invariant(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_decomposable : std::runtime_error {
    explicit not_decomposable(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_faithful : std::runtime_error {
    explicit not_faithful(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ranklab
