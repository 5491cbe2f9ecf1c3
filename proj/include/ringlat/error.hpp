#pragma once

/**
 * @file error.hpp
 * @brief Error categories and size limits shared by every ringlat module.
 */

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ringlat {

enum class ErrorKind {
    invalid_order,
    invalid_characteristic,
    size_limit,
    not_monic,
    trivial_quotient,
    not_local,
    invalid_extension,
    invalid_family,
    not_applicable,
    precondition,
    classification_failure,
    formula_violation,
    unreachable_case,
    syntax,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_order: return "invalid-order";
        case ErrorKind::invalid_characteristic: return "invalid-characteristic";
        case ErrorKind::size_limit: return "size-limit";
        case ErrorKind::not_monic: return "not-monic";
        case ErrorKind::trivial_quotient: return "trivial-quotient";
        case ErrorKind::not_local: return "not-local";
        case ErrorKind::invalid_extension: return "invalid-extension";
        case ErrorKind::invalid_family: return "invalid-family";
        case ErrorKind::not_applicable: return "not-applicable";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::classification_failure: return "classification-failure";
        case ErrorKind::formula_violation: return "formula-violation";
        case ErrorKind::unreachable_case: return "unreachable-case";
        case ErrorKind::syntax: return "syntax";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Size bounds. `max_order` caps ring/module construction, `max_lattice_order`
/// caps anything that enumerates a lattice of subsets.
struct Limits {
    std::size_t max_order = 4096;
    std::size_t max_lattice_order = 512;
    std::size_t max_chains = 10000;
    std::size_t max_nodes = 200000;

    /// RINGLAT_MAX_ORDER, when set to a positive integer, replaces both order bounds.
    static Limits from_env() {
        Limits limits;
        if (const char* raw = std::getenv("RINGLAT_MAX_ORDER")) {
            char* end = nullptr;
            unsigned long long value = std::strtoull(raw, &end, 10);
            if (end != raw && *end == '\0' && value > 0) {
                limits.max_order = static_cast<std::size_t>(value);
                limits.max_lattice_order = static_cast<std::size_t>(value);
            }
        }
        return limits;
    }
};

inline const Limits& default_limits() {
    static const Limits limits = Limits::from_env();
    return limits;
}

inline void require_order(std::size_t order, std::size_t bound, const std::string& what) {
    if (order > bound) {
        throw Error(ErrorKind::size_limit,
                    what + " has order " + std::to_string(order) + ", bound is " + std::to_string(bound));
    }
}

}  // namespace ringlat
