#pragma once

/**
 * @file minimal.hpp
 * @brief Classification of minimal extensions as inert, decomposed or
 *        ramified, and the special ramified predicate.
 */

#include <string>
#include <vector>

#include "ringlat/extension.hpp"
#include "ringlat/ideal.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/predicates.hpp"
#include "ringlat/structure.hpp"

namespace ringlat {

enum class MinimalKind { not_minimal, inert, decomposed, ramified };

inline const char* to_string(MinimalKind kind) {
    switch (kind) {
        case MinimalKind::not_minimal: return "not_minimal";
        case MinimalKind::inert: return "inert";
        case MinimalKind::decomposed: return "decomposed";
        case MinimalKind::ramified: return "ramified";
    }
    return "unknown";
}

struct MinimalClassification {
    MinimalKind kind = MinimalKind::not_minimal;
    /// M = (R:S), maximal in R.
    Ideal crucial;
    /// Ideals of S witnessing the case: {MS} (inert), {M1, M2} (decomposed), {M'} (ramified).
    std::vector<Ideal> witness;
};

namespace detail {

inline bool is_prime_power_degree(std::size_t big, std::size_t small, std::size_t& degree_out) {
    std::size_t d = 0;
    std::size_t acc = 1;
    while (acc < big) {
        acc *= small;
        ++d;
    }
    degree_out = d;
    return acc == big;
}

}  // namespace detail

inline MinimalClassification classify_minimal(const LatticeReport& lattice, const Limits& limits = default_limits()) {
    MinimalClassification out;
    if (lattice.count != 2) return out;
    const Extension& ext = lattice.extension;
    if (!is_integral(ext)) throw Error(ErrorKind::unreachable_case, "minimal extension that is not integral");

    const Ideal m = conductor(ext);
    if (!is_maximal_ideal(m)) throw Error(ErrorKind::classification_failure, "conductor of a minimal extension is not maximal");
    const FiniteRing& s = ext.top();
    const Ideal ms = conductor_in_top(ext);
    const std::size_t q = residue_size(m);
    const std::size_t ms_index = residue_size(ms);

    std::vector<Ideal> above;
    for (const Ideal& n : maximal_ideals(s, limits)) {
        if (is_subset(ms.elements(), n.elements())) above.push_back(n);
    }

    int matches = 0;
    // Inert: MS maximal and S/MS a field extension of R/M of prime degree.
    std::size_t d = 0;
    if (is_maximal_ideal(ms) && detail::is_prime_power_degree(ms_index, q, d) && is_prime_number(d)) {
        out.kind = MinimalKind::inert;
        out.witness = {ms};
        ++matches;
    }
    // Decomposed: MS = M1 ∩ M2 with both residue fields equal to R/M.
    if (above.size() == 2 && ideal_intersection(above[0], above[1]) == ms && residue_size(above[0]) == q &&
        residue_size(above[1]) == q) {
        out.kind = MinimalKind::decomposed;
        out.witness = above;
        ++matches;
    }
    // Ramified: M'² ⊆ MS ⊂ M' with |S/MS| = q² and |S/M'| = q.
    for (const Ideal& mp : above) {
        if (mp == ms || ms_index != q * q || residue_size(mp) != q) continue;
        if (!is_subset(ideal_product(mp, mp).elements(), ms.elements())) continue;
        out.kind = MinimalKind::ramified;
        out.witness = {mp};
        ++matches;
    }
    if (matches != 1) {
        throw Error(ErrorKind::classification_failure,
                    "minimal extension matched " + std::to_string(matches) + " cases");
    }
    out.crucial = m;
    return out;
}

inline MinimalClassification classify_minimal(const Extension& ext, const Limits& limits = default_limits()) {
    return classify_minimal(intermediate_algebras(ext, limits), limits);
}

/// Minimal ramified between local rings (R,M) ⊂ (S,N) with M² = 0, MN = 0 and N² = M,
/// all products taken in S.
inline bool is_special_minimal_ramified(const Extension& ext, const Limits& limits = default_limits()) {
    std::optional<Ideal> m = is_local(ext.base());
    std::optional<Ideal> n = is_local(ext.top());
    if (!m || !n) throw Error(ErrorKind::not_local, "both rings must be local");
    if (classify_minimal(ext, limits).kind != MinimalKind::ramified) return false;
    const Ideal ms = extended_ideal(ext, *m);
    ElementSet m_in_s;
    for (Index r : m->elements()) m_in_s.push_back(ext.embed()(r));
    std::sort(m_in_s.begin(), m_in_s.end());
    return ideal_product(ms, ms).is_zero() && ideal_product(ms, *n).is_zero() &&
           ideal_product(*n, *n).elements() == m_in_s;
}

}  // namespace ringlat
