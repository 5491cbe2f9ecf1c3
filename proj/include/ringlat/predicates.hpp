#pragma once

/**
 * @file predicates.hpp
 * @brief Structural predicates of an extension R ⊆ S: integrality, residue and
 *        spectrum conditions, seminormality, t-closedness, quadratic / Δ / Δ₀,
 *        the R + Rt ideal correspondence, and pointwise minimality.
 */

#include <optional>
#include <vector>

#include "ringlat/extension.hpp"
#include "ringlat/ideal.hpp"
#include "ringlat/lattice.hpp"

namespace ringlat {

/// R-submodule of S spanned by the image of R and by R·x for x in `gens`.
inline ElementSet r_module_span(const Extension& ext, const ElementSet& start, const ElementSet& gens) {
    const FiniteRing& s = ext.top();
    auto span = ring_span_builder(s);
    span.add_all(start);
    for (Index x : gens) {
        for (Index r : ext.image()) span.add(s.mul(r, x));
    }
    return span.sorted();
}

/// Least k with s^k in the R-span of 1, s, ..., s^(k-1); nothing if none.
inline std::optional<unsigned> monic_relation_degree(const Extension& ext, Index x) {
    const FiniteRing& s = ext.top();
    auto span = ring_span_builder(s);
    Index power = s.one();
    for (unsigned k = 0; k <= s.order(); ++k) {
        if (k > 0 && span.contains(power)) return k;
        for (Index r : ext.image()) span.add(s.mul(r, power));
        power = s.mul(power, x);
    }
    return std::nullopt;
}

inline bool is_integral(const Extension& ext) {
    for (Index x = 0; x < ext.top().order(); ++x) {
        if (!monic_relation_degree(ext, x)) return false;
    }
    return true;
}

/// Residue maps R/(Q∩R) → S/Q are isomorphisms for every prime Q of S.
inline bool is_infra_integral(const Extension& ext, const Limits& limits = default_limits()) {
    if (!is_integral(ext)) return false;
    for (const Ideal& q : spectrum(ext.top(), limits).primes) {
        Ideal p = contraction(ext.embed(), q);
        if (residue_size(p) != residue_size(q)) return false;
    }
    return true;
}

/// Infra-integral with Q ↦ Q∩R a bijection Spec(S) → Spec(R).
inline bool is_subintegral(const Extension& ext, const Limits& limits = default_limits()) {
    if (!is_infra_integral(ext, limits)) return false;
    std::vector<Ideal> contracted;
    for (const Ideal& q : spectrum(ext.top(), limits).primes) contracted.push_back(contraction(ext.embed(), q));
    std::vector<Ideal> primes_r = spectrum(ext.base(), limits).primes;
    if (contracted.size() != primes_r.size()) return false;
    for (const Ideal& p : primes_r) {
        if (std::count(contracted.begin(), contracted.end(), p) != 1) return false;
    }
    return true;
}

/// b², b³ ∈ R forces b ∈ R.
inline bool is_seminormal(const Extension& ext) {
    const FiniteRing& s = ext.top();
    for (Index b = 0; b < s.order(); ++b) {
        if (ext.in_base(b)) continue;
        const Index b2 = s.mul(b, b);
        if (ext.in_base(b2) && ext.in_base(s.mul(b2, b))) return false;
    }
    return true;
}

/// b² − rb, b³ − rb² ∈ R for some r ∈ R forces b ∈ R.
inline bool is_tclosed(const Extension& ext) {
    const FiniteRing& s = ext.top();
    for (Index b = 0; b < s.order(); ++b) {
        if (ext.in_base(b)) continue;
        const Index b2 = s.mul(b, b);
        const Index b3 = s.mul(b2, b);
        for (Index r : ext.image()) {
            if (ext.in_base(s.sub(b2, s.mul(r, b))) && ext.in_base(s.sub(b3, s.mul(r, b2)))) return false;
        }
    }
    return true;
}

/// R + Rt is a ring for every t ∈ S.
inline bool is_quadratic(const Extension& ext) {
    const FiniteRing& s = ext.top();
    for (Index t = 0; t < s.order(); ++t) {
        if (ext.in_base(t)) continue;
        ElementSet span = r_module_span(ext, ext.image(), {t});
        if (!is_mul_closed(s, span)) return false;
    }
    return true;
}

/// T₁ + T₂ ∈ [R,S] for all T₁, T₂ ∈ [R,S].
inline bool is_delta(const LatticeReport& lattice) {
    const FiniteRing& s = lattice.extension.top();
    for (std::size_t i = 0; i < lattice.count; ++i) {
        for (std::size_t j = i + 1; j < lattice.count; ++j) {
            auto span = ring_span_builder(s);
            span.add_all(lattice.nodes[i]);
            span.add_all(lattice.nodes[j]);
            if (!lattice.index_of(span.sorted())) return false;
        }
    }
    return true;
}

inline bool is_delta(const Extension& ext, const Limits& limits = default_limits()) {
    return is_delta(intermediate_algebras(ext, limits));
}

/// R-submodules of S containing R. These correspond to the submodules of S/R.
inline std::vector<ElementSet> intermediate_modules(const Extension& ext, const Limits& limits = default_limits()) {
    require_order(ext.top().order(), limits.max_lattice_order, "top ring for submodule enumeration");
    auto adjoin = [&](const ElementSet& t, Index x) { return r_module_span(ext, t, {x}); };
    return adjunction_fixpoint(ext.image(), ext.top().order(), adjoin, limits);
}

/// Every R-submodule of S containing R is a ring.
inline bool is_delta0(const Extension& ext, const Limits& limits = default_limits()) {
    for (const ElementSet& m : intermediate_modules(ext, limits)) {
        if (!is_mul_closed(ext.top(), m)) return false;
    }
    return true;
}

struct IdealNodePair {
    Ideal ideal;
    std::size_t node = 0;
};

struct ConductorIdealBijection {
    Index generator = 0;
    Ideal conductor;
    /// One entry per ideal J ⊇ (R:S) of R, i.e. per ideal of R/(R:S).
    std::vector<IdealNodePair> pairs;
    bool bijective = false;
};

/// For S = R + Rt: J ↦ R + Jt between ideals of R containing the conductor and [R,S].
inline ConductorIdealBijection conductor_ideal_bijection(const Extension& ext, const Limits& limits = default_limits()) {
    const FiniteRing& s = ext.top();
    std::optional<Index> gen;
    for (Index t = 0; t < s.order() && !gen; ++t) {
        if (r_module_span(ext, ext.image(), {t}).size() == s.order()) gen = t;
    }
    if (!gen) throw Error(ErrorKind::not_applicable, "S is not of the form R + Rt");
    LatticeReport lattice = intermediate_algebras(ext, limits);
    ConductorIdealBijection out;
    out.generator = *gen;
    out.conductor = conductor(ext);
    std::vector<char> hit(lattice.count, 0);
    bool injective = true;
    bool into = true;
    for (const Ideal& j : all_ideals(ext.base(), limits)) {
        if (!is_subset(out.conductor.elements(), j.elements())) continue;
        auto span = ring_span_builder(s);
        span.add_all(ext.image());
        for (Index r : j.elements()) span.add(s.mul(ext.embed()(r), *gen));
        std::optional<std::size_t> node = lattice.index_of(span.sorted());
        if (!node) {
            into = false;
            continue;
        }
        if (hit[*node]) injective = false;
        hit[*node] = 1;
        out.pairs.push_back({j, *node});
    }
    bool onto = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    out.bijective = into && injective && onto;
    return out;
}

/// R ⊂ R[t] is minimal for every t ∈ S outside R.
inline bool is_pointwise_minimal(const LatticeReport& lattice) {
    const Extension& ext = lattice.extension;
    if (ext.is_identity()) return false;
    std::vector<std::size_t> atoms = lattice.upper_covers(lattice.bottom());
    for (Index t = 0; t < ext.top().order(); ++t) {
        if (ext.in_base(t)) continue;
        std::optional<std::size_t> node = lattice.index_of(generate_subring(ext.top(), ext.image(), {t}));
        if (!node || std::find(atoms.begin(), atoms.end(), *node) == atoms.end()) return false;
    }
    return true;
}

inline bool is_pointwise_minimal(const Extension& ext, const Limits& limits = default_limits()) {
    return is_pointwise_minimal(intermediate_algebras(ext, limits));
}

}  // namespace ringlat
