#pragma once

/**
 * @file closures.hpp
 * @brief Seminormalization, t-closure, integral closure and the canonical
 *        decomposition R ⊆ ⁺R ⊆ ᵗR ⊆ S, plus checks of the closure formulas
 *        for diagonal maps into products.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "ringlat/construct.hpp"
#include "ringlat/extension.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/predicates.hpp"
#include "ringlat/structure.hpp"

namespace ringlat {

struct ClosureOptions {
    /// Process candidates in a shuffled order instead of ascending index.
    std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

template <class Accept>
Subalgebra closure_fixpoint(const Extension& ext, Accept accept, const ClosureOptions& options) {
    const FiniteRing& s = ext.top();
    std::vector<Index> order(s.order());
    std::iota(order.begin(), order.end(), 0);
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    ElementSet t = ext.image();
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<char> mask = to_mask(t, s.order());
        for (Index b : order) {
            if (mask[b] || !accept(mask, b)) continue;
            t = generate_subring(s, t, {b});
            mask = to_mask(t, s.order());
            changed = true;
        }
    }
    return Subalgebra{s, std::move(t)};
}

}  // namespace detail

/// Grows T by every b with b², b³ ∈ T until stable.
inline Subalgebra seminormalization(const Extension& ext, const ClosureOptions& options = {}) {
    const FiniteRing& s = ext.top();
    return detail::closure_fixpoint(
        ext,
        [&](const std::vector<char>& in, Index b) {
            const Index b2 = s.mul(b, b);
            return in[b2] && in[s.mul(b2, b)];
        },
        options);
}

/// Grows T by every b with b² − rb, b³ − rb² ∈ T for some r ∈ T until stable.
inline Subalgebra t_closure(const Extension& ext, const ClosureOptions& options = {}) {
    const FiniteRing& s = ext.top();
    return detail::closure_fixpoint(
        ext,
        [&](const std::vector<char>& in, Index b) {
            const Index b2 = s.mul(b, b);
            const Index b3 = s.mul(b2, b);
            for (Index r = 0; r < s.order(); ++r) {
                if (in[r] && in[s.sub(b2, s.mul(r, b))] && in[s.sub(b3, s.mul(r, b2))]) return true;
            }
            return false;
        },
        options);
}

/// Elements of S satisfying a monic relation over R.
inline Subalgebra integral_closure(const Extension& ext) {
    ElementSet out;
    for (Index x = 0; x < ext.top().order(); ++x) {
        if (monic_relation_degree(ext, x)) out.push_back(x);
    }
    return Subalgebra{ext.top(), std::move(out)};
}

struct CanonicalDecomposition {
    Subalgebra base;
    Subalgebra seminormalization;
    Subalgebra tclosure;
    Subalgebra top;
};

inline CanonicalDecomposition canonical_decomposition(const Extension& ext) {
    ElementSet all(ext.top().order());
    std::iota(all.begin(), all.end(), 0);
    CanonicalDecomposition d{Subalgebra{ext.top(), ext.image()}, seminormalization(ext), t_closure(ext),
                             Subalgebra{ext.top(), std::move(all)}};
    if (!is_subset(d.base.elements, d.seminormalization.elements) ||
        !is_subset(d.seminormalization.elements, d.tclosure.elements)) {
        throw Error(ErrorKind::formula_violation, "closures do not form a chain");
    }
    return d;
}

/// ∏ Rᵢ ⊆ ∏ Sᵢ, componentwise.
inline Extension product_extension(const std::vector<Extension>& parts, const Limits& limits = default_limits()) {
    std::vector<FiniteRing> bases;
    std::vector<FiniteRing> tops;
    for (const Extension& e : parts) {
        bases.push_back(e.base());
        tops.push_back(e.top());
    }
    ProductRing pb = product(bases, limits);
    ProductRing pt = product(tops, limits);
    std::vector<Index> map(pb.ring.order());
    for (Index x = 0; x < map.size(); ++x) {
        std::vector<Index> c = pb.decode(x);
        for (std::size_t j = 0; j < parts.size(); ++j) c[j] = parts[j].embed()(c[j]);
        map[x] = pt.encode(c);
    }
    return Extension(RingHom(pb.ring, pt.ring, std::move(map)));
}

struct DiagonalFormulaReport {
    /// R → ∏ Rᵢ, r ↦ (fᵢ(r)).
    Extension diagonal;
    ElementSet seminormalization;
    /// R + ∏ Nᵢ
    ElementSet seminormalization_formula;
    ElementSet tclosure;
    /// ∏ ᵗRᵢ
    ElementSet tclosure_formula;
    /// ∏ ⁺Rᵢ; differs from the seminormalization as soon as two factors are proper.
    ElementSet product_of_seminormalizations;
    bool seminormalization_holds = false;
    bool tclosure_holds = false;
    bool equals_product_of_seminormalizations = false;
};

/**
 * For a local ring R and subintegral extensions fᵢ : R → Rᵢ, compares the
 * closures of R in ∏ Rᵢ with R + ∏ Nᵢ (Nᵢ the maximal ideal of Rᵢ) and with
 * ∏ ᵗRᵢ.
 */
inline DiagonalFormulaReport verify_diagonal_formulas(const FiniteRing& r, const std::vector<RingHom>& maps,
                                                      const Limits& limits = default_limits()) {
    if (maps.empty()) throw Error(ErrorKind::precondition, "at least one factor is required");
    if (!is_local(r)) throw Error(ErrorKind::precondition, "base ring must be local");
    std::vector<FiniteRing> factors;
    std::vector<ElementSet> maximals;
    std::vector<ElementSet> tclosures;
    std::vector<ElementSet> seminormalizations;
    for (const RingHom& f : maps) {
        Extension e(f);
        if (!is_subintegral(e, limits)) throw Error(ErrorKind::precondition, "each factor must be subintegral over R");
        factors.push_back(f.target());
        maximals.push_back(is_local(f.target())->elements());
        tclosures.push_back(t_closure(e).elements);
        seminormalizations.push_back(seminormalization(e).elements);
    }
    ProductRing p = product(factors, limits);
    DiagonalFormulaReport out;
    out.diagonal = Extension(product_hom(r, p, maps));
    out.seminormalization = seminormalization(out.diagonal).elements;
    out.tclosure = t_closure(out.diagonal).elements;
    auto span = ring_span_builder(p.ring);
    span.add_all(out.diagonal.image());
    span.add_all(p.product_set(maximals));
    out.seminormalization_formula = span.sorted();
    out.tclosure_formula = p.product_set(tclosures);
    out.product_of_seminormalizations = p.product_set(seminormalizations);
    out.seminormalization_holds = out.seminormalization == out.seminormalization_formula;
    out.tclosure_holds = out.tclosure == out.tclosure_formula;
    out.equals_product_of_seminormalizations = out.seminormalization == out.product_of_seminormalizations;
    return out;
}

}  // namespace ringlat
