#pragma once

/**
 * @file crt.hpp
 * @brief Extensions R ⊆ ∏ R/Iⱼ built from separating families of ideals:
 *        conductors, the pairwise minimality criterion, the weak CRT, the
 *        reduction to zero conductor and the seminormalization R + M𝓡.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlat/closures.hpp"
#include "ringlat/construct.hpp"
#include "ringlat/extension.hpp"
#include "ringlat/ideal.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/structure.hpp"

namespace ringlat {

struct SeparatingFamily {
    FiniteRing ring;
    std::vector<Ideal> ideals;
    /// Jⱼ = ∩_{k≠j} I_k
    std::vector<Ideal> complements;
};

struct CrtExtension {
    SeparatingFamily family;
    Extension extension;
    ProductRing product;
    /// R → R/Iⱼ for each j.
    std::vector<RingHom> quotient_maps;
    Ideal conductor;
    /// Set when ∩Iⱼ ≠ 0 and the input ring was replaced by R/∩Iⱼ.
    bool normalized = false;
    /// Original ring → family.ring (identity when not normalized).
    RingHom normalization;
};

namespace detail {

inline std::vector<Ideal> complements_of(const FiniteRing& r, const std::vector<Ideal>& ideals) {
    std::vector<Ideal> out;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
        Ideal acc = whole_ideal(r);
        for (std::size_t k = 0; k < ideals.size(); ++k) {
            if (k != j) acc = ideal_intersection(acc, ideals[k]);
        }
        out.push_back(acc);
    }
    return out;
}

inline CrtExtension build_crt(const FiniteRing& input, const std::vector<Ideal>& input_ideals, const Limits& limits) {
    for (const Ideal& i : input_ideals) {
        if (i.is_whole()) throw Error(ErrorKind::invalid_family, "an ideal of the family equals the whole ring");
    }
    CrtExtension out;
    Ideal common = whole_ideal(input);
    for (const Ideal& i : input_ideals) common = ideal_intersection(common, i);
    FiniteRing r = input;
    std::vector<Ideal> ideals = input_ideals;
    out.normalization = identity_hom(input);
    if (!common.is_zero()) {
        QuotientRing q = quotient(input, common, "(" + input.label() + ")/I");
        r = q.ring;
        for (Ideal& i : ideals) i = image_ideal(q.projection, i);
        out.normalized = true;
        out.normalization = q.projection;
    }
    std::vector<FiniteRing> factors;
    for (const Ideal& i : ideals) {
        QuotientRing q = quotient(r, i, "(" + r.label() + ")/I");
        factors.push_back(q.ring);
        out.quotient_maps.push_back(q.projection);
    }
    out.product = product(factors, limits);
    out.extension = Extension(product_hom(r, out.product, out.quotient_maps));
    out.family = SeparatingFamily{r, ideals, complements_of(r, ideals)};
    out.conductor = conductor(out.extension);
    return out;
}

}  // namespace detail

/// Rejects n < 2 and Iⱼ = R; replaces R by R/∩Iⱼ when the intersection is nonzero.
inline CrtExtension make_crt(const FiniteRing& r, const std::vector<Ideal>& ideals,
                             const Limits& limits = default_limits()) {
    if (ideals.size() < 2) throw Error(ErrorKind::invalid_family, "a separating family needs at least two ideals");
    return detail::build_crt(r, ideals, limits);
}

/// Ideals given by generator lists.
inline CrtExtension make_crt(const FiniteRing& r, const std::vector<ElementSet>& generators,
                             const Limits& limits = default_limits()) {
    std::vector<Ideal> ideals;
    for (const ElementSet& g : generators) ideals.push_back(ideal_generated(r, g));
    return make_crt(r, ideals, limits);
}

/// ΣJⱼ, checked against ∩(Iⱼ + Jⱼ) and the direct conductor.
inline Ideal conductor_by_formula(const CrtExtension& crt) {
    const SeparatingFamily& fam = crt.family;
    Ideal sum = zero_ideal(fam.ring);
    Ideal inter = whole_ideal(fam.ring);
    for (std::size_t j = 0; j < fam.ideals.size(); ++j) {
        sum = ideal_sum(sum, fam.complements[j]);
        inter = ideal_intersection(inter, ideal_sum(fam.ideals[j], fam.complements[j]));
    }
    if (!(sum == inter) || !(sum == crt.conductor)) {
        throw Error(ErrorKind::formula_violation, "conductor formulas disagree");
    }
    return sum;
}

struct CrtMinimality {
    bool minimal = false;
    /// 0-based (j0, k0), j0 < k0: the only pair whose sum is not R, and it is maximal.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Pairwise criterion for n > 2: exactly one pair has a maximal sum and all
/// other pairs are comaximal.
inline CrtMinimality is_minimal_crt(const SeparatingFamily& fam) {
    const std::size_t n = fam.ideals.size();
    if (n <= 2) throw Error(ErrorKind::precondition, "use the two-ideal test for n = 2");
    CrtMinimality out;
    std::size_t proper_pairs = 0;
    std::optional<std::pair<std::size_t, std::size_t>> candidate;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            Ideal s = ideal_sum(fam.ideals[j], fam.ideals[k]);
            if (s.is_whole()) continue;
            ++proper_pairs;
            if (!candidate && is_maximal_ideal(s)) candidate = std::make_pair(j, k);
        }
    }
    out.minimal = proper_pairs == 1 && candidate.has_value();
    if (out.minimal) out.witness = candidate;
    return out;
}

/// Two-ideal test: I ∩ J = 0 and I + J maximal.
inline bool is_minimal_crt2(const SeparatingFamily& fam) {
    if (fam.ideals.size() != 2) throw Error(ErrorKind::precondition, "the two-ideal test needs exactly two ideals");
    return ideal_intersection(fam.ideals[0], fam.ideals[1]).is_zero() &&
           is_maximal_ideal(ideal_sum(fam.ideals[0], fam.ideals[1]));
}

/// Iⱼ + ∩_{k≠j} I_k = ∩_{k≠j} (Iⱼ + I_k) for each j.
inline std::vector<bool> weak_crt_check(const SeparatingFamily& fam) {
    const FiniteRing& r = fam.ring;
    std::vector<bool> out;
    for (std::size_t j = 0; j < fam.ideals.size(); ++j) {
        Ideal rhs = whole_ideal(r);
        for (std::size_t k = 0; k < fam.ideals.size(); ++k) {
            if (k != j) rhs = ideal_intersection(rhs, ideal_sum(fam.ideals[j], fam.ideals[k]));
        }
        out.push_back(ideal_sum(fam.ideals[j], fam.complements[j]) == rhs);
    }
    return out;
}

struct TwoIdealCount {
    /// Number of ideals of R/(I+J), or 1 when I + J = R.
    std::size_t expected = 1;
    bool comaximal = false;
    bool quotient_is_field = false;
    std::optional<SpirWitness> spir;
};

/// Predicted |[R, R/I × R/J]| for a two-ideal family.
inline TwoIdealCount two_ideal_count(const SeparatingFamily& fam, const Limits& limits = default_limits()) {
    if (fam.ideals.size() != 2) throw Error(ErrorKind::precondition, "the count needs exactly two ideals");
    TwoIdealCount out;
    Ideal s = ideal_sum(fam.ideals[0], fam.ideals[1]);
    if (s.is_whole()) {
        out.comaximal = true;
        return out;
    }
    FiniteRing q = quotient(fam.ring, s).ring;
    out.expected = all_ideals(q, limits).size();
    out.quotient_is_field = is_field(q);
    out.spir = is_spir(q);
    return out;
}

struct ZeroConductorReduction {
    Ideal conductor;
    /// C = R: the original extension is an isomorphism.
    bool crt_isomorphism = false;
    std::optional<QuotientRing> base_projection;
    /// R/C ⊆ ∏ R/(Iⱼ+Jⱼ) over the j with Iⱼ + Jⱼ ≠ R.
    std::optional<CrtExtension> reduced;
    /// 𝓡 → 𝓡', componentwise reduction.
    std::optional<RingHom> top_map;
    std::vector<std::size_t> kept_indices;
};

inline ZeroConductorReduction reduce_to_zero_conductor(const CrtExtension& crt, const Limits& limits = default_limits()) {
    const SeparatingFamily& fam = crt.family;
    ZeroConductorReduction out;
    out.conductor = conductor_by_formula(crt);
    if (out.conductor.is_whole()) {
        out.crt_isomorphism = true;
        return out;
    }
    QuotientRing q = quotient(fam.ring, out.conductor, "(" + fam.ring.label() + ")/C");
    std::vector<Ideal> images;
    for (std::size_t j = 0; j < fam.ideals.size(); ++j) {
        Ideal big = ideal_sum(fam.ideals[j], fam.complements[j]);
        if (big.is_whole()) continue;
        out.kept_indices.push_back(j);
        images.push_back(image_ideal(q.projection, big));
    }
    CrtExtension reduced = detail::build_crt(q.ring, images, limits);
    // A component of 𝓡 is a coset of Iⱼ; any representative maps to the same
    // coset of Iⱼ + Jⱼ.
    std::vector<std::vector<Index>> representative(fam.ideals.size());
    for (std::size_t j = 0; j < fam.ideals.size(); ++j) {
        const RingHom& pj = crt.quotient_maps[j];
        representative[j].assign(pj.target().order(), 0);
        for (Index x = fam.ring.order(); x-- > 0;) representative[j][pj(x)] = x;
    }
    std::vector<Index> map(crt.product.ring.order());
    std::vector<Index> comp(out.kept_indices.size());
    for (Index x = 0; x < map.size(); ++x) {
        std::vector<Index> c = crt.product.decode(x);
        for (std::size_t k = 0; k < out.kept_indices.size(); ++k) {
            const std::size_t j = out.kept_indices[k];
            comp[k] = reduced.quotient_maps[k](q.projection(representative[j][c[j]]));
        }
        map[x] = reduced.product.encode(comp);
    }
    out.top_map = RingHom(crt.product.ring, reduced.product.ring, std::move(map));
    out.base_projection = q;
    out.reduced = std::move(reduced);
    return out;
}

/// T ↦ image of T under 𝓡 → 𝓡' is a bijection [R,𝓡] → [R/C,𝓡'].
inline bool reduction_preserves_lattice(const CrtExtension& crt, const ZeroConductorReduction& red,
                                        const Limits& limits = default_limits()) {
    LatticeReport original = intermediate_algebras(crt.extension, limits);
    if (red.crt_isomorphism) return original.count == 1;
    LatticeReport reduced = intermediate_algebras(red.reduced->extension, limits);
    if (original.count != reduced.count) return false;
    std::vector<char> hit(reduced.count, 0);
    for (const ElementSet& t : original.nodes) {
        ElementSet img;
        for (Index x : t) img.push_back((*red.top_map)(x));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        std::optional<std::size_t> v = reduced.index_of(img);
        if (!v || hit[*v]) return false;
        hit[*v] = 1;
    }
    return true;
}

struct CrtSeminormalization {
    ElementSet formula;
    ElementSet fixpoint;
    Ideal conductor_of_t;
    Ideal annihilator_of_m;
    bool seminormalization_holds = false;
    bool conductor_holds = false;
};

/// For local (R,M) with zero conductor: T = R + M𝓡 equals the seminormalization
/// and (R:T) = (0:M).
inline CrtSeminormalization seminormalization_of_crt(const CrtExtension& crt) {
    const FiniteRing& r = crt.family.ring;
    std::optional<Ideal> m = is_local(r);
    if (!m) throw Error(ErrorKind::precondition, "base ring must be local");
    if (!crt.conductor.is_zero()) throw Error(ErrorKind::precondition, "conductor must be zero");
    const Extension& ext = crt.extension;
    CrtSeminormalization out;
    auto span = ring_span_builder(ext.top());
    span.add_all(ext.image());
    span.add_all(extended_ideal(ext, *m).elements());
    out.formula = span.sorted();
    out.fixpoint = seminormalization(ext).elements;
    out.conductor_of_t = conductor(lower_extension(ext, out.formula));
    out.annihilator_of_m = colon(zero_ideal(r), *m);
    out.seminormalization_holds = out.formula == out.fixpoint;
    out.conductor_holds = out.conductor_of_t == out.annihilator_of_m;
    return out;
}

}  // namespace ringlat
