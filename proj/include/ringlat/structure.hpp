#pragma once

/**
 * @file structure.hpp
 * @brief Idempotents, units, local factors, and the local/field/SPIR tests.
 */

#include <optional>
#include <string>
#include <vector>

#include "ringlat/construct.hpp"
#include "ringlat/ideal.hpp"
#include "ringlat/ring.hpp"

namespace ringlat {

inline ElementSet idempotents(const FiniteRing& r) {
    ElementSet out;
    for (Index a = 0; a < r.order(); ++a) {
        if (r.mul(a, a) == a) out.push_back(a);
    }
    return out;
}

inline bool is_connected(const FiniteRing& r) { return idempotents(r).size() == 2; }

inline bool is_unit(const FiniteRing& r, Index a) {
    for (Index b = 0; b < r.order(); ++b) {
        if (r.mul(a, b) == r.one()) return true;
    }
    return false;
}

inline ElementSet units(const FiniteRing& r) {
    ElementSet out;
    for (Index a = 0; a < r.order(); ++a) {
        if (is_unit(r, a)) out.push_back(a);
    }
    return out;
}

inline bool is_field(const FiniteRing& r) { return units(r).size() + 1 == r.order(); }

/// Atoms of the boolean algebra of idempotents.
inline ElementSet primitive_idempotents(const FiniteRing& r) {
    ElementSet idem = idempotents(r);
    ElementSet out;
    for (Index e : idem) {
        if (e == r.zero()) continue;
        bool atom = std::none_of(idem.begin(), idem.end(), [&](Index f) {
            return f != r.zero() && f != e && r.mul(f, e) == f;
        });
        if (atom) out.push_back(e);
    }
    return out;
}

struct LocalFactor {
    FiniteRing ring;
    /// x ↦ e·x, as a hom R → eR.
    RingHom projection;
    Index idempotent = 0;
    /// Elements of eR inside R (element k of `ring` is elements[k]).
    ElementSet elements;
};

struct LocalDecomposition {
    std::vector<LocalFactor> factors;
    ProductRing product;
    /// R → ∏ eR, verified bijective.
    RingHom iso;
};

/**
 * R ≅ ∏ eR over the primitive idempotents e. Factors are ordered by the
 * least nonzero element of eR (Z/12 gives 9R ≅ Z/4 before 4R ≅ Z/3).
 */
inline LocalDecomposition local_decomposition(const FiniteRing& r, const Limits& limits = default_limits()) {
    struct Pending {
        Index e;
        ElementSet elements;
        Index key;
    };
    std::vector<Pending> pending;
    for (Index e : primitive_idempotents(r)) {
        ElementSet elems;
        for (Index x = 0; x < r.order(); ++x) elems.push_back(r.mul(e, x));
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        Index key = static_cast<Index>(r.order());
        for (Index v : elems) {
            if (v != r.zero()) key = std::min(key, v);
        }
        pending.push_back({e, std::move(elems), key});
    }
    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) { return a.key < b.key; });

    LocalDecomposition out;
    std::vector<FiniteRing> rings;
    for (std::size_t j = 0; j < pending.size(); ++j) {
        const Pending& p = pending[j];
        FiniteRing f = restrict_ring(r, p.elements, p.e, r.label() + " factor " + std::to_string(j + 1));
        std::vector<Index> local(r.order(), 0);
        for (Index k = 0; k < p.elements.size(); ++k) local[p.elements[k]] = k;
        std::vector<Index> map(r.order());
        for (Index x = 0; x < r.order(); ++x) map[x] = local[r.mul(p.e, x)];
        out.factors.push_back({f, RingHom(r, f, std::move(map)), p.e, p.elements});
        rings.push_back(f);
    }
    out.product = product(rings, limits);
    std::vector<RingHom> projections;
    for (const LocalFactor& f : out.factors) projections.push_back(f.projection);
    out.iso = product_hom(r, out.product, projections);
    if (!out.iso.is_injective() || !out.iso.is_surjective()) {
        throw Error(ErrorKind::formula_violation, "local decomposition is not an isomorphism");
    }
    return out;
}

/// The unique maximal ideal (the non-units) when R is local.
inline std::optional<Ideal> is_local(const FiniteRing& r) {
    ElementSet nonunits;
    for (Index a = 0; a < r.order(); ++a) {
        if (!is_unit(r, a)) nonunits.push_back(a);
    }
    std::vector<char> mask = to_mask(nonunits, r.order());
    for (Index a : nonunits) {
        for (Index b : nonunits) {
            if (!mask[r.add(a, b)]) return std::nullopt;
        }
    }
    return Ideal(r, std::move(nonunits));
}

struct SpirWitness {
    Index generator = 0;
    unsigned index = 0;
};

/// Local, not a field, with principal maximal ideal; t is the least index
/// with Rt = M and p the least exponent with t^p = 0.
inline std::optional<SpirWitness> is_spir(const FiniteRing& r) {
    std::optional<Ideal> m = is_local(r);
    if (!m || m->is_zero()) return std::nullopt;
    for (Index t : m->elements()) {
        if (ideal_generated(r, {t}) == *m) {
            SpirWitness w{t, 1};
            for (Index x = t; x != r.zero(); x = r.mul(x, t)) ++w.index;
            return w;
        }
    }
    return std::nullopt;
}

/// Least n with M^n = 0.
inline unsigned nilpotency_index(const FiniteRing& r) {
    std::optional<Ideal> m = is_local(r);
    if (!m) throw Error(ErrorKind::not_local, r.label() + " is not local");
    unsigned n = 1;
    for (Ideal power = *m; !power.is_zero(); power = ideal_product(power, *m)) ++n;
    return n;
}

}  // namespace ringlat
