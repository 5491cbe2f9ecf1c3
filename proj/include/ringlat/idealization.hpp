#pragma once

/**
 * @file idealization.hpp
 * @brief The idealization R(+)M with (r,m)(s,n) = (rs, rn + sm), and the
 *        correspondence between submodules N of M and subalgebras R(+)N.
 */

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ringlat/construct.hpp"
#include "ringlat/extension.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/module.hpp"
#include "ringlat/structure.hpp"

namespace ringlat {

struct Idealization {
    FiniteRing ring;
    /// r ↦ (r, 0)
    RingHom embedding;
    FiniteModule module;

    /// (r, m) is numbered r·|M| + m.
    Index pair(Index r, Index m) const { return static_cast<Index>(r * module.order() + m); }
    Index first(Index x) const { return static_cast<Index>(x / module.order()); }
    Index second(Index x) const { return static_cast<Index>(x % module.order()); }
    Extension extension() const { return Extension(embedding); }
};

inline Idealization idealize(const FiniteRing& r, const FiniteModule& m, const Limits& limits = default_limits()) {
    const std::size_t nm = m.order();
    const std::size_t n = r.order() * nm;
    require_order(n, limits.max_order, "idealization");
    std::vector<Index> add(n * n);
    std::vector<Index> mul(n * n);
    for (Index x = 0; x < n; ++x) {
        const Index a = x / nm;
        const Index u = x % nm;
        for (Index y = 0; y < n; ++y) {
            const Index b = y / nm;
            const Index v = y % nm;
            add[x * n + y] = static_cast<Index>(r.add(a, b) * nm + m.add(u, v));
            mul[x * n + y] = static_cast<Index>(r.mul(a, b) * nm + m.add(m.act(a, v), m.act(b, u)));
        }
    }
    FiniteRing ring = FiniteRing::from_tables(n, std::move(add), std::move(mul),
                                              static_cast<Index>(r.zero() * nm + m.zero()),
                                              static_cast<Index>(r.one() * nm + m.zero()),
                                              "idealize(" + r.label() + ", " + m.label() + ")");
    std::vector<Index> map(r.order());
    for (Index a = 0; a < r.order(); ++a) map[a] = static_cast<Index>(a * nm + m.zero());
    return Idealization{ring, RingHom(r, ring, std::move(map)), m};
}

/// R(+)N inside R(+)M.
inline ElementSet subalgebra_of_submodule(const Idealization& id, const ElementSet& n) {
    ElementSet out;
    for (Index r = 0; r < id.embedding.source().order(); ++r) {
        for (Index v : n) out.push_back(id.pair(r, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct IdealizationBijection {
    std::size_t submodule_count = 0;
    std::size_t lattice_count = 0;
    std::size_t module_length = 0;
    std::size_t lattice_length = 0;
    /// N ↦ R(+)N hits every node of [R, R(+)M] exactly once.
    bool bijective = false;
    /// N ⊆ N' iff R(+)N ⊆ R(+)N'.
    bool order_preserving = false;
};

inline IdealizationBijection idealization_lattice_bijection(const Idealization& id,
                                                            const Limits& limits = default_limits()) {
    SubmoduleLattice subs = submodules(id.module, limits);
    LatticeReport lattice = intermediate_algebras(id.extension(), limits);
    IdealizationBijection out;
    out.submodule_count = subs.count;
    out.lattice_count = lattice.count;
    out.module_length = subs.length;
    out.lattice_length = lattice.length;
    std::vector<std::size_t> image(subs.count);
    std::vector<char> hit(lattice.count, 0);
    bool ok = subs.count == lattice.count;
    for (std::size_t i = 0; i < subs.count && ok; ++i) {
        std::optional<std::size_t> v = lattice.index_of(subalgebra_of_submodule(id, subs.nodes[i]));
        if (!v || hit[*v]) {
            ok = false;
            break;
        }
        hit[*v] = 1;
        image[i] = *v;
    }
    out.bijective = ok;
    out.order_preserving = ok;
    for (std::size_t i = 0; i < subs.count && out.order_preserving; ++i) {
        for (std::size_t j = 0; j < subs.count; ++j) {
            if (is_subset(subs.nodes[i], subs.nodes[j]) !=
                is_subset(lattice.nodes[image[i]], lattice.nodes[image[j]])) {
                out.order_preserving = false;
                break;
            }
        }
    }
    return out;
}

struct IntervalReport {
    std::size_t interval_length = 0;
    std::size_t interval_count = 0;
    std::size_t quotient_length = 0;
    std::size_t quotient_count = 0;
    bool holds = false;
};

/// ℓ[R(+)N, R(+)M] against L(M/N), and |[R(+)N, R(+)M]| against ν(M/N).
inline IntervalReport interval_length(const Idealization& id, const ElementSet& n, const Limits& limits = default_limits()) {
    if (!is_submodule(id.module, n)) throw Error(ErrorKind::precondition, "N is not a submodule of M");
    ElementSet all(id.ring.order());
    std::iota(all.begin(), all.end(), 0);
    LatticeReport lattice = intermediate_algebras(sub_extension(id.ring, subalgebra_of_submodule(id, n), all), limits);
    FiniteModule q = quotient_module(id.module, n).module;
    SubmoduleLattice qs = submodules(q, limits);
    IntervalReport out;
    out.interval_length = lattice.length;
    out.interval_count = lattice.count;
    out.quotient_length = module_length(q);
    out.quotient_count = qs.count;
    out.holds = out.interval_length == out.quotient_length && out.interval_count == out.quotient_count &&
                qs.length == out.quotient_length;
    return out;
}

struct UniserialReport {
    Index generator = 0;
    Ideal annihilator;
    /// P^j·e for j = 0, 1, ... until it reaches 0.
    std::vector<ElementSet> chain;
    std::size_t submodule_count = 0;
    std::size_t quotient_ideal_count = 0;
    bool chain_matches = false;
    bool count_matches = false;
};

/// For a cyclic module M = Re over a local ring (R,P): the submodules are
/// exactly the P^j·e, and ν(M) = ν(R/C) with C = (0:e).
inline UniserialReport uniserial_structure_check(const FiniteModule& m, const Limits& limits = default_limits()) {
    const FiniteRing& r = m.ring();
    std::optional<Ideal> p = is_local(r);
    if (!p) throw Error(ErrorKind::not_local, "base ring must be local");
    std::optional<Index> e = is_cyclic(m);
    if (!e) throw Error(ErrorKind::not_applicable, "module is not cyclic");
    UniserialReport out;
    out.generator = *e;
    out.annihilator = annihilator_of(m, *e);
    Ideal power = whole_ideal(r);
    for (;;) {
        ElementSet pe;
        for (Index x : power.elements()) pe.push_back(m.act(x, *e));
        ElementSet sub = submodule_generated(m, pe);
        if (!out.chain.empty() && sub == out.chain.back()) break;
        out.chain.push_back(sub);
        power = ideal_product(power, *p);
    }
    SubmoduleLattice subs = submodules(m, limits);
    out.submodule_count = subs.count;
    out.quotient_ideal_count = out.annihilator.is_whole() ? 1 : all_ideals(quotient(r, out.annihilator).ring, limits).size();
    std::vector<ElementSet> sorted_chain = out.chain;
    std::sort(sorted_chain.begin(), sorted_chain.end(), canonical_less);
    out.chain_matches = sorted_chain == subs.nodes;
    out.count_matches = out.submodule_count == out.quotient_ideal_count;
    return out;
}

struct CensusReport {
    std::size_t submodule_count = 0;
    std::size_t expected = 0;
    /// |[kⁿ, kⁿ(+)E]|, when the idealization fits in the lattice bound.
    std::optional<std::size_t> lattice_count;
    bool skipped_lattice = false;
};

/// E = kⁿ over R = kⁿ with componentwise action; ν(E) = 2ⁿ.
inline CensusReport census_componentwise(const FiniteRing& k, std::size_t n, const Limits& limits = default_limits()) {
    ProductRing r = power(k, n, limits);
    FiniteModule e = regular_module(r.ring);
    CensusReport out;
    out.submodule_count = submodules(e, limits).count;
    out.expected = std::size_t{1} << n;
    if (r.ring.order() * e.order() <= limits.max_lattice_order) {
        out.lattice_count = intermediate_algebras(idealize(r.ring, e, limits).extension(), limits).count;
    } else {
        out.skipped_lattice = true;
    }
    return out;
}

}  // namespace ringlat
