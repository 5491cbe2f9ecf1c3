#pragma once

/**
 * @file construct.hpp
 * @brief Ring constructors: Z/n, GF(p^k), direct products, polynomial
 *        quotients R[X]/(f, g1, ...), and quotients by ideals.
 *
 * Every constructor produces canonical element numberings so that labels and
 * JSON output are reproducible:
 *  - Z/n: residues 0..n-1.
 *  - R[X]/(f): coefficient tuples (c_0..c_{d-1}) numbered Σ c_i |R|^i.
 *  - R_1 × ... × R_n: tuples in lexicographic order, first factor most significant.
 *  - R/I: cosets ordered by their least member.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ringlat/ideal.hpp"
#include "ringlat/poly.hpp"
#include "ringlat/ring.hpp"

namespace ringlat {

inline bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline FiniteRing make_zmod(std::int64_t n, const Limits& limits = default_limits()) {
    if (n < 2) throw Error(ErrorKind::invalid_order, "Z/n needs n >= 2, got " + std::to_string(n));
    const auto order = static_cast<std::size_t>(n);
    require_order(order, limits.max_order, "Z/" + std::to_string(n));
    std::vector<Index> add(order * order);
    std::vector<Index> mul(order * order);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            add[a * order + b] = static_cast<Index>((a + b) % order);
            mul[a * order + b] = static_cast<Index>((a * b) % order);
        }
    }
    return FiniteRing::from_tables(order, std::move(add), std::move(mul), 0, 1, "Z/" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Products

struct ProductRing {
    FiniteRing ring;
    std::vector<FiniteRing> factors;
    std::vector<RingHom> projections;
    /// r ↦ (r, ..., r); present when all factors have identical tables.
    std::optional<RingHom> diagonal;

    Index encode(const std::vector<Index>& components) const {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < factors.size(); ++j) idx = idx * factors[j].order() + components[j];
        return static_cast<Index>(idx);
    }

    std::vector<Index> decode(Index idx) const {
        std::vector<Index> components(factors.size());
        std::size_t rest = idx;
        for (std::size_t j = factors.size(); j-- > 0;) {
            components[j] = static_cast<Index>(rest % factors[j].order());
            rest /= factors[j].order();
        }
        return components;
    }

    /// Tuples (x_1, ..., x_n) with x_j ∈ sets[j].
    ElementSet product_set(const std::vector<ElementSet>& sets) const {
        ElementSet out{};
        std::vector<Index> tuple(factors.size());
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == factors.size()) {
                out.push_back(encode(tuple));
                return;
            }
            for (Index v : sets[j]) {
                tuple[j] = v;
                self(self, j + 1);
            }
        };
        rec(rec, 0);
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline std::string product_label(const std::vector<FiniteRing>& factors) {
    std::string label;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j) label += " x ";
        const std::string& l = factors[j].label();
        bool wrap = l.find(' ') != std::string::npos;
        label += wrap ? "(" + l + ")" : l;
    }
    return label;
}

inline ProductRing product(const std::vector<FiniteRing>& factors, const Limits& limits = default_limits()) {
    if (factors.empty()) throw Error(ErrorKind::invalid_order, "product of an empty factor list");
    std::size_t order = 1;
    for (const FiniteRing& f : factors) {
        order *= f.order();
        require_order(order, limits.max_order, "product ring");
    }
    ProductRing p;
    p.factors = factors;
    std::vector<Index> add(order * order);
    std::vector<Index> mul(order * order);
    std::vector<std::vector<Index>> tuples(order);
    for (Index x = 0; x < order; ++x) tuples[x] = p.decode(x);
    std::vector<Index> s(factors.size());
    std::vector<Index> m(factors.size());
    for (Index a = 0; a < order; ++a) {
        for (Index b = 0; b < order; ++b) {
            for (std::size_t j = 0; j < factors.size(); ++j) {
                s[j] = factors[j].add(tuples[a][j], tuples[b][j]);
                m[j] = factors[j].mul(tuples[a][j], tuples[b][j]);
            }
            add[a * order + b] = p.encode(s);
            mul[a * order + b] = p.encode(m);
        }
    }
    std::vector<Index> zeros(factors.size());
    std::vector<Index> ones(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) {
        zeros[j] = factors[j].zero();
        ones[j] = factors[j].one();
    }
    p.ring = FiniteRing::from_tables(order, std::move(add), std::move(mul), p.encode(zeros), p.encode(ones),
                                     product_label(factors));
    for (std::size_t j = 0; j < factors.size(); ++j) {
        std::vector<Index> map(order);
        for (Index x = 0; x < order; ++x) map[x] = tuples[x][j];
        p.projections.emplace_back(p.ring, factors[j], std::move(map));
    }
    bool all_equal = std::all_of(factors.begin(), factors.end(), [&](const FiniteRing& f) { return f == factors[0]; });
    if (all_equal) {
        std::vector<Index> map(factors[0].order());
        for (Index r = 0; r < map.size(); ++r) map[r] = p.encode(std::vector<Index>(factors.size(), r));
        p.diagonal = RingHom(factors[0], p.ring, std::move(map));
    }
    return p;
}

/// R^n with its diagonal embedding.
inline ProductRing power(const FiniteRing& r, std::size_t n, const Limits& limits = default_limits()) {
    return product(std::vector<FiniteRing>(n, r), limits);
}

/// r ↦ (f_1(r), ..., f_n(r)) for homs f_j : R → factor j.
inline RingHom product_hom(const FiniteRing& source, const ProductRing& target, const std::vector<RingHom>& components) {
    if (components.size() != target.factors.size()) {
        throw Error(ErrorKind::precondition, "one component hom per factor is required");
    }
    std::vector<Index> map(source.order());
    std::vector<Index> tuple(components.size());
    for (Index r = 0; r < source.order(); ++r) {
        for (std::size_t j = 0; j < components.size(); ++j) tuple[j] = components[j](r);
        map[r] = target.encode(tuple);
    }
    return RingHom(source, target.ring, std::move(map));
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientRing {
    FiniteRing ring;
    RingHom projection;
};

inline QuotientRing quotient(const FiniteRing& r, const Ideal& i, std::string label = {}) {
    if (i.is_whole()) throw Error(ErrorKind::trivial_quotient, "quotient by the whole ring");
    const std::size_t n = r.order();
    std::vector<Index> rep(n);
    for (Index a = 0; a < n; ++a) {
        Index best = a;
        for (Index x : i.elements()) best = std::min(best, r.add(a, x));
        rep[a] = best;
    }
    ElementSet reps(rep.begin(), rep.end());
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    const std::size_t m = reps.size();
    std::vector<Index> local(n, 0);
    for (Index k = 0; k < m; ++k) local[reps[k]] = k;
    std::vector<Index> proj(n);
    for (Index a = 0; a < n; ++a) proj[a] = local[rep[a]];
    std::vector<Index> add(m * m);
    std::vector<Index> mul(m * m);
    for (Index a = 0; a < m; ++a) {
        for (Index b = 0; b < m; ++b) {
            add[a * m + b] = proj[r.add(reps[a], reps[b])];
            mul[a * m + b] = proj[r.mul(reps[a], reps[b])];
        }
    }
    if (label.empty()) label = "(" + r.label() + ")/I";
    FiniteRing q = FiniteRing::from_tables(m, std::move(add), std::move(mul), proj[r.zero()], proj[r.one()],
                                           std::move(label));
    return QuotientRing{q, RingHom(r, q, std::move(proj))};
}

struct PolyQuotient {
    FiniteRing ring;
    /// R → R[X]/(monic, relations); not necessarily injective.
    RingHom embedding;
    /// Class of X.
    Index generator = 0;
    /// Maps a polynomial over R to its class.
    std::vector<Index> free_projection;
    std::size_t degree = 0;
    FiniteRing base;

    Index class_of(const Poly& p, const Poly& monic) const {
        Poly reduced = poly_mod_monic(base, p, monic);
        std::size_t idx = 0;
        for (std::size_t i = degree; i-- > 0;) {
            Index c = i < reduced.coeffs.size() ? reduced.coeffs[i] : base.zero();
            idx = idx * base.order() + c;
        }
        return free_projection[idx];
    }
};

namespace detail {

inline std::vector<Index> digits(std::size_t idx, std::size_t base, std::size_t count) {
    std::vector<Index> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Index>(idx % base);
        idx /= base;
    }
    return out;
}

}  // namespace detail

/// R[X]/(monic) as the free module of rank deg(monic), then quotiented by the
/// ideal generated by `relations`.
inline PolyQuotient poly_quotient(const FiniteRing& r, const Poly& monic_in, const std::vector<Poly>& relations,
                                  std::string label = {}, const Limits& limits = default_limits()) {
    const Poly monic = normalize(r, monic_in);
    if (degree(monic) < 1 || monic.coeffs.back() != r.one()) {
        throw Error(ErrorKind::not_monic, "the defining polynomial must have degree >= 1 and leading coefficient one");
    }
    const std::size_t d = static_cast<std::size_t>(degree(monic));
    std::size_t order = 1;
    for (std::size_t i = 0; i < d; ++i) {
        order *= r.order();
        require_order(order, limits.max_order, "polynomial quotient");
    }
    auto encode = [&](const Poly& p) {
        std::size_t idx = 0;
        for (std::size_t i = d; i-- > 0;) {
            Index c = i < p.coeffs.size() ? p.coeffs[i] : r.zero();
            idx = idx * r.order() + c;
        }
        return static_cast<Index>(idx);
    };
    std::vector<Poly> elems(order);
    for (std::size_t x = 0; x < order; ++x) elems[x] = normalize(r, Poly{detail::digits(x, r.order(), d)});
    std::vector<Index> add(order * order);
    std::vector<Index> mul(order * order);
    for (Index a = 0; a < order; ++a) {
        for (Index b = 0; b < order; ++b) {
            add[a * order + b] = encode(poly_add(r, elems[a], elems[b]));
            mul[a * order + b] = encode(poly_mod_monic(r, poly_mul(r, elems[a], elems[b]), monic));
        }
    }
    if (label.empty()) label = r.label() + "[X]/(f)";
    FiniteRing free_ring = FiniteRing::from_tables(order, std::move(add), std::move(mul), encode({}),
                                                   encode(constant_poly(r, r.one())), label);

    ElementSet rel_elems;
    for (const Poly& g : relations) rel_elems.push_back(encode(poly_mod_monic(r, g, monic)));
    Ideal rel_ideal = ideal_generated(free_ring, rel_elems);

    PolyQuotient out;
    out.base = r;
    out.degree = d;
    std::vector<Index> base_map(r.order());
    for (Index c = 0; c < r.order(); ++c) base_map[c] = encode(constant_poly(r, c));
    const Index x_free = encode(poly_mod_monic(r, variable_poly(r), monic));
    if (rel_ideal.is_zero()) {
        out.ring = free_ring;
        out.free_projection.resize(order);
        std::iota(out.free_projection.begin(), out.free_projection.end(), 0);
        out.embedding = RingHom(r, free_ring, std::move(base_map));
        out.generator = x_free;
        return out;
    }
    QuotientRing q = quotient(free_ring, rel_ideal, label);
    for (Index& v : base_map) v = q.projection(v);
    out.ring = q.ring;
    out.free_projection.assign(q.projection.table().begin(), q.projection.table().end());
    out.embedding = RingHom(r, q.ring, std::move(base_map));
    out.generator = q.projection(x_free);
    return out;
}

/// Monic irreducible polynomials of degree k over Z/p in lexicographic order
/// of (c_{k-1}, ..., c_0); returns the first one.
inline Poly first_irreducible(const FiniteRing& zp, std::size_t k) {
    const std::size_t p = zp.order();
    auto monic_from_code = [&](std::size_t code, std::size_t deg) {
        Poly f{detail::digits(code, p, deg)};
        f.coeffs.push_back(zp.one());
        return f;
    };
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
        Poly f = monic_from_code(code, k);
        bool irreducible = true;
        for (std::size_t dg = 1; dg * 2 <= k && irreducible; ++dg) {
            std::size_t divisors = 1;
            for (std::size_t i = 0; i < dg; ++i) divisors *= p;
            for (std::size_t dcode = 0; dcode < divisors && irreducible; ++dcode) {
                if (poly_mod_monic(zp, f, monic_from_code(dcode, dg)).coeffs.empty()) irreducible = false;
            }
        }
        if (irreducible) return f;
    }
    throw Error(ErrorKind::precondition, "no irreducible polynomial found");
}

inline FiniteRing make_gf(std::int64_t p, std::int64_t k, const Limits& limits = default_limits()) {
    if (p < 2 || !is_prime_number(static_cast<std::uint64_t>(p))) {
        throw Error(ErrorKind::invalid_characteristic, std::to_string(p) + " is not prime");
    }
    if (k < 1) throw Error(ErrorKind::invalid_order, "GF(p^k) needs k >= 1");
    std::size_t order = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        order *= static_cast<std::size_t>(p);
        require_order(order, limits.max_order, "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
    }
    FiniteRing zp = make_zmod(p, limits);
    std::string label = k == 1 ? "GF(" + std::to_string(p) + ")"
                               : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    if (k == 1) return zp.relabeled(label);
    Poly f = first_irreducible(zp, static_cast<std::size_t>(k));
    return poly_quotient(zp, f, {}, label, limits).ring;
}

}  // namespace ringlat
