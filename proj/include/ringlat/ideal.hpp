#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of finite rings, ideal arithmetic, and the spectrum.
 *
 * An ideal is stored as its canonical sorted element set. All lattice
 * operations (sum, intersection, product, colon) return canonical sets, so
 * equality of ideals is plain set equality.
 */

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "ringlat/ring.hpp"

namespace ringlat {

class Ideal {
public:
    Ideal() = default;

    /// Wraps an element set already known to be an ideal (canonicalizes order).
    Ideal(FiniteRing ring, ElementSet elements) : ring_(std::move(ring)), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const FiniteRing& ring() const noexcept { return ring_; }
    const ElementSet& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(Index a) const { return set_contains(elements_, a); }
    bool is_zero() const noexcept { return elements_.size() == 1; }
    bool is_whole() const noexcept { return elements_.size() == ring_.order(); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements_ == b.elements_; }

private:
    FiniteRing ring_;
    ElementSet elements_;
};

/// Smallest ideal containing `gens`: the additive span of all products r·g.
inline Ideal ideal_generated(const FiniteRing& r, const ElementSet& gens) {
    auto span = ring_span_builder(r);
    for (Index g : gens) {
        for (Index x = 0; x < r.order(); ++x) span.add(r.mul(x, g));
    }
    return Ideal(r, span.sorted());
}

inline Ideal zero_ideal(const FiniteRing& r) { return Ideal(r, {r.zero()}); }

inline Ideal whole_ideal(const FiniteRing& r) {
    ElementSet all(r.order());
    for (Index i = 0; i < r.order(); ++i) all[i] = i;
    return Ideal(r, std::move(all));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    auto span = ring_span_builder(a.ring());
    span.add_all(a.elements());
    span.add_all(b.elements());
    return Ideal(a.ring(), span.sorted());
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    return Ideal(a.ring(), set_intersection(a.elements(), b.elements()));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    const FiniteRing& r = a.ring();
    auto span = ring_span_builder(r);
    for (Index x : a.elements()) {
        for (Index y : b.elements()) span.add(r.mul(x, y));
    }
    return Ideal(r, span.sorted());
}

inline Ideal ideal_power(const Ideal& a, unsigned k) {
    Ideal result = whole_ideal(a.ring());
    for (unsigned i = 0; i < k; ++i) result = ideal_product(result, a);
    return result;
}

/// (I : J) = {r : rJ ⊆ I}
inline Ideal colon(const Ideal& i, const Ideal& j) {
    const FiniteRing& r = i.ring();
    std::vector<char> mask = to_mask(i.elements(), r.order());
    ElementSet out;
    for (Index x = 0; x < r.order(); ++x) {
        bool ok = std::all_of(j.elements().begin(), j.elements().end(),
                              [&](Index y) { return mask[r.mul(x, y)] != 0; });
        if (ok) out.push_back(x);
    }
    return Ideal(r, std::move(out));
}

inline bool is_ideal(const FiniteRing& r, const ElementSet& set) {
    std::vector<char> mask = to_mask(set, r.order());
    if (!mask[r.zero()]) return false;
    for (Index a : set) {
        if (!mask[r.neg(a)]) return false;
        for (Index b : set) {
            if (!mask[r.add(a, b)]) return false;
        }
        for (Index x = 0; x < r.order(); ++x) {
            if (!mask[r.mul(x, a)]) return false;
        }
    }
    return true;
}

/// Pullback f⁻¹(J) of an ideal of the target.
inline Ideal contraction(const RingHom& f, const Ideal& j) {
    std::vector<char> mask = to_mask(j.elements(), f.target().order());
    ElementSet out;
    for (Index a = 0; a < f.source().order(); ++a) {
        if (mask[f(a)]) out.push_back(a);
    }
    return Ideal(f.source(), std::move(out));
}

/// Image of an ideal under a surjective hom (an ideal of the target).
inline Ideal image_ideal(const RingHom& f, const Ideal& i) {
    ElementSet img;
    for (Index a : i.elements()) img.push_back(f(a));
    return ideal_generated(f.target(), img);
}

/// Every ideal of R, in canonical order (cardinality, then lexicographic).
/// Computed as the closure of the principal ideals under sums.
inline std::vector<Ideal> all_ideals(const FiniteRing& r, const Limits& limits = default_limits()) {
    require_order(r.order(), limits.max_lattice_order, "ring for ideal enumeration");
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> ideals;
    for (Index a = 0; a < r.order(); ++a) {
        ElementSet principal = ideal_generated(r, {a}).elements();
        if (seen.insert(principal).second) ideals.push_back(std::move(principal));
    }
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            auto span = ring_span_builder(r);
            span.add_all(ideals[i]);
            span.add_all(ideals[j]);
            ElementSet sum = span.sorted();
            if (seen.insert(sum).second) {
                ideals.push_back(std::move(sum));
                if (ideals.size() > limits.max_nodes) throw Error(ErrorKind::size_limit, "too many ideals");
            }
        }
    }
    std::sort(ideals.begin(), ideals.end(), canonical_less);
    std::vector<Ideal> out;
    out.reserve(ideals.size());
    for (auto& set : ideals) out.emplace_back(r, std::move(set));
    return out;
}

inline bool is_prime_ideal(const Ideal& p) {
    if (p.is_whole()) return false;
    const FiniteRing& r = p.ring();
    std::vector<char> mask = to_mask(p.elements(), r.order());
    for (Index a = 0; a < r.order(); ++a) {
        if (mask[a]) continue;
        for (Index b = 0; b < r.order(); ++b) {
            if (!mask[b] && mask[r.mul(a, b)]) return false;
        }
    }
    return true;
}

/// Proper, and every element outside is invertible modulo the ideal.
inline bool is_maximal_ideal(const Ideal& m) {
    if (m.is_whole()) return false;
    const FiniteRing& r = m.ring();
    std::vector<char> mask = to_mask(m.elements(), r.order());
    for (Index a = 0; a < r.order(); ++a) {
        if (mask[a]) continue;
        bool invertible = false;
        for (Index b = 0; b < r.order() && !invertible; ++b) {
            invertible = mask[r.sub(r.mul(a, b), r.one())] != 0;
        }
        if (!invertible) return false;
    }
    return true;
}

/// |R/I|
inline std::size_t residue_size(const Ideal& i) { return i.ring().order() / i.size(); }

struct SpectrumReport {
    std::vector<Ideal> primes;
    std::vector<Ideal> maximals;
    Ideal nilradical;
    Ideal jacobson;

    /// V(I): primes containing I.
    std::vector<Ideal> variety(const Ideal& i) const {
        std::vector<Ideal> out;
        for (const Ideal& p : primes) {
            if (is_subset(i.elements(), p.elements())) out.push_back(p);
        }
        return out;
    }
};

inline SpectrumReport spectrum(const FiniteRing& r, const Limits& limits = default_limits()) {
    SpectrumReport report;
    for (const Ideal& i : all_ideals(r, limits)) {
        if (is_prime_ideal(i)) report.primes.push_back(i);
        if (is_maximal_ideal(i)) report.maximals.push_back(i);
    }
    report.nilradical = whole_ideal(r);
    for (const Ideal& p : report.primes) report.nilradical = ideal_intersection(report.nilradical, p);
    report.jacobson = whole_ideal(r);
    for (const Ideal& m : report.maximals) report.jacobson = ideal_intersection(report.jacobson, m);
    return report;
}

inline std::vector<Ideal> maximal_ideals(const FiniteRing& r, const Limits& limits = default_limits()) {
    return spectrum(r, limits).maximals;
}

inline bool is_nilpotent(const FiniteRing& r, Index a) {
    Index x = a;
    for (std::size_t k = 0; k <= r.order(); ++k) {
        if (x == r.zero()) return true;
        x = r.mul(x, a);
    }
    return false;
}

}  // namespace ringlat
