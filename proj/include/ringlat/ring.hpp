#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative unital rings stored as dense operation tables,
 *        and unital homomorphisms between them.
 *
 * Elements are indices 0..order-1. A FiniteRing is an immutable handle: copies
 * share the same tables, so rings can be passed by value freely.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ringlat/error.hpp"

namespace ringlat {

using Index = std::uint32_t;

/// Sorted, duplicate-free list of element indices. Canonical identity of
/// ideals, subalgebras and submodules.
using ElementSet = std::vector<Index>;

class FiniteRing {
public:
    FiniteRing() = default;

    /// Builds a ring from raw tables. Checks totality and the identities of
    /// zero and one; full axiom checking is `check_ring_axioms`.
    static FiniteRing from_tables(std::size_t order, std::vector<Index> add, std::vector<Index> mul,
                                  Index zero, Index one, std::string label) {
        if (order == 0) throw Error(ErrorKind::invalid_order, "ring must have at least one element");
        if (add.size() != order * order || mul.size() != order * order) {
            throw Error(ErrorKind::invalid_order, "operation tables must be order x order");
        }
        for (std::size_t i = 0; i < add.size(); ++i) {
            if (add[i] >= order || mul[i] >= order) {
                throw Error(ErrorKind::invalid_order, "operation table entry out of range");
            }
        }
        if (zero >= order || one >= order) throw Error(ErrorKind::invalid_order, "zero/one out of range");
        if (zero == one) throw Error(ErrorKind::invalid_order, "one must differ from zero");

        auto data = std::make_shared<Data>();
        data->order = order;
        data->add = std::move(add);
        data->mul = std::move(mul);
        data->zero = zero;
        data->one = one;
        data->label = std::move(label);
        data->neg.assign(order, static_cast<Index>(order));
        for (Index a = 0; a < order; ++a) {
            if (data->add[a * order + zero] != a) {
                throw Error(ErrorKind::invalid_order, "zero is not an additive identity");
            }
            if (data->mul[a * order + one] != a) {
                throw Error(ErrorKind::invalid_order, "one is not a multiplicative identity");
            }
            for (Index b = 0; b < order; ++b) {
                if (data->add[a * order + b] == zero) {
                    data->neg[a] = b;
                    break;
                }
            }
            if (data->neg[a] == order) throw Error(ErrorKind::invalid_order, "element without additive inverse");
        }
        FiniteRing ring;
        ring.d_ = std::move(data);
        return ring;
    }

    bool valid() const noexcept { return d_ != nullptr; }
    std::size_t order() const noexcept { return d_->order; }
    Index zero() const noexcept { return d_->zero; }
    Index one() const noexcept { return d_->one; }
    const std::string& label() const noexcept { return d_->label; }

    Index add(Index a, Index b) const noexcept { return d_->add[a * d_->order + b]; }
    Index mul(Index a, Index b) const noexcept { return d_->mul[a * d_->order + b]; }
    Index neg(Index a) const noexcept { return d_->neg[a]; }
    Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

    Index pow(Index a, std::uint64_t e) const noexcept {
        Index result = one();
        Index base = a;
        while (e > 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    /// k·a for an integer k (negative k allowed).
    Index times(std::int64_t k, Index a) const noexcept {
        Index base = k < 0 ? neg(a) : a;
        std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
        Index result = zero();
        while (n > 0) {
            if (n & 1U) result = add(result, base);
            base = add(base, base);
            n >>= 1U;
        }
        return result;
    }

    Index integer(std::int64_t k) const noexcept { return times(k, one()); }

    std::span<const Index> add_table() const noexcept { return d_->add; }
    std::span<const Index> mul_table() const noexcept { return d_->mul; }

    /// Same object or identical tables.
    friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->order == b.d_->order && a.d_->zero == b.d_->zero && a.d_->one == b.d_->one &&
               a.d_->add == b.d_->add && a.d_->mul == b.d_->mul;
    }

    FiniteRing relabeled(std::string label) const {
        FiniteRing copy = *this;
        auto data = std::make_shared<Data>(*d_);
        data->label = std::move(label);
        copy.d_ = std::move(data);
        return copy;
    }

private:
    struct Data {
        std::size_t order = 0;
        std::vector<Index> add;
        std::vector<Index> mul;
        std::vector<Index> neg;
        Index zero = 0;
        Index one = 0;
        std::string label;
    };
    std::shared_ptr<const Data> d_;
};

/// Checks every ring axiom on all element triples. Returns a description of
/// the first failure, or nothing when the tables form a commutative unital ring.
inline std::optional<std::string> check_ring_axioms(const FiniteRing& r) {
    const std::size_t n = r.order();
    auto fail = [](const char* law, Index a, Index b, Index c) {
        std::ostringstream os;
        os << law << " fails at (" << a << ", " << b << ", " << c << ")";
        return os.str();
    };
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", a, b, 0);
            if (r.mul(a, b) != r.mul(b, a)) return fail("multiplicative commutativity", a, b, 0);
        }
        if (r.add(a, r.zero()) != a) return fail("additive identity", a, 0, 0);
        if (r.mul(a, r.one()) != a) return fail("multiplicative identity", a, 0, 0);
        if (r.add(a, r.neg(a)) != r.zero()) return fail("additive inverse", a, 0, 0);
    }
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const Index ab_sum = r.add(a, b);
            const Index ab_mul = r.mul(a, b);
            for (Index c = 0; c < n; ++c) {
                if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) return fail("additive associativity", a, b, c);
                if (r.mul(ab_mul, c) != r.mul(a, r.mul(b, c))) return fail("multiplicative associativity", a, b, c);
                if (r.mul(a, r.add(b, c)) != r.add(ab_mul, r.mul(a, c))) return fail("distributivity", a, b, c);
            }
        }
    }
    if (r.zero() == r.one()) return std::string("one equals zero");
    return std::nullopt;
}

class RingHom {
public:
    RingHom() = default;
    RingHom(FiniteRing source, FiniteRing target, std::vector<Index> map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
        if (map_.size() != source_.order()) throw Error(ErrorKind::invalid_order, "hom table has wrong length");
        for (Index v : map_) {
            if (v >= target_.order()) throw Error(ErrorKind::invalid_order, "hom image out of range");
        }
    }

    const FiniteRing& source() const noexcept { return source_; }
    const FiniteRing& target() const noexcept { return target_; }
    Index operator()(Index a) const noexcept { return map_[a]; }
    std::span<const Index> table() const noexcept { return map_; }

    bool is_injective() const {
        std::vector<char> seen(target_.order(), 0);
        for (Index v : map_) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    bool is_surjective() const { return image().size() == target_.order(); }

    ElementSet image() const {
        ElementSet img(map_.begin(), map_.end());
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    }

    /// Verifies unitality, additivity and multiplicativity on all pairs.
    std::optional<std::string> check() const {
        if (map_[source_.zero()] != target_.zero()) return std::string("zero not preserved");
        if (map_[source_.one()] != target_.one()) return std::string("one not preserved");
        const std::size_t n = source_.order();
        for (Index a = 0; a < n; ++a) {
            for (Index b = 0; b < n; ++b) {
                if (map_[source_.add(a, b)] != target_.add(map_[a], map_[b])) {
                    return "sum not preserved at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                }
                if (map_[source_.mul(a, b)] != target_.mul(map_[a], map_[b])) {
                    return "product not preserved at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                }
            }
        }
        return std::nullopt;
    }

private:
    FiniteRing source_;
    FiniteRing target_;
    std::vector<Index> map_;
};

inline RingHom identity_hom(const FiniteRing& r) {
    std::vector<Index> map(r.order());
    for (Index a = 0; a < r.order(); ++a) map[a] = a;
    return RingHom(r, r, std::move(map));
}

/// outer ∘ inner
inline RingHom compose(const RingHom& outer, const RingHom& inner) {
    std::vector<Index> map(inner.source().order());
    for (Index a = 0; a < map.size(); ++a) map[a] = outer(inner(a));
    return RingHom(inner.source(), outer.target(), std::move(map));
}

/// Additive order of one; equals the characteristic of the ring.
inline std::size_t characteristic(const FiniteRing& r) {
    std::size_t c = 1;
    for (Index x = r.one(); x != r.zero(); x = r.add(x, r.one())) ++c;
    return c;
}

/// True when every element is an integer multiple of one (R is Z/c).
inline bool is_prime_ring(const FiniteRing& r) { return characteristic(r) == r.order(); }

/// The map k·1_R ↦ k·1_S, defined when R is a prime ring whose
/// characteristic kills one in S.
inline std::optional<RingHom> prime_ring_map(const FiniteRing& source, const FiniteRing& target) {
    if (!is_prime_ring(source)) return std::nullopt;
    const std::size_t c = source.order();
    if (target.times(static_cast<std::int64_t>(c), target.one()) != target.zero()) return std::nullopt;
    std::vector<Index> map(c);
    Index src = source.zero();
    Index dst = target.zero();
    for (std::size_t k = 0; k < c; ++k) {
        map[src] = dst;
        src = source.add(src, source.one());
        dst = target.add(dst, target.one());
    }
    return RingHom(source, target, std::move(map));
}

// ---------------------------------------------------------------------------
// Element-set helpers

inline std::vector<char> to_mask(const ElementSet& set, std::size_t universe) {
    std::vector<char> mask(universe, 0);
    for (Index v : set) mask[v] = 1;
    return mask;
}

inline ElementSet from_mask(const std::vector<char>& mask) {
    ElementSet set;
    for (Index i = 0; i < mask.size(); ++i) {
        if (mask[i]) set.push_back(i);
    }
    return set;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool set_contains(const ElementSet& set, Index v) { return std::binary_search(set.begin(), set.end(), v); }

/// Canonical lattice order: by cardinality, then lexicographically.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct ElementSetHash {
    std::size_t operator()(const ElementSet& set) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (Index v : set) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ set.size());
    }
};

/**
 * Incrementally grown additive subgroup of a finite abelian group.
 *
 * `add` is any callable (Index, Index) -> Index. Adding a generator g extends
 * the current subgroup H to H + <g> by walking the cosets H + k·g.
 */
template <class AddFn>
class SpanBuilder {
public:
    SpanBuilder(std::size_t universe, Index zero, AddFn add)
        : add_(std::move(add)), in_(universe, 0), elems_{zero} {
        in_[zero] = 1;
    }

    bool contains(Index v) const noexcept { return in_[v] != 0; }
    std::size_t size() const noexcept { return elems_.size(); }

    void add(Index g) {
        if (in_[g]) return;
        const std::size_t base_size = elems_.size();
        Index step = g;
        while (!in_[step]) {
            for (std::size_t i = 0; i < base_size; ++i) {
                Index v = add_(elems_[i], step);
                in_[v] = 1;
                elems_.push_back(v);
            }
            step = add_(step, g);
        }
    }

    template <class Range>
    void add_all(const Range& gens) {
        for (Index g : gens) add(g);
    }

    ElementSet sorted() const {
        ElementSet out = elems_;
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<char>& mask() const noexcept { return in_; }

private:
    AddFn add_;
    std::vector<char> in_;
    std::vector<Index> elems_;
};

inline auto ring_span_builder(const FiniteRing& r) {
    auto add = [r](Index a, Index b) { return r.add(a, b); };
    return SpanBuilder<decltype(add)>(r.order(), r.zero(), add);
}

/// Additive subgroup generated by `gens`.
inline ElementSet additive_span(const FiniteRing& r, const ElementSet& gens) {
    auto span = ring_span_builder(r);
    span.add_all(gens);
    return span.sorted();
}

/// Subring generated by the subring `base` (which must contain one) and `extra`.
/// Adjoins one element at a time: T[s] is the additive span of T·s^i.
inline ElementSet generate_subring(const FiniteRing& r, const ElementSet& base, const ElementSet& extra) {
    ElementSet current = base;
    std::vector<char> mask = to_mask(current, r.order());
    for (Index s : extra) {
        if (mask[s]) continue;
        auto span = ring_span_builder(r);
        span.add_all(current);
        std::vector<char> seen_power(r.order(), 0);
        Index power = s;
        while (!seen_power[power]) {
            seen_power[power] = 1;
            if (!span.contains(power)) {
                for (Index t : current) span.add(r.mul(t, power));
            }
            power = r.mul(power, s);
        }
        current = span.sorted();
        mask = span.mask();
    }
    return current;
}

/// Subring generated by arbitrary elements together with one.
inline ElementSet subring_generated(const FiniteRing& r, const ElementSet& gens) {
    ElementSet prime = additive_span(r, {r.one()});
    return generate_subring(r, prime, gens);
}

inline bool is_mul_closed(const FiniteRing& r, const ElementSet& set) {
    std::vector<char> mask = to_mask(set, r.order());
    for (Index a : set) {
        for (Index b : set) {
            if (!mask[r.mul(a, b)]) return false;
        }
    }
    return true;
}

/// Builds the ring structure carried by a subset closed under the ring
/// operations, with `one` as identity (which may differ from the ambient one,
/// e.g. for a factor eR). Element k of the result is `elements[k]`.
inline FiniteRing restrict_ring(const FiniteRing& r, const ElementSet& elements, Index one, std::string label) {
    const std::size_t n = elements.size();
    std::vector<Index> local(r.order(), static_cast<Index>(-1));
    for (Index k = 0; k < n; ++k) local[elements[k]] = k;
    std::vector<Index> add(n * n);
    std::vector<Index> mul(n * n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            Index s = local[r.add(elements[a], elements[b])];
            Index p = local[r.mul(elements[a], elements[b])];
            if (s == static_cast<Index>(-1) || p == static_cast<Index>(-1)) {
                throw Error(ErrorKind::precondition, "subset is not closed under the ring operations");
            }
            add[a * n + b] = s;
            mul[a * n + b] = p;
        }
    }
    if (local[r.zero()] == static_cast<Index>(-1) || local[one] == static_cast<Index>(-1)) {
        throw Error(ErrorKind::precondition, "subset does not contain zero and the chosen identity");
    }
    return FiniteRing::from_tables(n, std::move(add), std::move(mul), local[r.zero()], local[one], std::move(label));
}

}  // namespace ringlat
