#pragma once

/**
 * @file extension.hpp
 * @brief Ring extensions R ⊆ S given by an injective unital hom, their
 *        intermediate subalgebras, conductor and support.
 */

#include <optional>
#include <string>
#include <vector>

#include "ringlat/ideal.hpp"
#include "ringlat/ring.hpp"
#include "ringlat/structure.hpp"

namespace ringlat {

class Extension {
public:
    Extension() = default;

    explicit Extension(RingHom embed) : embed_(std::move(embed)) {
        if (auto bad = embed_.check()) throw Error(ErrorKind::invalid_extension, "embedding is not a ring hom: " + *bad);
        if (!embed_.is_injective()) throw Error(ErrorKind::invalid_extension, "embedding is not injective");
        image_ = embed_.image();
        preimage_.assign(top().order(), static_cast<Index>(-1));
        for (Index r = 0; r < base().order(); ++r) preimage_[embed_(r)] = r;
    }

    const FiniteRing& base() const noexcept { return embed_.source(); }
    const FiniteRing& top() const noexcept { return embed_.target(); }
    const RingHom& embed() const noexcept { return embed_; }
    /// Image of R in S, sorted.
    const ElementSet& image() const noexcept { return image_; }
    bool in_base(Index s) const noexcept { return preimage_[s] != static_cast<Index>(-1); }
    /// The r with embed(r) = s; s must lie in the image.
    Index pull(Index s) const noexcept { return preimage_[s]; }
    bool is_identity() const noexcept { return image_.size() == top().order(); }

private:
    RingHom embed_;
    ElementSet image_;
    std::vector<Index> preimage_;
};

inline Extension identity_extension(const FiniteRing& r) { return Extension(identity_hom(r)); }

/// A subring of `top`, stored by its canonical element set.
struct Subalgebra {
    FiniteRing top;
    ElementSet elements;

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(Index s) const { return set_contains(elements, s); }
    FiniteRing as_ring(std::string label = {}) const {
        if (label.empty()) label = "subring of " + top.label();
        return restrict_ring(top, elements, top.one(), std::move(label));
    }

    friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.elements == b.elements; }
};

inline bool is_subalgebra(const Extension& ext, const ElementSet& set) {
    const FiniteRing& s = ext.top();
    std::vector<char> mask = to_mask(set, s.order());
    if (!mask[s.zero()] || !mask[s.one()]) return false;
    for (Index r : ext.image()) {
        if (!mask[r]) return false;
    }
    for (Index a : set) {
        if (!mask[s.neg(a)]) return false;
        for (Index b : set) {
            if (!mask[s.add(a, b)] || !mask[s.mul(a, b)]) return false;
        }
    }
    return true;
}

/// Inclusion lower ⊆ upper of two subrings of the same ring, as an extension.
inline Extension sub_extension(const FiniteRing& top, const ElementSet& lower, const ElementSet& upper) {
    FiniteRing lo = restrict_ring(top, lower, top.one(), "T");
    FiniteRing up = restrict_ring(top, upper, top.one(), "U");
    std::vector<Index> local(top.order(), static_cast<Index>(-1));
    for (Index k = 0; k < upper.size(); ++k) local[upper[k]] = k;
    std::vector<Index> map(lower.size());
    for (Index k = 0; k < lower.size(); ++k) map[k] = local[lower[k]];
    return Extension(RingHom(lo, up, std::move(map)));
}

/// R ⊆ T for an intermediate subalgebra T.
inline Extension lower_extension(const Extension& ext, const ElementSet& t) {
    FiniteRing tr = restrict_ring(ext.top(), t, ext.top().one(), "T");
    std::vector<Index> local(ext.top().order(), static_cast<Index>(-1));
    for (Index k = 0; k < t.size(); ++k) local[t[k]] = k;
    std::vector<Index> map(ext.base().order());
    for (Index r = 0; r < map.size(); ++r) map[r] = local[ext.embed()(r)];
    return Extension(RingHom(ext.base(), tr, std::move(map)));
}

/// T ⊆ S for an intermediate subalgebra T.
inline Extension upper_extension(const Extension& ext, const ElementSet& t) {
    FiniteRing tr = restrict_ring(ext.top(), t, ext.top().one(), "T");
    return Extension(RingHom(tr, ext.top(), ElementSet(t)));
}

/// (R:S) = {r ∈ R : rS ⊆ R}, as an ideal of R.
inline Ideal conductor(const Extension& ext) {
    const FiniteRing& s = ext.top();
    ElementSet out;
    for (Index r = 0; r < ext.base().order(); ++r) {
        const Index x = ext.embed()(r);
        bool ok = true;
        for (Index y = 0; y < s.order() && ok; ++y) ok = ext.in_base(s.mul(x, y));
        if (ok) out.push_back(r);
    }
    return Ideal(ext.base(), std::move(out));
}

/// The conductor viewed inside S, where it is also an ideal.
inline Ideal conductor_in_top(const Extension& ext) {
    const Ideal c = conductor(ext);
    ElementSet img;
    for (Index r : c.elements()) img.push_back(ext.embed()(r));
    return Ideal(ext.top(), std::move(img));
}

/// Largest subset of the image of R that absorbs multiplication by S.
inline ElementSet largest_common_ideal(const Extension& ext) {
    const FiniteRing& s = ext.top();
    ElementSet out;
    for (Index x : ext.image()) {
        bool ok = true;
        for (Index y = 0; y < s.order() && ok; ++y) ok = ext.in_base(s.mul(x, y));
        if (ok) out.push_back(x);
    }
    return out;
}

/// Ideal I·S generated in S by the image of an ideal of R.
inline Ideal extended_ideal(const Extension& ext, const Ideal& i) {
    ElementSet img;
    for (Index r : i.elements()) img.push_back(ext.embed()(r));
    return ideal_generated(ext.top(), img);
}

/// Maximal ideals M of R with R_M ≠ S_M. The localization at M is the local
/// factor eR with e ∉ M, and S_M = e·S.
inline std::vector<Ideal> support_of_extension(const Extension& ext, const Limits& limits = default_limits()) {
    const FiniteRing& r = ext.base();
    const FiniteRing& s = ext.top();
    std::vector<Ideal> out;
    ElementSet prim = primitive_idempotents(r);
    for (const Ideal& m : maximal_ideals(r, limits)) {
        Index e = r.zero();
        for (Index f : prim) {
            if (!m.contains(f)) e = f;
        }
        const Index es = ext.embed()(e);
        ElementSet local_r;
        ElementSet local_s;
        for (Index x = 0; x < r.order(); ++x) local_r.push_back(r.mul(e, x));
        for (Index y = 0; y < s.order(); ++y) local_s.push_back(s.mul(es, y));
        std::sort(local_r.begin(), local_r.end());
        local_r.erase(std::unique(local_r.begin(), local_r.end()), local_r.end());
        std::sort(local_s.begin(), local_s.end());
        local_s.erase(std::unique(local_s.begin(), local_s.end()), local_s.end());
        if (local_r.size() != local_s.size()) out.push_back(m);
    }
    return out;
}

}  // namespace ringlat
