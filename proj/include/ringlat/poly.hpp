#pragma once

/// @file poly.hpp
/// @brief Dense univariate polynomials with coefficients in a FiniteRing.

#include <algorithm>
#include <vector>

#include "ringlat/ring.hpp"

namespace ringlat {

/// Coefficients c_0, c_1, ... (lowest degree first). Trailing zeros are
/// stripped by `normalize`; the zero polynomial has no coefficients.
struct Poly {
    std::vector<Index> coeffs;

    friend bool operator==(const Poly&, const Poly&) = default;
};

inline Poly normalize(const FiniteRing& r, Poly p) {
    while (!p.coeffs.empty() && p.coeffs.back() == r.zero()) p.coeffs.pop_back();
    return p;
}

inline int degree(const Poly& p) { return static_cast<int>(p.coeffs.size()) - 1; }

inline Poly constant_poly(const FiniteRing& r, Index c) { return normalize(r, Poly{{c}}); }

inline Poly variable_poly(const FiniteRing& r) { return Poly{{r.zero(), r.one()}}; }

inline Poly poly_add(const FiniteRing& r, const Poly& a, const Poly& b) {
    Poly out;
    out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), r.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] = r.add(out.coeffs[i], b.coeffs[i]);
    return normalize(r, std::move(out));
}

inline Poly poly_neg(const FiniteRing& r, const Poly& a) {
    Poly out = a;
    for (Index& c : out.coeffs) c = r.neg(c);
    return out;
}

inline Poly poly_sub(const FiniteRing& r, const Poly& a, const Poly& b) { return poly_add(r, a, poly_neg(r, b)); }

inline Poly poly_mul(const FiniteRing& r, const Poly& a, const Poly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    Poly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            out.coeffs[i + j] = r.add(out.coeffs[i + j], r.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return normalize(r, std::move(out));
}

inline Poly poly_pow(const FiniteRing& r, const Poly& a, unsigned e) {
    Poly result = constant_poly(r, r.one());
    for (unsigned i = 0; i < e; ++i) result = poly_mul(r, result, a);
    return result;
}

inline bool is_monic(const FiniteRing& r, const Poly& p) {
    return degree(p) >= 1 && p.coeffs.back() == r.one();
}

/// Remainder of `a` modulo a monic polynomial.
inline Poly poly_mod_monic(const FiniteRing& r, Poly a, const Poly& monic) {
    const int d = degree(monic);
    a = normalize(r, std::move(a));
    for (int k = degree(a); k >= d; --k) {
        const Index c = a.coeffs[k];
        if (c == r.zero()) continue;
        for (int i = 0; i <= d; ++i) {
            a.coeffs[k - d + i] = r.sub(a.coeffs[k - d + i], r.mul(c, monic.coeffs[i]));
        }
    }
    return normalize(r, std::move(a));
}

}  // namespace ringlat
