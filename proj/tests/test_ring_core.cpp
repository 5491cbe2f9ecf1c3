#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "ringlat/ringlat.hpp"

using namespace ringlat;

namespace {

std::vector<FiniteRing> sample_rings() {
    FiniteRing z2 = make_zmod(2);
    FiniteRing z4 = make_zmod(4);
    return {
        z2,
        make_zmod(12),
        make_zmod(27),
        make_gf(2, 3),
        make_gf(3, 2),
        product({z4, make_zmod(3)}).ring,
        power(z2, 3).ring,
        poly_quotient(z2, poly_pow(z2, variable_poly(z2), 3), {}).ring,
        poly_quotient(z4, Poly{{1, 1, 1}}, {}).ring,
        quotient(make_zmod(12), ideal_generated(make_zmod(12), {4})).ring,
    };
}

}  // namespace

TEST(RingConstruction, EveryConstructorSatisfiesTheAxioms) {
    for (const FiniteRing& r : sample_rings()) {
        EXPECT_FALSE(check_ring_axioms(r).has_value()) << r.label();
    }
}

TEST(RingConstruction, IntegersModNMatchMachineArithmetic) {
    for (std::int64_t n : {2, 6, 9, 64}) {
        FiniteRing r = make_zmod(n);
        ASSERT_EQ(r.order(), static_cast<std::size_t>(n));
        for (std::int64_t a = 0; a < n; ++a) {
            for (std::int64_t b = 0; b < n; ++b) {
                EXPECT_EQ(r.add(r.integer(a), r.integer(b)), r.integer((a + b) % n));
                EXPECT_EQ(r.mul(r.integer(a), r.integer(b)), r.integer(a * b % n));
            }
        }
        EXPECT_EQ(characteristic(r), static_cast<std::size_t>(n));
        EXPECT_TRUE(is_prime_ring(r));
    }
}

TEST(RingConstruction, InvalidInputsRaiseTheirKinds) {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::unreachable_case;
    };
    EXPECT_EQ(kind_of([] { make_zmod(1); }), ErrorKind::invalid_order);
    EXPECT_EQ(kind_of([] { make_gf(4, 1); }), ErrorKind::invalid_characteristic);
    EXPECT_EQ(kind_of([] { make_gf(2, 0); }), ErrorKind::invalid_order);
    FiniteRing z4 = make_zmod(4);
    EXPECT_EQ(kind_of([&] { poly_quotient(z4, Poly{{1, 2}}, {}); }), ErrorKind::not_monic);
    EXPECT_EQ(kind_of([&] { quotient(z4, whole_ideal(z4)); }), ErrorKind::trivial_quotient);
    Limits tight;
    tight.max_order = 100;
    EXPECT_EQ(kind_of([&] { power(z4, 4, tight); }), ErrorKind::size_limit);
    EXPECT_EQ(kind_of([&] { make_zmod(101, tight); }), ErrorKind::size_limit);
}

TEST(RingConstruction, FiniteFieldsAreFields) {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
        FiniteRing f = make_gf(p, k);
        std::size_t q = 1;
        for (int i = 0; i < k; ++i) q *= static_cast<std::size_t>(p);
        EXPECT_EQ(f.order(), q);
        EXPECT_TRUE(is_field(f)) << f.label();
        EXPECT_EQ(characteristic(f), static_cast<std::size_t>(p));
    }
}

TEST(RingConstruction, GaloisFieldsOfEqualOrderAreIsomorphic) {
    FiniteRing z2 = make_zmod(2);
    // x^2 + x + 1 is the only irreducible quadratic over F2.
    FiniteRing alt = poly_quotient(z2, Poly{{1, 1, 1}}, {}).ring;
    EXPECT_TRUE(oracle::is_isomorphic(make_gf(2, 2), alt));
    // F8 from x^3 + x^2 + 1 against the library choice.
    FiniteRing f8 = poly_quotient(z2, Poly{{1, 0, 1, 1}}, {}).ring;
    EXPECT_TRUE(oracle::is_isomorphic(make_gf(2, 3), f8));
}

TEST(RingConstruction, ProductEncodingRoundTrips) {
    ProductRing p = product({make_zmod(4), make_zmod(3), make_gf(2, 2)});
    ASSERT_EQ(p.ring.order(), 48u);
    for (Index x = 0; x < p.ring.order(); ++x) EXPECT_EQ(p.encode(p.decode(x)), x);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_FALSE(p.projections[j].check().has_value());
    for (Index x = 0; x < p.ring.order(); ++x) {
        for (Index y = 0; y < p.ring.order(); ++y) {
            auto a = p.decode(x);
            auto b = p.decode(y);
            auto m = p.decode(p.ring.mul(x, y));
            for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m[j], p.factors[j].mul(a[j], b[j]));
        }
    }
}

TEST(RingConstruction, QuotientByAnIdealHasTheRightOrder) {
    FiniteRing z12 = make_zmod(12);
    for (Index g : {2, 3, 4, 6}) {
        Ideal i = ideal_generated(z12, {g});
        QuotientRing q = quotient(z12, i);
        EXPECT_EQ(q.ring.order() * i.size(), 12u);
        EXPECT_FALSE(q.projection.check().has_value());
        EXPECT_TRUE(q.projection.is_surjective());
    }
}

TEST(RingConstruction, PolynomialQuotientWithRelations) {
    FiniteRing z2 = make_zmod(2);
    PolyQuotient base = poly_quotient(z2, Poly{{0, 0, 1}}, {});
    const FiniteRing& k = base.ring;
    // R[X]/(X^2 - t, X t) with R = F2[t]/(t^2).
    Poly x2_minus_t = poly_sub(k, poly_pow(k, variable_poly(k), 2), constant_poly(k, base.generator));
    Poly xt = poly_mul(k, variable_poly(k), constant_poly(k, base.generator));
    PolyQuotient s = poly_quotient(k, x2_minus_t, {xt});
    EXPECT_EQ(s.ring.order(), 8u);
    EXPECT_FALSE(check_ring_axioms(s.ring).has_value());
    EXPECT_TRUE(s.embedding.is_injective());
    const Index x = s.generator;
    EXPECT_EQ(s.ring.mul(x, x), s.embedding(base.generator));
    EXPECT_EQ(s.ring.pow(x, 3), s.ring.zero());
}

TEST(RingHoms, IdentityAndCompositionAreHoms) {
    FiniteRing z12 = make_zmod(12);
    QuotientRing q = quotient(z12, ideal_generated(z12, {4}));
    RingHom id = identity_hom(z12);
    EXPECT_FALSE(id.check().has_value());
    RingHom c = compose(q.projection, id);
    EXPECT_FALSE(c.check().has_value());
    EXPECT_TRUE(std::ranges::equal(c.table(), q.projection.table()));
    auto f = prime_ring_map(make_zmod(4), make_zmod(2));
    ASSERT_TRUE(f.has_value());
    EXPECT_FALSE(f->check().has_value());
    EXPECT_FALSE(prime_ring_map(make_zmod(4), make_zmod(3)).has_value());
}

TEST(RingHoms, NonHomIsReported) {
    FiniteRing z4 = make_zmod(4);
    RingHom bad(z4, z4, {0, 2, 0, 2});
    EXPECT_TRUE(bad.check().has_value());
}

TEST(RingStructure, UnitsAndIdempotentsMatchDefinitions) {
    for (const FiniteRing& r : sample_rings()) {
        std::size_t units_brute = 0;
        std::size_t idem_brute = 0;
        for (Index a = 0; a < r.order(); ++a) {
            bool unit = false;
            for (Index b = 0; b < r.order(); ++b) unit = unit || r.mul(a, b) == r.one();
            units_brute += unit;
            idem_brute += r.mul(a, a) == a;
        }
        EXPECT_EQ(units(r).size(), units_brute) << r.label();
        EXPECT_EQ(idempotents(r).size(), idem_brute) << r.label();
    }
}

TEST(RingStructure, LocalDecompositionRecoversTheFactors) {
    FiniteRing z12 = make_zmod(12);
    LocalDecomposition d = local_decomposition(z12);
    ASSERT_EQ(d.factors.size(), 2u);
    EXPECT_EQ(d.factors[0].ring.order(), 4u);
    EXPECT_EQ(d.factors[1].ring.order(), 3u);
    EXPECT_TRUE(d.iso.is_injective() && d.iso.is_surjective());
    for (const FiniteRing& r : sample_rings()) {
        LocalDecomposition ld = local_decomposition(r);
        std::size_t prod = 1;
        for (const LocalFactor& f : ld.factors) {
            prod *= f.ring.order();
            EXPECT_TRUE(is_local(f.ring).has_value()) << r.label();
        }
        EXPECT_EQ(prod, r.order()) << r.label();
        EXPECT_EQ(ld.factors.size(), maximal_ideals(r).size()) << r.label();
    }
}

TEST(RingStructure, SpirAndNilpotencyIndex) {
    EXPECT_TRUE(is_spir(make_zmod(8)).has_value());
    EXPECT_EQ(nilpotency_index(make_zmod(8)), 3u);
    EXPECT_EQ(nilpotency_index(make_zmod(27)), 3u);
    EXPECT_EQ(nilpotency_index(make_zmod(9)), 2u);
    EXPECT_FALSE(is_spir(make_gf(2, 2)).has_value());
    // F2[x,y]/(x^2, xy, y^2) is local but its maximal ideal is not principal.
    FiniteRing z2 = make_zmod(2);
    FiniteRing e = poly_quotient(z2, Poly{{0, 0, 1}}, {}).ring;
    FiniteRing ee = poly_quotient(e, Poly{{0, 0, 1}}, {poly_mul(e, variable_poly(e), constant_poly(e, 2))}).ring;
    EXPECT_TRUE(is_local(ee).has_value());
    EXPECT_FALSE(is_spir(ee).has_value());
    EXPECT_THROW(nilpotency_index(make_zmod(6)), Error);
}
