#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringlat/ringlat.hpp"

using namespace ringlat;

namespace {

std::vector<FiniteRing> rings() {
    FiniteRing z2 = make_zmod(2);
    return {make_zmod(12), make_zmod(16), make_gf(2, 2), power(z2, 3).ring, product({make_zmod(4), make_zmod(2)}).ring,
            poly_quotient(z2, Poly{{0, 0, 0, 1}}, {}).ring, poly_quotient(make_zmod(3), Poly{{2, 0, 1}}, {}).ring};
}

std::vector<ElementSet> sets(const std::vector<Ideal>& ideals) {
    std::vector<ElementSet> out;
    for (const Ideal& i : ideals) out.push_back(i.elements());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace

TEST(Ideals, EnumerationMatchesBruteForce) {
    for (const FiniteRing& r : rings()) EXPECT_EQ(sets(all_ideals(r)), oracle::ideals(r)) << r.label();
}

TEST(Ideals, PrimesMatchTheDefinition) {
    for (const FiniteRing& r : rings()) EXPECT_EQ(sets(spectrum(r).primes), oracle::primes(r)) << r.label();
}

TEST(Ideals, FrozenIdealCounts) {
    // Divisors of 12 and 16; subsets of three coordinates; chain in F2[x]/(x^3).
    EXPECT_EQ(all_ideals(make_zmod(12)).size(), 6u);
    EXPECT_EQ(all_ideals(make_zmod(16)).size(), 5u);
    EXPECT_EQ(all_ideals(power(make_zmod(2), 3).ring).size(), 8u);
    FiniteRing z2 = make_zmod(2);
    EXPECT_EQ(all_ideals(poly_quotient(z2, Poly{{0, 0, 0, 1}}, {}).ring).size(), 4u);
}

TEST(Ideals, SumIntersectionProductColon) {
    FiniteRing z12 = make_zmod(12);
    Ideal i2 = ideal_generated(z12, {2});
    Ideal i3 = ideal_generated(z12, {3});
    Ideal i4 = ideal_generated(z12, {4});
    EXPECT_TRUE(ideal_sum(i2, i3).is_whole());
    EXPECT_EQ(ideal_intersection(i2, i3), ideal_generated(z12, {6}));
    EXPECT_EQ(ideal_product(i2, i2), i4);
    EXPECT_EQ(ideal_power(i2, 3), ideal_generated(z12, {8}));
    EXPECT_EQ(colon(zero_ideal(z12), i4), i3);
    EXPECT_EQ(colon(i4, i2), i2);
}

TEST(Ideals, ContractionAndImage) {
    FiniteRing z12 = make_zmod(12);
    QuotientRing q = quotient(z12, ideal_generated(z12, {4}));
    Ideal m = ideal_generated(q.ring, {q.projection(2)});
    EXPECT_EQ(contraction(q.projection, m), ideal_generated(z12, {2}));
    EXPECT_EQ(image_ideal(q.projection, ideal_generated(z12, {6})), m);
}

TEST(Ideals, SpectrumOfAProduct) {
    SpectrumReport s = spectrum(make_zmod(12));
    EXPECT_EQ(s.primes.size(), 2u);
    EXPECT_EQ(s.maximals.size(), 2u);
    EXPECT_EQ(s.nilradical, ideal_generated(make_zmod(12), {6}));
    EXPECT_EQ(s.jacobson, s.nilradical);
    for (const Ideal& m : s.maximals) {
        EXPECT_TRUE(is_prime_ideal(m));
        EXPECT_TRUE(is_maximal_ideal(m));
        EXPECT_TRUE(is_field(quotient(make_zmod(12), m).ring));
    }
}

TEST(Ideals, NilpotentElements) {
    FiniteRing z8 = make_zmod(8);
    for (Index a = 0; a < 8; ++a) EXPECT_EQ(is_nilpotent(z8, a), a % 2 == 0);
}
