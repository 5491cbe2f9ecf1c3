#include <gtest/gtest.h>

#include <set>

#include "ringlat/ringlat.hpp"
#include "ringlat/verify/corpus.hpp"

using namespace ringlat;

TEST(Partitions, BellAndStirlingFrozenValues) {
    const std::uint64_t bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};
    for (std::size_t n = 0; n <= max_partition_size; ++n) {
        EXPECT_EQ(bell(n), bells[n]) << n;
        EXPECT_EQ(bell_recurrence(n), bells[n]) << n;
    }
    EXPECT_EQ(stirling2(5, 2), 15u);
    EXPECT_EQ(stirling2(6, 3), 90u);
    EXPECT_EQ(stirling2(10, 4), 34105u);
    EXPECT_EQ(stirling2(4, 5), 0u);
}

TEST(Partitions, EnumerationAgreesWithRecurrence) {
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t p = 0; p <= n + 1; ++p) {
            EXPECT_EQ(stirling2(n, p), stirling2_recurrence(n, p)) << n << "," << p;
            EXPECT_EQ(partitions_into(n, p).size(), stirling2(n, p));
        }
    }
}

TEST(Partitions, SizeLimit) {
    try {
        bell(max_partition_size + 1);
        FAIL() << "expected size_limit";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::size_limit);
    }
}

TEST(Partitions, BlocksCoverEachPointOnce) {
    for (const Partition& p : partitions(5)) {
        std::vector<int> seen;
        int last_min = 0;
        for (const auto& b : p.blocks) {
            EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
            EXPECT_GT(b.front(), last_min);
            last_min = b.front();
            seen.insert(seen.end(), b.begin(), b.end());
        }
        std::sort(seen.begin(), seen.end());
        EXPECT_EQ(seen, (std::vector<int>{1, 2, 3, 4, 5}));
    }
}

TEST(Partitions, RefinementIsInclusionOfSubalgebras) {
    ProductRing k3 = power(make_zmod(2), 3);
    std::vector<Partition> all = partitions(3);
    for (const Partition& a : all) {
        for (const Partition& b : all) {
            EXPECT_EQ(refines(a, b), is_subset(partition_to_subalgebra(k3, b), partition_to_subalgebra(k3, a)));
        }
    }
}

TEST(Partitions, SubalgebrasOfAPowerOfTheTwoElementField) {
    for (std::size_t n = 1; n <= 4; ++n) {
        ProductRing kn = power(make_zmod(2), n);
        std::vector<ElementSet> expected;
        for (const Partition& p : partitions(n)) expected.push_back(partition_to_subalgebra(kn, p));
        std::sort(expected.begin(), expected.end(), canonical_less);
        Extension ext = verify::diagonal_power("GF(2)", n).ext;
        EXPECT_EQ(intermediate_algebras(ext).nodes, expected) << n;
    }
}

TEST(LambdaMatrices, ConditionsAndRoundTrip) {
    for (const FiniteRing& r : {make_zmod(2), make_zmod(6), make_zmod(4), power(make_zmod(2), 2).ring}) {
        MatrixSpaces spaces = matrix_spaces(r, 2, 3);
        for (const LambdaMatrix& a : enumerate_homal(r, 2, 3)) {
            EXPECT_TRUE(satisfies_lambda_conditions(r, a));
            RingHom phi = morphism_of(r, spaces, a);
            EXPECT_FALSE(phi.check().has_value()) << r.label();
            LambdaMatrix back = matrix_of(r, spaces, phi);
            EXPECT_EQ(back.entries, a.entries);
        }
    }
}

TEST(LambdaMatrices, HomalMatchesAllAlgebraMaps) {
    // Over a connected ring each row is a unit vector, so there are p^n maps.
    EXPECT_EQ(enumerate_homal(make_zmod(4), 2, 3).size(), 8u);
    EXPECT_EQ(enumerate_homal(make_zmod(2), 3, 2).size(), 9u);
    // Z/6 has four idempotents; rows are ordered pairs (e, 1 - e).
    EXPECT_EQ(enumerate_homal(make_zmod(6), 2, 2).size(), 16u);
}

TEST(LambdaMatrices, NonIdempotentRowsAreRejected) {
    FiniteRing z4 = make_zmod(4);
    EXPECT_FALSE(satisfies_lambda_conditions(z4, LambdaMatrix{1, 2, {2, 3}}));
    EXPECT_FALSE(satisfies_lambda_conditions(z4, LambdaMatrix{1, 2, {1, 1}}));
    EXPECT_TRUE(satisfies_lambda_conditions(z4, LambdaMatrix{1, 2, {0, 1}}));
}

TEST(Exal, ConnectedRingGivesStirlingNumbers) {
    for (const FiniteRing& r : {make_zmod(2), make_zmod(4), make_gf(3, 1)}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t p = 1; p <= n; ++p) {
                ExalCount c = count_exal(r, p, n);
                EXPECT_EQ(c.images, stirling2(n, p)) << r.label() << " " << n << "," << p;
                EXPECT_EQ(c.automorphisms, [p] {
                    std::size_t f = 1;
                    for (std::size_t i = 2; i <= p; ++i) f *= i;
                    return f;
                }());
                EXPECT_EQ(c.labeled, c.automorphisms * c.images);
            }
        }
    }
}

TEST(Exal, BoundsOverADisconnectedRing) {
    // Z/6 = F2 x F3: images are pairs of partitions, one per factor.
    ExalBoundReport r = exal_bound_check(make_zmod(6), 2, 3);
    EXPECT_EQ(r.minimal_primes, 2u);
    EXPECT_EQ(r.stirling, 3u);
    EXPECT_EQ(r.upper_bound, 9u);
    EXPECT_TRUE(r.lower_holds);
    EXPECT_TRUE(r.upper_holds);
    EXPECT_TRUE(r.orbit_identity_holds);
    EXPECT_GE(r.count.images, 3u);
}
