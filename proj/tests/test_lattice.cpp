#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringlat/ringlat.hpp"
#include "ringlat/verify/corpus.hpp"

using namespace ringlat;
using verify::natural_extension;

namespace {

const std::vector<std::pair<std::string, std::string>>& cases() {
    static const std::vector<std::pair<std::string, std::string>> c{
        {"GF(2)", "GF(2) x GF(2) x GF(2)"},
        {"GF(2)", "GF(2^4)"},
        {"GF(3)", "GF(3) x GF(3)"},
        {"Z/4", "Z/4 x Z/4"},
        {"Z/8", "Z/8 x Z/2"},
        {"GF(2)", "GF(2)[t]/(t^3)"},
        {"Z/2[t]/(t^2)", "(Z/2[t]/(t^2))[x]/(x^2 - t, x*t)"},
        {"Z/12", "Z/4 x Z/3 x Z/3"},
        {"GF(2)", "GF(2^2) x GF(2)"},
    };
    return c;
}

}  // namespace

TEST(Lattice, EnumerationMatchesBruteForceSubrings) {
    for (const auto& [b, t] : cases()) {
        Extension ext = natural_extension(b, t).ext;
        LatticeReport lat = intermediate_algebras(ext);
        EXPECT_EQ(lat.nodes, oracle::subalgebras(ext.top(), ext.image())) << b << " -> " << t;
        EXPECT_EQ(lat.nodes.front(), ext.image());
        EXPECT_EQ(lat.nodes.back().size(), ext.top().order());
    }
}

TEST(Lattice, ShuffledEnumerationGivesTheSameReport) {
    for (const auto& [b, t] : cases()) {
        Extension ext = natural_extension(b, t).ext;
        LatticeReport plain = intermediate_algebras(ext);
        for (std::uint64_t seed : {1ULL, 77ULL, 123456789ULL}) {
            LatticeReport shuffled = intermediate_algebras(ext, default_limits(), EnumerationOptions{seed});
            EXPECT_EQ(shuffled.nodes, plain.nodes);
            EXPECT_EQ(shuffled.hasse_edges, plain.hasse_edges);
            EXPECT_EQ(shuffled.length, plain.length);
        }
    }
}

TEST(Lattice, HasseEdgesAreExactlyTheCovers) {
    for (const auto& [b, t] : cases()) {
        LatticeReport lat = intermediate_algebras(natural_extension(b, t).ext);
        std::set<std::pair<std::size_t, std::size_t>> covers;
        for (std::size_t i = 0; i < lat.count; ++i) {
            for (std::size_t j = 0; j < lat.count; ++j) {
                if (i == j || !is_subset(lat.nodes[i], lat.nodes[j])) continue;
                bool between = false;
                for (std::size_t k = 0; k < lat.count && !between; ++k) {
                    between = k != i && k != j && is_subset(lat.nodes[i], lat.nodes[k]) && is_subset(lat.nodes[k], lat.nodes[j]);
                }
                if (!between) covers.insert({i, j});
            }
        }
        std::set<std::pair<std::size_t, std::size_t>> edges(lat.hasse_edges.begin(), lat.hasse_edges.end());
        EXPECT_EQ(edges, covers) << b << " -> " << t;
    }
}

TEST(Lattice, FrozenCountsAndLengths) {
    struct Row {
        const char* base;
        const char* top;
        std::size_t count;
        std::size_t length;
    };
    // Subfields of F16 are F2, F4, F16; F2^3 has the five partitions of three points.
    for (const Row& r : {Row{"GF(2)", "GF(2^4)", 3, 2}, Row{"GF(2)", "GF(2) x GF(2) x GF(2)", 5, 2},
                         Row{"Z/8", "Z/8 x Z/8", 4, 3}, Row{"Z/4", "Z/4 x Z/4", 3, 2},
                         Row{"Z/12", "Z/4 x Z/3 x Z/3", 2, 1}}) {
        LatticeReport lat = intermediate_algebras(natural_extension(r.base, r.top).ext);
        EXPECT_EQ(lat.count, r.count) << r.base << " -> " << r.top;
        EXPECT_EQ(lat.length, r.length) << r.base << " -> " << r.top;
        EXPECT_EQ(lat.maximal_chain.size(), r.length + 1);
        EXPECT_TRUE(lat.graded);
    }
}

TEST(Lattice, ChainEnumeration) {
    LatticeReport lat = intermediate_algebras(natural_extension("GF(2)", "GF(2) x GF(2) x GF(2)").ext);
    ChainInfo c = length_and_chains(lat);
    EXPECT_EQ(c.chains.size(), 3u);
    EXPECT_EQ(c.longest, 2u);
    EXPECT_EQ(c.shortest_maximal, 2u);
    EXPECT_FALSE(c.truncated);
}

TEST(Lattice, IrreducibleDecompositionsRecompose) {
    for (const auto& [b, t] : cases()) {
        LatticeReport lat = intermediate_algebras(natural_extension(b, t).ext);
        EXPECT_TRUE(lattice_is_closed(lat));
        for (const IrreducibleDecomposition& d : irreducible_decomposition(lat)) {
            EXPECT_TRUE(d.meet_verified && d.join_verified) << b << " -> " << t << " node " << d.node;
        }
    }
}

TEST(Lattice, DotOutputListsEveryEdge) {
    LatticeReport lat = intermediate_algebras(natural_extension("GF(2)", "GF(2) x GF(2) x GF(2)").ext);
    std::string dot = to_dot(lat, "f2cube");
    EXPECT_NE(dot.find("digraph f2cube"), std::string::npos);
    std::size_t arrows = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arrows;
    EXPECT_EQ(arrows, lat.hasse_edges.size());
}

TEST(Lattice, SizeLimitIsEnforced) {
    Limits tight;
    tight.max_lattice_order = 8;
    Extension ext = natural_extension("GF(2)", "GF(2^4)").ext;
    try {
        intermediate_algebras(ext, tight);
        FAIL() << "expected a size limit";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::size_limit);
    }
}

TEST(Extensions, NonInjectiveMapIsRejected) {
    FiniteRing z4 = make_zmod(4);
    QuotientRing q = quotient(z4, ideal_generated(z4, {2}));
    try {
        Extension bad(q.projection);
        FAIL() << "expected invalid extension";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_extension);
    }
}

TEST(Extensions, ConductorMatchesDefinition) {
    for (const auto& [b, t] : cases()) {
        Extension ext = natural_extension(b, t).ext;
        ElementSet brute;
        for (Index r = 0; r < ext.base().order(); ++r) {
            bool ok = true;
            for (Index s = 0; s < ext.top().order(); ++s) ok = ok && ext.in_base(ext.top().mul(ext.embed()(r), s));
            if (ok) brute.push_back(r);
        }
        EXPECT_EQ(conductor(ext).elements(), brute);
    }
}

TEST(Minimal, TheThreeKinds) {
    EXPECT_EQ(classify_minimal(natural_extension("GF(2)", "GF(4)").ext).kind, MinimalKind::inert);
    EXPECT_EQ(classify_minimal(natural_extension("GF(3)", "GF(27)").ext).kind, MinimalKind::inert);
    EXPECT_EQ(classify_minimal(natural_extension("GF(2)", "GF(2) x GF(2)").ext).kind, MinimalKind::decomposed);
    EXPECT_EQ(classify_minimal(natural_extension("GF(2)", "GF(2)[e]/(e^2)").ext).kind, MinimalKind::ramified);
    EXPECT_EQ(classify_minimal(natural_extension("Z/12", "Z/4 x Z/3 x Z/3").ext).kind, MinimalKind::decomposed);
    EXPECT_EQ(classify_minimal(natural_extension("Z/4", "Z/4[x]/(x^2 + x + 1)").ext).kind, MinimalKind::not_minimal);
    EXPECT_EQ(classify_minimal(natural_extension("GF(2)", "GF(2^4)").ext).kind, MinimalKind::not_minimal);
    // F2 inside F2^4 is not minimal: F4 lies between.
    EXPECT_FALSE(is_minimal(natural_extension("GF(2)", "GF(2^4)").ext));
}

TEST(Minimal, CrucialIdealIsTheSupport) {
    Extension ext = natural_extension("Z/12", "Z/4 x Z/3 x Z/3").ext;
    MinimalClassification c = classify_minimal(ext);
    std::vector<Ideal> support = support_of_extension(ext);
    ASSERT_EQ(support.size(), 1u);
    EXPECT_EQ(support[0], c.crucial);
    EXPECT_EQ(c.crucial, ideal_generated(ext.base(), {3}));
}

TEST(Predicates, IntegralityFlavours) {
    Extension inert = natural_extension("GF(2)", "GF(4)").ext;
    Extension dec = natural_extension("GF(2)", "GF(2) x GF(2)").ext;
    Extension ram = natural_extension("GF(2)", "GF(2)[e]/(e^2)").ext;
    for (const Extension* e : {&inert, &dec, &ram}) EXPECT_TRUE(is_integral(*e));
    EXPECT_FALSE(is_infra_integral(inert));
    EXPECT_TRUE(is_infra_integral(dec));
    EXPECT_TRUE(is_infra_integral(ram));
    EXPECT_FALSE(is_subintegral(dec));
    EXPECT_TRUE(is_subintegral(ram));
    EXPECT_TRUE(is_seminormal(inert));
    EXPECT_TRUE(is_seminormal(dec));
    EXPECT_FALSE(is_seminormal(ram));
    EXPECT_TRUE(is_tclosed(inert));
    EXPECT_FALSE(is_tclosed(dec));
}

TEST(Predicates, DeltaMatchesAdditiveSums) {
    for (const auto& [b, t] : cases()) {
        LatticeReport lat = intermediate_algebras(natural_extension(b, t).ext);
        bool brute = true;
        for (const ElementSet& x : lat.nodes) {
            for (const ElementSet& y : lat.nodes) {
                ElementSet sum;
                for (Index u : x) {
                    for (Index v : y) sum.push_back(lat.extension.top().add(u, v));
                }
                std::sort(sum.begin(), sum.end());
                sum.erase(std::unique(sum.begin(), sum.end()), sum.end());
                brute = brute && lat.index_of(sum).has_value();
            }
        }
        EXPECT_EQ(is_delta(lat), brute) << b << " -> " << t;
    }
}

TEST(Predicates, ConductorIdealBijectionForMonogenicExtension) {
    Extension ext = natural_extension("Z/4", "Z/4 x Z/4").ext;
    ConductorIdealBijection g = conductor_ideal_bijection(ext);
    EXPECT_TRUE(g.bijective);
    EXPECT_EQ(g.pairs.size(), 3u);
    EXPECT_TRUE(g.conductor.is_zero());
    try {
        conductor_ideal_bijection(natural_extension("GF(2)", "GF(2) x GF(2) x GF(2)").ext);
        FAIL() << "F2^3 needs two generators over F2";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_applicable);
    }
}

TEST(Predicates, PointwiseMinimality) {
    EXPECT_TRUE(is_pointwise_minimal(natural_extension("GF(4)", "GF(4) x GF(4)").ext));
    EXPECT_TRUE(is_pointwise_minimal(natural_extension("GF(2)", "GF(2) x GF(2) x GF(2)").ext));
    EXPECT_FALSE(is_pointwise_minimal(natural_extension("GF(2)", "GF(2^4)").ext));
    EXPECT_FALSE(is_pointwise_minimal(identity_extension(make_zmod(4))));
}
