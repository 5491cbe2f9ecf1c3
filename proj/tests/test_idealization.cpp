#include <gtest/gtest.h>

#include "ringlat/dsl.hpp"
#include "ringlat/ringlat.hpp"
#include "ringlat/verify/corpus.hpp"

using namespace ringlat;

namespace {

FiniteModule module_of(const char* ring, const char* spec) {
    BuiltPtr r = evaluate(ring);
    return eval_module(*r, parse_module(spec));
}

/// Every subset containing 0 and closed under + and the action.
std::vector<ElementSet> brute_submodules(const FiniteModule& m) {
    std::vector<ElementSet> out;
    const std::size_t n = m.order();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (!(bits >> m.zero() & 1)) continue;
        auto in = [&](Index x) { return (bits >> x & 1) != 0; };
        bool closed = true;
        for (Index a = 0; a < n && closed; ++a) {
            if (!in(a)) continue;
            for (Index b = 0; b < n && closed; ++b) closed = !in(b) || in(m.add(a, b));
            for (Index r = 0; r < m.ring().order() && closed; ++r) closed = in(m.act(r, a));
        }
        if (!closed) continue;
        ElementSet s;
        for (Index x = 0; x < n; ++x) {
            if (in(x)) s.push_back(x);
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace

TEST(Modules, ConstructionsSatisfyTheAxioms) {
    for (const verify::ModulePair& p : verify::idealization_pairs()) {
        FiniteModule m = module_of(p.ring.c_str(), p.module.c_str());
        EXPECT_FALSE(check_module_axioms(m).has_value()) << p.ring << " " << p.module;
    }
}

TEST(Modules, SubmodulesMatchBruteForce) {
    for (const verify::ModulePair& p : verify::idealization_pairs()) {
        FiniteModule m = module_of(p.ring.c_str(), p.module.c_str());
        if (m.order() > 16) continue;
        EXPECT_EQ(submodules(m).nodes, brute_submodules(m)) << p.ring << " " << p.module;
    }
}

TEST(Modules, LengthAndAnnihilators) {
    EXPECT_EQ(module_length(module_of("Z/8", "R")), 3u);
    EXPECT_EQ(module_length(module_of("GF(2)", "R + R + R")), 3u);
    EXPECT_EQ(module_length(module_of("Z/4", "R + R/(2)")), 3u);
    FiniteModule m = module_of("Z/4", "R/(2) + R/(2)");
    EXPECT_FALSE(is_faithful(m));
    EXPECT_EQ(annihilator(m), ideal_generated(make_zmod(4), {2}));
    EXPECT_TRUE(is_faithful(module_of("Z/4", "R + R/(2)")));
}

TEST(Modules, CyclicUniserialStructure) {
    UniserialReport u = uniserial_structure_check(module_of("Z/8", "R"));
    EXPECT_EQ(u.chain.size(), 4u);
    EXPECT_TRUE(u.chain_matches);
    EXPECT_TRUE(u.count_matches);
    EXPECT_EQ(u.submodule_count, 4u);
    EXPECT_TRUE(is_uniserial(module_of("Z/9", "R")));
}

TEST(Modules, PlaneOverTwoElementFieldIsNotCyclic) {
    FiniteModule m = module_of("GF(2)", "R + R");
    EXPECT_FALSE(is_cyclic(m).has_value());
    EXPECT_FALSE(is_uniserial(m));
    EXPECT_EQ(submodules(m).count, 5u);
    try {
        uniserial_structure_check(m);
        FAIL() << "expected not_applicable";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_applicable);
    }
    EXPECT_THROW(uniserial_structure_check(module_of("Z/6", "R")), Error);
}

TEST(Idealization, RingAxiomsAndSquareZeroModule) {
    FiniteRing z4 = make_zmod(4);
    Idealization id = idealize(z4, module_of("Z/4", "R + R/(2)"));
    EXPECT_EQ(id.ring.order(), 32u);
    EXPECT_FALSE(check_ring_axioms(id.ring).has_value());
    for (Index m = 0; m < id.module.order(); ++m) {
        for (Index n = 0; n < id.module.order(); ++n) {
            EXPECT_EQ(id.ring.mul(id.pair(0, m), id.pair(0, n)), id.ring.zero());
        }
    }
    EXPECT_EQ(id.first(id.pair(3, 5)), 3u);
    EXPECT_EQ(id.second(id.pair(3, 5)), 5u);
}

TEST(Idealization, LatticeMatchesSubmodules) {
    for (const verify::ModulePair& p : verify::idealization_pairs()) {
        BuiltPtr r = evaluate(p.ring);
        Idealization id = idealize(r->ring, eval_module(*r, parse_module(p.module)));
        IdealizationBijection b = idealization_lattice_bijection(id);
        EXPECT_TRUE(b.bijective && b.order_preserving) << p.ring << " " << p.module;
        EXPECT_EQ(b.module_length, b.lattice_length) << p.ring << " " << p.module;
        if (p.expected_count) {
            EXPECT_EQ(b.submodule_count, *p.expected_count) << p.ring << " " << p.module;
        }
    }
}

TEST(Idealization, IntervalLengthIsQuotientLength) {
    FiniteRing z4 = make_zmod(4);
    Idealization id = idealize(z4, module_of("Z/4", "R + R/(2)"));
    for (const ElementSet& n : submodules(id.module).nodes) {
        IntervalReport r = interval_length(id, n);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.interval_length, r.quotient_length);
        EXPECT_EQ(r.interval_count, r.quotient_count);
    }
    EXPECT_THROW(interval_length(id, ElementSet{0, 2, 3}), Error);
}

TEST(Idealization, ComponentwiseCensus) {
    for (std::size_t n = 1; n <= 3; ++n) {
        CensusReport c = census_componentwise(make_zmod(2), n);
        EXPECT_EQ(c.submodule_count, c.expected);
        ASSERT_TRUE(c.lattice_count.has_value());
        EXPECT_EQ(*c.lattice_count, c.expected);
    }
    Limits tight;
    tight.max_lattice_order = 16;
    CensusReport skipped = census_componentwise(make_zmod(2), 3, tight);
    EXPECT_TRUE(skipped.skipped_lattice);
    EXPECT_EQ(skipped.submodule_count, 8u);
}

TEST(Idealization, DslTupleElements) {
    BuiltPtr r = evaluate("idealize(Z/4, R + R/(2))");
    ASSERT_TRUE(r->idealization.has_value());
    EXPECT_EQ(r->ring.order(), 32u);
    std::vector<ElemPtr> e = parse_elements("(1, 0, 1)");
    ASSERT_EQ(e.size(), 1u);
    Index x = r->eval(e[0]);
    // (1, m)^2 = (1, 2m) and 2m = 0 in R/(2).
    EXPECT_NE(x, r->ring.one());
    EXPECT_EQ(r->ring.mul(x, x), r->ring.one());
    EXPECT_EQ(r->idealization->first(x), r->idealization->first(r->ring.one()));
}
