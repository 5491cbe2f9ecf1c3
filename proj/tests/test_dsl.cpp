#include <gtest/gtest.h>

#include <random>

#include "ringlat/dsl.hpp"
#include "ringlat/ringlat.hpp"

using namespace ringlat;

namespace {

ErrorKind kind_of(std::string_view text) {
    try {
        parse_ring(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::unreachable_case;
}

class AstGenerator {
public:
    explicit AstGenerator(std::uint64_t seed) : rng_(seed) {}

    ElemPtr elem(int depth) {
        auto e = std::make_shared<ElemExpr>();
        const std::uint64_t pick = depth <= 0 ? rng_() % 2 : rng_() % 7;
        switch (pick) {
            case 0:
                e->kind = ElemExpr::Kind::integer;
                e->value = 1 + rng_() % 20;
                break;
            case 1:
                e->kind = ElemExpr::Kind::name;
                e->name = names_[rng_() % names_.size()];
                break;
            case 2: binary(*e, ElemExpr::Kind::add, depth); break;
            case 3: binary(*e, ElemExpr::Kind::sub, depth); break;
            case 4: binary(*e, ElemExpr::Kind::mul, depth); break;
            case 5:
                e->kind = ElemExpr::Kind::neg;
                e->args.push_back(elem(depth - 1));
                break;
            default:
                e->kind = ElemExpr::Kind::pow;
                e->value = 1 + rng_() % 5;
                e->args.push_back(elem(depth - 1));
                break;
        }
        return e;
    }

    RingPtr ring(int depth) {
        auto r = std::make_shared<RingExpr>();
        const std::uint64_t pick = depth <= 0 ? rng_() % 2 : rng_() % 6;
        switch (pick) {
            case 0:
                r->kind = RingExpr::Kind::zmod;
                r->n = 2 + rng_() % 40;
                break;
            case 1:
                r->kind = RingExpr::Kind::gf;
                r->p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng_() % 4];
                r->k = 1 + rng_() % 3;
                break;
            case 2:
                r->kind = RingExpr::Kind::product;
                for (std::uint64_t i = 0, n = 2 + rng_() % 2; i < n; ++i) r->children.push_back(ring(depth - 1));
                break;
            case 3:
                r->kind = RingExpr::Kind::poly_quot;
                r->children.push_back(ring(depth - 1));
                r->var = names_[rng_() % names_.size()];
                for (std::uint64_t i = 0, n = 1 + rng_() % 3; i < n; ++i) r->elems.push_back(elem(2));
                break;
            case 4:
                r->kind = RingExpr::Kind::quot;
                r->children.push_back(ring(depth - 1));
                for (std::uint64_t i = 0, n = 1 + rng_() % 2; i < n; ++i) r->elems.push_back(elem(2));
                break;
            default:
                r->kind = RingExpr::Kind::idealize;
                r->children.push_back(ring(depth - 1));
                for (std::uint64_t i = 0, n = 1 + rng_() % 3; i < n; ++i) {
                    CyclicSpec c;
                    for (std::uint64_t j = 0, m = rng_() % 3; j < m; ++j) c.generators.push_back(elem(1));
                    r->module.summands.push_back(std::move(c));
                }
                break;
        }
        return r;
    }

private:
    void binary(ElemExpr& e, ElemExpr::Kind kind, int depth) {
        e.kind = kind;
        e.args.push_back(elem(depth - 1));
        e.args.push_back(elem(depth - 1));
    }

    std::mt19937_64 rng_;
    std::vector<std::string> names_{"t", "u", "x", "a", "y2"};
};

}  // namespace

TEST(Dsl, DocumentedExamplesParse) {
    RingPtr p = parse_ring("Z/4 x Z/4");
    ASSERT_EQ(p->kind, RingExpr::Kind::product);
    ASSERT_EQ(p->children.size(), 2u);
    EXPECT_EQ(p->children[0]->kind, RingExpr::Kind::zmod);
    EXPECT_EQ(p->children[1]->n, 4u);

    RingPtr g = parse_ring("GF(2^2)");
    EXPECT_EQ(g->kind, RingExpr::Kind::gf);
    EXPECT_EQ(g->p, 2u);
    EXPECT_EQ(g->k, 2u);

    RingPtr s = parse_ring("(Z/2[t]/(t^2))[x]/(x^2-t, x*t)");
    ASSERT_EQ(s->kind, RingExpr::Kind::poly_quot);
    EXPECT_EQ(s->var, "x");
    EXPECT_EQ(s->elems.size(), 2u);
    EXPECT_EQ(s->children[0]->kind, RingExpr::Kind::poly_quot);
    EXPECT_EQ(evaluate(s)->ring.order(), 8u);
}

TEST(Dsl, ProductsAreFlatUnlessParenthesized) {
    EXPECT_EQ(parse_ring("Z/2 x Z/3 x Z/5")->children.size(), 3u);
    RingPtr nested = parse_ring("(Z/2 x Z/3) x Z/5");
    ASSERT_EQ(nested->children.size(), 2u);
    EXPECT_EQ(nested->children[0]->kind, RingExpr::Kind::product);
    EXPECT_EQ(evaluate(nested)->ring.order(), 30u);
}

TEST(Dsl, PrintParseRoundTrip) {
    AstGenerator gen(20241016);
    for (int i = 0; i < 500; ++i) {
        RingPtr r = gen.ring(3);
        const std::string text = print(r);
        RingPtr back = parse_ring(text);
        ASSERT_TRUE(same(r, back)) << text << "  reprinted as  " << print(back);
        EXPECT_EQ(print(back), text);
    }
    for (int i = 0; i < 500; ++i) {
        ElemPtr e = gen.elem(4);
        const std::string text = print(e);
        std::vector<ElemPtr> back = parse_elements(text);
        ASSERT_EQ(back.size(), 1u) << text;
        ASSERT_TRUE(same(e, back[0])) << text << "  reprinted as  " << print(back[0]);
    }
}

TEST(Dsl, ElementSyntax) {
    std::vector<ElemPtr> e = parse_elements("2t, -t + 1, t^3 - 2*t, (1, 2)");
    ASSERT_EQ(e.size(), 4u);
    EXPECT_EQ(e[0]->kind, ElemExpr::Kind::mul);
    EXPECT_EQ(e[1]->kind, ElemExpr::Kind::add);
    EXPECT_EQ(e[1]->args[0]->kind, ElemExpr::Kind::neg);
    EXPECT_EQ(e[2]->kind, ElemExpr::Kind::sub);
    EXPECT_EQ(e[3]->kind, ElemExpr::Kind::tuple);
}

TEST(Dsl, SyntaxErrorsCarryLineAndColumn) {
    try {
        parse_ring("Z/4 x\n  Z/");
        FAIL() << "expected a syntax error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::syntax);
        EXPECT_NE(std::string(e.what()).find("line 2, column"), std::string::npos) << e.what();
    }
    EXPECT_EQ(kind_of("Z/4 x"), ErrorKind::syntax);
    EXPECT_EQ(kind_of("GF(2"), ErrorKind::syntax);
    EXPECT_EQ(kind_of("Z/4 $"), ErrorKind::syntax);
    EXPECT_EQ(kind_of("Z/4 Z/4"), ErrorKind::syntax);
    EXPECT_EQ(kind_of("Z/99999999999999999999999"), ErrorKind::syntax);
}

TEST(Dsl, InputSizeIsBounded) {
    std::string big(max_source_size + 1, ' ');
    big += "Z/2";
    EXPECT_EQ(kind_of(big), ErrorKind::size_limit);
    std::string fits(max_source_size - 8, ' ');
    fits += "Z/2";
    EXPECT_EQ(parse_ring(fits)->n, 2u);
}

TEST(Dsl, EvaluationOfAtoms) {
    EXPECT_EQ(evaluate("Z/12")->ring.order(), 12u);
    BuiltPtr f4 = evaluate("GF(4)");
    EXPECT_EQ(f4->ring.order(), 4u);
    EXPECT_TRUE(is_field(f4->ring));
    BuiltPtr f8 = evaluate("GF(2^3)");
    Index a = f8->eval(parse_elements("a")[0]);
    EXPECT_EQ(f8->ring.pow(a, 7), f8->ring.one());
    EXPECT_NE(a, f8->ring.one());
    try {
        evaluate("GF(6)");
        FAIL() << "6 is not a prime power";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_characteristic);
    }
}

TEST(Dsl, QuotientsAndSizeLimits) {
    EXPECT_EQ(evaluate("Z/12/(4)")->ring.order(), 4u);
    EXPECT_EQ(evaluate("(Z/4 x Z/4)/((2, 0))")->ring.order(), 8u);
    Limits tight;
    tight.max_order = 64;
    try {
        evaluate("Z/8 x Z/8 x Z/8", tight);
        FAIL() << "expected size_limit";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::size_limit);
    }
}

TEST(Dsl, NaturalMaps) {
    BuiltPtr base = evaluate("Z/2[t]/(t^2)");
    BuiltPtr top = evaluate("(Z/2[t]/(t^2))[x]/(x^2 - t, x*t)");
    std::optional<RingHom> f = natural_map(*base, *top);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->is_injective());
    Index t = top->eval(parse_elements("t")[0]);
    Index x = top->eval(parse_elements("x")[0]);
    EXPECT_EQ(top->ring.mul(x, x), t);
    EXPECT_EQ(f->image().size(), 4u);

    BuiltPtr z4 = evaluate("Z/4");
    BuiltPtr prod = evaluate("Z/4 x Z/2");
    RingHom diag = *natural_map(*z4, *prod);
    EXPECT_EQ(diag(1), prod->ring.one());
    EXPECT_TRUE(diag.is_injective());
    RingHom ff = first_factor_map(*z4, *prod);
    EXPECT_FALSE(ff.check().has_value());
    EXPECT_THROW(first_factor_map(*evaluate("GF(4)"), *evaluate("GF(4) x GF(4)")), Error);
    EXPECT_THROW(explicit_map(*z4, *prod, {0, 1}), Error);
}
