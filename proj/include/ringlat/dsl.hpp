#pragma once

/**
 * @file dsl.hpp
 * @brief Ring-expression language: parser with line/column diagnostics,
 *        canonical printer, and an evaluator producing concrete rings.
 *
 * Ring expressions
 *   ring    := term { "x" term }                 (one n-ary product)
 *   term    := atom { "[" name "]" "/" "(" elem { "," elem } ")"    first elem is the monic
 *                   | "/" "(" elem { "," elem } ")" }                 quotient by an ideal
 *   atom    := "Z/" int | "GF(" int [ "^" int ] ")" | "idealize(" ring "," modspec ")" | "(" ring ")"
 *   modspec := cyc { "+" cyc }        cyc := "R" [ "/" "(" elem { "," elem } ")" ]
 *
 * Element expressions
 *   elem    := [ "-" ] prod { ("+" | "-") prod }
 *   prod    := pow { "*" pow }       an integer directly followed by a name multiplies ("2t")
 *   pow     := base [ "^" int ]
 *   base    := int | name | "(" elem ")" | "(" elem "," elem { "," elem } ")"
 *
 * GF(q) with a prime power q is the same field as GF(p^k) with q = p^k.
 *
 * Names are bound by polynomial quotients (their variable) and by GF(p^k)
 * with k > 1 (the generator `a`). Tuples are elements of products, or
 * (r, m₁, ..., m_k) in an idealization over a sum of k cyclic modules.
 * The product operator "x" must be separated by whitespace.
 */

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlat/construct.hpp"
#include "ringlat/idealization.hpp"
#include "ringlat/module.hpp"

namespace ringlat {

inline constexpr std::size_t max_source_size = 64 * 1024;

struct ElemExpr;
using ElemPtr = std::shared_ptr<const ElemExpr>;

struct ElemExpr {
    enum class Kind { integer, name, add, sub, mul, neg, pow, tuple };
    Kind kind = Kind::integer;
    /// Literal value, or the exponent of `pow`.
    std::uint64_t value = 0;
    std::string name;
    std::vector<ElemPtr> args;
};

struct CyclicSpec {
    /// R/(generators); empty means R itself.
    std::vector<ElemPtr> generators;
};

struct ModuleSpec {
    std::vector<CyclicSpec> summands;
};

struct RingExpr;
using RingPtr = std::shared_ptr<const RingExpr>;

struct RingExpr {
    enum class Kind { zmod, gf, product, poly_quot, quot, idealize };
    Kind kind = Kind::zmod;
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t k = 1;
    /// Product factors, or the single base ring.
    std::vector<RingPtr> children;
    std::string var;
    /// poly_quot: monic then relations; quot: ideal generators.
    std::vector<ElemPtr> elems;
    ModuleSpec module;
};

// ---------------------------------------------------------------------------
// Structural equality

inline bool same(const ElemPtr& a, const ElemPtr& b);

inline bool same_list(const std::vector<ElemPtr>& a, const std::vector<ElemPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!same(a[i], b[i])) return false;
    }
    return true;
}

inline bool same(const ElemPtr& a, const ElemPtr& b) {
    return a->kind == b->kind && a->value == b->value && a->name == b->name && same_list(a->args, b->args);
}

inline bool same(const RingPtr& a, const RingPtr& b) {
    if (a->kind != b->kind || a->n != b->n || a->p != b->p || a->k != b->k || a->var != b->var) return false;
    if (a->children.size() != b->children.size() || !same_list(a->elems, b->elems)) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (!same(a->children[i], b->children[i])) return false;
    }
    if (a->module.summands.size() != b->module.summands.size()) return false;
    for (std::size_t i = 0; i < a->module.summands.size(); ++i) {
        if (!same_list(a->module.summands[i].generators, b->module.summands[i].generators)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace detail {

struct Token {
    enum class Kind { integer, name, punct, end };
    Kind kind = Kind::end;
    std::string text;
    std::uint64_t value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
    if (src.size() > max_source_size) {
        throw Error(ErrorKind::size_limit, "input exceeds " + std::to_string(max_source_size) + " bytes");
    }
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::syntax, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::integer;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                const std::uint64_t d = static_cast<std::uint64_t>(src[i] - '0');
                if (t.value > (UINT64_MAX - d) / 10) fail("integer literal overflows");
                t.value = t.value * 10 + d;
                ++i;
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::name;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
        } else if (std::string_view("()[],+-*^/").find(c) != std::string_view::npos) {
            t.kind = Token::Kind::punct;
            ++i;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(src.substr(start, i - start));
        col += i - start;
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    RingPtr ring_document() {
        RingPtr r = ring();
        expect_end();
        return r;
    }

    ModuleSpec module_document() {
        ModuleSpec m = modspec();
        expect_end();
        return m;
    }

    std::vector<ElemPtr> elem_list_document() {
        std::vector<ElemPtr> out{elem()};
        while (accept(",")) out.push_back(elem());
        expect_end();
        return out;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string near = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        throw Error(ErrorKind::syntax,
                    "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + msg + " near " + near);
    }

    bool is_punct(const char* p, std::size_t ahead = 0) const {
        return peek(ahead).kind == Token::Kind::punct && peek(ahead).text == p;
    }
    bool is_name(const char* n) const { return peek().kind == Token::Kind::name && peek().text == n; }

    bool accept(const char* p) {
        if (!is_punct(p)) return false;
        ++pos_;
        return true;
    }
    void expect(const char* p) {
        if (!accept(p)) fail(std::string("expected '") + p + "'");
    }
    void expect_name(const char* n) {
        if (!is_name(n)) fail(std::string("expected '") + n + "'");
        ++pos_;
    }
    std::uint64_t integer() {
        if (peek().kind != Token::Kind::integer) fail("expected an integer");
        return tokens_[pos_++].value;
    }
    void expect_end() {
        if (peek().kind != Token::Kind::end) fail("unexpected trailing input");
    }

    RingPtr ring() {
        RingPtr first = term();
        if (!is_name("x")) return first;
        auto prod = std::make_shared<RingExpr>();
        prod->kind = RingExpr::Kind::product;
        prod->children.push_back(first);
        while (is_name("x")) {
            ++pos_;
            prod->children.push_back(term());
        }
        return prod;
    }

    RingPtr term() {
        RingPtr base = atom();
        for (;;) {
            if (accept("[")) {
                auto e = std::make_shared<RingExpr>();
                e->kind = RingExpr::Kind::poly_quot;
                e->children.push_back(base);
                if (peek().kind != Token::Kind::name) fail("expected a variable name");
                e->var = tokens_[pos_++].text;
                expect("]");
                expect("/");
                expect("(");
                e->elems = elem_list_until_paren();
                base = e;
            } else if (is_punct("/") && is_punct("(", 1)) {
                pos_ += 2;
                auto e = std::make_shared<RingExpr>();
                e->kind = RingExpr::Kind::quot;
                e->children.push_back(base);
                e->elems = elem_list_until_paren();
                base = e;
            } else {
                return base;
            }
        }
    }

    std::vector<ElemPtr> elem_list_until_paren() {
        std::vector<ElemPtr> out{elem()};
        while (accept(",")) out.push_back(elem());
        expect(")");
        return out;
    }

    RingPtr atom() {
        auto e = std::make_shared<RingExpr>();
        if (is_name("Z")) {
            ++pos_;
            expect("/");
            e->kind = RingExpr::Kind::zmod;
            e->n = integer();
            return e;
        }
        if (is_name("GF")) {
            ++pos_;
            expect("(");
            e->kind = RingExpr::Kind::gf;
            e->p = integer();
            if (accept("^")) e->k = integer();
            expect(")");
            return e;
        }
        if (is_name("idealize")) {
            ++pos_;
            expect("(");
            e->kind = RingExpr::Kind::idealize;
            e->children.push_back(ring());
            expect(",");
            e->module = modspec();
            expect(")");
            return e;
        }
        if (accept("(")) {
            RingPtr inner = ring();
            expect(")");
            return inner;
        }
        fail("expected a ring expression");
    }

    ModuleSpec modspec() {
        ModuleSpec m;
        m.summands.push_back(cyclic());
        while (accept("+")) m.summands.push_back(cyclic());
        return m;
    }

    CyclicSpec cyclic() {
        expect_name("R");
        CyclicSpec c;
        if (accept("/")) {
            expect("(");
            c.generators = elem_list_until_paren();
        }
        return c;
    }

    static ElemPtr node(ElemExpr::Kind kind, std::vector<ElemPtr> args, std::uint64_t value = 0) {
        auto e = std::make_shared<ElemExpr>();
        e->kind = kind;
        e->args = std::move(args);
        e->value = value;
        return e;
    }

    ElemPtr elem() {
        const bool negate = accept("-");
        ElemPtr acc = product();
        if (negate) acc = node(ElemExpr::Kind::neg, {acc});
        for (;;) {
            if (accept("+")) {
                acc = node(ElemExpr::Kind::add, {acc, product()});
            } else if (accept("-")) {
                acc = node(ElemExpr::Kind::sub, {acc, product()});
            } else {
                return acc;
            }
        }
    }

    ElemPtr product() {
        ElemPtr acc = power();
        for (;;) {
            if (accept("*")) {
                acc = node(ElemExpr::Kind::mul, {acc, power()});
            } else if (acc->kind == ElemExpr::Kind::integer && peek().kind == Token::Kind::name) {
                acc = node(ElemExpr::Kind::mul, {acc, power()});
            } else {
                return acc;
            }
        }
    }

    ElemPtr power() {
        ElemPtr b = elem_atom();
        if (accept("^")) return node(ElemExpr::Kind::pow, {b}, integer());
        return b;
    }

    ElemPtr elem_atom() {
        if (peek().kind == Token::Kind::integer) return node(ElemExpr::Kind::integer, {}, integer());
        if (peek().kind == Token::Kind::name) {
            auto e = std::make_shared<ElemExpr>();
            e->kind = ElemExpr::Kind::name;
            e->name = tokens_[pos_++].text;
            return e;
        }
        if (accept("(")) {
            std::vector<ElemPtr> items = elem_list_until_paren();
            if (items.size() == 1) return items[0];
            return node(ElemExpr::Kind::tuple, std::move(items));
        }
        fail("expected an element expression");
    }
};

}  // namespace detail

inline RingPtr parse_ring(std::string_view text) { return detail::Parser(text).ring_document(); }
inline ModuleSpec parse_module(std::string_view text) { return detail::Parser(text).module_document(); }
inline std::vector<ElemPtr> parse_elements(std::string_view text) { return detail::Parser(text).elem_list_document(); }

// ---------------------------------------------------------------------------
// Printer

namespace detail {

/// Precedence: 0 top, 1 sum / negation, 2 right of a sum, 3 product, 4 right of a product, 5 power base.
inline int elem_precedence(const ElemExpr& e) {
    switch (e.kind) {
        case ElemExpr::Kind::add:
        case ElemExpr::Kind::sub:
        case ElemExpr::Kind::neg: return 1;
        case ElemExpr::Kind::mul: return 3;
        case ElemExpr::Kind::pow: return 5;
        default: return 6;
    }
}

}  // namespace detail

inline std::string print(const ElemPtr& e, int context = 0) {
    std::string s;
    switch (e->kind) {
        case ElemExpr::Kind::integer: s = std::to_string(e->value); break;
        case ElemExpr::Kind::name: s = e->name; break;
        case ElemExpr::Kind::add: s = print(e->args[0], 1) + " + " + print(e->args[1], 2); break;
        case ElemExpr::Kind::sub: s = print(e->args[0], 1) + " - " + print(e->args[1], 2); break;
        case ElemExpr::Kind::neg: s = "-" + print(e->args[0], 3); break;
        case ElemExpr::Kind::mul: s = print(e->args[0], 3) + "*" + print(e->args[1], 4); break;
        case ElemExpr::Kind::pow: s = print(e->args[0], 6) + "^" + std::to_string(e->value); break;
        case ElemExpr::Kind::tuple:
            s = "(";
            for (std::size_t i = 0; i < e->args.size(); ++i) s += (i ? ", " : "") + print(e->args[i], 0);
            s += ")";
            break;
    }
    // A leading negation only parses at the start of a sum.
    const bool wrap = detail::elem_precedence(*e) < context || (e->kind == ElemExpr::Kind::neg && context > 1);
    return wrap ? "(" + s + ")" : s;
}

inline std::string print_list(const std::vector<ElemPtr>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + print(items[i]);
    return s;
}

inline std::string print(const ModuleSpec& m) {
    std::string s;
    for (std::size_t i = 0; i < m.summands.size(); ++i) {
        s += i ? " + R" : "R";
        if (!m.summands[i].generators.empty()) s += "/(" + print_list(m.summands[i].generators) + ")";
    }
    return s;
}

inline std::string print(const RingPtr& e) {
    auto postfix_base = [](const RingPtr& b) {
        return b->kind == RingExpr::Kind::product ? "(" + print(b) + ")" : print(b);
    };
    switch (e->kind) {
        case RingExpr::Kind::zmod: return "Z/" + std::to_string(e->n);
        case RingExpr::Kind::gf:
            return e->k == 1 ? "GF(" + std::to_string(e->p) + ")"
                             : "GF(" + std::to_string(e->p) + "^" + std::to_string(e->k) + ")";
        case RingExpr::Kind::product: {
            std::string s;
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i) s += " x ";
                s += postfix_base(e->children[i]);
            }
            return s;
        }
        case RingExpr::Kind::poly_quot:
            return postfix_base(e->children[0]) + "[" + e->var + "]/(" + print_list(e->elems) + ")";
        case RingExpr::Kind::quot: return postfix_base(e->children[0]) + "/(" + print_list(e->elems) + ")";
        case RingExpr::Kind::idealize: return "idealize(" + print(e->children[0]) + ", " + print(e->module) + ")";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Evaluator

struct BuiltRing;
using BuiltPtr = std::shared_ptr<const BuiltRing>;

struct BuiltRing {
    RingPtr expr;
    FiniteRing ring;
    /// Base ring of a polynomial quotient, quotient or idealization.
    BuiltPtr base;
    /// Base → this ring for those constructions.
    std::optional<RingHom> structure_map;
    std::vector<BuiltPtr> factors;
    std::optional<ProductRing> product;
    std::string var;
    Index generator = 0;
    std::optional<Idealization> idealization;
    /// Summands of the idealized module and the class of 1 in each.
    std::vector<FiniteModule> summands;
    std::vector<Index> summand_ones;

    /// Element of this ring denoted by an element expression.
    Index eval(const ElemPtr& e) const {
        const FiniteRing& r = ring;
        switch (e->kind) {
            case ElemExpr::Kind::integer: return r.integer(static_cast<std::int64_t>(e->value % (r.order() * 1ULL)));
            case ElemExpr::Kind::name:
                if (!var.empty() && e->name == var) return generator;
                if (base && structure_map) return (*structure_map)(base->eval(e));
                throw Error(ErrorKind::precondition, "unknown name '" + e->name + "' in " + r.label());
            case ElemExpr::Kind::add: return r.add(eval(e->args[0]), eval(e->args[1]));
            case ElemExpr::Kind::sub: return r.sub(eval(e->args[0]), eval(e->args[1]));
            case ElemExpr::Kind::mul: return r.mul(eval(e->args[0]), eval(e->args[1]));
            case ElemExpr::Kind::neg: return r.neg(eval(e->args[0]));
            case ElemExpr::Kind::pow: return r.pow(eval(e->args[0]), e->value);
            case ElemExpr::Kind::tuple: return eval_tuple(e->args);
        }
        throw Error(ErrorKind::unreachable_case, "element expression kind");
    }

    /// Polynomial over this ring in the variable `x`.
    Poly eval_poly(const ElemPtr& e, const std::string& x) const {
        const FiniteRing& r = ring;
        switch (e->kind) {
            case ElemExpr::Kind::name:
                if (e->name == x) return variable_poly(r);
                return constant_poly(r, eval(e));
            case ElemExpr::Kind::add: return poly_add(r, eval_poly(e->args[0], x), eval_poly(e->args[1], x));
            case ElemExpr::Kind::sub: return poly_sub(r, eval_poly(e->args[0], x), eval_poly(e->args[1], x));
            case ElemExpr::Kind::mul: return poly_mul(r, eval_poly(e->args[0], x), eval_poly(e->args[1], x));
            case ElemExpr::Kind::neg: return poly_neg(r, eval_poly(e->args[0], x));
            case ElemExpr::Kind::pow:
                if (e->value > 4096) throw Error(ErrorKind::size_limit, "exponent too large in a polynomial");
                return poly_pow(r, eval_poly(e->args[0], x), static_cast<unsigned>(e->value));
            default: return constant_poly(r, eval(e));
        }
    }

private:
    Index eval_tuple(const std::vector<ElemPtr>& items) const {
        if (product) {
            if (items.size() != factors.size()) {
                throw Error(ErrorKind::precondition, "tuple has " + std::to_string(items.size()) + " entries, expected " +
                                                         std::to_string(factors.size()));
            }
            std::vector<Index> c(items.size());
            for (std::size_t i = 0; i < items.size(); ++i) c[i] = factors[i]->eval(items[i]);
            return product->encode(c);
        }
        if (idealization) {
            if (items.size() != summands.size() + 1) {
                throw Error(ErrorKind::precondition, "idealization tuple needs 1 + " + std::to_string(summands.size()) +
                                                         " entries");
            }
            const Index r = base->eval(items[0]);
            std::size_t m = 0;
            for (std::size_t j = 0; j < summands.size(); ++j) {
                m = m * summands[j].order() + summands[j].act(base->eval(items[j + 1]), summand_ones[j]);
            }
            return idealization->pair(r, static_cast<Index>(m));
        }
        throw Error(ErrorKind::precondition, "tuples denote elements of products or idealizations only");
    }
};

inline Ideal eval_ideal(const BuiltRing& r, const std::vector<ElemPtr>& gens) {
    ElementSet g;
    for (const ElemPtr& e : gens) g.push_back(r.eval(e));
    return ideal_generated(r.ring, g);
}

/// Module over `r` described by a sum of cyclic summands.
inline std::pair<std::vector<FiniteModule>, std::vector<Index>> eval_summands(const BuiltRing& r, const ModuleSpec& spec) {
    std::vector<FiniteModule> parts;
    std::vector<Index> ones;
    for (const CyclicSpec& c : spec.summands) {
        Ideal i = c.generators.empty() ? zero_ideal(r.ring) : eval_ideal(r, c.generators);
        FiniteModule m = cyclic_module(r.ring, i);
        ones.push_back(m.act(r.ring.one(), i.is_whole() ? m.zero() : quotient(r.ring, i).ring.one()));
        parts.push_back(std::move(m));
    }
    return {parts, ones};
}

inline FiniteModule eval_module(const BuiltRing& r, const ModuleSpec& spec, const Limits& limits = default_limits()) {
    return direct_sum(eval_summands(r, spec).first, limits);
}

inline BuiltPtr evaluate(const RingPtr& e, const Limits& limits = default_limits()) {
    auto out = std::make_shared<BuiltRing>();
    out->expr = e;
    switch (e->kind) {
        case RingExpr::Kind::zmod:
            if (e->n > limits.max_order) throw Error(ErrorKind::size_limit, "Z/" + std::to_string(e->n) + " is too large");
            out->ring = make_zmod(static_cast<std::int64_t>(e->n), limits);
            break;
        case RingExpr::Kind::gf: {
            if (e->p > limits.max_order || e->k > 64) throw Error(ErrorKind::size_limit, "field is too large");
            auto p = static_cast<std::int64_t>(e->p);
            auto k = static_cast<std::int64_t>(e->k);
            // GF(q) with q = p^k written as a single prime power.
            if (k == 1 && p > 1 && !is_prime_number(e->p)) {
                std::int64_t d = 2;
                while (p % d != 0) ++d;
                std::int64_t rest = p;
                k = 0;
                while (rest % d == 0) {
                    rest /= d;
                    ++k;
                }
                if (rest != 1) throw Error(ErrorKind::invalid_characteristic, std::to_string(p) + " is not a prime power");
                p = d;
            }
            out->ring = make_gf(p, k, limits);
            if (k > 1) {
                FiniteRing zp = make_zmod(p, limits);
                PolyQuotient pq = poly_quotient(zp, first_irreducible(zp, static_cast<std::size_t>(k)), {}, out->ring.label(), limits);
                auto base = std::make_shared<BuiltRing>();
                base->ring = zp;
                out->base = base;
                out->structure_map = pq.embedding;
                out->var = "a";
                out->generator = pq.generator;
            }
            break;
        }
        case RingExpr::Kind::product: {
            std::vector<FiniteRing> rings;
            for (const RingPtr& c : e->children) {
                out->factors.push_back(evaluate(c, limits));
                rings.push_back(out->factors.back()->ring);
            }
            out->product = product(rings, limits);
            out->ring = out->product->ring;
            break;
        }
        case RingExpr::Kind::poly_quot: {
            out->base = evaluate(e->children[0], limits);
            const BuiltRing& b = *out->base;
            Poly monic = b.eval_poly(e->elems[0], e->var);
            std::vector<Poly> relations;
            for (std::size_t i = 1; i < e->elems.size(); ++i) relations.push_back(b.eval_poly(e->elems[i], e->var));
            PolyQuotient pq = poly_quotient(b.ring, monic, relations, print(e), limits);
            out->ring = pq.ring;
            out->structure_map = pq.embedding;
            out->var = e->var;
            out->generator = pq.generator;
            break;
        }
        case RingExpr::Kind::quot: {
            out->base = evaluate(e->children[0], limits);
            QuotientRing q = quotient(out->base->ring, eval_ideal(*out->base, e->elems), print(e));
            out->ring = q.ring;
            out->structure_map = q.projection;
            break;
        }
        case RingExpr::Kind::idealize: {
            out->base = evaluate(e->children[0], limits);
            auto [parts, ones] = eval_summands(*out->base, e->module);
            FiniteModule m = direct_sum(parts, limits);
            Idealization id = idealize(out->base->ring, m, limits);
            out->ring = id.ring;
            out->structure_map = id.embedding;
            out->idealization = std::move(id);
            out->summands = std::move(parts);
            out->summand_ones = std::move(ones);
            break;
        }
    }
    return out;
}

inline BuiltPtr evaluate(std::string_view text, const Limits& limits = default_limits()) {
    return evaluate(parse_ring(text), limits);
}

// ---------------------------------------------------------------------------
// Natural maps between evaluated rings

/// The natural unital map base → top: identity on equal rings, the map of a
/// construction built on base, the diagonal into a product, or the map from
/// a prime ring.
inline std::optional<RingHom> natural_map(const BuiltRing& base, const BuiltRing& top) {
    if (base.ring == top.ring) return identity_hom(top.ring);
    if (top.base && top.structure_map) {
        if (auto inner = natural_map(base, *top.base)) return compose(*top.structure_map, *inner);
    }
    if (top.product) {
        std::vector<RingHom> parts;
        for (const BuiltPtr& f : top.factors) {
            auto m = natural_map(base, *f);
            if (!m) break;
            parts.push_back(*m);
        }
        if (parts.size() == top.factors.size()) return product_hom(base.ring, *top.product, parts);
    }
    return prime_ring_map(base.ring, top.ring);
}

/// Natural map into the first factor and integer maps k·1 ↦ k·1 into the
/// others; needs base to be a prime ring.
inline RingHom first_factor_map(const BuiltRing& base, const BuiltRing& top) {
    if (!top.product) throw Error(ErrorKind::precondition, "first-factor embedding needs a product target");
    if (!is_prime_ring(base.ring)) throw Error(ErrorKind::precondition, "first-factor embedding needs a base of the form Z/n");
    std::vector<RingHom> parts;
    for (std::size_t i = 0; i < top.factors.size(); ++i) {
        std::optional<RingHom> m = i == 0 ? natural_map(base, *top.factors[0]) : prime_ring_map(base.ring, top.factors[i]->ring);
        if (!m) {
            throw Error(ErrorKind::precondition, "no compatible map into factor " + std::to_string(i + 1));
        }
        parts.push_back(*m);
    }
    return product_hom(base.ring, *top.product, parts);
}

/// Map given by the images of the base elements 0, 1, ..., |R|-1.
inline RingHom explicit_map(const BuiltRing& base, const BuiltRing& top, const std::vector<std::uint64_t>& images) {
    if (images.size() != base.ring.order()) {
        throw Error(ErrorKind::precondition, "explicit map needs " + std::to_string(base.ring.order()) + " images");
    }
    std::vector<Index> map;
    for (std::uint64_t v : images) {
        if (v >= top.ring.order()) throw Error(ErrorKind::precondition, "image index out of range");
        map.push_back(static_cast<Index>(v));
    }
    RingHom f(base.ring, top.ring, std::move(map));
    if (auto bad = f.check()) throw Error(ErrorKind::precondition, "explicit map is not a ring hom: " + *bad);
    return f;
}

}  // namespace ringlat
