#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: parses ring expressions, runs one command,
 *        and writes a JSON report (schema 1) or a plain integer.
 *
 * Exit codes: 0 success, 1 failed verification or violated formula,
 * 2 bad input or unmet precondition, 3 size limit.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "ringlat/closures.hpp"
#include "ringlat/combinatorics.hpp"
#include "ringlat/crt.hpp"
#include "ringlat/dsl.hpp"
#include "ringlat/idealization.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/minimal.hpp"
#include "ringlat/predicates.hpp"
#include "ringlat/verify/acceptance.hpp"

namespace ringlat {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::size_limit: return 3;
        case ErrorKind::formula_violation:
        case ErrorKind::classification_failure:
        case ErrorKind::unreachable_case: return 1;
        default: return 2;
    }
}

namespace detail {

inline Json report_header(const std::string& command) {
    Json j;
    j["schema"] = json_schema_version;
    j["command"] = command;
    return j;
}

inline Json ring_json(const FiniteRing& r) { return Json{{"label", r.label()}, {"order", r.order()}}; }

/// Embedding chosen by --embed.
inline RingHom choose_embedding(const BuiltRing& base, const BuiltRing& top, const std::string& embed) {
    if (embed == "diagonal") {
        std::optional<RingHom> f = natural_map(base, top);
        if (!f) throw Error(ErrorKind::precondition, "no natural map from base to top; pass --embed explicit:<images>");
        return *f;
    }
    if (embed == "first-factor") return first_factor_map(base, top);
    const std::string prefix = "explicit:";
    if (embed.rfind(prefix, 0) == 0) {
        std::vector<std::uint64_t> images;
        std::string rest = embed.substr(prefix.size());
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                std::size_t used = 0;
                images.push_back(std::stoull(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::syntax, "explicit map entry '" + item + "' is not a non-negative integer");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return explicit_map(base, top, images);
    }
    throw Error(ErrorKind::precondition, "unknown embedding '" + embed + "'");
}

inline Extension build_extension(const std::string& base, const std::string& top, const std::string& embed,
                                 const Limits& limits) {
    BuiltPtr b = evaluate(base, limits);
    BuiltPtr t = evaluate(top, limits);
    return Extension(choose_embedding(*b, *t, embed));
}

/// Splits "(g11,g12);(g21)" into one generator list per ideal.
inline std::vector<std::vector<ElemPtr>> parse_ideal_lists(const std::string& text) {
    std::vector<std::vector<ElemPtr>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        const std::size_t first = item.find_first_not_of(" \t\n");
        const std::size_t last = item.find_last_not_of(" \t\n");
        if (first == std::string::npos || item[first] != '(' || item[last] != ')') {
            throw Error(ErrorKind::syntax, "ideal " + std::to_string(out.size() + 1) + " must be a parenthesized generator list");
        }
        out.push_back(parse_elements(item.substr(first + 1, last - first - 1)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

inline Json lattice_json(const LatticeReport& lat) {
    Json j;
    j["count"] = lat.count;
    j["length"] = lat.length;
    j["graded"] = lat.graded;
    j["nodes"] = lat.nodes;
    Json edges = Json::array();
    for (auto [a, b] : lat.hasse_edges) edges.push_back({a, b});
    j["hasse_edges"] = edges;
    j["maximal_chain"] = lat.maximal_chain;
    return j;
}

}  // namespace detail

/// Runs the tool on `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite commutative ring extensions: lattices, closures and counts", "ringlat"};
    app.require_subcommand(1);
    const Limits& limits = default_limits();
    std::function<int()> action;

    std::string base;
    std::string top;
    std::string embed = "diagonal";
    std::string dot_file;
    auto* lattice = app.add_subcommand("lattice", "Enumerate [R,S] and its Hasse diagram");
    lattice->add_option("base", base, "Base ring expression")->required();
    lattice->add_option("top", top, "Top ring expression")->required();
    lattice->add_option("--embed", embed, "diagonal | first-factor | explicit:i0,i1,...");
    lattice->add_option("--dot", dot_file, "Write the Hasse diagram in DOT format");
    lattice->callback([&] {
        action = [&] {
            Extension ext = detail::build_extension(base, top, embed, limits);
            LatticeReport lat = intermediate_algebras(ext, limits);
            Json j = detail::report_header("lattice");
            j["base"] = detail::ring_json(ext.base());
            j["top"] = detail::ring_json(ext.top());
            j["embedding"] = ext.embed().table();
            j["lattice"] = detail::lattice_json(lat);
            if (!dot_file.empty()) {
                std::ofstream f(dot_file);
                if (!f) throw Error(ErrorKind::precondition, "cannot write " + dot_file);
                f << to_dot(lat);
            }
            out << j.dump(2) << "\n";
            return 0;
        };
    });

    auto* classify = app.add_subcommand("classify", "Minimality type and extension predicates");
    classify->add_option("base", base)->required();
    classify->add_option("top", top)->required();
    classify->add_option("--embed", embed);
    classify->callback([&] {
        action = [&] {
            Extension ext = detail::build_extension(base, top, embed, limits);
            LatticeReport lat = intermediate_algebras(ext, limits);
            MinimalClassification cls = classify_minimal(lat, limits);
            Json j = detail::report_header("classify");
            j["base"] = detail::ring_json(ext.base());
            j["top"] = detail::ring_json(ext.top());
            j["lattice_count"] = lat.count;
            j["minimal"] = to_string(cls.kind);
            if (cls.kind != MinimalKind::not_minimal) {
                j["crucial_ideal"] = cls.crucial.elements();
                Json w = Json::array();
                for (const Ideal& i : cls.witness) w.push_back(i.elements());
                j["witness_ideals"] = w;
            }
            Json p;
            p["integral"] = is_integral(ext);
            p["infra_integral"] = is_infra_integral(ext, limits);
            p["subintegral"] = is_subintegral(ext, limits);
            p["seminormal"] = is_seminormal(ext);
            p["t_closed"] = is_tclosed(ext);
            p["quadratic"] = is_quadratic(ext);
            p["delta"] = is_delta(lat);
            p["delta0"] = is_delta0(ext, limits);
            p["pointwise_minimal"] = is_pointwise_minimal(lat);
            j["predicates"] = p;
            out << j.dump(2) << "\n";
            return 0;
        };
    });

    auto* closures = app.add_subcommand("closures", "Chain R, seminormalization, t-closure, S");
    closures->add_option("base", base)->required();
    closures->add_option("top", top)->required();
    closures->add_option("--embed", embed);
    closures->callback([&] {
        action = [&] {
            Extension ext = detail::build_extension(base, top, embed, limits);
            CanonicalDecomposition d = canonical_decomposition(ext);
            Json j = detail::report_header("closures");
            j["base"] = detail::ring_json(ext.base());
            j["top"] = detail::ring_json(ext.top());
            j["image_of_base"] = d.base.elements;
            j["seminormalization"] = d.seminormalization.elements;
            j["t_closure"] = d.tclosure.elements;
            j["integral_closure"] = integral_closure(ext).elements;
            j["sizes"] = {d.base.size(), d.seminormalization.size(), d.tclosure.size(), d.top.size()};
            out << j.dump(2) << "\n";
            return 0;
        };
    });

    std::string ring;
    std::string ideals;
    auto* crt = app.add_subcommand("crt", "Separating family R -> prod R/I_j");
    crt->add_option("ring", ring)->required();
    crt->add_option("--ideals", ideals, "Generator lists, e.g. \"(4);(3);(3)\"")->required();
    crt->callback([&] {
        action = [&] {
            BuiltPtr r = evaluate(ring, limits);
            std::vector<Ideal> fam;
            for (const auto& gens : detail::parse_ideal_lists(ideals)) fam.push_back(eval_ideal(*r, gens));
            CrtExtension c = make_crt(r->ring, fam, limits);
            Json j = detail::report_header("crt");
            j["ring"] = detail::ring_json(r->ring);
            j["normalized"] = c.normalized;
            j["product"] = detail::ring_json(c.product.ring);
            j["conductor"] = conductor_by_formula(c).elements();
            const std::size_t n = c.family.ideals.size();
            Json m;
            if (n > 2) {
                CrtMinimality cm = is_minimal_crt(c.family);
                m["test"] = "pairwise";
                m["minimal"] = cm.minimal;
                if (cm.witness) m["witness"] = {cm.witness->first, cm.witness->second};
            } else {
                TwoIdealCount t = two_ideal_count(c.family, limits);
                m["test"] = "two-ideal";
                m["minimal"] = is_minimal_crt2(c.family);
                m["predicted_lattice_count"] = t.expected;
                m["sum_quotient_is_field"] = t.quotient_is_field;
            }
            j["minimality"] = m;
            j["weak_crt"] = weak_crt_check(c.family);
            ZeroConductorReduction red = reduce_to_zero_conductor(c, limits);
            Json rj;
            rj["isomorphism"] = red.crt_isomorphism;
            rj["kept_indices"] = red.kept_indices;
            if (red.reduced) {
                rj["base"] = detail::ring_json(red.reduced->family.ring);
                rj["product"] = detail::ring_json(red.reduced->product.ring);
            }
            j["reduced"] = rj;
            if (c.product.ring.order() <= limits.max_lattice_order) {
                j["lattice_count"] = intermediate_algebras(c.extension, limits).count;
            }
            out << j.dump(2) << "\n";
            return 0;
        };
    });

    std::string modspec;
    auto* ideal_cmd = app.add_subcommand("idealize", "Submodules of M against [R, R(+)M]");
    ideal_cmd->add_option("ring", ring)->required();
    ideal_cmd->add_option("--module", modspec, "Sum of cyclic modules, e.g. \"R + R/(2)\"")->required();
    ideal_cmd->callback([&] {
        action = [&] {
            BuiltPtr r = evaluate(ring, limits);
            FiniteModule m = eval_module(*r, parse_module(modspec), limits);
            Idealization id = idealize(r->ring, m, limits);
            IdealizationBijection b = idealization_lattice_bijection(id, limits);
            Json j = detail::report_header("idealize");
            j["ring"] = detail::ring_json(r->ring);
            j["module_order"] = m.order();
            j["submodule_count"] = b.submodule_count;
            j["module_length"] = b.module_length;
            j["lattice_count"] = b.lattice_count;
            j["lattice_length"] = b.lattice_length;
            j["bijective"] = b.bijective;
            j["order_preserving"] = b.order_preserving;
            j["cyclic"] = is_cyclic(m).has_value();
            j["faithful"] = is_faithful(m);
            j["uniserial"] = is_uniserial(m, limits);
            out << j.dump(2) << "\n";
            return b.bijective && b.order_preserving ? 0 : 1;
        };
    });

    auto* count = app.add_subcommand("count", "Bell, Stirling and embedding counts");
    count->require_subcommand(1);
    std::size_t cn = 0;
    std::size_t cp = 0;
    bool labeled = false;
    auto* bell_cmd = count->add_subcommand("bell", "Number of set partitions of an n-set");
    bell_cmd->add_option("n", cn)->required();
    bell_cmd->callback([&] {
        action = [&] {
            out << bell(cn) << "\n";
            return 0;
        };
    });
    auto* stirling_cmd = count->add_subcommand("stirling", "Partitions of an n-set into p blocks");
    stirling_cmd->add_option("n", cn)->required();
    stirling_cmd->add_option("p", cp)->required();
    stirling_cmd->callback([&] {
        action = [&] {
            out << stirling2(cn, cp) << "\n";
            return 0;
        };
    });
    auto* exal_cmd = count->add_subcommand("exal", "Injective algebra maps R^p -> R^n up to automorphisms of R^p");
    exal_cmd->add_option("ring", ring)->required();
    exal_cmd->add_option("p", cp)->required();
    exal_cmd->add_option("n", cn)->required();
    exal_cmd->add_flag("--labeled", labeled, "Count maps instead of images");
    exal_cmd->callback([&] {
        action = [&] {
            if (cp == 0 || cn == 0) throw Error(ErrorKind::precondition, "p and n must be positive");
            ExalCount c = count_exal(evaluate(ring, limits)->ring, cp, cn, limits);
            out << (labeled ? c.labeled : c.images) << "\n";
            return 0;
        };
    });

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance corpus");
    verify_cmd->add_option("--suite", suite, "all | s2 | s3 | s4 | s5 | s6")
        ->check(CLI::IsMember({"all", "s2", "s3", "s4", "s5", "s6"}));
    verify_cmd->callback([&] {
        action = [&] {
            std::vector<verify::CriterionResult> results = verify::run_suite(suite);
            Json j = detail::report_header("verify");
            j["suite"] = suite;
            bool all = true;
            Json list = Json::array();
            for (const auto& r : results) {
                all = all && r.passed;
                list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                err << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "\n";
            }
            j["results"] = list;
            j["passed"] = all;
            out << j.dump(2) << "\n";
            return all ? 0 : 1;
        };
    });

    std::vector<const char*> argv{"ringlat"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ringlat
