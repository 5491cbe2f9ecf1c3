#pragma once

/**
 * @file acceptance.hpp
 * @brief The twelve acceptance checks. Every comparison is an exact integer
 *        or set equality (tolerance 0).
 */

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ringlat/closures.hpp"
#include "ringlat/combinatorics.hpp"
#include "ringlat/crt.hpp"
#include "ringlat/dsl.hpp"
#include "ringlat/idealization.hpp"
#include "ringlat/minimal.hpp"
#include "ringlat/predicates.hpp"
#include "ringlat/verify/corpus.hpp"

namespace ringlat::verify {

/// Allowed absolute deviation in every numeric comparison.
inline constexpr std::size_t exact_tolerance = 0;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

/// Collects failures; the criterion passes when there are none.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 8) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    void expect_equal(std::size_t got, std::size_t want, const std::string& what) {
        const std::size_t diff = got > want ? got - want : want - got;
        expect(diff <= exact_tolerance, what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
    }
    /// Runs `body`, recording any thrown error as a failure.
    void guard(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, what + ": " + e.what());
        }
    }
    CriterionResult result(int id, std::string name) const {
        std::ostringstream d;
        d << checks_ - failed_ << "/" << checks_ << " checks";
        for (const std::string& f : failures_) d << "; " << f;
        return CriterionResult{id, std::move(name), failed_ == 0 && checks_ > 0, d.str()};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

/// R + I·S for an ideal I of R.
inline ElementSet base_plus_extended(const Extension& ext, const Ideal& i) {
    auto span = ring_span_builder(ext.top());
    span.add_all(ext.image());
    span.add_all(extended_ideal(ext, i).elements());
    return span.sorted();
}

/// Largest node T with R ⊆ T satisfying `keep`, if the satisfying nodes have one.
inline std::optional<ElementSet> largest_node(const LatticeReport& lattice, const std::function<bool(const Extension&)>& keep) {
    std::vector<const ElementSet*> good;
    for (const ElementSet& t : lattice.nodes) {
        if (keep(lower_extension(lattice.extension, t))) good.push_back(&t);
    }
    for (const ElementSet* t : good) {
        bool largest = true;
        for (const ElementSet* u : good) largest = largest && is_subset(*u, *t);
        if (largest) return *t;
    }
    return std::nullopt;
}

struct BruteExal {
    std::size_t labeled = 0;
    std::size_t images = 0;
};

/// Counts injective R-algebra maps R^p → R^n by testing every R-linear map
/// x ↦ (Σⱼ a_{ij} xⱼ)ᵢ for unitality and multiplicativity on all pairs.
inline BruteExal brute_force_exal(const FiniteRing& r, std::size_t p, std::size_t n, const Limits& limits) {
    ProductRing src = power(r, p, limits);
    ProductRing tgt = power(r, n, limits);
    const std::size_t m = src.ring.order();
    std::vector<std::vector<Index>> coords(m);
    for (Index x = 0; x < m; ++x) coords[x] = src.decode(x);
    // Rows a ∈ R^p whose functional R^p → R is a unital ring hom.
    std::vector<std::vector<Index>> rows;
    for (Index a = 0; a < m; ++a) {
        const std::vector<Index>& ca = coords[a];
        std::vector<Index> f(m);
        for (Index x = 0; x < m; ++x) {
            Index acc = r.zero();
            for (std::size_t j = 0; j < p; ++j) acc = r.add(acc, r.mul(ca[j], coords[x][j]));
            f[x] = acc;
        }
        bool hom = f[src.ring.one()] == r.one();
        for (Index x = 0; x < m && hom; ++x) {
            for (Index y = 0; y < m && hom; ++y) hom = f[src.ring.mul(x, y)] == r.mul(f[x], f[y]);
        }
        if (hom) rows.push_back(f);
    }
    BruteExal out;
    std::set<ElementSet> images;
    std::vector<std::size_t> pick(n, 0);
    std::vector<Index> c(n);
    for (;;) {
        ElementSet img;
        for (Index x = 0; x < m; ++x) {
            for (std::size_t i = 0; i < n; ++i) c[i] = rows[pick[i]][x];
            img.push_back(tgt.encode(c));
        }
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img.size() == m) {
            ++out.labeled;
            images.insert(img);
        }
        std::size_t i = n;
        while (i-- > 0) {
            if (++pick[i] < rows.size()) break;
            pick[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    out.images = images.size();
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Shared corpus of extensions

inline const std::vector<std::string>& bell_fields() {
    static const std::vector<std::string> f{"GF(2)", "GF(3)", "GF(2^2)"};
    return f;
}

inline const std::vector<std::pair<std::string, std::size_t>>& spir_rings() {
    // Ring and its nilpotency index, computed independently by the check.
    static const std::vector<std::pair<std::string, std::size_t>> r{
        {"Z/4", 2}, {"Z/8", 3}, {"Z/9", 2}, {"Z/27", 3}, {"Z/2[t]/(t^3)", 3}};
    return r;
}

struct DiagonalCase {
    std::string base;
    std::vector<std::string> factors;
};

inline std::vector<DiagonalCase> diagonal_cases() {
    return {
        {"GF(2)", {"GF(2)[e]/(e^2)", "GF(2)[e]/(e^2)"}},
        {"GF(2)", {"GF(2)[e]/(e^2)", "GF(2)[t]/(t^3)"}},
        {"GF(2)", {"GF(2)", "GF(2)[e]/(e^2)"}},
        {"GF(3)", {"GF(3)[e]/(e^2)", "GF(3)[e]/(e^2)"}},
        {"Z/4", {"Z/4[x]/(x^2, 2*x)", "Z/4"}},
        {"GF(2)", {"GF(2)[u]/(u^3, u^2)", "GF(2)[e]/(e^2)", "GF(2)"}},
    };
}

/// Every extension the criteria enumerate lattices for, with |S| ≤ 1024.
inline std::vector<NamedExtension> extension_corpus(const Limits& limits = corpus_limits()) {
    std::vector<NamedExtension> out;
    for (const std::string& k : bell_fields()) {
        for (std::size_t n = 2; n <= 4; ++n) out.push_back(diagonal_power(k, n, limits));
    }
    for (const auto& [r, idx] : spir_rings()) out.push_back(diagonal_power(r, 2, limits));
    for (RandomFamily& f : random_families(corpus_seed, random_family_count, limits)) {
        out.push_back(NamedExtension{"family " + f.name, f.crt.extension});
    }
    out.push_back(NamedExtension{"family Z/12 / ((4), (3), (3))", z12_family({4, 3, 3}, limits).extension});
    out.push_back(NamedExtension{"family Z/12 / ((4), (3), (6))", z12_family({4, 3, 6}, limits).extension});
    for (const ModulePair& mp : idealization_pairs()) {
        out.push_back(natural_extension(mp.ring, "idealize(" + mp.ring + ", " + mp.module + ")", limits));
    }
    for (const DiagonalCase& d : diagonal_cases()) {
        std::string top;
        for (std::size_t i = 0; i < d.factors.size(); ++i) top += (i ? " x " : "") + std::string("(") + d.factors[i] + ")";
        out.push_back(natural_extension(d.base, top, limits));
    }
    out.push_back(natural_extension("GF(2)", "GF(2^2)", limits));
    out.push_back(natural_extension("GF(2)", "GF(2) x GF(2)", limits));
    out.push_back(natural_extension("GF(2)", "GF(2)[e]/(e^2)", limits));
    out.push_back(natural_extension("Z/2[t]/(t^2)", "(Z/2[t]/(t^2))[x]/(x^2 - t, x*t)", limits));
    out.push_back(natural_extension("GF(2^2)", "GF(2^2) x GF(2^2)", limits));
    out.push_back(natural_extension("Z/4", "Z/4 x Z/4 x Z/4", limits));
    return out;
}

// ---------------------------------------------------------------------------
// Criteria

inline CriterionResult criterion_bell(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    const std::size_t frozen[] = {0, 1, 2, 5, 15};
    for (std::size_t n = 2; n <= 4; ++n) {
        c.expect_equal(bell(n), frozen[n], "partition enumeration B" + std::to_string(n));
        c.expect_equal(bell_recurrence(n), bell(n), "Stirling row sum B" + std::to_string(n));
    }
    for (const std::string& k : bell_fields()) {
        for (std::size_t n = 2; n <= 4; ++n) {
            const std::string what = "[" + k + ", " + k + "^" + std::to_string(n) + "]";
            c.guard(what, [&] {
                NamedExtension e = diagonal_power(k, n, limits);
                LatticeReport lat = intermediate_algebras(e.ext, limits);
                c.expect_equal(lat.count, bell(n), what + " count");
                // Nodes are exactly the tuples constant on the blocks of a partition.
                ProductRing kn = power(e.ext.base(), n, limits);
                std::set<ElementSet> from_partitions;
                for (const Partition& pi : partitions(n)) from_partitions.insert(partition_to_subalgebra(kn, pi));
                std::set<ElementSet> nodes(lat.nodes.begin(), lat.nodes.end());
                c.expect(kn.ring == e.ext.top() && nodes == from_partitions, what + " node set equals partition subalgebras");
            });
        }
    }
    return c.result(1, "Bell counts of [K, K^n]");
}

inline CriterionResult criterion_spir(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    for (const auto& [r, frozen_index] : spir_rings()) {
        const std::string what = "[" + r + ", " + r + "^2]";
        c.guard(what, [&, &r = r, frozen_index = frozen_index] {
            NamedExtension e = diagonal_power(r, 2, limits);
            const FiniteRing& base = e.ext.base();
            c.expect(is_spir(base).has_value(), r + " is a SPIR");
            const std::size_t idx = nilpotency_index(base);
            c.expect_equal(idx, frozen_index, r + " nilpotency index");
            LatticeReport lat = intermediate_algebras(e.ext, limits);
            c.expect_equal(lat.count, idx + 1, what + " count");
            const Ideal m = *is_local(base);
            std::set<ElementSet> predicted;
            for (unsigned i = 0; i <= idx; ++i) predicted.insert(detail::base_plus_extended(e.ext, ideal_power(m, i)));
            std::set<ElementSet> nodes(lat.nodes.begin(), lat.nodes.end());
            c.expect(nodes == predicted, what + " nodes are R + M^i S");
        });
    }
    return c.result(2, "SPIR counts of [R, R^2]");
}

inline CriterionResult criterion_exal(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 3}, {2, 4}, {3, 4}};
    for (const char* r : {"Z/4", "GF(3)", "Z/2[t]/(t^2)", "GF(2) x GF(2)"}) {
        BuiltPtr ring = evaluate(r, limits);
        const bool connected = is_connected(ring->ring);
        for (auto [p, n] : shapes) {
            const std::string what = std::string(r) + " p=" + std::to_string(p) + " n=" + std::to_string(n);
            c.guard(what, [&, p = p, n = n] {
                ExalBoundReport rep = exal_bound_check(ring->ring, p, n, limits);
                detail::BruteExal brute = detail::brute_force_exal(ring->ring, p, n, limits);
                c.expect_equal(rep.count.images, brute.images, what + " images vs brute force");
                c.expect_equal(rep.count.labeled, brute.labeled, what + " labeled maps vs brute force");
                c.expect(rep.orbit_identity_holds, what + " labeled = |Aut| * images");
                c.expect_equal(rep.stirling, stirling2_recurrence(n, p), what + " Stirling enumeration vs recurrence");
                if (connected) {
                    c.expect_equal(rep.count.images, rep.stirling, what + " |Exal| = S(n,p)");
                } else {
                    c.expect(rep.lower_holds && rep.upper_holds, what + " S(n,p) <= |Exal| <= S(n,p)^|Min R|");
                    c.expect_equal(rep.minimal_primes, 2, what + " |Min R|");
                }
            });
        }
    }
    return c.result(3, "Stirling counts of algebra embeddings R^p -> R^n");
}

inline CriterionResult criterion_trichotomy(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    std::size_t minimal = 0;
    std::map<MinimalKind, std::size_t> kinds;
    auto check_minimal = [&](const std::string& what, const Extension& ext) {
        c.guard(what, [&] {
            LatticeReport lat = intermediate_algebras(ext, limits);
            if (lat.count != 2) return;
            ++minimal;
            MinimalClassification cls = classify_minimal(lat, limits);
            ++kinds[cls.kind];
            c.expect(cls.kind != MinimalKind::not_minimal, what + " classified");
            c.expect(is_maximal_ideal(cls.crucial) && cls.crucial == conductor(ext), what + " crucial ideal is the maximal conductor");
            std::vector<Ideal> support = support_of_extension(ext, limits);
            c.expect(support.size() == 1 && support[0] == cls.crucial, what + " support is the crucial ideal");
        });
    };
    std::vector<NamedExtension> corpus = extension_corpus(limits);
    for (const NamedExtension& e : corpus) {
        check_minimal(e.name, e.ext);
        if (e.ext.top().order() > 256) continue;
        // Every cover T ⊂ U in a lattice is itself a minimal extension.
        c.guard(e.name + " covers", [&] {
            LatticeReport lat = intermediate_algebras(e.ext, limits);
            for (auto [a, b] : lat.hasse_edges) {
                Extension cover = sub_extension(e.ext.top(), lat.nodes[a], lat.nodes[b]);
                c.expect_equal(intermediate_algebras(cover, limits).count, 2, e.name + " cover is minimal");
                check_minimal(e.name + " cover " + std::to_string(a) + "<" + std::to_string(b), cover);
            }
        });
    }
    auto kind_of = [&](const std::string& base, const std::string& top) {
        MinimalKind k = MinimalKind::not_minimal;
        c.guard(base + " -> " + top, [&] { k = classify_minimal(natural_extension(base, top, limits).ext, limits).kind; });
        return k;
    };
    c.expect(kind_of("GF(2)", "GF(2^2)") == MinimalKind::inert, "GF(2) -> GF(4) inert");
    c.expect(kind_of("GF(2)", "GF(2) x GF(2)") == MinimalKind::decomposed, "GF(2) -> GF(2)^2 decomposed");
    c.expect(kind_of("GF(2)", "GF(2)[e]/(e^2)") == MinimalKind::ramified, "GF(2) -> GF(2)[e] ramified");
    c.guard("Z/12 family", [&] {
        c.expect(classify_minimal(z12_family({4, 3, 3}, limits).extension, limits).kind == MinimalKind::decomposed,
                 "Z/12 -> Z/4 x Z/3 x Z/3 decomposed");
    });
    c.expect(minimal > 0 && kinds[MinimalKind::inert] > 0 && kinds[MinimalKind::decomposed] > 0 &&
                 kinds[MinimalKind::ramified] > 0,
             "all three kinds occur");
    return c.result(4, "Minimal extensions are inert, decomposed or ramified");
}

inline CriterionResult criterion_conductor(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    std::vector<RandomFamily> fams = random_families(corpus_seed, random_family_count, limits);
    c.expect(fams.size() >= 20, "at least 20 random families");
    for (const RandomFamily& f : fams) {
        c.guard(f.name, [&] {
            const SeparatingFamily& fam = f.crt.family;
            Ideal sum = zero_ideal(fam.ring);
            Ideal inter = whole_ideal(fam.ring);
            for (std::size_t j = 0; j < fam.ideals.size(); ++j) {
                sum = ideal_sum(sum, fam.complements[j]);
                inter = ideal_intersection(inter, ideal_sum(fam.ideals[j], fam.complements[j]));
            }
            const Ideal direct = conductor(f.crt.extension);
            c.expect(sum == inter && inter == direct, f.name + " sum J = meet (I+J) = (R:S)");
            c.expect(conductor_by_formula(f.crt) == direct, f.name + " formula accepted");
        });
    }
    return c.result(5, "Conductor formula on random separating families");
}

inline CriterionResult criterion_dagger(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    std::size_t tested = 0;
    std::size_t minimal = 0;
    for (const RandomFamily& f : random_families(corpus_seed, random_family_count, limits)) {
        c.guard(f.name, [&] {
            const SeparatingFamily& fam = f.crt.family;
            const bool lattice_minimal = intermediate_algebras(f.crt.extension, limits).count == 2;
            if (fam.ideals.size() > 2) {
                ++tested;
                CrtMinimality m = is_minimal_crt(fam);
                minimal += m.minimal;
                c.expect(m.minimal == lattice_minimal, f.name + " pairwise criterion vs lattice");
                if (m.minimal) {
                    auto [j, k] = *m.witness;
                    c.expect(is_maximal_ideal(ideal_sum(fam.ideals[j], fam.ideals[k])), f.name + " witness sum maximal");
                }
            } else {
                c.expect(is_minimal_crt2(fam) == lattice_minimal, f.name + " two-ideal test vs lattice");
            }
        });
    }
    c.expect(tested >= 20, "at least 20 families with more than two ideals");
    c.guard("Z/12 families", [&] {
        c.expect(is_minimal_crt(z12_family({4, 3, 3}, limits).family).minimal, "Z/12 / ((4),(3),(3)) minimal");
        c.expect(!is_minimal_crt(z12_family({4, 3, 6}, limits).family).minimal, "Z/12 / ((4),(3),(6)) not minimal");
        c.expect(intermediate_algebras(z12_family({4, 3, 6}, limits).extension, limits).count > 2,
                 "Z/12 / ((4),(3),(6)) lattice larger than two");
    });
    return c.result(6, "Pairwise minimality criterion for separating families");
}

inline CriterionResult criterion_idealization(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    std::size_t pairs = 0;
    for (const ModulePair& mp : idealization_pairs()) {
        const std::string what = "(" + mp.ring + ", " + mp.module + ")";
        c.guard(what, [&] {
            BuiltPtr r = evaluate(mp.ring, limits);
            FiniteModule m = eval_module(*r, parse_module(mp.module), limits);
            Idealization id = idealize(r->ring, m, limits);
            IdealizationBijection b = idealization_lattice_bijection(id, limits);
            ++pairs;
            c.expect(b.bijective && b.order_preserving, what + " N -> R(+)N is an order isomorphism");
            c.expect_equal(b.lattice_count, b.submodule_count, what + " |[R, R(+)M]| = nu(M)");
            c.expect_equal(b.lattice_length, b.module_length, what + " lattice length = L(M)");
            if (mp.expected_count) c.expect_equal(b.submodule_count, *mp.expected_count, what + " nu(M)");
            for (const ElementSet& n : submodules(m, limits).nodes) {
                IntervalReport iv = interval_length(id, n, limits);
                c.expect(iv.holds, what + " interval above a submodule of size " + std::to_string(n.size()));
            }
        });
    }
    c.expect(pairs >= 15, "at least 15 pairs");
    return c.result(7, "Idealization lattices match submodule lattices");
}

inline CriterionResult criterion_closures(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    for (const NamedExtension& e : extension_corpus(limits)) {
        if (e.ext.top().order() > 256) continue;
        c.guard(e.name, [&] {
            LatticeReport lat = intermediate_algebras(e.ext, limits);
            auto plus = detail::largest_node(lat, [&](const Extension& x) { return is_subintegral(x, limits); });
            auto tee = detail::largest_node(lat, [&](const Extension& x) { return is_infra_integral(x, limits); });
            c.expect(plus && seminormalization(e.ext).elements == *plus, e.name + " seminormalization is the largest subintegral node");
            c.expect(tee && t_closure(e.ext).elements == *tee, e.name + " t-closure is the largest infra-integral node");
            ClosureOptions shuffled{0x9e3779b97f4a7c15ULL};
            c.expect(seminormalization(e.ext, shuffled) == seminormalization(e.ext) &&
                         t_closure(e.ext, shuffled) == t_closure(e.ext),
                     e.name + " closures independent of processing order");
        });
    }
    for (const DiagonalCase& d : diagonal_cases()) {
        const std::string what = d.base + " diagonal";
        c.guard(what, [&] {
            BuiltPtr base = evaluate(d.base, limits);
            std::vector<RingHom> maps;
            for (const std::string& f : d.factors) maps.push_back(*natural_map(*base, *evaluate(f, limits)));
            DiagonalFormulaReport rep = verify_diagonal_formulas(base->ring, maps, limits);
            c.expect(rep.seminormalization_holds, what + " seminormalization = R + prod N_i");
            c.expect(rep.tclosure_holds, what + " t-closure = prod of t-closures");
        });
    }
    std::size_t local_families = 0;
    std::vector<RandomFamily> fams = random_families(corpus_seed, random_family_count, limits);
    fams.push_back(RandomFamily{"Z/8 / ((2), (4))", make_crt(make_zmod(8), std::vector<ElementSet>{{2}, {4}}, limits)});
    fams.push_back(RandomFamily{"Z/27 / ((3), (9), (9))", make_crt(make_zmod(27), std::vector<ElementSet>{{3}, {9}, {9}}, limits)});
    for (const RandomFamily& f : fams) {
        if (!is_local(f.crt.family.ring)) continue;
        c.guard(f.name, [&] {
            ZeroConductorReduction red = reduce_to_zero_conductor(f.crt, limits);
            if (red.crt_isomorphism) return;
            ++local_families;
            c.expect(red.reduced->conductor.is_zero(), f.name + " reduced conductor is zero");
            c.expect(reduction_preserves_lattice(f.crt, red, limits), f.name + " reduction preserves the lattice");
            CrtSeminormalization s = seminormalization_of_crt(*red.reduced);
            c.expect(s.seminormalization_holds, f.name + " seminormalization = R + M*S");
            c.expect(s.conductor_holds, f.name + " (R : R + M*S) = (0 : M)");
        });
    }
    c.expect(local_families >= 2, "local families with nonzero lattice");
    return c.result(8, "Seminormalization and t-closure against lattice extrema and formulas");
}

inline CriterionResult criterion_special(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    const std::string base = "Z/2[t]/(t^2)";
    c.guard("special extension", [&] {
        NamedExtension e = natural_extension(base, "(Z/2[t]/(t^2))[x]/(x^2 - t, x*t)", limits);
        c.expect_equal(e.ext.top().order(), 8, "top ring order");
        c.expect(is_special_minimal_ramified(e.ext, limits), "K[T]/(T^2) inside R[X]/(X^2 - t, Xt) is special");
    });
    for (const char* perturbed : {"(Z/2[t]/(t^2))[x]/(x^2 - t)", "(Z/2[t]/(t^2))[x]/(x^2, x*t)"}) {
        c.guard(perturbed, [&] {
            NamedExtension e = natural_extension(base, perturbed, limits);
            c.expect(!is_special_minimal_ramified(e.ext, limits), std::string(perturbed) + " is not special");
        });
    }
    return c.result(9, "Special minimal ramified extension");
}

inline CriterionResult criterion_pointwise(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    c.guard("GF(4) -> GF(4)^2", [&] {
        LatticeReport lat = intermediate_algebras(natural_extension("GF(2^2)", "GF(2^2) x GF(2^2)", limits).ext, limits);
        c.expect(is_pointwise_minimal(lat), "GF(4) -> GF(4)^2 pointwise minimal");
        c.expect_equal(lat.count, 2, "GF(4) -> GF(4)^2 minimal");
    });
    c.guard("GF(2) -> GF(2)^3", [&] {
        LatticeReport lat = intermediate_algebras(natural_extension("GF(2)", "GF(2) x GF(2) x GF(2)", limits).ext, limits);
        c.expect(is_pointwise_minimal(lat), "GF(2) -> GF(2)^3 pointwise minimal");
        c.expect(lat.count != 2, "GF(2) -> GF(2)^3 not minimal");
        c.expect_equal(lat.count, 5, "GF(2) -> GF(2)^3 lattice size");
    });
    return c.result(10, "Pointwise minimal extensions");
}

inline CriterionResult criterion_census(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    for (const char* k : {"GF(2)", "GF(3)"}) {
        for (std::size_t n = 2; n <= 3; ++n) {
            const std::string what = std::string(k) + "^" + std::to_string(n);
            c.guard(what, [&] {
                CensusReport rep = census_componentwise(evaluate(k, limits)->ring, n, limits);
                c.expect_equal(rep.submodule_count, std::size_t{1} << n, what + " nu(E) = 2^n");
                c.expect(rep.lattice_count.has_value(), what + " idealization lattice enumerated");
                if (rep.lattice_count) c.expect_equal(*rep.lattice_count, rep.submodule_count, what + " lattice count");
            });
        }
    }
    return c.result(11, "Submodule count of k^n over k^n");
}

inline CriterionResult criterion_properties(const Limits& limits = corpus_limits()) {
    detail::Checker c;
    const std::vector<std::string> rings{
        "Z/2", "Z/12", "Z/64", "GF(2^3)", "GF(3^2)", "GF(5)", "Z/4 x Z/3", "GF(2) x GF(2^2) x Z/4",
        "Z/2[t]/(t^3)", "Z/4[x]/(x^2 + x + 1)", "Z/3[x]/(x^2 - 1)", "(Z/2[t]/(t^2))[x]/(x^2 - t, x*t)",
        "Z/12/(4)", "(Z/4 x Z/4)/((2, 0))", "idealize(Z/4, R + R/(2))", "idealize(GF(2) x GF(2), R)"};
    for (const std::string& r : rings) {
        c.guard(r, [&] {
            BuiltPtr b = evaluate(r, limits);
            c.expect(!check_ring_axioms(b->ring).has_value(), r + " satisfies the ring axioms");
            if (b->structure_map) c.expect(!b->structure_map->check().has_value(), r + " structure map is a ring hom");
        });
    }
    for (const ModulePair& mp : idealization_pairs()) {
        const std::string what = "(" + mp.ring + ", " + mp.module + ")";
        c.guard(what, [&] {
            BuiltPtr r = evaluate(mp.ring, limits);
            FiniteModule m = eval_module(*r, parse_module(mp.module), limits);
            c.expect(!check_module_axioms(m).has_value(), what + " module axioms");
            c.expect(!check_ring_axioms(idealize(r->ring, m, limits).ring).has_value(), what + " idealization ring axioms");
            c.expect(submodules(m, limits).jordan_holder, what + " maximal submodule chains have equal length");
        });
    }
    for (const NamedExtension& e : extension_corpus(limits)) {
        c.guard(e.name, [&] {
            c.expect(!check_ring_axioms(e.ext.top()).has_value(), e.name + " top ring axioms");
            LatticeReport lat = intermediate_algebras(e.ext, limits);
            bool recomposes = true;
            for (const IrreducibleDecomposition& d : irreducible_decomposition(lat)) {
                recomposes = recomposes && d.meet_verified && d.join_verified;
            }
            c.expect(recomposes, e.name + " irreducible decompositions recompose");
            if (e.ext.top().order() <= 256) {
                const bool lhs = is_delta0(e.ext, limits);
                const bool rhs = is_quadratic(e.ext) && is_delta(lat);
                c.expect(lhs == rhs, e.name + " Delta0 iff quadratic and Delta");
            }
        });
    }
    return c.result(12, "Property suites");
}

// ---------------------------------------------------------------------------
// Suites

struct Criterion {
    int id;
    std::function<CriterionResult(const Limits&)> run;
};

inline const std::vector<Criterion>& all_criteria() {
    static const std::vector<Criterion> c{
        {1, criterion_bell},          {2, criterion_spir},       {3, criterion_exal},
        {4, criterion_trichotomy},    {5, criterion_conductor},  {6, criterion_dagger},
        {7, criterion_idealization},  {8, criterion_closures},   {9, criterion_special},
        {10, criterion_pointwise},    {11, criterion_census},    {12, criterion_properties},
    };
    return c;
}

inline const std::map<std::string, std::vector<int>>& suites() {
    static const std::map<std::string, std::vector<int>> s{
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
        {"s2", {1, 4, 8, 9}},
        {"s3", {2, 5, 6}},
        {"s4", {3}},
        {"s5", {7, 10, 11}},
        {"s6", {12}},
    };
    return s;
}

inline std::vector<CriterionResult> run_suite(const std::string& name, const Limits& limits = corpus_limits()) {
    auto it = suites().find(name);
    if (it == suites().end()) throw Error(ErrorKind::precondition, "unknown suite '" + name + "'");
    std::vector<CriterionResult> out;
    for (int id : it->second) {
        const Criterion& crit = all_criteria()[static_cast<std::size_t>(id - 1)];
        try {
            out.push_back(crit.run(limits));
        } catch (const std::exception& e) {
            out.push_back(CriterionResult{id, "criterion " + std::to_string(id), false, e.what()});
        }
    }
    return out;
}

}  // namespace ringlat::verify
