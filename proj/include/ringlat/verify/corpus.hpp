#pragma once

/**
 * @file corpus.hpp
 * @brief Fixed test corpus: named extensions, seeded random separating
 *        families, and (ring, module) pairs for idealization checks.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ringlat/crt.hpp"
#include "ringlat/dsl.hpp"
#include "ringlat/module.hpp"

namespace ringlat::verify {

inline constexpr std::uint64_t corpus_seed = 0x5eed2024ULL;
inline constexpr std::size_t random_family_count = 40;
inline constexpr std::size_t max_family_top = 256;

/// Bounds used by the whole corpus: the default ones with room for (Z/27)².
inline Limits corpus_limits() {
    Limits l = default_limits();
    l.max_lattice_order = std::max<std::size_t>(l.max_lattice_order, 1024);
    return l;
}

struct NamedExtension {
    std::string name;
    Extension ext;
};

/// base ⊆ top through the natural map of the expression language.
inline NamedExtension natural_extension(const std::string& base, const std::string& top,
                                        const Limits& limits = corpus_limits()) {
    BuiltPtr b = evaluate(base, limits);
    BuiltPtr t = evaluate(top, limits);
    std::optional<RingHom> f = natural_map(*b, *t);
    if (!f) throw Error(ErrorKind::precondition, "no natural map " + base + " -> " + top);
    return NamedExtension{base + " -> " + top, Extension(*f)};
}

/// R → Rⁿ, r ↦ (r, ..., r).
inline NamedExtension diagonal_power(const std::string& base, std::size_t n, const Limits& limits = corpus_limits()) {
    std::string top = "(" + base + ")";
    for (std::size_t i = 1; i < n; ++i) top += " x (" + base + ")";
    return natural_extension(base, top, limits);
}

struct RandomFamily {
    std::string name;
    CrtExtension crt;
};

/// Least-index generator of a principal ideal, or the full element list.
inline std::string describe_ideal(const Ideal& i) {
    for (Index g : i.elements()) {
        if (ideal_generated(i.ring(), {g}) == i) return "(" + std::to_string(g) + ")";
    }
    std::string s = "(";
    for (std::size_t k = 0; k < i.elements().size(); ++k) s += (k ? "," : "") + std::to_string(i.elements()[k]);
    return s + ")";
}

inline std::vector<std::string> family_ring_pool() {
    std::vector<std::string> pool;
    for (int n : {4, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 28, 30, 32, 36, 40, 45, 48, 49, 50, 54, 56, 60, 63, 64}) {
        pool.push_back("Z/" + std::to_string(n));
    }
    for (const char* s : {"GF(2) x GF(2)", "GF(2) x GF(2) x GF(2)", "GF(3) x GF(3)", "GF(2^2) x GF(2^2)",
                          "GF(2) x GF(2^2)", "GF(3) x GF(3) x GF(2)", "GF(5) x GF(5)"}) {
        pool.emplace_back(s);
    }
    return pool;
}

/**
 * Separating families I₁..I_m (m cycling through 2, 3, 4) of proper ideals
 * drawn uniformly from the ideal list of a ring in the pool, kept when
 * ∩Iⱼ = 0 and |∏ R/Iⱼ| ≤ 256.
 */
inline std::vector<RandomFamily> random_families(std::uint64_t seed = corpus_seed,
                                                 std::size_t count = random_family_count,
                                                 const Limits& limits = corpus_limits()) {
    std::mt19937_64 rng(seed);
    const std::vector<std::string> pool = family_ring_pool();
    std::vector<RandomFamily> out;
    std::size_t attempt = 0;
    while (out.size() < count) {
        if (++attempt > 100000) throw Error(ErrorKind::unreachable_case, "random family generation stalled");
        const std::string& label = pool[rng() % pool.size()];
        const std::size_t m = 2 + out.size() % 3;
        BuiltPtr r = evaluate(label, limits);
        std::vector<Ideal> ideals = all_ideals(r->ring, limits);
        std::vector<Ideal> proper;
        for (const Ideal& i : ideals) {
            if (!i.is_whole()) proper.push_back(i);
        }
        std::vector<Ideal> fam;
        Ideal common = whole_ideal(r->ring);
        std::size_t top = 1;
        for (std::size_t j = 0; j < m; ++j) {
            fam.push_back(proper[rng() % proper.size()]);
            common = ideal_intersection(common, fam.back());
            top *= residue_size(fam.back());
        }
        if (!common.is_zero() || top > max_family_top) continue;
        std::string name = label + " / (";
        for (std::size_t j = 0; j < m; ++j) name += (j ? ", " : "") + describe_ideal(fam[j]);
        out.push_back(RandomFamily{name + ")", make_crt(r->ring, fam, limits)});
    }
    return out;
}

/// Z/12 with the ideals generated by the given residues.
inline CrtExtension z12_family(const std::vector<Index>& generators, const Limits& limits = corpus_limits()) {
    FiniteRing z12 = make_zmod(12, limits);
    std::vector<ElementSet> gens;
    for (Index g : generators) gens.push_back({g});
    return make_crt(z12, gens, limits);
}

struct ModulePair {
    std::string ring;
    std::string module;
    /// Frozen ν(M) when the pair is a pinned example.
    std::optional<std::size_t> expected_count;
};

inline std::vector<ModulePair> idealization_pairs() {
    return {
        {"GF(2)", "R + R", 5},
        {"Z/4", "R", 3},
        {"Z/8", "R", 4},
        {"GF(2)", "R", std::nullopt},
        {"GF(3)", "R + R", std::nullopt},
        {"GF(2)", "R + R + R", std::nullopt},
        {"GF(2^2)", "R + R", std::nullopt},
        {"Z/4", "R/(2)", std::nullopt},
        {"Z/4", "R + R/(2)", std::nullopt},
        {"Z/4", "R/(2) + R/(2)", std::nullopt},
        {"Z/9", "R", std::nullopt},
        {"Z/9", "R/(3) + R/(3)", std::nullopt},
        {"Z/6", "R", std::nullopt},
        {"Z/12", "R/(2) + R/(3)", std::nullopt},
        {"GF(2) x GF(2)", "R", std::nullopt},
        {"Z/2[t]/(t^2)", "R", std::nullopt},
        {"Z/2[t]/(t^3)", "R/(t) + R", std::nullopt},
        {"GF(3) x GF(3)", "R + R/((1, 0))", std::nullopt},
    };
}

}  // namespace ringlat::verify
