#pragma once

/**
 * @file lattice.hpp
 * @brief Enumeration of the lattice [R,S] of intermediate subalgebras, its
 *        Hasse diagram, chains, and irreducible decompositions.
 *
 * Nodes are found as the fixpoint of single-element adjunction T ↦ T[s]
 * starting from the image of R. Every T ∈ [R,S] is reached, because T is
 * obtained from R by adjoining its own elements one at a time.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlat/extension.hpp"
#include "ringlat/ring.hpp"

namespace ringlat {

/// Covering pairs (lower, upper) of a finite poset given by node sets,
/// where order is inclusion.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges_by_inclusion(const std::vector<ElementSet>& nodes) {
    const std::size_t n = nodes.size();
    std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && nodes[i].size() < nodes[j].size() && is_subset(nodes[i], nodes[j])) below[i][j] = 1;
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k) covered = !(below[i][k] && below[k][j]);
            if (covered) edges.emplace_back(i, j);
        }
    }
    return edges;
}

struct ChainInfo {
    std::size_t longest = 0;
    std::size_t shortest_maximal = 0;
    /// All maximal chains have the same length.
    bool graded = true;
    std::vector<std::size_t> longest_chain;
    std::vector<std::vector<std::size_t>> chains;
    bool truncated = false;
};

/// Chains from `bottom` to `top` through covering edges.
inline ChainInfo chain_info(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                            std::size_t bottom, std::size_t top, std::size_t max_chains) {
    std::vector<std::vector<std::size_t>> up(count);
    for (auto [a, b] : edges) up[a].push_back(b);
    for (auto& u : up) std::sort(u.begin(), u.end());
    std::vector<long> longest(count, -1);
    std::vector<long> shortest(count, -1);
    std::vector<char> done(count, 0);
    std::vector<std::size_t> next(count, count);
    auto visit = [&](auto&& self, std::size_t v) -> void {
        if (done[v]) return;
        done[v] = 1;
        if (v == top) {
            longest[v] = shortest[v] = 0;
            return;
        }
        for (std::size_t w : up[v]) {
            self(self, w);
            if (longest[w] < 0) continue;
            if (longest[w] + 1 > longest[v]) {
                longest[v] = longest[w] + 1;
                next[v] = w;
            }
            if (shortest[v] < 0 || shortest[w] + 1 < shortest[v]) shortest[v] = shortest[w] + 1;
        }
    };
    visit(visit, bottom);
    ChainInfo info;
    info.longest = static_cast<std::size_t>(std::max<long>(longest[bottom], 0));
    info.shortest_maximal = static_cast<std::size_t>(std::max<long>(shortest[bottom], 0));
    info.graded = info.longest == info.shortest_maximal;
    for (std::size_t v = bottom; v != count;) {
        info.longest_chain.push_back(v);
        if (v == top) break;
        v = next[v];
    }
    std::vector<std::size_t> path{bottom};
    auto walk = [&](auto&& self, std::size_t v) -> void {
        if (info.truncated) return;
        if (v == top) {
            if (info.chains.size() >= max_chains) {
                info.truncated = true;
                return;
            }
            info.chains.push_back(path);
            return;
        }
        for (std::size_t w : up[v]) {
            if (longest[w] < 0) continue;
            path.push_back(w);
            self(self, w);
            path.pop_back();
        }
    };
    walk(walk, bottom);
    return info;
}

struct LatticeReport {
    Extension extension;
    /// Canonical order (cardinality, then lexicographic): R first, S last.
    std::vector<ElementSet> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
    std::size_t count = 0;
    std::size_t length = 0;
    std::vector<std::size_t> maximal_chain;
    bool graded = true;

    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return nodes.size() - 1; }

    std::optional<std::size_t> index_of(const ElementSet& set) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), set, canonical_less);
        if (it != nodes.end() && *it == set) return static_cast<std::size_t>(it - nodes.begin());
        return std::nullopt;
    }

    std::vector<std::size_t> upper_covers(std::size_t v) const {
        std::vector<std::size_t> out;
        for (auto [a, b] : hasse_edges) {
            if (a == v) out.push_back(b);
        }
        return out;
    }

    std::vector<std::size_t> lower_covers(std::size_t v) const {
        std::vector<std::size_t> out;
        for (auto [a, b] : hasse_edges) {
            if (b == v) out.push_back(a);
        }
        return out;
    }

    Subalgebra node(std::size_t v) const { return Subalgebra{extension.top(), nodes[v]}; }
};

struct EnumerationOptions {
    /// When set, candidate elements and worklist items are processed in a
    /// shuffled order; the result must not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
};

/**
 * Fixpoint of T ↦ T[s] from `start`. `adjoin(T, s)` returns the smallest
 * closed set containing T and s; `universe` is the number of candidates.
 */
template <class Adjoin>
std::vector<ElementSet> adjunction_fixpoint(const ElementSet& start, std::size_t universe, Adjoin adjoin,
                                            const Limits& limits, const EnumerationOptions& options = {}) {
    std::vector<Index> candidates(universe);
    std::iota(candidates.begin(), candidates.end(), 0);
    std::optional<std::mt19937_64> rng;
    if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    std::vector<ElementSet> found{start};
    seen.emplace(start, 0);
    std::deque<std::size_t> work{0};
    while (!work.empty()) {
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(*rng);
        const std::size_t current = work[pick];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
        if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);
        const ElementSet base = found[current];
        std::vector<char> mask = to_mask(base, universe);
        for (Index s : candidates) {
            if (mask[s]) continue;
            ElementSet next = adjoin(base, s);
            if (seen.emplace(next, found.size()).second) {
                found.push_back(std::move(next));
                work.push_back(found.size() - 1);
                if (found.size() > limits.max_nodes) throw Error(ErrorKind::size_limit, "too many lattice nodes");
            }
        }
    }
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

inline LatticeReport intermediate_algebras(const Extension& ext, const Limits& limits = default_limits(),
                                           const EnumerationOptions& options = {}) {
    const FiniteRing& s = ext.top();
    require_order(s.order(), limits.max_lattice_order, "top ring for lattice enumeration");
    auto adjoin = [&](const ElementSet& t, Index x) { return generate_subring(s, t, {x}); };
    LatticeReport report;
    report.extension = ext;
    report.nodes = adjunction_fixpoint(ext.image(), s.order(), adjoin, limits, options);
    report.count = report.nodes.size();
    report.hasse_edges = hasse_edges_by_inclusion(report.nodes);
    ChainInfo chains = chain_info(report.count, report.hasse_edges, report.bottom(), report.top(), 1);
    report.length = chains.longest;
    report.maximal_chain = chains.longest_chain;
    report.graded = chains.graded;
    return report;
}

inline ChainInfo length_and_chains(const LatticeReport& lattice, const Limits& limits = default_limits()) {
    return chain_info(lattice.count, lattice.hasse_edges, lattice.bottom(), lattice.top(), limits.max_chains);
}

inline bool is_minimal(const Extension& ext, const Limits& limits = default_limits()) {
    return intermediate_algebras(ext, limits).count == 2;
}

/// Compositum T1·T2 inside S.
inline ElementSet compositum(const FiniteRing& s, const ElementSet& a, const ElementSet& b) {
    return generate_subring(s, a, b);
}

struct IrreducibleDecomposition {
    std::size_t node = 0;
    /// ∩-irreducible nodes whose intersection is the node.
    std::vector<std::size_t> meet_irreducibles;
    /// Compositum-irreducible nodes whose compositum is the node.
    std::vector<std::size_t> join_irreducibles;
    bool meet_verified = false;
    bool join_verified = false;
};

/**
 * For each node T: the ∩-irreducibles above T (T = S or a unique upper cover)
 * intersect to T, and the compositum-irreducibles below T (T = R or a unique
 * lower cover) compose to T. Redundant members are pruned greedily and both
 * identities are recomputed from scratch.
 */
inline std::vector<IrreducibleDecomposition> irreducible_decomposition(const LatticeReport& lattice) {
    const std::size_t n = lattice.count;
    const FiniteRing& s = lattice.extension.top();
    std::vector<std::size_t> up_count(n, 0);
    std::vector<std::size_t> down_count(n, 0);
    for (auto [a, b] : lattice.hasse_edges) {
        ++up_count[a];
        ++down_count[b];
    }
    std::vector<char> meet_irr(n, 0);
    std::vector<char> join_irr(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        meet_irr[v] = v == lattice.top() || up_count[v] == 1;
        join_irr[v] = v == lattice.bottom() || down_count[v] == 1;
    }
    auto meet_of = [&](const std::vector<std::size_t>& members) {
        ElementSet acc = lattice.nodes[lattice.top()];
        for (std::size_t m : members) acc = set_intersection(acc, lattice.nodes[m]);
        return acc;
    };
    auto join_of = [&](const std::vector<std::size_t>& members) {
        ElementSet acc = lattice.nodes[lattice.bottom()];
        for (std::size_t m : members) acc = compositum(s, acc, lattice.nodes[m]);
        return acc;
    };
    auto prune = [](std::vector<std::size_t> members, const ElementSet& target, auto&& combine) {
        for (std::size_t k = members.size(); k-- > 0;) {
            std::vector<std::size_t> trial = members;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
            if (!trial.empty() && combine(trial) == target) members = std::move(trial);
        }
        return members;
    };
    std::vector<IrreducibleDecomposition> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        const ElementSet& t = lattice.nodes[v];
        IrreducibleDecomposition& d = out[v];
        d.node = v;
        std::vector<std::size_t> above;
        std::vector<std::size_t> below;
        for (std::size_t w = 0; w < n; ++w) {
            if (meet_irr[w] && is_subset(t, lattice.nodes[w])) above.push_back(w);
            if (join_irr[w] && is_subset(lattice.nodes[w], t)) below.push_back(w);
        }
        d.meet_irreducibles = prune(above, t, meet_of);
        d.join_irreducibles = prune(below, t, join_of);
        d.meet_verified = !d.meet_irreducibles.empty() && meet_of(d.meet_irreducibles) == t;
        d.join_verified = !d.join_irreducibles.empty() && join_of(d.join_irreducibles) == t;
    }
    return out;
}

/// Closure of the node set under pairwise intersection and compositum.
inline bool lattice_is_closed(const LatticeReport& lattice) {
    const FiniteRing& s = lattice.extension.top();
    for (std::size_t i = 0; i < lattice.count; ++i) {
        for (std::size_t j = i + 1; j < lattice.count; ++j) {
            if (!lattice.index_of(set_intersection(lattice.nodes[i], lattice.nodes[j]))) return false;
            if (!lattice.index_of(compositum(s, lattice.nodes[i], lattice.nodes[j]))) return false;
        }
    }
    return true;
}

inline std::string to_dot(const LatticeReport& lattice, const std::string& name = "lattice") {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < lattice.count; ++v) {
        os << "  n" << v << " [label=\"" << v << " (" << lattice.nodes[v].size() << ")\"];\n";
    }
    for (auto [a, b] : lattice.hasse_edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace ringlat
