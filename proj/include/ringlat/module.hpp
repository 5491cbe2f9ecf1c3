#pragma once

/**
 * @file module.hpp
 * @brief Finite modules over finite rings: constructors, submodule lattices,
 *        annihilators, composition length, cyclicity and uniseriality.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ringlat/construct.hpp"
#include "ringlat/ideal.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/ring.hpp"

namespace ringlat {

class FiniteModule {
public:
    FiniteModule() = default;

    /// `action[r * order + m]` is r·m.
    static FiniteModule from_tables(FiniteRing ring, std::size_t order, std::vector<Index> add, Index zero,
                                    std::vector<Index> action, std::string label) {
        if (order == 0) throw Error(ErrorKind::invalid_order, "module must have at least one element");
        if (add.size() != order * order || action.size() != ring.order() * order) {
            throw Error(ErrorKind::invalid_order, "module tables have the wrong shape");
        }
        for (Index v : add) {
            if (v >= order) throw Error(ErrorKind::invalid_order, "module addition out of range");
        }
        for (Index v : action) {
            if (v >= order) throw Error(ErrorKind::invalid_order, "module action out of range");
        }
        if (zero >= order) throw Error(ErrorKind::invalid_order, "module zero out of range");
        FiniteModule m;
        m.ring_ = std::move(ring);
        m.order_ = order;
        m.add_ = std::move(add);
        m.action_ = std::move(action);
        m.zero_ = zero;
        m.label_ = std::move(label);
        m.neg_.assign(order, static_cast<Index>(order));
        for (Index a = 0; a < order; ++a) {
            for (Index b = 0; b < order; ++b) {
                if (m.add(a, b) == zero) {
                    m.neg_[a] = b;
                    break;
                }
            }
            if (m.neg_[a] == order) throw Error(ErrorKind::invalid_order, "module element without inverse");
        }
        return m;
    }

    const FiniteRing& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return order_; }
    Index zero() const noexcept { return zero_; }
    const std::string& label() const noexcept { return label_; }
    Index add(Index a, Index b) const noexcept { return add_[a * order_ + b]; }
    Index neg(Index a) const noexcept { return neg_[a]; }
    Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }
    Index act(Index r, Index m) const noexcept { return action_[r * order_ + m]; }

private:
    FiniteRing ring_;
    std::size_t order_ = 0;
    std::vector<Index> add_;
    std::vector<Index> action_;
    std::vector<Index> neg_;
    Index zero_ = 0;
    std::string label_;
};

inline std::optional<std::string> check_module_axioms(const FiniteModule& m) {
    const FiniteRing& r = m.ring();
    const std::size_t n = m.order();
    for (Index a = 0; a < n; ++a) {
        if (m.act(r.one(), a) != a) return "1·m ≠ m at " + std::to_string(a);
        for (Index b = 0; b < n; ++b) {
            if (m.add(a, b) != m.add(b, a)) return std::string("addition not commutative");
            for (Index c = 0; c < n; ++c) {
                if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c))) return std::string("addition not associative");
            }
        }
    }
    for (Index x = 0; x < r.order(); ++x) {
        for (Index a = 0; a < n; ++a) {
            for (Index b = 0; b < n; ++b) {
                if (m.act(x, m.add(a, b)) != m.add(m.act(x, a), m.act(x, b))) return std::string("r(m+m') ≠ rm+rm'");
            }
            for (Index y = 0; y < r.order(); ++y) {
                if (m.act(r.add(x, y), a) != m.add(m.act(x, a), m.act(y, a))) return std::string("(r+r')m ≠ rm+r'm");
                if (m.act(r.mul(x, y), a) != m.act(x, m.act(y, a))) return std::string("(rr')m ≠ r(r'm)");
            }
        }
    }
    return std::nullopt;
}

inline FiniteModule zero_module(const FiniteRing& r) {
    return FiniteModule::from_tables(r, 1, {0}, 0, std::vector<Index>(r.order(), 0), "0");
}

/// R/I with r·[x] = [rx]; the zero module when I = R.
inline FiniteModule cyclic_module(const FiniteRing& r, const Ideal& i) {
    if (i.is_whole()) return zero_module(r);
    QuotientRing q = quotient(r, i);
    const std::size_t n = q.ring.order();
    std::vector<Index> add(n * n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) add[a * n + b] = q.ring.add(a, b);
    }
    std::vector<Index> action(r.order() * n);
    for (Index x = 0; x < r.order(); ++x) {
        for (Index a = 0; a < n; ++a) action[x * n + a] = q.ring.mul(q.projection(x), a);
    }
    std::string label = i.is_zero() ? "R" : "R/I";
    return FiniteModule::from_tables(r, n, std::move(add), q.ring.zero(), std::move(action), std::move(label));
}

inline FiniteModule regular_module(const FiniteRing& r) { return cyclic_module(r, zero_ideal(r)); }

/// The R-algebra A viewed as an R-module through f : R → A.
inline FiniteModule algebra_module(const RingHom& f) {
    const FiniteRing& a = f.target();
    const std::size_t n = a.order();
    std::vector<Index> add(n * n);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) add[x * n + y] = a.add(x, y);
    }
    std::vector<Index> action(f.source().order() * n);
    for (Index r = 0; r < f.source().order(); ++r) {
        for (Index x = 0; x < n; ++x) action[r * n + x] = a.mul(f(r), x);
    }
    return FiniteModule::from_tables(f.source(), n, std::move(add), a.zero(), std::move(action), a.label());
}

/// M₁ ⊕ ... ⊕ M_k; tuples numbered with the first summand most significant.
inline FiniteModule direct_sum(const std::vector<FiniteModule>& parts, const Limits& limits = default_limits()) {
    if (parts.empty()) throw Error(ErrorKind::invalid_order, "direct sum of nothing");
    const FiniteRing& r = parts[0].ring();
    std::size_t n = 1;
    for (const FiniteModule& p : parts) {
        n *= p.order();
        require_order(n, limits.max_order, "direct sum");
    }
    auto decode = [&](std::size_t idx) {
        std::vector<Index> c(parts.size());
        for (std::size_t j = parts.size(); j-- > 0;) {
            c[j] = static_cast<Index>(idx % parts[j].order());
            idx /= parts[j].order();
        }
        return c;
    };
    auto encode = [&](const std::vector<Index>& c) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < parts.size(); ++j) idx = idx * parts[j].order() + c[j];
        return static_cast<Index>(idx);
    };
    std::vector<std::vector<Index>> tuples(n);
    for (std::size_t x = 0; x < n; ++x) tuples[x] = decode(x);
    std::vector<Index> add(n * n);
    std::vector<Index> c(parts.size());
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            for (std::size_t j = 0; j < parts.size(); ++j) c[j] = parts[j].add(tuples[a][j], tuples[b][j]);
            add[a * n + b] = encode(c);
        }
    }
    std::vector<Index> action(r.order() * n);
    for (Index x = 0; x < r.order(); ++x) {
        for (Index a = 0; a < n; ++a) {
            for (std::size_t j = 0; j < parts.size(); ++j) c[j] = parts[j].act(x, tuples[a][j]);
            action[x * n + a] = encode(c);
        }
    }
    std::vector<Index> zeros(parts.size());
    std::string label;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        zeros[j] = parts[j].zero();
        label += (j ? " + " : "") + parts[j].label();
    }
    return FiniteModule::from_tables(r, n, std::move(add), encode(zeros), std::move(action), std::move(label));
}

/// Submodule generated by `gens`: additive span of all r·g.
inline ElementSet submodule_generated(const FiniteModule& m, const ElementSet& start, const ElementSet& gens) {
    auto addfn = [&m](Index a, Index b) { return m.add(a, b); };
    SpanBuilder<decltype(addfn)> span(m.order(), m.zero(), addfn);
    span.add_all(start);
    for (Index g : gens) {
        for (Index r = 0; r < m.ring().order(); ++r) span.add(m.act(r, g));
    }
    return span.sorted();
}

inline ElementSet submodule_generated(const FiniteModule& m, const ElementSet& gens) {
    return submodule_generated(m, {m.zero()}, gens);
}

inline bool is_submodule(const FiniteModule& m, const ElementSet& set) {
    std::vector<char> mask = to_mask(set, m.order());
    if (!mask[m.zero()]) return false;
    for (Index a : set) {
        for (Index b : set) {
            if (!mask[m.add(a, b)]) return false;
        }
        for (Index r = 0; r < m.ring().order(); ++r) {
            if (!mask[m.act(r, a)]) return false;
        }
    }
    return true;
}

struct QuotientModule {
    FiniteModule module;
    /// M → M/N
    std::vector<Index> projection;
};

/// M/N with cosets numbered by their least member.
inline QuotientModule quotient_module(const FiniteModule& m, const ElementSet& n) {
    std::vector<Index> rep(m.order());
    for (Index a = 0; a < m.order(); ++a) {
        Index best = a;
        for (Index x : n) best = std::min(best, m.add(a, x));
        rep[a] = best;
    }
    ElementSet reps(rep.begin(), rep.end());
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    const std::size_t k = reps.size();
    std::vector<Index> local(m.order(), 0);
    for (Index i = 0; i < k; ++i) local[reps[i]] = i;
    std::vector<Index> proj(m.order());
    for (Index a = 0; a < m.order(); ++a) proj[a] = local[rep[a]];
    std::vector<Index> add(k * k);
    for (Index a = 0; a < k; ++a) {
        for (Index b = 0; b < k; ++b) add[a * k + b] = proj[m.add(reps[a], reps[b])];
    }
    std::vector<Index> action(m.ring().order() * k);
    for (Index r = 0; r < m.ring().order(); ++r) {
        for (Index a = 0; a < k; ++a) action[r * k + a] = proj[m.act(r, reps[a])];
    }
    FiniteModule q = FiniteModule::from_tables(m.ring(), k, std::move(add), proj[m.zero()], std::move(action),
                                               "(" + m.label() + ")/N");
    return QuotientModule{q, std::move(proj)};
}

struct SubmoduleLattice {
    std::vector<ElementSet> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
    /// ν(M)
    std::size_t count = 0;
    /// L(M), the longest chain length.
    std::size_t length = 0;
    /// All maximal chains from 0 to M have the same length.
    bool jordan_holder = true;

    std::optional<std::size_t> index_of(const ElementSet& set) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), set, canonical_less);
        if (it != nodes.end() && *it == set) return static_cast<std::size_t>(it - nodes.begin());
        return std::nullopt;
    }
};

inline SubmoduleLattice submodules(const FiniteModule& m, const Limits& limits = default_limits()) {
    require_order(m.order(), limits.max_lattice_order, "module for submodule enumeration");
    auto adjoin = [&](const ElementSet& n, Index x) { return submodule_generated(m, n, {x}); };
    SubmoduleLattice out;
    out.nodes = adjunction_fixpoint(ElementSet{m.zero()}, m.order(), adjoin, limits);
    out.count = out.nodes.size();
    out.hasse_edges = hasse_edges_by_inclusion(out.nodes);
    ChainInfo chains = chain_info(out.count, out.hasse_edges, 0, out.count - 1, 1);
    out.length = chains.longest;
    out.jordan_holder = chains.graded;
    return out;
}

/// (0:m) for a single element.
inline Ideal annihilator_of(const FiniteModule& m, Index x) {
    ElementSet out;
    for (Index r = 0; r < m.ring().order(); ++r) {
        if (m.act(r, x) == m.zero()) out.push_back(r);
    }
    return Ideal(m.ring(), std::move(out));
}

/// (0:M) = {r : rM = 0}
inline Ideal annihilator(const FiniteModule& m) {
    ElementSet out;
    for (Index r = 0; r < m.ring().order(); ++r) {
        bool kills = true;
        for (Index x = 0; x < m.order() && kills; ++x) kills = m.act(r, x) == m.zero();
        if (kills) out.push_back(r);
    }
    return Ideal(m.ring(), std::move(out));
}

inline bool is_faithful(const FiniteModule& m) { return annihilator(m).is_zero(); }

/// Least-index generator of M as a cyclic module.
inline std::optional<Index> is_cyclic(const FiniteModule& m) {
    for (Index x = 0; x < m.order(); ++x) {
        if (submodule_generated(m, {x}).size() == m.order()) return x;
    }
    return std::nullopt;
}

/// Composition length, found by repeatedly factoring out a simple submodule
/// (a nonzero cyclic submodule of least size).
inline std::size_t module_length(const FiniteModule& m) {
    std::size_t length = 0;
    FiniteModule current = m;
    while (current.order() > 1) {
        ElementSet simple;
        for (Index x = 0; x < current.order(); ++x) {
            if (x == current.zero()) continue;
            ElementSet c = submodule_generated(current, {x});
            if (simple.empty() || c.size() < simple.size()) simple = std::move(c);
        }
        current = quotient_module(current, simple).module;
        ++length;
    }
    return length;
}

/// The submodule lattice is a chain.
inline bool is_uniserial(const SubmoduleLattice& lattice) {
    for (std::size_t i = 0; i + 1 < lattice.count; ++i) {
        if (!is_subset(lattice.nodes[i], lattice.nodes[i + 1])) return false;
    }
    return true;
}

inline bool is_uniserial(const FiniteModule& m, const Limits& limits = default_limits()) {
    return is_uniserial(submodules(m, limits));
}

}  // namespace ringlat
