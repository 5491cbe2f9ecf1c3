#pragma once

/**
 * @file combinatorics.hpp
 * @brief Set partitions by restricted growth strings, Bell and Stirling
 *        numbers, partition subalgebras of Kⁿ, and the idempotent-matrix
 *        description of algebra maps R^p → R^n.
 */

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ringlat/construct.hpp"
#include "ringlat/structure.hpp"

namespace ringlat {

inline constexpr std::size_t max_partition_size = 12;

/// Blocks of {1..n}, each sorted, ordered by least element.
struct Partition {
    std::vector<std::vector<int>> blocks;

    std::size_t size() const noexcept { return blocks.size(); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

inline void require_partition_size(std::size_t n) {
    if (n > max_partition_size) {
        throw Error(ErrorKind::size_limit, "partitions are enumerated up to n = " + std::to_string(max_partition_size));
    }
}

/// Calls `visit` with each restricted growth string a (a[0] = 0,
/// a[i] ≤ 1 + max(a[0..i-1])) in lexicographic order.
inline void for_each_growth_string(std::size_t n, const std::function<void(const std::vector<int>&)>& visit) {
    require_partition_size(n);
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<int> a(n, 0);
    std::vector<int> prefix_max(n, 0);
    for (;;) {
        visit(a);
        std::size_t i = n;
        while (i-- > 1) {
            if (a[i] <= prefix_max[i - 1]) break;
        }
        if (i == 0) return;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

inline Partition partition_from_growth_string(const std::vector<int>& a) {
    Partition p;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (static_cast<std::size_t>(a[i]) == p.blocks.size()) p.blocks.emplace_back();
        p.blocks[static_cast<std::size_t>(a[i])].push_back(static_cast<int>(i + 1));
    }
    return p;
}

inline std::vector<Partition> partitions(std::size_t n) {
    std::vector<Partition> out;
    for_each_growth_string(n, [&](const std::vector<int>& a) { out.push_back(partition_from_growth_string(a)); });
    return out;
}

inline std::vector<Partition> partitions_into(std::size_t n, std::size_t p) {
    std::vector<Partition> out;
    for_each_growth_string(n, [&](const std::vector<int>& a) {
        std::size_t blocks = a.empty() ? 0 : static_cast<std::size_t>(*std::max_element(a.begin(), a.end())) + 1;
        if (blocks == p) out.push_back(partition_from_growth_string(a));
    });
    return out;
}

/// Number of partitions of an n-set, by enumeration.
inline std::uint64_t bell(std::size_t n) {
    std::uint64_t count = 0;
    for_each_growth_string(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

/// Number of partitions of an n-set into exactly p blocks, by enumeration.
inline std::uint64_t stirling2(std::size_t n, std::size_t p) {
    std::uint64_t count = 0;
    for_each_growth_string(n, [&](const std::vector<int>& a) {
        std::size_t blocks = a.empty() ? 0 : static_cast<std::size_t>(*std::max_element(a.begin(), a.end())) + 1;
        if (blocks == p) ++count;
    });
    return count;
}

/// S(n,p) = p·S(n−1,p) + S(n−1,p−1).
inline std::uint64_t stirling2_recurrence(std::size_t n, std::size_t p) {
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 2, 0));
    s[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    }
    return p <= n ? s[n][p] : 0;
}

inline std::uint64_t bell_recurrence(std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t p = 0; p <= n; ++p) total += stirling2_recurrence(n, p);
    return total;
}

/// Every block of `fine` lies inside a block of `coarse`.
inline bool refines(const Partition& fine, const Partition& coarse) {
    for (const auto& b : fine.blocks) {
        bool inside = false;
        for (const auto& c : coarse.blocks) {
            if (std::includes(c.begin(), c.end(), b.begin(), b.end())) inside = true;
        }
        if (!inside) return false;
    }
    return true;
}

/// Tuples of Kⁿ constant on each block of π.
inline ElementSet partition_to_subalgebra(const ProductRing& kn, const Partition& pi) {
    const FiniteRing& k = kn.factors.at(0);
    ElementSet out;
    std::vector<Index> block_value(pi.size(), 0);
    std::vector<Index> tuple(kn.factors.size());
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == pi.size()) {
            for (std::size_t j = 0; j < pi.size(); ++j) {
                for (int i : pi.blocks[j]) tuple[static_cast<std::size_t>(i - 1)] = block_value[j];
            }
            out.push_back(kn.encode(tuple));
            return;
        }
        for (Index v = 0; v < k.order(); ++v) {
            block_value[b] = v;
            self(self, b + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Idempotent matrices

/// n×p matrix over R; row i lists a_{i,1..p}.
struct LambdaMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Index> entries;

    Index at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    friend bool operator==(const LambdaMatrix&, const LambdaMatrix&) = default;
};

/// Each row consists of idempotents, pairwise orthogonal, summing to one.
inline bool satisfies_lambda_conditions(const FiniteRing& r, const LambdaMatrix& a) {
    for (std::size_t i = 0; i < a.rows; ++i) {
        Index sum = r.zero();
        for (std::size_t j = 0; j < a.cols; ++j) {
            const Index x = a.at(i, j);
            if (r.mul(x, x) != x) return false;
            for (std::size_t k = j + 1; k < a.cols; ++k) {
                if (r.mul(x, a.at(i, k)) != r.zero()) return false;
            }
            sum = r.add(sum, x);
        }
        if (sum != r.one()) return false;
    }
    return true;
}

/// Ordered p-tuples of pairwise orthogonal idempotents summing to one.
inline std::vector<std::vector<Index>> orthogonal_decompositions(const FiniteRing& r, std::size_t p) {
    ElementSet idem = idempotents(r);
    std::vector<std::vector<Index>> out;
    std::vector<Index> row(p);
    auto rec = [&](auto&& self, std::size_t j, Index sum) -> void {
        if (j == p) {
            if (sum == r.one()) out.push_back(row);
            return;
        }
        for (Index e : idem) {
            bool orthogonal = true;
            for (std::size_t k = 0; k < j && orthogonal; ++k) orthogonal = r.mul(e, row[k]) == r.zero();
            if (!orthogonal) continue;
            row[j] = e;
            self(self, j + 1, r.add(sum, e));
        }
    };
    rec(rec, 0, r.zero());
    return out;
}

struct MatrixSpaces {
    ProductRing source;  // R^p
    ProductRing target;  // R^n
};

inline MatrixSpaces matrix_spaces(const FiniteRing& r, std::size_t p, std::size_t n, const Limits& limits = default_limits()) {
    return MatrixSpaces{power(r, p, limits), power(r, n, limits)};
}

/// φ(x₁, ..., x_p) = (Σⱼ a_{i,j} xⱼ)ᵢ, so that φ(f_j) = Σᵢ a_{i,j} eᵢ.
inline RingHom morphism_of(const FiniteRing& r, const MatrixSpaces& spaces, const LambdaMatrix& a) {
    std::vector<Index> map(spaces.source.ring.order());
    std::vector<Index> out(a.rows);
    for (Index x = 0; x < map.size(); ++x) {
        std::vector<Index> c = spaces.source.decode(x);
        for (std::size_t i = 0; i < a.rows; ++i) {
            Index acc = r.zero();
            for (std::size_t j = 0; j < a.cols; ++j) acc = r.add(acc, r.mul(a.at(i, j), c[j]));
            out[i] = acc;
        }
        map[x] = spaces.target.encode(out);
    }
    return RingHom(spaces.source.ring, spaces.target.ring, std::move(map));
}

/// a_{i,j} = i-th component of φ(f_j).
inline LambdaMatrix matrix_of(const FiniteRing& r, const MatrixSpaces& spaces, const RingHom& phi) {
    const std::size_t p = spaces.source.factors.size();
    const std::size_t n = spaces.target.factors.size();
    LambdaMatrix a{n, p, std::vector<Index>(n * p)};
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<Index> f(p, r.zero());
        f[j] = r.one();
        std::vector<Index> img = spaces.target.decode(phi(spaces.source.encode(f)));
        for (std::size_t i = 0; i < n; ++i) a.entries[i * p + j] = img[i];
    }
    return a;
}

/// All algebra maps R^p → R^n as matrices; rows are chosen independently.
inline std::vector<LambdaMatrix> enumerate_homal(const FiniteRing& r, std::size_t p, std::size_t n) {
    std::vector<std::vector<Index>> rows = orthogonal_decompositions(r, p);
    std::vector<LambdaMatrix> out;
    std::vector<std::size_t> choice(n, 0);
    if (rows.empty()) return out;
    for (;;) {
        LambdaMatrix a{n, p, {}};
        for (std::size_t i = 0; i < n; ++i) a.entries.insert(a.entries.end(), rows[choice[i]].begin(), rows[choice[i]].end());
        out.push_back(std::move(a));
        std::size_t i = n;
        while (i-- > 0) {
            if (++choice[i] < rows.size()) break;
            choice[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

/// The injective members of `enumerate_homal`, tested on the constructed maps.
inline std::vector<LambdaMatrix> enumerate_exal(const FiniteRing& r, std::size_t p, std::size_t n,
                                                const Limits& limits = default_limits()) {
    MatrixSpaces spaces = matrix_spaces(r, p, n, limits);
    std::vector<LambdaMatrix> out;
    for (LambdaMatrix& a : enumerate_homal(r, p, n)) {
        if (morphism_of(r, spaces, a).is_injective()) out.push_back(std::move(a));
    }
    return out;
}

struct ExalCount {
    /// Injective maps R^p → R^n.
    std::size_t labeled = 0;
    /// Distinct images, i.e. injective maps up to automorphisms of R^p.
    std::size_t images = 0;
    /// Automorphisms of R^p as an R-algebra.
    std::size_t automorphisms = 0;
};

inline ExalCount count_exal(const FiniteRing& r, std::size_t p, std::size_t n, const Limits& limits = default_limits()) {
    MatrixSpaces spaces = matrix_spaces(r, p, n, limits);
    ExalCount out;
    std::set<ElementSet> images;
    for (const LambdaMatrix& a : enumerate_homal(r, p, n)) {
        RingHom phi = morphism_of(r, spaces, a);
        if (!phi.is_injective()) continue;
        ++out.labeled;
        images.insert(phi.image());
    }
    out.images = images.size();
    out.automorphisms = enumerate_exal(r, p, p, limits).size();
    return out;
}

struct ExalBoundReport {
    ExalCount count;
    std::uint64_t stirling = 0;
    std::size_t minimal_primes = 0;
    std::uint64_t upper_bound = 0;
    bool lower_holds = false;
    bool upper_holds = false;
    /// labeled = automorphisms × images
    bool orbit_identity_holds = false;
};

/// S(n,p) ≤ |Exal| ≤ S(n,p)^|Min(R)|, with |Min(R)| the number of local factors.
inline ExalBoundReport exal_bound_check(const FiniteRing& r, std::size_t p, std::size_t n,
                                        const Limits& limits = default_limits()) {
    ExalBoundReport out;
    out.count = count_exal(r, p, n, limits);
    out.stirling = stirling2(n, p);
    out.minimal_primes = local_decomposition(r, limits).factors.size();
    out.upper_bound = 1;
    for (std::size_t i = 0; i < out.minimal_primes; ++i) out.upper_bound *= out.stirling;
    out.lower_holds = out.count.images >= out.stirling;
    out.upper_holds = out.count.images <= out.upper_bound;
    out.orbit_identity_holds = out.count.labeled == out.count.automorphisms * out.count.images;
    return out;
}

}  // namespace ringlat
