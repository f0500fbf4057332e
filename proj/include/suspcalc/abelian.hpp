#pragma once

#include "suspcalc/intmat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace suspcalc {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
struct FgAbGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbGroup&) const = default;
    bool operator<(const FgAbGroup& o) const {
        if (free_rank != o.free_rank) return free_rank < o.free_rank;
        return torsion < o.torsion;
    }

    static FgAbGroup zero() { return {}; }
    static FgAbGroup free_group(int rank) { return {rank, {}}; }

    // cyclic(0) = Z, cyclic(1) = 0, cyclic(n >= 2) = Z/n
    static FgAbGroup cyclic(const Int& n) {
        if (n == 0) return free_group(1);
        Int a = abs(n);
        if (a == 1) return zero();
        return {0, {a}};
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_cyclic() const { return free_rank + static_cast<int>(torsion.size()) <= 1; }
    bool is_finite() const { return free_rank == 0; }

    // Cyclic factor orders, 0 standing for Z. Order: free factors, then invariant factors.
    std::vector<Int> cyclic_orders() const {
        std::vector<Int> v(static_cast<std::size_t>(free_rank), Int(0));
        v.insert(v.end(), torsion.begin(), torsion.end());
        return v;
    }

    std::string to_text() const {
        if (is_trivial()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (const Int& d : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + d.str();
        }
        return s;
    }
};

// Group presented as coker of an integer matrix: generators many rows,
// one column per relator.
struct AbPresentation {
    int generators = 0;
    IntMat relations;  // generators x (number of relators)

    AbPresentation() = default;
    AbPresentation(int gens, IntMat rels) : generators(gens), relations(std::move(rels)) {
        if (relations.rows() != static_cast<std::size_t>(generators))
            throw std::invalid_argument("AbPresentation: relation matrix has " +
                                        std::to_string(relations.rows()) + " rows for " +
                                        std::to_string(generators) + " generators");
    }

    static AbPresentation free_of_rank(int n) { return AbPresentation(n, IntMat(static_cast<std::size_t>(n), 0)); }

    // Canonical presentation of a group in invariant-factor form: free
    // generators first, then one generator per torsion factor with relator d*e.
    static AbPresentation of(const FgAbGroup& g) {
        const int n = g.free_rank + static_cast<int>(g.torsion.size());
        IntMat rel(static_cast<std::size_t>(n), g.torsion.size());
        for (std::size_t j = 0; j < g.torsion.size(); ++j)
            rel(static_cast<std::size_t>(g.free_rank) + j, j) = g.torsion[j];
        return AbPresentation(n, std::move(rel));
    }

    bool is_free() const { return relations.cols() == 0; }
};

inline FgAbGroup canonicalize(const AbPresentation& p) {
    SmithResult s = smith_normal_form(p.relations);
    FgAbGroup g;
    g.free_rank = p.generators - static_cast<int>(s.rank());
    for (const Int& d : s.diag)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

namespace detail {
inline std::map<Int, int> factorize(Int n) {
    std::map<Int, int> f;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}
}  // namespace detail

// Invariant factors of a direct sum of cyclic groups, by bucketing prime
// powers: the k-th largest factor collects the k-th largest exponent of each
// prime. Cheaper than running the matrix normal form on a diagonal.
inline FgAbGroup group_of_cyclic_orders(const std::vector<Int>& orders) {
    FgAbGroup g;
    std::map<Int, std::vector<int>> primary;
    std::size_t slots = 0;
    for (const Int& d : orders) {
        if (d == 0) {
            ++g.free_rank;
            continue;
        }
        Int a = abs(d);
        if (a <= 1) continue;
        for (auto& [p, e] : detail::factorize(a)) {
            primary[p].push_back(e);
            slots = std::max(slots, primary[p].size());
        }
    }
    for (auto& [p, es] : primary)
        std::sort(es.begin(), es.end(), std::greater<int>());
    std::vector<Int> tors;
    for (std::size_t k = 0; k < slots; ++k) {
        Int d = 1;
        for (auto& [p, es] : primary)
            if (k < es.size()) {
                Int q = 1;
                for (int i = 0; i < es[k]; ++i) q *= p;
                d *= q;
            }
        tors.push_back(d);
    }
    g.torsion.assign(tors.rbegin(), tors.rend());
    return g;
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> orders = a.cyclic_orders();
    auto ob = b.cyclic_orders();
    orders.insert(orders.end(), ob.begin(), ob.end());
    return group_of_cyclic_orders(orders);
}

inline FgAbGroup direct_sum_pow(const FgAbGroup& a, int k) {
    FgAbGroup r;
    for (int i = 0; i < k; ++i) r = direct_sum(r, a);
    return r;
}

// nullopt = infinite
inline std::optional<Int> order(const FgAbGroup& a) {
    if (a.free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const Int& d : a.torsion) n *= d;
    return n;
}

inline bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

// prime -> ascending exponents, one entry per Z/p^r summand
inline std::map<Int, std::vector<int>> primary_decomposition(const FgAbGroup& a) {
    std::map<Int, std::vector<int>> parts;
    for (const Int& d : a.torsion)
        for (auto& [p, e] : detail::factorize(d))
            parts[p].push_back(e);
    for (auto& [p, es] : parts)
        std::sort(es.begin(), es.end());
    return parts;
}

// The maximal elementary 2-group summand: one Z/2 per exponent-1 entry at p=2.
inline FgAbGroup two_primary_elementary_part(const FgAbGroup& a) {
    auto parts = primary_decomposition(a);
    int k = 0;
    auto it = parts.find(2);
    if (it != parts.end())
        for (int e : it->second)
            if (e == 1) ++k;
    FgAbGroup g;
    g.torsion.assign(static_cast<std::size_t>(k), Int(2));
    return g;
}

// B with A = A2 + B: the free part plus every primary summand other than Z/2.
inline FgAbGroup complement_of_elementary_two_part(const FgAbGroup& a) {
    std::vector<Int> orders(static_cast<std::size_t>(a.free_rank), Int(0));
    for (auto& [p, es] : primary_decomposition(a))
        for (int e : es) {
            if (p == 2 && e == 1) continue;
            Int q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            orders.push_back(q);
        }
    return group_of_cyclic_orders(orders);
}

// Morphism of presented groups: column j of matrix is the image of source
// generator j in target generators.
struct AbMap {
    AbPresentation source, target;
    IntMat matrix;

    AbMap(AbPresentation src, AbPresentation tgt, IntMat m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (matrix.rows() != static_cast<std::size_t>(target.generators) ||
            matrix.cols() != static_cast<std::size_t>(source.generators))
            throw std::invalid_argument("AbMap: matrix shape " + matrix.shape_str() + " does not match " +
                                        std::to_string(target.generators) + "x" +
                                        std::to_string(source.generators));
    }
};

// The matrix must carry every source relator into the target relation lattice.
inline bool is_well_defined(const AbMap& f) {
    for (std::size_t j = 0; j < f.source.relations.cols(); ++j) {
        std::vector<Int> img = f.matrix.mul_vec(f.source.relations.col(j));
        if (!solve(f.target.relations, img)) return false;
    }
    return true;
}

namespace detail {
// Basis of the lattice { x : M x lies in the column lattice of L }, computed by
// projecting the kernel of [M | L] onto the x block.
inline IntMat preimage_lattice(const IntMat& M, const IntMat& L) {
    IntMat K = kernel_basis(IntMat::hconcat(M, L));
    IntMat X(M.cols(), K.cols());
    for (std::size_t i = 0; i < M.cols(); ++i)
        for (std::size_t j = 0; j < K.cols(); ++j)
            X(i, j) = K(i, j);
    return X;
}
}  // namespace detail

// Presentation of ker(f). Generators are lattice vectors in the source
// (columns of a generating set of the preimage of the target relations);
// relators express source relations in those generators.
inline AbPresentation kernel(const AbMap& f) {
    IntMat X = detail::preimage_lattice(f.matrix, f.target.relations);
    IntMat rel = detail::preimage_lattice(X, f.source.relations);
    return AbPresentation(static_cast<int>(X.cols()), std::move(rel));
}

// Same generators as kernel(f), but exposed with the witness lattice so callers
// can express elements of the source lattice in kernel coordinates.
struct KernelModel {
    AbPresentation presentation;
    IntMat lattice;  // source.generators x presentation.generators
};

inline KernelModel kernel_model(const AbMap& f) {
    IntMat X = detail::preimage_lattice(f.matrix, f.target.relations);
    IntMat rel = detail::preimage_lattice(X, f.source.relations);
    return {AbPresentation(static_cast<int>(X.cols()), std::move(rel)), std::move(X)};
}

inline AbPresentation cokernel(const AbMap& f) {
    return AbPresentation(f.target.generators, IntMat::hconcat(f.target.relations, f.matrix));
}

inline AbPresentation image(const AbMap& f) {
    // source generators, with exactly the combinations that die in the target
    IntMat rel = detail::preimage_lattice(f.matrix, f.target.relations);
    return AbPresentation(f.source.generators, std::move(rel));
}

// Pushout of target(f) <- source -> target(g), as a group.
inline FgAbGroup pushout(const AbMap& f, const AbMap& g) {
    if (f.source.generators != g.source.generators || !(f.source.relations == g.source.relations))
        throw std::invalid_argument("pushout: maps do not share a source presentation");
    const int n1 = f.target.generators, n2 = g.target.generators;
    const std::size_t r1 = f.target.relations.cols(), r2 = g.target.relations.cols();
    const std::size_t ns = static_cast<std::size_t>(f.source.generators);
    IntMat rel(static_cast<std::size_t>(n1 + n2), r1 + r2 + ns);
    for (std::size_t j = 0; j < r1; ++j)
        for (int i = 0; i < n1; ++i)
            rel(static_cast<std::size_t>(i), j) = f.target.relations(static_cast<std::size_t>(i), j);
    for (std::size_t j = 0; j < r2; ++j)
        for (int i = 0; i < n2; ++i)
            rel(static_cast<std::size_t>(n1 + i), r1 + j) = g.target.relations(static_cast<std::size_t>(i), j);
    for (std::size_t j = 0; j < ns; ++j) {
        for (int i = 0; i < n1; ++i)
            rel(static_cast<std::size_t>(i), r1 + r2 + j) = f.matrix(static_cast<std::size_t>(i), j);
        for (int i = 0; i < n2; ++i)
            rel(static_cast<std::size_t>(n1 + i), r1 + r2 + j) = -g.matrix(static_cast<std::size_t>(i), j);
    }
    return canonicalize(AbPresentation(n1 + n2, std::move(rel)));
}

}  // namespace suspcalc
