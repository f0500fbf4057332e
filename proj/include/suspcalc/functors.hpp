#pragma once

#include "suspcalc/abelian.hpp"

#include <array>
#include <utility>

namespace suspcalc {

// ---------------------------------------------------------------------------
// Closed forms over cyclic decompositions. A cyclic order of 0 stands for Z.
// ---------------------------------------------------------------------------

namespace detail {

// Z (x) Z = Z, Z (x) Z/n = Z/n, Z/m (x) Z/n = Z/gcd(m,n)
inline Int cyclic_tensor(const Int& a, const Int& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return gcd(a, b);
}

// Tor(Z, -) = 0, Tor(Z/m, Z/n) = Z/gcd(m,n)
inline Int cyclic_tor(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 1;
    return gcd(a, b);
}

}  // namespace detail

inline FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> out;
    for (const Int& x : a.cyclic_orders())
        for (const Int& y : b.cyclic_orders())
            out.push_back(detail::cyclic_tensor(x, y));
    return group_of_cyclic_orders(out);
}

inline FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> out;
    for (const Int& x : a.cyclic_orders())
        for (const Int& y : b.cyclic_orders())
            out.push_back(detail::cyclic_tor(x, y));
    return group_of_cyclic_orders(out);
}

// Exterior powers vanish on cyclic groups, so only cross terms survive.
inline FgAbGroup lambda2(const FgAbGroup& a) {
    auto cs = a.cyclic_orders();
    std::vector<Int> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            out.push_back(detail::cyclic_tensor(cs[i], cs[j]));
    return group_of_cyclic_orders(out);
}

inline FgAbGroup lambda3(const FgAbGroup& a) {
    auto cs = a.cyclic_orders();
    std::vector<Int> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            for (std::size_t k = j + 1; k < cs.size(); ++k)
                out.push_back(detail::cyclic_tensor(detail::cyclic_tensor(cs[i], cs[j]), cs[k]));
    return group_of_cyclic_orders(out);
}

// Whitehead quadratic functor. Gamma2(Z) = Z; Gamma2(Z/m) = Z/m for odd m,
// Z/2m for even m; cross terms are plain tensors.
inline FgAbGroup gamma2(const FgAbGroup& a) {
    auto cs = a.cyclic_orders();
    std::vector<Int> out;
    for (const Int& c : cs)
        out.push_back(c == 0 ? Int(0) : (c % 2 == 0 ? 2 * c : c));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            out.push_back(detail::cyclic_tensor(cs[i], cs[j]));
    return group_of_cyclic_orders(out);
}

// Symmetric square: SP2 of a cyclic group is that group; cross terms tensors.
inline FgAbGroup sp2(const FgAbGroup& a) {
    auto cs = a.cyclic_orders();
    std::vector<Int> out;
    for (const Int& c : cs)
        out.push_back(c);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            out.push_back(detail::cyclic_tensor(cs[i], cs[j]));
    return group_of_cyclic_orders(out);
}

// Antisymmetric square A (x~) A = A (x) A / (a(x)b + b(x)a): diagonal terms
// contribute C (x) Z/2, under-diagonal terms plain tensors.
inline FgAbGroup tilde_sq(const FgAbGroup& a) {
    auto cs = a.cyclic_orders();
    std::vector<Int> out;
    for (const Int& c : cs)
        out.push_back(detail::cyclic_tensor(c, 2));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            out.push_back(detail::cyclic_tensor(cs[i], cs[j]));
    return group_of_cyclic_orders(out);
}

// H5 of K(A,2): zero on infinite or odd cyclic pieces, Z/2 on each piece of
// even order, Tor cross terms between summands.
inline FgAbGroup r2(const FgAbGroup& a) {
    auto cs = a.cyclic_orders();
    std::vector<Int> out;
    for (const Int& c : cs)
        out.push_back(c != 0 && c % 2 == 0 ? Int(2) : Int(1));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            out.push_back(detail::cyclic_tor(cs[i], cs[j]));
    return group_of_cyclic_orders(out);
}

// First derived functor of the antisymmetric square on a cyclic group,
// read off the three-term model Z --2n--> Z --n--> Z/2.
inline FgAbGroup l1_tilde_sq(const FgAbGroup& a) {
    if (!a.is_cyclic())
        throw std::invalid_argument(
            "l1_tilde_sq: input " + a.to_text() +
            " is not cyclic; use derived_tilde_sq on a two-step resolution instead");
    if (a.free_rank == 1 || a.is_trivial()) return FgAbGroup::zero();
    const Int& n = a.torsion[0];
    return FgAbGroup::cyclic(n % 2 == 0 ? 2 * n : n);
}

// Free Z/4-module of rank dim_{Z/2}(A2 (x) A2) for an elementary 2-group A2.
inline FgAbGroup half_square(const FgAbGroup& a2) {
    if (a2.free_rank != 0)
        throw std::invalid_argument("half_square: input " + a2.to_text() + " has free part");
    for (const Int& d : a2.torsion)
        if (d != 2)
            throw std::invalid_argument("half_square: input " + a2.to_text() +
                                        " is not an elementary 2-group");
    const std::size_t k = a2.torsion.size();
    FgAbGroup g;
    g.torsion.assign(k * k, Int(4));
    return g;
}

// ---------------------------------------------------------------------------
// Presentation oracles
// ---------------------------------------------------------------------------

// Combinatorial presentation of Gamma2 on a presented group with generators
// a_1..a_n: symbols gamma(a_i) and gamma(a_i,a_j) for i<j; each relator b
// contributes gamma(b) = 0 and gamma(a_k, b) = 0, expanded through
// gamma(sum c_i a_i) = sum c_i^2 gamma(a_i) + sum_{i<j} c_i c_j gamma(a_i,a_j)
// and bilinearity of gamma(-,-) with gamma(a,a) = 2 gamma(a).
inline AbPresentation gamma2_presentation(const AbPresentation& p) {
    const int n = p.generators;
    if (n > 12)
        throw std::invalid_argument("gamma2_presentation: " + std::to_string(n) +
                                    " generators exceeds the 12-generator guard");
    auto pair_index = [n](int i, int j) {  // i < j
        return n + (i * (2 * n - i - 1)) / 2 + (j - i - 1);
    };
    const int ngen = n + n * (n - 1) / 2;
    const std::size_t nrel = p.relations.cols();
    IntMat rel(static_cast<std::size_t>(ngen), nrel * (1 + static_cast<std::size_t>(n)));
    for (std::size_t l = 0; l < nrel; ++l) {
        std::vector<Int> c = p.relations.col(l);
        std::size_t col = l * (1 + static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            rel(static_cast<std::size_t>(i), col) =
                c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                rel(static_cast<std::size_t>(pair_index(i, j)), col) =
                    c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)];
        }
        for (int k = 0; k < n; ++k) {
            std::size_t ck = col + 1 + static_cast<std::size_t>(k);
            rel(static_cast<std::size_t>(k), ck) = 2 * c[static_cast<std::size_t>(k)];
            for (int i = 0; i < n; ++i) {
                if (i == k) continue;
                rel(static_cast<std::size_t>(pair_index(std::min(i, k), std::max(i, k))), ck) +=
                    c[static_cast<std::size_t>(i)];
            }
        }
    }
    return AbPresentation(ngen, std::move(rel));
}

inline FgAbGroup gamma2_oracle(const FgAbGroup& a) {
    return canonicalize(gamma2_presentation(AbPresentation::of(a)));
}

// Antisymmetric square by presentation: generators e_i (x) e_j, relators from
// the input relators in each slot plus e_i (x) e_j + e_j (x) e_i.
inline AbPresentation tilde_sq_presentation(const AbPresentation& p) {
    const int n = p.generators;
    auto idx = [n](int i, int j) { return i * n + j; };
    const std::size_t nrel = p.relations.cols();
    const std::size_t sym = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2;
    IntMat rel(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
               2 * nrel * static_cast<std::size_t>(n) + sym);
    std::size_t col = 0;
    for (std::size_t l = 0; l < nrel; ++l) {
        std::vector<Int> c = p.relations.col(l);
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i)
                rel(static_cast<std::size_t>(idx(i, k)), col) = c[static_cast<std::size_t>(i)];
            ++col;
            for (int j = 0; j < n; ++j)
                rel(static_cast<std::size_t>(idx(k, j)), col) = c[static_cast<std::size_t>(j)];
            ++col;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            rel(static_cast<std::size_t>(idx(i, j)), col) += 1;
            rel(static_cast<std::size_t>(idx(j, i)), col) += 1;
            ++col;
        }
    return AbPresentation(n * n, std::move(rel));
}

inline FgAbGroup tilde_sq_oracle(const FgAbGroup& a) {
    return canonicalize(tilde_sq_presentation(AbPresentation::of(a)));
}

// ---------------------------------------------------------------------------
// The third super-Lie functor as ker{ A (x) Lambda^2(A) -> Lambda^3(A) }
// ---------------------------------------------------------------------------

struct Ls3Model {
    std::vector<Int> orders;  // cyclic decomposition of A, in the order used
    AbPresentation domain;    // A (x) Lambda^2(A)
    AbPresentation codomain;  // Lambda^3(A)
    AbMap map;                // r(a (x) b /\ c) = a /\ b /\ c
    KernelModel kernel;

    // generator index in the domain for e_k (x) (e_i /\ e_j), i < j
    int domain_index(int k, int i, int j) const {
        const int n = static_cast<int>(orders.size());
        int pair = (i * (2 * n - i - 1)) / 2 + (j - i - 1);
        return k * (n * (n - 1) / 2) + pair;
    }
};

namespace detail {

// presentation of a span of cyclic summands: one generator per index tuple,
// one relator per (generator, annihilating order) pair
inline AbPresentation cyclic_span_presentation(const std::vector<std::vector<Int>>& annihilators) {
    const int n = static_cast<int>(annihilators.size());
    std::size_t nrel = 0;
    for (auto& v : annihilators) nrel += v.size();
    IntMat rel(static_cast<std::size_t>(n), nrel);
    std::size_t col = 0;
    for (int g = 0; g < n; ++g)
        for (const Int& d : annihilators[static_cast<std::size_t>(g)])
            rel(static_cast<std::size_t>(g), col++) = d;
    return AbPresentation(n, std::move(rel));
}

}  // namespace detail

inline Ls3Model ls3_model_on_orders(const std::vector<Int>& cs) {
    const int n = static_cast<int>(cs.size());

    std::vector<std::vector<Int>> dom_ann;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<Int> ann;
                for (int t : {k, i, j})
                    if (cs[static_cast<std::size_t>(t)] != 0)
                        ann.push_back(cs[static_cast<std::size_t>(t)]);
                dom_ann.push_back(std::move(ann));
            }
    AbPresentation dom = detail::cyclic_span_presentation(dom_ann);

    std::vector<std::vector<Int>> cod_ann;
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<Int> ann;
                for (int t : {i, j, k})
                    if (cs[static_cast<std::size_t>(t)] != 0)
                        ann.push_back(cs[static_cast<std::size_t>(t)]);
                cod_ann.push_back(std::move(ann));
                triples.push_back({i, j, k});
            }
    AbPresentation cod = detail::cyclic_span_presentation(cod_ann);

    auto triple_index = [&triples](int i, int j, int k) {
        for (std::size_t t = 0; t < triples.size(); ++t)
            if (triples[t][0] == i && triples[t][1] == j && triples[t][2] == k)
                return static_cast<int>(t);
        return -1;
    };

    IntMat m(static_cast<std::size_t>(cod.generators), static_cast<std::size_t>(dom.generators));
    int col = 0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++col) {
                if (k == i || k == j) continue;  // repeated letter: wedge dies
                int x = k, y = i, z = j, sign = 1;
                if (x > y) { std::swap(x, y); sign = -sign; }
                if (y > z) { std::swap(y, z); sign = -sign; }
                if (x > y) { std::swap(x, y); sign = -sign; }
                m(static_cast<std::size_t>(triple_index(x, y, z)), static_cast<std::size_t>(col)) = sign;
            }

    Ls3Model model{cs, dom, cod, AbMap(dom, cod, std::move(m)), {}};
    model.kernel = kernel_model(model.map);
    return model;
}

inline Ls3Model ls3_model(const FgAbGroup& a) { return ls3_model_on_orders(a.cyclic_orders()); }

inline FgAbGroup ls3(const FgAbGroup& a) {
    if (a.is_cyclic()) return FgAbGroup::zero();  // Lambda^2 vanishes, so the domain does
    return canonicalize(ls3_model(a).kernel.presentation);
}

// ---------------------------------------------------------------------------
// Derived antisymmetric square from a two-step flat resolution
//   0 -> A1 --delta--> A0 -> A -> 0
// via the complex SP^2(A1) -> A1 (x) A0 -> A0 (x~) A0.
// ---------------------------------------------------------------------------

struct DerivedTildeSq {
    FgAbGroup l0;
    FgAbGroup l1;
};

inline DerivedTildeSq derived_tilde_sq(const AbMap& delta) {
    if (!delta.source.is_free() || !delta.target.is_free())
        throw std::invalid_argument("derived_tilde_sq: resolution terms must be free");
    if (kernel_basis(delta.matrix).cols() != 0)
        throw std::invalid_argument("derived_tilde_sq: delta is not injective");

    const int m = delta.source.generators;  // rank A1
    const int k = delta.target.generators;  // rank A0
    const IntMat& D = delta.matrix;         // k x m

    auto tidx = [k](int u, int v) { return u * k + v; };

    // A0 (x~) A0: k^2 generators, antisymmetry relators
    const std::size_t sym = static_cast<std::size_t>(k) * (static_cast<std::size_t>(k) + 1) / 2;
    IntMat arel(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), sym);
    std::size_t col = 0;
    for (int u = 0; u < k; ++u)
        for (int v = u; v < k; ++v) {
            arel(static_cast<std::size_t>(tidx(u, v)), col) += 1;
            arel(static_cast<std::size_t>(tidx(v, u)), col) += 1;
            ++col;
        }
    AbPresentation antisym(k * k, std::move(arel));

    // delta_1''(a_i (x) b_u) = delta(a_i) (x~) b_u
    IntMat d1(static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
              static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
    for (int i = 0; i < m; ++i)
        for (int u = 0; u < k; ++u)
            for (int v = 0; v < k; ++v)
                d1(static_cast<std::size_t>(tidx(v, u)), static_cast<std::size_t>(i * k + u)) =
                    D(static_cast<std::size_t>(v), static_cast<std::size_t>(i));
    AbMap d1map(AbPresentation::free_of_rank(m * k), antisym, std::move(d1));

    // delta_2''(a_i a_j) = a_i (x) delta(a_j) + a_j (x) delta(a_i), i <= j
    const int np = m * (m + 1) / 2;
    IntMat d2(static_cast<std::size_t>(m) * static_cast<std::size_t>(k), static_cast<std::size_t>(np));
    col = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j, ++col)
            for (int u = 0; u < k; ++u) {
                d2(static_cast<std::size_t>(i * k + u), col) +=
                    D(static_cast<std::size_t>(u), static_cast<std::size_t>(j));
                d2(static_cast<std::size_t>(j * k + u), col) +=
                    D(static_cast<std::size_t>(u), static_cast<std::size_t>(i));
            }

    DerivedTildeSq out;
    out.l0 = canonicalize(cokernel(d1map));

    KernelModel ker = kernel_model(d1map);
    auto coords = solve_mat(ker.lattice, d2);
    if (!coords)
        throw std::logic_error("derived_tilde_sq: image of delta_2'' escapes ker(delta_1'')");
    out.l1 = canonicalize(AbPresentation(
        ker.presentation.generators, IntMat::hconcat(ker.presentation.relations, *coords)));
    return out;
}

// ---------------------------------------------------------------------------
// Degree-4 Whitehead term of a simply connected space from the boundary
// h : Gamma2(pi2) -> pi3, computed as the pushout of
//   q (+) id : Gamma2(A) (x) (A (+) Z/2) -> Ls3(A) (+) Gamma2(A) (x) Z/2
//   h (x) id : Gamma2(A) (x) (A (+) Z/2) -> pi3 (x) (A (+) Z/2)
// with q(gamma(a) (x) b) = -{b,a,a} + gamma(a,b) (x) 1, the brace expanded on
// tensor words and then read inside the super-Lie kernel.
// ---------------------------------------------------------------------------

namespace detail {

inline AbPresentation tensor_presentation(const AbPresentation& p, const AbPresentation& q) {
    const int np = p.generators, nq = q.generators;
    auto idx = [nq](int i, int j) { return i * nq + j; };
    IntMat rel(static_cast<std::size_t>(np) * static_cast<std::size_t>(nq),
               p.relations.cols() * static_cast<std::size_t>(nq) +
                   q.relations.cols() * static_cast<std::size_t>(np));
    std::size_t col = 0;
    for (std::size_t l = 0; l < p.relations.cols(); ++l)
        for (int j = 0; j < nq; ++j, ++col)
            for (int i = 0; i < np; ++i)
                rel(static_cast<std::size_t>(idx(i, j)), col) =
                    p.relations(static_cast<std::size_t>(i), l);
    for (std::size_t l = 0; l < q.relations.cols(); ++l)
        for (int i = 0; i < np; ++i, ++col)
            for (int j = 0; j < nq; ++j)
                rel(static_cast<std::size_t>(idx(i, j)), col) =
                    q.relations(static_cast<std::size_t>(j), l);
    return AbPresentation(np * nq, std::move(rel));
}

inline AbPresentation direct_sum_presentation(const AbPresentation& p, const AbPresentation& q) {
    IntMat rel(static_cast<std::size_t>(p.generators + q.generators),
               p.relations.cols() + q.relations.cols());
    for (std::size_t l = 0; l < p.relations.cols(); ++l)
        for (int i = 0; i < p.generators; ++i)
            rel(static_cast<std::size_t>(i), l) = p.relations(static_cast<std::size_t>(i), l);
    for (std::size_t l = 0; l < q.relations.cols(); ++l)
        for (int i = 0; i < q.generators; ++i)
            rel(static_cast<std::size_t>(p.generators + i), p.relations.cols() + l) =
                q.relations(static_cast<std::size_t>(i), l);
    return AbPresentation(p.generators + q.generators, std::move(rel));
}

inline AbPresentation presentation_of_orders(const std::vector<Int>& orders) {
    std::size_t nrel = 0;
    for (const Int& d : orders)
        if (d != 0) ++nrel;
    IntMat rel(orders.size(), nrel);
    std::size_t col = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0) rel(i, col++) = orders[i];
    return AbPresentation(static_cast<int>(orders.size()), std::move(rel));
}

}  // namespace detail

// Gamma2^2 on an explicit cyclic decomposition of pi2 (the FgAbGroup entry
// point passes the canonical order; the generator-ordering invariance check
// permutes it).
inline FgAbGroup gamma2_squared_on_orders(const std::vector<Int>& orders, const AbMap& h) {
    const int n = static_cast<int>(orders.size());
    AbPresentation apres = detail::presentation_of_orders(orders);
    AbPresentation g2 = gamma2_presentation(apres);
    if (h.source.generators != g2.generators || !(h.source.relations == g2.relations)) {
        std::string gens;
        for (int i = 0; i < n; ++i)
            gens += std::string(i ? ", " : "") + "gamma(a" + std::to_string(i + 1) + ")";
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                gens += ", gamma(a" + std::to_string(i + 1) + ",a" + std::to_string(j + 1) + ")";
        throw std::invalid_argument(
            "gamma2_squared: h must be defined on the combinatorial presentation of Gamma2(pi2) "
            "with generators [" + gens + "]");
    }

    AbPresentation z2 = detail::presentation_of_orders({Int(2)});
    AbPresentation a_plus_z2 = detail::direct_sum_presentation(apres, z2);
    AbPresentation dom = detail::tensor_presentation(g2, a_plus_z2);
    const int nx = n + 1;  // tensor slots: e_1..e_n, u

    Ls3Model ls = ls3_model_on_orders(orders);
    AbPresentation g2z2 = detail::tensor_presentation(g2, z2);
    AbPresentation q1 = detail::direct_sum_presentation(ls.kernel.presentation, g2z2);
    const int nker = ls.kernel.presentation.generators;
    const int ng2 = g2.generators;

    auto pair_of = [n](int g) {  // inverse of the gamma2 pair indexing
        int off = g - n;
        for (int i = 0; i < n; ++i) {
            int row = n - i - 1;
            if (off < row) return std::pair<int, int>(i, i + 1 + off);
            off -= row;
        }
        throw std::logic_error("gamma2 pair index out of range");
    };

    IntMat f(static_cast<std::size_t>(q1.generators), static_cast<std::size_t>(dom.generators));
    for (int g = 0; g < ng2; ++g)
        for (int x = 0; x < nx; ++x) {
            const std::size_t dcol = static_cast<std::size_t>(g * nx + x);
            if (x == n) {  // identity to the Gamma2 (x) Z/2 block
                f(static_cast<std::size_t>(nker + g), dcol) = 1;
                continue;
            }
            std::vector<Int> lsvec(static_cast<std::size_t>(ls.domain.generators));
            std::vector<Int> g2part(static_cast<std::size_t>(ng2));
            if (g < n) {
                // q(gamma(e_g) (x) e_x) = e_g (x) (e_g /\ e_x) + gamma(e_g,e_x) (x) 1
                if (g != x) {
                    int lo = std::min(g, x), hi = std::max(g, x);
                    lsvec[static_cast<std::size_t>(ls.domain_index(g, lo, hi))] +=
                        (g < x) ? 1 : -1;
                    int pidx = n + (lo * (2 * n - lo - 1)) / 2 + (hi - lo - 1);
                    g2part[static_cast<std::size_t>(pidx)] += 1;
                } else {
                    g2part[static_cast<std::size_t>(g)] += 2;  // gamma(a,a) = 2 gamma(a)
                }
            } else {
                // q(gamma(e_i,e_j) (x) e_x) = e_i (x) (e_j /\ e_x) + e_j (x) (e_i /\ e_x)
                auto [i, j] = pair_of(g);
                for (auto [a, b] : {std::pair<int, int>(i, j), std::pair<int, int>(j, i)}) {
                    if (b == x) continue;
                    int lo = std::min(b, x), hi = std::max(b, x);
                    lsvec[static_cast<std::size_t>(ls.domain_index(a, lo, hi))] +=
                        (b < x) ? 1 : -1;
                }
            }
            bool nonzero = false;
            for (const Int& v : lsvec)
                if (v != 0) nonzero = true;
            if (nonzero) {
                auto coords = solve(ls.kernel.lattice, lsvec);
                if (!coords)
                    throw std::logic_error("gamma2_squared: q image is not in the super-Lie kernel");
                for (int t = 0; t < nker; ++t)
                    f(static_cast<std::size_t>(t), dcol) = (*coords)[static_cast<std::size_t>(t)];
            }
            for (int t = 0; t < ng2; ++t)
                if (g2part[static_cast<std::size_t>(t)] != 0)
                    f(static_cast<std::size_t>(nker + t), dcol) = g2part[static_cast<std::size_t>(t)];
        }

    AbPresentation q2 = detail::tensor_presentation(h.target, a_plus_z2);
    IntMat gmat(static_cast<std::size_t>(q2.generators), static_cast<std::size_t>(dom.generators));
    const int npi3 = h.target.generators;
    for (int g = 0; g < ng2; ++g)
        for (int x = 0; x < nx; ++x)
            for (int t = 0; t < npi3; ++t)
                gmat(static_cast<std::size_t>(t * nx + x), static_cast<std::size_t>(g * nx + x)) =
                    h.matrix(static_cast<std::size_t>(t), static_cast<std::size_t>(g));

    return pushout(AbMap(dom, q1, std::move(f)), AbMap(dom, q2, std::move(gmat)));
}

inline FgAbGroup gamma2_squared(const FgAbGroup& pi2, const FgAbGroup& pi3, const AbMap& h) {
    if (canonicalize(h.target) != pi3)
        throw std::invalid_argument("gamma2_squared: h's target presents " +
                                    canonicalize(h.target).to_text() +
                                    ", not pi3 = " + pi3.to_text());
    return gamma2_squared_on_orders(pi2.cyclic_orders(), h);
}

// h = identity on the combinatorial Gamma2 presentation; pi3 = Gamma2(pi2).
inline AbMap gamma2_identity_boundary(const std::vector<Int>& orders) {
    AbPresentation g2 = gamma2_presentation(detail::presentation_of_orders(orders));
    const std::size_t ng = static_cast<std::size_t>(g2.generators);
    return AbMap(g2, g2, IntMat::identity(ng));
}

}  // namespace suspcalc
