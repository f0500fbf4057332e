#pragma once

#include "suspcalc/functors.hpp"
#include "suspcalc/spaces.hpp"

#include <map>

namespace suspcalc {

// Reduced integral homology in degrees 0..cutoff. Degrees above the cutoff
// are not stored and asking for them is an error.
struct GradedGroups {
    int cutoff = 7;
    std::map<int, FgAbGroup> groups;  // only nonzero degrees stored

    FgAbGroup at(int k) const {
        if (k < 0 || k > cutoff)
            throw std::out_of_range("GradedGroups: degree " + std::to_string(k) +
                                    " outside computed range 0.." + std::to_string(cutoff));
        auto it = groups.find(k);
        return it == groups.end() ? FgAbGroup::zero() : it->second;
    }

    void set(int k, FgAbGroup g) {
        if (k <= cutoff && !g.is_trivial()) groups[k] = std::move(g);
    }

    void add(int k, const FgAbGroup& g) {
        if (k > cutoff || g.is_trivial()) return;
        set(k, direct_sum(at(k), g));
    }

    bool operator==(const GradedGroups&) const = default;
};

// Reduced homology of K(C,1) for a cyclic group C: the circle for C = Z,
// Z/m in every odd degree for C = Z/m.
inline FgAbGroup h_em1(const FgAbGroup& c, int k) {
    if (!c.is_cyclic())
        throw std::invalid_argument("h_em1: input " + c.to_text() + " is not cyclic");
    if (k <= 0) return FgAbGroup::zero();
    if (c.is_trivial()) return FgAbGroup::zero();
    if (c.free_rank == 1) return k == 1 ? FgAbGroup::free_group(1) : FgAbGroup::zero();
    return k % 2 == 1 ? c : FgAbGroup::zero();
}

namespace detail {

inline GradedGroups reduced_kunneth_smash(const GradedGroups& a, const GradedGroups& b, int cutoff) {
    GradedGroups out;
    out.cutoff = cutoff;
    for (int i = 1; i < cutoff; ++i)
        for (int j = 1; i + j <= cutoff; ++j)
            out.add(i + j, tensor(a.at(i), b.at(j)));
    for (int i = 1; i < cutoff; ++i)
        for (int j = 1; i + j + 1 <= cutoff; ++j)
            out.add(i + j + 1, tor(a.at(i), b.at(j)));
    return out;
}

// unreduced Kunneth for a product of connected spaces, in reduced bookkeeping:
// H~(X x Y) adds the two axes to the smash part
inline GradedGroups kunneth_product(const GradedGroups& a, const GradedGroups& b, int cutoff) {
    GradedGroups out = reduced_kunneth_smash(a, b, cutoff);
    for (int k = 1; k <= cutoff; ++k) {
        out.add(k, a.at(k));
        out.add(k, b.at(k));
    }
    return out;
}

struct HomologyMemo {
    std::map<std::pair<const void*, int>, GradedGroups> cache;
};

inline GradedGroups homology_rec(const SpaceExpr& x, int cutoff, HomologyMemo& memo) {
    auto key = std::make_pair(x.id(), cutoff);
    if (auto it = memo.cache.find(key); it != memo.cache.end()) return it->second;

    GradedGroups out;
    out.cutoff = cutoff;
    switch (x.kind()) {
        case SpaceKind::point:
            break;
        case SpaceKind::sphere:
            out.set(x.dim(), FgAbGroup::free_group(1));
            break;
        case SpaceKind::moore:
            out.set(x.dim(), x.group());
            break;
        case SpaceKind::em1: {
            Int q = 1;
            for (int i = 0; i < x.exponent(); ++i) q *= x.prime();
            FgAbGroup c = FgAbGroup::cyclic(q);
            for (int k = 1; k <= cutoff; ++k) out.set(k, h_em1(c, k));
            break;
        }
        case SpaceKind::susp: {
            GradedGroups inner = homology_rec(x.kids()[0], cutoff, memo);
            for (auto& [k, g] : inner.groups) out.set(k + 1, g);
            break;
        }
        case SpaceKind::smash: {
            GradedGroups acc = homology_rec(x.kids()[0], cutoff, memo);
            for (std::size_t i = 1; i < x.kids().size(); ++i)
                acc = reduced_kunneth_smash(acc, homology_rec(x.kids()[i], cutoff, memo), cutoff);
            out = acc;
            break;
        }
        case SpaceKind::wedge: {
            for (const auto& k : x.kids()) {
                GradedGroups part = homology_rec(k, cutoff, memo);
                for (auto& [deg, g] : part.groups) out.add(deg, g);
            }
            break;
        }
        case SpaceKind::product: {
            GradedGroups acc = homology_rec(x.kids()[0], cutoff, memo);
            for (std::size_t i = 1; i < x.kids().size(); ++i)
                acc = kunneth_product(acc, homology_rec(x.kids()[i], cutoff, memo), cutoff);
            out = acc;
            break;
        }
    }
    memo.cache.emplace(key, out);
    return out;
}

}  // namespace detail

// Reduced homology of a space expression through the cutoff degree. The memo
// is confined to this call, so concurrent evaluations do not share state.
inline GradedGroups homology(const SpaceExpr& x, int cutoff = 7) {
    if (cutoff > 12)
        throw std::invalid_argument("homology: cutoff " + std::to_string(cutoff) +
                                    " exceeds the supported range (<= 12)");
    if (cutoff < 0) throw std::invalid_argument("homology: negative cutoff");
    detail::HomologyMemo memo;
    return detail::homology_rec(x, cutoff, memo);
}

inline FgAbGroup homology_at(const SpaceExpr& x, int k) { return homology(x, k).at(k); }

}  // namespace suspcalc
