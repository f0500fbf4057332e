#pragma once

#include "suspcalc/abelian.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace suspcalc {

enum class SpaceKind { point, sphere, em1, moore, susp, smash, wedge, product };

namespace detail {
inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
}  // namespace detail

// Immutable expression tree over pointed spaces. K(Z,1) is the circle and is
// represented as Sphere(1); Em1(p, r) is K(Z/p^r, 1).
class SpaceExpr {
    struct Node {
        SpaceKind kind = SpaceKind::point;
        int n = 0;        // sphere dim / moore bottom dim
        Int p = 0;        // em1 prime
        int r = 0;        // em1 exponent
        FgAbGroup group;  // moore coefficient group (cyclic)
        std::vector<SpaceExpr> kids;
    };
    std::shared_ptr<const Node> node_;
    explicit SpaceExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

public:
    SpaceExpr() : SpaceExpr(Node{}) {}

    static SpaceExpr point() { return SpaceExpr(Node{}); }
    static SpaceExpr sphere(int n) {
        if (n < 1) throw std::invalid_argument("sphere: dimension must be >= 1");
        Node nd;
        nd.kind = SpaceKind::sphere;
        nd.n = n;
        return SpaceExpr(std::move(nd));
    }
    static SpaceExpr circle() { return sphere(1); }
    static SpaceExpr em1(const Int& p, int r) {
        if (!detail::is_prime(p) || r < 1)
            throw std::invalid_argument("em1: need a prime power p^r");
        Node nd;
        nd.kind = SpaceKind::em1;
        nd.p = p;
        nd.r = r;
        return SpaceExpr(std::move(nd));
    }
    // Moore space M(G, n), G cyclic. n = 1 only arises as the input side of
    // the Moore smash rewrite.
    static SpaceExpr moore(const FgAbGroup& g, int n) {
        if (!g.is_cyclic() || g.is_trivial())
            throw std::invalid_argument("moore: coefficient group must be nontrivial cyclic");
        if (n < 1) throw std::invalid_argument("moore: dimension must be >= 1");
        Node nd;
        nd.kind = SpaceKind::moore;
        nd.n = n;
        nd.group = g;
        return SpaceExpr(std::move(nd));
    }
    static SpaceExpr susp(const SpaceExpr& x) {
        Node nd;
        nd.kind = SpaceKind::susp;
        nd.kids = {x};
        return SpaceExpr(std::move(nd));
    }
    static SpaceExpr susp_pow(SpaceExpr x, int k) {
        for (int i = 0; i < k; ++i) x = susp(x);
        return x;
    }
    static SpaceExpr smash(std::vector<SpaceExpr> kids) {
        Node nd;
        nd.kind = SpaceKind::smash;
        nd.kids = std::move(kids);
        return SpaceExpr(std::move(nd));
    }
    static SpaceExpr smash(const SpaceExpr& a, const SpaceExpr& b) { return smash(std::vector<SpaceExpr>{a, b}); }
    static SpaceExpr wedge(std::vector<SpaceExpr> kids) {
        Node nd;
        nd.kind = SpaceKind::wedge;
        nd.kids = std::move(kids);
        return SpaceExpr(std::move(nd));
    }
    static SpaceExpr product(std::vector<SpaceExpr> kids) {
        Node nd;
        nd.kind = SpaceKind::product;
        nd.kids = std::move(kids);
        return SpaceExpr(std::move(nd));
    }

    SpaceKind kind() const { return node_->kind; }
    int dim() const { return node_->n; }
    const Int& prime() const { return node_->p; }
    int exponent() const { return node_->r; }
    const FgAbGroup& group() const { return node_->group; }
    const std::vector<SpaceExpr>& kids() const { return node_->kids; }
    const void* id() const { return node_.get(); }

    std::string to_text() const {
        switch (kind()) {
            case SpaceKind::point: return "*";
            case SpaceKind::sphere: return "S^" + std::to_string(dim());
            case SpaceKind::em1: {
                Int q = 1;
                for (int i = 0; i < exponent(); ++i) q *= prime();
                return "K(Z/" + q.str() + ",1)";
            }
            case SpaceKind::moore:
                return "M(" + group().to_text() + "," + std::to_string(dim()) + ")";
            case SpaceKind::susp: {
                // count the suspension stack
                int k = 1;
                SpaceExpr base = kids()[0];
                while (base.kind() == SpaceKind::susp) {
                    ++k;
                    base = base.kids()[0];
                }
                return (k == 1 ? "Sigma " : "Sigma^" + std::to_string(k) + " ") + base.to_text();
            }
            case SpaceKind::smash: return join(" ^ ");
            case SpaceKind::wedge: return join(" v ");
            case SpaceKind::product: return join(" x ");
        }
        return "?";
    }

private:
    std::string join(const std::string& sep) const {
        std::string s;
        for (std::size_t i = 0; i < kids().size(); ++i) {
            if (i) s += sep;
            bool paren = kids()[i].kids().size() > 1 || kids()[i].kind() == SpaceKind::susp;
            s += paren ? "(" + kids()[i].to_text() + ")" : kids()[i].to_text();
        }
        return s;
    }
};

// canonical term order
inline int space_compare(const SpaceExpr& a, const SpaceExpr& b) {
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    auto cmp_int = [](const auto& x, const auto& y) { return x < y ? -1 : (y < x ? 1 : 0); };
    switch (a.kind()) {
        case SpaceKind::point: return 0;
        case SpaceKind::sphere: return cmp_int(a.dim(), b.dim());
        case SpaceKind::em1:
            if (int c = cmp_int(a.prime(), b.prime())) return c;
            return cmp_int(a.exponent(), b.exponent());
        case SpaceKind::moore:
            if (int c = cmp_int(a.dim(), b.dim())) return c;
            return cmp_int(a.group(), b.group());
        default: {
            if (int c = cmp_int(a.kids().size(), b.kids().size())) return c;
            for (std::size_t i = 0; i < a.kids().size(); ++i)
                if (int c = space_compare(a.kids()[i], b.kids()[i])) return c;
            return 0;
        }
    }
}

inline bool space_equal(const SpaceExpr& a, const SpaceExpr& b) { return space_compare(a, b) == 0; }

// Flatten smash/wedge/product, sort by the canonical order, apply the point
// rules, fold sphere coordinates into suspensions.
inline SpaceExpr normalize(const SpaceExpr& x) {
    using K = SpaceKind;
    switch (x.kind()) {
        case K::point:
        case K::sphere:
        case K::em1:
        case K::moore:
            return x;
        case K::susp: {
            SpaceExpr c = normalize(x.kids()[0]);
            if (c.kind() == K::point) return SpaceExpr::point();
            if (c.kind() == K::sphere) return SpaceExpr::sphere(c.dim() + 1);
            if (c.kind() == K::moore) return SpaceExpr::moore(c.group(), c.dim() + 1);
            if (c.kind() == K::wedge) {
                std::vector<SpaceExpr> parts;
                for (const auto& k : c.kids()) parts.push_back(SpaceExpr::susp(k));
                return normalize(SpaceExpr::wedge(std::move(parts)));
            }
            return SpaceExpr::susp(c);
        }
        case K::smash: {
            int susps = 0;
            std::vector<SpaceExpr> factors;
            bool dead = false;
            auto absorb = [&](auto&& self, const SpaceExpr& y) -> void {
                SpaceExpr c = normalize(y);
                if (c.kind() == K::point) { dead = true; return; }
                if (c.kind() == K::sphere) { susps += c.dim(); return; }
                if (c.kind() == K::susp) {
                    ++susps;
                    self(self, c.kids()[0]);
                    return;
                }
                if (c.kind() == K::smash) {
                    for (const auto& k : c.kids()) self(self, k);
                    return;
                }
                factors.push_back(c);
            };
            for (const auto& k : x.kids()) absorb(absorb, k);
            if (dead) return SpaceExpr::point();
            std::sort(factors.begin(), factors.end(),
                      [](const SpaceExpr& a, const SpaceExpr& b) { return space_compare(a, b) < 0; });
            SpaceExpr core = factors.empty()
                                 ? (susps >= 1 ? SpaceExpr::sphere(std::exchange(susps, 0)) : SpaceExpr::point())
                                 : (factors.size() == 1 ? factors[0] : SpaceExpr::smash(std::move(factors)));
            // reapply the suspension rules so Moore dimensions and wedges fold
            for (int i = 0; i < susps; ++i) core = normalize(SpaceExpr::susp(core));
            return core;
        }
        case K::wedge: {
            std::vector<SpaceExpr> parts;
            auto absorb = [&](auto&& self, const SpaceExpr& y) -> void {
                SpaceExpr c = normalize(y);
                if (c.kind() == K::point) return;
                if (c.kind() == K::wedge) {
                    for (const auto& k : c.kids()) self(self, k);
                    return;
                }
                parts.push_back(c);
            };
            for (const auto& k : x.kids()) absorb(absorb, k);
            if (parts.empty()) return SpaceExpr::point();
            if (parts.size() == 1) return parts[0];
            std::sort(parts.begin(), parts.end(),
                      [](const SpaceExpr& a, const SpaceExpr& b) { return space_compare(a, b) < 0; });
            return SpaceExpr::wedge(std::move(parts));
        }
        case K::product: {
            std::vector<SpaceExpr> parts;
            auto absorb = [&](auto&& self, const SpaceExpr& y) -> void {
                SpaceExpr c = normalize(y);
                if (c.kind() == K::point) return;  // * x X = X for pointed spaces
                if (c.kind() == K::product) {
                    for (const auto& k : c.kids()) self(self, k);
                    return;
                }
                parts.push_back(c);
            };
            for (const auto& k : x.kids()) absorb(absorb, k);
            if (parts.empty()) return SpaceExpr::point();
            if (parts.size() == 1) return parts[0];
            std::sort(parts.begin(), parts.end(),
                      [](const SpaceExpr& a, const SpaceExpr& b) { return space_compare(a, b) < 0; });
            return SpaceExpr::product(std::move(parts));
        }
    }
    return x;
}

inline int connectivity(const SpaceExpr& x) {
    constexpr int contractible = 1 << 20;
    switch (x.kind()) {
        case SpaceKind::point: return contractible;
        case SpaceKind::sphere: return x.dim() - 1;
        case SpaceKind::moore: return x.dim() - 1;
        case SpaceKind::em1: return 0;
        case SpaceKind::susp: return std::min(connectivity(x.kids()[0]) + 1, contractible);
        case SpaceKind::smash: {
            int c = 1 - static_cast<int>(x.kids().size());
            for (const auto& k : x.kids()) c += connectivity(k) + 1;
            return std::min(c, contractible);
        }
        case SpaceKind::wedge:
        case SpaceKind::product: {
            int c = contractible;
            for (const auto& k : x.kids()) c = std::min(c, connectivity(k));
            return c;
        }
    }
    return 0;
}

// K(A,1) as a product of circles and K(Z/p^r,1) leaves, primes ascending,
// exponents ascending.
inline SpaceExpr k_space(const FgAbGroup& a) {
    std::vector<SpaceExpr> parts;
    for (int i = 0; i < a.free_rank; ++i) parts.push_back(SpaceExpr::circle());
    for (auto& [p, es] : primary_decomposition(a))
        for (int e : es) parts.push_back(SpaceExpr::em1(p, e));
    if (parts.empty()) return SpaceExpr::point();
    if (parts.size() == 1) return parts[0];
    return SpaceExpr::product(std::move(parts));
}

// ---------------------------------------------------------------------------
// Suspension splitting
// ---------------------------------------------------------------------------

namespace detail {

// Wedge summands of the expression once it sits under a single suspension:
// products are replaced by wedges of the smashes of their nonempty factor
// subsets, and smash distributes over wedge.
inline std::vector<SpaceExpr> suspension_wedge_terms(const SpaceExpr& x) {
    using K = SpaceKind;
    switch (x.kind()) {
        case K::wedge: {
            std::vector<SpaceExpr> out;
            for (const auto& k : x.kids())
                for (auto& t : suspension_wedge_terms(k)) out.push_back(std::move(t));
            return out;
        }
        case K::smash: {
            std::vector<std::vector<SpaceExpr>> choices;
            for (const auto& k : x.kids()) choices.push_back(suspension_wedge_terms(k));
            std::vector<SpaceExpr> out;
            std::vector<SpaceExpr> pick;
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == choices.size()) {
                    out.push_back(SpaceExpr::smash(pick));
                    return;
                }
                for (const auto& c : choices[i]) {
                    pick.push_back(c);
                    self(self, i + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
            return out;
        }
        case K::product: {
            // nonempty subsets of factors, each factor expanded recursively
            std::vector<std::vector<SpaceExpr>> choices;
            for (const auto& k : x.kids()) choices.push_back(suspension_wedge_terms(k));
            std::vector<SpaceExpr> out;
            std::vector<SpaceExpr> pick;
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == choices.size()) {
                    if (!pick.empty())
                        out.push_back(pick.size() == 1 ? pick[0] : SpaceExpr::smash(pick));
                    return;
                }
                self(self, i + 1);  // factor skipped
                for (const auto& c : choices[i]) {
                    pick.push_back(c);
                    self(self, i + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
            return out;
        }
        case K::susp: {
            std::vector<SpaceExpr> out;
            for (auto& t : suspension_wedge_terms(x.kids()[0]))
                out.push_back(SpaceExpr::susp(t));
            return out;
        }
        default:
            return {x};
    }
}

}  // namespace detail

// Sigma(X1 x ... x Xk) -> wedge of Sigma(smash of S) over nonempty subsets S.
inline SpaceExpr suspend_product(const SpaceExpr& x) {
    if (x.kind() != SpaceKind::susp || x.kids()[0].kind() != SpaceKind::product)
        throw std::invalid_argument("suspend_product: input must be Susp(Product(...))");
    std::vector<SpaceExpr> parts;
    for (auto& t : detail::suspension_wedge_terms(x.kids()[0]))
        parts.push_back(SpaceExpr::susp(t));
    return normalize(SpaceExpr::wedge(std::move(parts)));
}

// ---------------------------------------------------------------------------
// Normalized smash atoms Sigma^m K(Z/p^{r_1},1) ^ ... ^ K(Z/p^{r_t},1)
// ---------------------------------------------------------------------------

struct SmashForm {
    int m = 1;                   // suspensions, >= 1
    Int prime = 0;               // 0 iff pure sphere
    std::vector<int> exponents;  // ascending, one per K factor

    static SmashForm make(int m, Int prime, std::vector<int> exps) {
        std::sort(exps.begin(), exps.end());
        SmashForm f{m, std::move(prime), std::move(exps)};
        if (f.m < 1) throw std::invalid_argument("SmashForm: suspension count must be >= 1");
        if (f.exponents.empty() != (f.prime == 0))
            throw std::invalid_argument("SmashForm: prime set iff K factors present");
        for (int e : f.exponents)
            if (e < 1) throw std::invalid_argument("SmashForm: exponents must be >= 1");
        return f;
    }
    static SmashForm sphere_form(int m) { return make(m, 0, {}); }

    bool is_sphere() const { return exponents.empty(); }
    int factors() const { return static_cast<int>(exponents.size()); }
    int bottom_dim() const { return m + factors(); }
    int conn() const { return bottom_dim() - 1; }

    bool operator==(const SmashForm&) const = default;
    bool operator<(const SmashForm& o) const {
        if (m != o.m) return m < o.m;
        if (prime != o.prime) return prime < o.prime;
        return exponents < o.exponents;
    }

    SpaceExpr to_space() const {
        if (is_sphere()) return SpaceExpr::sphere(m);
        std::vector<SpaceExpr> ks;
        for (int e : exponents) ks.push_back(SpaceExpr::em1(prime, e));
        SpaceExpr base = ks.size() == 1 ? ks[0] : SpaceExpr::smash(std::move(ks));
        return SpaceExpr::susp_pow(base, m);
    }

    std::string to_text() const {
        if (is_sphere()) return "S^" + std::to_string(m);
        std::string s = m == 1 ? "Sigma" : "Sigma^" + std::to_string(m);
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            Int q = 1;
            for (int e = 0; e < exponents[i]; ++e) q *= prime;
            s += std::string(i ? " ^ " : " ") + "K(Z/" + q.str() + ",1)";
        }
        return s;
    }
};

using FormMultiset = std::map<SmashForm, long long>;

enum class FormClass { form, contractible, not_a_form };

// Classify a normalized expression as a smash form, a contractible
// cross-prime smash, or something outside the grammar.
inline FormClass classify_form(const SpaceExpr& x, SmashForm& out) {
    int m = 0;
    SpaceExpr cur = x;
    while (cur.kind() == SpaceKind::susp) {
        ++m;
        cur = cur.kids()[0];
    }
    switch (cur.kind()) {
        case SpaceKind::point:
            return FormClass::contractible;
        case SpaceKind::sphere:
            if (m != 0) return FormClass::not_a_form;  // normalize folds these
            out = SmashForm::sphere_form(cur.dim());
            return FormClass::form;
        case SpaceKind::em1:
            if (m < 1) return FormClass::not_a_form;
            out = SmashForm::make(m, cur.prime(), {cur.exponent()});
            return FormClass::form;
        case SpaceKind::smash: {
            Int p = 0;
            std::vector<int> exps;
            for (const auto& k : cur.kids()) {
                if (k.kind() != SpaceKind::em1) return FormClass::not_a_form;
                if (p == 0) p = k.prime();
                else if (p != k.prime()) return FormClass::contractible;
                exps.push_back(k.exponent());
            }
            if (m < 1) return FormClass::not_a_form;
            out = SmashForm::make(m, p, std::move(exps));
            return FormClass::form;
        }
        default:
            return FormClass::not_a_form;
    }
}

// Sigma K(A,1)^K(A,1) as a wedge of smash forms with multiplicities.
inline FormMultiset expand_sigma_k_smash(const FgAbGroup& a) {
    FormMultiset out;
    if (a.is_trivial()) return out;
    SpaceExpr k = k_space(a);
    for (const auto& term : detail::suspension_wedge_terms(SpaceExpr::smash(k, k))) {
        SpaceExpr form_expr = normalize(SpaceExpr::susp(term));
        SmashForm f;
        switch (classify_form(form_expr, f)) {
            case FormClass::form: ++out[f]; break;
            case FormClass::contractible: break;
            case FormClass::not_a_form:
                throw std::logic_error("expand_sigma_k_smash: unexpected term " + form_expr.to_text());
        }
    }
    return out;
}

// Sigma^{1+extra} M(Z/p^r,1) ^ M(Z/q^s,1), rewritten when the decomposition
// applies: a point for different primes, M(min,3) v M(min,4) (shifted) when
// max{p^r, q^s} > 2, the input itself when both sides are M(Z/2,1).
inline SpaceExpr moore_smash(const Int& p, int r, const Int& q, int s, int extra = 0) {
    if (!detail::is_prime(p) || !detail::is_prime(q) || r < 1 || s < 1)
        throw std::invalid_argument("moore_smash: need prime powers p^r, q^s");
    if (p != q) return SpaceExpr::point();
    Int pr = 1, qs = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    for (int i = 0; i < s; ++i) qs *= q;
    if (pr == 2 && qs == 2)
        return normalize(SpaceExpr::susp_pow(
            SpaceExpr::smash(SpaceExpr::moore(FgAbGroup::cyclic(2), 1),
                             SpaceExpr::moore(FgAbGroup::cyclic(2), 1)),
            1 + extra));
    Int mn = min(pr, qs);
    return normalize(SpaceExpr::wedge({SpaceExpr::moore(FgAbGroup::cyclic(mn), 3 + extra),
                                       SpaceExpr::moore(FgAbGroup::cyclic(mn), 4 + extra)}));
}

// ---------------------------------------------------------------------------
// Hilton-Milnor bookkeeping for pi_n of a wedge of suspensions: iterate the
// two-factor rule pi_n(Sigma X v Sigma W) = pi_n(Sigma X) + pi_n(Sigma W) +
// pi_n(v_{i,j>=1} Sigma X^i ^ W^j) in canonical order, dropping every term
// whose connectivity reaches n.
// ---------------------------------------------------------------------------

namespace detail {

// smash of desuspended copies, resuspended once: i copies of X plus the tuple
inline std::optional<SmashForm> cross_form(const SmashForm& x, int i,
                                           const std::vector<const SmashForm*>& tuple) {
    int m = 1 + i * (x.m - 1);
    Int p = x.prime;
    std::vector<int> exps;
    for (int c = 0; c < i; ++c) exps.insert(exps.end(), x.exponents.begin(), x.exponents.end());
    for (const SmashForm* t : tuple) {
        m += t->m - 1;
        if (t->prime != 0) {
            if (p == 0) p = t->prime;
            else if (p != t->prime) return std::nullopt;  // cross-prime smash dies
            exps.insert(exps.end(), t->exponents.begin(), t->exponents.end());
        }
    }
    Int prime = exps.empty() ? Int(0) : p;
    return SmashForm::make(m, std::move(prime), std::move(exps));
}

inline void hilton_milnor_process(std::vector<SmashForm> list, int n, FormMultiset& out) {
    std::sort(list.begin(), list.end());
    while (!list.empty()) {
        SmashForm y = list.front();
        list.erase(list.begin());
        if (y.conn() < n) ++out[y];
        if (list.empty()) break;

        int min_rest = list.front().bottom_dim() - 1;
        for (const auto& z : list) min_rest = std::min(min_rest, z.bottom_dim() - 1);

        std::vector<SmashForm> cross;
        for (int i = 1; 1 + i * (y.bottom_dim() - 1) + min_rest <= n; ++i) {
            const int base = 1 + i * (y.bottom_dim() - 1);
            std::vector<const SmashForm*> tuple;
            auto rec = [&](auto&& self, int acc) -> void {
                for (const auto& z : list) {
                    int nb = acc + z.bottom_dim() - 1;
                    if (base + nb > n) continue;
                    tuple.push_back(&z);
                    if (auto f = cross_form(y, i, tuple)) cross.push_back(*f);
                    self(self, nb);
                    tuple.pop_back();
                }
            };
            rec(rec, 0);
        }
        if (!cross.empty()) hilton_milnor_process(std::move(cross), n, out);
    }
}

}  // namespace detail

inline FormMultiset hilton_milnor_pi(const FormMultiset& wedge, int n) {
    if (n > 5) throw std::invalid_argument("hilton_milnor_pi: target degree must be <= 5");
    std::vector<SmashForm> list;
    for (auto& [f, mult] : wedge) {
        if (f.m < 1 || f.bottom_dim() < 2)
            throw std::invalid_argument("hilton_milnor_pi: summand " + f.to_text() +
                                        " is not a simply connected suspension");
        for (long long c = 0; c < mult; ++c) list.push_back(f);
    }
    FormMultiset out;
    detail::hilton_milnor_process(std::move(list), n, out);
    return out;
}

// ordered-input variant used by the permutation-invariance check
inline FormMultiset hilton_milnor_pi_ordered(std::vector<SmashForm> list, int n) {
    if (n > 5) throw std::invalid_argument("hilton_milnor_pi: target degree must be <= 5");
    for (const auto& f : list)
        if (f.m < 1 || f.bottom_dim() < 2)
            throw std::invalid_argument("hilton_milnor_pi: summand " + f.to_text() +
                                        " is not a simply connected suspension");
    FormMultiset out;
    detail::hilton_milnor_process(std::move(list), n, out);
    return out;
}

}  // namespace suspcalc
