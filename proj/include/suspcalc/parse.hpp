#pragma once

#include "suspcalc/homotopy.hpp"

#include <cctype>
#include <string>

namespace suspcalc {

struct ParseError : std::invalid_argument {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : std::invalid_argument(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

namespace detail {

// cursor over a string with the whitespace already stripped; `at` maps back
// to positions in the original text
struct Cursor {
    std::string s;
    std::vector<std::size_t> at;
    std::size_t i = 0;

    explicit Cursor(const std::string& raw) {
        for (std::size_t k = 0; k < raw.size(); ++k)
            if (!std::isspace(static_cast<unsigned char>(raw[k]))) {
                s.push_back(raw[k]);
                at.push_back(k);
            }
    }

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    std::size_t pos() const { return i < at.size() ? at[i] : (at.empty() ? 0 : at.back() + 1); }

    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }

    bool eat_word(const std::string& w) {
        if (s.compare(i, w.size(), w) != 0) return false;
        i += w.size();
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!eat(c)) throw ParseError("expected '" + std::string(1, c) + "' " + what, pos());
    }

    Int integer(const std::string& what) {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected " + what, pos());
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }
};

}  // namespace detail

// Grammar: `Z`, `Z/n` (n >= 2), `+` for direct sums, `^k` for repetition.
inline FgAbGroup parse_group(const std::string& text) {
    detail::Cursor c(text);
    if (c.done()) throw ParseError("empty group expression", 0);
    if (c.s == "0") return FgAbGroup::zero();
    std::vector<Int> orders;
    for (;;) {
        if (!c.eat('Z')) throw ParseError("expected 'Z'", c.pos());
        Int n = 0;
        if (c.eat('/')) {
            std::size_t npos = c.pos();
            n = c.integer("a modulus after 'Z/'");
            if (n < 2) throw ParseError("modulus must be >= 2", npos);
        }
        Int k = 1;
        if (c.eat('^')) {
            std::size_t kpos = c.pos();
            k = c.integer("an exponent after '^'");
            if (k < 1) throw ParseError("exponent must be >= 1", kpos);
        }
        for (Int t = 0; t < k; ++t) orders.push_back(n);
        if (c.done()) break;
        c.expect('+', "between summands");
    }
    return group_of_cyclic_orders(orders);
}

// Parsed space target for the pi/homology verbs.
struct SpaceTarget {
    enum class Kind { sigma_k, moore, sphere, registry };
    Kind kind = Kind::sphere;
    int susp = 0;     // sigma_k: suspension count m >= 1
    FgAbGroup group;  // sigma_k: A; moore: cyclic coefficient group
    int dim = 0;      // sphere: n; moore: bottom dimension (Sigma^m folded in)
    RegistryTarget reg = RegistryTarget::rp(1);
};

// Grammar: `S^n`, `Sigma^m K(G,1)`, `Sigma^m M(G,n)`, `M(G,n)`, `RP^n`,
// `RP^inf`, `Sigma3`, `A4`, `SL(Z)`.
inline SpaceTarget parse_space(const std::string& text) {
    detail::Cursor c(text);
    SpaceTarget t;
    if (c.done()) throw ParseError("empty space expression", 0);

    if (c.eat_word("RP^")) {
        if (c.eat_word("inf")) {
            t.kind = SpaceTarget::Kind::registry;
            t.reg = RegistryTarget::rp_inf();
        } else {
            std::size_t p = c.pos();
            Int n = c.integer("a dimension or 'inf' after 'RP^'");
            if (n < 1) throw ParseError("projective space dimension must be >= 1", p);
            t.kind = SpaceTarget::Kind::registry;
            t.reg = RegistryTarget::rp(static_cast<int>(n));
        }
        if (!c.done()) throw ParseError("trailing input after space", c.pos());
        return t;
    }
    if (c.eat_word("SL(Z)")) {
        t.kind = SpaceTarget::Kind::registry;
        t.reg = RegistryTarget::slz();
        if (!c.done()) throw ParseError("trailing input after space", c.pos());
        return t;
    }
    if (c.eat_word("A4")) {
        t.kind = SpaceTarget::Kind::registry;
        t.reg = RegistryTarget::a4();
        if (!c.done()) throw ParseError("trailing input after space", c.pos());
        return t;
    }
    if (c.eat_word("S^")) {
        std::size_t p = c.pos();
        Int n = c.integer("a dimension after 'S^'");
        if (n < 1) throw ParseError("sphere dimension must be >= 1", p);
        t.kind = SpaceTarget::Kind::sphere;
        t.dim = static_cast<int>(n);
        if (!c.done()) throw ParseError("trailing input after space", c.pos());
        return t;
    }

    int m = 0;
    if (c.eat_word("Sigma")) {
        if (c.eat('3') && (c.done())) {  // the symmetric group name
            t.kind = SpaceTarget::Kind::registry;
            t.reg = RegistryTarget::sigma3();
            return t;
        }
        if (c.eat('^')) {
            std::size_t p = c.pos();
            Int k = c.integer("a suspension count after 'Sigma^'");
            if (k < 1) throw ParseError("suspension count must be >= 1", p);
            m = static_cast<int>(k);
        } else {
            m = 1;
        }
    }

    if (c.eat_word("K(")) {
        std::size_t start = c.i;
        int depth = 1;
        while (!c.done() && depth > 0) {
            if (c.peek() == '(') ++depth;
            if (c.peek() == ')') --depth;
            if (depth > 0) ++c.i;
        }
        std::string inner = c.s.substr(start, c.i - start);
        c.expect(')', "closing K(...)");
        auto comma = inner.rfind(",1");
        if (comma == std::string::npos || comma + 2 != inner.size())
            throw ParseError("only K(G,1) layers are supported", c.pos());
        if (m < 1) throw ParseError("K(G,1) must sit under at least one suspension", 0);
        t.kind = SpaceTarget::Kind::sigma_k;
        t.susp = m;
        t.group = parse_group(inner.substr(0, comma));
        if (!c.done()) throw ParseError("trailing input after space", c.pos());
        return t;
    }
    if (c.eat_word("M(")) {
        std::size_t start = c.i;
        int depth = 1;
        while (!c.done() && depth > 0) {
            if (c.peek() == '(') ++depth;
            if (c.peek() == ')') --depth;
            if (depth > 0) ++c.i;
        }
        std::string inner = c.s.substr(start, c.i - start);
        c.expect(')', "closing M(...)");
        auto comma = inner.rfind(',');
        if (comma == std::string::npos)
            throw ParseError("Moore space needs M(G,n)", c.pos());
        FgAbGroup g = parse_group(inner.substr(0, comma));
        std::string dim_text = inner.substr(comma + 1);
        detail::Cursor dc(dim_text);
        Int n = dc.integer("a dimension in M(G,n)");
        if (!dc.done()) throw ParseError("malformed Moore dimension", c.pos());
        if (n < 2) throw ParseError("Moore spaces start in dimension 2", c.pos());
        if (!g.is_cyclic() || g.is_trivial())
            throw ParseError("Moore coefficient group must be nontrivial cyclic", 0);
        t.kind = SpaceTarget::Kind::moore;
        t.group = g;
        t.dim = static_cast<int>(n) + m;  // Sigma^m M(G,n) = M(G,n+m)
        if (!c.done()) throw ParseError("trailing input after space", c.pos());
        return t;
    }
    throw ParseError("unrecognised space expression", c.pos());
}

}  // namespace suspcalc
