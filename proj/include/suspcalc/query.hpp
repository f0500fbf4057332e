#pragma once

#include "suspcalc/parse.hpp"
#include "suspcalc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace suspcalc {

using Json = nlohmann::ordered_json;

struct QueryResult {
    int code = 0;
    std::string text;
};

inline const std::map<std::string, std::string>& citation_table() {
    static const std::map<std::string, std::string> t = {
        {"sphere_table", "low-degree homotopy groups of spheres"},
        {"connectivity_vanishing", "the space is too connected to carry this degree"},
        {"pi2/hurewicz", "bottom-degree Hurewicz isomorphism"},
        {"pi3/tensor_square", "degree 3 of a suspended classifying space is the tensor square"},
        {"pi3/suspension_hurewicz", "bottom-degree Hurewicz isomorphism after double suspension"},
        {"pi4/primary_closed_form",
         "closed form over the primary decomposition; the elementary 2-part carries the extension"},
        {"pi4/pipeline", "suspension splitting plus wedge bookkeeping, summed over smash atoms"},
        {"pi4/sphere_table", "low-degree homotopy groups of spheres"},
        {"pi4/connectivity_vanishing", "the atom is too connected to carry degree 4"},
        {"pi4/bottom_hurewicz", "bottom-degree Hurewicz isomorphism of the atom"},
        {"pi4/double_suspension_antisym_square",
         "degree 4 of a double suspension is the antisymmetric square"},
        {"pi4/antisym_square", "degree 4 of a double suspension is the antisymmetric square"},
        {"pi4/smash_pair_2primary", "degree 4 of a suspended 2-primary smash pair"},
        {"pi4/odd_homology_rule",
         "odd-primary atoms split into Moore spaces through the 6-skeleton; pi equals homology"},
        {"pi5/hilton_milnor_sum", "iterated two-factor wedge expansion of the smash square"},
        {"pi5/sphere_table", "low-degree homotopy groups of spheres"},
        {"pi5/connectivity_vanishing", "the atom is too connected to carry degree 5"},
        {"pi5/bottom_moore_class", "stable bottom Moore class at total dimension 5"},
        {"pi5/triple_suspension_cyclic2", "degree 5 of the triple suspension of one 2-primary layer"},
        {"pi5/double_suspension_pair", "degree 5 of the double suspension of a 2-primary smash pair"},
        {"pi5/triple_smash", "degree 5 of a suspended 2-primary triple smash"},
        {"pi5/double_suspension_cyclic2", "degree 5 of the double suspension of one 2-primary layer"},
        {"pi5/smash_pair_equal_exponents", "degree 5 of a suspended smash pair with equal exponents"},
        {"pi5/smash_pair_mixed_exponents", "degree 5 of a suspended smash pair with distinct exponents"},
        {"pi5/odd_homology_rule",
         "odd-primary atoms split into Moore spaces through the 6-skeleton; pi equals homology"},
        {"moore/pi3_gamma2", "degree 3 of a Moore space is the universal quadratic functor value"},
        {"moore/pi4_2primary", "degree 4 of a 2-primary Moore space with bottom cell in dimension 2"},
        {"moore/pi4_odd_vanishing", "degree 4 of an odd Moore space with bottom cell in dimension 2"},
        {"moore/pi5_2primary_table", "degree 5 of 2-primary Moore spaces by bottom dimension"},
        {"registry/rp_sphere", "the suspended projective line is the 2-sphere"},
        {"registry/rp_pi4", "fixed table for suspended real projective spaces, degree 4"},
        {"registry/rp_pi5", "fixed table for suspended real projective spaces, degree 5"},
        {"registry/sym3", "fixed values for the suspended classifying space of the symmetric group on 3 letters"},
        {"registry/alt4", "fixed values for the suspended classifying space of the alternating group on 4 letters"},
        {"registry/special_linear",
         "fixed values for the suspended classifying space of SL(Z), via the plus construction"},
    };
    return t;
}

namespace detail {

inline std::vector<std::string> citations_for(const std::vector<std::string>& rules) {
    std::vector<std::string> out;
    for (const auto& r : rules) {
        auto it = citation_table().find(r);
        out.push_back(it == citation_table().end() ? r : it->second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Json group_json(const FgAbGroup& g) {
    Json torsion = Json::array();
    for (const Int& d : g.torsion) torsion.push_back(d.convert_to<long long>());
    return Json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string pi_text(const PiResult& r) {
    std::string s = r.group.to_text() + "\n";
    s += "rules: " + join(r.rules, ", ") + "\n";
    if (!r.notes.empty()) s += "flags: " + join(r.notes, ", ") + "\n";
    return s;
}

inline Json pi_json(const Json& query, const PiResult& r) {
    Json j;
    j["query"] = query;
    j["group"] = group_json(r.group);
    j["rules"] = r.rules;
    j["flags"] = r.notes;
    j["citations"] = citations_for(r.rules);
    return j;
}

// pi dispatch over a parsed space target
inline PiResult dispatch_pi(const SpaceTarget& t, int n) {
    switch (t.kind) {
        case SpaceTarget::Kind::sphere:
            return PiResult::of(pi_sphere(t.dim, n), n, "sphere_table");
        case SpaceTarget::Kind::registry:
            return registry(t.reg, n);
        case SpaceTarget::Kind::sigma_k: {
            if (t.susp == 1) return pi_sigma_k(t.group, n);
            if (t.susp == 2) {
                if (n == 3 || n == 4) return pi_sigma2_k(t.group, n);
                if (n == 5) return pi5_sigma2(t.group);
                throw degree_error("pi_" + std::to_string(n) + " of a double suspension is out of range",
                                   "n in {3,4}, n=5 for Z and cyclic 2-groups");
            }
            // m >= 3: a single smash atom, so the layer must be a prime power
            if (t.group == FgAbGroup::free_group(1))
                return PiResult::of(pi_sphere(t.susp + 1, n), n, "sphere_table");
            auto parts = primary_decomposition(t.group);
            if (!t.group.is_cyclic() || !t.group.is_finite() || parts.size() != 1 ||
                parts.begin()->second.size() != 1)
                throw std::invalid_argument(
                    "Sigma^m K(A,1) with m >= 3 is supported for prime-power cyclic A and Z only");
            SmashForm f = SmashForm::make(t.susp, parts.begin()->first,
                                          {parts.begin()->second.front()});
            if (n == 4) return pi4_form(f);
            if (n == 5) return pi5_form(f);
            if (n >= 2 && n < f.bottom_dim())
                return PiResult::of(FgAbGroup::zero(), n, "connectivity_vanishing");
            throw degree_error("pi_" + std::to_string(n) + " of this suspension is out of range",
                               "n in {2,3,4,5}");
        }
        case SpaceTarget::Kind::moore: {
            const int d = t.dim;
            if (t.group.free_rank == 1)  // M(Z,d) = S^d
                return PiResult::of(pi_sphere(d, n), n, "sphere_table");
            if (n > 5 || n < 2)
                throw degree_error("pi_" + std::to_string(n) + " of a Moore space is out of range",
                                   "n in {2,3,4,5}");
            if (n < d) return PiResult::of(FgAbGroup::zero(), n, "connectivity_vanishing");
            if (n == d) return PiResult::of(t.group, n, "pi2/hurewicz");
            auto parts = primary_decomposition(t.group);
            if (parts.size() != 1 || parts.begin()->second.size() != 1)
                throw std::invalid_argument(
                    "Moore tables cover prime-power coefficients; split " + t.group.to_text() +
                    " into its primary summands first");
            const Int p = parts.begin()->first;
            const int r = parts.begin()->second.front();
            if (d == 2 && (n == 3 || n == 4)) return pi_moore2(p, r, n);
            if (n == 5 && p == 2 && d >= 3 && d <= 6)
                return PiResult::of(pi5_moore_2primary(r, d), 5, "moore/pi5_2primary_table");
            throw std::invalid_argument(
                "pi_" + std::to_string(n) + "(M(" + t.group.to_text() + "," + std::to_string(d) +
                ")) is not tabulated; supported: n in {2,3,4} for bottom dimension 2, n=5 for "
                "2-primary bottom dimensions 3..6");
        }
    }
    throw std::logic_error("dispatch_pi: unhandled target");
}

inline SpaceExpr space_of(const SpaceTarget& t) {
    switch (t.kind) {
        case SpaceTarget::Kind::sphere:
            return SpaceExpr::sphere(t.dim);
        case SpaceTarget::Kind::sigma_k:
            return normalize(SpaceExpr::susp_pow(k_space(t.group), t.susp));
        case SpaceTarget::Kind::moore:
            if (t.group.free_rank == 1) return SpaceExpr::sphere(t.dim);
            return SpaceExpr::moore(t.group, t.dim);
        case SpaceTarget::Kind::registry:
            if (t.reg.kind == RegistryTarget::Kind::rp && t.reg.inf)
                return SpaceExpr::em1(2, 1);
            throw std::invalid_argument("homology of " + t.reg.name() +
                                        " is not supported; only RP^inf among the named spaces");
    }
    throw std::logic_error("space_of: unhandled target");
}

}  // namespace detail

// Parse and execute one query. Exit codes: 0 success, 1 verification failures,
// 2 usage or unsupported input.
inline QueryResult run_query(const std::vector<std::string>& args) {
    CLI::App app{"exact low-degree homotopy of suspended classifying spaces"};
    app.set_version_flag("--version", "suspcalc 0.1.0");
    app.require_subcommand(0, 1);

    std::string space, format = "text", name, mutate;
    std::vector<std::string> groups;
    int n = 0, k = -1;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* pi = app.add_subcommand("pi", "homotopy group of a space");
    pi->add_option("--space", space, "space expression")->required();
    pi->add_option("--n", n, "homotopy degree")->required();
    add_format(pi);

    CLI::App* hom = app.add_subcommand("homology", "reduced integral homology of a space");
    hom->add_option("--space", space, "space expression")->required();
    hom->add_option("--k", k, "homology degree")->required();
    add_format(hom);

    CLI::App* fun = app.add_subcommand("functor", "evaluate a functor on a group");
    fun->add_option("--name", name, "functor name")
        ->required()
        ->check(CLI::IsMember({"gamma2", "lambda2", "lambda3", "tensor", "tor", "tilde_sq", "ls3",
                               "r2", "l1_tilde_sq", "half_square"}));
    fun->add_option("--group", groups, "group expression (twice for binary functors)")->required();
    add_format(fun);

    CLI::App* exp = app.add_subcommand("expand", "wedge expansion of Sigma K(A,1)^K(A,1)");
    exp->add_option("--group", groups, "group expression")->required();
    add_format(exp);

    CLI::App* ver = app.add_subcommand("verify", "run the cross-check battery");
    ver->add_option("--group", groups, "restrict to one group");
    ver->add_option("--mutate", mutate, "corrupt one closed-form rule (self-test)");
    add_format(ver);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::CallForVersion&) {
        return {0, std::string(app.version()) + "\n"};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }

    try {
        if (pi->parsed()) {
            PiResult r = detail::dispatch_pi(parse_space(space), n);
            Json q{{"verb", "pi"}, {"space", space}, {"n", n}};
            return {0, format == "json" ? detail::pi_json(q, r).dump(2) + "\n"
                                        : detail::pi_text(r)};
        }
        if (hom->parsed()) {
            if (k < 0 || k > 12)
                throw degree_error("homology degree " + std::to_string(k) + " is out of range",
                                   "k in 0..12");
            FgAbGroup g = homology_at(detail::space_of(parse_space(space)), k);
            if (format == "json") {
                Json j;
                j["query"] = Json{{"verb", "homology"}, {"space", space}, {"k", k}};
                j["group"] = detail::group_json(g);
                j["rules"] = Json::array();
                j["flags"] = Json::array();
                j["citations"] = Json::array({"reduced cellular homology via the Kunneth rules"});
                return {0, j.dump(2) + "\n"};
            }
            return {0, g.to_text() + "\n"};
        }
        if (fun->parsed()) {
            const bool binary = name == "tensor" || name == "tor";
            if (binary && groups.size() != 2)
                throw std::invalid_argument("functor " + name + " needs --group twice");
            if (!binary && groups.size() != 1)
                throw std::invalid_argument("functor " + name + " needs exactly one --group");
            FgAbGroup a = parse_group(groups[0]);
            FgAbGroup g;
            if (name == "tensor") g = tensor(a, parse_group(groups[1]));
            else if (name == "tor") g = tor(a, parse_group(groups[1]));
            else if (name == "gamma2") g = gamma2(a);
            else if (name == "lambda2") g = lambda2(a);
            else if (name == "lambda3") g = lambda3(a);
            else if (name == "tilde_sq") g = tilde_sq(a);
            else if (name == "ls3") g = ls3(a);
            else if (name == "r2") g = r2(a);
            else if (name == "l1_tilde_sq") g = l1_tilde_sq(a);
            else g = half_square(a);
            if (format == "json") {
                Json j;
                Json q{{"verb", "functor"}, {"name", name}, {"group", groups[0]}};
                if (binary) q["group2"] = groups[1];
                j["query"] = q;
                j["group"] = detail::group_json(g);
                j["rules"] = Json::array({name});
                j["flags"] = Json::array();
                j["citations"] = Json::array({"closed form over the cyclic decomposition"});
                return {0, j.dump(2) + "\n"};
            }
            return {0, g.to_text() + "\n"};
        }
        if (exp->parsed()) {
            if (groups.size() != 1) throw std::invalid_argument("expand needs exactly one --group");
            FormMultiset forms = expand_sigma_k_smash(parse_group(groups[0]));
            if (format == "json") {
                Json arr = Json::array();
                for (auto& [f, mult] : forms) {
                    Json e{{"multiplicity", mult},
                           {"m", f.m},
                           {"prime", f.prime.convert_to<long long>()},
                           {"exponents", f.exponents},
                           {"text", f.to_text()}};
                    arr.push_back(e);
                }
                Json j;
                j["query"] = Json{{"verb", "expand"}, {"group", groups[0]}};
                j["forms"] = arr;
                return {0, j.dump(2) + "\n"};
            }
            std::string s;
            for (auto& [f, mult] : forms)
                s += std::to_string(mult) + " x " + f.to_text() + "\n";
            return {0, s};
        }
        if (ver->parsed()) {
            Mutation mut = Mutation::none;
            if (!mutate.empty()) {
                auto m = parse_mutation(mutate);
                if (!m) {
                    std::string names;
                    for (auto& [nm, mm] : mutation_table()) names += (names.empty() ? "" : ", ") + nm;
                    return {2, "error: unknown mutation '" + mutate + "'; known: " + names + "\n"};
                }
                mut = *m;
            }
            VerifySummary s;
            bool single = groups.size() == 1;
            if (single) {
                s.absorb(verify_group(parse_group(groups[0]), mut));
                s.sort();
            } else {
                s = verify_corpus(mut);
            }
            if (format == "json") {
                Json fails = Json::array();
                for (const auto& r : s.reports)
                    if (r.status != CheckStatus::pass)
                        fails.push_back(Json{{"id", r.id},
                                             {"inputs", r.inputs},
                                             {"expected", r.expected},
                                             {"actual", r.actual},
                                             {"status", r.status == CheckStatus::fail ? "fail" : "flagged"},
                                             {"citation", r.citation}});
                Json j;
                Json q{{"verb", "verify"}};
                if (single) q["group"] = groups[0];
                if (!mutate.empty()) q["mutate"] = mutate;
                j["query"] = q;
                j["summary"] = Json{{"checks", s.passed + s.failed + s.flagged},
                                    {"pass", s.passed},
                                    {"flagged", s.flagged},
                                    {"fail", s.failed}};
                j["reports"] = fails;
                return {s.exit_code(), j.dump(2) + "\n"};
            }
            std::string out;
            for (const auto& r : s.reports)
                if (single || r.status != CheckStatus::pass) out += r.line() + "\n";
            out += s.summary_line() + "\n";
            return {s.exit_code(), out};
        }
        return {0, app.help()};
    } catch (const ParseError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace suspcalc
