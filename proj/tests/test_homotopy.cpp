#include "suspcalc/homotopy.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace suspcalc;

namespace {

FgAbGroup Z(int r = 1) { return FgAbGroup::free_group(r); }
FgAbGroup Zn(long long n) { return FgAbGroup::cyclic(n); }
FgAbGroup sum(std::initializer_list<FgAbGroup> gs) {
    FgAbGroup out;
    for (const auto& g : gs) out = direct_sum(out, g);
    return out;
}
SmashForm form(int m, long long p, std::vector<int> exps) { return SmashForm::make(m, p, std::move(exps)); }

bool has_flag(const PiResult& r, const char* f) {
    return std::find(r.notes.begin(), r.notes.end(), f) != r.notes.end();
}

std::vector<FgAbGroup> corpus(int max_factors, const std::vector<FgAbGroup>& pool) {
    std::vector<FgAbGroup> out = {FgAbGroup::zero()};
    auto rec = [&](auto&& self, std::size_t start, int depth, const FgAbGroup& acc) -> void {
        if (depth == 0) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            FgAbGroup next = direct_sum(acc, pool[i]);
            out.push_back(next);
            self(self, i, depth - 1, next);
        }
    };
    rec(rec, 0, max_factors, FgAbGroup::zero());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("sphere table") {
    REQUIRE(pi_sphere(3, 5) == Zn(2));
    REQUIRE(pi_sphere(4, 5) == Zn(2));
    REQUIRE(pi_sphere(5, 5) == Z());
    REQUIRE(pi_sphere(6, 5) == FgAbGroup::zero());
    REQUIRE(pi_sphere(2, 3) == Z());
    REQUIRE(pi_sphere(2, 4) == Zn(2));
    REQUIRE(pi_sphere(2, 5) == Zn(2));
    REQUIRE(pi_sphere(1, 5) == FgAbGroup::zero());
    REQUIRE(pi_sphere(4, 4) == Z());
    REQUIRE_THROWS_WITH(pi_sphere(3, 6), Catch::Matchers::ContainsSubstring("n <= 5"));
}

TEST_CASE("pi5 of smash forms: 2-primary case table") {
    // m+t >= 6 vanishes; m+t = 5 is the bottom Moore class
    REQUIRE(pi5_form(form(4, 2, {3, 1})).group == FgAbGroup::zero());
    REQUIRE(pi5_form(form(3, 2, {1, 2})).group == Zn(2));
    REQUIRE(pi5_form(form(4, 2, {2})).group == Zn(4));

    // m+t = 4
    REQUIRE(pi5_form(form(3, 2, {2})).group == Zn(2));            // triple suspension
    REQUIRE(pi5_form(form(2, 2, {1, 1})).group == Zn(4));         // double suspension pair
    REQUIRE(pi5_form(form(2, 2, {1, 3})).group == sum({Zn(2), Zn(2)}));
    REQUIRE(pi5_form(form(2, 2, {2, 3})).group == sum({Zn(2), Zn(4)}));
    REQUIRE(pi5_form(form(1, 2, {1, 1, 1})).group == sum({Zn(2), Zn(2)}));

    // triple smash with max exponent > 1: the proof value, flagged
    PiResult t3 = pi5_form(form(1, 2, {2, 2, 2}));
    REQUIRE(t3.group == sum({Zn(2), Zn(4), Zn(4)}));
    REQUIRE(has_flag(t3, flags::triple_smash_proof_value));
    PiResult t3m = pi5_form(form(1, 2, {1, 2, 3}));
    REQUIRE(t3m.group == sum({Zn(2), Zn(2), Zn(2)}));
    REQUIRE(has_flag(t3m, flags::triple_smash_proof_value));

    // m+t = 3, single factor: suspension square of a cyclic 2-group
    REQUIRE(pi5_form(form(2, 2, {1})).group == Zn(8));
    REQUIRE(pi5_form(form(2, 2, {2})).group == sum({Zn(8), Zn(2)}));
    REQUIRE(pi5_form(form(2, 2, {3})).group == sum({Zn(16), Zn(2)}));

    // m+t = 3, smash pair with equal exponents
    REQUIRE(pi5_form(form(1, 2, {1, 1})).group == sum({Zn(2), Zn(2)}));
    REQUIRE(pi5_form(form(1, 2, {2, 2})).group == sum({Zn(2), Zn(4), Zn(4)}));
    REQUIRE(pi5_form(form(1, 2, {3, 3})).group == sum({Zn(2), Zn(8), Zn(8)}));

    // m+t = 3, smash pair with distinct exponents
    REQUIRE(pi5_form(form(1, 2, {1, 2})).group == sum({Zn(2), Zn(4)}));
    REQUIRE(pi5_form(form(1, 2, {1, 3})).group == sum({Zn(2), Zn(8)}));
    REQUIRE(pi5_form(form(1, 2, {1, 5})).group == sum({Zn(2), Zn(8)}));
    REQUIRE(pi5_form(form(1, 2, {2, 3})).group == sum({Zn(2), Zn(4), Zn(8)}));
    REQUIRE(pi5_form(form(1, 2, {3, 4})).group == sum({Zn(2), Zn(8), Zn(16)}));

    REQUIRE_THROWS_WITH(pi5_form(form(1, 2, {1})), Catch::Matchers::ContainsSubstring("m+t >= 3"));
}

TEST_CASE("pi5 of odd-primary forms follows the homology rule") {
    PiResult p33 = pi5_form(form(1, 3, {1, 1}));
    REQUIRE(p33.group == sum({Zn(3), Zn(3)}));
    REQUIRE(has_flag(p33, flags::odd_splitting));

    // bottom class at m+t = 5
    REQUIRE(pi5_form(form(3, 5, {1, 1})).group == Zn(5));
    // Sigma^2 K(Z/9,1): H_5 = H_3(K(Z/9,1)) = Z/9
    REQUIRE(pi5_form(form(2, 3, {2})).group == Zn(9));
    // Sigma K(Z/3,1) alone has m+t = 2, outside the grammar
    REQUIRE_THROWS_WITH(pi5_form(form(1, 3, {1})), Catch::Matchers::ContainsSubstring("m+t >= 3"));
}

TEST_CASE("pi5 of spheres through the form interface") {
    REQUIRE(pi5_form(SmashForm::sphere_form(3)).group == Zn(2));
    REQUIRE(pi5_form(SmashForm::sphere_form(5)).group == Z());
    REQUIRE(pi5_form(SmashForm::sphere_form(7)).group == FgAbGroup::zero());
}

TEST_CASE("pi4 of smash forms") {
    REQUIRE(pi4_form(form(2, 2, {3})).group == Zn(2));      // antisym square of Z/8
    REQUIRE(pi4_form(form(2, 3, {1})).group == FgAbGroup::zero());
    REQUIRE(pi4_form(form(1, 2, {1, 1})).group == Zn(4));
    REQUIRE(pi4_form(form(1, 2, {1, 2})).group == sum({Zn(2), Zn(2)}));
    REQUIRE(pi4_form(form(1, 2, {2, 3})).group == sum({Zn(2), Zn(4)}));
    REQUIRE(pi4_form(form(1, 3, {1, 1})).group == Zn(3));   // Tor(Z/3,Z/3) via homology
    REQUIRE(pi4_form(form(2, 2, {1, 1})).group == Zn(2));   // bottom Hurewicz at m+t=4
    REQUIRE(pi4_form(form(3, 3, {1})).group == Zn(3));
    REQUIRE(pi4_form(form(1, 2, {1, 1, 1, 1})).group == FgAbGroup::zero());
    REQUIRE(pi4_form(SmashForm::sphere_form(4)).group == Z());
}

TEST_CASE("pi_n(Sigma K(A,1)) golden values for cyclic 2-groups") {
    REQUIRE(pi_sigma_k(Zn(2), 4).group == Zn(4));
    REQUIRE(pi_sigma_k(Zn(4), 4).group == sum({Zn(2), Zn(4)}));
    REQUIRE(pi_sigma_k(Zn(8), 4).group == sum({Zn(2), Zn(8)}));
    REQUIRE(pi_sigma_k(Zn(2), 5).group == sum({Zn(2), Zn(2)}));
    REQUIRE(pi_sigma_k(Zn(4), 5).group == sum({Zn(2), Zn(4), Zn(4)}));
    REQUIRE(pi_sigma_k(Zn(8), 5).group == sum({Zn(2), Zn(8), Zn(8)}));
}

TEST_CASE("pi_n(Sigma K(A,1)) golden values for odd cyclic groups") {
    REQUIRE(pi_sigma_k(Zn(3), 4).group == Zn(3));
    REQUIRE(pi_sigma_k(Zn(9), 4).group == Zn(9));
    REQUIRE(pi_sigma_k(Zn(5), 4).group == Zn(5));
    // H_5 of the single smash form Sigma K^K: (1,3) and (3,1) Kunneth terms
    PiResult odd5 = pi_sigma_k(Zn(3), 5);
    REQUIRE(odd5.group == sum({Zn(3), Zn(3)}));
    REQUIRE(has_flag(odd5, flags::odd_splitting));
}

TEST_CASE("pi_2 and pi_3 of Sigma K(A,1)") {
    FgAbGroup a = sum({Z(), Zn(4), Zn(6)});
    REQUIRE(pi_sigma_k(a, 2).group == a);
    REQUIRE(pi_sigma_k(a, 3).group == tensor(a, a));
    REQUIRE_THROWS_WITH(pi_sigma_k(a, 6), Catch::Matchers::ContainsSubstring("{2,3,4,5}"));
    REQUIRE_THROWS_WITH(pi_sigma_k(a, 1), Catch::Matchers::ContainsSubstring("{2,3,4,5}"));
}

TEST_CASE("free abelian pi_5 profile") {
    REQUIRE(pi_sigma_k(Z(1), 5).group == Zn(2));  // pi_5(S^3)
    PiResult z2 = pi_sigma_k(Z(2), 5);
    REQUIRE(z2.group.free_rank == 7);
    REQUIRE(z2.group.torsion.size() == 8);
    for (const Int& d : z2.group.torsion) REQUIRE(d == 2);

    // rank 3: ends of the free-case exact sequence combined
    PiResult z3 = pi_sigma_k(Z(3), 5);
    FgAbGroup a = Z(3);
    int expected_free = lambda2(tensor(a, a)).free_rank +
                        2 * tensor(lambda3(a), a).free_rank +
                        tensor(lambda2(a), lambda2(a)).free_rank;
    std::size_t expected_torsion =
        2 * tensor(tensor(lambda2(a), a), Zn(2)).torsion.size() +
        tensor(tensor(a, a), Zn(2)).torsion.size();
    REQUIRE(z3.group.free_rank == expected_free);
    REQUIRE(z3.group.torsion.size() == expected_torsion);
}

TEST_CASE("pi_4(Sigma K(A,1)): instantiations of the primary closed form") {
    // elementary 2-group of rank 2
    REQUIRE(pi_sigma_k(sum({Zn(2), Zn(2)}), 4).group ==
            sum({Zn(4), Zn(4), Zn(4), Zn(4), Zn(2), Zn(2), Zn(2), Zn(2)}));
    // Z/12 = Z/4 + Z/3: A2 = 0
    REQUIRE(pi_sigma_k(Zn(12), 4).group == sum({Zn(2), Zn(12)}));
    // mixed prime with elementary part
    REQUIRE(pi_sigma_k(Zn(6), 4).group == sum({Zn(4), Zn(3)}));
}

TEST_CASE("closed form and pipeline agree on pi_4 across the corpus") {
    std::vector<FgAbGroup> pool = {Z(), Zn(2), Zn(3), Zn(4), Zn(8), Zn(9)};
    for (const auto& a : corpus(3, pool)) {
        CAPTURE(a.to_text());
        REQUIRE(pi_sigma_k(a, 4).group == pi4_sigma_k_pipeline(a).group);
    }
    // a couple of deliberately mixed cases beyond the pool
    for (const auto& a : {Zn(12), sum({Zn(6), Zn(6)}), sum({Z(2), Zn(2), Zn(9)})}) {
        CAPTURE(a.to_text());
        REQUIRE(pi_sigma_k(a, 4).group == pi4_sigma_k_pipeline(a).group);
    }
}

TEST_CASE("order accounting for pi_4 on finite corpus groups") {
    std::vector<FgAbGroup> pool = {Zn(2), Zn(3), Zn(4), Zn(8), Zn(9), Zn(6)};
    for (const auto& a : corpus(2, pool)) {
        FgAbGroup sub = direct_sum(direct_sum_pow(tensor(lambda2(a), a), 2),
                                   tensor(tensor(a, a), Zn(2)));
        Int expected = *order(sub) * *order(tor(a, a));
        REQUIRE(*order(pi_sigma_k(a, 4).group) == expected);
    }
}

TEST_CASE("double suspension: pi_3, pi_4, pi_5") {
    FgAbGroup a = sum({Zn(4), Zn(6)});
    REQUIRE(pi_sigma2_k(a, 3).group == a);
    REQUIRE(pi_sigma2_k(a, 4).group == tilde_sq(a));
    REQUIRE(pi_sigma2_k(Zn(2), 4).group == Zn(2));
    REQUIRE_THROWS_WITH(pi_sigma2_k(a, 5), Catch::Matchers::ContainsSubstring("{3,4}"));

    REQUIRE(pi5_sigma2(Z()).group == Zn(2));
    REQUIRE(pi5_sigma2(Zn(2)).group == Zn(8));
    REQUIRE(pi5_sigma2(Zn(4)).group == sum({Zn(8), Zn(2)}));
    REQUIRE(pi5_sigma2(Zn(8)).group == sum({Zn(16), Zn(2)}));
    REQUIRE(pi5_sigma2_cyclic2(1).group == Zn(8));
    REQUIRE_THROWS_WITH(pi5_sigma2(Zn(3)), Catch::Matchers::ContainsSubstring("not covered"));
    REQUIRE_THROWS_WITH(pi5_sigma2(sum({Zn(2), Zn(2)})),
                        Catch::Matchers::ContainsSubstring("not covered"));
}

TEST_CASE("Moore space table at bottom dimension 2") {
    REQUIRE(pi_moore2(2, 1, 4).group == Zn(4));
    REQUIRE(pi_moore2(2, 3, 4).group == sum({Zn(2), Zn(2)}));
    REQUIRE(pi_moore2(3, 2, 3).group == Zn(9));
    REQUIRE(pi_moore2(2, 2, 3).group == Zn(8));
    REQUIRE(pi_moore2(5, 1, 4).group == FgAbGroup::zero());
    REQUIRE(pi_moore2(3, 1, 2).group == Zn(3));
    REQUIRE_THROWS_WITH(pi_moore2(2, 1, 5), Catch::Matchers::ContainsSubstring("{2,3,4}"));
}

TEST_CASE("pi_5 of 2-primary Moore spaces by bottom dimension") {
    REQUIRE(pi5_moore_2primary(1, 3) == Zn(4));
    REQUIRE(pi5_moore_2primary(2, 3) == sum({Zn(2), Zn(2)}));
    REQUIRE(pi5_moore_2primary(3, 3) == sum({Zn(2), Zn(2)}));
    REQUIRE(pi5_moore_2primary(2, 4) == Zn(2));
    REQUIRE(pi5_moore_2primary(3, 5) == Zn(8));
    REQUIRE(pi5_moore_2primary(1, 6) == FgAbGroup::zero());
    REQUIRE_THROWS_WITH(pi5_moore_2primary(1, 7), Catch::Matchers::ContainsSubstring("{3,4,5,6}"));
}

TEST_CASE("registry: suspended projective spaces") {
    REQUIRE(registry(RegistryTarget::rp(2), 4).group == Zn(4));
    REQUIRE(registry(RegistryTarget::rp(3), 4).group == sum({Zn(4), Z()}));
    REQUIRE(registry(RegistryTarget::rp(4), 4).group == Zn(4));
    REQUIRE(registry(RegistryTarget::rp(9), 4).group == Zn(4));
    REQUIRE(registry(RegistryTarget::rp_inf(), 4).group == Zn(4));

    REQUIRE(registry(RegistryTarget::rp(1), 5).group == Zn(2));
    REQUIRE(registry(RegistryTarget::rp(2), 5).group == sum({Zn(2), Zn(2), Zn(2)}));
    REQUIRE(registry(RegistryTarget::rp(3), 5).group ==
            sum({Zn(2), Zn(2), Zn(2), Zn(2), Zn(2)}));
    REQUIRE(registry(RegistryTarget::rp(4), 5).group == sum({Zn(2), Zn(2), Zn(2)}));
    // documented resolution of the overlapping ranges: from n = 5 on, Z/2 + Z/2
    REQUIRE(registry(RegistryTarget::rp(5), 5).group == sum({Zn(2), Zn(2)}));
    REQUIRE(registry(RegistryTarget::rp(17), 5).group == sum({Zn(2), Zn(2)}));
    REQUIRE(registry(RegistryTarget::rp_inf(), 5).group == sum({Zn(2), Zn(2)}));

    REQUIRE(has_flag(registry(RegistryTarget::rp(4), 5), flags::registry_value));
    REQUIRE_THROWS_WITH(registry(RegistryTarget::rp(4), 3),
                        Catch::Matchers::ContainsSubstring("not tabulated"));
}

TEST_CASE("registry: named groups") {
    REQUIRE(registry(RegistryTarget::sigma3(), 4).group == Zn(12));
    REQUIRE(registry(RegistryTarget::sigma3(), 5).group == sum({Zn(2), Zn(2)}));
    REQUIRE(registry(RegistryTarget::a4(), 3).group == Zn(6));
    REQUIRE(registry(RegistryTarget::a4(), 4).group == Zn(4));
    REQUIRE(registry(RegistryTarget::slz(), 3).group == Zn(2));
    REQUIRE(registry(RegistryTarget::slz(), 4).group == Zn(48));
    REQUIRE(registry(RegistryTarget::slz(), 5).group == Zn(2));
    REQUIRE_THROWS_WITH(registry(RegistryTarget::a4(), 5),
                        Catch::Matchers::ContainsSubstring("not tabulated"));
}

TEST_CASE("pi_5 for a mixed group assembles additively over the wedge") {
    // A = Z + Z/2, the worked example: summands Z/8^2, Z/4^2, Z/2^12
    PiResult r = pi_sigma_k(sum({Z(), Zn(2)}), 5);
    FgAbGroup expected;
    for (int i = 0; i < 2; ++i) expected = direct_sum(expected, Zn(8));
    for (int i = 0; i < 2; ++i) expected = direct_sum(expected, Zn(4));
    for (int i = 0; i < 12; ++i) expected = direct_sum(expected, Zn(2));
    REQUIRE(r.group == expected);
}

TEST_CASE("pi_3 consistency: bottom classes of the expansion sum to A (x) A") {
    std::vector<FgAbGroup> pool = {Z(), Zn(2), Zn(3), Zn(4), Zn(9)};
    for (const auto& a : corpus(2, pool)) {
        FgAbGroup h3;
        for (auto& [f, mult] : expand_sigma_k_smash(a)) {
            FgAbGroup part = homology_at(f.to_space(), 3);
            for (long long c = 0; c < mult; ++c) h3 = direct_sum(h3, part);
        }
        REQUIRE(h3 == tensor(a, a));
    }
}

TEST_CASE("every result carries at least one rule and tidy annotations") {
    std::vector<FgAbGroup> pool = {Z(), Zn(2), Zn(3), Zn(4)};
    for (const auto& a : corpus(2, pool))
        for (int n : {2, 3, 4, 5}) {
            PiResult r = pi_sigma_k(a, n);
            REQUIRE(!r.rules.empty());
            REQUIRE(std::is_sorted(r.rules.begin(), r.rules.end()));
            REQUIRE(std::is_sorted(r.notes.begin(), r.notes.end()));
            REQUIRE(std::adjacent_find(r.rules.begin(), r.rules.end()) == r.rules.end());
        }
}

TEST_CASE("odd-locality order accounting for pi_5") {
    std::vector<FgAbGroup> pool = {Zn(3), Zn(9), Zn(5), Zn(27)};
    for (const auto& a : corpus(2, pool)) {
        if (a.is_trivial()) continue;
        CAPTURE(a.to_text());
        SpaceExpr k = k_space(a);
        Int lhs = *order(pi_sigma_k(a, 5).group);
        Int rhs = *order(lambda2(tensor(a, a))) * *order(homology_at(SpaceExpr::smash(k, k), 4));
        REQUIRE(lhs == rhs);
    }
}
