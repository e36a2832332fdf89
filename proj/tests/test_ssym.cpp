/* Copyright 2026 The hopfpeak Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include "doctest.h"

#include "hopfpeak/ssym.hpp"
#include "hopfpeak/sym.hpp"

using namespace hopfpeak;
using namespace hopfpeak::ssym;

namespace {
Permutation P(const char* d) { return perm_from_digits(d); }

SSymElement terms(const BasisTag& tag, std::initializer_list<std::pair<const char*, Rational>> ts) {
    SSymElement e(tag);
    for (auto& [d, c] : ts) e.add_term(P(d), c);
    return e;
}

Tensor<Permutation> tens(const BasisTag& tag, std::initializer_list<std::tuple<const char*, const char*, int>> ts) {
    Tensor<Permutation> e(tag);
    for (auto& [a, b, c] : ts) e.add_term({P(a), P(b)}, c);
    return e;
}
}  // namespace

TEST_CASE("F product and coproduct") {
    const auto& h = algebra();
    CHECK(h.product(F(P("1")), F(P("1"))) == terms(kF, {{"12", 1}, {"21", 1}}));
    CHECK(h.product(F(P("1")), F(P("21"))).size() == 3);
    CHECK(h.product(h.unit(), F(P("231"))) == F(P("231")));
    CHECK(h.coproduct(F(P("21"))) == tens(kF, {{"", "21", 1}, {"1", "1", 1}, {"21", "", 1}}));
    CHECK(h.coproduct(F(P("312"))) == tens(kF, {{"", "312", 1}, {"1", "12", 1}, {"21", "1", 1}, {"312", "", 1}}));
    CHECK(check_hopf_axioms(h, 4).passed());
}

TEST_CASE("M basis") {
    CHECK(to_F(M(P("12"))) == terms(kF, {{"12", 1}, {"21", -1}}));
    CHECK(to_F(M(P("21"))) == F(P("21")));
    CHECK(to_F(M(P("231"))) == terms(kF, {{"231", 1}, {"321", -1}}));
    for (int n = 0; n <= 5; ++n)
        for (const auto& s : permutations(n)) {
            CHECK(convert(to_F(M(s)), "M") == M(s));
            CHECK(to_F(convert(F(s), "M")) == F(s));
            CHECK(to_Fs(convert(Fs(s), "M*")) == Fs(s));
        }
    CHECK(M_coproduct(P("231")) == tens(kM, {{"", "231", 1}, {"12", "1", 1}, {"231", "", 1}}));
    CHECK(M_coproduct(P("132")) == tens(kM, {{"", "132", 1}, {"132", "", 1}}));
    for (int n = 0; n <= 4; ++n)
        for (const auto& s : permutations(n)) CHECK(coproduct(M(s)) == M_coproduct(s));
    CHECK_THROWS_AS(convert(F(P("12")), "F*"), AlgebraMismatch);
}

TEST_CASE("dual algebra") {
    const auto& d = dual_algebra();
    CHECK(check_hopf_axioms(d, 4).passed());
    CHECK(dual_product_Mstar(P("1"), P("1")) == Ms(P("21")));
    CHECK(dual_product_Mstar(P("12"), P("1")) == Ms(P("231")));
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; a + b <= 4; ++b)
            for (const auto& s : permutations(a))
                for (const auto& t : permutations(b))
                    CHECK(product(Ms(s), Ms(t)) == dual_product_Mstar(s, t));
    // <F*_a F*_b, F_r> = <F*_a (x) F*_b, Delta F_r> and dually for the coproduct.
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (const auto& s : permutations(a))
                for (const auto& t : permutations(b)) {
                    auto prod = d.product(Fs(s), Fs(t));
                    auto fprod = algebra().product(F(s), F(t));
                    for (const auto& r : permutations(a + b)) {
                        CHECK(prod.coeff(r) == algebra().coproduct(F(r)).coeff({s, t}));
                        CHECK(d.coproduct(Fs(r)).coeff({s, t}) == fprod.coeff(r));
                    }
                }
    for (int n = 0; n <= 3; ++n)
        for (const auto& s : permutations(n))
            for (const auto& t : permutations(n)) CHECK(pairing(to_Fs(Ms(s)), to_F(M(t))) == (s == t ? 1 : 0));
}

TEST_CASE("self-duality") {
    CHECK(self_duality(F(P("231"))) == Fs(P("312")));
    CHECK(self_duality(F(P("123"))) == Fs(P("123")));
    const auto& h = algebra();
    const auto& d = dual_algebra();
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (const auto& s : permutations(a))
                for (const auto& t : permutations(b)) {
                    CHECK(self_duality_inverse(self_duality(F(s))) == F(s));
                    CHECK(self_duality(h.product(F(s), F(t))) == d.product(self_duality(F(s)), self_duality(F(t))));
                }
}

TEST_CASE("descent map") {
    CHECK(descent(F(P("213"))) == qsym::to_M(qsym::L({1, 2})));
    CHECK(descent(M(P("231"))) == qsym::M({2, 1}));
    CHECK(descent(M(P("132"))).is_zero());
    for (int n = 0; n <= 4; ++n)
        for (const auto& s : permutations(n)) {
            auto d = descent(M(s));
            if (is_di(s)) {
                auto sizes = block_sizes(s);
                CHECK(d == qsym::M(Composition(sizes)));
            } else {
                CHECK(d.is_zero());
            }
        }
    CHECK(check_hopf_morphism(algebra(), qsym::algebra(), descent_map(), 4, "D").passed());
    for (int n = 0; n <= 4; ++n)
        for (const auto& a : compositions(n))
            for (const auto& s : permutations(n))
                CHECK(pairing(descent_adjoint().on_basis(a), F(s)) == pairing(nsym::H(a), descent_map().on_basis(s)));
}

TEST_CASE("canonical character and universal morphism") {
    CHECK(zeta()(to_F(M(P("123")))) == 1);
    CHECK(zeta()(to_F(M(P("213")))) == 0);
    CHECK(check_multiplicative(zeta(), 4).passed());
    auto psi = universal_psi(zeta());
    for (int n = 0; n <= 4; ++n)
        for (const auto& s : permutations(n)) {
            CHECK(psi.map().on_basis(s) == descent_map().on_basis(s));
            CHECK(zeta()(s) == qsym_zeta()(descent_map().on_basis(s)));
        }
    auto nu = odd_character(zeta());
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : permutations(n)) CHECK(nu(s) == odd_char(n).coeff(s));
    CHECK(odd_char(2) == terms(kFs, {{"12", 2}, {"21", 2}}));
    CHECK(odd_char(3) == terms(kFs, {{"123", 2}, {"213", 2}, {"312", 2}, {"321", 2}}));
}

TEST_CASE("odd basis") {
    CHECK(eta_perm(P("1")) == terms(kM, {{"1", 2}}));
    CHECK(eta_perm(P("21")) == terms(kM, {{"12", 2}, {"21", 4}}));
    CHECK(descent(eta_perm(P("21"))) == qsym::eta({1, 1}));
    CHECK_THROWS_AS(eta_perm(P("12")), std::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (const auto& s : permutations(n))
            if (is_odd_perm(s)) CHECK(descent(eta_perm(s)) == qsym::eta(Composition(block_sizes(s))));
    CHECK(odd_basis(1).size() == 1);
    CHECK(odd_basis(2).size() == 1);
    CHECK(odd_basis(3).size() == 4);
    for (int n = 1; n <= 5; ++n) {
        auto b = odd_basis(n);
        CHECK(rank(coordinate_rows(b, permutations(n))) == b.size());
        if (n <= 4)
            for (const auto& e : b) CHECK(ds_check(zeta(), e));
    }
    auto psi = universal_psi(zeta());
    for (int n = 1; n <= 4; ++n) {
        auto strat = odd_subalgebra_basis(psi, n);
        CHECK(same_row_space(coordinate_rows(strat.all(), permutations(n)),
                             coordinate_rows(odd_basis(n), permutations(n))));
    }
    auto s2 = odd_subalgebra_basis(psi, 2).all();
    REQUIRE(s2.size() == 1);
    CHECK(same_row_space(coordinate_rows(s2, permutations(2)),
                         coordinate_rows(std::vector{to_F(eta_perm(P("21")))}, permutations(2))));
}

// From degree 5 on, M_s with s non-DI but with a global descent has a
// coproduct term pairing a GD-free block with an identity block; the identity
// block fails zeta-bar = zeta^-1, so M_s cannot lie in a subcoalgebra on which
// the relation holds.
TEST_CASE("kernel of D leaves the odd subalgebra in degree 5") {
    auto s = P("35412");
    REQUIRE(global_descents(s).blocks == std::vector{P("132"), P("12")});
    CHECK(descent(M(s)).is_zero());
    std::string w;
    CHECK_FALSE(ds_check(zeta(), to_F(M(s)), &w));
    CHECK(w.find("F132(x)()") != std::string::npos);
    auto m12 = to_F(M(P("12")));
    CHECK(bar(zeta())(m12) != inverse(zeta())(m12));
    int failing = 0;
    for (const auto& e : odd_basis(5)) failing += ds_check(zeta(), e) ? 0 : 1;
    CHECK(failing == 8);
    for (const auto& r : permutations(5)) CHECK(ds_check(zeta(), default_theta().apply(F(r))));
    for (const auto& t : permutations(5))
        if (is_odd_perm(t)) CHECK(ds_check(zeta(), to_F(eta_perm(t))));
}

TEST_CASE("constructor validation") {
    const auto& f = ThetaConstructor::default_constructor();
    CHECK(f(P("123"), P("213")) == 2);
    CHECK(f(P("132"), P("132")) == 0);
    CHECK(f(P("213"), P("132")) == 0);
    CHECK(f(P("213"), P("213")) == 2);
    CHECK(f.validate(4).passed());
    CHECK_THROWS_AS(ThetaConstructor([](const Permutation&, const Permutation&) { return Rational(2); }, "const2", 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(ThetaConstructor::from_table({{P("132"), P("213"), 1}}, "asym", 3), std::invalid_argument);
    CHECK_NOTHROW(ThetaConstructor::from_table({{P("132"), P("213"), 1}, {P("213"), P("132"), 1}}, "sym", 3));
}

TEST_CASE("degree 2 and 3 tables") {
    const auto& t = default_theta();
    CHECK(t.matrix(2) == RatMatrix::from_rows({{2, 2}, {2, 2}}, 2));
    CHECK(t.entry(P("1"), P("1")) == 2);
    CHECK(t.apply(algebra().unit()) == algebra().unit());

    // Generic free parameters a = f(132,132), b = f(213,132) = f(132,213), c = f(213,213).
    const Rational a = 3, b = 5, c = 7;
    ThetaStar g(ThetaConstructor::from_table(
        {{P("132"), P("132"), a}, {P("213"), P("132"), b}, {P("132"), P("213"), b}, {P("213"), P("213"), c}},
        "generic", 3));
    // Rows F*_s in lexicographic order; columns F_123, F_132, F_213, F_312, F_231, F_321.
    std::vector<Permutation> rows = permutations(3);
    std::vector<Permutation> cols{P("123"), P("132"), P("213"), P("312"), P("231"), P("321")};
    std::vector<std::vector<Rational>> want{
        {2, 0, 2, 2, 0, 2},
        {0, a, b, 4 - a, 4 - b, 0},
        {2, b, c, 2 - b, 2 - c, 2},
        {2, 4 - a, 2 - b, a - 2, b, 2},
        {0, 4 - b, 2 - c, b, c + 2, 0},
        {2, 0, 2, 2, 0, 2},
    };
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            INFO(to_string(rows[i]) << " x " << to_string(cols[j]));
            CHECK(g.entry(rows[i], cols[j]) == want[i][j]);
        }
    std::vector<std::vector<Rational>> def{
        {2, 0, 2, 2, 0, 2}, {0, 0, 0, 4, 4, 0}, {2, 0, 2, 2, 0, 2},
        {2, 4, 2, -2, 0, 2}, {0, 4, 0, 0, 4, 0}, {2, 0, 2, 2, 0, 2},
    };
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(t.entry(rows[i], cols[j]) == def[i][j]);
}

TEST_CASE("identity row is the odd character") {
    const auto& t = default_theta();
    for (int n = 1; n <= 5; ++n)
        for (const auto& r : permutations(n)) CHECK(t.entry(identity_perm(n), r) == odd_char(n).coeff(r));
}

TEST_CASE("theta conditions") {
    const auto& t = default_theta();
    auto rep = verify_ssym_theta(t, 4);
    INFO(rep.summary());
    CHECK(rep.passed());
    CHECK(self_adjointness(t, 5).passed());
    CHECK(descent(t.apply(F(P("21")))) == qsym::theta(qsym::to_M(qsym::L({1, 1}))));
    auto psi = universal_psi(zeta());
    CHECK(verify_theta(psi, t.map(), 4).passed());
    for (int n = 1; n <= 4; ++n) {
        auto span = coordinate_rows(odd_basis(n), permutations(n));
        for (const auto& s : permutations(n)) CHECK(in_row_space(span, coordinates(t.apply(F(s)), permutations(n))));
    }
}

TEST_CASE("generic constructor gives a Theta map") {
    ThetaStar g(ThetaConstructor::from_table(
        {{P("132"), P("132"), 3}, {P("213"), P("132"), 5}, {P("132"), P("213"), 5}, {P("213"), P("213"), 7}},
        "generic", 4));
    auto rep = verify_ssym_theta(g, 4);
    INFO(rep.summary());
    CHECK(rep.passed());
}

TEST_CASE("corrupted constructor breaks condition 2") {
    ThetaStar bad(ThetaConstructor::unchecked(
        [](const Permutation& s, const Permutation& t) {
            if (s == identity_perm(3) && t == perm_from_digits("213")) return Rational(0);
            if (t == identity_perm(3) && s == perm_from_digits("213")) return Rational(0);
            return f_peak(s, t);
        },
        "corrupted"));
    CHECK_FALSE(bad.constructor().validate(3).passed());
    auto rep = verify_ssym_theta(bad, 3);
    const Check* c2 = rep.find("(2) zeta_SSym.Theta = nu.D");
    REQUIRE(c2 != nullptr);
    CHECK_FALSE(c2->passed);
    CHECK(c2->witness.find("213") != std::string::npos);
    CHECK_FALSE(rep.find("(3) Theta*(M*_1n) = odd character")->passed);
}

TEST_CASE("cube commutes") {
    auto rep = cube_report(default_theta(), 4);
    INFO(rep.summary());
    CHECK(rep.passed());
}
