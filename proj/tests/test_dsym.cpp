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

#include "oracle/poly_oracle.hpp"

#include "hopfpeak/dsym.hpp"

using namespace hopfpeak;
using namespace hopfpeak::dsym;

namespace {
Bipartition B(std::initializer_list<std::pair<int, int>> cols) { return Bipartition(cols); }

// Coefficient of s^a t^b in prod_{i<n} f(x_i s + y_i t), in the variables
// (x_0, y_0, ..., x_{n-1}, y_{n-1}); f has Taylor coefficients coeff(k).
template <class F>
oracle::Poly series(F coeff, int a, int b, int n) {
    std::size_t w = static_cast<std::size_t>(2 * n + 2);
    oracle::Poly acc{{oracle::Exponent(w, 0), Rational(1)}};
    for (int i = 0; i < n; ++i) {
        oracle::Poly factor;
        for (int k = 0; k <= a + b; ++k)
            for (int j = 0; j <= k; ++j) {
                if (j > a || k - j > b) continue;
                oracle::Exponent e(w, 0);
                e[2 * static_cast<std::size_t>(i)] = j;
                e[2 * static_cast<std::size_t>(i) + 1] = k - j;
                e[w - 2] = j;
                e[w - 1] = k - j;
                factor[e] += coeff(k) * binomial(k, j);
            }
        oracle::Poly next;
        for (const auto& [e, c] : oracle::multiply(acc, factor))
            if (e[w - 2] <= a && e[w - 1] <= b) next[e] = c;
        acc = next;
    }
    oracle::Poly out;
    for (const auto& [e, c] : acc)
        if (e[w - 2] == a && e[w - 1] == b) out[oracle::Exponent(e.begin(), e.end() - 2)] += c;
    return out;
}
}  // namespace

TEST_CASE("disjoint union") {
    CHECK(disjoint_union(B({{1, 0}}), B({{0, 1}})) == B({{1, 0}, {0, 1}}));
    CHECK(disjoint_union(B({{1, 1}}), Bipartition()) == B({{1, 1}}));
    CHECK(B({{0, 1}, {1, 0}}).columns.front() == Column{1, 0});
}

TEST_CASE("m product examples") {
    DSymElement a = m(B({{1, 0}, {0, 1}})) + m(B({{1, 1}}));
    CHECK(product(m(B({{1, 0}})), m(B({{0, 1}}))) == a);
    CHECK(product(m(B({{1, 0}})), m(B({{1, 0}}))) == 2 * m(B({{1, 0}, {1, 0}})) + m(B({{2, 0}})));
    CHECK(product(m(Bipartition()), a) == a);
}

TEST_CASE("m product agrees with polynomial expansion") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& l : bipartitions(k))
                for (const auto& mu : bipartitions(n - k)) {
                    auto poly = oracle::multiply(oracle::monomial_dsym(l, n), oracle::monomial_dsym(mu, n));
                    auto prod = algebra().product_on_basis(l, mu);
                    for (const auto& nu : bipartitions(n)) {
                        INFO(to_string(l) << " * " << to_string(mu) << " at " << to_string(nu));
                        CHECK(prod.coeff(nu) == oracle::dsym_coefficient(poly, nu, n));
                    }
                }
}

TEST_CASE("coproduct over sub-multisets") {
    const auto& h = algebra();
    auto d = h.coproduct(m(B({{1, 1}})));
    CHECK(d.size() == 2);
    CHECK(d.coeff({B({{1, 1}}), Bipartition()}) == 1);
    auto d2 = h.coproduct(m(B({{1, 0}, {0, 1}})));
    CHECK(d2.size() == 4);
    CHECK(d2.coeff({B({{1, 0}}), B({{0, 1}})}) == 1);
    CHECK(h.coproduct(m(B({{1, 0}, {1, 0}}))).size() == 3);
}

TEST_CASE("hopf axioms, commutativity and cocommutativity") {
    const auto& h = algebra();
    CHECK(check_hopf_axioms(h, 4).passed());
    auto all = basis_up_to(h, 4);
    for (const auto& a : all) {
        CHECK(swap_tensor(h.coproduct_on_basis(a)) == h.coproduct_on_basis(a));
        for (const auto& b : all)
            if (degree(a) + degree(b) <= 4) CHECK(h.product_on_basis(a, b) == h.product_on_basis(b, a));
    }
}

TEST_CASE("h and e from their generating functions") {
    CHECK(h(1, 0) == m(B({{1, 0}})));
    CHECK(e(1, 0) == m(B({{1, 0}})));
    CHECK(h(1, 1) == 2 * m(B({{1, 1}})) + m(B({{1, 0}, {0, 1}})));
    CHECK(e(1, 1) == m(B({{1, 0}, {0, 1}})));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
            for (char kind : {'h', 'e', 'q'}) CHECK(he_expand(kind, a, b) == he_expand(kind, a, b, a + b + 1));
            int n = a + b;
            auto hp = series([](int) { return Rational(1); }, a, b, n);
            auto ep = series([](int k) { return Rational(k <= 1 ? 1 : 0); }, a, b, n);
            auto qp = series([](int k) { return Rational(k == 0 ? 1 : 2); }, a, b, n);
            for (const auto& l : bipartitions(n)) {
                CHECK(h(a, b).coeff(l) == oracle::dsym_coefficient(hp, l, n));
                CHECK(e(a, b).coeff(l) == oracle::dsym_coefficient(ep, l, n));
                CHECK(q(a, b).coeff(l) == oracle::dsym_coefficient(qp, l, n));
            }
        }
}

TEST_CASE("basis changes round trip") {
    auto x = m(B({{2, 1}, {0, 1}})) - 3 * m(B({{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
    for (const char* b : {"m", "h", "e", "p"}) CHECK(to_m(convert(x, b)) == x);
    CHECK(to_m(elem("p", B({{1, 1}}))) == m(B({{1, 1}})));
    CHECK(to_m(elem("e", B({{1, 0}, {0, 1}}))) == product(e(1, 0), e(0, 1)));
    CHECK_THROWS_AS(tag_for("s"), std::invalid_argument);
}

TEST_CASE("closed-form antipode on e") {
    CHECK(antipode_via_e(elem("e", B({{1, 0}}))) == -m(B({{1, 0}})));
    CHECK(antipode_via_e(elem("e", B({{1, 1}}))) == h(1, 1));
    for (const auto& l : basis_up_to(algebra(), 4)) {
        INFO(to_string(l));
        CHECK(antipode_via_e(m(l)) == algebra().antipode_on_basis(l));
    }
}

TEST_CASE("q generators") {
    CHECK(q(1, 0) == 2 * m(B({{1, 0}})));
    CHECK(q(1, 1) == 4 * m(B({{1, 0}, {0, 1}})) + 4 * m(B({{1, 1}})));
    CHECK(q(1, 1) == product(q(1, 0), q(0, 1)));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
            CHECK(q(a, b) == q_convolution(a, b));
            CHECK(q(a, b) == he_expand('q', a, b));
        }
    CHECK(2 * q(2, 0) == product(q(1, 0), q(1, 0)));
    auto r = q_identity_check(4);
    INFO(r.summary());
    CHECK(r.passed());
    CHECK(r.find("alternating sum")->cases == 14);
}

TEST_CASE("projection and embedding") {
    CHECK(p_map().on_basis(B({{1, 1}})) == sym::SymElement(sym::km, Partition{2}));
    CHECK(p_map().on_basis(B({{1, 0}, {0, 1}})) == sym::SymElement(sym::km, Partition{1, 1}, 2));
    CHECK(p_map().on_basis(B({{1, 0}, {1, 0}})) == sym::SymElement(sym::km, Partition{1, 1}));
    CHECK(i_map().on_basis(Partition{2, 1}) == m(B({{2, 0}, {1, 0}})));
    CHECK(theta_alt_map().on_basis(B({{0, 2}})) == i_map()(sym::theta_map().on_basis(Partition{2})));
    CHECK(check_hopf_morphism(algebra(), sym::algebra(), p_map(), 4, "p").passed());
    CHECK(check_hopf_morphism(sym::algebra(), algebra(), i_map(), 4, "i").passed());
}

TEST_CASE("both theta maps pass the criterion") {
    CHECK(check_multiplicative(zeta(), 4).passed());
    auto u = universal_psi(zeta());
    for (const auto& l : basis_up_to(algebra(), 4))
        CHECK(u.map().on_basis(l) == sym::iota_map()(p_map().on_basis(l)));
    auto r1 = verify_theta(u, theta_map(), 4);
    INFO(r1.summary());
    CHECK(r1.passed());
    auto r2 = verify_theta(u, theta_alt_map(), 4);
    INFO(r2.summary());
    CHECK(r2.passed());
    CHECK(theta_map().on_basis(B({{1, 0}, {0, 1}})) != theta_alt_map().on_basis(B({{1, 0}, {0, 1}})));
}

TEST_CASE("theta restricted to the top row") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& l : partitions(n)) {
            INFO(to_string(l));
            CHECK(theta_map()(i_map().on_basis(l)) == i_map()(sym::theta_map().on_basis(l)));
        }
    CHECK(theta(elem("p", B({{3, 0}}))) == 2 * elem("p", B({{3, 0}})));
    CHECK(theta(elem("p", B({{2, 0}}))).is_zero());
}
