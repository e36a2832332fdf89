#include "doctest.h"

#include "hopfpeak/sym.hpp"

using namespace hopfpeak;
using namespace hopfpeak::sym;

TEST_CASE("embedding into QSym") {
    qsym::QSymElement e(qsym::kM);
    e.add_term({2, 1}, 1);
    e.add_term({1, 2}, 1);
    CHECK(embed_iota(elem("m", {2, 1})) == e);
    CHECK(embed_iota(elem("p", {3})) == qsym::M({3}));
    CHECK(embed_iota(elem("e", {2})) == qsym::M({1, 1}));
    CHECK(is_symmetric(e));
    CHECK_FALSE(is_symmetric(qsym::M({2, 1})));
    for (int n = 0; n <= 5; ++n)
        for (const auto& l : partitions(n))
            for (const char* b : {"m", "p", "e", "h"}) CHECK(is_symmetric(embed_iota(elem(b, l))));
}

TEST_CASE("conversions are exact mutual inverses") {
    for (int n = 0; n <= 6; ++n)
        for (const char* b : {"p", "e", "h"}) {
            auto t = to_m_matrix(b, n);
            CHECK(t * inverse(t) == RatMatrix::identity(t.rows()));
            for (const auto& l : partitions(n)) CHECK(convert(elem(b, l), b) == elem(b, l));
        }
    // h_2 = (p_1^2 + p_2) / 2
    SymElement h2p(kp);
    h2p.add_term({1, 1}, Rational(1, 2));
    h2p.add_term({2}, Rational(1, 2));
    CHECK(convert(elem("h", {2}), "p") == h2p);
}

TEST_CASE("Sym is a Hopf algebra") {
    CHECK(check_hopf_axioms(algebra(), 5).passed());
}

TEST_CASE("theta and q") {
    CHECK(theta(elem("p", {3})) == 2 * elem("p", {3}));
    CHECK(theta(elem("p", {2})).is_zero());
    CHECK(theta(elem("h", {1})) == 2 * elem("h", {1}));
    CHECK(q_gen(0) == elem("p", {}));
    CHECK(q_gen(1) == 2 * elem("p", {1}));
    for (int n = 1; n <= 5; ++n) CHECK(to_m(theta(elem("h", {n}))) == to_m(theta(elem("e", {n}))));
    for (int n = 0; n <= 5; ++n)
        for (const auto& l : partitions(n)) {
            auto m = elem("m", l);
            CHECK(embed_iota(theta(m)) == qsym::theta(embed_iota(m)));
            CHECK(embed_iota(algebra().phi(m)) == embed_iota(theta(m)));
        }
    CHECK(check_hopf_morphism(algebra(), algebra(), theta_map(), 4, "theta_sym").passed());
}

TEST_CASE("projection from NSym") {
    CHECK(pi_projection(nsym::H({2, 1})) == elem("h", {2, 1}));
    CHECK(pi_projection(nsym::H({1, 2})) == pi_projection(nsym::H({2, 1})));
    CHECK(to_m(pi_projection(nsym::theta(nsym::H({2})))) == to_m(theta(pi_projection(nsym::H({2})))));
    CHECK(to_m(pi_projection(nsym::theta(nsym::H({2})))) == to_m(2 * elem("h", {1, 1})));
    for (int n = 0; n <= 5; ++n)
        for (const auto& a : compositions(n))
            CHECK(to_m(pi_projection(nsym::theta(nsym::H(a)))) == to_m(theta(pi_projection(nsym::H(a)))));
    // pi is an algebra map
    for (const auto& a : compositions_up_to(3))
        for (const auto& b : compositions_up_to(2))
            CHECK(pi_map()(nsym::algebra().product(nsym::H(a), nsym::H(b))) ==
                  algebra().product(pi_map().on_basis(a), pi_map().on_basis(b)));
}
