#include "doctest.h"

#include "hopfpeak/nsym.hpp"
#include "hopfpeak/qsym.hpp"

using namespace hopfpeak;
using namespace hopfpeak::nsym;

TEST_CASE("H product is concatenation") {
    const auto& h = algebra();
    CHECK(h.product(H({2}), H({1})) == H({2, 1}));
    CHECK(h.product(H({1}), H({2})) != h.product(H({2}), H({1})));
    CHECK(h.product(h.unit(), H({3})) == H({3}));
}

TEST_CASE("H coproduct") {
    const auto& h = algebra();
    auto d = h.coproduct(H({1, 1}));
    CHECK(d.coeff({Composition{1}, Composition{1}}) == 2);
    CHECK(d.coeff({Composition(), Composition{1, 1}}) == 1);
    CHECK(d.size() == 3);
    CHECK(h.coproduct(H({2})).size() == 3);
}

TEST_CASE("duality with QSym") {
    const auto& h = algebra();
    const auto& q = qsym::algebra();
    CHECK(pairing(H({2, 1}), qsym::M({2, 1})) == 1);
    CHECK(pairing(H({3}), qsym::M({2, 1})) == 0);
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : compositions(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& a : compositions(k))
                    for (const auto& b : compositions(n - k)) {
                        auto lhs = pairing(h.coproduct(H(g)), tensor(qsym::M(a), qsym::M(b)));
                        auto rhs = pairing(H(g), q.product(qsym::M(a), qsym::M(b)));
                        CHECK(lhs == rhs);
                        // and the other direction
                        CHECK(pairing(h.product(H(a), H(b)), qsym::M(g)) ==
                              pairing(tensor(H(a), H(b)), q.coproduct(qsym::M(g))));
                    }
}

TEST_CASE("ribbon basis") {
    NSymElement expected(kH);
    expected.add_term({1, 1}, 1);
    expected.add_term({2}, -1);
    CHECK(to_H(R({1, 1})) == expected);
    for (int n = 1; n <= 5; ++n) CHECK(to_H(R({n})) == H({n}));
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : compositions(n)) {
            CHECK(from_H(to_H(R(a)), "R") == R(a));
            for (const auto& b : compositions(n)) {
                auto lb = qsym::to_M(qsym::L(b));
                CHECK(pairing(to_H(R(a)), lb) == (a == b ? 1 : 0));
            }
        }
}

TEST_CASE("theta on generators and duality with theta of QSym") {
    CHECK(theta(H({1})) == 2 * H({1}));
    CHECK(theta(H({2})) == 2 * H({1, 1}));
    auto adj = adjoint(qsym::theta_map(), [](int n) { return compositions(n); }, 5);
    for (int n = 0; n <= 5; ++n)
        for (const auto& a : compositions(n)) {
            CHECK(theta(H(a)) == adj.on_basis(a));
            for (const auto& b : compositions(n))
                CHECK(pairing(theta(H(a)), qsym::M(b)) == pairing(H(a), qsym::theta(qsym::M(b))));
        }
}

TEST_CASE("theta image dimensions are Fibonacci numbers") {
    const long fib[] = {0, 1, 1, 2, 3, 5};
    for (int n = 1; n <= 5; ++n) {
        auto basis = compositions(n);
        CHECK(static_cast<long>(rank(map_matrix(theta_map(), basis, basis))) == fib[n]);
    }
    CHECK(check_hopf_morphism(algebra(), algebra(), theta_map(), 4, "theta_nsym").passed());
}
