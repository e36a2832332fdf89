#include "doctest.h"

#include "hopfpeak/nsym.hpp"
#include "hopfpeak/qsym.hpp"

using namespace hopfpeak;

namespace {
// QSym with one product structure constant perturbed.
class CorruptedQSym : public qsym::QSym {
protected:
    qsym::QSymElement compute_product(const Composition& a, const Composition& b) const override {
        auto p = QSym::compute_product(a, b);
        if (a == Composition{1} && b == Composition{2}) p.add_term({3}, 1);
        return p;
    }
};
}  // namespace

TEST_CASE("element arithmetic and tags") {
    auto a = qsym::M({1}) + qsym::M({1}) - 2 * qsym::M({1});
    CHECK(a.is_zero());
    CHECK(a.size() == 0);
    CHECK_THROWS_AS(qsym::M({1}) + nsym::H({1}), AlgebraMismatch);
    auto b = qsym::M({2, 1}) + qsym::M({1});
    CHECK(b.degrees() == std::set<int>{1, 3});
    CHECK(b.homogeneous_part(3) == qsym::M({2, 1}));
    CHECK_THROWS_AS(qsym::algebra().product(nsym::H({1}), nsym::H({1})), AlgebraMismatch);
}

TEST_CASE("iterated coproduct") {
    const auto& q = qsym::algebra();
    auto d2 = q.iterated_coproduct(qsym::M({1, 1}), 3);
    CHECK(d2.coeff({Composition{1}, Composition{1}, Composition()}) == 1);
    for (const auto& [t, c] : d2) CHECK(degree(t) == 2);
    auto d0 = q.iterated_coproduct(qsym::M({2, 1}), 1);
    CHECK(d0.size() == 1);
    CHECK(d0.coeff({Composition{2, 1}}) == 1);
    CHECK_THROWS(q.iterated_coproduct(qsym::M({1}), 0));
    CHECK(q.coproduct(q.unit()).coeff({Composition(), Composition()}) == 1);
}

TEST_CASE("antipode, grade sign and phi") {
    const auto& q = qsym::algebra();
    CHECK(q.antipode(q.unit()) == q.unit());
    CHECK(q.antipode(qsym::M({1})) == -qsym::M({1}));
    CHECK(q.antipode(qsym::M({2})) == -qsym::M({2}));
    // S(M_{a}) for two parts: Delta-based cross-check m(S (x) id)Delta = 0.
    CHECK(q.multiply(tensor_map(LinearMap<Composition, Composition>(qsym::kM, qsym::kM,
                                                                   [&](const Composition& c) { return q.antipode_on_basis(c); }),
                                identity_map<Composition>(qsym::kM), q.coproduct(qsym::M({2}))))
              .is_zero());
    CHECK(q.grade_sign(qsym::M({3, 2})) == -qsym::M({3, 2}));
    CHECK(q.grade_sign(qsym::M({1, 1})) == qsym::M({1, 1}));
    auto x = qsym::M({2, 1}) + qsym::M({1});
    CHECK(q.grade_sign(q.grade_sign(x)) == x);
    CHECK(q.phi(qsym::M({3, 2})) == 2 * qsym::M({3, 2}));
    CHECK(q.phi(qsym::M({3})) == 2 * qsym::M({3}));
    CHECK(q.phi(q.unit()) == q.unit());
}

TEST_CASE("Hopf axioms on QSym and NSym") {
    auto r = check_hopf_axioms(qsym::algebra(), 5);
    CHECK_MESSAGE(r.passed(), r.summary());
    auto rn = check_hopf_axioms(nsym::algebra(), 5);
    CHECK_MESSAGE(rn.passed(), rn.summary());
}

TEST_CASE("the verifier reports a corrupted product") {
    CorruptedQSym bad;
    auto r = check_hopf_axioms(bad, 4);
    CHECK_FALSE(r.passed());
    const Check* c = r.find("compatibility");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    CHECK(c->witness.find(" * ") != std::string::npos);
    CHECK_FALSE(r.find("associativity")->passed);
    CHECK(r.find("coassociativity")->passed);
}

TEST_CASE("pairing and adjoint") {
    CHECK(pairing(nsym::H({2, 1}), qsym::M({2, 1})) == 1);
    CHECK(pairing(nsym::H({3}), qsym::M({2, 1})) == 0);
    CHECK_THROWS(pairing(qsym::M({1}), qsym::M({1})));
    auto id = identity_map<Composition>(qsym::kM);
    auto basis = [](int n) { return compositions(n); };
    auto adj = adjoint(id, basis, 4);
    for (const auto& a : compositions_up_to(4)) CHECK(adj.on_basis(a) == nsym::H(a));
    auto twice = adjoint(adjoint(qsym::theta_map(), basis, 4), basis, 4);
    for (const auto& a : compositions_up_to(4)) CHECK(twice.on_basis(a) == qsym::theta_map().on_basis(a));
    CHECK_THROWS(adj.on_basis(Composition{5}));
}

TEST_CASE("degree cap") {
    CHECK(degree_cap() >= 1);
    CHECK_THROWS(set_degree_cap(9));
    int old = degree_cap();
    set_degree_cap(3);
    CHECK_THROWS_AS(require_degree(4, "test"), std::out_of_range);
    CHECK_NOTHROW(require_degree(3, "test"));
    set_degree_cap(old);
}
