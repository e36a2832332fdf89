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
 // Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any fail.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle/poly_oracle.hpp"

#include "hopfpeak/characters.hpp"
#include "hopfpeak/dsym.hpp"
#include "hopfpeak/nsym.hpp"
#include "hopfpeak/qsym.hpp"
#include "hopfpeak/ssym.hpp"
#include "hopfpeak/sym.hpp"
#include "hopfpeak/vhopf.hpp"

using namespace hopfpeak;

namespace {

struct Cli {
    int code;
    std::string out;
};

Cli cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str()};
}

Permutation P(const char* d) { return perm_from_digits(d); }

std::string degree3_table(const Rational& a, const Rational& b, const Rational& c) {
    std::vector<std::vector<Rational>> rows{
        {2, 0, 2, 2, 0, 2},
        {0, a, b, 4 - a, 4 - b, 0},
        {2, b, c, 2 - b, 2 - c, 2},
        {2, 4 - a, 2 - b, a - 2, b, 2},
        {0, 4 - b, 2 - c, b, c + 2, 0},
        {2, 0, 2, 2, 0, 2},
    };
    const char* labels[] = {"123", "132", "213", "231", "312", "321"};
    std::string s = "\t123\t132\t213\t312\t231\t321\n";
    for (std::size_t i = 0; i < 6; ++i) {
        s += labels[i];
        for (const auto& x : rows[i]) s += "\t" + x.str();
        s += "\n";
    }
    return s;
}

bool criterion_tables() {
    auto d2 = cli_run({"table", "--which", "ssym-theta", "--degree", "2"});
    auto d3 = cli_run({"table", "--which", "ssym-theta", "--degree", "3", "--constructor", "default"});
    return d2.code == 0 && d2.out == "\t12\t21\n12\t2\t2\n21\t2\t2\n" && d3.code == 0 && d3.out == degree3_table(0, 0, 2);
}

bool criterion_m32() {
    auto m32 = qsym::M({3, 2});
    return qsym::theta(m32).is_zero() && qsym::algebra().phi(m32) == 2 * m32;
}

bool criterion_hopf_axioms() {
    bool ok = check_hopf_axioms(qsym::algebra(), 5).passed();
    ok = ok && check_hopf_axioms(nsym::algebra(), 5).passed();
    ok = ok && check_hopf_axioms(sym::algebra(), 5).passed();
    ok = ok && check_hopf_morphism(sym::algebra(), qsym::algebra(), sym::iota_map(), 5, "iota").passed();
    ok = ok && check_hopf_axioms(ssym::algebra(), 5).passed();
    ok = ok && check_hopf_axioms(ssym::dual_algebra(), 5).passed();
    ok = ok && check_hopf_axioms(vhopf::algebra(), 5).passed();
    return ok && check_hopf_axioms(dsym::algebra(), 4).passed();
}

bool criterion_descent_and_cube() {
    const auto& t = ssym::default_theta();
    bool ok = true;
    for (int n = 0; n <= 4; ++n)
        for (const auto& s : permutations(n))
            ok = ok && ssym::descent(t.apply(ssym::F(s))) == qsym::theta(ssym::descent(ssym::F(s)));
    return ok && ssym::cube_report(t, 4).passed();
}

bool criterion_conditions() {
    const auto& t = ssym::default_theta();
    auto r = ssym::verify_ssym_theta(t, 4);
    for (const char* name : {"(1) D.Theta = Theta_QSym.D", "(2) zeta_SSym.Theta = nu.D",
                             "(3) Theta*(M*_1n) = odd character", "(4) D*.Theta_NSym = Theta*.D*"}) {
        const Check* c = r.find(name);
        if (!c || !c->passed || c->cases == 0) return false;
    }
    return r.passed() && ssym::self_adjointness(t, 5).passed();
}

bool criterion_peak_lemma() {
    std::size_t cases = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& s : permutations(n))
            for (int pos : global_descents(s).positions) {
                if (!peak_free_count_lemma(s, pos).holds()) return false;
                ++cases;
            }
    return cases > 0;
}

bool criterion_odd_subalgebras() {
    for (const char* alg : {"qsym", "ssym", "v"})
        if (cli_run({"verify", "--suite", "odd", "--algebra", alg, "--degree", "4"}).code != 0) return false;
    // Kernel of Psi has dimension n! - 2^(n-1); the peak part adds a Fibonacci number.
    const std::size_t fib[] = {1, 1, 1, 2, 3};
    for (int n = 1; n <= 4; ++n) {
        std::size_t odd_perms = 0;
        for (const auto& s : permutations(n)) odd_perms += is_odd_perm(s) ? 1 : 0;
        std::size_t kernel = factorial(n).value().get_num().get_ui() - (1u << (n - 1));
        if (odd_perms != fib[n] || qsym::odd_compositions(n).size() != fib[n]) return false;
        if (ssym::odd_basis(n).size() != kernel + fib[n] || vhopf::odd_basis(n).size() != kernel + fib[n])
            return false;
    }
    return true;
}

bool criterion_nsym() {
    const std::size_t fib[] = {1, 1, 1, 2, 3, 5};
    for (int n = 0; n <= 5; ++n) {
        auto basis = compositions(n);
        for (const auto& a : basis)
            for (const auto& b : basis)
                if (pairing(nsym::theta(nsym::H(a)), qsym::M(b)) != pairing(nsym::H(a), qsym::theta(qsym::M(b))))
                    return false;
        if (rank(map_matrix(nsym::theta_map(), basis, basis)) != fib[n]) return false;
    }
    return true;
}

bool criterion_dsym() {
    auto r = dsym::q_identity_check(4);
    const Check* alt = r.find("alternating sum");
    if (!alt || !alt->passed || alt->cases != 14) return false;
    if (dsym::q(1, 1) != dsym::product(dsym::q(1, 0), dsym::q(0, 1))) return false;
    for (const auto& l : basis_up_to(dsym::algebra(), 4))
        if (dsym::antipode_via_e(dsym::m(l)) != dsym::algebra().antipode_on_basis(l)) return false;
    return true;
}

template <class K>
bool zeta_through_psi(const Character<K>& z, int n_max) {
    auto psi = universal_psi(z);
    for (const auto& k : basis_up_to(z.algebra(), n_max))
        if (qsym_zeta()(psi.map().on_basis(k)) != z(k)) return false;
    return true;
}

bool criterion_universal_morphism() {
    Character<Partition> zsym(sym::algebra(), "canonical",
                              [](const Partition& l) { return sym::zeta(sym::SymElement(sym::km, l)); });
    bool ok = zeta_through_psi(qsym_zeta(), 4) && zeta_through_psi(zsym, 4) && zeta_through_psi(ssym::zeta(), 4) &&
              zeta_through_psi(vhopf::zeta(), 4) && zeta_through_psi(dsym::zeta(), 4);
    auto ps = universal_psi(ssym::zeta());
    auto pv = universal_psi(vhopf::zeta());
    for (int n = 0; n <= 4; ++n)
        for (const auto& s : permutations(n)) {
            ok = ok && ps.map().on_basis(s) == ssym::descent_map().on_basis(s);
            ok = ok && pv.map().on_basis(s) == qsym::to_M(qsym::S(Composition(block_sizes(s))));
        }
    return ok;
}

bool criterion_quasi_shuffle() {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k) {
            for (const auto& a : compositions(k))
                for (const auto& b : compositions(n - k)) {
                    auto poly = oracle::multiply(oracle::monomial_qsym(a, n), oracle::monomial_qsym(b, n));
                    auto prod = qsym::algebra().product_on_basis(a, b);
                    for (const auto& g : compositions(n))
                        if (prod.coeff(g) != oracle::qsym_coefficient(poly, g, n)) return false;
                }
            for (const auto& a : bipartitions(k))
                for (const auto& b : bipartitions(n - k)) {
                    auto poly = oracle::multiply(oracle::monomial_dsym(a, n), oracle::monomial_dsym(b, n));
                    auto prod = dsym::algebra().product_on_basis(a, b);
                    for (const auto& g : bipartitions(n))
                        if (prod.coeff(g) != oracle::dsym_coefficient(poly, g, n)) return false;
                }
        }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* text;
        std::function<bool()> check;
    };
    std::vector<Criterion> all{
        {"Theta* tables: degree 2 is all 2s, degree 3 default matches the symbolic table at (0,0,2)", criterion_tables},
        {"Theta_QSym(M32) = 0 and Phi(M32) = 2 M32", criterion_m32},
        {"Hopf axioms: QSym, NSym, Sym in QSym, SSym, V to degree 5, DSym to degree 4", criterion_hopf_axioms},
        {"D.Theta_SSym = Theta_QSym.D on F_s and the cube commutes, n <= 4", criterion_descent_and_cube},
        {"four Theta* conditions hold for n <= 4, self-adjointness for n <= 5", criterion_conditions},
        {"peak-free counting identity at every global descent, n <= 6", criterion_peak_lemma},
        {"odd subalgebras: strategy spans the odd bases, Dehn-Sommerville, Theta images inside, n <= 4",
         criterion_odd_subalgebras},
        {"Theta_NSym adjoint to Theta_QSym for n <= 5 with image dimensions 1,1,2,3,5", criterion_nsym},
        {"DSym: alternating q identity, q(1,1) = q(1,0)q(0,1), e-antipode agrees to degree 4", criterion_dsym},
        {"zeta_QSym.Psi = zeta on every algebra; Psi is D on SSym and the S map on V, n <= 4",
         criterion_universal_morphism},
        {"QSym and DSym monomial products match polynomial expansion to degree 4", criterion_quasi_shuffle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool ok = false;
        try {
            ok = all[i].check();
        } catch (const std::exception& e) {
            std::cout << "  exception: " << e.what() << "\n";
        }
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << all[i].text << "\n";
    }
    std::cout << (all.size() - static_cast<std::size_t>(failed)) << "/" << all.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
