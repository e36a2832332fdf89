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
 // Characters of a graded connected Hopf algebra, the universal morphism into
 // QSym, and the odd-subalgebra and Theta-map machinery built on it.

#ifndef HOPFPEAK_CHARACTERS_HPP
#define HOPFPEAK_CHARACTERS_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpeak/hopf.hpp"
#include "hopfpeak/qsym.hpp"

namespace hopfpeak {

template <class K>
class Character {
public:
    using Fn = std::function<Rational(const K&)>;

    Character(const HopfAlgebra<K>& h, std::string name, Fn on_basis)
        : algebra_(&h), name_(std::move(name)), state_(std::make_shared<State>(std::move(on_basis))) {}

    const HopfAlgebra<K>& algebra() const { return *algebra_; }
    const std::string& name() const { return name_; }

    Rational operator()(const K& key) const {
        return state_->values.get(key, [&] { return state_->fn(key); });
    }

    Rational operator()(const Element<K>& a) const {
        algebra_->check(a);
        Rational s = 0;
        for (const auto& [k, c] : a) s += c * (*this)(k);
        return s;
    }

private:
    struct State {
        explicit State(Fn f) : fn(std::move(f)) {}
        Fn fn;
        Memo<K, Rational> values;
    };

    const HopfAlgebra<K>* algebra_;
    std::string name_;
    std::shared_ptr<State> state_;
};

template <class K>
Report check_multiplicative(const Character<K>& z, int n_max) {
    const auto& h = z.algebra();
    Report r("character " + z.name());
    r.record("unit", z(K{}) == 1, "zeta(1) != 1");
    auto all = basis_up_to(h, n_max);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (degree(a) == 0 || degree(b) == 0 || degree(a) + degree(b) > n_max) continue;
            r.record("multiplicative", z(h.product_on_basis(a, b)) == z(a) * z(b), to_string(a) + " * " + to_string(b));
        }
    return r;
}

// Throws std::invalid_argument with a witness when z fails multiplicativity
// up to the configured degree cap (or n_max when given).
template <class K>
Character<K> register_character(const HopfAlgebra<K>& h, std::string name, typename Character<K>::Fn fn,
                                int n_max = -1) {
    Character<K> z(h, std::move(name), std::move(fn));
    Report r = check_multiplicative(z, n_max < 0 ? degree_cap() : n_max);
    if (!r.passed()) throw std::invalid_argument("not a character: " + r.summary());
    return z;
}

inline const Character<Composition>& qsym_zeta() {
    static const Character<Composition> z(qsym::algebra(), "canonical",
                                          [](const Composition& a) { return qsym::zeta(qsym::M(a)); });
    return z;
}

template <class K>
Character<K> counit_character(const HopfAlgebra<K>& h) {
    return Character<K>(h, "counit", [](const K& k) { return degree(k) == 0 ? Rational(1) : Rational(0); });
}

template <class K>
void require_same_algebra(const Character<K>& a, const Character<K>& b) {
    if (&a.algebra() != &b.algebra()) throw AlgebraMismatch(a.algebra().tag(), b.algebra().tag());
}

template <class K>
Character<K> convolve(const Character<K>& a, const Character<K>& b) {
    require_same_algebra(a, b);
    return Character<K>(a.algebra(), "(" + a.name() + "." + b.name() + ")", [a, b](const K& k) {
        Rational s = 0;
        for (const auto& [kk, c] : a.algebra().coproduct_on_basis(k)) s += c * a(kk.first) * b(kk.second);
        return s;
    });
}

// (z^{-1} z)(h) = 0 in positive degree, solved for the term with h2 = 1.
template <class K>
class InverseEvaluator {
public:
    explicit InverseEvaluator(Character<K> z) : z_(std::move(z)) {}

    Rational operator()(const K& k) const {
        int n = degree(k);
        if (n == 0) return 1;
        return memo_.get(k, [&] {
            Rational s = 0;
            for (const auto& [kk, c] : z_.algebra().coproduct_on_basis(k))
                if (degree(kk.first) < n) s -= c * (*this)(kk.first) * z_(kk.second);
            return s;
        });
    }

private:
    Character<K> z_;
    Memo<K, Rational> memo_;
};

template <class K>
Character<K> inverse(const Character<K>& z) {
    auto eval = std::make_shared<InverseEvaluator<K>>(z);
    return Character<K>(z.algebra(), z.name() + "^-1", [eval](const K& k) { return (*eval)(k); });
}

template <class K>
Character<K> inverse_via_antipode(const Character<K>& z) {
    return Character<K>(z.algebra(), z.name() + "oS", [z](const K& k) { return z(z.algebra().antipode_on_basis(k)); });
}

template <class K>
Character<K> bar(const Character<K>& z) {
    return Character<K>(z.algebra(), "bar(" + z.name() + ")",
                        [z](const K& k) { return degree(k) % 2 ? -z(k) : z(k); });
}

template <class K>
Character<K> euler_character(const Character<K>& z) {
    return convolve(bar(z), z);
}

// nu = bar(z)^{-1} z.
template <class K>
Character<K> odd_character(const Character<K>& z) {
    return convolve(inverse(bar(z)), z);
}

template <class K>
bool characters_agree(const Character<K>& a, const Character<K>& b, int n_max) {
    for (const auto& k : basis_up_to(a.algebra(), n_max))
        if (a(k) != b(k)) return false;
    return true;
}

template <class K>
bool is_odd(const Character<K>& z, int n_max) { return characters_agree(bar(z), inverse(z), n_max); }

template <class K>
bool is_even(const Character<K>& z, int n_max) { return characters_agree(bar(z), z, n_max); }

// Psi(h) = sum_alpha zeta_alpha(h) M_alpha, with zeta_alpha evaluated through
// the coproduct one part at a time.
template <class K>
class UniversalMorphism {
public:
    explicit UniversalMorphism(Character<K> z)
        : zeta_(std::move(z)), state_(std::make_shared<State>()),
          map_(zeta_.algebra().tag(), qsym::kM, [z = zeta_, st = state_](const K& k) { return image(z, *st, k); },
               "psi") {}

    const Character<K>& zeta() const { return zeta_; }
    const LinearMap<K, Composition>& map() const { return map_; }
    qsym::QSymElement operator()(const Element<K>& a) const { return map_(a); }
    Rational zeta_alpha(const Composition& alpha, const K& k) const { return zeta_alpha(zeta_, *state_, alpha, k); }

private:
    struct State {
        Memo<std::pair<Composition, K>, Rational> values;
    };

    static Rational zeta_alpha(const Character<K>& z, const State& st, const Composition& alpha, const K& k) {
        if (alpha.empty()) return degree(k) == 0 ? Rational(1) : Rational(0);
        if (degree(k) != alpha.size()) return 0;
        return st.values.get({alpha, k}, [&] {
            Composition rest(std::vector<int>(alpha.parts.begin() + 1, alpha.parts.end()));
            Rational s = 0;
            for (const auto& [kk, c] : z.algebra().coproduct_on_basis(k))
                if (degree(kk.first) == alpha.parts[0]) s += c * z(kk.first) * zeta_alpha(z, st, rest, kk.second);
            return s;
        });
    }

    static qsym::QSymElement image(const Character<K>& z, const State& st, const K& k) {
        qsym::QSymElement out(qsym::kM);
        for (const auto& alpha : compositions(degree(k))) out.add_term(alpha, zeta_alpha(z, st, alpha, k));
        return out;
    }

    Character<K> zeta_;
    std::shared_ptr<State> state_;
    LinearMap<K, Composition> map_;
};

template <class K>
UniversalMorphism<K> universal_psi(const Character<K>& z) {
    return UniversalMorphism<K>(z);
}

// (id (x) (chi - eps) (x) id) Delta^2 (a) == 0, with chi the Euler character.
template <class K>
bool ds_check(const Character<K>& z, const Element<K>& a, std::string* witness = nullptr) {
    const auto& h = z.algebra();
    auto chi = euler_character(z);
    Tensor<K> out(h.tag());
    for (const auto& [t, c] : h.iterated_coproduct(a, 3)) {
        Rational v = chi(t[1]) - h.counit_on_basis(t[1]);
        if (!v.is_zero()) out.add_term({t[0], t[2]}, c * v);
    }
    if (!out.is_zero() && witness) *witness = to_string(out);
    return out.is_zero();
}

template <class K>
struct OddSubalgebraBasis {
    std::vector<Element<K>> kernel;  // basis of ker Psi_n
    std::vector<Element<K>> lifts;   // preimages of a basis of Img Psi_n intersected with Pi_n
    std::vector<Element<K>> all() const {
        auto v = kernel;
        v.insert(v.end(), lifts.begin(), lifts.end());
        return v;
    }
};

template <class K>
OddSubalgebraBasis<K> odd_subalgebra_basis(const UniversalMorphism<K>& psi, int n) {
    require_degree(n, "odd subalgebra basis");
    const auto& h = psi.zeta().algebra();
    auto basis = h.basis(n);
    auto comps = compositions(n);
    RatMatrix p = map_matrix(psi.map(), basis, comps);
    OddSubalgebraBasis<K> out;
    RatMatrix ker = left_nullspace(p);
    for (std::size_t i = 0; i < ker.rows(); ++i) out.kernel.push_back(from_coordinates(ker.row(i), basis, h.tag()));
    RatMatrix z = subspace_intersection(row_basis(p), qsym::peak_space(n));
    for (std::size_t i = 0; i < z.rows(); ++i) {
        auto x = solve_left(p, z.row(i));
        if (!x) throw std::logic_error("odd subalgebra strategy: lift failed");
        out.lifts.push_back(from_coordinates(*x, basis, h.tag()));
    }
    return out;
}

template <class K>
RatMatrix coordinate_rows(const std::vector<Element<K>>& elems, const std::vector<K>& basis) {
    RatMatrix m(0, basis.size());
    for (const auto& e : elems) m.append_row(coordinates(e, basis));
    return m;
}

// The commuting square Psi o Theta = Theta_QSym o Psi and the character form
// zeta o Theta = nu o Psi on the given basis elements.
template <class K>
Report verify_theta_on(const UniversalMorphism<K>& psi, const LinearMap<K, K>& theta, const std::vector<K>& keys) {
    const auto& h = psi.zeta().algebra();
    Report r("theta criterion for " + to_string(h.tag()));
    for (const auto& k : keys) {
        auto lhs = psi(theta.on_basis(k));
        auto rhs = qsym::theta(psi.map().on_basis(k));
        r.record("square", lhs == rhs, to_string(k) + ": " + to_string(lhs) + " != " + to_string(rhs));
        Rational a = psi.zeta()(theta.on_basis(k));
        Rational b = qsym::odd_char(psi.map().on_basis(k));
        r.record("character", a == b, to_string(k) + ": " + a.str() + " != " + b.str());
    }
    return r;
}

// verify_theta_on every basis element of degree <= n_max, plus the
// Hopf-morphism property of Theta.
template <class K>
Report verify_theta(const UniversalMorphism<K>& psi, const LinearMap<K, K>& theta, int n_max) {
    const auto& h = psi.zeta().algebra();
    Report r = verify_theta_on(psi, theta, basis_up_to(h, n_max));
    r.merge(check_hopf_morphism(h, h, theta, n_max), "hopf ");
    return r;
}

template <class K>
struct ConjugationResult {
    std::optional<LinearMap<K, K>> theta;
    std::optional<K> witness;  // basis element whose Theta_QSym image leaves Img(beta)
    std::string detail;
};

// beta^{-1} Theta_QSym beta when Img(beta) is Theta_QSym-stable up to n_max.
// Throws std::invalid_argument when beta is not injective in some degree.
template <class K, class BasisFn>
ConjugationResult<K> conjugate_theta(const LinearMap<K, Composition>& beta, BasisFn basis, int n_max) {
    ConjugationResult<K> out;
    auto table = std::make_shared<std::map<K, Element<K>>>();
    for (int n = 0; n <= n_max; ++n) {
        std::vector<K> b = basis(n);
        if (b.empty()) continue;
        auto comps = compositions(n);
        RatMatrix m = map_matrix(beta, b, comps);
        if (rank(m) != b.size())
            throw std::invalid_argument("conjugation needs an injective map; degree " + std::to_string(n));
        for (const auto& k : b) {
            auto target = qsym::theta(beta.on_basis(k));
            auto x = solve_left(m, coordinates(target, comps));
            if (!x) {
                out.witness = k;
                out.detail = "Theta_QSym(beta(" + to_string(k) + ")) = " + to_string(target) + " leaves the image";
                return out;
            }
            (*table)[k] = from_coordinates(*x, b, beta.domain());
        }
    }
    out.theta = LinearMap<K, K>(
        beta.domain(), beta.domain(),
        [table](const K& k) {
            auto it = table->find(k);
            if (it == table->end()) throw std::out_of_range("conjugated theta queried above its degree bound");
            return it->second;
        },
        "conj_theta");
    return out;
}

}  // namespace hopfpeak

#endif  // HOPFPEAK_CHARACTERS_HPP
