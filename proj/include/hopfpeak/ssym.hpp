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
 // The Malvenuto-Reutenauer Hopf algebra of permutations and its graded dual,
 // the descent map to QSym, and the family of Theta maps built from a
 // constructor function on pairs of permutations.

#ifndef HOPFPEAK_SSYM_HPP
#define HOPFPEAK_SSYM_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hopfpeak/characters.hpp"
#include "hopfpeak/nsym.hpp"
#include "hopfpeak/permutation.hpp"
#include "hopfpeak/qsym.hpp"

namespace hopfpeak::ssym {

using SSymElement = Element<Permutation>;

inline const BasisTag kF{"ssym", "F"};
inline const BasisTag kM{"ssym", "M"};
inline const BasisTag kFs{"ssym*", "F*"};
inline const BasisTag kMs{"ssym*", "M*"};

// F basis: shifted shuffles and standardized cuts.
class SSym : public HopfAlgebra<Permutation> {
public:
    SSym() : HopfAlgebra(kF) {}
    std::vector<Permutation> basis(int n) const override { return permutations(n); }

protected:
    SSymElement compute_product(const Permutation& a, const Permutation& b) const override;
    Tens compute_coproduct(const Permutation& a) const override;
};

// F* basis of the graded dual.
class SSymDual : public HopfAlgebra<Permutation> {
public:
    SSymDual() : HopfAlgebra(kFs) {}
    std::vector<Permutation> basis(int n) const override { return permutations(n); }

protected:
    SSymElement compute_product(const Permutation& a, const Permutation& b) const override;
    Tens compute_coproduct(const Permutation& a) const override;
};

const SSym& algebra();
const SSymDual& dual_algebra();

inline SSymElement F(const Permutation& s) { return SSymElement(kF, s); }
inline SSymElement M(const Permutation& s) { return SSymElement(kM, s); }
inline SSymElement Fs(const Permutation& s) { return SSymElement(kFs, s); }
inline SSymElement Ms(const Permutation& s) { return SSymElement(kMs, s); }

BasisTag tag_for(std::string_view basis);  // F, M, F* or M*

// Basis changes within SSym (F, M) and within the dual (F*, M*).
SSymElement convert(const SSymElement& a, std::string_view basis);
SSymElement to_F(const SSymElement& a);
SSymElement to_Fs(const SSymElement& a);

// Products and coproducts in any basis; results stay in the basis of a.
SSymElement product(const SSymElement& a, const SSymElement& b);
Tensor<Permutation> coproduct(const SSymElement& a);

Tensor<Permutation> M_coproduct(const Permutation& s);  // splits at global descents
SSymElement dual_product_Mstar(const Permutation& s, const Permutation& t);

// D(F_s) = L_{Des(s)}, written in M.
const LinearMap<Permutation, Composition>& descent_map();
qsym::QSymElement descent(const SSymElement& a);
// Adjoint of D, from NSym (H) to the dual (F*).
const LinearMap<Composition, Permutation>& descent_adjoint();
// H_alpha -> F_{1_{alpha_1}} ... F_{1_{alpha_k}}.
const LinearMap<Composition, Permutation>& nsym_embedding();

// F_s -> F*_{s^-1} and back.
SSymElement self_duality(const SSymElement& a);
SSymElement self_duality_inverse(const SSymElement& a);

const Character<Permutation>& zeta();
SSymElement odd_char(int n);  // sum of 2 F*_s over peak-free s
SSymElement eta_perm(const Permutation& odd_s);  // in M
std::vector<SSymElement> odd_basis(int n);       // in F

// f(s, t) for s, t of equal degree.
class ThetaConstructor {
public:
    using Fn = std::function<Rational(const Permutation&, const Permutation&)>;

    // Throws std::invalid_argument with a witness pair when f violates
    // f(1_n, t) = 2 [peak(t) empty] or f(s, t) = f(t^-1, s^-1) up to n_max.
    ThetaConstructor(Fn f, std::string name, int n_max = -1);
    static ThetaConstructor unchecked(Fn f, std::string name);

    // f(s, t) = 2 [peak(s^-1) empty and peak(t) empty].
    static const ThetaConstructor& default_constructor();

    // Listed values override the default one; validated like the constructor.
    static ThetaConstructor from_table(const std::vector<std::tuple<Permutation, Permutation, Rational>>& table,
                                       std::string name, int n_max = -1);

    Rational operator()(const Permutation& s, const Permutation& t) const { return f_(s, t); }
    const std::string& name() const { return name_; }

    Report validate(int n_max) const;

private:
    ThetaConstructor() = default;
    Fn f_;
    std::string name_;
};

Rational f_peak(const Permutation& s, const Permutation& t);

// The dual map Theta* with entries <Theta*(F*_s), F_r>, computed by the
// double induction on degree and inversion count.
class ThetaStar {
public:
    explicit ThetaStar(ThetaConstructor f);
    ThetaStar(const ThetaStar&) = delete;
    ThetaStar& operator=(const ThetaStar&) = delete;

    const ThetaConstructor& constructor() const { return f_; }

    // Throws std::logic_error when the recursion revisits an open query.
    Rational entry(const Permutation& s, const Permutation& r) const;
    // Rows s and columns r both in lexicographic order.
    RatMatrix matrix(int n) const;

    SSymElement apply_dual(const SSymElement& a) const;  // Theta*, on F* or M*
    SSymElement apply(const SSymElement& a) const;       // Theta, on F or M
    const LinearMap<Permutation, Permutation>& dual_map() const { return *dual_map_; }  // on F*
    const LinearMap<Permutation, Permutation>& map() const { return *map_; }            // on F

private:
    Rational compute(const Permutation& s, const Permutation& r) const;
    Rational lower_sum(const Permutation& s, const Permutation& r) const;  // sum over g <= s

    ThetaConstructor f_;
    mutable std::recursive_mutex lock_;
    mutable std::map<std::pair<Permutation, Permutation>, Rational> entries_;
    mutable std::map<std::pair<Permutation, Permutation>, Rational> lower_;
    mutable std::vector<std::pair<Permutation, Permutation>> open_;
    std::shared_ptr<LinearMap<Permutation, Permutation>> dual_map_, map_;
};

const ThetaStar& default_theta();

// The four equivalent Theta-map conditions, self-adjointness, and the
// Hopf-morphism property, each reported separately.
Report verify_ssym_theta(const ThetaStar& t, int n_max);

// <Theta*(F*_s), F_{t^-1}> = <Theta*(F*_t), F_{s^-1}> for all s, t.
Report self_adjointness(const ThetaStar& t, int n_max);

// Faces of the cube relating NSym, SSym, Sym and QSym with their Theta maps.
Report cube_report(const ThetaStar& t, int n_max);

}  // namespace hopfpeak::ssym

#endif  // HOPFPEAK_SSYM_HPP
