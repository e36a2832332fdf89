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
 // Quasisymmetric functions. M is the computational basis; L, S and the peak
 // elements eta are reached by exact basis change.

#ifndef HOPFPEAK_QSYM_HPP
#define HOPFPEAK_QSYM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hopfpeak/composition.hpp"
#include "hopfpeak/hopf.hpp"

namespace hopfpeak::qsym {

using QSymElement = Element<Composition>;

inline const BasisTag kM{"qsym", "M"};
inline const BasisTag kL{"qsym", "L"};
inline const BasisTag kS{"qsym", "S"};
inline const BasisTag kEta{"qsym", "eta"};

class QSym : public HopfAlgebra<Composition> {
public:
    QSym() : HopfAlgebra(kM) {}
    std::vector<Composition> basis(int n) const override { return compositions(n); }

protected:
    QSymElement compute_product(const Composition& a, const Composition& b) const override;
    Tens compute_coproduct(const Composition& a) const override;
};

const QSym& algebra();

inline QSymElement M(const Composition& a) { return QSymElement(kM, a); }
inline QSymElement L(const Composition& a) { return QSymElement(kL, a); }
inline QSymElement S(const Composition& a) { return QSymElement(kS, a); }

// Row i: the basis element indexed by compositions(n)[i], written in M.
// basis is "M", "L" or "S"; "eta" lists the odd compositions of n instead.
RatMatrix to_M_matrix(std::string_view basis, int n);

QSymElement to_M(const QSymElement& a);
// Throws std::invalid_argument when a lies outside the span of the target
// family (only possible for "eta").
QSymElement from_M(const QSymElement& a, std::string_view basis);
QSymElement convert(const QSymElement& a, std::string_view basis);

// Product in any basis; the result is in the basis of a.
QSymElement product(const QSymElement& a, const QSymElement& b);

Rational zeta(const QSymElement& a);
HopfAlgebra<Composition>::Elem eta(const Composition& odd_beta);  // in M
std::vector<Composition> odd_compositions(int n);

// Rows eta_beta, beta odd of size n, in M coordinates over compositions(n).
RatMatrix peak_space(int n);
bool in_peak_algebra(const QSymElement& a);

QSymElement theta(const QSymElement& a);  // result in M
const LinearMap<Composition, Composition>& theta_map();

// The odd character nu = zeta-bar^{-1} zeta through its closed forms.
Rational odd_char_M(const Composition& beta);
Rational odd_char_L(const Composition& alpha);
Rational odd_char(const QSymElement& a);

}  // namespace hopfpeak::qsym

#endif  // HOPFPEAK_QSYM_HPP
