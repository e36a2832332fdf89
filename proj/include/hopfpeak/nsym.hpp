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
 // Noncommutative symmetric functions, graded dual to QSym through
 // <H_a, M_b> = delta. H is the computational basis, R the ribbon basis.

#ifndef HOPFPEAK_NSYM_HPP
#define HOPFPEAK_NSYM_HPP

#include <string_view>
#include <vector>

#include "hopfpeak/composition.hpp"
#include "hopfpeak/hopf.hpp"

namespace hopfpeak::nsym {

using NSymElement = Element<Composition>;

inline const BasisTag kH{"nsym", "H"};
inline const BasisTag kR{"nsym", "R"};

class NSym : public HopfAlgebra<Composition> {
public:
    NSym() : HopfAlgebra(kH) {}
    std::vector<Composition> basis(int n) const override { return compositions(n); }

protected:
    NSymElement compute_product(const Composition& a, const Composition& b) const override;
    Tens compute_coproduct(const Composition& a) const override;
};

const NSym& algebra();

inline NSymElement H(const Composition& a) { return NSymElement(kH, a); }
inline NSymElement R(const Composition& a) { return NSymElement(kR, a); }

NSymElement to_H(const NSymElement& a);
NSymElement from_H(const NSymElement& a, std::string_view basis);

NSymElement theta_generator(int n);  // Theta(H_n), in H
NSymElement theta(const NSymElement& a);
const LinearMap<Composition, Composition>& theta_map();

}  // namespace hopfpeak::nsym

#endif  // HOPFPEAK_NSYM_HPP
