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
 // The Hopf algebra V on permutations: products shuffle global-descent
 // blocks and coproducts deconcatenate them.

#ifndef HOPFPEAK_VHOPF_HPP
#define HOPFPEAK_VHOPF_HPP

#include <string_view>
#include <vector>

#include "hopfpeak/characters.hpp"
#include "hopfpeak/permutation.hpp"
#include "hopfpeak/qsym.hpp"

namespace hopfpeak::vhopf {

using VElement = Element<Permutation>;

inline const BasisTag kV{"v", "v"};
inline const BasisTag kMv{"v", "Mv"};
inline const BasisTag kEtav{"v", "etav"};

class VHopf : public HopfAlgebra<Permutation> {
public:
    VHopf() : HopfAlgebra(kV) {}
    std::vector<Permutation> basis(int n) const override { return permutations(n); }

protected:
    VElement compute_product(const Permutation& a, const Permutation& b) const override;
    Tens compute_coproduct(const Permutation& a) const override;
};

const VHopf& algebra();

inline VElement v(const Permutation& s) { return VElement(kV, s); }
inline VElement Mv(const Permutation& s) { return VElement(kMv, s); }
inline VElement etav(const Permutation& odd_s) { return VElement(kEtav, odd_s); }

BasisTag tag_for(std::string_view basis);  // v, Mv or etav

VElement to_v(const VElement& a);
// Throws std::invalid_argument when a leaves the span of the etav family.
VElement convert(const VElement& a, std::string_view basis);
VElement product(const VElement& a, const VElement& b);

const Character<Permutation>& zeta();  // 1/k! on v with k blocks
// v_s -> S_{block sizes}, written in M.
const LinearMap<Permutation, Composition>& psi_map();
qsym::QSymElement psi(const VElement& a);

VElement eta_v(const Permutation& odd_s);   // in v
std::vector<VElement> odd_basis(int n);     // in v

// Zero on ker psi and the conjugate of Theta_QSym on span{M_s : s DI}.
const LinearMap<Permutation, Permutation>& theta_map();
VElement theta(const VElement& a);

}  // namespace hopfpeak::vhopf

#endif  // HOPFPEAK_VHOPF_HPP
