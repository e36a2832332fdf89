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
 // Diagonally symmetric functions in two variable sets x, y, indexed by
 // bipartitions, with the h, e, p and q families built on the m basis.

#ifndef HOPFPEAK_DSYM_HPP
#define HOPFPEAK_DSYM_HPP

#include <string_view>
#include <vector>

#include "hopfpeak/characters.hpp"
#include "hopfpeak/partition.hpp"
#include "hopfpeak/sym.hpp"

namespace hopfpeak::dsym {

using DSymElement = Element<Bipartition>;

inline const BasisTag km{"dsym", "m"};
inline const BasisTag kh{"dsym", "h"};
inline const BasisTag ke{"dsym", "e"};
inline const BasisTag kp{"dsym", "p"};

class DSym : public HopfAlgebra<Bipartition> {
public:
    DSym() : HopfAlgebra(km) {}
    std::vector<Bipartition> basis(int n) const override { return bipartitions(n); }

protected:
    DSymElement compute_product(const Bipartition& a, const Bipartition& b) const override;
    Tens compute_coproduct(const Bipartition& a) const override;
};

const DSym& algebra();

BasisTag tag_for(std::string_view basis);  // m, h, e or p
inline DSymElement elem(std::string_view basis, const Bipartition& l) { return DSymElement(tag_for(basis), l); }
inline DSymElement m(const Bipartition& l) { return DSymElement(km, l); }

// Coefficient of s^a t^b in prod_{i<=width} 1/(1 - x_i s - y_i t) (kind 'h'),
// prod (1 + x_i s + y_i t) (kind 'e') or their product (kind 'q'), expanded
// in m. width < 0 means a + b, which already determines the result.
DSymElement he_expand(char kind, int a, int b, int width = -1);
DSymElement h(int a, int b);
DSymElement e(int a, int b);

DSymElement to_m(const DSymElement& a);
DSymElement convert(const DSymElement& a, std::string_view basis);
DSymElement product(const DSymElement& a, const DSymElement& b);

// S(e(a,b)) = (-1)^{a+b} h(a,b), extended multiplicatively; result in m.
DSymElement antipode_via_e(const DSymElement& a);

const LinearMap<Bipartition, Bipartition>& theta_map();  // Phi on m
DSymElement theta(const DSymElement& a);
DSymElement q(int a, int b);                 // Theta(e(a,b)), in m
DSymElement q_convolution(int a, int b);     // sum h(i,k) e(j,l), in m

// p sets y = x; i places a partition on the top row.
const LinearMap<Bipartition, Partition>& p_map();
const LinearMap<Partition, Bipartition>& i_map();
const LinearMap<Bipartition, Bipartition>& theta_alt_map();  // i . Theta_Sym . p

// zeta(m_l) = 1 when l has at most one column.
const Character<Bipartition>& zeta();

// The alternating q identity for (n, m) != (0, 0), n + m <= n_max, and
// generation of the Theta image by odd-weight q's.
Report q_identity_check(int n_max);

}  // namespace hopfpeak::dsym

#endif  // HOPFPEAK_DSYM_HPP
