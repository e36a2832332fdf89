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
 // Symmetric functions realized inside QSym. The monomial basis m carries the
 // structure constants, which are computed through the embedding into QSym.

#ifndef HOPFPEAK_SYM_HPP
#define HOPFPEAK_SYM_HPP

#include <string_view>
#include <vector>

#include "hopfpeak/hopf.hpp"
#include "hopfpeak/nsym.hpp"
#include "hopfpeak/partition.hpp"
#include "hopfpeak/qsym.hpp"

namespace hopfpeak::sym {

using SymElement = Element<Partition>;

inline const BasisTag km{"sym", "m"};
inline const BasisTag kp{"sym", "p"};
inline const BasisTag ke{"sym", "e"};
inline const BasisTag kh{"sym", "h"};
inline const BasisTag kq{"sym", "q"};

class Sym : public HopfAlgebra<Partition> {
public:
    Sym() : HopfAlgebra(km) {}
    std::vector<Partition> basis(int n) const override { return partitions(n); }

protected:
    SymElement compute_product(const Partition& a, const Partition& b) const override;
    Tens compute_coproduct(const Partition& a) const override;
};

const Sym& algebra();

BasisTag tag_for(std::string_view basis);
inline SymElement elem(std::string_view basis, const Partition& l) { return SymElement(tag_for(basis), l); }

// Row i: the element of `basis` indexed by partitions(n)[i], in m coordinates.
// basis is one of m, p, e, h, q; q_lambda spans only part of Sym_n.
RatMatrix to_m_matrix(std::string_view basis, int n);

SymElement to_m(const SymElement& a);
SymElement from_m(const SymElement& a, std::string_view basis);  // m, p, e or h
SymElement convert(const SymElement& a, std::string_view basis);

qsym::QSymElement embed_iota(const SymElement& a);
const LinearMap<Partition, Composition>& iota_map();  // on m
bool is_symmetric(const qsym::QSymElement& a);
// Throws std::invalid_argument when a is not symmetric.
SymElement extract_m(const qsym::QSymElement& a);

// Result in the basis of a when that is m, p, e or h; otherwise in m.
SymElement theta(const SymElement& a);
const LinearMap<Partition, Partition>& theta_map();  // on m
SymElement q_gen(int n);  // in p

SymElement pi_projection(const nsym::NSymElement& a);  // in h
const LinearMap<Composition, Partition>& pi_map();     // H to m

Rational zeta(const SymElement& a);

}  // namespace hopfpeak::sym

#endif  // HOPFPEAK_SYM_HPP
