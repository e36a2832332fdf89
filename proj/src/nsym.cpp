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

#include "hopfpeak/nsym.hpp"

#include <stdexcept>

#include "hopfpeak/qsym.hpp"

namespace hopfpeak::nsym {

NSymElement NSym::compute_product(const Composition& a, const Composition& b) const {
    return NSymElement(kH, concat(a, b));
}

NSym::Tens NSym::compute_coproduct(const Composition& a) const {
    Tens out(kH);
    out.add_term({Composition(), Composition()}, 1);
    for (int part : a.parts) {
        Tens gen(kH);
        for (int i = 0; i <= part; ++i) {
            Composition left = i ? Composition{i} : Composition();
            Composition right = part - i ? Composition{part - i} : Composition();
            gen.add_term({left, right}, 1);
        }
        Tens next(kH);
        for (const auto& [x, cx] : out)
            for (const auto& [y, cy] : gen) next.add_term({concat(x.first, y.first), concat(x.second, y.second)}, cx * cy);
        out = std::move(next);
    }
    return out;
}

const NSym& algebra() {
    static const NSym h;
    return h;
}

namespace {
// Row i: R_{compositions(n)[i]} in H coordinates, the inverse transpose of L-in-M.
const RatMatrix& ribbon_matrix(int n) {
    static const Memo<int, RatMatrix> cache;
    return cache.get(n, [n] { return inverse(qsym::to_M_matrix("L", n).transpose()); });
}

void check_nsym(const NSymElement& a) {
    if (a.tag() != kH && a.tag() != kR) throw AlgebraMismatch(a.tag(), kH);
}
}  // namespace

NSymElement to_H(const NSymElement& a) {
    check_nsym(a);
    if (a.tag() == kH) return a;
    NSymElement out(kH);
    for (int n : a.degrees()) {
        auto basis = compositions(n);
        out += from_coordinates(coordinates(a.homogeneous_part(n), basis) * ribbon_matrix(n), basis, kH);
    }
    return out;
}

NSymElement from_H(const NSymElement& a, std::string_view basis) {
    a.require_tag(kH);
    if (basis == "H") return a;
    if (basis != "R") throw std::invalid_argument("unknown NSym basis '" + std::string(basis) + "'");
    NSymElement out(kR);
    for (int n : a.degrees()) {
        auto comps = compositions(n);
        // x * ribbon = a  =>  x = a * ribbon^{-1} = a * L^T.
        out += from_coordinates(coordinates(a.homogeneous_part(n), comps) * qsym::to_M_matrix("L", n).transpose(),
                                comps, kR);
    }
    return out;
}

NSymElement theta_generator(int n) {
    if (n == 0) return H(Composition());
    NSymElement r(kR);
    for (int k = 0; k < n; ++k) r.add_term(hook(k, n), 2);
    return to_H(r);
}

const LinearMap<Composition, Composition>& theta_map() {
    static const LinearMap<Composition, Composition> map(
        kH, kH,
        [](const Composition& a) {
            NSymElement out = H(Composition());
            for (int part : a.parts) out = algebra().product(out, theta_generator(part));
            return out;
        },
        "theta_nsym");
    return map;
}

NSymElement theta(const NSymElement& a) { return theta_map()(to_H(a)); }

}  // namespace hopfpeak::nsym
