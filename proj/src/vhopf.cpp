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

#include "hopfpeak/vhopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfpeak::vhopf {

namespace {

Composition sizes_of(const Permutation& s) { return Composition(block_sizes(s)); }

Permutation di_of(const Composition& a) { return di_perm(a.parts); }

// M_{1_alpha} = sum_beta d_beta v_{1_beta}, where M_alpha = sum_beta d_beta S_beta in QSym.
const VElement& M_in_v(const Permutation& s) {
    static const Memo<Permutation, VElement> memo;
    return memo.get(s, [&] {
        VElement out(kV);
        if (!is_di(s)) {
            out.add_term(s, 1);
            out.add_term(di_of(sizes_of(s)), -1);
            return out;
        }
        for (const auto& [b, c] : qsym::from_M(qsym::M(sizes_of(s)), "S")) out.add_term(di_of(b), c);
        return out;
    });
}

VElement etav_in_Mv(const Permutation& odd_s) {
    if (!is_odd_perm(odd_s)) throw std::invalid_argument("eta needs an odd permutation, got " + to_string(odd_s));
    VElement out(kMv);
    for (const auto& a : coarsenings(sizes_of(odd_s))) out.add_term(di_of(a), pow2(a.length()));
    return out;
}

VElement v_in_Mv(const Permutation& s) {
    VElement out(kMv);
    if (!is_di(s)) out.add_term(s, 1);
    for (const auto& [b, c] : qsym::to_M(qsym::S(sizes_of(s)))) out.add_term(di_of(b), c);
    return out;
}

std::vector<Permutation> odd_perms(int n) {
    std::vector<Permutation> out;
    for (const auto& s : permutations(n))
        if (is_odd_perm(s)) out.push_back(s);
    return out;
}

}  // namespace

VElement VHopf::compute_product(const Permutation& a, const Permutation& b) const {
    auto sa = global_descents(a).blocks, sb = global_descents(b).blocks;
    const std::size_t n = sa.size() + sb.size();
    std::vector<bool> from_a(n, false);
    std::fill(from_a.begin(), from_a.begin() + static_cast<std::ptrdiff_t>(sa.size()), true);
    std::sort(from_a.begin(), from_a.end());
    VElement out(kV);
    do {
        std::vector<Permutation> seq;
        std::size_t i = 0, j = 0;
        for (bool x : from_a) seq.push_back(x ? sa[i++] : sb[j++]);
        out.add_term(backslash_all(seq), 1);
    } while (std::next_permutation(from_a.begin(), from_a.end()));
    return out;
}

VHopf::Tens VHopf::compute_coproduct(const Permutation& a) const {
    auto blocks = global_descents(a).blocks;
    Tens out(kV);
    for (std::size_t i = 0; i <= blocks.size(); ++i) {
        std::vector<Permutation> left(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<Permutation> right(blocks.begin() + static_cast<std::ptrdiff_t>(i), blocks.end());
        out.add_term({backslash_all(left), backslash_all(right)}, 1);
    }
    return out;
}

const VHopf& algebra() {
    static const VHopf h;
    return h;
}

BasisTag tag_for(std::string_view basis) {
    if (basis == "v") return kV;
    if (basis == "Mv") return kMv;
    if (basis == "etav") return kEtav;
    throw std::invalid_argument("unknown V basis '" + std::string(basis) + "'");
}

VElement to_v(const VElement& a) {
    if (a.tag() == kV) return a;
    if (a.tag() == kMv) return extend_linearly<Permutation, Permutation>(a, kV, M_in_v);
    if (a.tag() == kEtav)
        return extend_linearly<Permutation, Permutation>(
            a, kV, [](const Permutation& s) { return to_v(etav_in_Mv(s)); });
    throw AlgebraMismatch(a.tag(), kV);
}

VElement convert(const VElement& a, std::string_view basis) {
    BasisTag target = tag_for(basis);
    if (a.tag() == target) return a;
    VElement x = to_v(a);
    if (target == kV) return x;
    VElement m = extend_linearly<Permutation, Permutation>(x, kMv, v_in_Mv);
    if (target == kMv) return m;
    VElement out(kEtav);
    for (int n : m.degrees()) {
        auto rows = odd_perms(n);
        auto cols = permutations(n);
        RatMatrix e(0, cols.size());
        for (const auto& s : rows) e.append_row(coordinates(etav_in_Mv(s), cols));
        auto y = solve_left(e, coordinates(m.homogeneous_part(n), cols));
        if (!y) throw std::invalid_argument("element is not in the span of the etav family");
        out += from_coordinates(*y, rows, kEtav);
    }
    return out;
}

VElement product(const VElement& a, const VElement& b) {
    return convert(algebra().product(to_v(a), to_v(b)), a.tag().basis);
}

const Character<Permutation>& zeta() {
    static const Character<Permutation> z(algebra(), "canonical", [](const Permutation& s) {
        return Rational(1) / factorial(static_cast<int>(global_descents(s).blocks.size()));
    });
    return z;
}

const LinearMap<Permutation, Composition>& psi_map() {
    static const LinearMap<Permutation, Composition> p(
        kV, qsym::kM, [](const Permutation& s) { return qsym::to_M(qsym::S(sizes_of(s))); }, "psi_v");
    return p;
}

qsym::QSymElement psi(const VElement& a) { return psi_map()(to_v(a)); }

VElement eta_v(const Permutation& odd_s) { return to_v(etav_in_Mv(odd_s)); }

std::vector<VElement> odd_basis(int n) {
    require_degree(n, "odd basis");
    std::vector<VElement> out;
    for (const auto& s : permutations(n)) {
        if (!is_di(s)) out.push_back(M_in_v(s));
        else if (is_odd_perm(s)) out.push_back(eta_v(s));
    }
    return out;
}

const LinearMap<Permutation, Permutation>& theta_map() {
    static const LinearMap<Permutation, Permutation> t(
        kV, kV,
        [](const Permutation& s) {
            VElement out(kV);
            for (const auto& [a, c] : qsym::theta(psi_map().on_basis(s))) out += c * M_in_v(di_of(a));
            return out;
        },
        "theta_v");
    return t;
}

VElement theta(const VElement& a) { return convert(theta_map()(to_v(a)), a.tag().basis); }

}  // namespace hopfpeak::vhopf
