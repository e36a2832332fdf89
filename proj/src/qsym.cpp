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

#include "hopfpeak/qsym.hpp"

#include <stdexcept>

namespace hopfpeak::qsym {

QSymElement QSym::compute_product(const Composition& a, const Composition& b) const {
    QSymElement out(kM);
    for (const auto& c : quasi_shuffle(a, b)) out.add_term(c, 1);
    return out;
}

QSym::Tens QSym::compute_coproduct(const Composition& a) const {
    Tens out(kM);
    for (std::size_t i = 0; i <= a.parts.size(); ++i) {
        Composition left(std::vector<int>(a.parts.begin(), a.parts.begin() + static_cast<std::ptrdiff_t>(i)));
        Composition right(std::vector<int>(a.parts.begin() + static_cast<std::ptrdiff_t>(i), a.parts.end()));
        out.add_term({left, right}, 1);
    }
    return out;
}

const QSym& algebra() {
    static const QSym q;
    return q;
}

std::vector<Composition> odd_compositions(int n) {
    std::vector<Composition> out;
    for (auto& c : compositions(n))
        if (all_parts_odd(c)) out.push_back(c);
    return out;
}

QSymElement eta(const Composition& odd_beta) {
    if (!all_parts_odd(odd_beta)) throw std::invalid_argument("eta needs an odd composition, got " + to_string(odd_beta));
    QSymElement out(kM);
    for (const auto& a : coarsenings(odd_beta)) out.add_term(a, pow2(a.length()));
    return out;
}

namespace {
QSymElement basis_in_M(std::string_view basis, const Composition& a) {
    QSymElement out(kM);
    if (basis == "M") out.add_term(a, 1);
    else if (basis == "L")
        for (const auto& b : refinements(a)) out.add_term(b, 1);
    else if (basis == "S")
        for (const auto& b : coarsenings(a)) out.add_term(b, c_coeff(a, b));
    else if (basis == "eta")
        out = eta(a);
    else
        throw std::invalid_argument("unknown QSym basis '" + std::string(basis) + "'");
    return out;
}

BasisTag tag_for(std::string_view basis) {
    if (basis == "M") return kM;
    if (basis == "L") return kL;
    if (basis == "S") return kS;
    if (basis == "eta") return kEta;
    throw std::invalid_argument("unknown QSym basis '" + std::string(basis) + "'");
}

void check_qsym(const QSymElement& a) {
    if (a.tag().algebra != "qsym") throw AlgebraMismatch(a.tag(), kM);
}

const Memo<std::pair<std::string, int>, RatMatrix>& inverse_cache() {
    static const Memo<std::pair<std::string, int>, RatMatrix> cache;
    return cache;
}
}  // namespace

RatMatrix to_M_matrix(std::string_view basis, int n) {
    auto rows = basis == "eta" ? odd_compositions(n) : compositions(n);
    auto cols = compositions(n);
    RatMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto v = coordinates(basis_in_M(basis, rows[i]), cols);
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = v[j];
    }
    return m;
}

QSymElement to_M(const QSymElement& a) {
    check_qsym(a);
    if (a.tag() == kM) return a;
    return extend_linearly<Composition, Composition>(a, kM, [&](const Composition& k) {
        return basis_in_M(a.tag().basis, k);
    });
}

QSymElement from_M(const QSymElement& a, std::string_view basis) {
    a.require_tag(kM);
    BasisTag target = tag_for(basis);
    if (basis == "M") return a;
    QSymElement out(target);
    for (int n : a.degrees()) {
        auto cols = compositions(n);
        auto x = coordinates(a.homogeneous_part(n), cols);
        if (basis == "eta") {
            auto rows = odd_compositions(n);
            auto y = solve_left(to_M_matrix("eta", n), x);
            if (!y) throw std::invalid_argument("element is not in the span of the eta family");
            out += from_coordinates(*y, rows, target);
            continue;
        }
        const RatMatrix& inv = inverse_cache().get({std::string(basis), n}, [&] { return inverse(to_M_matrix(basis, n)); });
        out += from_coordinates(x * inv, cols, target);
    }
    return out;
}

QSymElement convert(const QSymElement& a, std::string_view basis) { return from_M(to_M(a), basis); }

QSymElement product(const QSymElement& a, const QSymElement& b) {
    return from_M(algebra().product(to_M(a), to_M(b)), a.tag().basis);
}

Rational zeta(const QSymElement& a) {
    Rational s = 0;
    for (const auto& [k, c] : to_M(a))
        if (k.length() <= 1) s += c;
    return s;
}

RatMatrix peak_space(int n) { return to_M_matrix("eta", n); }

bool in_peak_algebra(const QSymElement& a) {
    auto m = to_M(a);
    for (int n : m.degrees())
        if (!in_row_space(peak_space(n), coordinates(m.homogeneous_part(n), compositions(n)))) return false;
    return true;
}

namespace {
QSymElement theta_on_M(const Composition& beta) {
    if (beta.empty()) return M(beta);
    if (beta.parts.back() % 2 == 0) return QSymElement(kM);
    QSymElement out(kM);
    Rational sign = sign_power(beta.size() + beta.length());
    for (const auto& a : coarsenings(odd_collapse(beta))) out.add_term(a, sign * pow2(a.length()));
    return out;
}
}  // namespace

const LinearMap<Composition, Composition>& theta_map() {
    static const LinearMap<Composition, Composition> map(kM, kM, theta_on_M, "theta_qsym");
    return map;
}

QSymElement theta(const QSymElement& a) { return theta_map()(to_M(a)); }

Rational odd_char_M(const Composition& beta) {
    if (beta.empty()) return 1;
    if (beta.parts.back() % 2 == 0) return 0;
    return 2 * sign_power(beta.size() + beta.length());
}

Rational odd_char_L(const Composition& alpha) {
    if (alpha.empty()) return 1;
    for (std::size_t i = 0; i + 1 < alpha.parts.size(); ++i)
        if (alpha.parts[i] != 1) return 0;
    return 2;
}

Rational odd_char(const QSymElement& a) {
    check_qsym(a);
    Rational s = 0;
    if (a.tag() == kL) {
        for (const auto& [k, c] : a) s += c * odd_char_L(k);
        return s;
    }
    for (const auto& [k, c] : to_M(a)) s += c * odd_char_M(k);
    return s;
}

}  // namespace hopfpeak::qsym
