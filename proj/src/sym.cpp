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

#include "hopfpeak/sym.hpp"

#include <stdexcept>

namespace hopfpeak::sym {

namespace {
bool is_weakly_decreasing(const Composition& c) {
    for (std::size_t i = 1; i < c.parts.size(); ++i)
        if (c.parts[i] > c.parts[i - 1]) return false;
    return true;
}
}  // namespace

SymElement Sym::compute_product(const Partition& a, const Partition& b) const {
    return extract_m(qsym::algebra().product(embed_iota(SymElement(km, a)), embed_iota(SymElement(km, b))));
}

Sym::Tens Sym::compute_coproduct(const Partition& a) const {
    Tens out(km);
    // Delta(iota m_a) lies in Sym (x) Sym, so its m (x) m coordinates sit at
    // the decreasing pairs.
    for (const auto& [kk, c] : qsym::algebra().coproduct(embed_iota(SymElement(km, a))))
        if (is_weakly_decreasing(kk.first) && is_weakly_decreasing(kk.second))
            out.add_term({sort_to_partition(kk.first), sort_to_partition(kk.second)}, c);
    return out;
}

const Sym& algebra() {
    static const Sym s;
    return s;
}

BasisTag tag_for(std::string_view basis) {
    if (basis == "m") return km;
    if (basis == "p") return kp;
    if (basis == "e") return ke;
    if (basis == "h") return kh;
    if (basis == "q") return kq;
    throw std::invalid_argument("unknown Sym basis '" + std::string(basis) + "'");
}

namespace {
SymElement generator_in_m(char kind, int n) {
    if (n == 0) return SymElement(km, Partition());
    SymElement g(km);
    switch (kind) {
        case 'm':
        case 'p': g.add_term(Partition{n}, 1); break;
        case 'e': g.add_term(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 1); break;
        case 'h':
            for (const auto& l : partitions(n)) g.add_term(l, 1);
            break;
        case 'q': g = to_m(theta(SymElement(kh, Partition{n}))); break;
        default: throw std::invalid_argument("unknown generator family");
    }
    return g;
}

SymElement basis_in_m(std::string_view basis, const Partition& l) {
    if (basis == "m") return SymElement(km, l);
    tag_for(basis);
    static const Memo<std::pair<char, Partition>, SymElement> cache;
    return cache.get({basis[0], l}, [&] {
        SymElement out(km, Partition());
        for (int part : l.parts) out = algebra().product(out, generator_in_m(basis[0], part));
        return out;
    });
}

const RatMatrix& inverse_matrix(std::string_view basis, int n) {
    static const Memo<std::pair<std::string, int>, RatMatrix> cache;
    return cache.get({std::string(basis), n}, [&] { return inverse(to_m_matrix(basis, n)); });
}

void check_sym(const SymElement& a) {
    if (a.tag().algebra != "sym") throw AlgebraMismatch(a.tag(), km);
}
}  // namespace

RatMatrix to_m_matrix(std::string_view basis, int n) {
    auto parts = partitions(n);
    RatMatrix t(parts.size(), parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto v = coordinates(basis_in_m(basis, parts[i]), parts);
        for (std::size_t j = 0; j < parts.size(); ++j) t(i, j) = v[j];
    }
    return t;
}

SymElement to_m(const SymElement& a) {
    check_sym(a);
    if (a.tag() == km) return a;
    return extend_linearly<Partition, Partition>(a, km, [&](const Partition& l) { return basis_in_m(a.tag().basis, l); });
}

SymElement from_m(const SymElement& a, std::string_view basis) {
    a.require_tag(km);
    if (basis == "m") return a;
    if (basis == "q") throw std::invalid_argument("the q family is not a basis of Sym");
    BasisTag target = tag_for(basis);
    SymElement out(target);
    for (int n : a.degrees()) {
        auto parts = partitions(n);
        out += from_coordinates(coordinates(a.homogeneous_part(n), parts) * inverse_matrix(basis, n), parts, target);
    }
    return out;
}

SymElement convert(const SymElement& a, std::string_view basis) { return from_m(to_m(a), basis); }

const LinearMap<Partition, Composition>& iota_map() {
    static const LinearMap<Partition, Composition> map(
        km, qsym::kM,
        [](const Partition& l) {
            qsym::QSymElement out(qsym::kM);
            for (const auto& c : rearrangements(l)) out.add_term(c, 1);
            return out;
        },
        "iota");
    return map;
}

qsym::QSymElement embed_iota(const SymElement& a) { return iota_map()(to_m(a)); }

bool is_symmetric(const qsym::QSymElement& a) {
    auto m = qsym::to_M(a);
    for (const auto& [c, coeff] : m)
        for (const auto& r : rearrangements(sort_to_partition(c)))
            if (m.coeff(r) != coeff) return false;
    return true;
}

SymElement extract_m(const qsym::QSymElement& a) {
    auto m = qsym::to_M(a);
    if (!is_symmetric(m)) throw std::invalid_argument("quasisymmetric element is not symmetric");
    SymElement out(km);
    for (const auto& [c, coeff] : m)
        if (is_weakly_decreasing(c)) out.add_term(sort_to_partition(c), coeff);
    return out;
}

const LinearMap<Partition, Partition>& theta_map() {
    static const LinearMap<Partition, Partition> map(
        km, km,
        [](const Partition& l) {
            SymElement in_p = from_m(SymElement(km, l), "p");
            SymElement image(kp);
            for (const auto& [mu, c] : in_p) {
                bool odd = true;
                for (int part : mu.parts) odd = odd && part % 2 == 1;
                if (odd) image.add_term(mu, c * pow2(mu.length()));
            }
            return to_m(image);
        },
        "theta_sym");
    return map;
}

SymElement theta(const SymElement& a) {
    SymElement image = theta_map()(to_m(a));
    const std::string& b = a.tag().basis;
    if (b == "p" || b == "e" || b == "h") return from_m(image, b);
    return image;
}

SymElement q_gen(int n) {
    if (n == 0) return SymElement(kp, Partition());
    return convert(theta(SymElement(kh, Partition{n})), "p");
}

const LinearMap<Composition, Partition>& pi_map() {
    static const LinearMap<Composition, Partition> map(
        nsym::kH, km, [](const Composition& c) { return to_m(SymElement(kh, sort_to_partition(c))); }, "pi");
    return map;
}

SymElement pi_projection(const nsym::NSymElement& a) {
    SymElement out(kh);
    for (const auto& [c, coeff] : nsym::to_H(a)) out.add_term(sort_to_partition(c), coeff);
    return out;
}

Rational zeta(const SymElement& a) { return qsym::zeta(embed_iota(a)); }

}  // namespace hopfpeak::sym
