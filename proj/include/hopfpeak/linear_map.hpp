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
 // Linear maps given by their values on a basis, with lazily memoized images.

#ifndef HOPFPEAK_LINEAR_MAP_HPP
#define HOPFPEAK_LINEAR_MAP_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpeak/core.hpp"
#include "hopfpeak/element.hpp"
#include "hopfpeak/matrix.hpp"

namespace hopfpeak {

template <class KIn, class KOut>
class LinearMap {
public:
    using ImageFn = std::function<Element<KOut>(const KIn&)>;

    LinearMap(BasisTag domain, BasisTag codomain, ImageFn on_basis, std::string name = {})
        : domain_(std::move(domain)), codomain_(std::move(codomain)), name_(std::move(name)),
          state_(std::make_shared<State>(std::move(on_basis))) {}

    const BasisTag& domain() const { return domain_; }
    const BasisTag& codomain() const { return codomain_; }
    const std::string& name() const { return name_; }

    const Element<KOut>& on_basis(const KIn& key) const {
        return state_->images.get(key, [&] {
            Element<KOut> img = state_->fn(key);
            if (img.tag().empty()) img = img.with_tag(codomain_);
            if (img.tag() != codomain_) throw AlgebraMismatch(img.tag(), codomain_);
            return img;
        });
    }

    Element<KOut> operator()(const Element<KIn>& a) const {
        if (!a.tag().empty() && a.tag() != domain_) throw AlgebraMismatch(a.tag(), domain_);
        Element<KOut> out(codomain_);
        for (const auto& [k, c] : a)
            for (const auto& [ko, co] : on_basis(k)) out.add_term(ko, c * co);
        return out;
    }

private:
    struct State {
        explicit State(ImageFn f) : fn(std::move(f)) {}
        ImageFn fn;
        Memo<KIn, Element<KOut>> images;
    };

    BasisTag domain_, codomain_;
    std::string name_;
    std::shared_ptr<State> state_;
};

template <class K1, class K2, class K3>
LinearMap<K1, K3> compose(const LinearMap<K2, K3>& g, const LinearMap<K1, K2>& f) {
    if (f.codomain() != g.domain()) throw AlgebraMismatch(f.codomain(), g.domain());
    return LinearMap<K1, K3>(f.domain(), g.codomain(), [f, g](const K1& k) { return g(f.on_basis(k)); },
                             g.name() + "o" + f.name());
}

template <class K>
LinearMap<K, K> identity_map(const BasisTag& tag) {
    return LinearMap<K, K>(tag, tag, [tag](const K& k) { return Element<K>(tag, k); }, "id");
}

// Row i holds the coordinates of f(dom[i]) in the list `cod`.
template <class KIn, class KOut>
RatMatrix map_matrix(const LinearMap<KIn, KOut>& f, const std::vector<KIn>& dom, const std::vector<KOut>& cod) {
    RatMatrix m(dom.size(), cod.size());
    std::map<KOut, std::size_t> col;
    for (std::size_t j = 0; j < cod.size(); ++j) col[cod[j]] = j;
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (const auto& [k, c] : f.on_basis(dom[i])) {
            auto it = col.find(k);
            if (it == col.end()) throw std::logic_error("image leaves the listed codomain basis");
            m(i, it->second) = c;
        }
    return m;
}

template <class K>
RatVector coordinates(const Element<K>& a, const std::vector<K>& basis) {
    RatVector v(basis.size());
    std::size_t found = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        v[j] = a.coeff(basis[j]);
        if (!v[j].is_zero()) ++found;
    }
    if (found != a.size()) throw std::logic_error("element has terms outside the listed basis");
    return v;
}

template <class K>
Element<K> from_coordinates(const RatVector& v, const std::vector<K>& basis, const BasisTag& tag) {
    Element<K> a(tag);
    for (std::size_t j = 0; j < basis.size(); ++j) a.add_term(basis[j], v[j]);
    return a;
}

// Registered dual pairs of bases: qsym/M <-> nsym/H, qsym/L <-> nsym/R,
// ssym/F <-> ssym*/F*, ssym/M <-> ssym*/M*.
std::optional<BasisTag> dual_tag(const BasisTag& t);

// Also pairs tensors factorwise, since tensors carry the tags of their factors.
template <class K>
Rational pairing(const Element<K>& f, const Element<K>& a) {
    auto d = dual_tag(a.tag());
    if (!d || *d != f.tag()) throw std::invalid_argument("no registered pairing between " + to_string(f.tag()) +
                                                         " and " + to_string(a.tag()));
    Rational s = 0;
    for (const auto& [k, c] : f) s += c * a.coeff(k);
    return s;
}

// The transpose of f with respect to dual bases: <adj(g), v> = <g, f(v)>.
// dom_basis(n) must list the domain basis of f in degree n; queries above
// n_max throw.
template <class KIn, class KOut, class BasisFn>
LinearMap<KOut, KIn> adjoint(const LinearMap<KIn, KOut>& f, BasisFn dom_basis, int n_max) {
    auto dd = dual_tag(f.domain()), dc = dual_tag(f.codomain());
    if (!dd || !dc) throw std::invalid_argument("adjoint needs registered duals for " + f.name());
    BasisTag out = *dd;
    return LinearMap<KOut, KIn>(
        *dc, *dd,
        [f, dom_basis, n_max, out](const KOut& g) {
            int n = degree(g);
            if (n > n_max) throw std::out_of_range("adjoint queried above its degree bound");
            Element<KIn> r(out);
            for (const auto& v : dom_basis(n)) r.add_term(v, f.on_basis(v).coeff(g));
            return r;
        },
        "adj(" + f.name() + ")");
}

}  // namespace hopfpeak

#endif  // HOPFPEAK_LINEAR_MAP_HPP
