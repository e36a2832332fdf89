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
 // Graded connected Hopf algebras presented by structure constants on a basis.

#ifndef HOPFPEAK_HOPF_HPP
#define HOPFPEAK_HOPF_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfpeak/core.hpp"
#include "hopfpeak/element.hpp"
#include "hopfpeak/linear_map.hpp"

namespace hopfpeak {

template <class K>
class HopfAlgebra {
public:
    using key_type = K;
    using Elem = Element<K>;
    using Tens = Tensor<K>;

    explicit HopfAlgebra(BasisTag tag) : tag_(std::move(tag)) {}
    virtual ~HopfAlgebra() = default;
    HopfAlgebra(const HopfAlgebra&) = delete;
    HopfAlgebra& operator=(const HopfAlgebra&) = delete;

    const BasisTag& tag() const { return tag_; }
    virtual std::vector<K> basis(int n) const = 0;

    Elem unit() const { return Elem(tag_, K{}); }
    Elem element(const K& key, const Rational& c = Rational(1)) const { return Elem(tag_, key, c); }
    Rational counit_on_basis(const K& key) const { return degree(key) == 0 ? Rational(1) : Rational(0); }

    Rational counit(const Elem& a) const {
        check(a);
        return a.coeff(K{});
    }

    const Elem& product_on_basis(const K& a, const K& b) const {
        return products_.get({a, b}, [&] {
            if (degree(a) == 0) return element(b);
            if (degree(b) == 0) return element(a);
            return compute_product(a, b).with_tag(tag_);
        });
    }

    const Tens& coproduct_on_basis(const K& a) const {
        return coproducts_.get(a, [&] { return compute_coproduct(a).with_tag(tag_); });
    }

    // Recursion over the reduced coproduct: S(h) = -sum S(h1) h2 over the
    // terms with deg h1 < deg h.
    const Elem& antipode_on_basis(const K& a) const {
        return antipodes_.get(a, [&] {
            Elem s(tag_);
            int n = degree(a);
            if (n == 0) return unit();
            for (const auto& [kk, c] : coproduct_on_basis(a)) {
                if (degree(kk.first) == n) continue;
                const Elem& s1 = antipode_on_basis(kk.first);
                for (const auto& [k1, c1] : s1)
                    for (const auto& [kp, cp] : product_on_basis(k1, kk.second)) s.add_term(kp, -c * c1 * cp);
            }
            return s;
        });
    }

    Elem product(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem out(tag_);
        for (const auto& [ka, ca] : a)
            for (const auto& [kb, cb] : b)
                for (const auto& [kp, cp] : product_on_basis(ka, kb)) out.add_term(kp, ca * cb * cp);
        return out;
    }

    Tens coproduct(const Elem& a) const {
        check(a);
        Tens out(tag_);
        for (const auto& [k, c] : a)
            for (const auto& [kk, cc] : coproduct_on_basis(k)) out.add_term(kk, c * cc);
        return out;
    }

    // k-fold tensor terms of Delta^{(k-1)}(a), bracketed as (Delta (x) id ... ) Delta.
    TensorK<K> iterated_coproduct(const Elem& a, int k) const {
        if (k < 1) throw std::invalid_argument("iterated coproduct needs k >= 1");
        check(a);
        TensorK<K> cur(tag_);
        for (const auto& [key, c] : a) cur.add_term({key}, c);
        for (int step = 1; step < k; ++step) {
            TensorK<K> next(tag_);
            for (const auto& [tuple, c] : cur)
                for (const auto& [kk, cc] : coproduct_on_basis(tuple.front())) {
                    std::vector<K> t{kk.first, kk.second};
                    t.insert(t.end(), tuple.begin() + 1, tuple.end());
                    next.add_term(t, c * cc);
                }
            cur = std::move(next);
        }
        return cur;
    }

    Elem antipode(const Elem& a) const {
        check(a);
        Elem out(tag_);
        for (const auto& [k, c] : a)
            for (const auto& [ks, cs] : antipode_on_basis(k)) out.add_term(ks, c * cs);
        return out;
    }

    Elem multiply(const Tens& t) const {
        Elem out(tag_);
        for (const auto& [kk, c] : t)
            for (const auto& [kp, cp] : product_on_basis(kk.first, kk.second)) out.add_term(kp, c * cp);
        return out;
    }

    // Product in H (x) H.
    Tens tensor_product(const Tens& x, const Tens& y) const {
        Tens out(tag_);
        for (const auto& [kx, cx] : x)
            for (const auto& [ky, cy] : y) {
                const Elem& left = product_on_basis(kx.first, ky.first);
                const Elem& right = product_on_basis(kx.second, ky.second);
                for (const auto& [kl, cl] : left)
                    for (const auto& [kr, cr] : right) out.add_term({kl, kr}, cx * cy * cl * cr);
            }
        return out;
    }

    Elem grade_sign(const Elem& a) const {
        check(a);
        Elem out(tag_);
        for (const auto& [k, c] : a) out.add_term(k, degree(k) % 2 ? -c : c);
        return out;
    }

    // m o (S o R_{-1} (x) id) o Delta.
    Elem phi(const Elem& a) const {
        check(a);
        Elem out(tag_);
        for (const auto& [k, c] : a)
            for (const auto& [kk, cc] : coproduct_on_basis(k)) {
                Rational sgn = degree(kk.first) % 2 ? Rational(-1) : Rational(1);
                for (const auto& [ks, cs] : antipode_on_basis(kk.first))
                    for (const auto& [kp, cp] : product_on_basis(ks, kk.second)) out.add_term(kp, sgn * c * cc * cs * cp);
            }
        return out;
    }

    LinearMap<K, K> phi_map() const {
        return LinearMap<K, K>(tag_, tag_, [this](const K& k) { return phi(element(k)); }, "phi");
    }

    void check(const Elem& a) const {
        if (!a.tag().empty() && a.tag() != tag_) throw AlgebraMismatch(a.tag(), tag_);
    }

protected:
    virtual Elem compute_product(const K& a, const K& b) const = 0;
    virtual Tens compute_coproduct(const K& a) const = 0;

private:
    BasisTag tag_;
    Memo<std::pair<K, K>, Elem> products_;
    Memo<K, Tens> coproducts_;
    Memo<K, Elem> antipodes_;
};

template <class K>
std::vector<K> basis_up_to(const HopfAlgebra<K>& h, int n_max) {
    std::vector<K> out;
    for (int n = 0; n <= n_max; ++n) {
        auto b = h.basis(n);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

// Apply f (x) g to a tensor.
template <class K1, class K2>
Tensor<K2> tensor_map(const LinearMap<K1, K2>& f, const LinearMap<K1, K2>& g, const Tensor<K1>& t) {
    Tensor<K2> out(f.codomain());
    for (const auto& [kk, c] : t) {
        const auto& a = f.on_basis(kk.first);
        const auto& b = g.on_basis(kk.second);
        for (const auto& [ka, ca] : a)
            for (const auto& [kb, cb] : b) out.add_term({ka, kb}, c * ca * cb);
    }
    return out;
}

template <class K>
Tensor<K> swap_tensor(const Tensor<K>& t) {
    Tensor<K> out(t.tag());
    for (const auto& [kk, c] : t) out.add_term({kk.second, kk.first}, c);
    return out;
}

// Associativity, coassociativity, unit and counit laws, compatibility
// Delta(ab) = Delta(a)Delta(b), grading, and both antipode identities, on all
// basis elements and pairs or triples of total degree <= n_max.
template <class K>
Report check_hopf_axioms(const HopfAlgebra<K>& h, int n_max) {
    Report r("hopf axioms for " + to_string(h.tag()));
    auto all = basis_up_to(h, n_max);
    std::vector<K> positive;
    for (const auto& k : all)
        if (degree(k) > 0) positive.push_back(k);
    auto name = [](const K& k) { return to_string(k); };

    for (const auto& a : all) {
        auto ea = h.element(a);
        r.record("unit", h.product(h.unit(), ea) == ea && h.product(ea, h.unit()) == ea, name(a));

        const auto& d = h.coproduct_on_basis(a);
        bool graded = true;
        for (const auto& [kk, c] : d) graded = graded && degree(kk) == degree(a);
        r.record("coproduct grading", graded, name(a));

        typename HopfAlgebra<K>::Elem left(h.tag()), right(h.tag());
        for (const auto& [kk, c] : d) {
            left += h.counit_on_basis(kk.first) * c * h.element(kk.second);
            right += h.counit_on_basis(kk.second) * c * h.element(kk.first);
        }
        r.record("counit", left == ea && right == ea, name(a));

        TensorK<K> lhs(h.tag()), rhs(h.tag());
        for (const auto& [kk, c] : d) {
            for (const auto& [k1, c1] : h.coproduct_on_basis(kk.first)) lhs.add_term({k1.first, k1.second, kk.second}, c * c1);
            for (const auto& [k2, c2] : h.coproduct_on_basis(kk.second)) rhs.add_term({kk.first, k2.first, k2.second}, c * c2);
        }
        r.record("coassociativity", lhs == rhs, name(a));

        typename HopfAlgebra<K>::Elem sl(h.tag()), sr(h.tag());
        for (const auto& [kk, c] : d) {
            sl += c * h.product(h.antipode_on_basis(kk.first), h.element(kk.second));
            sr += c * h.product(h.element(kk.first), h.antipode_on_basis(kk.second));
        }
        auto expected = h.counit_on_basis(a) * h.unit();
        r.record("antipode", sl == expected && sr == expected, name(a));
    }

    for (const auto& a : positive)
        for (const auto& b : positive) {
            if (degree(a) + degree(b) > n_max) continue;
            std::string w = name(a) + " * " + name(b);
            const auto& ab = h.product_on_basis(a, b);
            bool graded = true;
            for (const auto& [k, c] : ab) graded = graded && degree(k) == degree(a) + degree(b);
            r.record("product grading", graded, w);
            r.record("compatibility",
                     h.coproduct(ab) == h.tensor_product(h.coproduct_on_basis(a), h.coproduct_on_basis(b)), w);
            for (const auto& c : positive) {
                if (degree(a) + degree(b) + degree(c) > n_max) continue;
                auto ec = h.element(c);
                r.record("associativity",
                         h.product(ab, ec) == h.product(h.element(a), h.product_on_basis(b, c)),
                         w + " * " + name(c));
            }
        }
    return r;
}

// Checks f(ab) = f(a)f(b) and Delta f = (f (x) f) Delta on basis elements of
// degree <= n_max.
template <class K1, class K2>
Report check_hopf_morphism(const HopfAlgebra<K1>& src, const HopfAlgebra<K2>& dst, const LinearMap<K1, K2>& f,
                           int n_max, const std::string& label = "map") {
    Report r("hopf morphism " + label);
    auto all = basis_up_to(src, n_max);
    for (const auto& a : all) {
        r.record("coalgebra", dst.coproduct(f.on_basis(a)) == tensor_map(f, f, src.coproduct_on_basis(a)),
                 to_string(a));
        r.record("counit", dst.counit(f.on_basis(a)) == src.counit_on_basis(a), to_string(a));
        for (const auto& b : all) {
            if (degree(a) + degree(b) > n_max || degree(a) == 0 || degree(b) == 0) continue;
            r.record("algebra", f(src.product_on_basis(a, b)) == dst.product(f.on_basis(a), f.on_basis(b)),
                     to_string(a) + " * " + to_string(b));
        }
    }
    return r;
}

}  // namespace hopfpeak

#endif  // HOPFPEAK_HOPF_HPP
