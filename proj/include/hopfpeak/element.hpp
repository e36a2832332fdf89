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
 // Finitely supported linear combinations over a combinatorial basis.

#ifndef HOPFPEAK_ELEMENT_HPP
#define HOPFPEAK_ELEMENT_HPP

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfpeak/rational.hpp"

namespace hopfpeak {

struct BasisTag {
    std::string algebra;
    std::string basis;

    bool empty() const { return algebra.empty(); }
    friend auto operator<=>(const BasisTag&, const BasisTag&) = default;
};

inline std::string to_string(const BasisTag& t) { return t.algebra + "/" + t.basis; }

class AlgebraMismatch : public std::invalid_argument {
public:
    AlgebraMismatch(const BasisTag& a, const BasisTag& b)
        : std::invalid_argument("algebra mismatch: " + to_string(a) + " vs " + to_string(b)) {}
};

template <class A, class B>
int degree(const std::pair<A, B>& p) {
    return degree(p.first) + degree(p.second);
}

template <class K>
int degree(const std::vector<K>& tuple) {
    int d = 0;
    for (const auto& k : tuple) d += degree(k);
    return d;
}

template <class K>
class Element {
public:
    using key_type = K;
    using term_map = std::map<K, Rational>;

    Element() = default;
    explicit Element(BasisTag tag) : tag_(std::move(tag)) {}
    Element(BasisTag tag, const K& key, const Rational& coeff = Rational(1)) : tag_(std::move(tag)) {
        add_term(key, coeff);
    }

    const BasisTag& tag() const { return tag_; }
    const term_map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const K& key, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::set<int> degrees() const {
        std::set<int> d;
        for (const auto& [k, c] : terms_) d.insert(degree(k));
        return d;
    }

    bool is_homogeneous() const { return degrees().size() <= 1; }

    Element homogeneous_part(int n) const {
        Element out(tag_);
        for (const auto& [k, c] : terms_)
            if (degree(k) == n) out.terms_.emplace(k, c);
        return out;
    }

    Element with_tag(BasisTag tag) const {
        Element out = *this;
        out.tag_ = std::move(tag);
        return out;
    }

    Element& operator+=(const Element& o) {
        adopt(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        adopt(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    Element& operator*=(const Rational& s) {
        if (s.is_zero()) terms_.clear();
        else
            for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }

    // Untagged zero elements compare equal to any zero.
    friend bool operator==(const Element& a, const Element& b) {
        if (!a.tag_.empty() && !b.tag_.empty() && a.tag_ != b.tag_) return false;
        return a.terms_ == b.terms_;
    }

    void require_tag(const BasisTag& t) const {
        if (tag_ != t) throw AlgebraMismatch(tag_, t);
    }

private:
    void adopt(const Element& o) {
        if (tag_.empty()) tag_ = o.tag_;
        else if (!o.tag_.empty() && o.tag_ != tag_) throw AlgebraMismatch(tag_, o.tag_);
    }

    BasisTag tag_;
    term_map terms_;
};

template <class K>
using Tensor = Element<std::pair<K, K>>;

template <class K>
using TensorK = Element<std::vector<K>>;

template <class A, class B>
Element<std::pair<A, B>> tensor(const Element<A>& a, const Element<B>& b) {
    Element<std::pair<A, B>> t(a.tag());
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) t.add_term({ka, kb}, ca * cb);
    return t;
}

// Linear extension of f : K -> Element<KOut>, with the result tagged `out`.
template <class K, class KOut, class F>
Element<KOut> extend_linearly(const Element<K>& a, const BasisTag& out, F&& f) {
    Element<KOut> r(out);
    for (const auto& [k, c] : a) {
        Element<KOut> img = f(k);
        for (const auto& [ko, co] : img) r.add_term(ko, c * co);
    }
    return r;
}

template <class K>
std::string to_string(const Element<K>& a) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : a) {
        if (!first) s += " + ";
        first = false;
        s += c.str() + "*" + a.tag().basis + to_string(k);
    }
    return s;
}

template <class A, class B>
std::string to_string(const std::pair<A, B>& p) {
    return to_string(p.first) + "(x)" + to_string(p.second);
}

template <class K>
std::string to_string(const std::vector<K>& tuple) {
    std::string s;
    for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "(x)" : "") + to_string(tuple[i]);
    return s;
}

}  // namespace hopfpeak

#endif  // HOPFPEAK_ELEMENT_HPP
