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
 // Bipartition-indexed m basis with the quasi-shuffle product, and the
 // generating-function families built from it.

#include "hopfpeak/dsym.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hopfpeak::dsym {

namespace {

using Multiset = std::map<Column, int>;

Multiset multiset_of(const Bipartition& b) {
    Multiset m;
    for (const auto& c : b.columns) ++m[c];
    return m;
}

bool take(Multiset& m, const Column& c) {
    auto it = m.find(c);
    if (it == m.end()) return false;
    if (--it->second == 0) m.erase(it);
    return true;
}

// Number of pairs (A, B) of column assignments to the positions of nu with
// A + B = nu positionwise whose nonzero entries form lam and mu.
Rational alignment_count(const std::vector<Column>& nu, std::size_t i, Multiset& lam, Multiset& mu) {
    if (i == nu.size()) return lam.empty() && mu.empty() ? Rational(1) : Rational(0);
    const Column& target = nu[i];
    Rational total = 0;
    if (take(mu, target)) {
        total += alignment_count(nu, i + 1, lam, mu);
        ++mu[target];
    }
    std::vector<Column> keys;
    for (const auto& [c, k] : lam) keys.push_back(c);
    for (const auto& c : keys) {
        if (c.top > target.top || c.bot > target.bot) continue;
        Column rest{target.top - c.top, target.bot - c.bot};
        take(lam, c);
        if (rest.weight() == 0) total += alignment_count(nu, i + 1, lam, mu);
        else if (take(mu, rest)) {
            total += alignment_count(nu, i + 1, lam, mu);
            ++mu[rest];
        }
        ++lam[c];
    }
    return total;
}

// Every nu reachable by keeping the columns of a and either adding each
// column of b alone or merging it into a distinct column of a.
void merge_candidates(const Bipartition& a, const Bipartition& b, std::size_t j, std::vector<Column>& cols,
                      std::vector<bool>& merged, std::set<Bipartition>& out) {
    if (j == b.columns.size()) {
        out.insert(Bipartition(cols));
        return;
    }
    const Column& c = b.columns[j];
    cols.push_back(c);
    merge_candidates(a, b, j + 1, cols, merged, out);
    cols.pop_back();
    for (std::size_t i = 0; i < a.columns.size(); ++i) {
        if (merged[i]) continue;
        merged[i] = true;
        Column old = cols[i];
        cols[i] = Column{old.top + c.top, old.bot + c.bot};
        merge_candidates(a, b, j + 1, cols, merged, out);
        cols[i] = old;
        merged[i] = false;
    }
}

// Coefficient of (x s + y t)^(u + v) contributing x^u y^v, for each family.
Rational series_coefficient(char kind, const Column& c) {
    int k = c.weight();
    Rational f;
    switch (kind) {
        case 'h': f = 1; break;
        case 'e': f = k <= 1 ? 1 : 0; break;
        case 'q': f = 2; break;
        default: throw std::invalid_argument(std::string("unknown generating family '") + kind + "'");
    }
    return f * binomial(k, c.top);
}

DSymElement product_over_columns(const Bipartition& l, DSymElement (*gen)(int, int)) {
    DSymElement out = m(Bipartition());
    for (const auto& c : l.columns) out = algebra().product(out, gen(c.top, c.bot));
    return out;
}

DSymElement p_gen(int a, int b) { return m(Bipartition{{a, b}}); }

RatMatrix basis_matrix(std::string_view basis, int n) {
    auto keys = bipartitions(n);
    std::vector<RatVector> rows;
    for (const auto& l : keys) rows.push_back(coordinates(to_m(elem(basis, l)), keys));
    return RatMatrix::from_rows(rows, keys.size());
}

const RatMatrix& inverse_basis_matrix(std::string_view basis, int n) {
    static const Memo<std::pair<std::string, int>, RatMatrix> memo;
    return memo.get({std::string(basis), n}, [&] { return inverse(basis_matrix(basis, n)); });
}

std::vector<std::vector<Column>> multisets_of_columns(const std::vector<Column>& pool, int weight, std::size_t from) {
    if (weight == 0) return {{}};
    std::vector<std::vector<Column>> out;
    for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool[i].weight() > weight) continue;
        for (auto rest : multisets_of_columns(pool, weight - pool[i].weight(), i)) {
            rest.insert(rest.begin(), pool[i]);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

}  // namespace

DSymElement DSym::compute_product(const Bipartition& a, const Bipartition& b) const {
    std::set<Bipartition> candidates;
    std::vector<Column> cols = a.columns;
    std::vector<bool> merged(a.columns.size(), false);
    merge_candidates(a, b, 0, cols, merged, candidates);
    DSymElement out(km);
    Multiset la = multiset_of(a), mb = multiset_of(b);
    for (const auto& nu : candidates) out.add_term(nu, alignment_count(nu.columns, 0, la, mb));
    return out;
}

Tensor<Bipartition> DSym::compute_coproduct(const Bipartition& a) const {
    Multiset counts = multiset_of(a);
    std::vector<std::pair<Column, int>> ms(counts.begin(), counts.end());
    Tensor<Bipartition> out(km);
    std::vector<int> pick(ms.size(), 0);
    while (true) {
        std::vector<Column> left, right;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            for (int k = 0; k < pick[i]; ++k) left.push_back(ms[i].first);
            for (int k = pick[i]; k < ms[i].second; ++k) right.push_back(ms[i].first);
        }
        out.add_term({Bipartition(left), Bipartition(right)}, 1);
        std::size_t i = 0;
        while (i < ms.size() && pick[i] == ms[i].second) pick[i++] = 0;
        if (i == ms.size()) break;
        ++pick[i];
    }
    return out;
}

const DSym& algebra() {
    static const DSym a;
    return a;
}

BasisTag tag_for(std::string_view basis) {
    if (basis == "m") return km;
    if (basis == "h") return kh;
    if (basis == "e") return ke;
    if (basis == "p") return kp;
    throw std::invalid_argument("unknown DSym basis '" + std::string(basis) + "'");
}

DSymElement he_expand(char kind, int a, int b, int width) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative bidegree");
    require_degree(a + b, "generating-function expansion");
    if (width < 0) width = a + b;
    static const Memo<std::tuple<char, int, int, int>, DSymElement> memo;
    return memo.get({kind, a, b, width}, [&] {
        DSymElement out(km);
        // The coefficient of the leading monomial of m_l factors over the
        // variable pairs that carry its columns.
        for (const auto& l : bipartitions(a + b)) {
            if (l.length() > width) continue;
            int top = 0;
            Rational c = 1;
            for (const auto& col : l.columns) {
                top += col.top;
                c *= series_coefficient(kind, col);
            }
            if (top == a) out.add_term(l, c);
        }
        return out;
    });
}

DSymElement h(int a, int b) { return he_expand('h', a, b); }
DSymElement e(int a, int b) { return he_expand('e', a, b); }

DSymElement to_m(const DSymElement& a) {
    const std::string& b = a.tag().basis;
    if (a.tag().empty() || b == "m") return a.with_tag(km);
    DSymElement (*gen)(int, int) = nullptr;
    if (b == "h") gen = h;
    else if (b == "e") gen = e;
    else if (b == "p") gen = p_gen;
    else throw AlgebraMismatch(a.tag(), km);
    DSymElement out(km);
    for (const auto& [l, c] : a) out += c * product_over_columns(l, gen);
    return out;
}

DSymElement convert(const DSymElement& a, std::string_view basis) {
    BasisTag target = tag_for(basis);
    DSymElement in_m = to_m(a);
    if (basis == "m") return in_m;
    DSymElement out(target);
    for (int n : in_m.degrees()) {
        auto keys = bipartitions(n);
        RatVector x = coordinates(in_m.homogeneous_part(n), keys) * inverse_basis_matrix(basis, n);
        out += from_coordinates(x, keys, target);
    }
    return out;
}

DSymElement product(const DSymElement& a, const DSymElement& b) {
    return algebra().product(to_m(a), to_m(b));
}

DSymElement antipode_via_e(const DSymElement& a) {
    DSymElement out(km);
    for (const auto& [l, c] : convert(a, "e")) {
        DSymElement t = m(Bipartition());
        for (const auto& col : l.columns) t = algebra().product(t, sign_power(col.weight()) * h(col.top, col.bot));
        out += c * t;
    }
    return out;
}

const LinearMap<Bipartition, Bipartition>& theta_map() {
    static const LinearMap<Bipartition, Bipartition> map = [] {
        auto phi = algebra().phi_map();
        return LinearMap<Bipartition, Bipartition>(km, km, [phi](const Bipartition& l) { return phi.on_basis(l); },
                                                   "theta_dsym");
    }();
    return map;
}

DSymElement theta(const DSymElement& a) {
    DSymElement image = theta_map()(to_m(a));
    const std::string& b = a.tag().basis;
    if (b == "h" || b == "e" || b == "p") return convert(image, b);
    return image;
}

DSymElement q(int a, int b) { return theta_map()(e(a, b)); }

DSymElement q_convolution(int a, int b) {
    DSymElement out(km);
    for (int i = 0; i <= a; ++i)
        for (int k = 0; k <= b; ++k) out += algebra().product(h(i, k), e(a - i, b - k));
    return out;
}

const LinearMap<Bipartition, Partition>& p_map() {
    static const LinearMap<Bipartition, Partition> map(
        km, sym::km,
        [](const Bipartition& l) {
            // Distinct column orders within each weight class collapse onto
            // one monomial once y = x.
            std::map<int, int> by_weight;
            std::vector<int> weights;
            for (const auto& col : l.columns) {
                ++by_weight[col.weight()];
                weights.push_back(col.weight());
            }
            Rational c = 1;
            for (const auto& [w, k] : by_weight) c *= factorial(k);
            for (const auto& [col, k] : multiset_of(l)) c /= factorial(k);
            return sym::SymElement(sym::km, Partition(weights), c);
        },
        "p");
    return map;
}

const LinearMap<Partition, Bipartition>& i_map() {
    static const LinearMap<Partition, Bipartition> map(
        sym::km, km,
        [](const Partition& l) {
            std::vector<Column> cols;
            for (int part : l.parts) cols.push_back(Column{part, 0});
            return m(Bipartition(cols));
        },
        "i");
    return map;
}

const LinearMap<Bipartition, Bipartition>& theta_alt_map() {
    static const LinearMap<Bipartition, Bipartition> map(
        km, km, [](const Bipartition& l) { return i_map()(sym::theta_map()(p_map().on_basis(l))); }, "theta_alt");
    return map;
}

const Character<Bipartition>& zeta() {
    static const Character<Bipartition> z(algebra(), "canonical",
                                          [](const Bipartition& l) { return Rational(l.length() <= 1 ? 1 : 0); });
    return z;
}

Report q_identity_check(int n_max) {
    Report r("q identities in DSym");
    for (int n = 0; n <= n_max; ++n)
        for (int mm = 0; n + mm <= n_max; ++mm) {
            if (n == 0 && mm == 0) continue;
            DSymElement sum(km);
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= mm; ++b)
                    sum += sign_power(a + b) * algebra().product(q(a, b), q(n - a, mm - b));
            r.record("alternating sum", sum.is_zero(), "(" + std::to_string(n) + "," + std::to_string(mm) + ")");
        }

    for (int w = 1; w <= n_max; ++w) {
        auto keys = bipartitions(w);
        std::vector<Column> odd_pool;
        for (int s = 1; s <= w; s += 2)
            for (int a = s; a >= 0; --a) odd_pool.push_back(Column{a, s - a});
        RatMatrix odd_products(0, keys.size());
        for (const auto& cols : multisets_of_columns(odd_pool, w, 0)) {
            DSymElement t = m(Bipartition());
            for (const auto& c : cols) t = algebra().product(t, q(c.top, c.bot));
            odd_products.append_row(coordinates(t, keys));
        }
        if (w % 2 == 0)
            for (int a = 0; a <= w; ++a)
                r.record("even q from odd q", in_row_space(odd_products, coordinates(q(a, w - a), keys)),
                         "q(" + std::to_string(a) + "," + std::to_string(w - a) + ")");
        RatMatrix image(0, keys.size());
        for (const auto& l : keys) image.append_row(coordinates(theta_map().on_basis(l), keys));
        r.record("image generated by odd q", same_row_space(image, odd_products), "degree " + std::to_string(w));
    }
    return r;
}

}  // namespace hopfpeak::dsym
