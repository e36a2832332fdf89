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

#include "hopfpeak/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfpeak {

namespace {
void check_parts(const std::vector<int>& p) {
    for (int x : p)
        if (x < 1) throw std::invalid_argument("composition parts must be positive");
}

void append_all(std::vector<Composition>& out, const std::vector<Composition>& tails, int head) {
    for (const auto& t : tails) {
        std::vector<int> p{head};
        p.insert(p.end(), t.parts.begin(), t.parts.end());
        out.emplace_back(std::move(p));
    }
}

Composition tail(const Composition& a) {
    return Composition(std::vector<int>(a.parts.begin() + 1, a.parts.end()));
}
}  // namespace

Composition::Composition(std::initializer_list<int> p) : parts(p) { check_parts(parts); }
Composition::Composition(std::vector<int> p) : parts(std::move(p)) { check_parts(parts); }

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string to_string(const Composition& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.parts.size(); ++i) s += (i ? "," : "") + std::to_string(a.parts[i]);
    return s + "]";
}

std::vector<Composition> compositions(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    for (int first = 1; first <= n; ++first) append_all(out, compositions(n - first), first);
    return out;
}

std::vector<Composition> compositions_up_to(int n) {
    std::vector<Composition> out;
    for (int k = 0; k <= n; ++k) {
        auto c = compositions(k);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

std::vector<int> descent_set(const Composition& a) {
    std::vector<int> s;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < a.parts.size(); ++i) s.push_back(sum += a.parts[i]);
    return s;
}

Composition from_descent_set(const std::vector<int>& set, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int x : set) {
        if (x <= prev || x >= n) throw std::invalid_argument("descent set out of range or unsorted");
        parts.push_back(x - prev);
        prev = x;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

bool refinement_leq(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("refinement order needs equal sizes");
    auto a = descent_set(alpha), b = descent_set(beta);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Composition> coarsenings(const Composition& a) {
    if (a.length() <= 1) return {a};
    std::vector<Composition> out;
    // Each of the l-1 boundaries is kept or merged.
    int l = a.length();
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        std::vector<int> parts{a.parts[0]};
        for (int i = 1; i < l; ++i) {
            if (mask & (1u << (i - 1))) parts.back() += a.parts[i];
            else parts.push_back(a.parts[i]);
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> refinements(const Composition& a) {
    std::vector<Composition> out{Composition()};
    for (int part : a.parts) {
        std::vector<Composition> next;
        for (const auto& prefix : out)
            for (const auto& piece : compositions(part)) next.push_back(concat(prefix, piece));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Composition concat(const Composition& a, const Composition& b) {
    Composition c = a;
    c.parts.insert(c.parts.end(), b.parts.begin(), b.parts.end());
    return c;
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("near-concatenation needs non-empty operands");
    Composition c = a;
    c.parts.back() += b.parts.front();
    c.parts.insert(c.parts.end(), b.parts.begin() + 1, b.parts.end());
    return c;
}

std::vector<Composition> shuffle(const Composition& a, const Composition& b) {
    if (a.empty()) return {b};
    if (b.empty()) return {a};
    std::vector<Composition> out;
    append_all(out, shuffle(tail(a), b), a.parts[0]);
    append_all(out, shuffle(a, tail(b)), b.parts[0]);
    return out;
}

std::vector<Composition> quasi_shuffle(const Composition& a, const Composition& b) {
    if (a.empty()) return {b};
    if (b.empty()) return {a};
    std::vector<Composition> out;
    append_all(out, quasi_shuffle(tail(a), b), a.parts[0]);
    append_all(out, quasi_shuffle(a, tail(b)), b.parts[0]);
    append_all(out, quasi_shuffle(tail(a), tail(b)), a.parts[0] + b.parts[0]);
    return out;
}

bool all_parts_odd(const Composition& a) {
    for (int x : a.parts)
        if (x % 2 == 0) return false;
    return true;
}

Composition odd_collapse(const Composition& beta) {
    if (beta.empty()) return beta;
    if (beta.parts.back() % 2 == 0) throw std::invalid_argument("odd collapse needs an odd last part");
    std::vector<int> parts;
    int acc = 0;
    for (int x : beta.parts) {
        acc += x;
        if (x % 2 == 1) {
            parts.push_back(acc);
            acc = 0;
        }
    }
    return Composition(std::move(parts));
}

std::vector<int> block_lengths(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size() || !refinement_leq(beta, alpha))
        throw std::invalid_argument(to_string(beta) + " is not a coarsening of " + to_string(alpha));
    std::vector<int> lengths;
    std::size_t i = 0;
    for (int target : beta.parts) {
        int sum = 0, count = 0;
        while (sum < target) sum += alpha.parts[i++], ++count;
        lengths.push_back(count);
    }
    return lengths;
}

Rational c_coeff(const Composition& alpha, const Composition& beta) {
    Rational denom = 1;
    for (int len : block_lengths(alpha, beta)) denom *= factorial(len);
    return Rational(1) / denom;
}

Composition ones(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Composition hook(int k, int n) {
    if (k < 0 || k >= n) throw std::invalid_argument("hook needs 0 <= k < n");
    std::vector<int> p(static_cast<std::size_t>(k), 1);
    p.push_back(n - k);
    return Composition(std::move(p));
}

}  // namespace hopfpeak
