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
 // Integer compositions and the operations on them used by QSym and NSym.

#ifndef HOPFPEAK_COMPOSITION_HPP
#define HOPFPEAK_COMPOSITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "hopfpeak/rational.hpp"

namespace hopfpeak {

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p);
    explicit Composition(std::vector<int> p);

    int size() const;  // |alpha|
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int operator[](std::size_t i) const { return parts[i]; }

    friend auto operator<=>(const Composition&, const Composition&) = default;
};

inline int degree(const Composition& a) { return a.size(); }
std::string to_string(const Composition& a);

// All compositions of n, lexicographically ordered.
std::vector<Composition> compositions(int n);
std::vector<Composition> compositions_up_to(int n);

// I(alpha) = {a1, a1+a2, ..., a1+...+a_{l-1}}.
std::vector<int> descent_set(const Composition& a);
Composition from_descent_set(const std::vector<int>& set, int n);

// alpha <= beta iff I(alpha) is a subset of I(beta): beta refines alpha.
bool refinement_leq(const Composition& alpha, const Composition& beta);

std::vector<Composition> coarsenings(const Composition& a);  // includes a
std::vector<Composition> refinements(const Composition& a);  // includes a

Composition concat(const Composition& a, const Composition& b);
// Concatenation with the last part of a and the first part of b merged.
Composition near_concat(const Composition& a, const Composition& b);

// Multisets: each result appears as often as its multiplicity.
std::vector<Composition> shuffle(const Composition& a, const Composition& b);
std::vector<Composition> quasi_shuffle(const Composition& a, const Composition& b);

bool all_parts_odd(const Composition& a);
// The coarsest composition with odd parts whose blocks end at the odd parts of beta.
Composition odd_collapse(const Composition& beta);

// For beta a coarsening of alpha: 1/prod(i_j!) with i_j the number of parts of
// alpha merged into the j-th part of beta.
Rational c_coeff(const Composition& alpha, const Composition& beta);
std::vector<int> block_lengths(const Composition& alpha, const Composition& beta);

Composition ones(int n);                      // (1,...,1)
Composition hook(int k, int n);               // (1^k, n-k)

}  // namespace hopfpeak

#endif  // HOPFPEAK_COMPOSITION_HPP
