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
 // Permutations in one-line notation and the statistics indexing SSym and V.

#ifndef HOPFPEAK_PERMUTATION_HPP
#define HOPFPEAK_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hopfpeak {

struct Permutation {
    std::vector<int> word;

    Permutation() = default;
    Permutation(std::initializer_list<int> w);
    explicit Permutation(std::vector<int> w);

    int size() const { return static_cast<int>(word.size()); }
    int operator()(int i) const { return word[static_cast<std::size_t>(i - 1)]; }  // 1-based

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline int degree(const Permutation& s) { return s.size(); }
std::string to_string(const Permutation& s);

// Parses "231" style words for degrees below 10.
Permutation perm_from_digits(const std::string& digits);

Permutation identity_perm(int n);
Permutation inverse(const Permutation& s);
std::vector<Permutation> permutations(int n);  // lexicographic

std::vector<std::pair<int, int>> inversions(const Permutation& s);  // position pairs (a,b), a<b
std::uint64_t inversion_mask(const Permutation& s);
std::vector<int> descents(const Permutation& s);
std::vector<int> peaks(const Permutation& s);

// Throws std::invalid_argument on repeated letters.
Permutation standardize(const std::vector<int>& word);

// Shift s up by |t|, then append t.
Permutation backslash(const Permutation& s, const Permutation& t);
Permutation backslash_all(const std::vector<Permutation>& blocks);

struct GlobalDescents {
    std::vector<int> positions;
    std::vector<Permutation> blocks;  // s = blocks[0] \ ... \ blocks[k-1], each block GD-free
};
GlobalDescents global_descents(const Permutation& s);
bool is_gd_free(const Permutation& s);

bool is_di(const Permutation& s);        // every block an identity
bool is_odd_perm(const Permutation& s);  // di with all block sizes odd
std::vector<int> block_sizes(const Permutation& s);
Permutation di_perm(const std::vector<int>& sizes);  // 1_{a1} \ ... \ 1_{ak}

// s <= t iff Inv(s) is a subset of Inv(t).
bool weak_leq(const Permutation& s, const Permutation& t);
std::vector<Permutation> weak_lower_set(const Permutation& s);  // {t : t <= s}
std::vector<Permutation> weak_upper_set(const Permutation& s);  // {t : s <= t}
long mobius_weak(const Permutation& s, const Permutation& t);

// Permutations g of size |s|+|t| whose letters <= |s| spell s and whose
// remaining letters spell t shifted by |s|.
std::vector<Permutation> shifted_shuffle(const Permutation& s, const Permutation& t);

struct PeakLemmaRecord {
    Permutation sigma, mu, nu;
    long lhs = 0;
    long rhs = 0;
    bool holds() const { return lhs == rhs; }
};
// Splits s = mu \ nu at global descent position `split` (0 picks the first);
// throws when s has no global descent there.
PeakLemmaRecord peak_free_count_lemma(const Permutation& s, int split = 0);
long peak_free_inverse_below(const Permutation& s);  // |{t <= s : peak(t^-1) empty}|

}  // namespace hopfpeak

#endif  // HOPFPEAK_PERMUTATION_HPP
