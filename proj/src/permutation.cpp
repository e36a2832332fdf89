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

#include "hopfpeak/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hopfpeak {

namespace {
void check_word(const std::vector<int>& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation word");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

int pair_bit(int a, int b, int n) {
    // Index of position pair (a,b), 1 <= a < b <= n, in row-major order.
    return (a - 1) * n + (b - 1);
}
}  // namespace

Permutation::Permutation(std::initializer_list<int> w) : word(w) { check_word(word); }
Permutation::Permutation(std::vector<int> w) : word(std::move(w)) { check_word(word); }

std::string to_string(const Permutation& s) {
    std::string out;
    bool wide = s.size() >= 10;
    for (std::size_t i = 0; i < s.word.size(); ++i) {
        if (wide && i) out += ",";
        out += std::to_string(s.word[i]);
    }
    return out.empty() ? "()" : out;
}

Permutation perm_from_digits(const std::string& digits) {
    std::vector<int> w;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digits '" + digits + "'");
        w.push_back(c - '0');
    }
    return Permutation(std::move(w));
}

Permutation identity_perm(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& s) {
    std::vector<int> w(s.word.size());
    for (int i = 1; i <= s.size(); ++i) w[static_cast<std::size_t>(s(i) - 1)] = i;
    return Permutation(std::move(w));
}

std::vector<Permutation> permutations(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<Permutation> out;
    std::vector<int> w = identity_perm(n).word;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<std::pair<int, int>> inversions(const Permutation& s) {
    std::vector<std::pair<int, int>> inv;
    for (int a = 1; a <= s.size(); ++a)
        for (int b = a + 1; b <= s.size(); ++b)
            if (s(a) > s(b)) inv.emplace_back(a, b);
    return inv;
}

std::uint64_t inversion_mask(const Permutation& s) {
    if (s.size() > 8) throw std::invalid_argument("inversion mask limited to degree 8");
    std::uint64_t m = 0;
    for (auto [a, b] : inversions(s)) m |= std::uint64_t{1} << pair_bit(a, b, s.size());
    return m;
}

std::vector<int> descents(const Permutation& s) {
    std::vector<int> d;
    for (int i = 1; i < s.size(); ++i)
        if (s(i) > s(i + 1)) d.push_back(i);
    return d;
}

std::vector<int> peaks(const Permutation& s) {
    std::vector<int> p;
    for (int i = 2; i < s.size(); ++i)
        if (s(i - 1) < s(i) && s(i) > s(i + 1)) p.push_back(i);
    return p;
}

Permutation standardize(const std::vector<int>& word) {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardization needs distinct letters");
    std::vector<int> w;
    w.reserve(word.size());
    for (int x : word)
        w.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
    return Permutation(std::move(w));
}

Permutation backslash(const Permutation& s, const Permutation& t) {
    std::vector<int> w;
    w.reserve(s.word.size() + t.word.size());
    for (int x : s.word) w.push_back(x + t.size());
    w.insert(w.end(), t.word.begin(), t.word.end());
    return Permutation(std::move(w));
}

Permutation backslash_all(const std::vector<Permutation>& blocks) {
    Permutation out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out = backslash(*it, out);
    return out;
}

GlobalDescents global_descents(const Permutation& s) {
    GlobalDescents gd;
    int n = s.size();
    // Position i is a global descent iff the first i letters are exactly {n-i+1,...,n}.
    int min_prefix = n + 1;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        min_prefix = std::min(min_prefix, s(i));
        if (i < n && min_prefix == n - i + 1) gd.positions.push_back(i);
    }
    std::vector<int> cuts = gd.positions;
    cuts.push_back(n);
    for (int cut : cuts) {
        std::vector<int> piece(s.word.begin() + start, s.word.begin() + cut);
        gd.blocks.push_back(standardize(piece));
        start = cut;
    }
    if (n == 0) gd.blocks.clear();
    return gd;
}

bool is_gd_free(const Permutation& s) { return global_descents(s).positions.empty(); }

std::vector<int> block_sizes(const Permutation& s) {
    std::vector<int> sizes;
    for (const auto& b : global_descents(s).blocks) sizes.push_back(b.size());
    return sizes;
}

bool is_di(const Permutation& s) {
    for (const auto& b : global_descents(s).blocks)
        if (b != identity_perm(b.size())) return false;
    return true;
}

bool is_odd_perm(const Permutation& s) {
    if (!is_di(s)) return false;
    for (int k : block_sizes(s))
        if (k % 2 == 0) return false;
    return true;
}

Permutation di_perm(const std::vector<int>& sizes) {
    std::vector<Permutation> blocks;
    for (int k : sizes) {
        if (k < 1) throw std::invalid_argument("block sizes must be positive");
        blocks.push_back(identity_perm(k));
    }
    return backslash_all(blocks);
}

bool weak_leq(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw std::invalid_argument("weak order needs equal degrees");
    std::uint64_t a = inversion_mask(s), b = inversion_mask(t);
    return (a & ~b) == 0;
}

std::vector<Permutation> weak_lower_set(const Permutation& s) {
    std::vector<Permutation> out;
    std::uint64_t m = inversion_mask(s);
    for (const auto& t : permutations(s.size()))
        if ((inversion_mask(t) & ~m) == 0) out.push_back(t);
    return out;
}

std::vector<Permutation> weak_upper_set(const Permutation& s) {
    std::vector<Permutation> out;
    std::uint64_t m = inversion_mask(s);
    for (const auto& t : permutations(s.size()))
        if ((m & ~inversion_mask(t)) == 0) out.push_back(t);
    return out;
}

namespace {
struct MobiusTable {
    std::mutex lock;
    std::map<Permutation, std::map<Permutation, long>> rows;  // s -> (t -> mu(s,t))
};

MobiusTable& mobius_table() {
    static MobiusTable table;
    return table;
}

std::map<Permutation, long> mobius_row(const Permutation& s) {
    auto upper = weak_upper_set(s);
    std::vector<std::pair<int, Permutation>> ordered;
    for (auto& t : upper) ordered.emplace_back(static_cast<int>(inversions(t).size()), t);
    std::sort(ordered.begin(), ordered.end());
    std::map<Permutation, long> mu;
    std::vector<std::pair<std::uint64_t, long>> done;
    for (auto& [len, t] : ordered) {
        std::uint64_t mt = inversion_mask(t);
        long value = 0;
        if (t == s) value = 1;
        else
            for (auto& [mr, v] : done)
                if ((mr & ~mt) == 0 && mr != mt) value -= v;
        mu[t] = value;
        done.emplace_back(mt, value);
    }
    return mu;
}
}  // namespace

long mobius_weak(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw std::invalid_argument("weak order needs equal degrees");
    if (!weak_leq(s, t)) return 0;
    auto& table = mobius_table();
    {
        std::lock_guard<std::mutex> g(table.lock);
        auto it = table.rows.find(s);
        if (it != table.rows.end()) return it->second.at(t);
    }
    auto row = mobius_row(s);
    long v = row.at(t);
    std::lock_guard<std::mutex> g(table.lock);
    table.rows.emplace(s, std::move(row));
    return v;
}

std::vector<Permutation> shifted_shuffle(const Permutation& s, const Permutation& t) {
    int n = s.size(), m = t.size();
    std::vector<Permutation> out;
    // Choose the positions that carry the letters of s.
    std::vector<bool> from_s(static_cast<std::size_t>(n + m), false);
    std::fill(from_s.begin(), from_s.begin() + n, true);
    do {
        std::vector<int> w;
        int i = 0, j = 0;
        for (bool b : from_s) w.push_back(b ? s.word[static_cast<std::size_t>(i++)]
                                            : t.word[static_cast<std::size_t>(j++)] + n);
        out.emplace_back(std::move(w));
    } while (std::prev_permutation(from_s.begin(), from_s.end()));
    std::sort(out.begin(), out.end());
    return out;
}

long peak_free_inverse_below(const Permutation& s) {
    long count = 0;
    for (const auto& t : weak_lower_set(s))
        if (peaks(inverse(t)).empty()) ++count;
    return count;
}

PeakLemmaRecord peak_free_count_lemma(const Permutation& s, int split) {
    auto gd = global_descents(s);
    if (gd.positions.empty()) throw std::invalid_argument("permutation has no global descent");
    int pos = split == 0 ? gd.positions.front() : split;
    if (std::find(gd.positions.begin(), gd.positions.end(), pos) == gd.positions.end())
        throw std::invalid_argument("split is not a global descent");
    PeakLemmaRecord r;
    r.sigma = s;
    r.mu = standardize(std::vector<int>(s.word.begin(), s.word.begin() + pos));
    r.nu = standardize(std::vector<int>(s.word.begin() + pos, s.word.end()));
    r.lhs = peak_free_inverse_below(s);
    r.rhs = 2 * peak_free_inverse_below(r.mu) * peak_free_inverse_below(r.nu);
    return r;
}

}  // namespace hopfpeak
