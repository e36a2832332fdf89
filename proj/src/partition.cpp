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

#include "hopfpeak/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hopfpeak {

namespace {
void canonicalize(std::vector<int>& p) {
    for (int x : p)
        if (x < 1) throw std::invalid_argument("partition parts must be positive");
    std::sort(p.begin(), p.end(), std::greater<>());
}

void canonicalize(std::vector<Column>& c) {
    for (const auto& col : c)
        if (col.top < 0 || col.bot < 0 || col.weight() == 0)
            throw std::invalid_argument("bipartition columns must be nonnegative and nonzero");
    std::sort(c.begin(), c.end(), std::greater<>());
}

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

// Columns of weight 1..n in decreasing lexicographic order.
std::vector<Column> columns_up_to(int n) {
    std::vector<Column> cols;
    for (int w = 1; w <= n; ++w)
        for (int a = 0; a <= w; ++a) cols.push_back({a, w - a});
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return cols;
}

void bipartitions_rec(int n, std::size_t first, const std::vector<Column>& cols, std::vector<Column>& cur,
                      std::vector<Bipartition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (std::size_t i = first; i < cols.size(); ++i) {
        if (cols[i].weight() > n) continue;
        cur.push_back(cols[i]);
        bipartitions_rec(n - cols[i].weight(), i, cols, cur, out);
        cur.pop_back();
    }
}
}  // namespace

Partition::Partition(std::initializer_list<int> p) : parts(p) { canonicalize(parts); }
Partition::Partition(std::vector<int> p) : parts(std::move(p)) { canonicalize(parts); }

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts.size(); ++i) s += (i ? "," : "") + std::to_string(p.parts[i]);
    return s + "]";
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Partition sort_to_partition(const Composition& a) { return Partition(a.parts); }

Composition as_composition(const Partition& p) { return Composition(p.parts); }

std::vector<Composition> rearrangements(const Partition& p) {
    std::vector<int> w = p.parts;
    std::sort(w.begin(), w.end());
    std::vector<Composition> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Bipartition::Bipartition(std::initializer_list<std::pair<int, int>> cols) {
    for (auto [a, b] : cols) columns.push_back({a, b});
    canonicalize(columns);
}

Bipartition::Bipartition(std::vector<Column> cols) : columns(std::move(cols)) { canonicalize(columns); }

int Bipartition::size() const {
    int s = 0;
    for (const auto& c : columns) s += c.weight();
    return s;
}

std::string to_string(const Bipartition& b) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.columns.size(); ++i)
        s += (i ? "," : "") + std::string("(") + std::to_string(b.columns[i].top) + "," +
             std::to_string(b.columns[i].bot) + ")";
    return s + "}";
}

std::vector<Bipartition> bipartitions(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<Bipartition> out;
    std::vector<Column> cur;
    bipartitions_rec(n, 0, columns_up_to(n), cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Bipartition disjoint_union(const Bipartition& a, const Bipartition& b) {
    std::vector<Column> c = a.columns;
    c.insert(c.end(), b.columns.begin(), b.columns.end());
    return Bipartition(std::move(c));
}

}  // namespace hopfpeak
