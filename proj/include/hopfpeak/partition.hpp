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
 // Integer partitions and bipartitions (two-row column multisets).

#ifndef HOPFPEAK_PARTITION_HPP
#define HOPFPEAK_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hopfpeak/composition.hpp"

namespace hopfpeak {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);  // sorts

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline int degree(const Partition& p) { return p.size(); }
std::string to_string(const Partition& p);

std::vector<Partition> partitions(int n);  // lexicographic on the parts vector
Partition sort_to_partition(const Composition& a);
Composition as_composition(const Partition& p);  // the decreasing arrangement
std::vector<Composition> rearrangements(const Partition& p);  // distinct ones

struct Column {
    int top = 0;
    int bot = 0;
    int weight() const { return top + bot; }
    friend auto operator<=>(const Column&, const Column&) = default;
};

struct Bipartition {
    std::vector<Column> columns;  // weakly decreasing lexicographic

    Bipartition() = default;
    Bipartition(std::initializer_list<std::pair<int, int>> cols);
    explicit Bipartition(std::vector<Column> cols);  // sorts

    int size() const;
    int length() const { return static_cast<int>(columns.size()); }

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

inline int degree(const Bipartition& b) { return b.size(); }
std::string to_string(const Bipartition& b);

std::vector<Bipartition> bipartitions(int n);  // lexicographic on canonical column lists
Bipartition disjoint_union(const Bipartition& a, const Bipartition& b);

}  // namespace hopfpeak

#endif  // HOPFPEAK_PARTITION_HPP
