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
 // JSON for indices, elements, tensors and reports; TSV for tables.

#ifndef HOPFPEAK_IO_HPP
#define HOPFPEAK_IO_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hopfpeak/composition.hpp"
#include "hopfpeak/core.hpp"
#include "hopfpeak/element.hpp"
#include "hopfpeak/matrix.hpp"
#include "hopfpeak/partition.hpp"
#include "hopfpeak/permutation.hpp"
#include "hopfpeak/ssym.hpp"

namespace hopfpeak::io {

using Json = nlohmann::json;

// Malformed input throws std::invalid_argument.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);  // "n/d" strings or integers

Json index_json(const Composition& a);
Json index_json(const Partition& p);
Json index_json(const Permutation& s);
Json index_json(const Bipartition& b);  // {"top":[...],"bot":[...]}

template <class A, class B>
Json index_json(const std::pair<A, B>& p) {
    return Json::array({index_json(p.first), index_json(p.second)});
}

void index_from_json(const Json& j, Composition& out);
void index_from_json(const Json& j, Partition& out);
void index_from_json(const Json& j, Permutation& out);
void index_from_json(const Json& j, Bipartition& out);

template <class A, class B>
void index_from_json(const Json& j, std::pair<A, B>& out) {
    if (!j.is_array() || j.size() != 2) throw FormatError("tensor index must be a pair");
    index_from_json(j[0], out.first);
    index_from_json(j[1], out.second);
}

template <class K>
K parse_index(const Json& j) {
    K k;
    index_from_json(j, k);
    return k;
}

// Terms sorted by the serialized index.
template <class K>
Json terms_json(const Element<K>& a) {
    std::vector<std::pair<std::string, Json>> rows;
    for (const auto& [k, c] : a) {
        Json idx = index_json(k);
        rows.emplace_back(idx.dump(), Json{{"index", idx}, {"coeff", rational_json(c)}});
    }
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Json out = Json::array();
    for (auto& r : rows) out.push_back(std::move(r.second));
    return out;
}

template <class K>
Json element_json(const Element<K>& a) {
    return Json{{"algebra", a.tag().algebra}, {"basis", a.tag().basis}, {"terms", terms_json(a)}};
}

// Accepts a full element object, a bare list of terms, or a single index.
template <class K>
Element<K> element_from_json(const Json& j, const BasisTag& tag) {
    Element<K> out(tag);
    auto add_terms = [&](const Json& terms) {
        for (const auto& t : terms) {
            if (!t.is_object() || !t.contains("index")) throw FormatError("term needs an index");
            out.add_term(parse_index<K>(t["index"]), t.contains("coeff") ? rational_from_json(t["coeff"]) : Rational(1));
        }
    };
    if (j.is_object() && j.contains("terms")) {
        if (!j["terms"].is_array()) throw FormatError("terms must be an array");
        add_terms(j["terms"]);
    } else if (j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("index")) {
        add_terms(j);
    } else {
        out.add_term(parse_index<K>(j), 1);
    }
    return out;
}

// Basis name stored in an element object, or empty.
std::string basis_in_json(const Json& j);
std::string algebra_in_json(const Json& j);

Json report_json(const Report& r);

// A list of {"sigma":[...],"tau":[...],"value":"r"}.
std::vector<std::tuple<Permutation, Permutation, Rational>> constructor_table_from_json(const Json& j);

// Tab-separated, with a header row of column labels and a label on each row.
std::string tsv(const RatMatrix& m, const std::vector<std::string>& row_labels,
                const std::vector<std::string>& col_labels);

// Rows in lexicographic order, columns their inverses, so entry (i, j) is
// <Theta*(F*_row_i), F_col_j>.
std::string ssym_theta_table(const ssym::ThetaStar& t, int n);

}  // namespace hopfpeak::io

#endif  // HOPFPEAK_IO_HPP
