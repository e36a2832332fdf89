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
 // Serialization helpers.

#include "hopfpeak/io.hpp"

#include <sstream>

namespace hopfpeak::io {

namespace {
std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an integer array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw FormatError(std::string(what) + " must be an integer array");
        out.push_back(x.get<int>());
    }
    return out;
}

std::string label(const Permutation& s) { return to_string(s); }
}  // namespace

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw FormatError("coefficient must be an integer or a \"num/den\" string");
}

Json index_json(const Composition& a) { return Json(a.parts); }
Json index_json(const Partition& p) { return Json(p.parts); }
Json index_json(const Permutation& s) { return Json(s.word); }

Json index_json(const Bipartition& b) {
    Json top = Json::array(), bot = Json::array();
    for (const auto& c : b.columns) {
        top.push_back(c.top);
        bot.push_back(c.bot);
    }
    return Json{{"top", top}, {"bot", bot}};
}

void index_from_json(const Json& j, Composition& out) { out = Composition(int_array(j, "composition")); }
void index_from_json(const Json& j, Partition& out) { out = Partition(int_array(j, "partition")); }
void index_from_json(const Json& j, Permutation& out) { out = Permutation(int_array(j, "permutation")); }

void index_from_json(const Json& j, Bipartition& out) {
    if (!j.is_object() || !j.contains("top") || !j.contains("bot"))
        throw FormatError("bipartition must be {\"top\":[...],\"bot\":[...]}");
    auto top = int_array(j["top"], "top row"), bot = int_array(j["bot"], "bottom row");
    if (top.size() != bot.size()) throw FormatError("bipartition rows differ in length");
    std::vector<Column> cols;
    for (std::size_t i = 0; i < top.size(); ++i) cols.push_back(Column{top[i], bot[i]});
    out = Bipartition(cols);
}

std::string basis_in_json(const Json& j) {
    return j.is_object() && j.contains("basis") && j["basis"].is_string() ? j["basis"].get<std::string>() : "";
}

std::string algebra_in_json(const Json& j) {
    return j.is_object() && j.contains("algebra") && j["algebra"].is_string() ? j["algebra"].get<std::string>() : "";
}

Json report_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks()) {
        Json one{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
        if (!c.passed) one["witness"] = c.witness;
        checks.push_back(one);
    }
    return Json{{"title", r.title()}, {"passed", r.passed()}, {"checks", checks}};
}

std::vector<std::tuple<Permutation, Permutation, Rational>> constructor_table_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("constructor table must be a list");
    std::vector<std::tuple<Permutation, Permutation, Rational>> out;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("sigma") || !e.contains("tau") || !e.contains("value"))
            throw FormatError("constructor entries need sigma, tau and value");
        Permutation s = parse_index<Permutation>(e["sigma"]), t = parse_index<Permutation>(e["tau"]);
        if (s.size() != t.size()) throw FormatError("constructor entry mixes degrees");
        out.emplace_back(s, t, rational_from_json(e["value"]));
    }
    return out;
}

std::string tsv(const RatMatrix& m, const std::vector<std::string>& row_labels,
                const std::vector<std::string>& col_labels) {
    std::ostringstream os;
    for (const auto& c : col_labels) os << '\t' << c;
    os << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << row_labels.at(i);
        for (std::size_t j = 0; j < m.cols(); ++j) os << '\t' << m(i, j).str();
        os << '\n';
    }
    return os.str();
}

std::string ssym_theta_table(const ssym::ThetaStar& t, int n) {
    auto rows = permutations(n);
    RatMatrix m(rows.size(), rows.size());
    std::vector<std::string> rl, cl;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rl.push_back(label(rows[i]));
        cl.push_back(label(inverse(rows[i])));
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = t.entry(rows[i], inverse(rows[j]));
    }
    return tsv(m, rl, cl);
}

}  // namespace hopfpeak::io
