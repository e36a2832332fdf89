// Test-only polynomial arithmetic in finitely many commuting variables, used to
// cross-check the combinatorial product rules against honest multiplication.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "hopfpeak/composition.hpp"
#include "hopfpeak/partition.hpp"
#include "hopfpeak/rational.hpp"

namespace oracle {

using hopfpeak::Rational;
using Exponent = std::vector<int>;
using Poly = std::map<Exponent, Rational>;

inline Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// M_alpha in x_1..x_n: sum over i_1 < ... < i_l of x_{i_1}^{a_1} ... x_{i_l}^{a_l}.
inline Poly monomial_qsym(const hopfpeak::Composition& a, int n) {
    Poly out;
    int l = a.length();
    std::vector<int> idx(static_cast<std::size_t>(l));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == l) {
            Exponent e(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < l; ++j) e[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = a.parts[static_cast<std::size_t>(j)];
            out[e] += 1;
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Coefficient of x_1^{g_1} ... x_l^{g_l}.
inline Rational qsym_coefficient(const Poly& p, const hopfpeak::Composition& g, int n) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < g.length(); ++j) e[static_cast<std::size_t>(j)] = g.parts[static_cast<std::size_t>(j)];
    auto it = p.find(e);
    return it == p.end() ? Rational(0) : it->second;
}

// m_lambda in variable pairs (x_i, y_i), i < n: every distinct monomial
// prod x_{i_j}^{a_j} y_{i_j}^{b_j} over injective column placements, once.
inline Poly monomial_dsym(const hopfpeak::Bipartition& b, int n) {
    std::set<Exponent> monos;
    int l = b.length();
    std::vector<int> idx(static_cast<std::size_t>(l));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == l) {
            Exponent e(static_cast<std::size_t>(2 * n), 0);
            for (int j = 0; j < l; ++j) {
                auto i = static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
                e[2 * i] = b.columns[static_cast<std::size_t>(j)].top;
                e[2 * i + 1] = b.columns[static_cast<std::size_t>(j)].bot;
            }
            monos.insert(e);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            used[static_cast<std::size_t>(i)] = true;
            idx[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1);
            used[static_cast<std::size_t>(i)] = false;
        }
    };
    rec(rec, 0);
    Poly out;
    for (const auto& e : monos) out[e] = 1;
    return out;
}

inline Rational dsym_coefficient(const Poly& p, const hopfpeak::Bipartition& b, int n) {
    Exponent e(static_cast<std::size_t>(2 * n), 0);
    for (int j = 0; j < b.length(); ++j) {
        e[2 * static_cast<std::size_t>(j)] = b.columns[static_cast<std::size_t>(j)].top;
        e[2 * static_cast<std::size_t>(j) + 1] = b.columns[static_cast<std::size_t>(j)].bot;
    }
    auto it = p.find(e);
    return it == p.end() ? Rational(0) : it->second;
}

}  // namespace oracle
