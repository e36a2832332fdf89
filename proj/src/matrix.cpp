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

#include "hopfpeak/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hopfpeak {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RatMatrix::append_row(const RatVector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    RatMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
        }
    return p;
}

RatVector operator*(const RatVector& x, const RatMatrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
    RatVector y(m.cols());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) y[j] += x[i] * m(i, j);
    }
    return y;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "\t" : "") << (*this)(r, c);
        os << '\n';
    }
    return os.str();
}

RowEchelon rref(RatMatrix m) {
    RowEchelon out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
        Rational inv = Rational(1) / m(lead, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            Rational f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(lead, j).is_zero()) m(r, j) -= f * m(lead, j);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix row_basis(const RatMatrix& m) {
    RowEchelon e = rref(m);
    RatMatrix b(e.pivots.size(), m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) b(r, c) = e.reduced(r, c);
    return b;
}

RatMatrix right_nullspace(const RatMatrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    RatMatrix ns(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        ns.append_row(v);
    }
    return ns;
}

RatMatrix left_nullspace(const RatMatrix& m) { return right_nullspace(m.transpose()); }

RatMatrix subspace_intersection(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("ambient dimension mismatch");
    RatMatrix stacked(0, a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) stacked.append_row(a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) stacked.append_row(b.row(r));
    // x * [A; B] == 0 splits as xa * A == -xb * B; the common vectors are xa * A.
    RatMatrix rel = left_nullspace(stacked);
    RatMatrix common(0, a.cols());
    for (std::size_t r = 0; r < rel.rows(); ++r) {
        RatVector x = rel.row(r);
        RatVector xa(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(a.rows()));
        common.append_row(xa * a);
    }
    return row_basis(common);
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_basis(a) == row_basis(b);
}

bool in_row_space(const RatMatrix& a, const RatVector& v) {
    RatMatrix s = a;
    if (s.rows() == 0) s = RatMatrix(0, v.size());
    std::size_t r0 = rank(s);
    s.append_row(v);
    return rank(s) == r0;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = rref(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw std::domain_error("singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::optional<RatVector> solve_left(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.cols()) throw std::invalid_argument("right-hand side length mismatch");
    // Solve a^T x^T = b^T through the augmented system.
    std::size_t n = a.rows(), m = a.cols();
    RatMatrix aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
        aug(i, n) = b[i];
    }
    RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    RatVector x(n);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
    return x;
}

}  // namespace hopfpeak
