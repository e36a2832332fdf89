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
 // Dense matrices over the rationals and the few exact routines the
 // basis-change and subspace computations need.

#ifndef HOPFPEAK_MATRIX_HPP
#define HOPFPEAK_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfpeak/rational.hpp"

namespace hopfpeak {

using RatVector = std::vector<Rational>;

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    void append_row(const RatVector& row);
    RatMatrix transpose() const;
    bool is_zero() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

// Nonzero rows of the reduced row echelon form: a canonical basis of the row space.
RatMatrix row_basis(const RatMatrix& m);

// Rows x with x * m == 0.
RatMatrix left_nullspace(const RatMatrix& m);

// Rows v with m * v^T == 0.
RatMatrix right_nullspace(const RatMatrix& m);

// Row spaces in, canonical row basis of the intersection out.
RatMatrix subspace_intersection(const RatMatrix& a, const RatMatrix& b);
bool same_row_space(const RatMatrix& a, const RatMatrix& b);
bool in_row_space(const RatMatrix& a, const RatVector& v);

// Throws std::domain_error on a singular matrix.
RatMatrix inverse(const RatMatrix& m);

// Some x with x * a == b, or nullopt.
std::optional<RatVector> solve_left(const RatMatrix& a, const RatVector& b);

RatVector operator*(const RatVector& x, const RatMatrix& m);

}  // namespace hopfpeak

#endif  // HOPFPEAK_MATRIX_HPP
