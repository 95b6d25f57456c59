/*
   Copyright 2026 The nodal-ci Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nodal/field.hpp"

namespace nodal {

/// Dense row-major matrix over a field backend.
template <Field F>
class Matrix {
   public:
    using Elem = typename F::Elem;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Elem> values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    /// Keeps the listed columns, in the given order.
    Matrix select_columns(std::span<const std::size_t> keep) const {
        Matrix out(rows_, keep.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < keep.size(); ++j) out(r, j) = (*this)(r, keep[j]);
        return out;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

template <Field F>
struct RowEchelon {
    Matrix<F> reduced;                       // nonzero rows only
    std::vector<std::size_t> pivot_columns;  // one per row of `reduced`
    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Reduced row echelon form. Zero rows are dropped.
template <Field F>
RowEchelon<F> row_reduce(const F& f, Matrix<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && f.is_zero(m(sel, c))) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(sel, j));
        const auto scale = f.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (f.is_zero(m(r, j))) continue;
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<F> reduced(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

/// Rank by Gaussian elimination; the Q backend is fraction-free (Bareiss).
template <Field F>
std::size_t rank(const F& f, Matrix<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && f.is_zero(m(sel, c))) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(sel, j));
        const auto scale = f.inv(m(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (f.is_zero(m(i, c))) continue;
            const auto factor = f.mul(m(i, c), scale);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        ++r;
    }
    return r;
}

template <>
std::size_t rank<RationalField>(const RationalField& f, Matrix<RationalField> m);

/// Rows form the reduced echelon basis of {v : m v = 0}.
template <Field F>
Matrix<F> kernel(const F& f, const Matrix<F>& m) {
    const auto ech = row_reduce(f, m);
    const std::size_t cols = m.cols();
    std::vector<char> is_pivot(cols, 0);
    for (auto c : ech.pivot_columns) is_pivot[c] = 1;
    Matrix<F> basis(cols - ech.rank(), cols);
    std::size_t out = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = f.one();
        for (std::size_t i = 0; i < ech.rank(); ++i) basis(out, ech.pivot_columns[i]) = f.neg(ech.reduced(i, free));
        ++out;
    }
    return row_reduce(f, std::move(basis)).reduced;
}

/// Rows span {u : u m = 0}.
template <Field F>
Matrix<F> left_kernel(const F& f, const Matrix<F>& m) {
    return kernel(f, m.transposed());
}

template <Field F>
Matrix<F> multiply(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    Matrix<F> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
        }
    return out;
}

template <Field F>
Matrix<F> identity(const F& f, std::size_t n) {
    Matrix<F> out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = f.one();
    return out;
}

/// Inverse of a square matrix; throws when singular.
template <Field F>
Matrix<F> inverse(const F& f, const Matrix<F>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto ech = row_reduce(f, std::move(aug));
    if (ech.rank() < n || ech.pivot_columns[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    Matrix<F> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
    return out;
}

}  // namespace nodal
