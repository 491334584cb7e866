// Copyright 2026 The oikomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OIKOMPLEX_MATRIX_HPP
#define OIKOMPLEX_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace oikomplex {

/// Dense row-major matrix over a commutative ring T.
///
/// T needs +, -, * and ==. Ring elements that carry context (polynomials
/// carry their width) are handled by passing an explicit zero to the
/// constructor instead of relying on T{}.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T &fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T> &data() const noexcept { return data_; }

    friend bool operator==(const Matrix &, const Matrix &) = default;

    template <class F>
    auto map(F &&f) const -> Matrix<decltype(f(std::declval<const T &>()))>
    {
        using U = decltype(f(std::declval<const T &>()));
        Matrix<U> out;
        out.rows_ = rows_;
        out.cols_ = cols_;
        out.data_.reserve(data_.size());
        for (const auto &x : data_) out.data_.push_back(f(x));
        return out;
    }

    /// Submatrix on the given columns, in the given order.
    Matrix columns(const std::vector<std::size_t> &idx) const
    {
        Matrix out;
        out.rows_ = rows_;
        out.cols_ = idx.size();
        out.data_.reserve(rows_ * idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (auto c : idx) out.data_.push_back((*this)(r, c));
        return out;
    }

    Matrix transpose() const
    {
        Matrix out;
        out.rows_ = cols_;
        out.cols_ = rows_;
        out.data_.reserve(data_.size());
        for (std::size_t c = 0; c < cols_; ++c)
            for (std::size_t r = 0; r < rows_; ++r) out.data_.push_back((*this)(r, c));
        return out;
    }

private:
    template <class U>
    friend class Matrix;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// a·b; `zero` supplies the additive identity of the result entries.
template <class T>
Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b, const T &zero)
{
    if (a.cols() != b.rows()) throw invalid_input("multiply: inner dimensions differ");
    Matrix<T> out(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T &x = a(i, k);
            if (x == zero) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) == zero) continue;
                out(i, j) = out(i, j) + x * b(k, j);
            }
        }
    return out;
}

/// Determinant by cofactor expansion along rows, memoizing minors on the
/// set of remaining columns. Intended for the small sizes (≤ 6) of
/// generic-matrix minors; 0×0 has determinant `one`.
template <class T>
T determinant(const Matrix<T> &m, const T &one)
{
    if (m.rows() != m.cols()) throw invalid_input("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n > 62) throw invalid_input("determinant: matrix too large for cofactor expansion");
    const T zero = one - one;
    std::unordered_map<std::uint64_t, T> memo;
    // minor(mask) = det of rows [n - popcount(mask), n) restricted to columns in mask.
    auto minor = [&](auto &&self, std::uint64_t mask) -> T {
        if (mask == 0) return one;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t row = n - k;
        T acc = zero;
        bool negative = false;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask >> c & 1U)) continue;
            const T &entry = m(row, c);
            if (!(entry == zero)) {
                T term = entry * self(self, mask & ~(std::uint64_t{1} << c));
                if (negative) acc = acc - term;
                else acc = acc + term;
            }
            negative = !negative;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(minor, n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1));
}

/// Rank over a field by Gaussian elimination (exact for exact T).
template <class T>
std::size_t rank(Matrix<T> m)
{
    const T zero = T(0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == zero) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == zero) continue;
            T factor = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace oikomplex

#endif
