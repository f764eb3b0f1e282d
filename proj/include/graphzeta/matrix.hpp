// Copyright 2026 The graphzeta Authors
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

#ifndef GRAPHZETA_MATRIX_HPP
#define GRAPHZETA_MATRIX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphzeta/error.hpp"

namespace graphzeta {

/// Dense row-major matrix over a ring element type E. E(0) and E(1) must be
/// the additive and multiplicative identities.
template <class E>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, E(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<E> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) {
            throw PreconditionError("matrix data size does not match its shape");
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = E(1);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<E>& data() const noexcept { return data_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const E& c, Matrix m) {
        for (auto& x : m.data_) {
            x = c * x;
        }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Elementwise conversion, e.g. Rational -> Poly -> RatFunc promotion.
    template <class To, class Fn>
    Matrix<To> map(Fn&& fn) const {
        std::vector<To> out;
        out.reserve(data_.size());
        for (const auto& x : data_) {
            out.push_back(fn(x));
        }
        return Matrix<To>(rows_, cols_, std::move(out));
    }

   private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw PreconditionError("matrix shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<E> data_;
};

/// Promotes each entry through E's converting constructor.
template <class To, class From>
Matrix<To> promote(const Matrix<From>& m) {
    return m.template map<To>([](const From& x) { return To(x); });
}

/// One row per line, entries separated by ", ", wrapped in [ ].
template <class E, class Fmt>
std::string format_matrix(const Matrix<E>& m, Fmt&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ", ";
            }
            out += fmt(m(i, j));
        }
        out += "]\n";
    }
    return out;
}

}  // namespace graphzeta

#endif
