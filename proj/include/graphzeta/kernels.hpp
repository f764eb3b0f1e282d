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

#ifndef GRAPHZETA_KERNELS_HPP
#define GRAPHZETA_KERNELS_HPP

// Data-parallel kernels. Every kernel has a plain serial reference next to
// its OpenMP version; the two must return identical results for exact
// element types, and tests hold them to that.

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#include "graphzeta/error.hpp"
#include "graphzeta/field.hpp"
#include "graphzeta/matrix.hpp"

namespace graphzeta {

enum class Execution { Serial, Parallel };

namespace kernels {

// Parallel regions are skipped below this much work; OpenMP startup would
// dominate.
inline constexpr std::size_t kParallelCutoff = 64;

template <class E>
Matrix<E> matmul_serial(const Matrix<E>& a, const Matrix<E>& b) {
    if (a.cols() != b.rows()) {
        throw PreconditionError("matmul shape mismatch");
    }
    Matrix<E> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

template <class E>
Matrix<E> matmul_parallel(const Matrix<E>& a, const Matrix<E>& b) {
    if (a.cols() != b.rows()) {
        throw PreconditionError("matmul shape mismatch");
    }
    Matrix<E> c(a.rows(), b.cols());
    const auto rows = static_cast<long>(a.rows());
    const bool big = a.rows() * b.cols() >= kParallelCutoff;
#pragma omp parallel for schedule(static) if (big)
    for (long i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

template <class E>
Matrix<E> matmul(const Matrix<E>& a, const Matrix<E>& b, Execution exec = Execution::Parallel) {
    return exec == Execution::Serial ? matmul_serial(a, b) : matmul_parallel(a, b);
}

template <class E>
E trace(const Matrix<E>& m) {
    E acc(0);
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        acc += m(i, i);
    }
    return acc;
}

/// tr(M), tr(M^2), ..., tr(M^k_max).
template <class E>
std::vector<E> power_traces(const Matrix<E>& m, std::size_t k_max, Execution exec = Execution::Parallel) {
    std::vector<E> out;
    out.reserve(k_max);
    if (k_max == 0) {
        return out;
    }
    Matrix<E> p = m;
    out.push_back(trace(p));
    for (std::size_t k = 2; k <= k_max; ++k) {
        p = matmul(p, m, exec);
        out.push_back(trace(p));
    }
    return out;
}

namespace detail {

// Returns false when column k has no usable pivot (singular).
template <class E>
bool bareiss_pivot(Matrix<E>& m, std::size_t k, int& sign) {
    if (!is_zero(m(k, k))) {
        return true;
    }
    for (std::size_t r = k + 1; r < m.rows(); ++r) {
        if (!is_zero(m(r, k))) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(k, j), m(r, j));
            }
            sign = -sign;
            return true;
        }
    }
    return false;
}

template <class E>
void bareiss_row(Matrix<E>& m, std::size_t k, std::size_t i, const E& prev) {
    const std::size_t n = m.rows();
    for (std::size_t j = k + 1; j < n; ++j) {
        E num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(num, prev);
    }
    m(i, k) = E(0);
}

}  // namespace detail

/// Fraction-free Gaussian elimination. Every division is exact, so over an
/// integral domain (Z, Q[t]) entries never leave the domain.
template <class E>
E bareiss_det_serial(Matrix<E> m) {
    if (!m.is_square()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return E(1);
    }
    int sign = 1;
    E prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!detail::bareiss_pivot(m, k, sign)) {
            return E(0);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            detail::bareiss_row(m, k, i, prev);
        }
        prev = m(k, k);
    }
    E det = m(n - 1, n - 1);
    return sign > 0 ? det : E(0) - det;
}

template <class E>
E bareiss_det_parallel(Matrix<E> m) {
    if (!m.is_square()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return E(1);
    }
    int sign = 1;
    E prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!detail::bareiss_pivot(m, k, sign)) {
            return E(0);
        }
        const auto first = static_cast<long>(k + 1);
        const auto last = static_cast<long>(n);
        const bool big = (n - k) * (n - k) >= kParallelCutoff;
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (big)
        for (long i = first; i < last; ++i) {
            try {
                detail::bareiss_row(m, k, static_cast<std::size_t>(i), prev);
            } catch (...) {
#pragma omp critical(graphzeta_bareiss_failure)
                failure = std::current_exception();
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
        prev = m(k, k);
    }
    E det = m(n - 1, n - 1);
    return sign > 0 ? det : E(0) - det;
}

template <class E>
E bareiss_det(const Matrix<E>& m, Execution exec = Execution::Parallel) {
    return exec == Execution::Serial ? bareiss_det_serial(m) : bareiss_det_parallel(m);
}

}  // namespace kernels

template <class E>
Matrix<E> operator*(const Matrix<E>& a, const Matrix<E>& b) {
    return kernels::matmul(a, b);
}

}  // namespace graphzeta

#endif
