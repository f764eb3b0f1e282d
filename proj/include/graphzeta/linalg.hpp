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

#ifndef GRAPHZETA_LINALG_HPP
#define GRAPHZETA_LINALG_HPP

#include <cstddef>
#include <vector>

#include "graphzeta/error.hpp"
#include "graphzeta/field.hpp"
#include "graphzeta/kernels.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/poly.hpp"
#include "graphzeta/ratfunc.hpp"

namespace graphzeta {

/// Exact determinant by fraction-free elimination. Over Poly entries the
/// result stays a polynomial; no rational functions are introduced.
template <class E>
E det_exact(const Matrix<E>& m, Execution exec = Execution::Parallel) {
    return kernels::bareiss_det(m, exec);
}

/// Laplace expansion along the first row. Exponential; an oracle for small
/// matrices only.
template <class E>
E det_cofactor(const Matrix<E>& m) {
    if (!m.is_square()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return E(1);
    }
    if (n == 1) {
        return m(0, 0);
    }
    E acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (is_zero(m(0, c))) {
            continue;
        }
        Matrix<E> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j != c) {
                    minor(i - 1, jj++) = m(i, j);
                }
            }
        }
        E term = m(0, c) * det_cofactor(minor);
        if (c % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

/// I*x - M with entries in Q[x].
inline Matrix<PolyQ> characteristic_matrix(const Matrix<Rational>& m) {
    Matrix<PolyQ> out = m.map<PolyQ>([](const Rational& x) { return PolyQ(Rational(-x)); });
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out(i, i) += PolyQ::variable();
    }
    return out;
}

/// Monic characteristic polynomial det(x I - M) by Faddeev-LeVerrier:
/// M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
inline PolyQ char_poly_faddeev(const Matrix<Rational>& a, Execution exec = Execution::Parallel) {
    if (!a.is_square()) {
        throw PreconditionError("characteristic polynomial of a non-square matrix");
    }
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<Rational> next = kernels::matmul(a, mk, exec);
        for (std::size_t i = 0; i < n; ++i) {
            next(i, i) += c[n - k + 1];
        }
        mk = std::move(next);
        Rational tr = kernels::trace(kernels::matmul(a, mk, exec));
        c[n - k] = -tr / static_cast<long>(k);
    }
    return PolyQ(std::move(c));
}

/// det(x I - M) by fraction-free elimination over Q[x].
inline PolyQ char_poly_via_det(const Matrix<Rational>& a, Execution exec = Execution::Parallel) {
    if (!a.is_square()) {
        throw PreconditionError("characteristic polynomial of a non-square matrix");
    }
    return det_exact(characteristic_matrix(a), exec);
}

/// Similarity reduction to upper Hessenberg form over Q.
inline Matrix<Rational> hessenberg(Matrix<Rational> h) {
    if (!h.is_square()) {
        throw PreconditionError("Hessenberg form of a non-square matrix");
    }
    const std::size_t n = h.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t pivot = k + 1;
        while (pivot < n && sgn(h(pivot, k)) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        if (pivot != k + 1) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(h(pivot, j), h(k + 1, j));
            }
            for (std::size_t i = 0; i < n; ++i) {
                std::swap(h(i, pivot), h(i, k + 1));
            }
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            if (sgn(h(i, k)) == 0) {
                continue;
            }
            Rational factor = h(i, k) / h(k + 1, k);
            for (std::size_t j = k; j < n; ++j) {
                h(i, j) -= factor * h(k + 1, j);
            }
            for (std::size_t r = 0; r < n; ++r) {
                h(r, k + 1) += factor * h(r, i);
            }
        }
    }
    return h;
}

/// Monic characteristic polynomial from the Hessenberg form, expanding
/// along the last row of each leading block.
inline PolyQ char_poly_hessenberg(const Matrix<Rational>& a) {
    const Matrix<Rational> h = hessenberg(a);
    const std::size_t n = h.rows();
    std::vector<PolyQ> p(n + 1);
    p[0] = PolyQ(Rational(1));
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = (PolyQ::variable() - PolyQ(h(m - 1, m - 1))) * p[m - 1];
        Rational chain = 1;
        for (std::size_t i = 1; i < m; ++i) {
            chain *= h(m - i, m - i - 1);
            if (sgn(chain) == 0) {
                break;
            }
            p[m] -= PolyQ(Rational(h(m - i - 1, m - 1) * chain)) * p[m - i - 1];
        }
    }
    return p[n];
}

/// Char poly entry point for exact scalar matrices (Faddeev-LeVerrier).
inline PolyQ char_poly_exact(const Matrix<Rational>& a) { return char_poly_faddeev(a); }

/// Gauss-Jordan inverse over a field. Throws SingularMatrixError.
template <class E>
Matrix<E> inverse(Matrix<E> m) {
    if (!m.is_square()) {
        throw PreconditionError("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix<E> inv = Matrix<E>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(m(p, k))) {
            ++p;
        }
        if (p == n) {
            throw SingularMatrixError("matrix is singular");
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        }
        E pivot_inv = E(1) / m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = m(k, j) * pivot_inv;
            inv(k, j) = inv(k, j) * pivot_inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) {
                continue;
            }
            E factor = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - factor * m(k, j);
                inv(i, j) = inv(i, j) - factor * inv(k, j);
            }
        }
    }
    return inv;
}

/// Copies rows [r0, r0+nr) x cols [c0, c0+nc).
template <class E>
Matrix<E> block(const Matrix<E>& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    Matrix<E> out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            out(i, j) = m(r0 + i, c0 + j);
        }
    }
    return out;
}

/// [[a, b], [c, d]].
template <class E>
Matrix<E> assemble(const Matrix<E>& a, const Matrix<E>& b, const Matrix<E>& c, const Matrix<E>& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
        throw PreconditionError("block shapes do not line up");
    }
    Matrix<E> out(a.rows() + c.rows(), a.cols() + b.cols());
    auto put = [&out](const Matrix<E>& src, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < src.rows(); ++i) {
            for (std::size_t j = 0; j < src.cols(); ++j) {
                out(r0 + i, c0 + j) = src(i, j);
            }
        }
    };
    put(a, 0, 0);
    put(b, 0, a.cols());
    put(c, a.rows(), 0);
    put(d, a.rows(), a.cols());
    return out;
}

}  // namespace graphzeta

#endif
