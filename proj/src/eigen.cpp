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

#include "graphzeta/eigen.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "graphzeta/error.hpp"

namespace graphzeta {

std::vector<Complex> eigenvalues_numeric(const Matrix<Complex>& m) {
    if (!m.is_square()) {
        throw PreconditionError("eigenvalues of a non-square matrix");
    }
    const auto n = static_cast<Eigen::Index>(m.rows());
    if (n == 0) {
        return {};
    }
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = m(i, j);
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("complex Schur iteration did not converge for a " + std::to_string(n) + "x" +
                               std::to_string(n) + " matrix (Frobenius norm " +
                               std::to_string(a.norm()) + ")");
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

namespace {

template <class Scalar>
std::vector<Scalar> self_adjoint_eigenvalues(const Matrix<Scalar>& m) {
    if (!m.is_square()) {
        throw PreconditionError("eigenvalues of a non-square matrix");
    }
    const auto n = static_cast<Eigen::Index>(m.rows());
    if (n == 0) {
        return {};
    }
    using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Dense a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = m(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Dense> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver did not converge for a " + std::to_string(n) + "x" +
                               std::to_string(n) + " matrix");
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<Scalar>(ev.data(), ev.data() + ev.size());
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Matrix<double>& m) { return self_adjoint_eigenvalues(m); }

std::vector<Real> symmetric_eigenvalues(const Matrix<Real>& m) { return self_adjoint_eigenvalues(m); }

namespace {

struct Eval {
    Complex value;
    Complex derivative;
    double magnitude;  // sum of |c_i| |z|^i, scales the rounding error in value
};

Eval horner(const std::vector<Complex>& c, Complex z) {
    Complex p = c.back();
    Complex dp = 0.0;
    double bound = std::abs(c.back());
    const double r = std::abs(z);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
        bound = bound * r + std::abs(c[i]);
    }
    return {p, dp, bound};
}

bool at_rounding_level(const Eval& e) {
    return std::abs(e.value) <= 8.0 * std::numeric_limits<double>::epsilon() * e.magnitude;
}

}  // namespace

std::vector<Complex> polynomial_roots(const PolyC& poly, int max_iterations) {
    if (poly.is_zero()) {
        throw PreconditionError("roots of the zero polynomial");
    }
    const int n = poly.degree();
    if (n == 0) {
        return {};
    }
    std::vector<Complex> c = poly.monic().coefficients();

    // Cauchy bound for the initial circle.
    double radius = 0.0;
    for (int i = 0; i < n; ++i) {
        radius = std::max(radius, std::abs(c[i]));
    }
    radius = 1.0 + radius;
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = std::polar(0.5 * radius, angle);
    }

    std::vector<bool> done(n, false);
    bool converged = false;
    for (int iter = 0; iter < max_iterations && !converged; ++iter) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            if (done[k]) {
                continue;
            }
            Eval e = horner(c, z[k]);
            if (e.value == Complex{} || at_rounding_level(e)) {
                done[k] = true;
                continue;
            }
            Complex ratio = e.value / e.derivative;
            Complex repulsion = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != k) {
                    repulsion += 1.0 / (z[k] - z[j]);
                }
            }
            Complex step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                step = ratio;
            }
            z[k] -= step;
            if (std::abs(step) > 1e-15 * std::max(1.0, std::abs(z[k]))) {
                converged = false;
            } else {
                done[k] = true;
            }
        }
    }
    if (!converged) {
        throw ConvergenceError("Aberth iteration did not converge for a degree " + std::to_string(n) +
                               " polynomial after " + std::to_string(max_iterations) + " sweeps");
    }
    for (auto& root : z) {
        for (int polish = 0; polish < 3; ++polish) {
            Eval e = horner(c, root);
            if (e.derivative == Complex{}) {
                break;
            }
            Complex next = root - e.value / e.derivative;
            if (std::abs(horner(c, next).value) >= std::abs(e.value)) {
                break;
            }
            root = next;
        }
    }
    return z;
}

PolyC poly_from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{1.0};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return PolyC(std::move(c));
}

double multiset_deviation(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const auto& x : a) {
        std::size_t best = b.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && std::abs(x - b[j]) < best_dist) {
                best_dist = std::abs(x - b[j]);
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

std::vector<Complex> sorted_spectrum(std::vector<Complex> values) {
    auto key = [](const Complex& z) {
        double arg = std::atan2(z.imag(), z.real());
        if (arg < -1e-12) {
            arg += 2.0 * std::numbers::pi;
        }
        if (arg < 0.0 || arg > 2.0 * std::numbers::pi - 1e-12) {
            arg = 0.0;
        }
        return arg;
    };
    std::stable_sort(values.begin(), values.end(), [&](const Complex& x, const Complex& y) {
        double ax = key(x);
        double ay = key(y);
        if (std::abs(ax - ay) > 1e-9) {
            return ax < ay;
        }
        return std::abs(x) < std::abs(y) - 1e-12;
    });
    return values;
}

Matrix<Complex> to_complex(const Matrix<Rational>& m) {
    return m.map<Complex>([](const Rational& x) { return Complex(x.get_d()); });
}

double unitarity_defect(const Matrix<Complex>& u) {
    if (!u.is_square()) {
        throw PreconditionError("unitarity of a non-square matrix");
    }
    const std::size_t n = u.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += u(i, k) * std::conj(u(j, k));
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

}  // namespace graphzeta
