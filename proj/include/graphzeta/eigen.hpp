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

#ifndef GRAPHZETA_EIGEN_HPP
#define GRAPHZETA_EIGEN_HPP

#include <span>
#include <vector>

#include "graphzeta/field.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/poly.hpp"

namespace graphzeta {

/// All eigenvalues with multiplicity (complex Schur via Eigen). Throws
/// ConvergenceError when the QR iteration does not converge.
std::vector<Complex> eigenvalues_numeric(const Matrix<Complex>& m);

/// Eigenvalues of a real symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix<double>& m);
std::vector<Real> symmetric_eigenvalues(const Matrix<Real>& m);

/// Roots of a polynomial with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration followed by Newton polishing.
std::vector<Complex> polynomial_roots(const PolyC& p, int max_iterations = 2000);

/// prod (x - r_i).
PolyC poly_from_roots(std::span<const Complex> roots);

/// Bottleneck distance between two multisets under greedy nearest matching;
/// +infinity when the sizes differ.
double multiset_deviation(std::span<const Complex> a, std::span<const Complex> b);

/// Sorts by argument in [0, 2pi), then by modulus. Arguments within 1e-9
/// compare equal so that conjugate-free duplicates keep a stable order.
std::vector<Complex> sorted_spectrum(std::vector<Complex> values);

Matrix<Complex> to_complex(const Matrix<Rational>& m);

/// max |(U U^*)_{ij} - delta_ij|.
double unitarity_defect(const Matrix<Complex>& u);

}  // namespace graphzeta

#endif
