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

#ifndef GRAPHZETA_QUANTUM_WALK_HPP
#define GRAPHZETA_QUANTUM_WALK_HPP

// Szegedy and Grover walks on the symmetric digraph of a loopless graph.
// Entry (a, a') of the transition matrix is the amplitude of moving from
// arc a' to arc a, so it is nonzero when tail(a) = head(a').

#include <cstddef>
#include <optional>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/field.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/poly.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// p(a) for every arc; arcs leaving each vertex sum to 1.
using TransitionProbability = std::vector<Rational>;

/// Throws ValidationError naming the offending arc or vertex.
void validate_probability(const Digraph& g, const TransitionProbability& p);

/// p(a) = 1 / outdeg(tail(a)).
TransitionProbability uniform_probability(const Digraph& g);

/// 2 sqrt(p(a) p(partner(a'))) [tail(a) = head(a')] - [a' = partner(a)].
Matrix<Complex> szegedy_transition(const Digraph& g, const TransitionProbability& p);

/// The same matrix over the rationals, when every product under a square
/// root is the square of a rational.
std::optional<Matrix<Rational>> szegedy_transition_exact(const Digraph& g, const TransitionProbability& p);

/// 2 / deg(tail(a)) [tail(a) = head(a')] - [a' = partner(a)].
Matrix<Rational> grover_transition_exact(const Digraph& g);
Matrix<Complex> grover_transition(const Digraph& g);

/// Weights whose edge matrix is the transpose of the Szegedy matrix:
/// start(a) = sqrt(p(partner(a))), end(a) = 2 sqrt(p(a)).
WeightAssignment<Complex> szegedy_weights(const Digraph& g, const TransitionProbability& p);

/// T_uv = sum over A_uv of sqrt(p(a) p(partner(a))); symmetric.
Matrix<Real> szegedy_discriminant(const Digraph& g, const TransitionProbability& p);

/// T_uv = |A_uv| / deg(u).
Matrix<Rational> grover_discriminant(const Digraph& g);

/// Eigenvalues of the Grover discriminant, ascending. It is similar to a
/// symmetric matrix, so they are real.
std::vector<Real> grover_discriminant_spectrum(const Digraph& g);

/// |E| - |V| copies of each of +1 and -1 together with the roots of
/// lambda^2 + shift - scale mu lambda for every mu. A negative excess removes
/// that many copies of +1 and -1 from the quadratic roots instead.
std::vector<Complex> quadratic_lift_spectrum(const std::vector<Real>& mu, long excess, Real shift, Real scale);

/// (lambda^2 - 1)^excess prod (lambda^2 + shift - scale mu lambda). A negative
/// excess is divided out.
PolyC quadratic_lift_charpoly(const std::vector<Real>& mu, long excess, Real shift, Real scale);

std::vector<Complex> grover_spectrum_via_zeta(const Digraph& g);

/// The Grover factorization with shift 1 and scale 2.
PolyC grover_charpoly_via_zeta(const Digraph& g);

/// Direct spectrum of the Szegedy matrix.
std::vector<Complex> szegedy_spectrum_direct(const Digraph& g, const TransitionProbability& p);

/// Monic characteristic polynomial rebuilt from the direct spectrum.
PolyC szegedy_charpoly_direct(const Digraph& g, const TransitionProbability& p);

/// max_i |a_i - b_i| / max(1, max_i |b_i|); +infinity on degree mismatch.
double charpoly_residual(const PolyC& a, const PolyC& b);

/// Coefficient tolerance used for characteristic polynomial matches.
inline constexpr double kCharPolyTolerance = 1e-8;

struct QuadraticCandidate {
    int shift;
    int scale;
    double residual;
};

struct QuadraticLiftFit {
    int shift = 0;
    int scale = 0;
    std::vector<QuadraticCandidate> candidates;  // every (shift, scale) tried
    std::vector<Complex> spectrum;               // from the fitted quadratics
    std::vector<Complex> direct;                 // eigenvalues of U
    double deviation = 0;                        // multiset deviation of the two
};

/// Fits lambda^2 + shift - scale mu lambda, shift and scale in {1, 2}, with
/// mu over the Szegedy discriminant spectrum, against the direct
/// characteristic polynomial. Throws IdentityMismatch listing every
/// candidate's residual when none fits, or when more than one does.
QuadraticLiftFit szegedy_spectrum_via_discriminant(const Digraph& g, const TransitionProbability& p,
                                            double tolerance = kCharPolyTolerance);

/// Shift and scale as printed next to the discriminant factorization.
inline constexpr int kPrintedShift = 2;
inline constexpr int kPrintedScale = 1;

}  // namespace graphzeta

#endif
