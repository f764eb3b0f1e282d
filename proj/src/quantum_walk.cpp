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

#include "graphzeta/quantum_walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "graphzeta/eigen.hpp"
#include "graphzeta/error.hpp"

namespace graphzeta {

namespace {

void require_walk_graph(const Digraph& g) {
    if (!g.is_symmetric()) {
        throw PreconditionError("quantum walks need the symmetric digraph of a graph");
    }
    for (const auto& a : g.arcs()) {
        if (a.is_loop()) {
            throw ValidationError("quantum walks need a loopless graph; arc " + std::to_string(a.id) +
                                  " is a loop at vertex " + std::to_string(a.tail));
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.out_arcs(v).empty()) {
            throw ValidationError("vertex " + std::to_string(v) + " has no incident edge");
        }
    }
}

bool adjacent(const Digraph& g, ArcId to, ArcId from) { return g.arc(to).tail == g.arc(from).head; }

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
        return std::nullopt;
    }
    Rational r;
    mpz_sqrt(r.get_num_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), x.get_den_mpz_t());
    return r;
}

// Removes the element of `values` nearest to `target`.
void remove_nearest(std::vector<Complex>& values, Complex target) {
    if (values.empty()) {
        throw IdentityMismatch("no eigenvalue left to cancel against the (lambda^2 - 1) prefactor");
    }
    auto it = std::min_element(values.begin(), values.end(), [target](const Complex& x, const Complex& y) {
        return std::abs(x - target) < std::abs(y - target);
    });
    values.erase(it);
}

Real to_real(const Rational& x) {
    return static_cast<Real>(x.get_num().get_d()) / static_cast<Real>(x.get_den().get_d());
}

const PolyC kSquareMinusOne{Complex(-1), Complex(0), Complex(1)};

}  // namespace

void validate_probability(const Digraph& g, const TransitionProbability& p) {
    if (p.size() != g.arc_count()) {
        throw ValidationError("transition probability covers " + std::to_string(p.size()) + " arcs, graph has " +
                              std::to_string(g.arc_count()));
    }
    for (const auto& a : g.arcs()) {
        if (sgn(p[a.id]) <= 0 || p[a.id] > 1) {
            throw ValidationError("probability of arc " + std::to_string(a.id) + " is " + p[a.id].get_str() +
                                  ", outside (0, 1]");
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Rational sum = 0;
        for (ArcId a : g.out_arcs(v)) {
            sum += p[a];
        }
        if (sum != 1) {
            throw ValidationError("probabilities of arcs leaving vertex " + std::to_string(v) + " sum to " +
                                  sum.get_str() + ", not 1");
        }
    }
}

TransitionProbability uniform_probability(const Digraph& g) {
    TransitionProbability p(g.arc_count());
    for (const auto& a : g.arcs()) {
        p[a.id] = Rational(1, static_cast<unsigned long>(out_degree(g, a.tail)));
    }
    return p;
}

Matrix<Complex> szegedy_transition(const Digraph& g, const TransitionProbability& p) {
    require_walk_graph(g);
    validate_probability(g, p);
    const std::size_t m = g.arc_count();
    Matrix<Complex> u(m, m);
    for (ArcId a = 0; a < m; ++a) {
        for (ArcId b = 0; b < m; ++b) {
            if (adjacent(g, a, b)) {
                u(a, b) = 2.0 * std::sqrt(p[a].get_d() * p[g.partner(b)].get_d());
            }
        }
        u(a, g.partner(a)) -= 1.0;
    }
    return u;
}

std::optional<Matrix<Rational>> szegedy_transition_exact(const Digraph& g, const TransitionProbability& p) {
    require_walk_graph(g);
    validate_probability(g, p);
    const std::size_t m = g.arc_count();
    Matrix<Rational> u(m, m);
    for (ArcId a = 0; a < m; ++a) {
        for (ArcId b = 0; b < m; ++b) {
            if (adjacent(g, a, b)) {
                auto root = exact_sqrt(Rational(p[a] * p[g.partner(b)]));
                if (!root) {
                    return std::nullopt;
                }
                u(a, b) = 2 * *root;
            }
        }
        u(a, g.partner(a)) -= 1;
    }
    return u;
}

Matrix<Rational> grover_transition_exact(const Digraph& g) {
    require_walk_graph(g);
    const std::size_t m = g.arc_count();
    Matrix<Rational> u(m, m);
    for (ArcId a = 0; a < m; ++a) {
        Rational coin(2, static_cast<unsigned long>(out_degree(g, g.arc(a).tail)));
        coin.canonicalize();
        for (ArcId b = 0; b < m; ++b) {
            if (adjacent(g, a, b)) {
                u(a, b) = coin;
            }
        }
        u(a, g.partner(a)) -= 1;
    }
    return u;
}

Matrix<Complex> grover_transition(const Digraph& g) { return to_complex(grover_transition_exact(g)); }

WeightAssignment<Complex> szegedy_weights(const Digraph& g, const TransitionProbability& p) {
    require_walk_graph(g);
    validate_probability(g, p);
    WeightAssignment<Complex> w;
    for (const auto& a : g.arcs()) {
        w.start.emplace_back(std::sqrt(p[g.partner(a.id)].get_d()));
        w.end.emplace_back(2.0 * std::sqrt(p[a.id].get_d()));
    }
    return w;
}

Matrix<Real> szegedy_discriminant(const Digraph& g, const TransitionProbability& p) {
    require_walk_graph(g);
    validate_probability(g, p);
    Matrix<Real> t(g.vertex_count(), g.vertex_count());
    for (const auto& a : g.arcs()) {
        t(a.tail, a.head) += std::sqrt(to_real(Rational(p[a.id] * p[g.partner(a.id)])));
    }
    return t;
}

Matrix<Rational> grover_discriminant(const Digraph& g) {
    require_walk_graph(g);
    Matrix<Rational> t(g.vertex_count(), g.vertex_count());
    for (const auto& a : g.arcs()) {
        t(a.tail, a.head) += Rational(1, static_cast<unsigned long>(out_degree(g, a.tail)));
    }
    return t;
}

std::vector<Real> grover_discriminant_spectrum(const Digraph& g) {
    require_walk_graph(g);
    const std::size_t n = g.vertex_count();
    Matrix<Real> s(n, n);
    for (const auto& a : g.arcs()) {
        Real du = static_cast<Real>(out_degree(g, a.tail));
        Real dv = static_cast<Real>(out_degree(g, a.head));
        s(a.tail, a.head) += 1.0L / std::sqrt(du * dv);
    }
    return symmetric_eigenvalues(s);
}

std::vector<Complex> quadratic_lift_spectrum(const std::vector<Real>& mu, long excess, Real shift, Real scale) {
    using ComplexReal = std::complex<Real>;
    std::vector<Complex> out;
    for (Real m : mu) {
        ComplexReal b(scale * m);
        ComplexReal root = std::sqrt(b * b - 4.0L * shift);
        out.push_back(Complex((b + root) / 2.0L));
        out.push_back(Complex((b - root) / 2.0L));
    }
    for (long i = 0; i < excess; ++i) {
        out.emplace_back(1.0);
        out.emplace_back(-1.0);
    }
    for (long i = 0; i < -excess; ++i) {
        remove_nearest(out, Complex(1.0));
        remove_nearest(out, Complex(-1.0));
    }
    return out;
}

PolyC quadratic_lift_charpoly(const std::vector<Real>& mu, long excess, Real shift, Real scale) {
    PolyC out(Complex(1));
    for (Real m : mu) {
        out *= PolyC{Complex(static_cast<double>(shift)), Complex(static_cast<double>(-scale * m)), Complex(1)};
    }
    for (long i = 0; i < excess; ++i) {
        out *= kSquareMinusOne;
    }
    for (long i = 0; i < -excess; ++i) {
        out = divmod(out, kSquareMinusOne).first;
    }
    return out;
}

std::vector<Complex> grover_spectrum_via_zeta(const Digraph& g) {
    long excess = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
    return quadratic_lift_spectrum(grover_discriminant_spectrum(g), excess, 1.0L, 2.0L);
}

PolyC grover_charpoly_via_zeta(const Digraph& g) {
    long excess = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
    return quadratic_lift_charpoly(grover_discriminant_spectrum(g), excess, 1.0L, 2.0L);
}

std::vector<Complex> szegedy_spectrum_direct(const Digraph& g, const TransitionProbability& p) {
    return eigenvalues_numeric(szegedy_transition(g, p));
}

PolyC szegedy_charpoly_direct(const Digraph& g, const TransitionProbability& p) {
    auto values = szegedy_spectrum_direct(g, p);
    return poly_from_roots(values);
}

double charpoly_residual(const PolyC& a, const PolyC& b) {
    if (a.degree() != b.degree()) {
        return std::numeric_limits<double>::infinity();
    }
    double scale = 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        scale = std::max(scale, std::abs(b.coeff(i)));
        worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
    }
    return worst / scale;
}

QuadraticLiftFit szegedy_spectrum_via_discriminant(const Digraph& g, const TransitionProbability& p, double tolerance) {
    std::vector<Real> mu = symmetric_eigenvalues(szegedy_discriminant(g, p));
    long excess = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());

    QuadraticLiftFit fit;
    fit.direct = szegedy_spectrum_direct(g, p);
    PolyC direct = poly_from_roots(fit.direct);
    std::vector<QuadraticCandidate> matches;
    for (int shift : {1, 2}) {
        for (int scale : {1, 2}) {
            double residual = charpoly_residual(quadratic_lift_charpoly(mu, excess, shift, scale), direct);
            fit.candidates.push_back({shift, scale, residual});
            if (residual <= tolerance) {
                matches.push_back(fit.candidates.back());
            }
        }
    }
    if (matches.size() != 1) {
        std::string detail;
        for (const auto& c : fit.candidates) {
            detail += " (shift " + std::to_string(c.shift) + ", scale " + std::to_string(c.scale) +
                      ") residual " + std::to_string(c.residual) + ";";
        }
        throw IdentityMismatch(std::to_string(matches.size()) + " quadratic families fit the direct spectrum:" +
                               detail);
    }
    fit.shift = matches.front().shift;
    fit.scale = matches.front().scale;
    fit.spectrum = quadratic_lift_spectrum(mu, excess, fit.shift, fit.scale);
    fit.deviation = multiset_deviation(fit.spectrum, fit.direct);
    return fit;
}

}  // namespace graphzeta
