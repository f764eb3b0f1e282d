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

#ifndef GRAPHZETA_TESTS_SUPPORT_GENERATORS_HPP
#define GRAPHZETA_TESTS_SUPPORT_GENERATORS_HPP

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/quantum_walk.hpp"
#include "graphzeta/series.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta::testing {

using Rng = std::mt19937_64;

/// Nonzero p/q with |p| <= 10 and 1 <= q <= 10.
Rational random_rational(Rng& rng);

/// Positive p/q with 1 <= p, q <= 10.
Rational random_positive_rational(Rng& rng);

Weights random_weights(std::size_t arc_count, Rng& rng);

Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Random series with the given constant term.
SeriesQ random_series(std::size_t order, const Rational& constant, Rng& rng);

/// 1..max_vertices vertices, 0..max_arcs arcs with uniformly random
/// endpoints, so loops and parallel arcs are common.
Digraph random_multidigraph(Rng& rng, std::size_t max_vertices = 4, std::size_t max_arcs = 10);

/// Symmetric digraph of a random multigraph with loops allowed.
Digraph random_multigraph(Rng& rng, std::size_t max_vertices = 4, std::size_t max_edges = 6);

/// Connected simple graph on n vertices: a random spanning tree plus each
/// remaining pair with probability 1/2.
Digraph random_connected_simple_graph(Rng& rng, std::size_t n);

/// Random positive rational transition probability.
TransitionProbability random_probability(const Digraph& g, Rng& rng);

/// Every connected simple graph on n vertices up to isomorphism, as edge
/// lists.
std::vector<std::vector<Edge>> connected_graphs_up_to_isomorphism(std::size_t n);

}  // namespace graphzeta::testing

#endif
