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

#ifndef GRAPHZETA_IHARA_HPP
#define GRAPHZETA_IHARA_HPP

// Vertex-sized determinant forms of det(I - tM). Each assembled right-hand
// side is a reduced rational function that must equal the Hashimoto
// polynomial exactly.

#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/poly.hpp"
#include "graphzeta/ratfunc.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// det(I + tJ) on one vertex pair's block: 1 + |A_uu| t for a loop pair,
/// 1 - |A_uv||A_vu| t^2 otherwise.
PolyQ pair_factor(const PhiPair& pair);

/// The same determinant computed from the block of I + tJ itself, one per
/// pair in phi_pairs order.
std::vector<PolyQ> block_determinants(const Digraph& d);

struct IharaDigraph {
    std::vector<PhiPair> pairs;
    std::vector<PolyQ> factors;  // parallel to pairs
    Matrix<Rational> adjacency;  // a_uv = sum over A_uv of start(a) end(a)
    Matrix<RatFunc> degree;      // diagonal
    Matrix<RatFunc> correction;  // zero diagonal
    RatFunc rhs;
};

/// prod f(u, v) * det(I - tA + t^2 D - t^3 X). D and X are built from the
/// block inverses of I + tJ as sums of L J_b K / f_b and L J_b^2 K / f_b.
/// Requires GeneralDigraph mode.
IharaDigraph ihara_digraph(const Digraph& d, const Weights& w);

/// Elementwise forms of D and X. d_uu sums start(a') end(a) / f(u, w) over
/// a in A_uw, a' in A_wu. x_uv = |A_vu| (sum_{A_uv} start)(sum_{A_uv} end)
/// / f(u, v) for u != v.
Matrix<RatFunc> ihara_degree_elementwise(const Digraph& d, const Weights& w);
Matrix<RatFunc> ihara_correction_elementwise(const Digraph& d, const Weights& w);

/// x_uv = |A_uv| sum_{a in A_uv, a' in A_vu} start(a') end(a) / f(u, v).
/// This variant does not satisfy the determinant identity in general; it is
/// kept so tests can exhibit where it fails.
Matrix<RatFunc> ihara_correction_pairwise(const Digraph& d, const Weights& w);

/// prod factors * det(I - tA + t^2 D - t^3 X).
RatFunc assemble_digraph_rhs(const std::vector<PolyQ>& factors, const Matrix<Rational>& adjacency,
                             const Matrix<RatFunc>& degree, const Matrix<RatFunc>& correction);

struct IharaGraph {
    Matrix<Rational> adjacency;  // L K
    Matrix<Rational> degree;     // L J K, diagonal
    RatFunc rhs;
};

/// (1 - t^2)^{|E| - |V|} det(I - tA + t^2 (D - I)). Requires SymmetricOfGraph.
IharaGraph ihara_graph(const Digraph& g, const Weights& w);

/// start == 1 specialization for a symmetric digraph: a_uv sums end(a) over
/// A_uv, d_uu sums end(a) over arcs leaving u.
IharaGraph sato_ihara_graph(const Digraph& g, const std::vector<Rational>& end);

struct SatoDigraph {
    std::vector<PolyQ> factors;
    Matrix<RatFunc> adjacency;  // a_uv = sum_{A_uv} end(a) / f(u, v)
    Matrix<RatFunc> degree;     // diagonal
    RatFunc rhs;                // prod factors * det(I - tA + t^2 D)
};

/// start == 1 specialization for a general digraph. d_uu sums
/// |A_{head(a), u}| end(a) / f(u, head(a)) over non-loop arcs a leaving u.
SatoDigraph sato_ihara_digraph(const Digraph& d, const std::vector<Rational>& end);

/// Variant with d_uu = sum over all arcs a leaving u of end(a) / f(u, head(a)).
/// Agrees with sato_ihara_digraph only when there are no loops and no
/// parallel arcs; kept for the tests that show it.
SatoDigraph sato_ihara_digraph_unweighted_degree(const Digraph& d, const std::vector<Rational>& end);

/// Both sides of L T^{-1} K at start == 1: A - tD + t^2 X from the general
/// construction, and the Sato matrices A - tD.
struct SatoPencils {
    Matrix<RatFunc> general;
    Matrix<RatFunc> sato;
};
SatoPencils sato_pencils(const Digraph& d, const std::vector<Rational>& end);

}  // namespace graphzeta

#endif
