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

#include <gtest/gtest.h>

#include "graphzeta/error.hpp"
#include "graphzeta/instance.hpp"
#include "graphzeta/ihara.hpp"
#include "graphzeta/linalg.hpp"
#include "graphzeta/weights.hpp"
#include "graphzeta/zeta.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace graphzeta {
namespace {

using testing::Rng;

Rational q(long p, long d = 1) { return Rational(p, d); }

const PolyQ t = PolyQ::variable();

Instance fixture(std::string_view name) { return parse_instance(fixture_text(name)); }

Digraph single_loop() {
    std::vector<std::pair<VertexId, VertexId>> arcs{{0, 0}};
    return Digraph::build(1, arcs);
}

Weights integer_weights(std::size_t arcs, Rng& rng) {
    std::uniform_int_distribution<long> pick(1, 10);
    Weights w;
    for (std::size_t i = 0; i < arcs; ++i) {
        w.start.emplace_back(pick(rng));
        w.end.emplace_back(pick(rng));
    }
    return w;
}

Weights start_one(const std::vector<Rational>& end) { return Weights{std::vector<Rational>(end.size(), q(1)), end}; }

std::vector<Rational> random_end(std::size_t arcs, Rng& rng) {
    std::vector<Rational> end;
    for (std::size_t i = 0; i < arcs; ++i) {
        end.push_back(testing::random_rational(rng));
    }
    return end;
}

TEST(IharaDigraph, SingleLoopHandExpansion) {
    const Rational tau = q(4, 3);
    Weights w{{q(2)}, {q(2, 3)}};
    IharaDigraph r = ihara_digraph(single_loop(), w);
    ASSERT_EQ(r.factors.size(), 1U);
    EXPECT_EQ(r.factors[0], PolyQ({q(1), q(1)}));
    RatFunc expected = RatFunc(PolyQ({q(1), q(1)})) *
                       (RatFunc(PolyQ({q(1), -tau})) + RatFunc(PolyQ::monomial(tau, 2), PolyQ({q(1), q(1)})));
    EXPECT_EQ(r.rhs, expected);
    EXPECT_EQ(r.rhs, RatFunc(PolyQ({q(1), -(tau - 1)})));
    EXPECT_EQ(r.rhs, RatFunc(hashimoto(single_loop(), w)));
}

TEST(IharaDigraph, ExampleFactors) {
    IharaDigraph r = ihara_digraph(fixture("paper-digraph").digraph(), fixture("paper-digraph").weights);
    std::vector<PolyQ> expected{PolyQ({q(1), q(2)}), PolyQ({q(1), q(0), q(-4)}), PolyQ({q(1), q(0), q(-1)}),
                                PolyQ({q(1), q(0), q(-1)})};
    EXPECT_EQ(r.factors, expected);
}

TEST(IharaDigraph, ExampleDigraphIntegerWeights) {
    Rng rng(61);
    Digraph d = fixture("paper-digraph").digraph();
    for (int rep = 0; rep < 10; ++rep) {
        Weights w = integer_weights(d.arc_count(), rng);
        EXPECT_EQ(ihara_digraph(d, w).rhs, RatFunc(testing::reciprocal_charpoly_by_interpolation(edge_matrix(d, w))));
    }
}

TEST(IharaDigraph, RandomMultiDigraphs) {
    Rng rng(62);
    for (int rep = 0; rep < 100; ++rep) {
        Digraph d = testing::random_multidigraph(rng);
        Weights w = testing::random_weights(d.arc_count(), rng);
        IharaDigraph r = ihara_digraph(d, w);
        EXPECT_EQ(r.rhs, RatFunc(hashimoto(d, w))) << describe(d);
        EXPECT_EQ(r.degree, ihara_degree_elementwise(d, w)) << describe(d);
        EXPECT_EQ(r.correction, ihara_correction_elementwise(d, w)) << describe(d);
    }
}

TEST(IharaDigraph, RequiresGeneralMode) {
    Digraph g = fixture("triangle").digraph();
    EXPECT_THROW(ihara_digraph(g, Weights::uniform(g.arc_count())), PreconditionError);
}

// The correction entry that carries |A_uv| in front of the pairwise sum
// breaks the identity for general start weights.
TEST(IharaDigraph, PairwiseCorrectionFailsForGeneralStart) {
    Rng rng(63);
    Digraph d = fixture("paper-digraph").digraph();
    Weights w = testing::random_weights(d.arc_count(), rng);
    IharaDigraph r = ihara_digraph(d, w);
    RatFunc pairwise = assemble_digraph_rhs(r.factors, r.adjacency, r.degree, ihara_correction_pairwise(d, w));
    EXPECT_NE(pairwise, RatFunc(hashimoto(d, w)));
    EXPECT_NE(ihara_correction_pairwise(d, w), r.correction);

    // With start == 1 both forms reduce to |A_uv| |A_vu| sum end(a) / f.
    Weights ones{std::vector<Rational>(d.arc_count(), q(1)), w.end};
    EXPECT_EQ(ihara_correction_pairwise(d, ones), ihara_correction_elementwise(d, ones));
}

TEST(IharaDigraph, BlockDeterminantsAreFactors) {
    Rng rng(64);
    for (int rep = 0; rep < 50; ++rep) {
        Digraph d = rep % 2 == 0 ? testing::random_multidigraph(rng) : testing::random_multigraph(rng);
        auto pairs = phi_pairs(d);
        auto dets = block_determinants(d);
        ASSERT_EQ(dets.size(), pairs.size());
        PolyQ product(q(1));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!d.is_symmetric()) {
                EXPECT_EQ(dets[i], pair_factor(pairs[i]));
            }
            product *= dets[i];
        }
        EXPECT_EQ(product, det_exact(inverse_pencil(d)));
    }
}

TEST(IharaDigraph, InverseMatrixIsBlockDiagonalInGroupedOrder) {
    Rng rng(65);
    for (int rep = 0; rep < 50; ++rep) {
        Digraph d = testing::random_multidigraph(rng);
        std::vector<ArcId> order = phi_grouped_order(d);
        std::vector<std::size_t> block_of(d.arc_count());
        std::size_t b = 0;
        for (const auto& p : phi_pairs(d)) {
            for (ArcId a : p.block_arcs()) {
                block_of[a] = b;
            }
            ++b;
        }
        Matrix<Rational> j = inverse_matrix(d);
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t k = 0; k < order.size(); ++k) {
                if (j(order[i], order[k]) != 0) {
                    EXPECT_EQ(block_of[order[i]], block_of[order[k]]);
                }
            }
        }
    }
}

TEST(IharaGraph, SingleEdgeUnitWeights) {
    std::vector<Edge> edges{{0, 1}};
    Digraph g = Digraph::symmetric(2, edges);
    IharaGraph r = ihara_graph(g, Weights::uniform(2));
    EXPECT_EQ(r.adjacency, Matrix<Rational>(2, 2, {q(0), q(1), q(1), q(0)}));
    EXPECT_EQ(r.degree, Matrix<Rational>::identity(2));
    EXPECT_EQ(r.rhs, RatFunc(hashimoto(g, Weights::uniform(2))));
    EXPECT_EQ(r.rhs, RatFunc(q(1)));
}

TEST(IharaGraph, ExampleGraphGenericWeights) {
    Rng rng(66);
    Digraph g = fixture("paper-graph").digraph();
    for (int rep = 0; rep < 10; ++rep) {
        Weights w = testing::random_weights(g.arc_count(), rng);
        EXPECT_EQ(ihara_graph(g, w).rhs, RatFunc(testing::reciprocal_charpoly_by_interpolation(edge_matrix(g, w))));
    }
}

TEST(IharaGraph, RandomMultigraphs) {
    Rng rng(67);
    for (int rep = 0; rep < 100; ++rep) {
        Digraph g = testing::random_multigraph(rng);
        Weights w = testing::random_weights(g.arc_count(), rng);
        EXPECT_EQ(ihara_graph(g, w).rhs, RatFunc(hashimoto(g, w))) << describe(g);
    }
    Digraph d = fixture("paper-digraph").digraph();
    EXPECT_THROW(ihara_graph(d, Weights::uniform(d.arc_count())), PreconditionError);
}

TEST(IharaGraph, TriangleGroverWeightsGiveGroverFactorization) {
    Digraph tri = fixture("triangle").digraph();
    Weights w = Weights::uniform(tri.arc_count());
    for (ArcId a = 0; a < tri.arc_count(); ++a) {
        w.end[a] = Rational(2, static_cast<long>(tri.out_arcs(tri.arc(a).tail).size()));
    }
    // Characteristic polynomial of the Grover matrix of the triangle:
    // (lambda - 1)^2 (lambda^2 + lambda + 1)^2.
    PolyQ lambda = PolyQ::variable();
    PolyQ expected = pow(lambda - PolyQ(q(1)), 2) * pow(PolyQ({q(1), q(1), q(1)}), 2);
    PolyQ h = hashimoto(tri, w);
    EXPECT_EQ(h.reversed(tri.arc_count()), expected);
    EXPECT_EQ(ihara_graph(tri, w).rhs, RatFunc(h));
}

TEST(Sato, GraphUnitEndOnTriangle) {
    Digraph tri = fixture("triangle").digraph();
    std::vector<Rational> end(tri.arc_count(), q(1));
    IharaGraph sato = sato_ihara_graph(tri, end);
    EXPECT_EQ(sato.rhs, RatFunc(hashimoto(tri, start_one(end))));
    PolyQ expected = pow(PolyQ({q(1), q(0), q(0), q(-1)}), 2);
    EXPECT_EQ(sato.rhs, RatFunc(expected));
}

TEST(Sato, DigraphSingleLoop) {
    std::vector<Rational> end{q(1)};
    SatoDigraph sato = sato_ihara_digraph(single_loop(), end);
    ASSERT_EQ(sato.factors.size(), 1U);
    EXPECT_EQ(sato.factors[0], PolyQ({q(1), q(1)}));
    EXPECT_EQ(sato.rhs, RatFunc(hashimoto(single_loop(), start_one(end))));
}

TEST(Sato, ExampleDigraphRandomEnd) {
    Rng rng(68);
    Digraph d = fixture("paper-digraph").digraph();
    for (int rep = 0; rep < 10; ++rep) {
        auto end = random_end(d.arc_count(), rng);
        EXPECT_EQ(sato_ihara_digraph(d, end).rhs, RatFunc(hashimoto(d, start_one(end))));
    }
}

TEST(Sato, AgreesWithGeneralOnFixturesAndRandomInstances) {
    Rng rng(69);
    std::vector<Digraph> graphs;
    for (const auto& name : fixture_names()) {
        graphs.push_back(fixture(name).digraph());
    }
    for (int rep = 0; rep < 60; ++rep) {
        graphs.push_back(rep % 2 == 0 ? testing::random_multidigraph(rng) : testing::random_multigraph(rng));
    }
    for (const auto& d : graphs) {
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<Rational> end =
                variant == 0 ? std::vector<Rational>(d.arc_count(), q(1)) : random_end(d.arc_count(), rng);
            Weights w = start_one(end);
            RatFunc h(hashimoto(d, w));
            if (d.is_symmetric()) {
                IharaGraph sato = sato_ihara_graph(d, end);
                IharaGraph general = ihara_graph(d, w);
                EXPECT_EQ(sato.adjacency, general.adjacency) << describe(d);
                EXPECT_EQ(sato.degree, general.degree) << describe(d);
                EXPECT_EQ(sato.rhs, h) << describe(d);
            } else {
                EXPECT_EQ(sato_ihara_digraph(d, end).rhs, h) << describe(d);
                EXPECT_EQ(ihara_digraph(d, w).rhs, h) << describe(d);
                SatoPencils pencils = sato_pencils(d, end);
                EXPECT_EQ(pencils.general, pencils.sato) << describe(d);
            }
        }
    }
}

TEST(Sato, RejectsNonUnitStartAndWrongMode) {
    Digraph tri = fixture("triangle").digraph();
    EXPECT_THROW(sato_ihara_digraph(tri, std::vector<Rational>(tri.arc_count(), q(1))), PreconditionError);
    Digraph d = fixture("paper-digraph").digraph();
    EXPECT_THROW(sato_ihara_graph(d, std::vector<Rational>(d.arc_count(), q(1))), PreconditionError);
    EXPECT_THROW(sato_ihara_digraph(d, std::vector<Rational>(3, q(1))), ValidationError);
}

// Summing end(a) / f over every arc leaving u, without the |A_{head,u}|
// multiplicity, only works when every arc has exactly one reverse arc.
TEST(Sato, UnweightedDegreeFailsWithLoops) {
    Rng rng(70);
    Digraph d = fixture("paper-digraph").digraph();
    auto end = random_end(d.arc_count(), rng);
    EXPECT_NE(sato_ihara_digraph_unweighted_degree(d, end).rhs, RatFunc(hashimoto(d, start_one(end))));

    std::vector<std::pair<VertexId, VertexId>> simple{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}};
    Digraph s = Digraph::build(3, simple);
    auto end_s = random_end(s.arc_count(), rng);
    EXPECT_EQ(sato_ihara_digraph_unweighted_degree(s, end_s).rhs, RatFunc(hashimoto(s, start_one(end_s))));
}

}  // namespace
}  // namespace graphzeta
