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

#include "graphzeta/ihara.hpp"

#include <map>
#include <utility>

#include "graphzeta/error.hpp"
#include "graphzeta/kernels.hpp"
#include "graphzeta/linalg.hpp"

namespace graphzeta {

namespace {

Matrix<RatFunc> lift(const Matrix<Rational>& m) { return promote<RatFunc>(m); }

RatFunc reciprocal(const PolyQ& f) { return RatFunc(PolyQ(Rational(1)), f); }

PolyQ t_power(std::size_t k, const Rational& c = 1) { return PolyQ::monomial(c, k); }

void require_general(const Digraph& d, const char* what) {
    if (d.is_symmetric()) {
        throw PreconditionError(std::string(what) + " needs a general digraph");
    }
}

void require_symmetric(const Digraph& g, const char* what) {
    if (!g.is_symmetric()) {
        throw PreconditionError(std::string(what) + " needs the symmetric digraph of a graph");
    }
}

Weights start_one(const Digraph& d, const std::vector<Rational>& end) {
    if (end.size() != d.arc_count()) {
        throw ValidationError("end weights cover " + std::to_string(end.size()) + " arcs, digraph has " +
                              std::to_string(d.arc_count()));
    }
    return Weights{std::vector<Rational>(d.arc_count(), Rational(1)), end};
}

// f(u, v) for every connected pair, keyed by the ordered pair in both
// orientations.
std::map<std::pair<VertexId, VertexId>, PolyQ> factor_table(const std::vector<PhiPair>& pairs) {
    std::map<std::pair<VertexId, VertexId>, PolyQ> table;
    for (const auto& p : pairs) {
        PolyQ f = pair_factor(p);
        table[{p.u, p.v}] = f;
        table[{p.v, p.u}] = f;
    }
    return table;
}

RatFunc determinant_times(const std::vector<PolyQ>& factors, const Matrix<RatFunc>& m) {
    RatFunc out = det_exact(m, Execution::Serial);
    for (const auto& f : factors) {
        out *= RatFunc(f);
    }
    return out;
}

}  // namespace

PolyQ pair_factor(const PhiPair& pair) {
    if (pair.is_loop_pair()) {
        return PolyQ{Rational(1), Rational(static_cast<unsigned long>(pair.arcs_uv.size()))};
    }
    Rational k(static_cast<unsigned long>(pair.arcs_uv.size() * pair.arcs_vu.size()));
    return PolyQ{Rational(1), Rational(0), Rational(-k)};
}

std::vector<PolyQ> block_determinants(const Digraph& d) {
    Matrix<PolyQ> pencil = inverse_pencil(d);
    std::vector<PolyQ> out;
    for (const auto& pair : phi_pairs(d)) {
        auto arcs = pair.block_arcs();
        Matrix<PolyQ> block(arcs.size(), arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            for (std::size_t j = 0; j < arcs.size(); ++j) {
                block(i, j) = pencil(arcs[i], arcs[j]);
            }
        }
        out.push_back(det_exact(block, Execution::Serial));
    }
    return out;
}

IharaDigraph ihara_digraph(const Digraph& d, const Weights& w) {
    require_general(d, "ihara_digraph");
    w.require_total(d);
    const std::size_t n = d.vertex_count();
    IharaDigraph r;
    r.pairs = phi_pairs(d);
    Matrix<Rational> k = head_matrix(d, w);
    Matrix<Rational> l = tail_matrix(d, w);
    r.adjacency = l * k;
    r.degree = Matrix<RatFunc>(n, n);
    r.correction = Matrix<RatFunc>(n, n);
    for (const auto& pair : r.pairs) {
        PolyQ f = pair_factor(pair);
        r.factors.push_back(f);
        Matrix<Rational> j = inverse_block(d, pair);
        Matrix<Rational> lj = l * j;
        r.degree += reciprocal(f) * lift(lj * k);
        if (!pair.is_loop_pair()) {
            r.correction += reciprocal(f) * lift(lj * j * k);
        }
    }
    r.rhs = assemble_digraph_rhs(r.factors, r.adjacency, r.degree, r.correction);
    return r;
}

Matrix<RatFunc> ihara_degree_elementwise(const Digraph& d, const Weights& w) {
    w.require_total(d);
    const std::size_t n = d.vertex_count();
    Matrix<RatFunc> out(n, n);
    auto f = factor_table(phi_pairs(d));
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId x = 0; x < n; ++x) {
            const auto& out_arcs = d.arcs_between(u, x);
            const auto& back_arcs = d.arcs_between(x, u);
            if (out_arcs.empty()) {
                continue;
            }
            Rational sum = 0;
            for (ArcId a : out_arcs) {
                for (ArcId b : back_arcs) {
                    sum += w.pair(b, a);
                }
            }
            out(u, u) += RatFunc(PolyQ(sum), f.at({u, x}));
        }
    }
    return out;
}

Matrix<RatFunc> ihara_correction_elementwise(const Digraph& d, const Weights& w) {
    w.require_total(d);
    const std::size_t n = d.vertex_count();
    Matrix<RatFunc> out(n, n);
    auto f = factor_table(phi_pairs(d));
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            const auto& arcs = d.arcs_between(u, v);
            if (u == v || arcs.empty()) {
                continue;
            }
            Rational starts = 0;
            Rational ends = 0;
            for (ArcId a : arcs) {
                starts += w.start[a];
                ends += w.end[a];
            }
            Rational back(static_cast<unsigned long>(d.arcs_between(v, u).size()));
            out(u, v) = RatFunc(PolyQ(Rational(back * starts * ends)), f.at({u, v}));
        }
    }
    return out;
}

Matrix<RatFunc> ihara_correction_pairwise(const Digraph& d, const Weights& w) {
    w.require_total(d);
    const std::size_t n = d.vertex_count();
    Matrix<RatFunc> out(n, n);
    auto f = factor_table(phi_pairs(d));
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            const auto& arcs = d.arcs_between(u, v);
            if (u == v || arcs.empty()) {
                continue;
            }
            Rational sum = 0;
            for (ArcId a : arcs) {
                for (ArcId b : d.arcs_between(v, u)) {
                    sum += w.pair(b, a);
                }
            }
            Rational count(static_cast<unsigned long>(arcs.size()));
            out(u, v) = RatFunc(PolyQ(Rational(count * sum)), f.at({u, v}));
        }
    }
    return out;
}

RatFunc assemble_digraph_rhs(const std::vector<PolyQ>& factors, const Matrix<Rational>& adjacency,
                             const Matrix<RatFunc>& degree, const Matrix<RatFunc>& correction) {
    const std::size_t n = adjacency.rows();
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(n);
    m -= RatFunc(t_power(1)) * lift(adjacency);
    m += RatFunc(t_power(2)) * degree;
    m -= RatFunc(t_power(3)) * correction;
    return determinant_times(factors, m);
}

IharaGraph ihara_graph(const Digraph& g, const Weights& w) {
    require_symmetric(g, "ihara_graph");
    w.require_total(g);
    const std::size_t n = g.vertex_count();
    IharaGraph r;
    Matrix<Rational> k = head_matrix(g, w);
    Matrix<Rational> l = tail_matrix(g, w);
    r.adjacency = l * k;
    r.degree = l * inverse_matrix(g) * k;
    Matrix<PolyQ> m = Matrix<PolyQ>::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) -= t_power(1, r.adjacency(i, j));
        }
        m(i, i) += t_power(2, Rational(r.degree(i, i) - 1));
    }
    const int excess = static_cast<int>(g.edge_count()) - static_cast<int>(n);
    r.rhs = pow(RatFunc(PolyQ{Rational(1), Rational(0), Rational(-1)}), excess) * RatFunc(det_exact(m));
    return r;
}

IharaGraph sato_ihara_graph(const Digraph& g, const std::vector<Rational>& end) {
    require_symmetric(g, "sato_ihara_graph");
    start_one(g, end);
    const std::size_t n = g.vertex_count();
    IharaGraph r;
    r.adjacency = Matrix<Rational>(n, n);
    r.degree = Matrix<Rational>(n, n);
    for (const auto& a : g.arcs()) {
        r.adjacency(a.tail, a.head) += end[a.id];
        r.degree(a.tail, a.tail) += end[a.id];
    }
    Matrix<PolyQ> m = Matrix<PolyQ>::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) -= t_power(1, r.adjacency(i, j));
        }
        m(i, i) += t_power(2, Rational(r.degree(i, i) - 1));
    }
    const int excess = static_cast<int>(g.edge_count()) - static_cast<int>(n);
    r.rhs = pow(RatFunc(PolyQ{Rational(1), Rational(0), Rational(-1)}), excess) * RatFunc(det_exact(m));
    return r;
}

namespace {

SatoDigraph sato_digraph(const Digraph& d, const std::vector<Rational>& end, bool count_returns) {
    require_general(d, "sato_ihara_digraph");
    start_one(d, end);
    const std::size_t n = d.vertex_count();
    auto pairs = phi_pairs(d);
    auto f = factor_table(pairs);
    SatoDigraph r;
    for (const auto& p : pairs) {
        r.factors.push_back(pair_factor(p));
    }
    r.adjacency = Matrix<RatFunc>(n, n);
    r.degree = Matrix<RatFunc>(n, n);
    for (const auto& a : d.arcs()) {
        RatFunc share{PolyQ(end[a.id]), f.at({a.tail, a.head})};
        r.adjacency(a.tail, a.head) += share;
        if (!count_returns) {
            r.degree(a.tail, a.tail) += share;
        } else if (!a.is_loop()) {
            Rational returns(static_cast<unsigned long>(d.arcs_between(a.head, a.tail).size()));
            r.degree(a.tail, a.tail) += RatFunc(returns) * share;
        }
    }
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(n);
    m -= RatFunc(t_power(1)) * r.adjacency;
    m += RatFunc(t_power(2)) * r.degree;
    r.rhs = determinant_times(r.factors, m);
    return r;
}

}  // namespace

SatoDigraph sato_ihara_digraph(const Digraph& d, const std::vector<Rational>& end) {
    return sato_digraph(d, end, true);
}

SatoDigraph sato_ihara_digraph_unweighted_degree(const Digraph& d, const std::vector<Rational>& end) {
    return sato_digraph(d, end, false);
}

SatoPencils sato_pencils(const Digraph& d, const std::vector<Rational>& end) {
    IharaDigraph general = ihara_digraph(d, start_one(d, end));
    SatoDigraph sato = sato_ihara_digraph(d, end);
    SatoPencils out;
    out.general = lift(general.adjacency);
    out.general -= RatFunc(t_power(1)) * general.degree;
    out.general += RatFunc(t_power(2)) * general.correction;
    out.sato = sato.adjacency;
    out.sato -= RatFunc(t_power(1)) * sato.degree;
    return out;
}

}  // namespace graphzeta
