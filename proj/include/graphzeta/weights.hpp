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

#ifndef GRAPHZETA_WEIGHTS_HPP
#define GRAPHZETA_WEIGHTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/error.hpp"
#include "graphzeta/field.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/poly.hpp"

namespace graphzeta {

/// The two arc weight maps. The pair weight of arcs (a, a') is
/// start(a) * end(a'); a walk through a then a' picks up start(a) on the
/// arc it leaves and end(a') on the arc it enters.
template <Field F>
struct WeightAssignment {
    std::vector<F> start;
    std::vector<F> end;

    static WeightAssignment uniform(std::size_t arc_count, const F& value = F(1)) {
        return {std::vector<F>(arc_count, value), std::vector<F>(arc_count, value)};
    }

    F pair(ArcId a, ArcId b) const { return start.at(a) * end.at(b); }

    void require_total(const Digraph& d) const {
        if (start.size() != d.arc_count() || end.size() != d.arc_count()) {
            throw ValidationError("weight assignment covers " + std::to_string(start.size()) + "/" +
                                  std::to_string(end.size()) + " arcs, digraph has " +
                                  std::to_string(d.arc_count()));
        }
    }
};

using Weights = WeightAssignment<Rational>;

/// theta(a, a') = start(a) end(a') [head(a) = tail(a')] - [a' inverse of a].
template <Field F>
F theta(const Digraph& d, const WeightAssignment<F>& w, ArcId a, ArcId b) {
    F value(0);
    if (d.arc(a).head == d.arc(b).tail) {
        value = w.pair(a, b);
    }
    if (d.is_inverse(a, b)) {
        value -= F(1);
    }
    return value;
}

/// |A| x |A| matrix of theta values, rows and columns in arc id order.
template <Field F>
Matrix<F> edge_matrix(const Digraph& d, const WeightAssignment<F>& w) {
    w.require_total(d);
    const std::size_t m = d.arc_count();
    Matrix<F> out(m, m);
    for (ArcId a = 0; a < m; ++a) {
        for (ArcId b = 0; b < m; ++b) {
            out(a, b) = theta(d, w, a, b);
        }
    }
    return out;
}

/// J: entry (a, a') is 1 when a' is an inverse of a.
inline Matrix<Rational> inverse_matrix(const Digraph& d) {
    const std::size_t m = d.arc_count();
    Matrix<Rational> j(m, m);
    for (ArcId a = 0; a < m; ++a) {
        for (ArcId b : inverse_set(d, a)) {
            j(a, b) = 1;
        }
    }
    return j;
}

/// K: |A| x |V|, entry (a, v) is start(a) when head(a) = v.
template <Field F>
Matrix<F> head_matrix(const Digraph& d, const WeightAssignment<F>& w) {
    w.require_total(d);
    Matrix<F> k(d.arc_count(), d.vertex_count());
    for (const auto& a : d.arcs()) {
        k(a.id, a.head) = w.start[a.id];
    }
    return k;
}

/// L: |V| x |A|, entry (u, a) is end(a) when tail(a) = u.
template <Field F>
Matrix<F> tail_matrix(const Digraph& d, const WeightAssignment<F>& w) {
    w.require_total(d);
    Matrix<F> l(d.vertex_count(), d.arc_count());
    for (const auto& a : d.arcs()) {
        l(a.tail, a.id) = w.end[a.id];
    }
    return l;
}

/// T = I + tJ.
inline Matrix<PolyQ> inverse_pencil(const Digraph& d) {
    Matrix<PolyQ> t = inverse_matrix(d).map<PolyQ>([](const Rational& x) { return PolyQ::monomial(x, 1); });
    for (std::size_t i = 0; i < t.rows(); ++i) {
        t(i, i) += PolyQ(Rational(1));
    }
    return t;
}

/// J restricted to the rows and columns of one vertex pair's arcs, embedded
/// in an |A| x |A| zero matrix.
inline Matrix<Rational> inverse_block(const Digraph& d, const PhiPair& pair) {
    Matrix<Rational> j(d.arc_count(), d.arc_count());
    for (ArcId a : pair.block_arcs()) {
        for (ArcId b : inverse_set(d, a)) {
            j(a, b) = 1;
        }
    }
    return j;
}

}  // namespace graphzeta

#endif
