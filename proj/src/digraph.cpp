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

#include "graphzeta/digraph.hpp"

#include <sstream>

#include "graphzeta/error.hpp"

namespace graphzeta {

Digraph Digraph::build(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> arcs) {
    Digraph d;
    d.vertex_count_ = vertex_count;
    d.mode_ = DigraphMode::GeneralDigraph;
    d.arcs_.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [tail, head] = arcs[i];
        if (tail >= vertex_count || head >= vertex_count) {
            throw ValidationError("arc " + std::to_string(i) + " = (" + std::to_string(tail) + ", " +
                                  std::to_string(head) + ") has an endpoint outside 0.." +
                                  std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
        }
        d.arcs_.push_back(Arc{i, tail, head});
    }
    d.index();
    return d;
}

Digraph Digraph::symmetric(std::size_t vertex_count, std::span<const Edge> edges) {
    Digraph d;
    d.vertex_count_ = vertex_count;
    d.mode_ = DigraphMode::SymmetricOfGraph;
    d.arcs_.reserve(2 * edges.size());
    d.partner_.reserve(2 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (u >= vertex_count || v >= vertex_count) {
            throw ValidationError("edge " + std::to_string(e) + " = {" + std::to_string(u) + ", " +
                                  std::to_string(v) + "} has an endpoint outside 0.." +
                                  std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
        }
        d.arcs_.push_back(Arc{2 * e, u, v});
        d.arcs_.push_back(Arc{2 * e + 1, v, u});
        d.partner_.push_back(2 * e + 1);
        d.partner_.push_back(2 * e);
    }
    d.index();
    return d;
}

void Digraph::index() {
    between_.assign(vertex_count_ * vertex_count_, {});
    out_.assign(vertex_count_, {});
    for (const auto& a : arcs_) {
        between_[a.tail * vertex_count_ + a.head].push_back(a.id);
        out_[a.tail].push_back(a.id);
    }
}

std::size_t Digraph::edge_count() const {
    if (!is_symmetric()) {
        throw PreconditionError("edge count is defined for symmetric digraphs of graphs only");
    }
    return arcs_.size() / 2;
}

ArcId Digraph::partner(ArcId id) const {
    if (!is_symmetric()) {
        throw PreconditionError("arc partners exist only in symmetric digraphs of graphs");
    }
    return partner_.at(id);
}

const std::vector<ArcId>& Digraph::arcs_between(VertexId u, VertexId v) const {
    if (u >= vertex_count_ || v >= vertex_count_) {
        throw PreconditionError("vertex id out of range");
    }
    return between_[u * vertex_count_ + v];
}

const std::vector<ArcId>& Digraph::out_arcs(VertexId u) const { return out_.at(u); }

bool Digraph::is_inverse(ArcId a, ArcId b) const {
    if (is_symmetric()) {
        return partner_.at(a) == b;
    }
    return arcs_.at(b).tail == arcs_.at(a).head && arcs_.at(b).head == arcs_.at(a).tail;
}

bool Digraph::has_loops() const {
    for (const auto& a : arcs_) {
        if (a.is_loop()) {
            return true;
        }
    }
    return false;
}

std::vector<ArcId> inverse_set(const Digraph& d, ArcId a) {
    const Arc& arc = d.arc(a);
    if (d.is_symmetric()) {
        return {d.partner(a)};
    }
    return d.arcs_between(arc.head, arc.tail);
}

std::vector<ArcId> PhiPair::block_arcs() const {
    std::vector<ArcId> out = arcs_uv;
    if (u != v) {
        out.insert(out.end(), arcs_vu.begin(), arcs_vu.end());
    }
    return out;
}

std::vector<PhiPair> phi_pairs(const Digraph& d) {
    std::vector<PhiPair> out;
    for (VertexId u = 0; u < d.vertex_count(); ++u) {
        for (VertexId v = u; v < d.vertex_count(); ++v) {
            const auto& uv = d.arcs_between(u, v);
            const auto& vu = d.arcs_between(v, u);
            if (uv.empty() && vu.empty()) {
                continue;
            }
            out.push_back(PhiPair{u, v, uv, vu});
        }
    }
    return out;
}

std::vector<ArcId> phi_grouped_order(const Digraph& d) {
    std::vector<ArcId> order;
    order.reserve(d.arc_count());
    for (const auto& pair : phi_pairs(d)) {
        auto block = pair.block_arcs();
        order.insert(order.end(), block.begin(), block.end());
    }
    return order;
}

std::size_t out_degree(const Digraph& d, VertexId v) { return d.out_arcs(v).size(); }

std::string describe(const Digraph& d) {
    std::ostringstream os;
    os << (d.is_symmetric() ? "graph" : "digraph") << " on " << d.vertex_count() << " vertices:";
    for (const auto& a : d.arcs()) {
        os << " (" << a.tail << "," << a.head << ")";
    }
    return os.str();
}

}  // namespace graphzeta
