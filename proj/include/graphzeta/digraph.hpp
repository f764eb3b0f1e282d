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

#ifndef GRAPHZETA_DIGRAPH_HPP
#define GRAPHZETA_DIGRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphzeta {

using VertexId = std::size_t;
using ArcId = std::size_t;

/// How inverse arcs are defined.
///
/// GeneralDigraph: every arc from head(a) to tail(a) is an inverse of a; a
/// loop is one of its own inverses.
/// SymmetricOfGraph: arcs come in edge pairs and the partner is the unique
/// inverse, including for loop edges.
enum class DigraphMode { GeneralDigraph, SymmetricOfGraph };

struct Arc {
    ArcId id;
    VertexId tail;
    VertexId head;

    bool is_loop() const noexcept { return tail == head; }
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Unordered pair {u, v}; u == v is a loop edge.
struct Edge {
    VertexId u;
    VertexId v;
};

/// Finite multi-digraph, immutable after construction. Arc ids are the row
/// and column order of every arc-indexed matrix.
class Digraph {
   public:
    /// General digraph; arc i is arcs[i] = (tail, head).
    static Digraph build(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> arcs);

    /// Symmetric digraph of a multigraph. Edge e = {u, v} yields arcs
    /// 2e = (u, v) and 2e+1 = (v, u), paired with each other.
    static Digraph symmetric(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    DigraphMode mode() const noexcept { return mode_; }
    bool is_symmetric() const noexcept { return mode_ == DigraphMode::SymmetricOfGraph; }

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const Arc& arc(ArcId id) const { return arcs_.at(id); }

    /// Edge count; SymmetricOfGraph only.
    std::size_t edge_count() const;
    /// Edge-partner arc; SymmetricOfGraph only.
    ArcId partner(ArcId id) const;

    /// A_uv: arcs with tail u and head v, ascending ids.
    const std::vector<ArcId>& arcs_between(VertexId u, VertexId v) const;
    /// A_u*: arcs with tail u, ascending ids.
    const std::vector<ArcId>& out_arcs(VertexId u) const;

    /// True when b is an inverse of a under this digraph's mode.
    bool is_inverse(ArcId a, ArcId b) const;

    bool has_loops() const;

   private:
    Digraph() = default;
    void index();

    std::size_t vertex_count_ = 0;
    DigraphMode mode_ = DigraphMode::GeneralDigraph;
    std::vector<Arc> arcs_;
    std::vector<ArcId> partner_;
    std::vector<std::vector<ArcId>> between_;  // vertex_count^2 buckets
    std::vector<std::vector<ArcId>> out_;
};

/// The inverse arcs of a, ascending. Symmetric under swap: b is in
/// inverse_set(a) iff a is in inverse_set(b).
std::vector<ArcId> inverse_set(const Digraph& d, ArcId a);

/// One unordered vertex pair u <= v joined by at least one arc.
struct PhiPair {
    VertexId u;
    VertexId v;
    std::vector<ArcId> arcs_uv;
    std::vector<ArcId> arcs_vu;  // equals arcs_uv when u == v

    bool is_loop_pair() const noexcept { return u == v; }
    /// A(u, v) in block order: A_uv then A_vu, loops listed once.
    std::vector<ArcId> block_arcs() const;
};

/// Pairs in lexicographic (u, v) order.
std::vector<PhiPair> phi_pairs(const Digraph& d);

/// Arc ids regrouped so that each Phi block is contiguous (A_uv before A_vu).
/// Conjugating J by this permutation makes it block diagonal.
std::vector<ArcId> phi_grouped_order(const Digraph& d);

/// Number of arcs with tail v.
std::size_t out_degree(const Digraph& d, VertexId v);

/// "(tail,head)" list, for diagnostics.
std::string describe(const Digraph& d);

}  // namespace graphzeta

#endif
