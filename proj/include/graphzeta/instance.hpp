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

#ifndef GRAPHZETA_INSTANCE_HPP
#define GRAPHZETA_INSTANCE_HPP

// Line-oriented instance files:
//
//   mode digraph|graph
//   vertices <n>
//   arc <id> <tail> <head>      (digraph mode)
//   edge <id> <u> <v>           (graph mode; edge e owns arcs 2e and 2e+1)
//   tau1 <arc-id> <p/q>
//   tau2 <arc-id> <p/q>
//   prob <arc-id> <p/q>
//
// '#' starts a comment. Missing tau1/tau2 values are 1.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/quantum_walk.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

enum class InstanceMode { Digraph, Graph };

struct Instance {
    InstanceMode mode = InstanceMode::Digraph;
    std::size_t vertex_count = 0;
    /// Arcs (tail, head) in digraph mode, edges {u, v} in graph mode, by id.
    std::vector<std::pair<VertexId, VertexId>> links;
    Weights weights;
    std::optional<TransitionProbability> probability;

    std::size_t arc_count() const { return mode == InstanceMode::Graph ? 2 * links.size() : links.size(); }
    Digraph digraph() const;
};

/// Throws ParseError carrying the 1-based line number.
Instance parse_instance(std::string_view text);

/// Reads and parses a file; unreadable files raise ValidationError.
Instance load_instance(const std::string& path);

/// Canonical text: header, links in id order, tau lines that differ from 1,
/// then every prob line when probabilities are present.
std::string format_instance(const Instance& instance);

std::vector<std::string> fixture_names();

/// Built-in instance as canonical text. Unknown names raise
/// ValidationError listing the available ones.
std::string fixture_text(std::string_view name);

}  // namespace graphzeta

#endif
