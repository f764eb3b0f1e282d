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

#ifndef GRAPHZETA_CYCLES_HPP
#define GRAPHZETA_CYCLES_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/field.hpp"
#include "graphzeta/matrix.hpp"

namespace graphzeta {

/// Arc sequence c_1..c_k with head(c_i) = tail(c_{i+1}) cyclically.
struct ClosedPath {
    std::vector<ArcId> arcs;

    std::size_t length() const noexcept { return arcs.size(); }
    friend auto operator<=>(const ClosedPath&, const ClosedPath&) = default;
};

/// Canonical representative of a prime cycle: the lexicographically least
/// rotation of a closed path that is not a proper power.
struct PrimeCycle {
    std::vector<ArcId> arcs;

    std::size_t length() const noexcept { return arcs.size(); }
    friend auto operator<=>(const PrimeCycle&, const PrimeCycle&) = default;
};

bool is_closed_path(const Digraph& d, std::span<const ArcId> arcs);

/// Every closed path of length k (all rotations, all powers), in
/// lexicographic order. Exponential in k; the caller bounds k.
std::vector<ClosedPath> closed_paths(const Digraph& d, std::size_t k);

/// One representative per prime cycle of length <= max_len, sorted by
/// (length, arcs).
std::vector<PrimeCycle> prime_cycles(const Digraph& d, std::size_t max_len);

std::vector<ArcId> least_rotation(std::span<const ArcId> word);

/// Smallest p dividing k such that the word is (w_1..w_p)^{k/p}.
std::size_t primitive_period(std::span<const ArcId> word);

/// 0/1 arc adjacency B[a][a'] = [head(a) = tail(a')].
Matrix<Integer> arc_adjacency(const Digraph& d);

/// |X_1|..|X_k_max| as traces of powers of B.
std::vector<Integer> closed_path_counts(const Digraph& d, std::size_t k_max);

/// Number of rotation classes of closed paths of length 1..k_max, from the
/// trace counts by Burnside: (1/k) sum_{e | k} phi(k/e) |X_e|.
std::vector<Integer> closed_path_class_counts(const Digraph& d, std::size_t k_max);

}  // namespace graphzeta

#endif
