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

#ifndef GRAPHZETA_ZETA_HPP
#define GRAPHZETA_ZETA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/kernels.hpp"
#include "graphzeta/path_kernels.hpp"
#include "graphzeta/poly.hpp"
#include "graphzeta/ratfunc.hpp"
#include "graphzeta/series.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// max(10, |A|).
std::size_t default_order(const Digraph& d);

/// det(I - t M) from the Hessenberg form of M.
PolyQ hashimoto(const Digraph& d, const Weights& w);

/// det(I - t M) by fraction-free elimination on the polynomial matrix.
PolyQ hashimoto_by_elimination(const Digraph& d, const Weights& w, Execution exec = Execution::Parallel);

/// Largest |A| for which verify also runs hashimoto_by_elimination.
inline constexpr std::size_t kEliminationArcLimit = 16;

/// det(I - t M) as the reversed Faddeev-LeVerrier polynomial of M.
PolyQ hashimoto_via_char_poly(const Digraph& d, const Weights& w, Execution exec = Execution::Parallel);

/// N_1..N_k_max as trace(M^k).
std::vector<Rational> closed_path_sums_by_trace(const Digraph& d, const Weights& w, std::size_t k_max,
                                                Execution exec = Execution::Parallel);

/// Integer form of the edge matrix, conjugated by 1 / den(end(a)) so the
/// common scale stays small.
kernels::CycleForm cycle_form(const Digraph& d, const Weights& w);

/// N_1..N_k_max by summing circular products over closed paths.
std::vector<Rational> closed_path_sums_by_enumeration(const Digraph& d, const Weights& w, std::size_t k_max,
                                                      Execution exec = Execution::Parallel);

/// N_k by both routes; throws IdentityMismatch if they differ.
Rational n_k(const Digraph& d, const Weights& w, std::size_t k);

/// exp(sum_{k <= order} N_k / k t^k) from given N_1..N_order.
SeriesQ exponential_from_sums(const std::vector<Rational>& sums, std::size_t order);

SeriesQ exponential_truncated(const Digraph& d, const Weights& w, std::size_t order,
                              Execution exec = Execution::Parallel);

enum class EulerMethod {
    Auto,
    /// Multiply one geometric factor per enumerated prime cycle.
    PrimeCycles,
    /// Recover per-length power sums of prime-cycle weights from traces of
    /// Hadamard powers of M, then their elementary symmetric functions.
    PowerSums,
};

std::string to_string(EulerMethod m);

struct EulerResult {
    SeriesQ series;
    EulerMethod method;
};

/// Rotation classes of closed paths of length <= order; an upper bound on
/// the necklaces visited by enumeration.
Integer necklace_count(const Digraph& d, std::size_t order);

/// Auto enumerates while necklace_count stays under this.
inline constexpr unsigned long kEnumerationBudget = 20'000'000;

EulerResult euler_truncated(const Digraph& d, const Weights& w, std::size_t order,
                            EulerMethod method = EulerMethod::Auto, Execution exec = Execution::Parallel);

/// One pairwise comparison. mismatch holds the first differing power of t.
struct Verdict {
    std::string lhs;
    std::string rhs;
    std::optional<std::size_t> mismatch;

    bool agree() const noexcept { return !mismatch.has_value(); }
};

struct ZetaReport {
    std::size_t order = 0;
    SeriesQ exponential{0};
    SeriesQ euler{0};
    EulerMethod euler_method = EulerMethod::Auto;
    PolyQ hashimoto;
    SeriesQ hashimoto_series{0};
    std::optional<RatFunc> ihara;
    /// Closed-path sums were enumerated and compared with traces up to this
    /// length (0 when the enumeration budget allowed none).
    std::size_t enumerated_through = 0;
    std::vector<Verdict> verdicts;

    bool all_agree() const;
};

/// Compares exponential, Euler and 1/Hashimoto series to `order`, the two
/// Hashimoto determinant routes and Hashimoto against the Ihara expression
/// for the digraph's mode exactly, and enumerated closed-path sums against
/// traces.
ZetaReport verify_expressions(const Digraph& d, const Weights& w, std::size_t order,
                              Execution exec = Execution::Parallel);

/// Lowest power of t where two rational functions differ, if any.
std::optional<std::size_t> first_mismatch(const RatFunc& a, const RatFunc& b);

}  // namespace graphzeta

#endif
