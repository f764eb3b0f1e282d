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

#include "graphzeta/cycles.hpp"

#include <algorithm>

#include "graphzeta/error.hpp"
#include "graphzeta/kernels.hpp"
#include "graphzeta/path_kernels.hpp"

namespace graphzeta {

bool is_closed_path(const Digraph& d, std::span<const ArcId> arcs) {
    if (arcs.empty()) {
        return false;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        ArcId next = arcs[(i + 1) % arcs.size()];
        if (d.arc(arcs[i]).head != d.arc(next).tail) {
            return false;
        }
    }
    return true;
}

namespace {

void extend_paths(const Digraph& d, std::size_t k, std::vector<ArcId>& prefix, std::vector<ClosedPath>& out) {
    if (prefix.size() == k) {
        if (d.arc(prefix.back()).head == d.arc(prefix.front()).tail) {
            out.push_back(ClosedPath{prefix});
        }
        return;
    }
    for (ArcId next : d.out_arcs(d.arc(prefix.back()).head)) {
        prefix.push_back(next);
        extend_paths(d, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ClosedPath> closed_paths(const Digraph& d, std::size_t k) {
    if (k == 0) {
        throw PreconditionError("closed path length must be at least 1");
    }
    std::vector<ClosedPath> out;
    std::vector<ArcId> prefix;
    prefix.reserve(k);
    for (const auto& a : d.arcs()) {
        prefix.assign(1, a.id);
        extend_paths(d, k, prefix, out);
    }
    return out;
}

std::vector<PrimeCycle> prime_cycles(const Digraph& d, std::size_t max_len) {
    if (max_len == 0) {
        throw PreconditionError("prime cycle length bound must be at least 1");
    }
    std::vector<PrimeCycle> out;
    for (const auto& a : d.arcs()) {
        kernels::for_each_necklace(d, a.id, max_len,
                                   [&](std::span<const ArcId> word, std::size_t period) {
                                       if (period == word.size()) {
                                           out.push_back(PrimeCycle{{word.begin(), word.end()}});
                                       }
                                   });
    }
    std::sort(out.begin(), out.end(), [](const PrimeCycle& x, const PrimeCycle& y) {
        if (x.length() != y.length()) {
            return x.length() < y.length();
        }
        return x.arcs < y.arcs;
    });
    return out;
}

std::vector<ArcId> least_rotation(std::span<const ArcId> word) {
    std::vector<ArcId> best(word.begin(), word.end());
    std::vector<ArcId> candidate(word.size());
    for (std::size_t r = 1; r < word.size(); ++r) {
        for (std::size_t i = 0; i < word.size(); ++i) {
            candidate[i] = word[(i + r) % word.size()];
        }
        if (candidate < best) {
            best = candidate;
        }
    }
    return best;
}

std::size_t primitive_period(std::span<const ArcId> word) {
    const std::size_t k = word.size();
    for (std::size_t p = 1; p < k; ++p) {
        if (k % p != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t i = p; i < k && repeats; ++i) {
            repeats = word[i] == word[i - p];
        }
        if (repeats) {
            return p;
        }
    }
    return k;
}

Matrix<Integer> arc_adjacency(const Digraph& d) {
    const std::size_t m = d.arc_count();
    Matrix<Integer> b(m, m);
    for (const auto& a : d.arcs()) {
        for (ArcId next : d.out_arcs(a.head)) {
            b(a.id, next) = 1;
        }
    }
    return b;
}

std::vector<Integer> closed_path_counts(const Digraph& d, std::size_t k_max) {
    return kernels::power_traces(arc_adjacency(d), k_max);
}

std::vector<Integer> closed_path_class_counts(const Digraph& d, std::size_t k_max) {
    auto counts = closed_path_counts(d, k_max);
    auto phi = [](std::size_t n) {
        std::size_t result = n;
        for (std::size_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                while (n % p == 0) {
                    n /= p;
                }
                result -= result / p;
            }
        }
        if (n > 1) {
            result -= result / n;
        }
        return result;
    };
    std::vector<Integer> out(k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
        Integer acc = 0;
        for (std::size_t e = 1; e <= k; ++e) {
            if (k % e == 0) {
                acc += Integer(static_cast<unsigned long>(phi(k / e))) * counts[e - 1];
            }
        }
        out[k - 1] = acc / static_cast<unsigned long>(k);
    }
    return out;
}

}  // namespace graphzeta
