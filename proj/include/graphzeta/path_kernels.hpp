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

#ifndef GRAPHZETA_PATH_KERNELS_HPP
#define GRAPHZETA_PATH_KERNELS_HPP

// Closed-path enumeration up to rotation. Rotation classes are visited once
// each, as necklaces over the arc alphabet (prenecklace recursion restricted
// to arc successions), so work grows with the number of classes rather than
// the number of closed paths.

#include <cstddef>
#include <span>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/field.hpp"
#include "graphzeta/kernels.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/series.hpp"

namespace graphzeta::kernels {

namespace detail {

// visit(word, period, circ) fires for every necklace whose first arc is the
// one passed to run(). period == word.size() marks a prime cycle. With a
// weight matrix, transitions of weight zero are pruned and circ is the
// product of weights around the cycle; without one circ is 1.
template <class Visit>
class NecklaceWalker {
   public:
    NecklaceWalker(const Digraph& d, const Matrix<Integer>* weights, std::size_t max_len, Visit& visit)
        : d_(d), weights_(weights), max_len_(max_len), visit_(visit), prefix_(max_len + 1, Integer(1)) {
        word_.reserve(max_len);
    }

    void run(ArcId first) {
        word_.assign(1, first);
        prefix_[1] = 1;
        emit_if_closed(1, 1);
        extend(1, 1);
    }

   private:
    void emit_if_closed(std::size_t len, std::size_t period) {
        ArcId last = word_.back();
        ArcId first = word_.front();
        if (d_.arc(last).head != d_.arc(first).tail || len % period != 0) {
            return;
        }
        if (weights_ != nullptr) {
            const Integer& closing = (*weights_)(last, first);
            if (sgn(closing) == 0) {
                return;
            }
            circ_ = prefix_[len] * closing;
        }
        visit_(std::span<const ArcId>(word_), period, circ_);
    }

    void extend(std::size_t len, std::size_t period) {
        if (len == max_len_) {
            return;
        }
        ArcId last = word_.back();
        ArcId floor = word_[len - period];
        for (ArcId next : d_.out_arcs(d_.arc(last).head)) {
            if (next < floor) {
                continue;
            }
            if (weights_ != nullptr) {
                const Integer& w = (*weights_)(last, next);
                if (sgn(w) == 0) {
                    continue;
                }
                prefix_[len + 1] = prefix_[len] * w;
            }
            std::size_t next_period = next == floor ? period : len + 1;
            word_.push_back(next);
            emit_if_closed(len + 1, next_period);
            extend(len + 1, next_period);
            word_.pop_back();
        }
    }

    const Digraph& d_;
    const Matrix<Integer>* weights_;
    std::size_t max_len_;
    Visit& visit_;
    std::vector<ArcId> word_;
    std::vector<Integer> prefix_;
    Integer circ_ = 1;
};

}  // namespace detail

/// Calls visit(word, period) for each necklace of length <= max_len that
/// starts with `first`. Necklaces are least rotations, so every rotation
/// class is reached from exactly one first arc.
template <class Visit>
void for_each_necklace(const Digraph& d, ArcId first, std::size_t max_len, Visit&& visit) {
    auto adapter = [&visit](std::span<const ArcId> word, std::size_t period, const Integer&) {
        visit(word, period);
    };
    detail::NecklaceWalker<decltype(adapter)> walker(d, nullptr, max_len, adapter);
    walker.run(first);
}

/// Integer image of a weight matrix for cycle products: for every closed
/// path C, circ(C) = circ_weights(C) / scale^|C|.
struct CycleForm {
    Matrix<Integer> weights;
    Integer scale;
};

/// weights(a, b) = scale * theta(a, b) * similarity(a) / similarity(b), with
/// scale the least common denominator. Conjugating by a diagonal matrix
/// leaves every circular product unchanged; a good similarity keeps scale
/// small. Entries of similarity must be nonzero.
CycleForm cycle_form(const Matrix<Rational>& theta, std::span<const Rational> similarity);
/// Identity similarity.
CycleForm cycle_form(const Matrix<Rational>& theta);

/// sum over closed paths C of length k of circ(C), for k = 1..k_max.
std::vector<Rational> closed_path_sums_serial(const Digraph& d, const CycleForm& form, std::size_t k_max);
std::vector<Rational> closed_path_sums_parallel(const Digraph& d, const CycleForm& form, std::size_t k_max);
std::vector<Rational> closed_path_sums(const Digraph& d, const CycleForm& form, std::size_t k_max,
                                       Execution exec = Execution::Parallel);
std::vector<Rational> closed_path_sums(const Digraph& d, const Matrix<Rational>& theta, std::size_t k_max,
                                       Execution exec = Execution::Parallel);

/// prod over prime cycles P with |P| <= order of 1 / (1 - circ(P) t^|P|),
/// truncated after t^order.
SeriesQ prime_cycle_product_serial(const Digraph& d, const CycleForm& form, std::size_t order);
SeriesQ prime_cycle_product_parallel(const Digraph& d, const CycleForm& form, std::size_t order);
SeriesQ prime_cycle_product(const Digraph& d, const CycleForm& form, std::size_t order,
                            Execution exec = Execution::Parallel);
SeriesQ prime_cycle_product(const Digraph& d, const Matrix<Rational>& theta, std::size_t order,
                            Execution exec = Execution::Parallel);

}  // namespace graphzeta::kernels

#endif
