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

#ifndef GRAPHZETA_IDENTITIES_HPP
#define GRAPHZETA_IDENTITIES_HPP

#include <cstddef>

#include "graphzeta/field.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/poly.hpp"

namespace graphzeta {

/// Checks (I + t k 1_n)^{-1} = I - (1 + t k n)^{-1} t k 1_n by multiplying
/// both sides out in Q(t), in both orders. 1_n is the n x n all-ones matrix.
bool allones_inverse_check(std::size_t n, const Rational& k);

struct WoodburyCheck {
    bool inverse_form = false;  // block formula times (I + tM) is I, both orders
    PolyQ det_full;             // det(I + tM)
    PolyQ det_right;            // det(I_l - t^2 M2 M1)
    PolyQ det_left;             // det(I_k - t^2 M1 M2)

    bool determinants_agree() const { return det_full == det_right && det_full == det_left; }
    bool ok() const { return inverse_form && determinants_agree(); }
};

/// For M = [[0, M1], [M2, 0]] with M1 k x l and M2 l x k, verifies the block
/// inverse of I + tM through (I_l - t^2 M2 M1)^{-1} and the two determinant
/// reductions. Throws SingularMatrixError if I - t^2 M2 M1 is singular over
/// Q(t).
WoodburyCheck block_woodbury_check(const Matrix<Rational>& m1, const Matrix<Rational>& m2);

/// det(I - t X Y) == det(I - t Y X) for conformable X (k x l), Y (l x k).
bool det_swap_check(const Matrix<Rational>& x, const Matrix<Rational>& y);

/// n x m all-ones matrix.
Matrix<Rational> all_ones(std::size_t rows, std::size_t cols);

}  // namespace graphzeta

#endif
