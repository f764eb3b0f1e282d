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

#include "graphzeta/identities.hpp"

#include "graphzeta/linalg.hpp"
#include "graphzeta/ratfunc.hpp"

namespace graphzeta {

namespace {

Matrix<PolyQ> identity_plus_t(const Matrix<Rational>& m, const Rational& scale) {
    Matrix<PolyQ> out = m.map<PolyQ>([&](const Rational& x) { return PolyQ::monomial(Rational(scale * x), 1); });
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out(i, i) += PolyQ(Rational(1));
    }
    return out;
}

// I - t^2 A.
Matrix<PolyQ> identity_minus_t2(const Matrix<Rational>& a) {
    Matrix<PolyQ> out = a.map<PolyQ>([](const Rational& x) { return PolyQ::monomial(Rational(-x), 2); });
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out(i, i) += PolyQ(Rational(1));
    }
    return out;
}

Matrix<RatFunc> to_ratfunc(const Matrix<PolyQ>& m) { return promote<RatFunc>(m); }

}  // namespace

Matrix<Rational> all_ones(std::size_t rows, std::size_t cols) {
    return Matrix<Rational>(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

bool allones_inverse_check(std::size_t n, const Rational& k) {
    const RatFunc t(PolyQ::variable());
    Matrix<RatFunc> ones = promote<RatFunc>(all_ones(n, n));
    RatFunc tk = t * RatFunc(k);
    Matrix<RatFunc> lhs = Matrix<RatFunc>::identity(n) + tk * ones;
    RatFunc scale = (RatFunc(Rational(1)) + tk * RatFunc(Rational(static_cast<long>(n)))).inverse() * tk;
    Matrix<RatFunc> candidate = Matrix<RatFunc>::identity(n) - scale * ones;
    Matrix<RatFunc> id = Matrix<RatFunc>::identity(n);
    return candidate * lhs == id && lhs * candidate == id;
}

WoodburyCheck block_woodbury_check(const Matrix<Rational>& m1, const Matrix<Rational>& m2) {
    const std::size_t k = m1.rows();
    const std::size_t l = m1.cols();
    if (m2.rows() != l || m2.cols() != k) {
        throw PreconditionError("M2 must be the transpose shape of M1");
    }
    Matrix<Rational> m = assemble(Matrix<Rational>(k, k), m1, m2, Matrix<Rational>(l, l));
    Matrix<PolyQ> full = identity_plus_t(m, Rational(1));
    Matrix<PolyQ> right = identity_minus_t2(m2 * m1);
    Matrix<PolyQ> left = identity_minus_t2(m1 * m2);

    WoodburyCheck check;
    check.det_full = det_exact(full);
    check.det_right = det_exact(right);
    check.det_left = det_exact(left);

    const RatFunc t(PolyQ::variable());
    Matrix<RatFunc> right_inv = inverse(to_ratfunc(right));
    Matrix<RatFunc> left_inv = inverse(to_ratfunc(left));
    Matrix<RatFunc> m1q = promote<RatFunc>(m1);
    Matrix<RatFunc> m2q = promote<RatFunc>(m2);
    Matrix<RatFunc> candidate = assemble(left_inv, RatFunc(Rational(-1)) * t * (m1q * right_inv),
                                         RatFunc(Rational(-1)) * t * (right_inv * m2q), right_inv);
    Matrix<RatFunc> fullq = to_ratfunc(full);
    Matrix<RatFunc> id = Matrix<RatFunc>::identity(k + l);
    check.inverse_form = candidate * fullq == id && fullq * candidate == id;
    return check;
}

bool det_swap_check(const Matrix<Rational>& x, const Matrix<Rational>& y) {
    if (x.cols() != y.rows() || x.rows() != y.cols()) {
        throw PreconditionError("X and Y are not conformable both ways");
    }
    auto i_minus_t = [](const Matrix<Rational>& a) {
        Matrix<PolyQ> out = a.map<PolyQ>([](const Rational& v) { return PolyQ::monomial(Rational(-v), 1); });
        for (std::size_t i = 0; i < a.rows(); ++i) {
            out(i, i) += PolyQ(Rational(1));
        }
        return out;
    };
    return det_exact(i_minus_t(x * y)) == det_exact(i_minus_t(y * x));
}

}  // namespace graphzeta
