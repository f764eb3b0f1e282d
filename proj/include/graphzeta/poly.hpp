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

#ifndef GRAPHZETA_POLY_HPP
#define GRAPHZETA_POLY_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphzeta/error.hpp"
#include "graphzeta/field.hpp"

namespace graphzeta {

/// Dense univariate polynomial, constant term first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial is
/// the empty coefficient list and `degree()` of it is -1. Over Complex only
/// exact zeros are stripped; use `approx_equal` for tolerant comparison.
template <Field F>
class Poly {
   public:
    Poly() = default;
    Poly(const F& c) : coeffs_{c} { normalize(); }
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { normalize(); }

    static Poly monomial(const F& c, std::size_t k) {
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(F(1), 1); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<F>& coefficients() const noexcept { return coeffs_; }

    F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }
    const F& leading() const {
        if (coeffs_.empty()) {
            throw PreconditionError("leading coefficient of the zero polynomial");
        }
        return coeffs_.back();
    }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) {
            c = FieldTraits<F>::negate(c);
        }
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        normalize();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (FieldTraits<F>::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiplies by t^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) {
            return {};
        }
        std::vector<F> v(k, F(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

    /// Keeps coefficients of t^0..t^order.
    Poly truncated(std::size_t order) const {
        if (coeffs_.size() <= order + 1) {
            return *this;
        }
        return Poly(std::vector<F>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    /// t^n p(1/t); requires n >= degree.
    Poly reversed(std::size_t n) const {
        if (degree() > static_cast<int>(n)) {
            throw PreconditionError("reversal length below polynomial degree");
        }
        std::vector<F> v(n + 1, F(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            v[n - i] = coeffs_[i];
        }
        return Poly(std::move(v));
    }

    /// p(c t).
    Poly scaled_argument(const F& c) const {
        Poly r = *this;
        F power(1);
        for (auto& x : r.coeffs_) {
            x *= power;
            power *= c;
        }
        r.normalize();
        return r;
    }

    Poly monic() const {
        if (is_zero()) {
            return {};
        }
        F lead = leading();
        Poly r = *this;
        for (auto& c : r.coeffs_) {
            c /= lead;
        }
        return r;
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && FieldTraits<F>::is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<F> coeffs_;
};

using PolyQ = Poly<Rational>;
using PolyC = Poly<Complex>;

template <Field F>
bool is_zero(const Poly<F>& p) {
    return p.is_zero();
}

template <Field F, std::integral E>
Poly<F> pow(const Poly<F>& base, E exponent) {
    if (exponent < 0) {
        throw PreconditionError("polynomial power needs a nonnegative exponent");
    }
    Poly<F> result(F(1));
    Poly<F> b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) {
        throw PreconditionError("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Poly<F>(), a};
    }
    std::vector<F> rem = a.coefficients();
    const auto& bc = b.coefficients();
    std::size_t db = bc.size() - 1;
    std::vector<F> quot(rem.size() - db, F(0));
    for (std::size_t k = rem.size(); k-- > db;) {
        F q = rem[k] / bc[db];
        quot[k - db] = q;
        if (FieldTraits<F>::is_zero(q)) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= q * bc[j];
        }
        rem[k] = F(0);
    }
    rem.resize(db);
    return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

/// Division that must leave no remainder (exact over Rational).
template <ExactField F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw IdentityMismatch("inexact polynomial division");
    }
    return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <ExactField F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Coefficient-wise comparison with absolute tolerance.
template <Field F>
bool approx_equal(const Poly<F>& a, const Poly<F>& b, double tol = kDefaultTolerance) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (FieldTraits<F>::magnitude(a.coeff(i) - b.coeff(i)) > tol) {
            return false;
        }
    }
    return true;
}

/// Renders "c0 + c1*t + c2*t^2". Zero terms are skipped, unit coefficients on
/// non-constant terms are elided, negative rationals print as " - |c|".
template <Field F>
std::string to_string(const Poly<F>& p, std::string_view var = "t") {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        F c = p.coeff(i);
        if (FieldTraits<F>::is_zero(c)) {
            continue;
        }
        bool negative = FieldTraits<F>::is_negative(c);
        F mag = negative ? FieldTraits<F>::negate(c) : c;
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = FieldTraits<F>::is_one(mag);
        if (i == 0) {
            os << FieldTraits<F>::format(mag);
            continue;
        }
        if (!unit) {
            os << FieldTraits<F>::format(mag) << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace graphzeta

#endif
