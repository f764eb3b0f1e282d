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

#ifndef GRAPHZETA_SERIES_HPP
#define GRAPHZETA_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graphzeta/error.hpp"
#include "graphzeta/field.hpp"
#include "graphzeta/poly.hpp"

namespace graphzeta {

/// Formal power series c0 + c1 t + ... + cL t^L + O(t^{L+1}).
///
/// The truncation order L is part of the value. Binary operations on series
/// of different order truncate to the smaller one.
template <Field F>
class Series {
   public:
    explicit Series(std::size_t order) : coeffs_(order + 1, F(0)) {}
    Series(std::vector<F> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, F(0));
    }

    static Series one(std::size_t order) {
        Series s(order);
        s.coeffs_[0] = F(1);
        return s;
    }
    static Series from_poly(const Poly<F>& p, std::size_t order) {
        return Series(std::vector<F>(p.coefficients().begin(),
                                     p.coefficients().begin() +
                                         std::min(p.size(), order + 1)),
                      order);
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const F& operator[](std::size_t i) const { return coeffs_.at(i); }
    F& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<F>& coefficients() const noexcept { return coeffs_; }

    Series truncated(std::size_t order) const {
        Series r = *this;
        r.coeffs_.resize(std::min(order, this->order()) + 1);
        return r;
    }

    Poly<F> to_poly() const { return Poly<F>(coeffs_); }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) {
            c = FieldTraits<F>::negate(c);
        }
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r = a.truncated(b.order());
        for (std::size_t i = 0; i <= r.order(); ++i) {
            r.coeffs_[i] += b.coeffs_[i];
        }
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        std::size_t order = std::min(a.order(), b.order());
        Series r(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (FieldTraits<F>::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= order; ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    friend Series operator*(const F& c, Series s) {
        for (auto& x : s.coeffs_) {
            x *= c;
        }
        return s;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

   private:
    std::vector<F> coeffs_;
};

using SeriesQ = Series<Rational>;

/// exp(s); requires c0 == 0. Uses n g_n = sum_{k=1..n} k s_k g_{n-k}.
template <Field F>
Series<F> exp(const Series<F>& s) {
    if (!FieldTraits<F>::is_zero(s[0])) {
        throw PreconditionError("series exp needs constant term 0, got " +
                                FieldTraits<F>::format(s[0]));
    }
    std::size_t order = s.order();
    Series<F> g = Series<F>::one(order);
    for (std::size_t n = 1; n <= order; ++n) {
        F acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (!FieldTraits<F>::is_zero(s[k])) {
                acc += F(static_cast<long>(k)) * s[k] * g[n - k];
            }
        }
        g[n] = acc / F(static_cast<long>(n));
    }
    return g;
}

/// log(s); requires c0 == 1. Uses n f_n = n s_n - sum_{k=1..n-1} k f_k s_{n-k}.
template <Field F>
Series<F> log(const Series<F>& s) {
    if (!FieldTraits<F>::is_one(s[0])) {
        throw PreconditionError("series log needs constant term 1, got " +
                                FieldTraits<F>::format(s[0]));
    }
    std::size_t order = s.order();
    Series<F> f(order);
    for (std::size_t n = 1; n <= order; ++n) {
        F acc = F(static_cast<long>(n)) * s[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc -= F(static_cast<long>(k)) * f[k] * s[n - k];
        }
        f[n] = acc / F(static_cast<long>(n));
    }
    return f;
}

/// Multiplicative inverse; requires c0 != 0.
template <Field F>
Series<F> inverse(const Series<F>& s) {
    if (FieldTraits<F>::is_zero(s[0])) {
        throw PreconditionError("series inverse needs nonzero constant term");
    }
    std::size_t order = s.order();
    Series<F> r(order);
    r[0] = F(1) / s[0];
    for (std::size_t n = 1; n <= order; ++n) {
        F acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            acc += s[k] * r[n - k];
        }
        r[n] = FieldTraits<F>::negate(acc) / s[0];
    }
    return r;
}

/// Index of the first differing coefficient over the common order, if any.
template <Field F>
std::optional<std::size_t> first_mismatch(const Series<F>& a, const Series<F>& b) {
    std::size_t order = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= order; ++i) {
        if (!(a[i] == b[i])) {
            return i;
        }
    }
    return std::nullopt;
}

template <Field F>
std::optional<std::size_t> first_mismatch(const Series<F>& a, const Series<F>& b, double tol) {
    std::size_t order = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= order; ++i) {
        if (FieldTraits<F>::magnitude(a[i] - b[i]) > tol) {
            return i;
        }
    }
    return std::nullopt;
}

/// Polynomial rendering followed by " + O(t^{L+1})".
template <Field F>
std::string to_string(const Series<F>& s, std::string_view var = "t") {
    std::ostringstream os;
    Poly<F> p(s.coefficients());
    if (!p.is_zero()) {
        os << to_string(p, var) << " + ";
    }
    os << "O(" << var << "^" << s.order() + 1 << ")";
    return os.str();
}

}  // namespace graphzeta

#endif
