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

#ifndef GRAPHZETA_FIELD_HPP
#define GRAPHZETA_FIELD_HPP

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

namespace graphzeta {

/// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;
/// Extended precision for discriminant spectra.
using Real = long double;

/// Default absolute tolerance for coefficient comparisons over Complex.
inline constexpr double kDefaultTolerance = 1e-9;

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static bool is_negative(const Rational& x) { return sgn(x) < 0; }
    static Rational negate(const Rational& x) { return Rational(-x); }
    static bool is_one(const Rational& x) { return x == 1; }
    static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
    static std::string format(const Rational& x) { return x.get_str(); }
};

template <>
struct FieldTraits<Complex> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex& x) { return x == Complex{}; }
    static bool is_negative(const Complex&) { return false; }
    static Complex negate(const Complex& x) { return -x; }
    static bool is_one(const Complex& x) { return x == Complex{1.0}; }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static std::string format(const Complex& x);
};

template <class F>
concept Field = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { FieldTraits<F>::exact } -> std::convertible_to<bool>;
};

template <class F>
concept ExactField = Field<F> && FieldTraits<F>::exact;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Complex& x) { return x == Complex{}; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return Rational(a / b); }
inline Complex exact_quotient(const Complex& a, const Complex& b) { return a / b; }

bool approx_equal(const Complex& a, const Complex& b, double tol = kDefaultTolerance);

/// Parses "p/q" or "p" (optional sign). Rejects zero denominators, spaces,
/// decimal points. The result is canonical.
Rational parse_rational(std::string_view text);

/// Fixed-point rendering "re+imi" with `precision` decimals. Values within
/// half an ulp of the last printed digit are printed as zero so that -0 never
/// appears.
std::string format_complex(const Complex& z, int precision = 12);

}  // namespace graphzeta

#endif
