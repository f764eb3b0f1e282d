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

#ifndef GRAPHZETA_RATFUNC_HPP
#define GRAPHZETA_RATFUNC_HPP

#include <string>
#include <string_view>

#include "graphzeta/poly.hpp"

namespace graphzeta {

/// Quotient of two rational polynomials in canonical form: numerator and
/// denominator coprime, denominator monic, zero is 0/1. Two equal values
/// therefore always have identical (num, den).
class RatFunc {
   public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(PolyQ num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc(PolyQ num, PolyQ den);

    const PolyQ& num() const noexcept { return num_; }
    const PolyQ& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Numerator when the denominator is 1; throws otherwise.
    const PolyQ& as_poly() const;

    RatFunc inverse() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Evaluates at a point; throws when the denominator vanishes there.
    Rational operator()(const Rational& x) const;

   private:
    struct Raw {};
    RatFunc(PolyQ num, PolyQ den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    PolyQ num_;
    PolyQ den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline RatFunc exact_quotient(const RatFunc& a, const RatFunc& b) { return a / b; }

/// Integer power; negative exponents invert.
RatFunc pow(const RatFunc& base, int exponent);

/// "num" when polynomial, otherwise "(num)/(den)".
std::string to_string(const RatFunc& r, std::string_view var = "t");

}  // namespace graphzeta

#endif
