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

#include "graphzeta/ratfunc.hpp"

namespace graphzeta {

RatFunc::RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw PreconditionError("rational function with zero denominator");
    }
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolyQ(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        PolyQ g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        PolyQ scale(Rational(1 / lead));
        num_ *= scale;
        den_ *= scale;
    }
}

const PolyQ& RatFunc::as_poly() const {
    if (!is_polynomial()) {
        throw PreconditionError("rational function " + to_string(*this) + " is not a polynomial");
    }
    return num_;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) {
        throw PreconditionError("inversion of the zero rational function");
    }
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        return *this = RatFunc();
    }
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

Rational RatFunc::operator()(const Rational& x) const {
    Rational d = den_(x);
    if (sgn(d) == 0) {
        throw PreconditionError("rational function evaluated at a pole");
    }
    return Rational(num_(x) / d);
}

RatFunc pow(const RatFunc& base, int exponent) {
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    return RatFunc(pow(base.num(), static_cast<unsigned>(exponent)),
                   pow(base.den(), static_cast<unsigned>(exponent)));
}

std::string to_string(const RatFunc& r, std::string_view var) {
    if (r.is_polynomial()) {
        return to_string(r.num(), var);
    }
    return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

}  // namespace graphzeta
