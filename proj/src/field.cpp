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

#include "graphzeta/field.hpp"

#include <cmath>
#include <cstdio>
#include <regex>

#include "graphzeta/error.hpp"

namespace graphzeta {

std::string FieldTraits<Complex>::format(const Complex& x) { return format_complex(x); }

bool approx_equal(const Complex& a, const Complex& b, double tol) { return std::abs(a - b) <= tol; }

Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
    std::string s(text);
    if (!std::regex_match(s, pattern)) {
        throw ValidationError("malformed rational '" + s + "'");
    }
    if (s.front() == '+') {
        s.erase(s.begin());
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer den(s.substr(slash + 1));
        if (sgn(den) == 0) {
            throw ValidationError("zero denominator in '" + std::string(text) + "'");
        }
    }
    Rational r(s);
    r.canonicalize();
    return r;
}

std::string format_complex(const Complex& z, int precision) {
    double cutoff = 0.5 * std::pow(10.0, -precision);
    double re = std::abs(z.real()) < cutoff ? 0.0 : z.real();
    double im = std::abs(z.imag()) < cutoff ? 0.0 : z.imag();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*f%+.*fi", precision, re, precision, im);
    return buf;
}

}  // namespace graphzeta
