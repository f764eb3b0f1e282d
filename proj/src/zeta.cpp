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

#include "graphzeta/zeta.hpp"

#include <algorithm>

#include "graphzeta/cycles.hpp"
#include "graphzeta/error.hpp"
#include "graphzeta/ihara.hpp"
#include "graphzeta/linalg.hpp"
#include "graphzeta/path_kernels.hpp"

namespace graphzeta {

namespace {

Matrix<PolyQ> identity_minus_t(const Matrix<Rational>& m) {
    Matrix<PolyQ> out = m.map<PolyQ>([](const Rational& x) { return PolyQ::monomial(Rational(-x), 1); });
    for (std::size_t i = 0; i < out.rows(); ++i) {
        out(i, i) += PolyQ(Rational(1));
    }
    return out;
}

Matrix<Rational> hadamard_power(const Matrix<Rational>& m, unsigned long j) {
    return m.map<Rational>([j](const Rational& x) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), j);
        mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), j);
        return r;
    });
}

int mobius(std::size_t n) {
    int sign = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            sign = -sign;
        }
    }
    if (n > 1) {
        sign = -sign;
    }
    return sign;
}

SeriesQ euler_by_power_sums(const Matrix<Rational>& m, std::size_t order, Execution exec) {
    // traces[j][n - 1] = sum over closed paths C of length n of circ(C)^j.
    std::vector<std::vector<Rational>> traces(order + 1);
    for (std::size_t j = 1; j <= order; ++j) {
        traces[j] = kernels::power_traces(hadamard_power(m, j), order / j, exec);
    }
    SeriesQ product = SeriesQ::one(order);
    for (std::size_t len = 1; len <= order; ++len) {
        const std::size_t jmax = order / len;
        // power[k] = sum of circ(P)^k over prime cycles P of this length.
        std::vector<Rational> power(jmax + 1);
        for (std::size_t k = 1; k <= jmax; ++k) {
            Rational acc = 0;
            for (std::size_t e = 1; e <= len; ++e) {
                if (len % e != 0) {
                    continue;
                }
                int mu = mobius(len / e);
                if (mu != 0) {
                    acc += mu * traces[k * len / e][e - 1];
                }
            }
            power[k] = acc / static_cast<unsigned long>(len);
        }
        std::vector<Rational> elementary(jmax + 1);
        elementary[0] = 1;
        for (std::size_t k = 1; k <= jmax; ++k) {
            Rational acc = 0;
            for (std::size_t i = 1; i <= k; ++i) {
                Rational term = elementary[k - i] * power[i];
                if (i % 2 == 1) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            elementary[k] = acc / static_cast<unsigned long>(k);
        }
        SeriesQ factor(order);
        for (std::size_t j = 0; j <= jmax; ++j) {
            factor[len * j] = j % 2 == 0 ? elementary[j] : Rational(-elementary[j]);
        }
        product = product * inverse(factor);
    }
    return product;
}

std::optional<std::size_t> lowest_term(const PolyQ& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!is_zero(p.coeff(i))) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t enumeration_limit(const Digraph& d, std::size_t order) {
    auto classes = closed_path_class_counts(d, order);
    Integer total = 0;
    std::size_t through = 0;
    for (std::size_t k = 0; k < order; ++k) {
        total += classes[k];
        if (total > kEnumerationBudget) {
            break;
        }
        through = k + 1;
    }
    return through;
}

}  // namespace

std::size_t default_order(const Digraph& d) { return std::max<std::size_t>(10, d.arc_count()); }

PolyQ hashimoto(const Digraph& d, const Weights& w) {
    return char_poly_hessenberg(edge_matrix(d, w)).reversed(d.arc_count());
}

PolyQ hashimoto_by_elimination(const Digraph& d, const Weights& w, Execution exec) {
    return det_exact(identity_minus_t(edge_matrix(d, w)), exec);
}

PolyQ hashimoto_via_char_poly(const Digraph& d, const Weights& w, Execution exec) {
    const std::size_t n = d.arc_count();
    return char_poly_faddeev(edge_matrix(d, w), exec).reversed(n);
}

std::vector<Rational> closed_path_sums_by_trace(const Digraph& d, const Weights& w, std::size_t k_max,
                                                Execution exec) {
    return kernels::power_traces(edge_matrix(d, w), k_max, exec);
}

kernels::CycleForm cycle_form(const Digraph& d, const Weights& w) {
    w.require_total(d);
    std::vector<Rational> similarity;
    similarity.reserve(d.arc_count());
    for (const auto& e : w.end) {
        similarity.emplace_back(Integer(1), e.get_den());
    }
    return kernels::cycle_form(edge_matrix(d, w), similarity);
}

std::vector<Rational> closed_path_sums_by_enumeration(const Digraph& d, const Weights& w, std::size_t k_max,
                                                      Execution exec) {
    return kernels::closed_path_sums(d, cycle_form(d, w), k_max, exec);
}

Rational n_k(const Digraph& d, const Weights& w, std::size_t k) {
    if (k == 0) {
        throw PreconditionError("N_k needs k >= 1");
    }
    Rational by_trace = closed_path_sums_by_trace(d, w, k).back();
    Rational by_paths = closed_path_sums_by_enumeration(d, w, k).back();
    if (by_trace != by_paths) {
        throw IdentityMismatch("N_" + std::to_string(k) + ": closed paths give " + by_paths.get_str() +
                               ", trace gives " + by_trace.get_str());
    }
    return by_trace;
}

SeriesQ exponential_from_sums(const std::vector<Rational>& sums, std::size_t order) {
    if (sums.size() < order) {
        throw PreconditionError("need N_1..N_" + std::to_string(order));
    }
    SeriesQ s(order);
    for (std::size_t k = 1; k <= order; ++k) {
        s[k] = sums[k - 1] / static_cast<unsigned long>(k);
    }
    return exp(s);
}

SeriesQ exponential_truncated(const Digraph& d, const Weights& w, std::size_t order, Execution exec) {
    if (order == 0) {
        throw PreconditionError("truncation order must be at least 1");
    }
    return exponential_from_sums(closed_path_sums_by_trace(d, w, order, exec), order);
}

std::string to_string(EulerMethod m) {
    switch (m) {
        case EulerMethod::Auto:
            return "auto";
        case EulerMethod::PrimeCycles:
            return "prime-cycles";
        case EulerMethod::PowerSums:
            return "power-sums";
    }
    return "unknown";
}

Integer necklace_count(const Digraph& d, std::size_t order) {
    Integer total = 0;
    for (const auto& c : closed_path_class_counts(d, order)) {
        total += c;
    }
    return total;
}

EulerResult euler_truncated(const Digraph& d, const Weights& w, std::size_t order, EulerMethod method,
                            Execution exec) {
    if (order == 0) {
        throw PreconditionError("truncation order must be at least 1");
    }
    if (method == EulerMethod::Auto) {
        method = necklace_count(d, order) <= kEnumerationBudget ? EulerMethod::PrimeCycles : EulerMethod::PowerSums;
    }
    if (method == EulerMethod::PrimeCycles) {
        return {kernels::prime_cycle_product(d, cycle_form(d, w), order, exec), method};
    }
    return {euler_by_power_sums(edge_matrix(d, w), order, exec), method};
}

bool ZetaReport::all_agree() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.agree(); });
}

std::optional<std::size_t> first_mismatch(const RatFunc& a, const RatFunc& b) {
    if (a == b) {
        return std::nullopt;
    }
    return lowest_term((a - b).num());
}

ZetaReport verify_expressions(const Digraph& d, const Weights& w, std::size_t order, Execution exec) {
    if (order == 0) {
        throw PreconditionError("truncation order must be at least 1");
    }
    ZetaReport r;
    r.order = order;
    auto traces = closed_path_sums_by_trace(d, w, order, exec);
    r.exponential = exponential_from_sums(traces, order);
    auto euler = euler_truncated(d, w, order, EulerMethod::Auto, exec);
    r.euler = euler.series;
    r.euler_method = euler.method;
    r.hashimoto = hashimoto(d, w);
    r.hashimoto_series = inverse(SeriesQ::from_poly(r.hashimoto, order));

    r.verdicts.push_back({"exponential", "euler", first_mismatch(r.exponential, r.euler)});
    r.verdicts.push_back({"exponential", "hashimoto", first_mismatch(r.exponential, r.hashimoto_series)});
    r.verdicts.push_back({"euler", "hashimoto", first_mismatch(r.euler, r.hashimoto_series)});

    PolyQ via_char_poly = hashimoto_via_char_poly(d, w, exec);
    r.verdicts.push_back({"hashimoto", "char-poly", first_mismatch(RatFunc(r.hashimoto), RatFunc(via_char_poly))});
    if (d.arc_count() <= kEliminationArcLimit) {
        PolyQ by_elimination = hashimoto_by_elimination(d, w, exec);
        r.verdicts.push_back(
            {"hashimoto", "elimination", first_mismatch(RatFunc(r.hashimoto), RatFunc(by_elimination))});
    }

    r.enumerated_through = enumeration_limit(d, order);
    if (r.enumerated_through > 0) {
        auto sums = closed_path_sums_by_enumeration(d, w, r.enumerated_through, exec);
        std::optional<std::size_t> at;
        for (std::size_t k = 0; k < sums.size() && !at; ++k) {
            if (sums[k] != traces[k]) {
                at = k + 1;
            }
        }
        r.verdicts.push_back({"closed-paths", "trace", at});
    }

    r.ihara = d.is_symmetric() ? ihara_graph(d, w).rhs : ihara_digraph(d, w).rhs;
    r.verdicts.push_back({"hashimoto", "ihara", first_mismatch(RatFunc(r.hashimoto), *r.ihara)});
    return r;
}

}  // namespace graphzeta
