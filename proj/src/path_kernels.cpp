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

#include "graphzeta/path_kernels.hpp"

#include <exception>

#include "graphzeta/error.hpp"

namespace graphzeta::kernels {

namespace {

void check_shape(const Digraph& d, const CycleForm& form) {
    if (form.weights.rows() != d.arc_count() || form.weights.cols() != d.arc_count()) {
        throw PreconditionError("weight matrix must be |A| x |A|");
    }
}

// sums[k - 1] accumulates period * circ over necklaces of length k; each
// necklace stands for `period` distinct closed paths.
struct SumVisitor {
    std::vector<Integer>& sums;
    void operator()(std::span<const ArcId> word, std::size_t period, const Integer& circ) {
        mpz_addmul_ui(sums[word.size() - 1].get_mpz_t(), circ.get_mpz_t(), period);
    }
};

// Multiplies a series in u = t / scale by 1 / (1 - circ u^len) in place.
struct ProductVisitor {
    std::vector<Integer>& series;
    void operator()(std::span<const ArcId> word, std::size_t period, const Integer& circ) {
        const std::size_t len = word.size();
        if (period != len) {
            return;
        }
        for (std::size_t n = len; n < series.size(); ++n) {
            mpz_addmul(series[n].get_mpz_t(), circ.get_mpz_t(), series[n - len].get_mpz_t());
        }
    }
};

// Runs body(first_arc, state) for every first arc across threads with one
// accumulator per thread, merged under a critical section.
template <class State, class Make, class Body, class Merge>
void for_first_arcs_parallel(std::size_t arc_count, Make make, Body body, Merge merge) {
    std::exception_ptr failure;
    const auto count = static_cast<long>(arc_count);
#pragma omp parallel
    {
        State local = make();
#pragma omp for schedule(dynamic, 1) nowait
        for (long a = 0; a < count; ++a) {
            try {
                body(static_cast<ArcId>(a), local);
            } catch (...) {
#pragma omp critical(graphzeta_path_failure)
                failure = std::current_exception();
            }
        }
#pragma omp critical(graphzeta_path_merge)
        merge(local);
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

// Coefficient k of a series in u = t / scale becomes coefficient k in t.
std::vector<Rational> unscale(const std::vector<Integer>& values, const Integer& scale, std::size_t first_power) {
    std::vector<Rational> out;
    Integer power = 1;
    for (std::size_t k = 0; k < first_power; ++k) {
        power *= scale;
    }
    for (const auto& v : values) {
        Rational r(v, power);
        r.canonicalize();
        out.push_back(r);
        power *= scale;
    }
    return out;
}

std::vector<Integer> multiply_truncated(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> c(a.size(), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return c;
}

std::vector<Integer> unit_series(std::size_t order) {
    std::vector<Integer> s(order + 1, Integer(0));
    s[0] = 1;
    return s;
}

SeriesQ to_series(const std::vector<Integer>& scaled, const Integer& scale) {
    auto coeffs = unscale(scaled, scale, 0);
    return SeriesQ(std::move(coeffs), scaled.size() - 1);
}

}  // namespace

CycleForm cycle_form(const Matrix<Rational>& theta, std::span<const Rational> similarity) {
    if (!theta.is_square() || similarity.size() != theta.rows()) {
        throw PreconditionError("cycle form needs a square matrix and one similarity entry per row");
    }
    const std::size_t m = theta.rows();
    Matrix<Rational> conjugated(m, m);
    Integer scale = 1;
    for (std::size_t a = 0; a < m; ++a) {
        if (sgn(similarity[a]) == 0) {
            throw PreconditionError("similarity entries must be nonzero");
        }
        for (std::size_t b = 0; b < m; ++b) {
            conjugated(a, b) = theta(a, b) * similarity[a] / similarity[b];
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), conjugated(a, b).get_den_mpz_t());
        }
    }
    CycleForm form{Matrix<Integer>(m, m), scale};
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const Rational& x = conjugated(a, b);
            form.weights(a, b) = x.get_num() * (scale / x.get_den());
        }
    }
    return form;
}

CycleForm cycle_form(const Matrix<Rational>& theta) {
    std::vector<Rational> identity(theta.rows(), Rational(1));
    return cycle_form(theta, identity);
}

std::vector<Rational> closed_path_sums_serial(const Digraph& d, const CycleForm& form, std::size_t k_max) {
    check_shape(d, form);
    std::vector<Integer> sums(k_max, Integer(0));
    if (k_max > 0) {
        SumVisitor visit{sums};
        detail::NecklaceWalker<SumVisitor> walker(d, &form.weights, k_max, visit);
        for (ArcId a = 0; a < d.arc_count(); ++a) {
            walker.run(a);
        }
    }
    return unscale(sums, form.scale, 1);
}

std::vector<Rational> closed_path_sums_parallel(const Digraph& d, const CycleForm& form, std::size_t k_max) {
    check_shape(d, form);
    std::vector<Integer> sums(k_max, Integer(0));
    if (k_max > 0) {
        for_first_arcs_parallel<std::vector<Integer>>(
            d.arc_count(), [&] { return std::vector<Integer>(k_max, Integer(0)); },
            [&](ArcId first, std::vector<Integer>& local) {
                SumVisitor visit{local};
                detail::NecklaceWalker<SumVisitor> walker(d, &form.weights, k_max, visit);
                walker.run(first);
            },
            [&](const std::vector<Integer>& local) {
                for (std::size_t k = 0; k < k_max; ++k) {
                    sums[k] += local[k];
                }
            });
    }
    return unscale(sums, form.scale, 1);
}

std::vector<Rational> closed_path_sums(const Digraph& d, const CycleForm& form, std::size_t k_max, Execution exec) {
    return exec == Execution::Serial ? closed_path_sums_serial(d, form, k_max)
                                     : closed_path_sums_parallel(d, form, k_max);
}

std::vector<Rational> closed_path_sums(const Digraph& d, const Matrix<Rational>& theta, std::size_t k_max,
                                       Execution exec) {
    return closed_path_sums(d, cycle_form(theta), k_max, exec);
}

SeriesQ prime_cycle_product_serial(const Digraph& d, const CycleForm& form, std::size_t order) {
    check_shape(d, form);
    std::vector<Integer> series = unit_series(order);
    if (order > 0) {
        ProductVisitor visit{series};
        detail::NecklaceWalker<ProductVisitor> walker(d, &form.weights, order, visit);
        for (ArcId a = 0; a < d.arc_count(); ++a) {
            walker.run(a);
        }
    }
    return to_series(series, form.scale);
}

SeriesQ prime_cycle_product_parallel(const Digraph& d, const CycleForm& form, std::size_t order) {
    check_shape(d, form);
    std::vector<Integer> series = unit_series(order);
    if (order > 0) {
        for_first_arcs_parallel<std::vector<Integer>>(
            d.arc_count(), [&] { return unit_series(order); },
            [&](ArcId first, std::vector<Integer>& local) {
                ProductVisitor visit{local};
                detail::NecklaceWalker<ProductVisitor> walker(d, &form.weights, order, visit);
                walker.run(first);
            },
            [&](const std::vector<Integer>& local) { series = multiply_truncated(series, local); });
    }
    return to_series(series, form.scale);
}

SeriesQ prime_cycle_product(const Digraph& d, const CycleForm& form, std::size_t order, Execution exec) {
    return exec == Execution::Serial ? prime_cycle_product_serial(d, form, order)
                                     : prime_cycle_product_parallel(d, form, order);
}

SeriesQ prime_cycle_product(const Digraph& d, const Matrix<Rational>& theta, std::size_t order, Execution exec) {
    return prime_cycle_product(d, cycle_form(theta), order, exec);
}

}  // namespace graphzeta::kernels
