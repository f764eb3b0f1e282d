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

// Serial reference kernels against their OpenMP versions. Every pair must
// return identical exact results; timings are printed per kernel.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphzeta/kernels.hpp"
#include "graphzeta/path_kernels.hpp"
#include "graphzeta/weights.hpp"
#include "graphzeta/zeta.hpp"

namespace gz = graphzeta;

namespace {

gz::Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<unsigned long> den(1, 10);
    long n = 0;
    while (n == 0) {
        n = num(rng);
    }
    gz::Rational r(n, den(rng));
    r.canonicalize();
    return r;
}

gz::Matrix<gz::Rational> random_matrix(std::size_t n, std::mt19937_64& rng) {
    gz::Matrix<gz::Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = small_rational(rng);
        }
    }
    return m;
}

gz::Digraph random_digraph(std::size_t vertices, std::size_t arcs, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
    std::vector<std::pair<gz::VertexId, gz::VertexId>> list;
    for (std::size_t i = 0; i < arcs; ++i) {
        list.emplace_back(pick(rng), pick(rng));
    }
    return gz::Digraph::build(vertices, list);
}

template <class T>
bool time_pair(const std::string& name, const std::function<T()>& serial, const std::function<T()>& parallel) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    T a = serial();
    auto t1 = clock::now();
    T b = parallel();
    auto t2 = clock::now();
    double s = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double p = std::chrono::duration<double, std::milli>(t2 - t1).count();
    bool same = a == b;
    std::printf("%-28s serial %10.2f ms  parallel %10.2f ms  speedup %5.2fx  %s\n", name.c_str(), s, p,
                p > 0 ? s / p : 0.0, same ? "identical" : "DIFFERENT");
    return same;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel timings"};
    bool quick = false;
    unsigned long seed = 20260101;
    app.add_flag("--quick", quick, "small sizes, for smoke testing");
    app.add_option("--seed", seed, "random seed");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(seed);
    const std::size_t dim = quick ? 24 : 96;
    const std::size_t det_dim = quick ? 12 : 40;
    const std::size_t arcs = quick ? 9 : 14;
    const std::size_t order = quick ? 7 : 11;

    std::printf("threads: %d\n", omp_get_max_threads());
    bool ok = true;

    auto a = random_matrix(dim, rng);
    auto b = random_matrix(dim, rng);
    ok &= time_pair<gz::Matrix<gz::Rational>>(
        "matmul " + std::to_string(dim), [&] { return gz::kernels::matmul_serial(a, b); },
        [&] { return gz::kernels::matmul_parallel(a, b); });

    auto m = random_matrix(det_dim, rng);
    gz::Matrix<gz::PolyQ> pencil = m.map<gz::PolyQ>([](const gz::Rational& x) {
        return gz::PolyQ::monomial(gz::Rational(-x), 1);
    });
    for (std::size_t i = 0; i < det_dim; ++i) {
        pencil(i, i) += gz::PolyQ(gz::Rational(1));
    }
    ok &= time_pair<gz::PolyQ>(
        "det(I - tM) " + std::to_string(det_dim), [&] { return gz::kernels::bareiss_det_serial(pencil); },
        [&] { return gz::kernels::bareiss_det_parallel(pencil); });

    gz::Digraph d = random_digraph(3, arcs, rng);
    gz::Weights w;
    for (std::size_t i = 0; i < arcs; ++i) {
        w.start.push_back(small_rational(rng));
        w.end.push_back(small_rational(rng));
    }
    auto theta = gz::cycle_form(d, w);
    ok &= time_pair<std::vector<gz::Rational>>(
        "closed-path sums k<=" + std::to_string(order),
        [&] { return gz::kernels::closed_path_sums_serial(d, theta, order); },
        [&] { return gz::kernels::closed_path_sums_parallel(d, theta, order); });
    ok &= time_pair<gz::SeriesQ>(
        "prime-cycle product L=" + std::to_string(order),
        [&] { return gz::kernels::prime_cycle_product_serial(d, theta, order); },
        [&] { return gz::kernels::prime_cycle_product_parallel(d, theta, order); });

    return ok ? 0 : 1;
}
