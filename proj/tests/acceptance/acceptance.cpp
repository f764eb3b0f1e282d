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

// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "graphzeta/eigen.hpp"
#include "graphzeta/error.hpp"
#include "graphzeta/identities.hpp"
#include "graphzeta/ihara.hpp"
#include "graphzeta/instance.hpp"
#include "graphzeta/quantum_walk.hpp"
#include "graphzeta/report.hpp"
#include "graphzeta/zeta.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gz = graphzeta;
namespace gzt = graphzeta::testing;

namespace {

constexpr std::size_t kRandomInstances = 200;
constexpr std::size_t kSeriesOrder = 10;
constexpr std::size_t kEnumeratedLength = 8;
constexpr double kSpectrumTolerance = 1e-8;
constexpr double kUnitarityTolerance = 1e-9;
constexpr std::size_t kCalibrationInstances = 60;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string failure;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            failure = what;
        }
    }
};

struct Case {
    std::string label;
    gz::Digraph digraph;
    gz::Weights weights;
};

gz::Instance fixture(std::string_view name) { return gz::parse_instance(gz::fixture_text(name)); }

std::vector<Case> digraph_cases(gzt::Rng& rng) {
    std::vector<Case> out;
    gz::Instance paper = fixture("paper-digraph");
    out.push_back({"paper-digraph", paper.digraph(), paper.weights});
    for (std::size_t i = 0; i < kRandomInstances; ++i) {
        gz::Digraph d = gzt::random_multidigraph(rng, 4, 10);
        out.push_back({"random digraph " + gz::describe(d), d, gzt::random_weights(d.arc_count(), rng)});
    }
    return out;
}

std::vector<Case> graph_cases(gzt::Rng& rng) {
    std::vector<Case> out;
    gz::Instance paper = fixture("paper-graph");
    out.push_back({"paper-graph", paper.digraph(), paper.weights});
    for (std::size_t i = 0; i < kRandomInstances; ++i) {
        gz::Digraph g = gzt::random_multigraph(rng, 4, 6);
        out.push_back({"random graph " + gz::describe(g), g, gzt::random_weights(g.arc_count(), rng)});
    }
    return out;
}

std::vector<Case> fixture_cases() {
    std::vector<Case> out;
    for (const auto& name : gz::fixture_names()) {
        gz::Instance inst = fixture(name);
        out.push_back({name, inst.digraph(), inst.weights});
    }
    return out;
}

std::size_t count_multiloop(const std::vector<Case>& cases) {
    std::size_t n = 0;
    for (const auto& c : cases) {
        std::size_t loops = 0;
        for (const auto& a : c.digraph.arcs()) {
            loops += a.is_loop();
        }
        n += loops >= 2;
    }
    return n;
}

Outcome digraph_identity(const std::vector<Case>& cases) {
    Outcome o;
    for (const auto& c : cases) {
        gz::RatFunc rhs = gz::ihara_digraph(c.digraph, c.weights).rhs;
        gz::PolyQ oracle = gzt::reciprocal_charpoly_by_interpolation(gzt::edge_matrix_oracle(c.digraph, c.weights));
        o.require(rhs == gz::RatFunc(oracle), c.label + ": vertex determinant differs from det(I - tM)");
        o.require(gz::hashimoto(c.digraph, c.weights) == oracle, c.label + ": det(I - tM) routes differ");
    }
    o.detail = std::to_string(cases.size()) + " digraphs (" + std::to_string(count_multiloop(cases)) +
               " with multiple loops), exact";
    return o;
}

Outcome graph_identity(const std::vector<Case>& cases) {
    Outcome o;
    std::size_t negative_excess = 0;
    for (const auto& c : cases) {
        gz::RatFunc rhs = gz::ihara_graph(c.digraph, c.weights).rhs;
        gz::PolyQ oracle = gzt::reciprocal_charpoly_by_interpolation(gzt::edge_matrix_oracle(c.digraph, c.weights));
        o.require(rhs == gz::RatFunc(oracle), c.label + ": graph determinant differs from det(I - tM)");
        negative_excess += c.digraph.edge_count() < c.digraph.vertex_count();
    }
    o.detail = std::to_string(cases.size()) + " graphs (" + std::to_string(negative_excess) +
               " with |E| < |V|), exact";
    return o;
}

Outcome four_expressions(const std::vector<Case>& cases) {
    Outcome o;
    for (const auto& c : cases) {
        gz::SeriesQ z = gz::exponential_truncated(c.digraph, c.weights, kSeriesOrder);
        gz::SeriesQ e = gz::euler_truncated(c.digraph, c.weights, kSeriesOrder).series;
        gz::SeriesQ h = gz::inverse(gz::SeriesQ::from_poly(gz::hashimoto(c.digraph, c.weights), kSeriesOrder));
        o.require(z == e, c.label + ": exponential and Euler series differ");
        o.require(z == h, c.label + ": exponential series and 1/det(I - tM) differ");
        auto by_paths = gz::closed_path_sums_by_enumeration(c.digraph, c.weights, kEnumeratedLength);
        auto by_trace = gz::closed_path_sums_by_trace(c.digraph, c.weights, kEnumeratedLength);
        o.require(by_paths == by_trace, c.label + ": closed-path sums differ from traces");
    }
    o.detail = std::to_string(cases.size()) + " instances to t^" + std::to_string(kSeriesOrder) +
               ", closed paths enumerated through length " + std::to_string(kEnumeratedLength);
    return o;
}

Outcome sato_specialization(const std::vector<Case>& fixtures) {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& c : fixtures) {
        for (const auto& end : {std::vector<gz::Rational>(c.digraph.arc_count(), gz::Rational(1)), c.weights.end}) {
            gz::Weights w{std::vector<gz::Rational>(end.size(), gz::Rational(1)), end};
            gz::RatFunc h(gz::hashimoto(c.digraph, w));
            if (c.digraph.is_symmetric()) {
                gz::IharaGraph sato = gz::sato_ihara_graph(c.digraph, end);
                gz::IharaGraph general = gz::ihara_graph(c.digraph, w);
                o.require(sato.adjacency == general.adjacency && sato.degree == general.degree,
                          c.label + ": graph matrices differ at start = 1");
                o.require(sato.rhs == general.rhs && sato.rhs == h, c.label + ": graph determinant differs");
            } else {
                gz::SatoDigraph sato = gz::sato_ihara_digraph(c.digraph, end);
                gz::IharaDigraph general = gz::ihara_digraph(c.digraph, w);
                o.require(sato.factors == general.factors, c.label + ": pair factors differ");
                o.require(sato.rhs == general.rhs && sato.rhs == h, c.label + ": digraph determinant differs");
                gz::SatoPencils pencils = gz::sato_pencils(c.digraph, end);
                o.require(pencils.general == pencils.sato, c.label + ": A - tD + t^2 X differs from A - tD");
            }
            ++checks;
        }
    }
    o.detail = std::to_string(checks) + " fixture weightings, exact";
    return o;
}

Outcome block_lemmas(gzt::Rng& rng) {
    Outcome o;
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (long k = 1; k <= 7; ++k) {
            o.require(gz::allones_inverse_check(n, gz::Rational(k)),
                      "all-ones inverse fails for n=" + std::to_string(n) + " k=" + std::to_string(k));
            ++checks;
        }
    }
    for (std::size_t k = 1; k <= 5; ++k) {
        for (std::size_t l = 1; l <= 5; ++l) {
            for (int rep = 0; rep < 2; ++rep) {
                auto m1 = gzt::random_matrix(k, l, rng);
                auto m2 = gzt::random_matrix(l, k, rng);
                gz::WoodburyCheck c = gz::block_woodbury_check(m1, m2);
                std::string shape = std::to_string(k) + "x" + std::to_string(l);
                o.require(c.inverse_form, "block inverse fails for " + shape);
                o.require(c.determinants_agree(), "block determinants differ for " + shape);
                o.require(gz::det_swap_check(m1, m2), "det(I - tXY) != det(I - tYX) for " + shape);
                ++checks;
            }
        }
    }
    o.detail = std::to_string(checks) + " exact checks";
    return o;
}

Outcome grover_exhaustive(double& worst_unitarity, std::size_t& matrices) {
    Outcome o;
    std::size_t graphs = 0;
    double worst = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const auto& edges : gzt::connected_graphs_up_to_isomorphism(n)) {
            gz::Digraph g = gz::Digraph::symmetric(n, edges);
            gz::Matrix<gz::Complex> u = gz::grover_transition(g);
            auto direct = gz::eigenvalues_numeric(u);
            double deviation = gz::multiset_deviation(gz::grover_spectrum_via_zeta(g), direct);
            double residual = gz::charpoly_residual(gz::grover_charpoly_via_zeta(g), gz::poly_from_roots(direct));
            o.require(deviation <= kSpectrumTolerance, gz::describe(g) + ": spectrum deviation " +
                                                           std::to_string(deviation));
            o.require(residual <= kSpectrumTolerance, gz::describe(g) + ": charpoly residual " +
                                                          std::to_string(residual));
            worst = std::max(worst, deviation);
            worst_unitarity = std::max(worst_unitarity, gz::unitarity_defect(u));
            ++matrices;
            ++graphs;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu connected graphs on 2..6 vertices, max deviation %.2e", graphs, worst);
    o.detail = buf;
    o.require(graphs == 142, "expected 142 connected graphs, generated " + std::to_string(graphs));
    return o;
}

Outcome szegedy_calibration(gzt::Rng& rng, double& worst_unitarity, std::size_t& matrices) {
    Outcome o;
    std::uniform_int_distribution<std::size_t> size(2, 6);
    int shift = 0;
    int scale = 0;
    double worst = 0;
    std::vector<std::pair<gz::Digraph, gz::TransitionProbability>> cases;
    gz::Instance p3 = fixture("p3");
    cases.emplace_back(p3.digraph(), *p3.probability);
    while (cases.size() < kCalibrationInstances) {
        gz::Digraph g = gzt::random_connected_simple_graph(rng, size(rng));
        cases.emplace_back(g, gzt::random_probability(g, rng));
    }
    for (const auto& [g, p] : cases) {
        gz::QuadraticLiftFit fit;
        try {
            fit = gz::szegedy_spectrum_via_discriminant(g, p);
        } catch (const gz::IdentityMismatch& e) {
            o.require(false, gz::describe(g) + ": " + e.what());
            continue;
        }
        if (shift == 0) {
            shift = fit.shift;
            scale = fit.scale;
        }
        o.require(fit.shift == shift && fit.scale == scale, gz::describe(g) + ": calibration differs");
        o.require(fit.deviation <= kSpectrumTolerance, gz::describe(g) + ": spectrum deviation " +
                                                           std::to_string(fit.deviation));
        worst = std::max(worst, fit.deviation);
        worst_unitarity = std::max(worst_unitarity, gz::unitarity_defect(gz::szegedy_transition(g, p)));
        ++matrices;

        auto uniform = gz::uniform_probability(g);
        auto exact = gz::szegedy_transition_exact(g, uniform);
        o.require(exact && *exact == gz::grover_transition_exact(g), gz::describe(g) + ": uniform walk is not Grover");
        gz::QuadraticLiftFit grover = gz::szegedy_spectrum_via_discriminant(g, uniform);
        o.require(grover.shift == shift && grover.scale == scale, gz::describe(g) + ": uniform calibration differs");
        o.require(gz::multiset_deviation(grover.spectrum, gz::grover_spectrum_via_zeta(g)) <= kSpectrumTolerance,
                  gz::describe(g) + ": uniform spectrum differs from Grover");
    }
    bool printed = shift == gz::kPrintedShift && scale == gz::kPrintedScale;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu (graph, p) instances, factor lambda^2 + %d - %d mu lambda, max deviation %.2e, printed "
                  "constants (%d, %d) %s",
                  cases.size(), shift, scale, worst, gz::kPrintedShift, gz::kPrintedScale,
                  printed ? "confirmed" : "corrected");
    o.detail = buf;
    return o;
}

Outcome unitarity(gzt::Rng& rng, double worst, std::size_t matrices) {
    Outcome o;
    for (const char* name : {"triangle", "c4", "k4", "p3"}) {
        gz::Instance inst = fixture(name);
        gz::Digraph g = inst.digraph();
        worst = std::max(worst, gz::unitarity_defect(gz::grover_transition(g)));
        auto p = inst.probability ? *inst.probability : gz::uniform_probability(g);
        worst = std::max(worst, gz::unitarity_defect(gz::szegedy_transition(g, p)));
        matrices += 2;
    }
    // Up to 64 arcs: complete graphs through K_8 (56 arcs), random weights.
    for (std::size_t n = 3; n <= 8; ++n) {
        std::vector<gz::Edge> edges;
        for (gz::VertexId u = 0; u < n; ++u) {
            for (gz::VertexId v = u + 1; v < n; ++v) {
                edges.push_back({u, v});
            }
        }
        gz::Digraph g = gz::Digraph::symmetric(n, edges);
        worst = std::max(worst, gz::unitarity_defect(gz::grover_transition(g)));
        worst = std::max(worst, gz::unitarity_defect(gz::szegedy_transition(g, gzt::random_probability(g, rng))));
        matrices += 2;
    }
    o.require(worst <= kUnitarityTolerance, "max |U U* - I| = " + std::to_string(worst));
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu matrices, max |U U* - I| %.2e", matrices, worst);
    o.detail = buf;
    return o;
}

struct Run {
    int status = -1;
    std::string output;
};

Run run_cli(const std::string& args) {
    std::string command = std::string("\"") + GRAPHZETA_CLI + "\" " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.output.append(buf.data(), n);
    }
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Outcome cli_contract() {
    Outcome o;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("graphzeta-acceptance-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir);
    auto write = [&](const std::string& file, const std::string& text) {
        std::ofstream(dir / file) << text;
        return "\"" + (dir / file).string() + "\"";
    };
    std::size_t runs = 0;
    for (const char* name : {"paper-digraph", "paper-graph"}) {
        std::string path = write(std::string(name) + ".txt", gz::fixture_text(name));
        for (const char* verb : {"verify", "ihara"}) {
            std::vector<Run> reports;
            for (int i = 0; i < 3; ++i) {
                reports.push_back(run_cli(std::string(verb) + " " + path));
                ++runs;
            }
            for (const auto& r : reports) {
                o.require(r.status == gz::kExitOk, std::string(verb) + " " + name + " exited " +
                                                       std::to_string(r.status));
                o.require(r.output == reports.front().output,
                          std::string(verb) + " " + name + " output changed between runs");
            }
            o.require(reports.front().output.ends_with("VERDICT agree\n"),
                      std::string(verb) + " " + name + " does not end in agreement");
        }
    }
    Run fixture_run = run_cli("fixtures paper-digraph");
    o.require(fixture_run.status == gz::kExitOk && fixture_run.output == gz::fixture_text("paper-digraph"),
              "fixtures paper-digraph is not bit-exact");

    std::string p3 = write("p3.txt", gz::fixture_text("p3"));
    Run mismatch = run_cli("spectrum --walk szegedy --tolerance 0 " + p3);
    o.require(mismatch.status == gz::kExitMismatch, "mismatch exited " + std::to_string(mismatch.status));

    std::string bad = write("bad.txt", "mode digraph\nvertices 2\narc 0 0\n");
    Run malformed = run_cli("verify " + bad);
    o.require(malformed.status == gz::kExitInputError, "malformed arc line exited " + std::to_string(malformed.status));
    o.require(malformed.output.find("line 3") != std::string::npos, "parse error does not cite line 3");

    Run unknown = run_cli("fixtures petersen");
    o.require(unknown.status == gz::kExitInputError && unknown.output.find("paper-graph") != std::string::npos,
              "unknown fixture does not list the available ones");

    fs::remove_all(dir);
    o.detail = std::to_string(runs) + " report runs byte-identical, exit codes 0/1/2";
    return o;
}

}  // namespace

int main() {
    gzt::Rng rng(20260101);
    bool all = true;
    auto report = [&all](const char* name, const std::function<Outcome()>& check) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failure = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %-28s %s%s%s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                    o.pass ? "" : " :: ", o.failure.c_str(), seconds);
        std::fflush(stdout);
        all = all && o.pass;
    };

    std::vector<Case> digraphs = digraph_cases(rng);
    std::vector<Case> graphs = graph_cases(rng);
    std::vector<Case> fixtures = fixture_cases();
    double worst_unitarity = 0;
    std::size_t matrices = 0;

    report("digraph-ihara-identity", [&] { return digraph_identity(digraphs); });
    report("graph-ihara-identity", [&] { return graph_identity(graphs); });
    report("four-expressions", [&] {
        std::vector<Case> all_cases = fixtures;
        all_cases.insert(all_cases.end(), digraphs.begin(), digraphs.end());
        all_cases.insert(all_cases.end(), graphs.begin(), graphs.end());
        return four_expressions(all_cases);
    });
    report("sato-specialization", [&] { return sato_specialization(fixtures); });
    report("block-lemmas", [&] { return block_lemmas(rng); });
    report("grover-spectrum", [&] { return grover_exhaustive(worst_unitarity, matrices); });
    report("szegedy-calibration", [&] { return szegedy_calibration(rng, worst_unitarity, matrices); });
    report("unitarity", [&] { return unitarity(rng, worst_unitarity, matrices); });
    report("cli-determinism", [] { return cli_contract(); });
    return all ? 0 : 1;
}
