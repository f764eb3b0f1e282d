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

#include <gtest/gtest.h>

#include "graphzeta/error.hpp"
#include "graphzeta/instance.hpp"
#include "graphzeta/report.hpp"

namespace graphzeta {
namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

Instance fixture(std::string_view name) { return parse_instance(fixture_text(name)); }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t parse_error_line(std::string_view text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

TEST(Instance, ExampleDigraphFixture) {
    Instance inst = fixture("paper-digraph");
    EXPECT_EQ(inst.mode, InstanceMode::Digraph);
    EXPECT_EQ(inst.vertex_count, 3U);
    EXPECT_EQ(inst.arc_count(), 10U);
    EXPECT_FALSE(inst.probability.has_value());
}

TEST(Instance, ExampleGraphFixture) {
    Instance inst = fixture("paper-graph");
    EXPECT_EQ(inst.mode, InstanceMode::Graph);
    EXPECT_EQ(inst.links.size(), 5U);
    EXPECT_EQ(inst.arc_count(), 10U);
    std::vector<std::pair<VertexId, VertexId>> expected{{0, 0}, {0, 1}, {0, 1}, {1, 2}, {0, 2}};
    EXPECT_EQ(inst.links, expected);
}

TEST(Instance, TriangleFixture) {
    Instance inst = fixture("triangle");
    EXPECT_EQ(inst.vertex_count, 3U);
    EXPECT_EQ(inst.links.size(), 3U);
}

TEST(Instance, FixtureNames) {
    std::vector<std::string> expected{"paper-digraph", "paper-graph", "triangle", "c4", "k4", "p3"};
    EXPECT_EQ(fixture_names(), expected);
    try {
        fixture_text("petersen");
        FAIL() << "unknown fixture accepted";
    } catch (const ValidationError& e) {
        for (const auto& name : expected) {
            EXPECT_TRUE(contains(e.what(), name)) << e.what();
        }
    }
}

TEST(Instance, DefaultsAndComments) {
    Instance inst = parse_instance(
        "# two arcs\n"
        "mode digraph\n"
        "\n"
        "vertices 2\n"
        "arc 0 0 1   # first\n"
        "arc 1 1 0\n"
        "tau2 1 -3/6\n");
    EXPECT_EQ(inst.weights.start, (std::vector<Rational>{q(1), q(1)}));
    EXPECT_EQ(inst.weights.end, (std::vector<Rational>{q(1), q(-1, 2)}));
}

TEST(Instance, ParseErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\narc 0 0\n"), 3U);
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\narc 0 0 x\n"), 3U);
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\narc 0 0 2\n"), 3U);
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\narc 1 0 1\n"), 3U);
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\narc 0 0 1\ntau1 0 2\ntau1 0 3\n"), 5U);
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\narc 0 0 1\ntau1 0 0.5\n"), 4U);
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\narc 0 0 1\ntau1 3 2\n"), 4U);
    EXPECT_EQ(parse_error_line("mode digraph\nvertices 2\nloop 0\n"), 3U);
    EXPECT_EQ(parse_error_line("mode graph\nvertices 2\narc 0 0 1\n"), 3U);
    EXPECT_EQ(parse_error_line("mode hypergraph\n"), 1U);
    EXPECT_NE(parse_error_line("vertices 2\n"), 0U);
    EXPECT_NE(parse_error_line("mode digraph\n"), 0U);
    EXPECT_EQ(parse_error_line("mode graph\nvertices 2\nedge 0 0 1\nprob 0 1\nprob 0 1\n"), 5U);
}

TEST(Instance, RoundTripIsBitExact) {
    for (const auto& name : fixture_names()) {
        std::string text = fixture_text(name);
        Instance inst = parse_instance(text);
        EXPECT_EQ(format_instance(inst), text) << name;
        EXPECT_EQ(run_fixtures(name).output, text);
        Instance again = parse_instance(format_instance(inst));
        EXPECT_EQ(run_verify(again, {}).output, run_verify(inst, {}).output) << name;
    }
}

TEST(Instance, MissingFileIsInputError) { EXPECT_THROW(load_instance("/nonexistent/graph.txt"), ValidationError); }

TEST(Report, VerifyExampleFixtures) {
    for (const char* name : {"paper-digraph", "paper-graph"}) {
        CommandOptions options;
        options.order = 10;
        CommandResult r = run_verify(fixture(name), options);
        EXPECT_EQ(r.exit_code, kExitOk) << r.output;
        EXPECT_TRUE(r.output.ends_with("VERDICT agree\n")) << r.output;
        EXPECT_FALSE(contains(r.output, "MISMATCH"));
        EXPECT_TRUE(contains(r.output, "VERDICT exponential-euler agree"));
        EXPECT_TRUE(contains(r.output, "VERDICT hashimoto-ihara agree"));
    }
}

TEST(Report, RecordsCarryTheSameVerdicts) {
    CommandOptions options;
    options.format = OutputFormat::Records;
    CommandResult r = run_verify(fixture("paper-graph"), options);
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_TRUE(contains(r.output, "verdicts.verdict.exponential-euler=agree\n"));
    EXPECT_TRUE(contains(r.output, "instance.mode=graph\n"));
    EXPECT_TRUE(r.output.ends_with("verdict=agree\n"));
    EXPECT_FALSE(contains(r.output, "=="));
}

TEST(Report, OrderFlagControlsTruncation) {
    CommandOptions options;
    options.order = 3;
    CommandResult r = run_exp(fixture("triangle"), options);
    EXPECT_TRUE(contains(r.output, "O(t^4)")) << r.output;
}

TEST(Report, IharaExampleDigraphFactors) {
    CommandResult r = run_ihara(fixture("paper-digraph"), {});
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_TRUE(contains(r.output, "f(0,0): 1 + 2*t\n"));
    EXPECT_TRUE(contains(r.output, "f(0,1): 1 - 4*t^2\n"));
    EXPECT_TRUE(contains(r.output, "f(0,2): 1 - t^2\n"));
    EXPECT_TRUE(contains(r.output, "f(1,2): 1 - t^2\n"));
}

TEST(Report, IharaExampleGraphDegreeTerms) {
    CommandResult r = run_ihara(fixture("paper-graph"), {});
    EXPECT_EQ(r.exit_code, kExitOk);
    // a10 and a9 have ids 9 and 8.
    EXPECT_TRUE(contains(r.output, "d(0,2): tau1(9)*tau2(8) = 3/2\n")) << r.output;
}

TEST(Report, IharaEdgeless) {
    CommandResult r = run_ihara(parse_instance("mode digraph\nvertices 0\n"), {});
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_TRUE(contains(r.output, "A: []\n"));
    EXPECT_TRUE(contains(r.output, "rhs: 1\n"));
}

TEST(Report, SpectrumGroverTriangleAndCycle) {
    CommandResult tri = run_spectrum(fixture("triangle"), Walk::Grover, {});
    EXPECT_EQ(tri.exit_code, kExitOk) << tri.output;
    EXPECT_TRUE(contains(tri.output, "-0.500000000000+0.866025403784i"));
    CommandResult c4 = run_spectrum(fixture("c4"), Walk::Grover, {});
    EXPECT_EQ(c4.exit_code, kExitOk) << c4.output;
    EXPECT_TRUE(contains(c4.output, "0.000000000000+1.000000000000i"));
}

TEST(Report, SpectrumSzegedyPath) {
    CommandResult r = run_spectrum(fixture("p3"), Walk::Szegedy, {});
    EXPECT_EQ(r.exit_code, kExitOk) << r.output;
    EXPECT_TRUE(contains(r.output, "shift: 1\n"));
    EXPECT_TRUE(contains(r.output, "scale: 2\n"));
    EXPECT_TRUE(contains(r.output, "printed-constants: corrected"));
}

TEST(Report, SpectrumZeroToleranceIsMismatch) {
    CommandOptions options;
    options.tolerance = 0;
    CommandResult r = run_spectrum(fixture("p3"), Walk::Szegedy, options);
    EXPECT_EQ(r.exit_code, kExitMismatch);
    EXPECT_TRUE(contains(r.output, "MISMATCH"));
}

TEST(Report, SpectrumInputErrors) {
    EXPECT_THROW(run_spectrum(fixture("paper-digraph"), Walk::Grover, {}), ValidationError);
    Instance unweighted = fixture("triangle");
    unweighted.probability.reset();
    EXPECT_THROW(run_spectrum(unweighted, Walk::Szegedy, {}), ValidationError);
    EXPECT_THROW(run_spectrum(fixture("paper-graph"), Walk::Grover, {}), ValidationError);
    Instance bad = fixture("p3");
    (*bad.probability)[0] = q(1, 2);
    EXPECT_THROW(run_spectrum(bad, Walk::Szegedy, {}), ValidationError);
}

TEST(Report, Deterministic) {
    for (const char* name : {"paper-digraph", "paper-graph"}) {
        Instance inst = fixture(name);
        EXPECT_EQ(run_verify(inst, {}).output, run_verify(inst, {}).output);
        EXPECT_EQ(run_ihara(inst, {}).output, run_ihara(inst, {}).output);
    }
}

}  // namespace
}  // namespace graphzeta
