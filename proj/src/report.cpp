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

#include "graphzeta/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "graphzeta/eigen.hpp"
#include "graphzeta/error.hpp"
#include "graphzeta/ihara.hpp"
#include "graphzeta/quantum_walk.hpp"

namespace graphzeta {

// ---------------------------------------------------------------------------
// Report

Report::Section& Report::current() {
    if (sections_.empty()) {
        throw PreconditionError("report entry before any section");
    }
    return sections_.back();
}

void Report::section(std::string name) { sections_.push_back({std::move(name), {}}); }

void Report::field(std::string key, std::string value) {
    current().entries.push_back({Kind::Field, std::move(key), {std::move(value)}});
}

void Report::matrix(std::string key, std::vector<std::string> rows) {
    current().entries.push_back({Kind::Matrix, std::move(key), std::move(rows)});
}

void Report::verdict(const Verdict& v) {
    std::string status = "agree";
    if (!v.agree()) {
        status = "MISMATCH at t^" + std::to_string(*v.mismatch);
        all_agree_ = false;
        if (!first_mismatch_ || *v.mismatch < *first_mismatch_) {
            first_mismatch_ = v.mismatch;
        }
    }
    current().entries.push_back({Kind::Verdict, v.lhs + "-" + v.rhs, {status}});
}

void Report::check(std::string name, bool ok, std::string detail) {
    if (!ok) {
        all_agree_ = false;
    }
    std::string status = ok ? "agree" : "MISMATCH";
    if (!ok && !detail.empty()) {
        status += " (" + detail + ")";
    }
    current().entries.push_back({Kind::Verdict, std::move(name), {std::move(status)}});
}

void Report::overall() {
    std::string status = "agree";
    if (!all_agree_) {
        status = "MISMATCH";
        if (first_mismatch_) {
            status += " at t^" + std::to_string(*first_mismatch_);
        }
    }
    current().entries.push_back({Kind::Overall, "", {status}});
}

std::string Report::render(OutputFormat format) const {
    std::string out;
    bool first = true;
    for (const auto& s : sections_) {
        if (format == OutputFormat::Text) {
            out += (first ? "" : "\n") + std::string("== ") + s.name + " ==\n";
        }
        first = false;
        for (const auto& e : s.entries) {
            const std::string prefix = s.name + ".";
            switch (e.kind) {
                case Kind::Field:
                    out += format == OutputFormat::Text ? e.key + ": " + e.lines[0] + "\n"
                                                        : prefix + e.key + "=" + e.lines[0] + "\n";
                    break;
                case Kind::Matrix:
                    if (format == OutputFormat::Text) {
                        out += e.key + ":" + (e.lines.empty() ? " []" : "") + "\n";
                        for (const auto& row : e.lines) {
                            out += "  " + row + "\n";
                        }
                    } else {
                        out += prefix + e.key + ".rows=" + std::to_string(e.lines.size()) + "\n";
                        for (std::size_t i = 0; i < e.lines.size(); ++i) {
                            out += prefix + e.key + "[" + std::to_string(i) + "]=" + e.lines[i] + "\n";
                        }
                    }
                    break;
                case Kind::Verdict:
                    out += format == OutputFormat::Text ? "VERDICT " + e.key + " " + e.lines[0] + "\n"
                                                        : prefix + "verdict." + e.key + "=" + e.lines[0] + "\n";
                    break;
                case Kind::Overall:
                    out += format == OutputFormat::Text ? "VERDICT " + e.lines[0] + "\n"
                                                        : "verdict=" + e.lines[0] + "\n";
                    break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

std::string fmt(const Rational& x) { return x.get_str(); }
std::string fmt(const RatFunc& x) { return to_string(x); }
std::string fmt(const PolyQ& x) { return to_string(x); }
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

template <class E>
std::vector<std::string> rows_of(const Matrix<E>& m) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string row = "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row += (j > 0 ? ", " : "") + fmt(m(i, j));
        }
        rows.push_back(row + "]");
    }
    return rows;
}

std::string join_spectrum(std::vector<Complex> values) {
    std::string out;
    for (const auto& z : sorted_spectrum(std::move(values))) {
        out += (out.empty() ? "" : ", ") + format_complex(z);
    }
    return out.empty() ? "(none)" : out;
}

std::string join_reals(const std::vector<Real>& values) {
    std::string out;
    for (Real value : values) {
        const auto x = static_cast<double>(value);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f", std::abs(x) < 5e-13 ? 0.0 : x);
        out += (out.empty() ? "" : ", ") + std::string(buf);
    }
    return out.empty() ? "(none)" : out;
}

std::string pair_key(const char* name, VertexId u, VertexId v) {
    return std::string(name) + "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void instance_section(Report& r, const Instance& inst, const Digraph& d, std::optional<std::size_t> order) {
    r.section("instance");
    r.field("mode", inst.mode == InstanceMode::Graph ? "graph" : "digraph");
    r.field("vertices", std::to_string(d.vertex_count()));
    if (d.is_symmetric()) {
        r.field("edges", std::to_string(d.edge_count()));
    }
    r.field("arcs", std::to_string(d.arc_count()));
    if (order) {
        r.field("order", std::to_string(*order));
    }
}

bool start_is_one(const Weights& w) {
    return std::all_of(w.start.begin(), w.start.end(), [](const Rational& x) { return x == 1; });
}

CommandResult finish(Report& r, const CommandOptions& options) {
    r.overall();
    return {r.render(options.format), r.all_agree() ? kExitOk : kExitMismatch};
}

// "(term + term)/(f)" listing of one pair's degree contribution.
std::string pair_terms(const std::vector<std::string>& terms, const std::string& denominator) {
    std::string sum;
    for (const auto& t : terms) {
        sum += (sum.empty() ? "" : " + ") + t;
    }
    return denominator.empty() ? sum : "(" + sum + ")/(" + denominator + ")";
}

void ihara_digraph_sections(Report& r, const Digraph& d, const Weights& w, const PolyQ& hashimoto_poly) {
    IharaDigraph ih = ihara_digraph(d, w);
    r.section("factors");
    auto blocks = block_determinants(d);
    for (std::size_t i = 0; i < ih.pairs.size(); ++i) {
        r.field(pair_key("f", ih.pairs[i].u, ih.pairs[i].v), fmt(ih.factors[i]));
    }
    for (std::size_t i = 0; i < ih.pairs.size(); ++i) {
        r.verdict({pair_key("det-block", ih.pairs[i].u, ih.pairs[i].v), "f",
                   first_mismatch(RatFunc(blocks[i]), RatFunc(ih.factors[i]))});
    }
    r.section("matrices");
    r.matrix("A", rows_of(ih.adjacency));
    r.matrix("D", rows_of(ih.degree));
    r.matrix("X", rows_of(ih.correction));
    r.section("degree-terms");
    for (const auto& pair : ih.pairs) {
        for (auto [u, x] : {std::pair{pair.u, pair.v}, std::pair{pair.v, pair.u}}) {
            const auto& out_arcs = d.arcs_between(u, x);
            if (out_arcs.empty() || (pair.is_loop_pair() && u != pair.u)) {
                continue;
            }
            std::vector<std::string> terms;
            Rational sum = 0;
            for (ArcId a : out_arcs) {
                for (ArcId b : d.arcs_between(x, u)) {
                    terms.push_back("tau1(" + std::to_string(b) + ")*tau2(" + std::to_string(a) + ")");
                    sum += w.pair(b, a);
                }
            }
            PolyQ f = pair_factor(pair);
            r.field(pair_key("d", u, x), pair_terms(terms, fmt(f)) + " = " + fmt(RatFunc(PolyQ(sum), f)));
            if (pair.is_loop_pair()) {
                break;
            }
        }
    }
    r.section("ihara");
    r.field("rhs", fmt(ih.rhs));
    r.field("hashimoto", fmt(hashimoto_poly));
    r.verdict({"hashimoto", "ihara", first_mismatch(RatFunc(hashimoto_poly), ih.rhs)});
    if (start_is_one(w)) {
        SatoDigraph sato = sato_ihara_digraph(d, w.end);
        r.section("sato");
        r.matrix("A", rows_of(sato.adjacency));
        r.matrix("D", rows_of(sato.degree));
        r.field("rhs", fmt(sato.rhs));
        r.verdict({"hashimoto", "sato", first_mismatch(RatFunc(hashimoto_poly), sato.rhs)});
    }
}

void ihara_graph_sections(Report& r, const Digraph& g, const Weights& w, const PolyQ& hashimoto_poly) {
    IharaGraph ih = ihara_graph(g, w);
    r.section("matrices");
    r.field("excess", std::to_string(static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count())));
    r.matrix("A", rows_of(ih.adjacency));
    r.matrix("D", rows_of(ih.degree));
    r.section("degree-terms");
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            const auto& arcs = g.arcs_between(u, x);
            if (arcs.empty()) {
                continue;
            }
            std::vector<std::string> terms;
            Rational sum = 0;
            for (ArcId a : arcs) {
                ArcId back = g.partner(a);
                terms.push_back("tau1(" + std::to_string(back) + ")*tau2(" + std::to_string(a) + ")");
                sum += w.pair(back, a);
            }
            r.field(pair_key("d", u, x), pair_terms(terms, "") + " = " + fmt(sum));
        }
    }
    r.section("ihara");
    r.field("rhs", fmt(ih.rhs));
    r.field("hashimoto", fmt(hashimoto_poly));
    r.verdict({"hashimoto", "ihara", first_mismatch(RatFunc(hashimoto_poly), ih.rhs)});
    if (start_is_one(w)) {
        IharaGraph sato = sato_ihara_graph(g, w.end);
        r.section("sato");
        r.field("rhs", fmt(sato.rhs));
        r.verdict({"hashimoto", "sato", first_mismatch(RatFunc(hashimoto_poly), sato.rhs)});
    }
}

std::size_t resolve_order(const CommandOptions& options, const Digraph& d) {
    std::size_t order = options.order.value_or(default_order(d));
    if (order == 0) {
        throw ValidationError("--order must be at least 1");
    }
    return order;
}

}  // namespace

CommandResult run_verify(const Instance& instance, const CommandOptions& options) {
    Digraph d = instance.digraph();
    const std::size_t order = resolve_order(options, d);
    ZetaReport z = verify_expressions(d, instance.weights, order);
    Report r;
    instance_section(r, instance, d, order);
    r.section("exponential");
    r.field("series", to_string(z.exponential));
    r.field("closed-paths-enumerated-through", std::to_string(z.enumerated_through));
    r.section("euler");
    r.field("method", to_string(z.euler_method));
    r.field("series", to_string(z.euler));
    r.section("hashimoto");
    r.field("det", fmt(z.hashimoto));
    r.field("inverse", to_string(z.hashimoto_series));
    r.section("ihara");
    r.field("rhs", z.ihara ? fmt(*z.ihara) : "(not applicable)");
    r.section("verdicts");
    for (const auto& v : z.verdicts) {
        r.verdict(v);
    }
    return finish(r, options);
}

CommandResult run_ihara(const Instance& instance, const CommandOptions& options) {
    Digraph d = instance.digraph();
    Report r;
    instance_section(r, instance, d, std::nullopt);
    PolyQ h = hashimoto(d, instance.weights);
    if (d.is_symmetric()) {
        ihara_graph_sections(r, d, instance.weights, h);
    } else {
        ihara_digraph_sections(r, d, instance.weights, h);
    }
    return finish(r, options);
}

CommandResult run_hashimoto(const Instance& instance, const CommandOptions& options) {
    Digraph d = instance.digraph();
    Report r;
    instance_section(r, instance, d, std::nullopt);
    r.section("hashimoto");
    r.matrix("M", rows_of(edge_matrix(d, instance.weights)));
    PolyQ h = hashimoto(d, instance.weights);
    r.field("det", fmt(h));
    r.verdict({"elimination", "char-poly",
               first_mismatch(RatFunc(h), RatFunc(hashimoto_via_char_poly(d, instance.weights)))});
    return finish(r, options);
}

CommandResult run_euler(const Instance& instance, const CommandOptions& options) {
    Digraph d = instance.digraph();
    const std::size_t order = resolve_order(options, d);
    Report r;
    instance_section(r, instance, d, order);
    EulerResult e = euler_truncated(d, instance.weights, order);
    r.section("euler");
    r.field("method", to_string(e.method));
    r.field("series", to_string(e.series));
    return finish(r, options);
}

CommandResult run_exp(const Instance& instance, const CommandOptions& options) {
    Digraph d = instance.digraph();
    const std::size_t order = resolve_order(options, d);
    Report r;
    instance_section(r, instance, d, order);
    auto sums = closed_path_sums_by_trace(d, instance.weights, order);
    r.section("exponential");
    for (std::size_t k = 0; k < sums.size(); ++k) {
        r.field("N_" + std::to_string(k + 1), fmt(sums[k]));
    }
    r.field("series", to_string(exponential_from_sums(sums, order)));
    return finish(r, options);
}

CommandResult run_spectrum(const Instance& instance, Walk walk, const CommandOptions& options) {
    if (instance.mode != InstanceMode::Graph) {
        throw ValidationError("spectrum needs a graph-mode instance");
    }
    Digraph g = instance.digraph();
    Report r;
    instance_section(r, instance, g, std::nullopt);
    const double tol = options.tolerance;
    if (walk == Walk::Grover) {
        auto direct = eigenvalues_numeric(grover_transition(g));
        auto via_zeta = grover_spectrum_via_zeta(g);
        double deviation = multiset_deviation(via_zeta, direct);
        double residual = charpoly_residual(grover_charpoly_via_zeta(g), poly_from_roots(direct));
        double defect = unitarity_defect(grover_transition(g));
        r.section("grover");
        r.field("discriminant-spectrum", join_reals(grover_discriminant_spectrum(g)));
        r.field("direct", join_spectrum(direct));
        r.field("via-zeta", join_spectrum(via_zeta));
        r.field("deviation", fmt(deviation));
        r.field("charpoly-residual", fmt(residual));
        r.field("unitarity-defect", fmt(defect));
        r.check("direct-zeta", deviation <= tol, "deviation " + fmt(deviation));
        r.check("direct-charpoly", residual <= tol, "residual " + fmt(residual));
        r.check("unitarity", defect <= 1e-9, "defect " + fmt(defect));
        return finish(r, options);
    }
    if (!instance.probability) {
        throw ValidationError("the szegedy walk needs prob lines");
    }
    const auto& p = *instance.probability;
    validate_probability(g, p);
    double defect = unitarity_defect(szegedy_transition(g, p));
    r.section("szegedy");
    r.field("discriminant-spectrum", join_reals(symmetric_eigenvalues(szegedy_discriminant(g, p))));
    r.field("unitarity-defect", fmt(defect));
    r.check("unitarity", defect <= 1e-9, "defect " + fmt(defect));
    QuadraticLiftFit fit;
    try {
        fit = szegedy_spectrum_via_discriminant(g, p, tol);
    } catch (const IdentityMismatch& e) {
        r.field("calibration", e.what());
        r.check("calibration", false, "no unique quadratic family");
        return finish(r, options);
    }
    for (const auto& c : fit.candidates) {
        r.field("residual(shift=" + std::to_string(c.shift) + ",scale=" + std::to_string(c.scale) + ")",
                fmt(c.residual));
    }
    r.field("shift", std::to_string(fit.shift));
    r.field("scale", std::to_string(fit.scale));
    r.field("factor", "lambda^2 + " + std::to_string(fit.shift) + " - " + std::to_string(fit.scale) + "*mu*lambda");
    bool printed = fit.shift == kPrintedShift && fit.scale == kPrintedScale;
    r.field("printed-constants",
            std::string(printed ? "confirmed" : "corrected") + " (printed shift " + std::to_string(kPrintedShift) +
                ", scale " + std::to_string(kPrintedScale) + ")");
    r.field("direct", join_spectrum(fit.direct));
    r.field("via-discriminant", join_spectrum(fit.spectrum));
    r.field("deviation", fmt(fit.deviation));
    r.check("direct-discriminant", fit.deviation <= tol, "deviation " + fmt(fit.deviation));
    if (p == uniform_probability(g)) {
        double grover = multiset_deviation(fit.spectrum, grover_spectrum_via_zeta(g));
        r.field("grover-deviation", fmt(grover));
        r.check("uniform-grover", grover <= tol, "deviation " + fmt(grover));
    }
    return finish(r, options);
}

CommandResult run_fixtures(std::string_view name) {
    if (name.empty()) {
        std::string out;
        for (const auto& n : fixture_names()) {
            out += n + "\n";
        }
        return {out, kExitOk};
    }
    return {fixture_text(name), kExitOk};
}

}  // namespace graphzeta
