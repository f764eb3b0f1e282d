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

#include "graphzeta/instance.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "graphzeta/error.hpp"

namespace graphzeta {

namespace {

std::size_t parse_index(std::size_t line, const std::string& token, const char* what) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError(line, std::string("malformed ") + what + " '" + token + "'");
    }
    return value;
}

struct WeightLine {
    std::size_t line;
    std::size_t arc;
    Rational value;
};

std::vector<Rational> resolve_weights(const std::vector<WeightLine>& lines, const char* keyword,
                                      std::size_t arc_count, const Rational& fallback) {
    std::vector<Rational> values(arc_count, fallback);
    std::map<std::size_t, std::size_t> seen;
    for (const auto& w : lines) {
        if (w.arc >= arc_count) {
            throw ParseError(w.line, std::string(keyword) + " names arc " + std::to_string(w.arc) +
                                         " but the instance has " + std::to_string(arc_count) + " arcs");
        }
        auto [it, fresh] = seen.emplace(w.arc, w.line);
        if (!fresh) {
            throw ParseError(w.line, std::string("duplicate ") + keyword + " for arc " + std::to_string(w.arc) +
                                         " (first given on line " + std::to_string(it->second) + ")");
        }
        values[w.arc] = w.value;
    }
    return values;
}

}  // namespace

Digraph Instance::digraph() const {
    if (mode == InstanceMode::Digraph) {
        return Digraph::build(vertex_count, links);
    }
    std::vector<Edge> edges;
    edges.reserve(links.size());
    for (const auto& [u, v] : links) {
        edges.push_back({u, v});
    }
    return Digraph::symmetric(vertex_count, edges);
}

Instance parse_instance(std::string_view text) {
    Instance inst;
    std::optional<InstanceMode> mode;
    std::optional<std::size_t> vertices;
    std::vector<WeightLine> start_lines;
    std::vector<WeightLine> end_lines;
    std::vector<WeightLine> prob_lines;

    std::istringstream input{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(input, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream fields(raw);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        const std::string& key = tok[0];
        auto expect_args = [&](std::size_t n) {
            if (tok.size() != n + 1) {
                throw ParseError(line_no, "'" + key + "' takes " + std::to_string(n) + " argument" +
                                              (n == 1 ? "" : "s") + ", found " + std::to_string(tok.size() - 1));
            }
        };
        if (key == "mode") {
            expect_args(1);
            if (mode) {
                throw ParseError(line_no, "mode given twice");
            }
            if (tok[1] == "digraph") {
                mode = InstanceMode::Digraph;
            } else if (tok[1] == "graph") {
                mode = InstanceMode::Graph;
            } else {
                throw ParseError(line_no, "mode must be 'digraph' or 'graph', found '" + tok[1] + "'");
            }
        } else if (key == "vertices") {
            expect_args(1);
            if (vertices) {
                throw ParseError(line_no, "vertex count given twice");
            }
            vertices = parse_index(line_no, tok[1], "vertex count");
        } else if (key == "arc" || key == "edge") {
            expect_args(3);
            if (!mode || !vertices) {
                throw ParseError(line_no, "'" + key + "' before the mode and vertices lines");
            }
            const char* wanted = *mode == InstanceMode::Digraph ? "arc" : "edge";
            if (key != wanted) {
                throw ParseError(line_no, "'" + key + "' line in " +
                                              (*mode == InstanceMode::Digraph ? "digraph" : "graph") + " mode");
            }
            std::size_t id = parse_index(line_no, tok[1], "id");
            if (id != inst.links.size()) {
                throw ParseError(line_no, key + " ids must run 0, 1, 2, ... in order; expected " +
                                              std::to_string(inst.links.size()) + ", found " + std::to_string(id));
            }
            std::size_t u = parse_index(line_no, tok[2], "vertex");
            std::size_t v = parse_index(line_no, tok[3], "vertex");
            for (std::size_t x : {u, v}) {
                if (x >= *vertices) {
                    throw ParseError(line_no, key + " " + std::to_string(id) + " endpoint " + std::to_string(x) +
                                                  " is out of range for " + std::to_string(*vertices) +
                                                  " vertices");
                }
            }
            inst.links.emplace_back(u, v);
        } else if (key == "tau1" || key == "tau2" || key == "prob") {
            expect_args(2);
            WeightLine w{line_no, parse_index(line_no, tok[1], "arc id"), Rational(0)};
            try {
                w.value = parse_rational(tok[2]);
            } catch (const ValidationError& e) {
                throw ParseError(line_no, e.what());
            }
            (key == "tau1" ? start_lines : key == "tau2" ? end_lines : prob_lines).push_back(w);
        } else {
            throw ParseError(line_no, "unknown directive '" + key + "'");
        }
    }
    if (!mode) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'mode' line");
    }
    if (!vertices) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'vertices' line");
    }
    inst.mode = *mode;
    inst.vertex_count = *vertices;
    const std::size_t arcs = inst.arc_count();
    inst.weights.start = resolve_weights(start_lines, "tau1", arcs, Rational(1));
    inst.weights.end = resolve_weights(end_lines, "tau2", arcs, Rational(1));
    if (!prob_lines.empty()) {
        inst.probability = resolve_weights(prob_lines, "prob", arcs, Rational(0));
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read instance file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string format_instance(const Instance& instance) {
    std::ostringstream out;
    const bool graph = instance.mode == InstanceMode::Graph;
    out << "mode " << (graph ? "graph" : "digraph") << "\n";
    out << "vertices " << instance.vertex_count << "\n";
    for (std::size_t i = 0; i < instance.links.size(); ++i) {
        out << (graph ? "edge " : "arc ") << i << " " << instance.links[i].first << " " << instance.links[i].second
            << "\n";
    }
    auto emit = [&out](const char* key, const std::vector<Rational>& values) {
        for (std::size_t a = 0; a < values.size(); ++a) {
            if (values[a] != 1) {
                out << key << " " << a << " " << values[a].get_str() << "\n";
            }
        }
    };
    emit("tau1", instance.weights.start);
    emit("tau2", instance.weights.end);
    if (instance.probability) {
        for (std::size_t a = 0; a < instance.probability->size(); ++a) {
            out << "prob " << a << " " << (*instance.probability)[a].get_str() << "\n";
        }
    }
    return out.str();
}

namespace {

// start(a) = (a + 1) / 2, end(a) = 3 / (a + 2).
Weights staggered_weights(std::size_t arcs) {
    Weights w;
    for (std::size_t a = 0; a < arcs; ++a) {
        Rational s(static_cast<unsigned long>(a + 1), 2UL);
        Rational e(3UL, static_cast<unsigned long>(a + 2));
        s.canonicalize();
        e.canonicalize();
        w.start.push_back(s);
        w.end.push_back(e);
    }
    return w;
}

Instance graph_instance(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
    Instance inst;
    inst.mode = InstanceMode::Graph;
    inst.vertex_count = n;
    inst.links = std::move(edges);
    inst.weights = Weights::uniform(inst.arc_count());
    inst.probability = uniform_probability(inst.digraph());
    return inst;
}

Instance build_fixture(std::string_view name) {
    if (name == "paper-digraph") {
        Instance inst;
        inst.mode = InstanceMode::Digraph;
        inst.vertex_count = 3;
        inst.links = {{0, 0}, {0, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}};
        inst.weights = staggered_weights(inst.arc_count());
        return inst;
    }
    if (name == "paper-graph") {
        Instance inst;
        inst.mode = InstanceMode::Graph;
        inst.vertex_count = 3;
        inst.links = {{0, 0}, {0, 1}, {0, 1}, {1, 2}, {0, 2}};
        inst.weights = staggered_weights(inst.arc_count());
        return inst;
    }
    if (name == "triangle") {
        return graph_instance(3, {{0, 1}, {1, 2}, {0, 2}});
    }
    if (name == "c4") {
        return graph_instance(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    }
    if (name == "k4") {
        return graph_instance(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "p3") {
        Instance inst = graph_instance(3, {{0, 1}, {1, 2}});
        // Arcs: 0 = (0,1), 1 = (1,0), 2 = (1,2), 3 = (2,1).
        inst.probability = TransitionProbability{Rational(1), Rational(1, 3), Rational(2, 3), Rational(1)};
        return inst;
    }
    std::string known;
    for (const auto& n : fixture_names()) {
        known += (known.empty() ? "" : ", ") + n;
    }
    throw ValidationError("unknown fixture '" + std::string(name) + "'; available: " + known);
}

}  // namespace

std::vector<std::string> fixture_names() { return {"paper-digraph", "paper-graph", "triangle", "c4", "k4", "p3"}; }

std::string fixture_text(std::string_view name) { return format_instance(build_fixture(name)); }

}  // namespace graphzeta
