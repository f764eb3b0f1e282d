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

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "graphzeta/error.hpp"
#include "graphzeta/report.hpp"

namespace gz = graphzeta;

int main(int argc, char** argv) {
    CLI::App app{"graphzeta: weighted graph zeta functions and quantum walk spectra"};
    app.require_subcommand(1);

    std::string path;
    std::size_t order = 0;
    std::string format = "text";
    std::string walk = "grover";
    double tolerance = 1e-8;
    std::string fixture;

    const std::map<std::string, gz::OutputFormat> formats{{"text", gz::OutputFormat::Text},
                                                          {"records", gz::OutputFormat::Records}};
    auto add_common = [&](CLI::App* cmd, bool with_order) {
        cmd->add_option("instance", path, "instance file")->required();
        cmd->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
        if (with_order) {
            cmd->add_option("--order", order, "series truncation order (default max(10, arc count))")
                ->check(CLI::PositiveNumber);
        }
    };

    auto* verify = app.add_subcommand("verify", "compare all four expressions");
    add_common(verify, true);
    auto* ihara = app.add_subcommand("ihara", "vertex-sized determinant expression");
    add_common(ihara, false);
    auto* hashimoto = app.add_subcommand("hashimoto", "det(I - tM)");
    add_common(hashimoto, false);
    auto* euler = app.add_subcommand("euler", "product over prime cycles, truncated");
    add_common(euler, true);
    auto* exp = app.add_subcommand("exp", "exponential of closed-path sums, truncated");
    add_common(exp, true);
    auto* spectrum = app.add_subcommand("spectrum", "quantum walk spectrum, direct and via the discriminant");
    add_common(spectrum, false);
    spectrum->add_option("--walk", walk, "grover or szegedy")->check(CLI::IsMember({"grover", "szegedy"}));
    spectrum->add_option("--tolerance", tolerance, "spectrum and coefficient tolerance")
        ->check(CLI::NonNegativeNumber);
    auto* fixtures = app.add_subcommand("fixtures", "print a built-in instance, or list them");
    fixtures->add_option("name", fixture, "fixture name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return gz::kExitInputError;
    }

    gz::CommandOptions options;
    options.format = formats.at(format);
    options.tolerance = tolerance;
    if (order > 0) {
        options.order = order;
    }

    try {
        gz::CommandResult result;
        if (fixtures->parsed()) {
            result = gz::run_fixtures(fixture);
        } else {
            gz::Instance instance = gz::load_instance(path);
            if (verify->parsed()) {
                result = gz::run_verify(instance, options);
            } else if (ihara->parsed()) {
                result = gz::run_ihara(instance, options);
            } else if (hashimoto->parsed()) {
                result = gz::run_hashimoto(instance, options);
            } else if (euler->parsed()) {
                result = gz::run_euler(instance, options);
            } else if (exp->parsed()) {
                result = gz::run_exp(instance, options);
            } else {
                result = gz::run_spectrum(instance, walk == "szegedy" ? gz::Walk::Szegedy : gz::Walk::Grover,
                                          options);
            }
        }
        std::fwrite(result.output.data(), 1, result.output.size(), stdout);
        return result.exit_code;
    } catch (const gz::IdentityMismatch& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return gz::kExitMismatch;
    } catch (const gz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gz::kExitInputError;
    }
}
