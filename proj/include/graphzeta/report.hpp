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

#ifndef GRAPHZETA_REPORT_HPP
#define GRAPHZETA_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphzeta/instance.hpp"
#include "graphzeta/zeta.hpp"

namespace graphzeta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

enum class OutputFormat { Text, Records };

/// Sectioned report rendered either as readable text or as
/// `section.key=value` records.
class Report {
   public:
    void section(std::string name);
    void field(std::string key, std::string value);
    void matrix(std::string key, std::vector<std::string> rows);
    void verdict(const Verdict& v);
    /// Pass/fail comparison without a power of t; detail is shown on failure.
    void check(std::string name, bool ok, std::string detail);
    /// Closing line; agree when every recorded verdict agrees.
    void overall();

    bool all_agree() const noexcept { return all_agree_; }
    std::string render(OutputFormat format) const;

   private:
    enum class Kind { Field, Matrix, Verdict, Overall };
    struct Entry {
        Kind kind;
        std::string key;
        std::vector<std::string> lines;
    };
    struct Section {
        std::string name;
        std::vector<Entry> entries;
    };

    Section& current();

    std::vector<Section> sections_;
    bool all_agree_ = true;
    std::optional<std::size_t> first_mismatch_;
};

struct CommandOptions {
    std::optional<std::size_t> order;
    OutputFormat format = OutputFormat::Text;
    double tolerance = 1e-8;
};

struct CommandResult {
    std::string output;
    int exit_code = kExitOk;
};

enum class Walk { Grover, Szegedy };

CommandResult run_verify(const Instance& instance, const CommandOptions& options);
CommandResult run_ihara(const Instance& instance, const CommandOptions& options);
CommandResult run_hashimoto(const Instance& instance, const CommandOptions& options);
CommandResult run_euler(const Instance& instance, const CommandOptions& options);
CommandResult run_exp(const Instance& instance, const CommandOptions& options);
CommandResult run_spectrum(const Instance& instance, Walk walk, const CommandOptions& options);

/// Named fixture text, or the list of names when `name` is empty.
CommandResult run_fixtures(std::string_view name);

}  // namespace graphzeta

#endif
