// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Batch experiment runner behind the `realqm` executable.
 *
 * Subcommands: larmor, mzi, entropy-scan, audit, ghosts, local-phase-demo,
 * fixtures. Records go to stdout (or --output) as CSV or JSON; diagnostics
 * and convention notes go to stderr. Output is a pure function of the flags.
 *
 * Exit codes: 0 success, 2 invalid flags or malformed input, 3 I/O failure.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace realqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

enum class Subcommand { Larmor, Mzi, EntropyScan, Audit, Ghosts, LocalPhaseDemo, Fixtures };
enum class Format { Csv, Json, Text };

struct ExperimentConfig {
    Subcommand subcommand = Subcommand::Larmor;
    Format format = Format::Csv;
    std::optional<std::filesystem::path> output;

    // larmor
    double omega = 1.0;
    double tmax = 6.283185307179586;
    int steps = 100;

    // mzi
    double phase = 0.0;
    std::optional<int> grid;

    // entropy-scan
    int alpha_steps = 9;
    int beta_steps = 9;

    // audit, local-phase-demo
    std::optional<std::filesystem::path> matrix;
    std::uint64_t seed = 42;
    int trials = 200;

    // ghosts
    int cutoff = 8;
    double lambda = 0.7;

    // fixtures
    std::filesystem::path dir;
};

/// Parses argv-style arguments (without the program name) and runs the
/// selected subcommand.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Runs an already-validated configuration.
int run(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Writes the canonical matrix fixtures into @p dir (created if missing)
/// and returns the file names written, in a fixed order. Throws
/// std::filesystem::filesystem_error or std::ios_base::failure on I/O
/// failure.
std::vector<std::string> emit_matrix_fixtures(const std::filesystem::path &dir);

} // namespace realqm::cli
