// Copyright 2026 The spindomain Authors
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

// Command-line front end: evolve, steady, sweep and verify.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace spindomain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Inclusive integer range, written "a..b" or "a".
struct IntRange {
    int first;
    int last;
};

std::optional<IntRange> parse_range(std::string_view text);

struct RunConfig {
    std::string subcommand;
    std::string n_a{"1"};             // integer, or a range for sweep/verify
    std::optional<int> n_b;
    double gamma{1.0};
    std::optional<double> t_end;
    std::optional<double> step;
    std::optional<int> sample_every;
    std::vector<std::string> elements;
    bool numeric{false};
    bool conjecture{false};
    bool with_imag{false};
    std::optional<double> tol;
    std::string out;                  // empty: standard output
    std::string format;               // empty: subcommand default
    bool n_a_given{false};
};

/// One verification check as reported by `verify`.
struct CheckResult {
    std::string name;
    int n_a;
    int n_b;
    double residual;
    double tolerance;
    bool passed;
};

/// Initial-state agreement, oracle equivalence at t~ in {0.1, 0.5, 1, 5} and
/// steady-state agreement for one (n_a, n_b).
std::vector<CheckResult> oracle_checks(int n_a, int n_b, double tol);

/// Long-time oracle state against the conjectured block-bottom steady state.
CheckResult conjecture_check(int n_a, int n_b, double tol);

int cmd_evolve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_steady(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses args (args[0] is the program name) and dispatches. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spindomain::cli
