// Copyright 2026 The xkit Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "xkit/error.h"
#include "xkit/schema.h"
#include "xkit/tolerances.h"
#include "xkit/verify.h"

namespace xkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputFailure = 1,
  kVerificationFailure = 2,
  kNumericalFailure = 3,
};

// Exit code for an error raised while running a command.
int exit_code_for(ErrorKind kind);

// Each command is a pure function of its input files and flags; only the
// diagnostics.timing field of the report varies between runs.

Report woi_command(const std::string &povm_path, const Tolerances &tol);

Report game_command(const std::string &ensemble_path, const std::string &povm_path, const Tolerances &tol);

struct OptimalGameOutput {
  Json ensemble;
  Report report;
};
OptimalGameOutput optimal_game_command(const std::string &povm_path, const Tolerances &tol);

struct SimulableOptions {
  bool witness = false;
  size_t restarts = 8;
  uint64_t seed = 1;
};
Report simulable_command(const std::string &from_path, const std::string &to_path, const SimulableOptions &options,
                         const Tolerances &tol);

struct InfoOptions {
  bool direct = false;
  size_t trials = 200;
  uint64_t seed = 1;
};
Report info_command(const std::string &povm_path, const InfoOptions &options, const Tolerances &tol);

struct VerifyOutput {
  Report report;
  bool all_passed;
};
VerifyOutput verify_command(VerifyTarget target, const VerifyConfig &config);

enum class RandomKind { Povm, Ensemble };
// `count` is the outcome count for a POVM and the state count for an ensemble.
Json random_command(RandomKind kind, size_t dim, size_t count, uint64_t seed);

// Reads XKIT_SEED when set.
std::optional<uint64_t> seed_from_environment();

// Full command-line entry point: `xkit <subcommand> [flags] [files]`. Reports
// go to `out`, a one-line human summary and error messages to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace xkit::cli
