// Copyright 2026 The wpolar Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "structure.hpp"

namespace wpolar::cli {

// Exit codes are a stable contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Prints {"graph": ..., "stats": ...} as one JSON line.
int cmd_generate(const TargetOptions& target, std::ostream& out, std::istream& in);

/// Prints the stats record as one JSON line.
int cmd_stats(const TargetOptions& target, std::ostream& out, std::istream& in);

enum class Method { kBrute, kCut, kFormula, kAll };
Method parse_method(std::string_view text);

struct WpOptions {
  TargetOptions target;
  Method method = Method::kAll;
  /// h, h1, h2, h3 for the closed benzenoid formula without a structure.
  std::vector<int> benzenoid_params;
  bool json = false;
};

struct MethodResult {
  std::string method;
  std::optional<std::int64_t> value;
  double ms = 0.0;
  /// Why value is missing.
  std::string note;
};

struct RunReport {
  nlohmann::ordered_json structure;
  std::vector<MethodResult> results;
  /// True iff every computed method returned the same value.
  bool agreement = true;
  nlohmann::ordered_json stats;

  nlohmann::ordered_json to_json() const;
};

/// Throws wpolar::Error(kFormulaUnavailable) when the requested method
/// needs family metadata the input does not have.
RunReport compute_wp(const WpOptions& options, std::istream& in);
int cmd_wp(const WpOptions& options, std::ostream& out, std::istream& in);

struct VerifyOptions {
  int count = 200;
  int max_h = 30;
  std::uint64_t seed = 7;
  /// When set, verify this graph JSON instead of the generated corpus.
  std::string graph_path;
  bool json = false;
};

struct CheckTally {
  std::string name;
  int passed = 0;
  int total = 0;
};

struct Violation {
  std::string instance;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  int benzenoids = 0;
  int tubulenes = 0;
  int graphs = 0;
  std::vector<CheckTally> checks;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

VerifyReport run_verify(const VerifyOptions& options, std::istream& in);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::istream& in);

struct BenchOptions {
  std::vector<int> sizes;
  int instances = 3;
  std::uint64_t seed = 1;
  bool json = false;
};

struct BenchRow {
  int h = 0;
  std::size_t n = 0;
  double brute_ms = 0.0;
  double cut_ms = 0.0;
  double formula_ms = 0.0;
  /// External-hexagon classification, an input to both cut and formula.
  double tally_ms = 0.0;
  bool agree = true;
};

/// Median per-call wall time of each method over `instances` random
/// benzenoids per size. Cut and formula are timed from a precomputed
/// external-hexagon tally, reported separately as tally_ms.
std::vector<BenchRow> run_bench(const BenchOptions& options);
nlohmann::ordered_json bench_json(const BenchOptions& options, const std::vector<BenchRow>& rows);
int cmd_bench(const BenchOptions& options, std::ostream& out);

/// Full command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace wpolar::cli
