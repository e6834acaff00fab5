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

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "wpolar/errors.hpp"

namespace wpolar::cli {
namespace {

void add_target_options(CLI::App* cmd, TargetOptions& target) {
  cmd->add_option("target", target.positional,
                  "zigzag R H | armchair R H | random H | benzenoid [PATH] | graph PATH");
  cmd->add_option("--hexes", target.hexes_path, "hexagon-set text file ('-' for stdin)");
  cmd->add_option("--graph", target.graph_path, "graph JSON file ('-' for stdin)");
  cmd->add_option("--seed", target.seed, "seed for 'random H'");
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "--sizes: '" + item + "' is not an integer");
    }
  }
  return out;
}

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
  nlohmann::ordered_json doc;
  doc["error"] = code;
  doc["message"] = message;
  err << doc.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Wiener polarity index of benzenoid systems and nanotubes", "wpolar"};
  app.require_subcommand(1);

  TargetOptions gen_target;
  bool gen_json = false;
  auto* generate = app.add_subcommand("generate", "emit graph and stats JSON for a structure");
  add_target_options(generate, gen_target);
  generate->add_flag("--json", gen_json, "JSON output (always on for generate)");

  TargetOptions stats_target;
  bool stats_json_flag = false;
  auto* stats = app.add_subcommand("stats", "emit the stats record for a structure");
  add_target_options(stats, stats_target);
  stats->add_flag("--json", stats_json_flag, "JSON output (always on for stats)");

  WpOptions wp_options;
  std::string method = "all";
  auto* wp = app.add_subcommand("wp", "compute the Wiener polarity index");
  add_target_options(wp, wp_options.target);
  wp->add_option("--method", method, "brute | cut | formula | all")
      ->check(CLI::IsMember({"brute", "cut", "formula", "all"}));
  wp->add_option("--benzenoid-params", wp_options.benzenoid_params, "H H1 H2 H3 for the closed formula")
      ->expected(4);
  wp->add_flag("--json", wp_options.json, "JSON output");

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "cross-check all methods and structural identities");
  verify->add_option("--count", verify_options.count, "number of random benzenoids");
  verify->add_option("--max-h", verify_options.max_h, "largest hexagon count");
  verify->add_option("--seed", verify_options.seed, "corpus seed");
  verify->add_option("--graph", verify_options.graph_path, "verify a graph JSON file instead ('-' for stdin)");
  verify->add_flag("--json", verify_options.json, "JSON output");

  BenchOptions bench_options;
  std::string sizes = "50,200,800";
  auto* bench = app.add_subcommand("bench", "time brute force, cut method and closed formula");
  bench->add_option("--sizes", sizes, "comma-separated hexagon counts");
  bench->add_option("--instances", bench_options.instances, "random instances per size");
  bench->add_option("--seed", bench_options.seed, "corpus seed");
  bench->add_flag("--json", bench_options.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    print_error(err, "UsageError", e.what());
    return kExitInputError;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen_target, out, in);
    if (stats->parsed()) return cmd_stats(stats_target, out, in);
    if (wp->parsed()) {
      wp_options.method = parse_method(method);
      return cmd_wp(wp_options, out, in);
    }
    if (verify->parsed()) return cmd_verify(verify_options, out, in);
    if (bench->parsed()) {
      bench_options.sizes = parse_sizes(sizes);
      return cmd_bench(bench_options, out);
    }
  } catch (const Error& e) {
    print_error(err, to_string(e.code()), e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    print_error(err, "InternalError", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wpolar::cli
