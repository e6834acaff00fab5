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
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "commands.hpp"
#include "wpolar/errors.hpp"
#include "wpolar/polarity.hpp"

namespace wpolar::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Sample {
  std::int64_t value = 0;
  double ms = 0.0;
};

// Mean per-call time, repeating until at least 2 ms have elapsed so that
// sub-microsecond calls still get a meaningful reading.
template <typename F>
Sample measure(F&& fn) {
  constexpr std::chrono::duration<double, std::milli> kBudget{2.0};
  Sample s;
  int reps = 0;
  const auto start = Clock::now();
  std::chrono::duration<double, std::milli> elapsed{0};
  do {
    s.value = fn();
    ++reps;
    elapsed = Clock::now() - start;
  } while (elapsed < kBudget);
  s.ms = elapsed.count() / reps;
  return s;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.sizes.empty()) throw Error(ErrorCode::kInvalidArgument, "--sizes must list at least one h");
  if (options.instances < 1) throw Error(ErrorCode::kInvalidArgument, "--instances must be >= 1");

  std::mt19937_64 seeds(options.seed);
  std::vector<BenchRow> rows;
  for (int h : options.sizes) {
    if (h < 1) throw Error(ErrorCode::kInvalidArgument, "bench sizes must be >= 1");
    std::vector<double> brute, cut, formula, tally, n;
    BenchRow row;
    row.h = h;
    for (int i = 0; i < options.instances; ++i) {
      const BenzenoidSystem b = random_benzenoid(h, seeds());
      // The cut method and the closed formula both take (h, h1, h2, h3) as
      // input; the external-hexagon tally is timed on its own.
      ExternalHexTally ext;
      const Sample st = measure([&] {
        ext = classify_external_hexagons(b);
        return std::int64_t{ext.h1};
      });
      const int hexagons = b.hexagon_count();
      const Sample sb = measure([&] { return wp_bruteforce(b.graph()); });
      const Sample sc = measure([&] { return wp_cut_method(b.graph(), hexagons, ext); });
      const Sample sf = measure([&] { return wp_benzenoid_closed(hexagons, ext.h1, ext.h2, ext.h3); });
      tally.push_back(st.ms);
      brute.push_back(sb.ms);
      cut.push_back(sc.ms);
      formula.push_back(sf.ms);
      n.push_back(static_cast<double>(b.graph().vertex_count()));
      row.agree = row.agree && sb.value == sc.value && sc.value == sf.value;
    }
    row.n = static_cast<std::size_t>(median(n));
    row.brute_ms = median(brute);
    row.cut_ms = median(cut);
    row.formula_ms = median(formula);
    row.tally_ms = median(tally);
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json bench_json(const BenchOptions& options, const std::vector<BenchRow>& rows) {
  nlohmann::ordered_json doc;
  doc["seed"] = options.seed;
  doc["instances"] = options.instances;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json entry;
    entry["h"] = r.h;
    entry["n"] = r.n;
    entry["brute_ms"] = r.brute_ms;
    entry["cut_ms"] = r.cut_ms;
    entry["formula_ms"] = r.formula_ms;
    entry["tally_ms"] = r.tally_ms;
    entry["agree"] = r.agree;
    list.push_back(std::move(entry));
  }
  doc["rows"] = std::move(list);
  return doc;
}

int cmd_bench(const BenchOptions& options, std::ostream& out) {
  const auto rows = run_bench(options);
  if (options.json) {
    out << bench_json(options, rows).dump() << '\n';
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%8s %8s %12s %12s %12s %12s %6s\n", "h", "n", "brute_ms", "cut_ms",
                  "formula_ms", "tally_ms", "agree");
    out << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%8d %8zu %12.4f %12.4f %12.4f %12.4f %6s\n", r.h, r.n,
                    r.brute_ms, r.cut_ms, r.formula_ms, r.tally_ms, r.agree ? "yes" : "no");
      out << line;
    }
  }
  const bool agree = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agree; });
  return agree ? kExitOk : kExitViolation;
}

}  // namespace wpolar::cli
