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
#include <ostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "wpolar/errors.hpp"
#include "wpolar/polarity.hpp"
#include "wpolar/rng.hpp"

namespace wpolar::cli {
namespace {

class Ledger {
 public:
  explicit Ledger(VerifyReport& report) : report_(report) {}

  void record(const std::string& instance, const std::string& check, bool ok,
              const std::string& detail = {}) {
    CheckTally& tally = find(check);
    ++tally.total;
    if (ok) {
      ++tally.passed;
    } else {
      report_.violations.push_back({instance, check, detail});
    }
  }

  // Runs one check body; an Error escaping it counts as a failure of that check.
  template <typename F>
  void guarded(const std::string& instance, const std::string& check, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      record(instance, check, false, std::string(to_string(e.code())) + ": " + e.what());
    }
  }

 private:
  CheckTally& find(const std::string& name) {
    for (auto& c : report_.checks) {
      if (c.name == name) return c;
    }
    report_.checks.push_back({name, 0, 0});
    return report_.checks.back();
  }

  VerifyReport& report_;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

void check_lattice(Ledger& ledger, const std::string& id, const MolGraph& g) {
  const auto problems = lattice_invariant_violations(g);
  ledger.record(id, "lattice_invariants", problems.empty(), join(problems));
}

void check_distribution(Ledger& ledger, const std::string& id, const MolGraph& g, std::int64_t brute) {
  const auto dist = distance_distribution(g, 3);
  ledger.record(id, "distance_distribution_d3", dist[2] == brute,
                "d3=" + std::to_string(dist[2]) + " brute=" + std::to_string(brute));
}

void check_benzenoid(Ledger& ledger, const std::string& id, const BenzenoidSystem& b) {
  const MolGraph& g = b.graph();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const int h = b.hexagon_count();
  const int internal = internal_vertex_count(b);
  const auto boundary = static_cast<std::int64_t>(b.boundary().size());
  const CutStats alpha = cut_stats(b);
  const CutStats geometric = count_elementary_cuts(b);

  check_lattice(ledger, id, g);
  ledger.record(id, "vertex_count_identity", n == 4LL * h + 2 - internal,
                "n=" + std::to_string(n) + " h=" + std::to_string(h) + " n_i=" + std::to_string(internal));
  ledger.record(id, "internal_vertex_identity", internal == n - boundary,
                "n_i=" + std::to_string(internal) + " |Z|=" + std::to_string(boundary));
  ledger.record(id, "boundary_cut_identity", boundary == 2LL * alpha.total(),
                "|Z|=" + std::to_string(boundary) + " alpha_sum=" + std::to_string(alpha.total()));
  ledger.record(id, "component_count", alpha == geometric,
                "components-1=(" + std::to_string(alpha.alpha[0]) + "," + std::to_string(alpha.alpha[1]) +
                    "," + std::to_string(alpha.alpha[2]) + ") cuts=(" + std::to_string(geometric.alpha[0]) +
                    "," + std::to_string(geometric.alpha[1]) + "," + std::to_string(geometric.alpha[2]) + ")");

  ExternalHexTally tally;
  bool tally_ok = false;
  ledger.guarded(id, "external_intersections_open", [&] {
    tally = classify_external_hexagons(b);
    tally_ok = true;
    ledger.record(id, "external_intersections_open", true);
  });
  if (!tally_ok) return;

  ledger.guarded(id, "components_are_long_paths", [&] {
    const CutDecomposition dec = cut_decomposition(g, h, tally);
    bool long_paths = true;
    for (const auto& per : dec.per_direction) {
      for (const auto& c : per) long_paths = long_paths && c.shape.is_path() && c.shape.vertices >= 3;
    }
    ledger.record(id, "components_are_long_paths", long_paths);

    for (DirectionClass d : kAllDirections) {
      std::int64_t sum = 0;
      for (const auto& c : dec.per_direction[index_of(d)]) sum += c.shape.vertices - 3;
      const std::int64_t expected = n - 3LL * (alpha.alpha[index_of(d)] + 1);
      ledger.record(id, "path_sum_identity", sum == expected,
                    std::string(to_string(d)) + ": sum=" + std::to_string(sum) +
                        " expected=" + std::to_string(expected));
    }

    const std::int64_t brute = wp_bruteforce(g);
    const std::int64_t cut = dec.total();
    const std::int64_t closed = wp_benzenoid_closed(h, tally.h1, tally.h2, tally.h3);
    ledger.record(id, "brute_equals_cut", brute == cut,
                  "brute=" + std::to_string(brute) + " cut=" + std::to_string(cut));
    ledger.record(id, "cut_equals_closed", cut == closed,
                  "cut=" + std::to_string(cut) + " closed=" + std::to_string(closed));
    check_distribution(ledger, id, g, brute);
  });
}

void check_tubulene(Ledger& ledger, const std::string& id, const Tubulene& t) {
  const MolGraph& g = t.graph();
  const int r = t.r();
  const int h = t.h();
  const bool zigzag = t.kind() == Tubulene::Kind::kZigZag;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const std::int64_t expected_n = zigzag ? 2LL * h * (r + 1) : 1LL * r * (2 * h + 2);

  check_lattice(ledger, id, g);
  ledger.record(id, "tubulene_counts", n == expected_n && t.hexagon_count() == r * h,
                "n=" + std::to_string(n) + " expected=" + std::to_string(expected_n) +
                    " hexagons=" + std::to_string(t.hexagon_count()));
  const auto shortest = girth(g);
  ledger.record(id, "tubulene_girth", is_bipartite(g) && shortest && *shortest >= 6,
                "girth=" + (shortest ? std::to_string(*shortest) : std::string("none")));
  ledger.record(id, "hexagon_overlap", max_shared_edges(t) <= 1,
                "max shared edges=" + std::to_string(max_shared_edges(t)));

  ExternalHexTally tally;
  bool tally_ok = false;
  ledger.guarded(id, "external_tally", [&] {
    tally = classify_external_hexagons_tub(t);
    tally_ok = true;
    const ExternalHexTally expected = zigzag ? ExternalHexTally{} : ExternalHexTally{r, 0, 0};
    ledger.record(id, "external_tally", tally == expected,
                  "got (" + std::to_string(tally.h1) + "," + std::to_string(tally.h2) + "," +
                      std::to_string(tally.h3) + ")");
  });
  if (!tally_ok) return;

  ledger.guarded(id, "components_path_or_cycle", [&] {
    const CutDecomposition dec = cut_decomposition(g, t.hexagon_count(), tally);
    ledger.record(id, "components_path_or_cycle", true);

    const auto& c1 = dec.per_direction[index_of(DirectionClass::D1)];
    const auto& c2 = dec.per_direction[index_of(DirectionClass::D2)];
    const auto& c3 = dec.per_direction[index_of(DirectionClass::D3)];
    auto all_are = [](const std::vector<ScoredComponent>& comps, ComponentShape shape) {
      return std::all_of(comps.begin(), comps.end(), [&](const auto& c) { return c.shape == shape; });
    };
    auto paths_covering = [&](const std::vector<ScoredComponent>& comps, std::size_t count) {
      std::int64_t total = 0;
      for (const auto& c : comps) total += c.shape.vertices;
      return comps.size() == count && total == n &&
             std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.shape.is_path(); });
    };
    bool structure = false;
    if (zigzag) {
      structure = c1.size() == static_cast<std::size_t>(r + 1) && all_are(c1, ComponentShape::cycle(2 * h)) &&
                  c2.size() == static_cast<std::size_t>(h) && all_are(c2, ComponentShape::path(2 * r + 2)) &&
                  c3.size() == static_cast<std::size_t>(h) && all_are(c3, ComponentShape::path(2 * r + 2));
    } else {
      structure = c2.size() == static_cast<std::size_t>(r) && all_are(c2, ComponentShape::path(2 * h + 2)) &&
                  paths_covering(c1, static_cast<std::size_t>(r / 2)) &&
                  paths_covering(c3, static_cast<std::size_t>(r / 2));
    }
    ledger.record(id, "tubulene_component_structure", structure);

    const std::int64_t brute = wp_bruteforce(g);
    const std::int64_t cut = dec.total();
    const std::int64_t closed = wp_closed(t);
    ledger.record(id, "brute_equals_cut", brute == cut,
                  "brute=" + std::to_string(brute) + " cut=" + std::to_string(cut));
    ledger.record(id, "cut_equals_closed", cut == closed,
                  "cut=" + std::to_string(cut) + " closed=" + std::to_string(closed));
    check_distribution(ledger, id, g, brute);
  });
}

void check_raw_graph(Ledger& ledger, const std::string& id, const MolGraph& g) {
  check_lattice(ledger, id, g);
  ledger.guarded(id, "components_path_or_cycle", [&] {
    // Hexagon data is irrelevant to the component shapes.
    cut_decomposition(g, 0, {});
    ledger.record(id, "components_path_or_cycle", true);
  });
  check_distribution(ledger, id, g, wp_bruteforce(g));
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options, std::istream& in) {
  VerifyReport report;
  report.options = options;
  Ledger ledger(report);

  if (!options.graph_path.empty()) {
    TargetOptions target;
    target.graph_path = options.graph_path;
    const Structure s = resolve_target(target, in);
    check_raw_graph(ledger, "graph " + options.graph_path, s.graph());
    report.graphs = 1;
    return report;
  }

  if (options.count < 1) throw Error(ErrorCode::kInvalidArgument, "--count must be >= 1");
  if (options.max_h < 1) throw Error(ErrorCode::kInvalidArgument, "--max-h must be >= 1");

  std::mt19937_64 master(options.seed);
  for (int i = 0; i < options.count; ++i) {
    const int h = 1 + static_cast<int>(uniform_below(master, static_cast<std::uint64_t>(options.max_h)));
    const std::uint64_t seed = master();
    const std::string id = "benzenoid#" + std::to_string(i) + " h=" + std::to_string(h) +
                           " seed=" + std::to_string(seed);
    ledger.guarded(id, "construction", [&] {
      const BenzenoidSystem b = random_benzenoid(h, seed);
      check_benzenoid(ledger, id, b);
    });
    ++report.benzenoids;
  }

  for (int r = 1; r <= 6; ++r) {
    for (int h = 3; h <= 8; ++h) {
      const std::string id = "zigzag r=" + std::to_string(r) + " h=" + std::to_string(h);
      ledger.guarded(id, "construction", [&] { check_tubulene(ledger, id, build_zigzag(r, h)); });
      ++report.tubulenes;
    }
  }
  for (int r = 4; r <= 8; r += 2) {
    for (int h = 1; h <= 6; ++h) {
      const std::string id = "armchair r=" + std::to_string(r) + " h=" + std::to_string(h);
      ledger.guarded(id, "construction", [&] { check_tubulene(ledger, id, build_armchair(r, h)); });
      ++report.tubulenes;
    }
  }
  return report;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  if (graphs > 0) {
    doc["graph"] = options.graph_path;
  } else {
    doc["seed"] = options.seed;
    doc["count"] = options.count;
    doc["max_h"] = options.max_h;
  }
  doc["instances"] = {{"benzenoids", benzenoids}, {"tubulenes", tubulenes}, {"graphs", graphs}};
  nlohmann::ordered_json checks_doc = nlohmann::ordered_json::object();
  for (const auto& c : checks) checks_doc[c.name] = {{"passed", c.passed}, {"total", c.total}};
  doc["checks"] = std::move(checks_doc);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    list.push_back({{"instance", v.instance}, {"check", v.check}, {"detail", v.detail}});
  }
  doc["violations"] = std::move(list);
  doc["ok"] = ok();
  return doc;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  if (graphs > 0) {
    out << "verify graph=" << options.graph_path << '\n';
  } else {
    out << "verify seed=" << options.seed << " count=" << options.count << " max_h=" << options.max_h
        << '\n';
    out << "instances: " << benzenoids << " benzenoids, " << tubulenes << " tubulenes\n";
  }
  for (const auto& c : checks) out << "check " << c.name << ": " << c.passed << "/" << c.total << '\n';
  for (const auto& v : violations) {
    out << "violation: " << v.instance << " check=" << v.check;
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << '\n';
  }
  out << "violations: " << violations.size() << '\n';
  return out.str();
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::istream& in) {
  const VerifyReport report = run_verify(options, in);
  if (options.json) {
    out << report.to_json().dump() << '\n';
  } else {
    out << report.to_text();
  }
  return report.ok() ? kExitOk : kExitViolation;
}

}  // namespace wpolar::cli
