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
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "wpolar/benzenoid.hpp"
#include "wpolar/graph.hpp"
#include "wpolar/tubulene.hpp"

namespace wpolar::cli {

/// Where a structure comes from, as given on the command line:
///   zigzag R H | armchair R H | random H [--seed N] | benzenoid [PATH] |
///   graph PATH, or just --hexes PATH / --graph PATH. "-" reads stdin.
struct TargetOptions {
  std::vector<std::string> positional;
  std::string hexes_path;
  std::string graph_path;
  std::uint64_t seed = 0;
};

class Structure {
 public:
  using Payload = std::variant<BenzenoidSystem, Tubulene, MolGraph>;

  Structure(Payload payload, nlohmann::ordered_json descriptor)
      : payload_(std::move(payload)), descriptor_(std::move(descriptor)) {}

  const nlohmann::ordered_json& descriptor() const { return descriptor_; }
  const MolGraph& graph() const;

  const BenzenoidSystem* benzenoid() const { return std::get_if<BenzenoidSystem>(&payload_); }
  const Tubulene* tubulene() const { return std::get_if<Tubulene>(&payload_); }
  bool is_raw_graph() const { return std::holds_alternative<MolGraph>(payload_); }

  /// Family stats record; {"n","m"} for a raw graph.
  nlohmann::ordered_json stats() const;

 private:
  Payload payload_;
  nlohmann::ordered_json descriptor_;
};

/// Throws wpolar::Error (kInvalidArgument for a malformed target, or
/// whatever the constructors raise).
Structure resolve_target(const TargetOptions& options, std::istream& in);

/// Descriptor as one line of text, e.g. "zigzag r=3 h=4".
std::string describe(const nlohmann::ordered_json& descriptor);

}  // namespace wpolar::cli
