// Copyright 2026 The Rainbow Factor Authors.
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

// File formats.
//
// Coloring, JSON:
//   {"format": "rainbow-coloring", "version": 1, "r": 2, "n": 3,
//    "color_count": 5, "colors": [c_0, c_1, ...]}
// colors[i] is the color of the edge of colex rank i; ids are non-negative
// integers, not necessarily contiguous; color_count = number of distinct ids.
//
// Coloring, CSV (files ending in .csv):
//   r,n
//   2,3
//   c_0
//   c_1
//   ...
//
// Factor, JSON:
//   {"format": "rainbow-factor", "version": 1, "r": 2, "n": 3,
//    "edges": [[0,1],[2,3],[4,5]], "colors": [..],
//    "solved_by": "...", "certificate": {...}}
// colors is parallel to edges; solved_by and certificate are optional.
//
// Trace: one JSON object per analyzed (s, t) pair, one per line.

#ifndef RAINBOW_IO_HPP_
#define RAINBOW_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rainbow/core.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/trace.hpp"

namespace rainbow {

// All readers throw ValidationError on malformed content.

nlohmann::json coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const nlohmann::json& doc, bool normalize = false);

std::string coloring_to_csv(const Coloring& coloring);
Coloring coloring_from_csv(std::string_view text, bool normalize = false);

struct FactorFile {
  Params params{2, 1};
  std::vector<Edge> edges;
  std::vector<Color> colors;
  std::optional<std::string> solved_by;
  std::optional<nlohmann::json> certificate;

  friend bool operator==(const FactorFile&, const FactorFile&) = default;
};

FactorFile make_factor_file(const OneFactor& factor, const Coloring& coloring,
                            const SolveReport* report = nullptr);
nlohmann::json factor_to_json(const FactorFile& factor);
FactorFile factor_from_json(const nlohmann::json& doc);

nlohmann::json certificate_to_json(const K3rCertificate& cert);
nlohmann::json trace_to_json(const AugmentationTrace& trace);

// Path-based helpers. The coloring format follows the extension (.csv or
// JSON otherwise). Unreadable files and bad content throw ValidationError.
Coloring read_coloring(const std::filesystem::path& path, bool normalize = false);
void write_coloring(const std::filesystem::path& path, const Coloring& coloring);
FactorFile read_factor(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace rainbow

#endif  // RAINBOW_IO_HPP_
