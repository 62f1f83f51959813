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

#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace rainbow {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::int64_t int_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Color color_value(const json& v) {
  if (v.is_number_unsigned()) return v.get<Color>();
  if (v.is_number_integer()) {
    throw ValidationError("color ids must be non-negative, got " + v.dump());
  }
  throw ValidationError("color ids must be integers, got " + v.dump());
}

void expect_tag(const json& doc, const char* tag) {
  const json& format = field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != tag) {
    throw ValidationError(std::string("expected format \"") + tag + "\"");
  }
}

Params params_from(const json& doc) {
  const auto r = int_field(doc, "r");
  const auto n = int_field(doc, "n");
  if (r > (1 << 20) || n > (1 << 20)) throw ValidationError("r or n out of range");
  return Params(static_cast<int>(r), static_cast<int>(n));
}

json edge_json(const Edge& e) { return json(std::vector<Vertex>(e.begin(), e.end())); }

json path_json(const CandidatePath& path) {
  return {{"s", path.s},
          {"a", path.a},
          {"b", path.b},
          {"end", path.end},
          {"first_color", path.first_color},
          {"third_color", path.third_color},
          {"symmetric", path.symmetric},
          {"augmenting", path.augmenting}};
}

json paths_json(const std::vector<CandidatePath>& paths) {
  json out = json::array();
  for (const CandidatePath& p : paths) out.push_back(path_json(p));
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text, const std::filesystem::path& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace

json coloring_to_json(const Coloring& coloring) {
  const Params& params = coloring.params();
  return {{"format", "rainbow-coloring"},
          {"version", 1},
          {"r", params.r()},
          {"n", params.n()},
          {"color_count", coloring.color_count()},
          {"colors", std::vector<Color>(coloring.colors().begin(), coloring.colors().end())}};
}

Coloring coloring_from_json(const json& doc, bool normalize) {
  expect_tag(doc, "rainbow-coloring");
  if (int_field(doc, "version") != 1) throw ValidationError("unsupported coloring version");
  const Params params = params_from(doc);
  const json& list = field(doc, "colors");
  if (!list.is_array()) throw ValidationError("'colors' must be an array");
  if (list.size() != params.edge_count()) {
    throw ValidationError("'colors' has " + std::to_string(list.size()) + " entries, expected " +
                          std::to_string(params.edge_count()));
  }
  std::vector<Color> colors;
  colors.reserve(list.size());
  for (const json& v : list) colors.push_back(color_value(v));
  Coloring coloring(params, std::move(colors));
  if (doc.contains("color_count")) {
    const auto declared = int_field(doc, "color_count");
    if (declared < 0 || static_cast<std::size_t>(declared) != coloring.color_count()) {
      throw ValidationError("color_count says " + std::to_string(declared) + " but " +
                            std::to_string(coloring.color_count()) + " distinct ids are used");
    }
  }
  return normalize ? coloring.normalized() : coloring;
}

std::string coloring_to_csv(const Coloring& coloring) {
  std::ostringstream out;
  out << "r,n\n" << coloring.params().r() << ',' << coloring.params().n() << '\n';
  for (Color c : coloring.colors()) out << c << '\n';
  return out.str();
}

Coloring coloring_from_csv(std::string_view text, bool normalize) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next() || line != "r,n") throw ValidationError("CSV coloring must start with 'r,n'");
  if (!next()) throw ValidationError("CSV coloring lacks the r,n line");
  int r = 0, n = 0;
  {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ValidationError("bad r,n line: " + line);
    const char* begin = line.data();
    auto [p1, e1] = std::from_chars(begin, begin + comma, r);
    auto [p2, e2] = std::from_chars(begin + comma + 1, begin + line.size(), n);
    if (e1 != std::errc{} || e2 != std::errc{} || p1 != begin + comma ||
        p2 != begin + line.size()) {
      throw ValidationError("bad r,n line: " + line);
    }
  }
  const Params params(r, n);
  std::vector<Color> colors;
  while (next()) {
    Color c = 0;
    auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), c);
    if (ec != std::errc{} || p != line.data() + line.size()) {
      throw ValidationError("bad color id: " + line);
    }
    colors.push_back(c);
  }
  Coloring coloring(params, std::move(colors));
  return normalize ? coloring.normalized() : coloring;
}

json certificate_to_json(const K3rCertificate& cert) {
  json out = {{"mode", to_string(cert.mode)}};
  if (cert.m1) out["m1"] = edge_json(*cert.m1);
  if (cert.m2) out["m2"] = edge_json(*cert.m2);
  json tried = json::array();
  for (const auto& [a, b] : cert.tried) tried.push_back({edge_json(a), edge_json(b)});
  out["tried"] = std::move(tried);
  json factor = json::array();
  for (const Edge& e : cert.factor) factor.push_back(edge_json(e));
  out["factor"] = std::move(factor);
  return out;
}

FactorFile make_factor_file(const OneFactor& factor, const Coloring& coloring,
                            const SolveReport* report) {
  FactorFile file;
  file.params = factor.params;
  file.edges = factor.edges;
  for (const Edge& e : factor.edges) file.colors.push_back(coloring.color(e));
  if (report) {
    file.solved_by = to_string(report->solved_by);
    if (report->certificate) file.certificate = certificate_to_json(*report->certificate);
  }
  return file;
}

json factor_to_json(const FactorFile& factor) {
  json edges = json::array();
  for (const Edge& e : factor.edges) edges.push_back(edge_json(e));
  json out = {{"format", "rainbow-factor"},
              {"version", 1},
              {"r", factor.params.r()},
              {"n", factor.params.n()},
              {"edges", std::move(edges)},
              {"colors", factor.colors}};
  if (factor.solved_by) out["solved_by"] = *factor.solved_by;
  if (factor.certificate) out["certificate"] = *factor.certificate;
  return out;
}

FactorFile factor_from_json(const json& doc) {
  expect_tag(doc, "rainbow-factor");
  if (doc.contains("version") && int_field(doc, "version") != 1) {
    throw ValidationError("unsupported factor version");
  }
  FactorFile file;
  file.params = params_from(doc);
  const json& edges = field(doc, "edges");
  if (!edges.is_array()) throw ValidationError("'edges' must be an array");
  for (const json& e : edges) {
    if (!e.is_array()) throw ValidationError("each edge must be an array of vertices");
    std::vector<Vertex> vs;
    for (const json& v : e) {
      if (!v.is_number_integer()) throw ValidationError("vertices must be integers");
      const auto x = v.get<std::int64_t>();
      if (x < 0 || x >= file.params.vertex_count()) {
        throw ValidationError("vertex " + std::to_string(x) + " out of range");
      }
      vs.push_back(static_cast<Vertex>(x));
    }
    Edge edge(std::move(vs));
    edge.validate(file.params);
    file.edges.push_back(std::move(edge));
  }
  if (doc.contains("colors")) {
    const json& colors = doc.at("colors");
    if (!colors.is_array() || colors.size() != file.edges.size()) {
      throw ValidationError("'colors' must parallel 'edges'");
    }
    for (const json& c : colors) file.colors.push_back(color_value(c));
  }
  if (doc.contains("solved_by")) file.solved_by = doc.at("solved_by").get<std::string>();
  if (doc.contains("certificate")) file.certificate = doc.at("certificate");
  return file;
}

json trace_to_json(const AugmentationTrace& trace) {
  json rotations = json::array();
  for (const RotationInventory& rot : trace.rotations) {
    rotations.push_back({{"color", rot.color},
                         {"e_t", {trace.t, rot.z}},
                         {"e_i", {rot.z, rot.t_i}},
                         {"e_i_color", rot.e_i_color},
                         {"t_i", rot.t_i},
                         {"free_first_edges", rot.free_first_edges},
                         {"trivial_extension", rot.trivial_extension},
                         {"candidate_count", rot.candidates.size()},
                         {"symmetric_count", rot.symmetric_count},
                         {"augmenting_count", rot.augmenting_count},
                         {"candidates", paths_json(rot.candidates)}});
  }
  const CountingCheck check = check_counting(trace);
  return {{"n", trace.n},
          {"k", trace.k},
          {"s", trace.s},
          {"t", trace.t},
          {"base_color", trace.base_color},
          {"C1", trace.c1},
          {"C2", trace.c2},
          {"C1_t", trace.c1_t},
          {"C2_t", trace.c2_t},
          {"p", trace.p},
          {"q", trace.q},
          {"excluded", trace.excluded},
          {"L", trace.rotation_colors},
          {"candidate_count", trace.candidates.size()},
          {"symmetric_count", trace.symmetric_count},
          {"augmenting_count", trace.augmenting_count},
          {"candidates", paths_json(trace.candidates)},
          {"rotations", std::move(rotations)},
          {"x", trace.x},
          {"y", trace.y},
          {"inequality_holds", trace.inequality_holds},
          {"verdict", to_string(check.verdict)},
          {"violations", check.violations}};
}

Coloring read_coloring(const std::filesystem::path& path, bool normalize) {
  const std::string text = slurp(path);
  if (path.extension() == ".csv") return coloring_from_csv(text, normalize);
  return coloring_from_json(parse_json(text, path), normalize);
}

void write_coloring(const std::filesystem::path& path, const Coloring& coloring) {
  if (path.extension() == ".csv") {
    write_text(path, coloring_to_csv(coloring));
  } else {
    write_text(path, coloring_to_json(coloring).dump() + "\n");
  }
}

FactorFile read_factor(const std::filesystem::path& path) {
  return factor_from_json(parse_json(slurp(path), path));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
  if (!out) throw ValidationError("failed writing " + path.string());
}

}  // namespace rainbow
