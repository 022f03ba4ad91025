// Copyright 2026 The ibis-groups Authors
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

#include "ibis/group_file.hpp"

#include <fstream>
#include <sstream>

#include "ibis/error.hpp"
#include "json.hpp"

namespace ibis {

using ordered_json = nlohmann::ordered_json;

GroupFile parse_group_file(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "group file must be a JSON object");
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned())
    throw Error(ErrorCode::kParse, "group file needs a non-negative integer 'degree'");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw Error(ErrorCode::kParse, "group file needs a 'generators' array");
  for (const auto& [key, value] : doc.items()) {
    if (key != "degree" && key != "generators" && key != "label" && key != "order" &&
        key != "points")
      throw Error(ErrorCode::kParse, "unknown key '" + key + "' in group file");
  }
  const auto degree = doc["degree"].get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw Error(ErrorCode::kParse, "generators must be strings");
    gens.push_back(parse_permutation(g.get<std::string>(), degree));
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw Error(ErrorCode::kParse, "'label' must be a string");
    label = doc["label"].get<std::string>();
  }
  GroupFile file{GeneratedGroup(degree, std::move(gens), std::move(label)), {}, {}};
  if (doc.contains("order")) {
    if (!doc["order"].is_string())
      throw Error(ErrorCode::kParse, "'order' must be a decimal string");
    file.order = doc["order"].get<std::string>();
  }
  if (doc.contains("points")) {
    for (const auto& p : doc["points"]) {
      if (!p.is_string()) throw Error(ErrorCode::kParse, "'points' entries must be strings");
      file.point_labels.push_back(p.get<std::string>());
    }
    if (file.point_labels.size() != degree)
      throw Error(ErrorCode::kParse, "'points' must have one label per point");
  }
  return file;
}

std::string write_group_file(const GroupFile& file) {
  ordered_json doc;
  doc["degree"] = file.group.degree();
  doc["generators"] = ordered_json::array();
  for (const auto& g : file.group.generators()) doc["generators"].push_back(render_cycles(g));
  doc["label"] = file.group.label();
  if (file.order) doc["order"] = *file.order;
  if (!file.point_labels.empty()) doc["points"] = file.point_labels;
  return doc.dump(2) + "\n";
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open group file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

void save_group_file(const GroupFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << write_group_file(file);
}

}  // namespace ibis
