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

#ifndef IBIS_GROUP_FILE_HPP
#define IBIS_GROUP_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ibis/perm.hpp"

namespace ibis {

// Group file format:
//
//   {"degree": n, "generators": ["(1 2 3)", ...], "label": "..."}
//
// with two optional keys written only when present: "order" (decimal string,
// checked against the computed order by consumers that care) and "points"
// (one human-readable label per point). Keys are emitted in that fixed order
// so parse followed by write reproduces a canonical file byte for byte.
struct GroupFile {
  GeneratedGroup group;
  std::optional<std::string> order;
  std::vector<std::string> point_labels;
};

GroupFile parse_group_file(const std::string& json_text);
std::string write_group_file(const GroupFile& file);
GroupFile load_group_file(const std::string& path);
void save_group_file(const GroupFile& file, const std::string& path);

}  // namespace ibis

#endif  // IBIS_GROUP_FILE_HPP
