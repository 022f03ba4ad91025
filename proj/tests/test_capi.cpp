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


#include <doctest.h>

#include <json.hpp>
#include <string>

#include "ibis/ibis.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  ibis_string_free(s);
  return out;
}

ibis_group* from_json(const char* text) {
  ibis_group* g = nullptr;
  REQUIRE(ibis_group_from_json(text, &g) == IBIS_OK);
  return g;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ibis_version()).size() > 0);
  CHECK(std::string(ibis_status_name(IBIS_OK)) == "ok");
  CHECK(std::string(ibis_status_name(IBIS_E_NOT_IBIS)) == "not IBIS");
  CHECK(std::string(ibis_status_name(static_cast<ibis_status>(99))) == "unknown status");
}

TEST_CASE("group round trip and info") {
  const char* text = R"j({"degree":5,"generators":["(1 2 3 4 5)","(1 2)"],"label":"sym(5)"})j";
  ibis_group* g = from_json(text);
  CHECK(ibis_group_degree(g) == 5);
  char* out = nullptr;
  REQUIRE(ibis_group_order(g, &out) == IBIS_OK);
  CHECK(take(out) == "120");
  REQUIRE(ibis_group_to_json(g, &out) == IBIS_OK);
  CHECK(json::parse(take(out))["degree"] == 5);
  REQUIRE(ibis_group_info(g, &out) == IBIS_OK);
  const auto info = json::parse(take(out));
  CHECK(info["order"] == "120");
  CHECK(info["primitive"] == true);
  CHECK(info["orbits"].size() == 1);
  ibis_group_free(g);

  g = from_json(R"j({"degree":4,"generators":["(1 2)"]})j");
  REQUIRE(ibis_group_info(g, &out) == IBIS_OK);
  const auto i2 = json::parse(take(out));
  CHECK(i2["transitive"] == false);
  CHECK(i2["orbits"] == json::parse("[[1,2],[3],[4]]"));
  ibis_group_free(g);
}

TEST_CASE("errors carry a status and a message") {
  ibis_group* g = nullptr;
  CHECK(ibis_group_from_json("{", &g) == IBIS_E_PARSE);
  CHECK(std::string(ibis_last_error()).find("malformed") != std::string::npos);
  CHECK(g == nullptr);
  CHECK(ibis_group_from_json(R"j({"degree":2,"generators":["(1 3)"]})j", &g) == IBIS_E_PARSE);
  CHECK(ibis_group_load("/nonexistent/group.json", &g) == IBIS_E_IO);
  CHECK(ibis_group_from_json(nullptr, &g) == IBIS_E_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(ibis_group_order(nullptr, &out) == IBIS_E_INVALID_ARGUMENT);
  CHECK(ibis_group_degree(nullptr) == 0);
  ibis_group_free(nullptr);
  CHECK(ibis_verify_paper("no-such-case", 1000, 1, &out, nullptr) == IBIS_E_UNKNOWN_CASE);
  CHECK(ibis_atlas_build("nope", nullptr, &g) == IBIS_E_UNKNOWN_CASE);
  CHECK(ibis_atlas_build("sym", "[1]", &g) == IBIS_E_PARSE);
}

TEST_CASE("ibis verdicts") {
  ibis_group* g = nullptr;
  REQUIRE(ibis_atlas_build("subsets", R"j({"parent":"sym","n":8,"k":3})j", &g) == IBIS_OK);
  char* out = nullptr;
  REQUIRE(ibis_check(g, nullptr, &out) == IBIS_OK);
  const auto v = json::parse(take(out));
  CHECK(v["is_ibis"] == false);
  CHECK(v["min_size"] == 4);
  CHECK(v["max_size"] == 7);
  CHECK(v["status"] == "exact");
  CHECK(v["min_witness"]["labels"][0].get<std::string>().front() == '{');
  CHECK(v["min_witness"]["orders"].back() == "1");

  ibis_check_options o;
  ibis_check_options_init(&o);
  o.budget = 2;
  REQUIRE(ibis_check(g, &o, &out) == IBIS_OK);
  const auto b = json::parse(take(out));
  CHECK(b["is_ibis"].is_null());
  CHECK(b["status"] == "budget-exhausted");

  o.budget = 100000000;
  o.mode = IBIS_MODE_FAST;
  REQUIRE(ibis_check(g, &o, &out) == IBIS_OK);
  CHECK(json::parse(take(out))["is_ibis"] == false);
  o.mode = static_cast<ibis_mode>(7);
  CHECK(ibis_check(g, &o, &out) == IBIS_E_INVALID_ARGUMENT);
  ibis_group_free(g);

  g = from_json(R"j({"degree":3,"generators":[]})j");
  REQUIRE(ibis_check(g, nullptr, &out) == IBIS_OK);
  const auto t = json::parse(take(out));
  CHECK(t["is_ibis"] == true);
  CHECK(t["min_size"] == 0);
  ibis_group_free(g);
}

TEST_CASE("matroid") {
  ibis_group* g = nullptr;
  REQUIRE(ibis_atlas_build("sl-vectors", R"j({"n":4})j", &g) == IBIS_OK);
  char* out = nullptr;
  REQUIRE(ibis_matroid(g, 40, &out) == IBIS_OK);
  const auto m = json::parse(take(out));
  CHECK(m["rank"] == 4);
  CHECK(m["ordered_base_count"] == "20160");
  CHECK(m["exchange_verified"] == true);
  CHECK(ibis_matroid(g, 10, &out) == IBIS_E_INVALID_ARGUMENT);
  ibis_group_free(g);
  REQUIRE(ibis_atlas_build("subsets", R"j({"n":5,"k":2})j", &g) == IBIS_OK);
  CHECK(ibis_matroid(g, 40, &out) == IBIS_E_NOT_IBIS);
  ibis_group_free(g);
}

TEST_CASE("atlas and verification listings") {
  char* out = nullptr;
  REQUIRE(ibis_atlas_list(&out) == IBIS_OK);
  CHECK(json::parse(take(out)).size() >= 15);
  REQUIRE(ibis_verify_list(&out) == IBIS_OK);
  CHECK(json::parse(take(out)).size() >= 30);
  size_t failed = 99;
  REQUIRE(ibis_verify_paper("thm-item-2", 100000000, 1, &out, &failed) == IBIS_OK);
  CHECK(failed == 0);
  CHECK(json::parse(take(out))["summary"]["pass"] == 1);
}

TEST_CASE("built groups keep labels and declared order") {
  ibis_group* g = nullptr;
  REQUIRE(ibis_atlas_build("projective", R"j({"q":9,"group":"M10"})j", &g) == IBIS_OK);
  char* out = nullptr;
  REQUIRE(ibis_group_to_json(g, &out) == IBIS_OK);
  const auto text = take(out);
  const auto j = json::parse(text);
  CHECK(j["order"] == "720");
  CHECK(j["points"][0] == "inf");
  ibis_group* back = nullptr;
  REQUIRE(ibis_group_from_json(text.c_str(), &back) == IBIS_OK);
  REQUIRE(ibis_group_info(back, &out) == IBIS_OK);
  CHECK(json::parse(take(out))["declared_order_matches"] == true);
  ibis_group_free(back);
  ibis_group_free(g);
}
