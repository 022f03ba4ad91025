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

// Command-line front end. Talks to the library only through ibis.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ibis/ibis.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitIbis = 0;
constexpr int kExitNotIbis = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

struct GroupDeleter {
  void operator()(ibis_group* g) const { ibis_group_free(g); }
};
using GroupPtr = std::unique_ptr<ibis_group, GroupDeleter>;

struct Failure {
  ibis_status status;
};

void check(ibis_status s) {
  if (s != IBIS_OK) throw Failure{s};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  ibis_string_free(s);
  return out;
}

GroupPtr load(const std::string& path) {
  ibis_group* g = nullptr;
  check(ibis_group_load(path.c_str(), &g));
  return GroupPtr(g);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{IBIS_E_IO};
  }
  out << text << "\n";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("IBIS_BUDGET"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring IBIS_BUDGET=" << env << "\n";
  }
  ibis_check_options o;
  ibis_check_options_init(&o);
  return o.budget;
}

int cmd_info(const std::string& path) {
  auto g = load(path);
  char* out = nullptr;
  check(ibis_group_info(g.get(), &out));
  std::cout << take(out) << "\n";
  return 0;
}

int cmd_ibis(const std::string& path, const std::string& mode, std::uint64_t budget,
             std::uint64_t seed, std::size_t samples) {
  auto g = load(path);
  ibis_check_options o;
  ibis_check_options_init(&o);
  o.mode = mode == "fast" ? IBIS_MODE_FAST : IBIS_MODE_EXACT;
  o.budget = budget;
  o.seed = seed;
  o.samples = samples;
  char* out = nullptr;
  check(ibis_check(g.get(), &o, &out));
  const auto text = take(out);
  std::cout << text << "\n";
  const auto j = ordered_json::parse(text);
  if (j["is_ibis"].is_null()) return kExitInconclusive;
  return j["is_ibis"].get<bool>() ? kExitIbis : kExitNotIbis;
}

int cmd_matroid(const std::string& path, const std::string& out_path, std::size_t bound) {
  auto g = load(path);
  char* out = nullptr;
  const auto s = ibis_matroid(g.get(), bound, &out);
  if (s == IBIS_E_NOT_IBIS) {
    std::cerr << "not IBIS: " << ibis_last_error() << "\n";
    return kExitNotIbis;
  }
  check(s);
  const auto text = take(out);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(out_path, text);
    const auto j = ordered_json::parse(text);
    std::cout << "rank " << j["rank"] << ", " << j["base_count"] << " bases, written to " << out_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& ids, bool all, bool list, const std::string& report,
               std::uint64_t budget, std::uint64_t seed) {
  if (list) {
    char* out = nullptr;
    check(ibis_verify_list(&out));
    for (const auto& c : ordered_json::parse(take(out)))
      std::cout << c["id"].get<std::string>() << "  " << c["title"].get<std::string>() << "\n";
    return 0;
  }
  if (!all && ids.empty()) {
    std::cerr << "error: give --case ID or --all\n";
    return kExitError;
  }
  // One report per run; several --case flags are merged.
  ordered_json merged;
  std::size_t failed = 0;
  auto run = [&](const char* id) {
    char* out = nullptr;
    std::size_t f = 0;
    check(ibis_verify_paper(id, budget, seed, &out, &f));
    failed += f;
    auto j = ordered_json::parse(take(out));
    if (merged.is_null()) {
      merged = std::move(j);
      return;
    }
    for (auto& c : j["cases"]) merged["cases"].push_back(c);
    for (const char* k : {"pass", "fail", "conflict"})
      merged["summary"][k] = merged["summary"][k].get<std::size_t>() + j["summary"][k].get<std::size_t>();
  };
  if (all) run(nullptr);
  else for (const auto& id : ids) run(id.c_str());

  for (const auto& c : merged["cases"]) {
    const auto outcome = c["outcome"].get<std::string>();
    std::printf("[%-8s] %-24s %7.2fs  %s\n", outcome.c_str(), c["id"].get<std::string>().c_str(),
                c["seconds"].get<double>(), c["title"].get<std::string>().c_str());
    if (c.contains("error")) std::printf("    error: %s\n", c["error"].get<std::string>().c_str());
    for (const auto& k : c["checks"]) {
      const auto o = k["outcome"].get<std::string>();
      if (o == "pass") continue;
      std::printf("    %s: %s: expected %s, got %s [%s: %s]\n", o.c_str(), k["name"].get<std::string>().c_str(),
                  k["expected"].get<std::string>().c_str(), k["actual"].get<std::string>().c_str(),
                  k["provenance"].get<std::string>().c_str(), k["citation"].get<std::string>().c_str());
      if (k.contains("note")) std::printf("      note: %s\n", k["note"].get<std::string>().c_str());
    }
  }
  const auto& s = merged["summary"];
  std::printf("%zu passed, %zu failed, %zu documented conflicts\n", s["pass"].get<std::size_t>(),
              s["fail"].get<std::size_t>(), s["conflict"].get<std::size_t>());
  if (!report.empty()) write_file(report, merged.dump(2));
  return failed ? kExitNotIbis : 0;
}

int cmd_atlas_list() {
  char* out = nullptr;
  check(ibis_atlas_list(&out));
  for (const auto& b : ordered_json::parse(take(out))) {
    std::printf("%-20s %-18s %s\n", b["name"].get<std::string>().c_str(),
                b["parameters"].get<std::string>().c_str(), b["summary"].get<std::string>().c_str());
  }
  return 0;
}

int cmd_atlas_build(const std::string& name, const std::vector<std::string>& kv, const std::string& out_path) {
  ordered_json params = ordered_json::object();
  for (const auto& p : kv) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: parameter '" << p << "' is not key=value\n";
      return kExitError;
    }
    params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  ibis_group* raw = nullptr;
  check(ibis_atlas_build(name.c_str(), params.dump().c_str(), &raw));
  GroupPtr g(raw);
  char* out = nullptr;
  check(ibis_group_to_json(g.get(), &out));
  const auto text = take(out);
  if (out_path.empty()) std::cout << text << "\n";
  else write_file(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irredundant bases of permutation groups"};
  app.set_version_flag("--version", std::string(ibis_version()));
  app.require_subcommand(1);

  std::string path, mode = "exact", report, out_path;
  std::uint64_t budget = default_budget(), seed = 1;
  std::size_t samples = 200, degree_bound = 40;
  std::vector<std::string> case_ids, kv;
  bool all = false, list = false;
  std::string builder;

  auto* info = app.add_subcommand("info", "degree, order, orbits and primitivity of a group file");
  info->add_option("group", path, "group file")->required();

  auto* ibis = app.add_subcommand("ibis", "decide whether all irredundant bases have one size");
  ibis->alias("check");
  ibis->add_option("group", path, "group file")->required();
  ibis->add_option("--mode", mode, "exact or fast")->check(CLI::IsMember({"exact", "fast"}));
  ibis->add_option("--budget", budget, "search node budget (IBIS_BUDGET sets the default)");
  ibis->add_option("--seed", seed, "seed for sampling");
  ibis->add_option("--samples", samples, "random bases sampled in fast mode");

  auto* verify = app.add_subcommand("verify-paper", "run the verification cases");
  verify->add_option("--case", case_ids, "case id (repeatable)");
  verify->add_flag("--all", all, "run every case");
  verify->add_flag("--list", list, "list case ids");
  verify->add_option("--report", report, "write the JSON report here");
  verify->add_option("--budget", budget, "search node budget per search");
  verify->add_option("--seed", seed, "seed");

  auto* matroid = app.add_subcommand("matroid", "matroid of irredundant bases of an IBIS group");
  matroid->add_option("group", path, "group file")->required();
  matroid->add_option("--out", out_path, "write the JSON here");
  matroid->add_option("--degree-bound", degree_bound, "largest degree accepted");

  auto* atlas = app.add_subcommand("atlas", "catalogue of constructed groups");
  atlas->require_subcommand(1);
  auto* atlas_list = atlas->add_subcommand("list", "list builders");
  auto* atlas_build = atlas->add_subcommand("build", "build a group file");
  atlas_build->add_option("name", builder, "builder name")->required();
  atlas_build->add_option("params", kv, "key=value parameters");
  atlas_build->add_option("-o,--out", out_path, "output group file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*info) return cmd_info(path);
    if (*ibis) return cmd_ibis(path, mode, budget, seed, samples);
    if (*verify) return cmd_verify(case_ids, all, list, report, budget, seed);
    if (*matroid) return cmd_matroid(path, out_path, degree_bound);
    if (*atlas_list) return cmd_atlas_list();
    if (*atlas_build) return cmd_atlas_build(builder, kv, out_path);
  } catch (const Failure& f) {
    const char* msg = ibis_last_error();
    std::cerr << "error: " << ibis_status_name(f.status);
    if (msg && *msg) std::cerr << ": " << msg;
    std::cerr << "\n";
    return kExitError;
  }
  return kExitError;
}
