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

#include "ibis/ibis.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "ibis/atlas.hpp"
#include "ibis/base_analysis.hpp"
#include "ibis/error.hpp"
#include "ibis/group_file.hpp"
#include "ibis/stabchain.hpp"
#include "ibis/verify.hpp"

struct ibis_group {
  ibis::GroupFile file;
  // Proven bound from a catalogue construction; never taken from file input.
  std::optional<ibis::BigInt> order_bound;
  std::unique_ptr<ibis::StabilizerChain> chain;

  const ibis::StabilizerChain& get_chain() {
    if (!chain) {
      ibis::ChainOptions options;
      options.order_bound = order_bound;
      chain = std::make_unique<ibis::StabilizerChain>(
          ibis::StabilizerChain::build(file.group, {}, options));
    }
    return *chain;
  }
};

namespace {

using nlohmann::ordered_json;

thread_local std::string last_error;

ibis_status to_status(ibis::ErrorCode code) {
  using ibis::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return IBIS_E_PARSE;
    case ErrorCode::kInvalidArgument: return IBIS_E_INVALID_ARGUMENT;
    case ErrorCode::kDegreeMismatch: return IBIS_E_DEGREE_MISMATCH;
    case ErrorCode::kNotASubgroup: return IBIS_E_NOT_A_SUBGROUP;
    case ErrorCode::kIndexTooLarge: return IBIS_E_INDEX_TOO_LARGE;
    case ErrorCode::kBudgetExhausted: return IBIS_E_BUDGET_EXHAUSTED;
    case ErrorCode::kNotIbis: return IBIS_E_NOT_IBIS;
    case ErrorCode::kUnknownCase: return IBIS_E_UNKNOWN_CASE;
    case ErrorCode::kIo: return IBIS_E_IO;
    case ErrorCode::kSearchExhausted: return IBIS_E_SEARCH_EXHAUSTED;
    case ErrorCode::kVerificationFailed: return IBIS_E_VERIFICATION_FAILED;
  }
  return IBIS_E_INTERNAL;
}

template <typename F>
ibis_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return IBIS_OK;
  } catch (const ibis::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return IBIS_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IBIS_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw ibis::Error(ibis::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ordered_json points_json(const ibis_group& g, const ibis::IrredundantSequence& seq) {
  ordered_json pts = ordered_json::array(), labels = ordered_json::array(),
               orders = ordered_json::array();
  for (auto x : seq.points) {
    pts.push_back(x + 1);
    labels.push_back(g.file.point_labels.empty() ? std::to_string(x + 1) : g.file.point_labels[x]);
  }
  for (const auto& o : seq.orders) orders.push_back(o.str());
  ordered_json j;
  j["size"] = seq.size();
  j["points"] = std::move(pts);
  j["labels"] = std::move(labels);
  j["orders"] = std::move(orders);
  return j;
}

std::map<std::string, std::string> params_from_json(const char* text) {
  std::map<std::string, std::string> out;
  if (!text || !*text) return out;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ibis::Error(ibis::ErrorCode::kParse, std::string("parameters: ") + e.what());
  }
  if (!j.is_object()) throw ibis::Error(ibis::ErrorCode::kParse, "parameters must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (v.is_string()) out[k] = v.get<std::string>();
    else if (v.is_number_integer()) out[k] = std::to_string(v.get<std::int64_t>());
    else if (v.is_boolean()) out[k] = v.get<bool>() ? "1" : "0";
    else throw ibis::Error(ibis::ErrorCode::kParse, "parameter " + k + " must be a string or an integer");
  }
  return out;
}

}  // namespace

extern "C" {

const char* ibis_version(void) { return IBIS_VERSION; }

const char* ibis_last_error(void) { return last_error.c_str(); }

const char* ibis_status_name(ibis_status status) {
  switch (status) {
    case IBIS_OK: return "ok";
    case IBIS_E_PARSE: return "parse error";
    case IBIS_E_INVALID_ARGUMENT: return "invalid argument";
    case IBIS_E_DEGREE_MISMATCH: return "degree mismatch";
    case IBIS_E_NOT_A_SUBGROUP: return "not a subgroup";
    case IBIS_E_INDEX_TOO_LARGE: return "index too large";
    case IBIS_E_BUDGET_EXHAUSTED: return "budget exhausted";
    case IBIS_E_NOT_IBIS: return "not IBIS";
    case IBIS_E_UNKNOWN_CASE: return "unknown case";
    case IBIS_E_IO: return "i/o error";
    case IBIS_E_SEARCH_EXHAUSTED: return "search exhausted";
    case IBIS_E_VERIFICATION_FAILED: return "verification failed";
    case IBIS_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ibis_string_free(char* s) { std::free(s); }

ibis_status ibis_group_from_json(const char* json, ibis_group** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    auto g = std::make_unique<ibis_group>();
    g->file = ibis::parse_group_file(json);
    *out = g.release();
  });
}

ibis_status ibis_group_load(const char* path, ibis_group** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    auto g = std::make_unique<ibis_group>();
    g->file = ibis::load_group_file(path);
    *out = g.release();
  });
}

ibis_status ibis_group_to_json(const ibis_group* g, char** out) {
  return guard([&] {
    require(g, "group");
    require(out, "out");
    *out = copy_out(ibis::write_group_file(g->file));
  });
}

void ibis_group_free(ibis_group* g) { delete g; }

size_t ibis_group_degree(const ibis_group* g) { return g ? g->file.group.degree() : 0; }

ibis_status ibis_group_order(ibis_group* g, char** out) {
  return guard([&] {
    require(g, "group");
    require(out, "out");
    *out = copy_out(g->get_chain().order().str());
  });
}

ibis_status ibis_group_info(ibis_group* g, char** out) {
  return guard([&] {
    require(g, "group");
    require(out, "out");
    const auto& group = g->file.group;
    const auto order = g->get_chain().order();
    ordered_json j;
    j["label"] = group.label();
    j["degree"] = group.degree();
    j["order"] = order.str();
    if (g->file.order) j["declared_order_matches"] = *g->file.order == order.str();
    j["generators"] = group.generators().size();
    const bool transitive = group.degree() > 0 && ibis::is_transitive(group);
    j["transitive"] = transitive;
    j["primitive"] = transitive && ibis::is_primitive(group);
    ordered_json cells = ordered_json::array();
    for (const auto& cell : ibis::orbits(group).cells) {
      ordered_json c = ordered_json::array();
      for (auto x : cell) c.push_back(x + 1);
      cells.push_back(std::move(c));
    }
    j["orbits"] = std::move(cells);
    *out = copy_out(j.dump(2));
  });
}

void ibis_check_options_init(ibis_check_options* options) {
  if (!options) return;
  const ibis::IbisOptions defaults;
  options->mode = IBIS_MODE_EXACT;
  options->budget = defaults.budget;
  options->seed = defaults.seed;
  options->samples = defaults.samples;
}

ibis_status ibis_check(ibis_group* g, const ibis_check_options* options, char** out) {
  return guard([&] {
    require(g, "group");
    require(out, "out");
    ibis::IbisOptions o;
    if (options) {
      if (options->mode != IBIS_MODE_EXACT && options->mode != IBIS_MODE_FAST)
        throw ibis::Error(ibis::ErrorCode::kInvalidArgument, "unknown mode");
      o.mode = options->mode == IBIS_MODE_FAST ? ibis::IbisMode::kFast : ibis::IbisMode::kExact;
      o.budget = options->budget;
      o.seed = options->seed;
      o.samples = options->samples;
    }
    const auto v = ibis::ibis_check(g->get_chain(), o);
    ordered_json j;
    j["label"] = g->file.group.label();
    j["degree"] = g->file.group.degree();
    j["order"] = v.order.str();
    j["status"] = ibis::to_string(v.method);
    if (v.method == ibis::VerdictMethod::kBudgetExhausted) {
      j["is_ibis"] = nullptr;
      j["min_size_bounds"] = {v.min_size, v.max_size};
    } else {
      j["is_ibis"] = v.is_ibis;
      j["min_size"] = v.min_size;
      j["max_size"] = v.max_size;
      j["max_exact"] = v.max_exact;
      j["min_witness"] = points_json(*g, v.min_witness);
      j["max_witness"] = points_json(*g, v.max_witness);
    }
    j["nodes"] = v.nodes;
    j["mode"] = o.mode == ibis::IbisMode::kFast ? "fast" : "exact";
    j["budget"] = o.budget;
    j["seed"] = o.seed;
    j["version"] = IBIS_VERSION;
    *out = copy_out(j.dump(2));
  });
}

ibis_status ibis_matroid(ibis_group* g, size_t degree_bound, char** out) {
  return guard([&] {
    require(g, "group");
    require(out, "out");
    const auto m = ibis::matroid_from_group(g->get_chain(), degree_bound);
    ordered_json j;
    j["label"] = g->file.group.label();
    j["ground_size"] = m.ground_size;
    j["rank"] = m.rank;
    j["exchange_verified"] = m.exchange_verified;
    j["ordered_base_count"] = m.ordered_base_count.str();
    j["base_count"] = m.bases.size();
    ordered_json bases = ordered_json::array();
    for (const auto& b : m.bases) {
      ordered_json s = ordered_json::array();
      for (auto x : b) s.push_back(x + 1);
      bases.push_back(std::move(s));
    }
    j["bases"] = std::move(bases);
    j["version"] = IBIS_VERSION;
    *out = copy_out(j.dump(2));
  });
}

ibis_status ibis_atlas_list(char** out) {
  return guard([&] {
    require(out, "out");
    ordered_json j = ordered_json::array();
    for (const auto& b : ibis::atlas::list_builders())
      j.push_back({{"name", b.name}, {"parameters", b.parameters}, {"summary", b.summary}});
    *out = copy_out(j.dump(2));
  });
}

ibis_status ibis_atlas_build(const char* name, const char* params_json, ibis_group** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    auto e = ibis::atlas::build(name, params_from_json(params_json));
    auto g = std::make_unique<ibis_group>();
    g->file.group = std::move(e.group);
    g->file.group.set_label(e.name);
    if (e.expected.order) g->file.order = e.expected.order->str();
    g->file.point_labels = e.domain.labels();
    if (g->file.point_labels.size() != g->file.group.degree()) g->file.point_labels.clear();
    g->order_bound = e.order_bound;
    *out = g.release();
  });
}

ibis_status ibis_verify_list(char** out) {
  return guard([&] {
    require(out, "out");
    ordered_json j = ordered_json::array();
    for (const auto& c : ibis::verify::list_cases()) j.push_back({{"id", c.id}, {"title", c.title}});
    *out = copy_out(j.dump(2));
  });
}

ibis_status ibis_verify_paper(const char* case_id, uint64_t budget, uint64_t seed, char** report,
                              size_t* failed) {
  return guard([&] {
    require(report, "report");
    ibis::verify::Options o;
    o.budget = budget;
    o.seed = seed;
    std::vector<ibis::verify::CaseReport> reports;
    if (case_id) reports.push_back(ibis::verify::run_case(case_id, o));
    else reports = ibis::verify::run_all(o);
    std::size_t n = 0;
    for (const auto& r : reports) n += r.outcome() == ibis::verify::Outcome::kFail;
    if (failed) *failed = n;
    *report = copy_out(ibis::verify::report_json(reports, o));
  });
}

}  // extern "C"
