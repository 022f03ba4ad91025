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

#ifndef IBIS_VERIFY_HPP
#define IBIS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ibis/atlas.hpp"

namespace ibis::verify {

/// kConflict: the check failed, and the mismatch is a documented disagreement
/// between a published claim and a certified computation.
enum class Outcome { kPass, kFail, kConflict };
const char* to_string(Outcome o);

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  atlas::Provenance provenance = atlas::Provenance::kDerived;
  std::string citation;
  Outcome outcome = Outcome::kPass;
  std::string note;
};

struct CaseReport {
  std::string id;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  std::string error;  // an exception message; counts as a failure

  Outcome outcome() const;
};

struct Options {
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 1;
};

struct CaseInfo {
  std::string id;
  std::string title;
};

std::vector<CaseInfo> list_cases();
/// Throws kUnknownCase for an unknown id. Other failures inside the case are
/// caught and reported in CaseReport::error.
CaseReport run_case(const std::string& id, const Options& options = {});
std::vector<CaseReport> run_all(const Options& options = {});

/// Claims that are checked only indirectly, with the reason.
std::vector<std::string> not_reproduced();

/// Report with a fixed key order; embeds version, seed and budget.
std::string report_json(const std::vector<CaseReport>& reports, const Options& options);

}  // namespace ibis::verify

#endif  // IBIS_VERIFY_HPP
