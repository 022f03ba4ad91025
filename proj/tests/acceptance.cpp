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


// One PASS/FAIL line per acceptance criterion. A criterion whose only
// failures are documented conflicts (a published claim contradicted by a
// certified computation) still prints FAIL, with the reason, but does not
// fail the process.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ibis/atlas.hpp"
#include "ibis/base_analysis.hpp"
#include "ibis/verify.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace ibis;
using verify::Outcome;

namespace {

struct Line {
  int id = 0;
  std::string title;
  bool pass = true;
  std::size_t undocumented = 0;
  std::vector<std::string> notes;

  void fail(const std::string& why, bool documented) {
    pass = false;
    undocumented += !documented;
    notes.push_back((documented ? "documented conflict: " : "FAILURE: ") + why);
  }
};

double run_cases(Line& line, const std::vector<std::string>& ids) {
  double total = 0;
  for (const auto& id : ids) {
    const auto r = verify::run_case(id);
    total += r.seconds;
    if (!r.error.empty()) line.fail(id + ": " + r.error, false);
    for (const auto& c : r.checks) {
      if (c.outcome == Outcome::kPass) continue;
      line.fail(id + ": " + c.name + ": expected " + c.expected + ", got " + c.actual +
                    (c.note.empty() ? "" : " (" + c.note + ")"),
                c.outcome == Outcome::kConflict);
    }
  }
  return total;
}

void suite(Line& line, const std::string& name, const props::Result& r) {
  line.notes.push_back(name + ": " + std::to_string(r.examined) + " examined, " +
                       std::to_string(r.failures.size()) + " failures");
  if (r.examined == 0) line.fail(name + ": nothing examined", false);
  for (const auto& f : r.failures) line.fail(name + ": " + f, false);
}

}  // namespace

int main() {
  std::vector<Line> lines;

  {
    Line l{1, "classified positive cases are IBIS (exact, under 5 minutes)"};
    const auto t = run_cases(l, {"thm-item-1", "thm-item-2", "thm-item-3", "thm-item-4", "thm-item-5",
                                 "thm-item-6", "thm-item-7"});
    l.notes.push_back("case time " + std::to_string(t) + " s");
    if (t >= 300) l.fail("runtime " + std::to_string(t) + " s", false);
    lines.push_back(l);
  }
  {
    Line l{2, "classified negative cases are not IBIS, quoted witnesses re-verified"};
    run_cases(l, {"neg-pgl2-9", "neg-2subsets", "neg-3subsets-n8", "neg-partitions-a2"});
    lines.push_back(l);
  }
  {
    Line l{3, "base size formulas (kappa2, kappa3, partition bound)"};
    run_cases(l, {"formula-kappa2", "formula-kappa3", "formula-partitions"});
    lines.push_back(l);
  }
  {
    Line l{4, "example family properties at desk scale"};
    run_cases(l, {"ex1-q4", "ex1-q8", "ex1-q9", "ex1-q16", "ex1-q32", "ex2", "ex3", "ex4", "ex7-q8", "ex7-q16",
                  "ex8-q8", "ex9-q4"});
    // Ranks of the three degree-15 groups of Examples 3 and 4, each also
    // recomputed by exhaustive search over element lists.
    for (const auto& e : {atlas::sl_n_2_on_vectors(4), atlas::sp_n_2_on_vectors(4), atlas::sp4_2_derived()}) {
      const auto v = ibis_check(e.chain());
      const auto ref = oracle::base_size_range(e.group.degree(), e.group.generators());
      const bool agree = ref.min == v.min_size && ref.max == v.max_size;
      if (!agree) l.fail(e.name + ": search and exhaustive enumeration disagree", false);
      if (!v.is_ibis) l.fail(e.name + ": not IBIS", false);
      if (v.min_size != 4)
        l.fail(e.name + ": rank 4 expected, computed " + std::to_string(v.min_size) +
                   " (exhaustive enumeration: " + std::to_string(ref.min) + ".." + std::to_string(ref.max) +
                   "); Alt(6) on 15 points has bases of size 3",
               agree);
    }
    // Example 2: say how M23 and M24 were certified.
    const auto r = verify::run_case("ex2");
    for (const auto& c : r.checks)
      if (c.name.find(": is_ibis") != std::string::npos && c.name.rfind("M2", 0) == 0 &&
          (c.name[2] == '3' || c.name[2] == '4'))
        l.notes.push_back(c.name + " = " + c.actual + (c.citation.find("downgraded") != std::string::npos
                                                           ? " (sampling certificate)"
                                                           : " (exact search within 10^9 nodes)"));
    lines.push_back(l);
  }
  {
    Line l{5, "property suites"};
    const auto items = corpus::build();
    suite(l, "orbit-stabilizer", props::orbit_stabilizer(items));
    suite(l, "pruned vs unpruned (degree <= 12, order <= 10^4)", props::pruned_vs_unpruned(items));
    suite(l, "CF three-way equivalence (degree <= 15)", props::cf_equivalence(items));
    auto wide = items;
    for (const char* m : {"M22", "M23", "M24"}) wide.push_back(corpus::from(atlas::mathieu(m)));
    for (std::uint64_t q : {25, 27, 32, 49})
      for (const auto& e : atlas::projective_groups(q)) wide.push_back(corpus::from(e));
    wide.push_back(corpus::from(atlas::dihedral_coset_action(16, false)));
    wide.push_back(corpus::from(atlas::dihedral_coset_action(8, true)));
    wide.push_back(corpus::from(atlas::pair_decomposition_action(8)));
    wide.push_back(corpus::from(atlas::subfield_coset_action(4)));
    suite(l, "Frobenius floor b >= 3", props::frobenius_floor(wide));
    suite(l, "galois orbit criterion (p in {2,3}, f <= 6)", props::galois_criterion());
    lines.push_back(l);
  }
  {
    Line l{6, "results not reproducible at desk scale are stated"};
    const auto nr = verify::not_reproduced();
    bool exhaustive = false, suzuki = false;
    for (const auto& s : nr) {
      l.notes.push_back(s);
      exhaustive = exhaustive || s.find("9 <= n <= 12") != std::string::npos;
      suzuki = suzuki || s.find("Suzuki") != std::string::npos;
    }
    if (!exhaustive) l.fail("no statement about 9 <= n <= 12", false);
    if (!suzuki) l.fail("no statement about the Suzuki stretch", false);
    bool sz_builder = false;
    for (const auto& b : atlas::list_builders()) sz_builder = sz_builder || b.name == "suzuki";
    l.notes.push_back(std::string("Sz(8) criteria: ") + (sz_builder ? "active" : "off (constructor not built)"));
    lines.push_back(l);
  }

  std::size_t undocumented = 0;
  for (const auto& l : lines) {
    std::printf("criterion %d: %s  %s\n", l.id, l.pass ? "PASS" : "FAIL", l.title.c_str());
    for (const auto& n : l.notes) std::printf("    %s\n", n.c_str());
    undocumented += l.undocumented;
  }
  std::printf("%zu undocumented failures\n", undocumented);
  return undocumented ? 1 : 0;
}
