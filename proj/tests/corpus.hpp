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


// The test corpus: small groups from the catalogue plus a few hand-written
// ones that are not almost simple.

#ifndef IBIS_TESTS_CORPUS_HPP
#define IBIS_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "ibis/atlas.hpp"

namespace corpus {

struct Item {
  std::string name;
  ibis::GeneratedGroup group;
  bool almost_simple = false;
};

inline Item from(const ibis::atlas::AtlasEntry& e) { return {e.name, e.group, e.almost_simple}; }

inline Item plain(const std::string& name, std::size_t n, const std::vector<std::string>& cycles) {
  std::vector<ibis::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(ibis::parse_permutation(c, n));
  return {name, ibis::GeneratedGroup(n, gens, name), false};
}

inline std::vector<Item> build() {
  using namespace ibis::atlas;
  std::vector<Item> out;
  for (std::size_t n = 5; n <= 8; ++n) {
    out.push_back(from(sym(n)));
    out.push_back(from(alt(n)));
  }
  for (auto p : {Parent::kSym, Parent::kAlt}) {
    out.push_back(from(on_k_subsets(p, 5, 2)));
    out.push_back(from(on_k_subsets(p, 6, 2)));
    out.push_back(from(on_k_subsets(p, 7, 2)));
    out.push_back(from(on_partitions(p, 3, 2)));
    out.push_back(from(on_partitions(p, 2, 3)));
    out.push_back(from(degree6_from_pgl25(p)));
    out.push_back(from(degree6_cosets(p)));
  }
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16})
    for (const auto& e : projective_groups(q)) out.push_back(from(e));
  out.push_back(from(sl_n_2_on_vectors(3)));
  out.push_back(from(sl_n_2_on_vectors(4)));
  out.push_back(from(sl_n_2_on_hyperplanes(4)));
  out.push_back(from(sp_n_2_on_vectors(4)));
  out.push_back(from(sp4_2_derived()));
  const auto [a, b] = alt7_degree15_pair();
  out.push_back(from(a));
  out.push_back(from(b));
  out.push_back(from(mathieu("M11")));
  out.push_back(from(mathieu("M12")));
  out.push_back(from(pair_decomposition_action(4)));
  out.push_back(from(dihedral_coset_action(8, false)));

  // Not almost simple.
  out.push_back(plain("C5 regular", 5, {"(1 2 3 4 5)"}));
  out.push_back(plain("C6 regular", 6, {"(1 2 3 4 5 6)"}));
  out.push_back(plain("D8 on 4 points", 4, {"(1 2 3 4)", "(1 3)"}));
  out.push_back(plain("Sym(3) x Sym(2), intransitive", 5, {"(1 2 3)", "(1 2)", "(4 5)"}));
  auto s4 = from(on_k_subsets(Parent::kSym, 4, 2));
  s4.almost_simple = false;
  out.push_back(s4);
  out.push_back(plain("C2 x C2 x C2 regular", 8, {"(1 2)(3 4)(5 6)(7 8)", "(1 3)(2 4)(5 7)(6 8)",
                                                 "(1 5)(2 6)(3 7)(4 8)"}));
  out.push_back(plain("C3 wr C2", 6, {"(1 2 3)", "(1 4)(2 5)(3 6)"}));
  out.push_back(plain("AGL(1,7)", 7, {"(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"}));
  out.push_back(plain("trivial of degree 4", 4, {}));
  return out;
}

}  // namespace corpus

#endif  // IBIS_TESTS_CORPUS_HPP
