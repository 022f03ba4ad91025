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

#include <random>
#include <set>

#include "ibis/atlas.hpp"
#include "ibis/error.hpp"
#include "ibis/stabchain.hpp"
#include "oracles.hpp"

using namespace ibis;

namespace {

Permutation C(const char* cycles, std::size_t n) { return parse_permutation(cycles, n); }

GeneratedGroup sym_n(std::size_t n) { return atlas::sym(n).group; }
GeneratedGroup alt_n(std::size_t n) { return atlas::alt(n).group; }

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(v);
}

}  // namespace

TEST_CASE("orders") {
  CHECK(StabilizerChain::build(sym_n(4)).order() == 24);
  CHECK(StabilizerChain::build(alt_n(8)).order() == 20160);
  CHECK(StabilizerChain::build(GeneratedGroup(7)).order() == 1);
  const auto s6 = atlas::on_k_subsets(atlas::Parent::kSym, 6, 2);
  CHECK(StabilizerChain::build(s6.group).order() == 720);
  // prod (2^4 - 2^i), i = 0..3
  BigInt sl = 1;
  for (int i = 0; i < 4; ++i) sl *= (16 - (1 << i));
  CHECK(StabilizerChain::build(atlas::sl_n_2_on_vectors(4).group).order() == sl);
}

TEST_CASE("PSL2(8) order agrees with element enumeration") {
  const auto e = atlas::projective_group(8, "PSL2(8)");
  CHECK(StabilizerChain::build(e.group).order() == 504);
  CHECK(oracle::closure(e.group.degree(), e.group.generators()).size() == 504);
}

TEST_CASE("membership") {
  const auto a6g = alt_n(6);
  const auto a6 = StabilizerChain::build(a6g);
  for (const auto& g : a6g.generators()) CHECK(a6.contains(g));
  CHECK_FALSE(a6.contains(C("(1 2)", 6)));
  std::mt19937_64 rng(3);
  const auto& gens = a6g.generators();
  for (int t = 0; t < 30; ++t) {
    Permutation w(6);
    for (int i = 0; i < 1 + static_cast<int>(rng() % 10); ++i) w = w * gens[rng() % gens.size()];
    CHECK(a6.contains(w));
  }
  CHECK_THROWS_AS(a6.contains(Permutation(7)), Error);
}

TEST_CASE("point stabilizers") {
  CHECK(StabilizerChain::build(point_stabilizer(sym_n(5), 0)).order() == 24);
  const auto a7 = atlas::alt7_degree15(atlas::Alt7Variant::kPoints);
  const auto a7c = a7.chain();
  for (Point x : {0u, 7u, 14u}) CHECK(a7c.stabilizer(x).order() == 168);
  const auto d = atlas::dihedral_coset_action(8, false);
  CHECK(d.group.degree() == 28);
  CHECK(d.chain().stabilizer(0).order() == 18);
}

TEST_CASE("pointwise stabilizers") {
  const auto s5 = StabilizerChain::build(sym_n(5));
  CHECK(s5.pointwise_stabilizer({}).order() == 120);
  const std::vector<Point> all{0, 1, 2, 3, 4};
  CHECK(s5.pointwise_stabilizer(all).order() == 1);
  const auto e = atlas::on_k_subsets(atlas::Parent::kSym, 8, 3);
  CHECK(e.chain().pointwise_stabilizer(atlas::witness_points("sym8-3subsets-short")).order() == 1);
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(GeneratedGroup(5)).size() == 5);
  CHECK(fixed_points(sym_n(5)).empty());
  // Setwise stabilizer of {1,2} in Sym(6), on 2-subsets: brute force the
  // fixed set over the element list.
  const auto e = atlas::on_k_subsets(atlas::Parent::kSym, 6, 2);
  const auto c = e.chain();
  const Point pair12 = e.domain.index_of(objects::encode_subset({0, 1}));
  const auto stab = point_stabilizer(c, pair12);
  const auto elems = oracle::closure(stab.degree(), stab.generators());
  CHECK(elems.size() == 48);
  std::vector<Point> brute;
  for (Point x = 0; x < 15; ++x)
    if (!oracle::moves(elems, x)) brute.push_back(x);
  CHECK(fixed_points(stab) == brute);
  CHECK(brute == std::vector<Point>{pair12});
}

TEST_CASE("orbits") {
  const auto o = orbits(GeneratedGroup(4));
  CHECK(o.cells.size() == 4);
  const auto s = orbits(point_stabilizer(sym_n(5), 0));
  REQUIRE(s.cells.size() == 2);
  CHECK(s.cells[0] == std::vector<Point>{0});
  CHECK(s.cells[1] == std::vector<Point>{1, 2, 3, 4});
  CHECK(s.representatives == std::vector<Point>{0, 1});
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(atlas::on_k_subsets(atlas::Parent::kSym, 6, 2).group));
  CHECK_FALSE(is_primitive(atlas::on_k_subsets(atlas::Parent::kSym, 4, 2).group));
  CHECK_FALSE(is_primitive(GeneratedGroup(6, {C("(1 2 3 4 5 6)", 6)})));
  CHECK(is_primitive(GeneratedGroup(5, {C("(1 2 3 4 5)", 5)})));
  CHECK_THROWS_AS(is_primitive(GeneratedGroup(4, {C("(1 2)", 4)})), Error);
  const auto blk = minimal_block(atlas::on_k_subsets(atlas::Parent::kSym, 4, 2).group, 0, 5);
  CHECK(blk.size() == 2);  // a pair and its complement
}

TEST_CASE("coset actions") {
  const auto a5 = StabilizerChain::build(alt_n(5));
  const GeneratedGroup d10(5, {C("(1 2 3 4 5)", 5), C("(2 5)(3 4)", 5)});
  const auto ca = coset_action(a5, d10);
  CHECK(ca.group.degree() == 6);
  CHECK(is_transitive(ca.group));
  CHECK(StabilizerChain::build(ca.group).order() == 60);

  const auto sub = atlas::subfield_coset_action(4);
  CHECK(sub.group.degree() == 68);
  CHECK(sub.chain().order() == 4080);

  CHECK_THROWS_AS(coset_action(a5, GeneratedGroup(5, {C("(1 2)", 5)})), Error);
  CHECK_THROWS_AS(coset_action(a5, GeneratedGroup(5), 10), Error);
}

TEST_CASE("order is independent of the base hint") {
  std::mt19937_64 rng(11);
  for (const auto& e : {atlas::on_k_subsets(atlas::Parent::kSym, 7, 2), atlas::mathieu("M11"),
                        atlas::projective_group(9, "M10")}) {
    const auto want = StabilizerChain::build(e.group).order();
    for (int t = 0; t < 20; ++t) {
      std::vector<Point> hint;
      for (int i = 0; i < 4; ++i) hint.push_back(static_cast<Point>(rng() % e.group.degree()));
      ChainOptions o;
      o.seed = rng();
      CHECK(StabilizerChain::build(e.group, hint, o).order() == want);
    }
  }
}

TEST_CASE("orbit-stabilizer on transitive groups") {
  for (const auto& e : {atlas::mathieu("M12"), atlas::sl_n_2_on_vectors(4),
                        atlas::on_partitions(atlas::Parent::kAlt, 2, 4), atlas::pair_decomposition_action(8)}) {
    const auto c = e.chain();
    REQUIRE(is_transitive(e.group));
    for (Point x : {Point{0}, static_cast<Point>(e.group.degree() - 1)})
      CHECK(StabilizerChain::build(point_stabilizer(c, x)).order() * e.group.degree() == c.order());
  }
}

TEST_CASE("membership matches enumeration for small groups") {
  std::mt19937_64 rng(5);
  for (const auto& e : {atlas::alt(6), atlas::projective_group(9, "PSigmaL2(9)"),
                        atlas::on_k_subsets(atlas::Parent::kSym, 5, 2), atlas::sl_n_2_on_vectors(3)}) {
    const auto c = e.chain();
    const auto elems = oracle::closure(e.group.degree(), e.group.generators());
    REQUIRE(elems.size() <= 5000);
    CHECK(c.order() == elems.size());
    const std::set<std::vector<Point>> set(elems.begin(), elems.end());
    const auto listed = enumerate_elements(c);
    CHECK(listed.size() == elems.size());
    for (const auto& p : listed) CHECK(set.count(oracle::images(p)) == 1);
    for (int t = 0; t < 200; ++t) {
      const auto p = random_perm(e.group.degree(), rng);
      CHECK(c.contains(p) == (set.count(oracle::images(p)) == 1));
    }
    // Products of members stay inside.
    for (int t = 0; t < 20; ++t) {
      const auto a = c.random_element(rng), b = c.random_element(rng);
      CHECK(c.contains(a * b));
    }
  }
}

TEST_CASE("equivalence of actions") {
  const auto [pts, planes] = atlas::alt7_degree15_pair();
  CHECK_FALSE(equivalence_map(pts.group, planes.group).has_value());
  // A relabeled copy is equivalent.
  const auto r = Permutation::from_images({3, 0, 1, 2, 5, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14});
  std::vector<Permutation> conj;
  for (const auto& g : pts.group.generators()) conj.push_back(conjugate(g, r));
  CHECK(equivalence_map(pts.group, GeneratedGroup(15, conj)).has_value());
}

TEST_CASE("derived subgroup") {
  CHECK(StabilizerChain::build(derived_subgroup(StabilizerChain::build(sym_n(6)))).order() == 360);
}
