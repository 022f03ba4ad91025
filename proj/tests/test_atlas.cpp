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
#include <variant>

#include "ibis/atlas.hpp"
#include "ibis/base_analysis.hpp"
#include "ibis/error.hpp"

using namespace ibis;
using atlas::AtlasEntry;
using atlas::Parent;

namespace {

void check_expected(const AtlasEntry& e) {
  INFO(e.name);
  const auto c = e.chain();
  if (e.expected.degree) CHECK(e.group.degree() == *e.expected.degree);
  if (e.expected.order) CHECK(c.order() == *e.expected.order);
  CHECK(e.domain.size() == e.group.degree());
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::size_t irr_len(const StabilizerChain& c, const std::vector<Point>& pts) {
  auto r = is_irredundant(c, pts);
  auto* s = std::get_if<IrredundantSequence>(&r);
  return s ? s->size() : 0;
}

}  // namespace

TEST_CASE("symmetric and alternating groups") {
  CHECK(atlas::sym(5).chain().order() == 120);
  CHECK(atlas::alt(6).chain().order() == 360);
  CHECK(atlas::alt(7).chain().order() == 2520);
  for (unsigned n = 3; n <= 12; ++n) {
    CHECK(atlas::sym(n).chain().order() == factorial(n));
    CHECK(atlas::alt(n).chain().order() == factorial(n) / 2);
  }
}

TEST_CASE("subset and partition actions") {
  CHECK(atlas::on_k_subsets(Parent::kSym, 6, 2).group.degree() == 15);
  CHECK(atlas::on_k_subsets(Parent::kAlt, 8, 3).group.degree() == 56);
  CHECK(atlas::on_k_subsets(Parent::kSym, 5, 2).group.degree() == 10);
  CHECK(atlas::on_partitions(Parent::kSym, 2, 3).group.degree() == 15);
  CHECK(atlas::on_partitions(Parent::kSym, 3, 2).group.degree() == 10);
  CHECK(atlas::on_partitions(Parent::kSym, 2, 4).group.degree() == 105);
  for (auto p : {Parent::kSym, Parent::kAlt}) {
    check_expected(atlas::on_k_subsets(p, 9, 3));
    check_expected(atlas::on_partitions(p, 3, 3));
  }
}

TEST_CASE("projective groups") {
  const auto q9 = atlas::projective_groups(9);
  std::set<std::string> names;
  for (const auto& e : q9) {
    check_expected(e);
    CHECK(e.group.degree() == 10);
    names.insert(e.name);
  }
  CHECK(names == std::set<std::string>{"PSL2(9)", "PGL2(9)", "PSigmaL2(9)", "M10", "PGammaL2(9)"});

  const auto q8 = atlas::projective_groups(8);
  REQUIRE(q8.size() == 2);
  std::set<std::int64_t> r8;
  for (const auto& e : q8) r8.insert(e.parameters.at("r"));
  CHECK(r8 == std::set<std::int64_t>{1, 3});

  std::set<std::int64_t> r16;
  for (const auto& e : atlas::projective_groups(16)) {
    r16.insert(e.parameters.at("r"));
    const bool ibis = ibis_check(e.chain()).is_ibis;
    CHECK(ibis == (e.parameters.at("r") != 4));
  }
  CHECK(r16 == std::set<std::int64_t>{1, 2, 4});
  CHECK_THROWS_AS(atlas::projective_groups(3), Error);
  CHECK_THROWS_AS(atlas::projective_groups(6), Error);
}

TEST_CASE("PGL2(q) is 3-transitive on the line") {
  // PGL2(8) = PSL2(8) and carries the latter name.
  for (std::uint64_t q : {7, 8, 9}) {
    const auto e = atlas::projective_group(q, (q == 8 ? "PSL2(" : "PGL2(") + std::to_string(q) + ")");
    const auto c = e.chain();
    // Orders of G, G_inf, G_inf,0: q+1, q, q-1 points in the basic orbits.
    const std::vector<Point> base{0, 1, 2};
    const auto r = c.rebased(base);
    REQUIRE(r.length() >= 3);
    CHECK(r.levels()[0].orbit.size() == q + 1);
    CHECK(r.levels()[1].orbit.size() == q);
    CHECK(r.levels()[2].orbit.size() == q - 1);
  }
}

TEST_CASE("linear and symplectic groups") {
  const auto sl4 = atlas::sl_n_2_on_vectors(4);
  CHECK(sl4.group.degree() == 15);
  CHECK(sl4.chain().order() == 20160);
  CHECK(atlas::sl_n_2_on_vectors(3).chain().order() == 168);
  CHECK(atlas::sl_n_2_on_vectors(2).chain().order() == 6);
  CHECK(atlas::sl_n_2_on_hyperplanes(4).chain().order() == 20160);
  CHECK(atlas::sp_n_2_on_vectors(4).chain().order() == 720);
  CHECK(atlas::sp4_2_derived().chain().order() == 360);
  const auto sp6 = atlas::sp_n_2_on_vectors(6);
  CHECK(sp6.group.degree() == 63);
  CHECK(sp6.chain().order() == 1451520);
  CHECK_THROWS_AS(atlas::sp_n_2_on_vectors(5), Error);
}

TEST_CASE("Alt(7) of degree 15") {
  for (auto v : {atlas::Alt7Variant::kPoints, atlas::Alt7Variant::kHyperplanes}) {
    const auto e = atlas::alt7_degree15(v);
    const auto c = e.chain();
    CHECK(c.order() == 2520);
    CHECK(c.stabilizer(0).order() == 168);
    CHECK(is_primitive(e.group));
    CHECK(ibis_check(c).is_ibis);
    // Generators lie in SL4(2) on the same labels.
    if (v == atlas::Alt7Variant::kPoints) {
      const auto sl = atlas::sl_n_2_on_vectors(4).chain();
      for (const auto& g : e.group.generators()) CHECK(sl.contains(g));
    }
  }
}

TEST_CASE("dihedral conjugates") {
  const auto d8 = atlas::dihedral_coset_action(8, false);
  CHECK(d8.group.degree() == 28);
  CHECK(d8.chain().order() == 504);
  const auto d16 = atlas::dihedral_coset_action(16, false);
  CHECK(d16.group.degree() == 120);
  const auto x8 = atlas::dihedral_coset_action(8, true);
  CHECK(x8.chain().order() == 1512);
  CHECK(ibis_check(x8.chain()).is_ibis);
  CHECK_FALSE(ibis_check(atlas::dihedral_coset_action(16, true).chain()).is_ibis);

  const auto k = atlas::dihedral_counting(8);
  CHECK(k.conjugates == 28);
  CHECK(k.involutions == 63);
  CHECK(k.incidence == std::map<std::size_t, std::size_t>{{4, 63}});
}

TEST_CASE("pair decompositions and subfield cosets") {
  CHECK(atlas::pair_decomposition_action(8).group.degree() == 36);
  CHECK(atlas::pair_decomposition_action(4).group.degree() == 10);
  const auto sub = atlas::subfield_coset_action(4);
  CHECK(sub.group.degree() == 68);
  CHECK(sub.chain().order() == 4080);
}

TEST_CASE("Mathieu groups") {
  const std::map<std::string, std::pair<std::size_t, BigInt>> want{
      {"M11", {11, 11 * 10 * 9 * 8}},
      {"M12", {12, 12 * 11 * 10 * 9 * 8}},
      {"M22", {22, 443520}},
      {"M23", {23, 10200960}},
      {"M24", {24, 244823040}}};
  for (const auto& [name, dv] : want) {
    const auto e = atlas::mathieu(name);
    CHECK(e.group.degree() == dv.first);
    CHECK(e.chain().order() == dv.second);
  }
  CHECK_THROWS_AS(atlas::mathieu("M13"), Error);
}

TEST_CASE("M24 is 5-transitive") {
  const auto c = atlas::mathieu("M24").chain();
  std::mt19937_64 rng(24);
  for (int t = 0; t < 10; ++t) {
    std::vector<Point> pts(24);
    for (Point i = 0; i < 24; ++i) pts[i] = i;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(5);
    const auto r = c.rebased(pts);
    for (std::size_t i = 0; i < 5; ++i) CHECK(r.levels()[i].orbit.size() == 24 - i);
  }
}

TEST_CASE("diagonal actions") {
  const auto f2 = atlas::diagonal_psl2(2);
  CHECK(f2.group.degree() == 60);
  CHECK(f2.chain().order() == 3600);
  CHECK(ibis_check(f2.chain()).is_ibis);
  CHECK(atlas::diagonal_psl2(3).group.degree() == 504);
}

TEST_CASE("every primitive catalogue entry is primitive") {
  std::vector<AtlasEntry> all{atlas::on_k_subsets(Parent::kSym, 7, 3), atlas::on_partitions(Parent::kSym, 2, 4),
                              atlas::degree6_cosets(Parent::kSym), atlas::sl_n_2_on_hyperplanes(4),
                              atlas::sp4_2_derived(), atlas::dihedral_coset_action(8, false),
                              atlas::pair_decomposition_action(8), atlas::subfield_coset_action(4),
                              atlas::mathieu("M22"), atlas::projective_group(16, "PGammaL2(16)")};
  for (const auto& e : all) {
    INFO(e.name);
    check_expected(e);
    CHECK(is_primitive(e.group));
  }
  // (Sym(2) wr Sym(4)) cap Alt(8) lies in 2^3:L3(2) with index 7.
  const auto pairings = atlas::on_partitions(Parent::kAlt, 2, 4).group;
  CHECK_FALSE(is_primitive(pairings));
  CHECK(minimal_block(pairings, 0, 16).size() == 7);
}

TEST_CASE("alpha-beta chains on k-subsets") {
  for (std::size_t n = 6; n <= 10; ++n)
    for (std::size_t k = 3; 2 * k < n; ++k)
      for (auto p : {Parent::kSym, Parent::kAlt}) {
        const auto e = atlas::on_k_subsets(p, n, k);
        const auto pts = atlas::witness_points(
            "ksubsets-alpha-beta", {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)},
                                    {"alt", p == Parent::kAlt}});
        INFO(e.name);
        const auto c = e.chain();
        CHECK(irr_len(c, pts) == (p == Parent::kSym ? n - 2 : n - 3));
        CHECK(c.pointwise_stabilizer(pts).order() == 1);
      }
}

TEST_CASE("alpha chains on partitions") {
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{3, 4}, {4, 3}}) {
    const auto e = atlas::on_partitions(Parent::kSym, a, b);
    const auto pts = atlas::witness_points("partitions-alpha-chain", {{"a", a}, {"b", b}});
    CHECK(irr_len(e.chain(), pts) == static_cast<std::size_t>(1 + (b / 2) * (a - 1)));
  }
}

TEST_CASE("witnesses") {
  CHECK(atlas::witness_points("sym8-3subsets-long").size() == 6);
  CHECK(atlas::witness_points("alt8-3subsets-short").size() == 3);
  CHECK(atlas::witness_points("partitions-a2-chain", {{"b", 4}}).size() == 4);
  CHECK_THROWS_AS(atlas::witness_points("nope"), Error);
  CHECK_THROWS_AS(atlas::witness_points("partitions-a2-chain"), Error);
}

TEST_CASE("builders by name") {
  for (const auto& b : atlas::list_builders()) CHECK_FALSE(b.name.empty());
  CHECK(atlas::build("subsets", {{"parent", "sym"}, {"n", "6"}, {"k", "2"}}).group.degree() == 15);
  CHECK(atlas::build("projective", {{"q", "9"}, {"group", "M10"}}).chain().order() == 720);
  CHECK(atlas::build("alt7", {{"variant", "hyperplanes"}}).chain().order() == 2520);
  CHECK(atlas::build("mathieu", {{"name", "M11"}}).group.degree() == 11);
  CHECK_THROWS_AS(atlas::build("nope", {}), Error);
  CHECK_THROWS_AS(atlas::build("subsets", {{"parent", "sym"}, {"n", "x"}, {"k", "2"}}), Error);
  CHECK_THROWS_AS(atlas::build("projective", {{"q", "9"}, {"group", "PGL2(8)"}}), Error);
}
