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

#ifndef IBIS_ATLAS_HPP
#define IBIS_ATLAS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ibis/gf.hpp"
#include "ibis/perm.hpp"
#include "ibis/stabchain.hpp"

namespace ibis::atlas {

/// Where an expected value comes from.
enum class Provenance { kPaper, kTrivial, kDerived };
const char* to_string(Provenance p);

struct Expected {
  std::optional<std::size_t> degree;
  std::optional<BigInt> order;
  std::optional<bool> ibis;
  std::optional<std::size_t> rank;
  Provenance provenance = Provenance::kDerived;
  std::string citation;
};

struct AtlasEntry {
  std::string name;
  std::map<std::string, std::int64_t> parameters;
  GeneratedGroup group;
  LabeledDomain domain;
  Expected expected;
  /// Seed used by randomized constructions, if any.
  std::optional<std::uint64_t> seed;
  /// Proven bound on |group| used to certify its chain quickly.
  std::optional<BigInt> order_bound;
  bool almost_simple = true;

  /// Chain built with the order bound when one is known.
  StabilizerChain chain() const;
};

enum class Parent { kSym, kAlt };

AtlasEntry sym(std::size_t n);
AtlasEntry alt(std::size_t n);
AtlasEntry on_k_subsets(Parent parent, std::size_t n, std::size_t k);
AtlasEntry on_partitions(Parent parent, std::size_t a, std::size_t b);

/// Points: inf first, then field elements by index.
LabeledDomain projective_line(const gf::Field& field);
/// x -> (a x + b) / (c x + d) on the projective line.
Permutation mobius(const gf::Field& field, gf::Element a, gf::Element b, gf::Element c,
                   gf::Element d);
/// x -> x^p, fixing inf.
Permutation frobenius_map(const gf::Field& field);

/// Every G with PSL2(q) <= G <= PGammaL2(q) on the projective line, one per
/// subgroup of PGammaL2(q)/PSL2(q). parameters["r"] is |G.PGL2(q) : PGL2(q)|
/// and parameters["h"] the order of the pointwise stabilizer of inf, 0, 1.
std::vector<AtlasEntry> projective_groups(std::uint64_t q);
/// The entry of projective_groups(q) with the given name.
AtlasEntry projective_group(std::uint64_t q, const std::string& name);

/// Alt(5) = PSL2(5) or Sym(5) = PGL2(5) of degree 6.
AtlasEntry degree6_from_pgl25(Parent parent);
/// Alt(6) or Sym(6) on the cosets of PSL2(5) or PGL2(5).
AtlasEntry degree6_cosets(Parent parent);

AtlasEntry sl_n_2_on_vectors(std::size_t n);
AtlasEntry sl_n_2_on_hyperplanes(std::size_t n);
AtlasEntry sp_n_2_on_vectors(std::size_t n);
AtlasEntry sp4_2_derived();

enum class Alt7Variant { kPoints, kHyperplanes };
/// Alt(7) inside SL4(2) acting on nonzero vectors or on hyperplanes.
AtlasEntry alt7_degree15(Alt7Variant variant, std::uint64_t seed = 7);
/// Both variants with the same generator words, for equivalence tests.
std::pair<AtlasEntry, AtlasEntry> alt7_degree15_pair(std::uint64_t seed = 7);

/// SL2(q) (q even) acting by conjugation on the conjugates of a dihedral
/// subgroup of order 2(q+1); with `extended` the group is PGammaL2(q).
AtlasEntry dihedral_coset_action(std::uint64_t q, bool extended, std::uint64_t seed = 11);

struct DihedralCounting {
  std::size_t conjugates = 0;
  std::size_t involutions = 0;
  /// Number of conjugates containing each involution, as count -> how often.
  std::map<std::size_t, std::size_t> incidence;
};
DihedralCounting dihedral_counting(std::uint64_t q, std::uint64_t seed = 11);

/// PGammaL2(q) on unordered pairs of distinct projective points.
AtlasEntry pair_decomposition_action(std::uint64_t q);
/// SL2(q0^2) on the cosets of SL2(q0).
AtlasEntry subfield_coset_action(std::uint64_t q0);

/// M11, M12, M22, M23 or M24 from the bundled generator files.
AtlasEntry mathieu(const std::string& name);
/// Directory holding the bundled data files (IBIS_DATA_DIR overrides).
std::string data_dir();

/// T x T acting on T = PSL2(2^f) by t -> a^-1 t b.
AtlasEntry diagonal_psl2(unsigned f);

/// The explicit point sequences quoted for a case, as domain points of the
/// matching entry. Case ids: sym8-3subsets-long, sym8-3subsets-short,
/// alt8-3subsets-long, alt8-3subsets-short, partitions-a2-chain (b),
/// partitions-alpha-chain (a, b), ksubsets-alpha-beta (parent, n, k),
/// 2subsets-alpha (parent, n).
std::vector<Point> witness_points(const std::string& case_id,
                                  const std::map<std::string, std::int64_t>& params = {});

/// Builders reachable by name from the command line.
struct BuilderInfo {
  std::string name;
  std::string parameters;  // e.g. "n k"
  std::string summary;
};
std::vector<BuilderInfo> list_builders();
AtlasEntry build(const std::string& name, const std::map<std::string, std::string>& params);

}  // namespace ibis::atlas

#endif  // IBIS_ATLAS_HPP
