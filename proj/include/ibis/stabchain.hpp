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

#ifndef IBIS_STABCHAIN_HPP
#define IBIS_STABCHAIN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ibis/perm.hpp"

namespace ibis {

using BigInt = boost::multiprecision::cpp_int;

struct ChainOptions {
  /// A proven upper bound on the group order (for instance the order of a
  /// group this one is a homomorphic image of). Reaching it during the
  /// randomized phase certifies the chain and skips the Schreier generator
  /// sweep.
  std::optional<BigInt> order_bound;
  std::uint64_t seed = 0x1b15;
  /// Keep levels whose basic orbit is a single point (hint points the group
  /// fixes). Coset identification needs the full base.
  bool keep_trivial_levels = false;
};

/// Base and strong generating set with per-level transversals.
///
/// Level i stores generators of G^(i), the pointwise stabilizer of the
/// first i base points, the basic orbit of base point i under them, and a
/// transversal. Transversal inverses are explicit permutation tables unless
/// orbit length times degree exceeds kExplicitTableLimit, in which case the
/// level falls back to a Schreier vector.
class StabilizerChain {
 public:
  static constexpr std::size_t kExplicitTableLimit = std::size_t{1} << 24;

  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> inverse_generators;
    std::vector<Point> orbit;  // discovery order; orbit[0] == base
    // Per point: -2 outside the orbit, -1 for the base, otherwise the index of
    // the generator that first reached it.
    std::vector<std::int32_t> edge;
    std::vector<std::uint32_t> position;  // point -> index into orbit
    std::vector<Permutation> inverse_reps;  // by orbit position; empty if walking
    bool explicit_reps = true;

    bool in_orbit(Point x) const { return edge[x] != -2; }
  };

  StabilizerChain() = default;
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  /// Schreier-Sims. Base points come from the hint first, then the least
  /// moved point of each new residue.
  static StabilizerChain build(const GeneratedGroup& g,
                               std::span<const Point> base_hint = {},
                               const ChainOptions& options = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;
  bool is_trivial() const noexcept { return levels_.empty(); }

  /// Generators of the whole group (level 0).
  const std::vector<Permutation>& generators() const;
  GeneratedGroup group(std::string label = {}) const;

  /// Residue of sifting p and the index of the level where it stopped
  /// (length() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation p) const;
  bool contains(const Permutation& p) const;

  /// Coset representative u_b at a level: maps the base point to b.
  Permutation transversal_element(std::size_t level, Point b) const;

  /// Uniformly distributed element.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Same group, base starting with `hint`. Uses the known order, so the
  /// randomized construction terminates with a proof.
  StabilizerChain rebased(std::span<const Point> hint,
                          bool keep_trivial_levels = false) const;
  /// Chain of the point stabilizer G_x.
  StabilizerChain stabilizer(Point x) const;
  /// Chain of the pointwise stabilizer of xs.
  StabilizerChain pointwise_stabilizer(std::span<const Point> xs) const;

  /// Points fixed by every element.
  std::vector<Point> fixed_points() const;
  bool fixes(Point x) const;

  // Used by the builder.
  std::vector<Level>& mutable_levels() noexcept { return levels_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

/// Orbit partition with least-point representatives, cells sorted by them.
struct OrbitPartition {
  std::vector<Point> representatives;
  std::vector<std::vector<Point>> cells;
  std::vector<std::uint32_t> cell_of;  // point -> cell index
};

OrbitPartition orbits(const GeneratedGroup& g);
OrbitPartition orbits(std::size_t degree, std::span<const Permutation> generators);
std::vector<Point> orbit_of(std::size_t degree, std::span<const Permutation> generators,
                            Point x);
std::vector<Point> fixed_points(const GeneratedGroup& g);
bool is_transitive(const GeneratedGroup& g);

/// Smallest block containing a and b (as a sorted point list).
std::vector<Point> minimal_block(const GeneratedGroup& g, Point a, Point b);
/// Transitive input only; throws on intransitive groups.
bool is_primitive(const GeneratedGroup& g);

GeneratedGroup point_stabilizer(const GeneratedGroup& g, Point x);
GeneratedGroup point_stabilizer(const StabilizerChain& chain, Point x);
GeneratedGroup pointwise_stabilizer(const GeneratedGroup& g, std::span<const Point> xs);

/// Right action of g on the right cosets of h, built by orbit enumeration.
/// Cosets are identified by a canonical image of g's base under h's chain
/// rebased onto that base. The result may have a kernel.
struct CosetAction {
  GeneratedGroup group;
  LabeledDomain domain;
};
CosetAction coset_action(const StabilizerChain& g_chain, const GeneratedGroup& h,
                         std::size_t index_bound = 1000000);

/// Normal closure of `gens` in the group of `chain`.
GeneratedGroup normal_closure(const StabilizerChain& chain,
                              std::span<const Permutation> gens);
GeneratedGroup derived_subgroup(const StabilizerChain& chain);

/// Every element, in transversal-product order. Throws past `limit`.
std::vector<Permutation> enumerate_elements(const StabilizerChain& chain,
                                            std::size_t limit = 1000000);

/// True if generators of a and b (listed in matching order) define
/// permutation-equivalent transitive actions: some bijection f with
/// f(a_i(x)) = b_i(f(x)) for every generator pair.
std::optional<std::vector<Point>> equivalence_map(const GeneratedGroup& a,
                                                  const GeneratedGroup& b);

}  // namespace ibis

#endif  // IBIS_STABCHAIN_HPP
