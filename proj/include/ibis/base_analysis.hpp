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

#ifndef IBIS_BASE_ANALYSIS_HPP
#define IBIS_BASE_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ibis/perm.hpp"
#include "ibis/stabchain.hpp"

namespace ibis {

/// A point sequence with the stabilizer orders along it:
/// orders[0] = |G| and orders[i + 1] = |G_(points[0..i])|. Irredundant
/// sequences have strictly decreasing orders.
struct IrredundantSequence {
  std::vector<Point> points;
  std::vector<BigInt> orders;

  std::size_t size() const noexcept { return points.size(); }
  bool is_base() const { return !orders.empty() && orders.back() == 1; }
};

/// Index of the first point fixed by the stabilizer of its predecessors.
struct RedundantAt {
  std::size_t index;
};

std::variant<IrredundantSequence, RedundantAt> is_irredundant(const StabilizerChain& g,
                                                              std::span<const Point> points);

/// Drops redundant points, keeping first occurrences. Throws if the points
/// are not a base.
IrredundantSequence strip_redundant(const StabilizerChain& g, std::span<const Point> points);

/// At each step a uniformly chosen point moved by the current stabilizer.
IrredundantSequence random_irredundant_base(const StabilizerChain& g, std::uint64_t seed);

/// Sizes of `samples` random irredundant bases (seeds seed, seed+1, ...),
/// as size -> count. Shares one search cache across samples.
std::map<std::size_t, std::uint64_t> sample_base_sizes(const StabilizerChain& g,
                                                       std::size_t samples, std::uint64_t seed);

enum class SearchStatus { kExact, kEarlyExit, kBudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::kExact;
  /// Exact value when status is kExact; otherwise the interval
  /// [lower, upper] known when the search stopped.
  std::size_t value = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  IrredundantSequence witness;
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  std::uint64_t budget = 100'000'000;
  /// Max search only: stop as soon as an irredundant base longer than this
  /// is found.
  std::optional<std::size_t> early_exit_above;
};

/// b(G) by depth-first search over orbit representatives with iterative
/// deepening from the lower bound ceil(log_m |H|), m the largest orbit.
SearchResult min_base_size(const StabilizerChain& g, const SearchOptions& options = {});
/// Longest irredundant base, pruned with Omega(|H|) (prime factors counted
/// with multiplicity) as the bound on the remaining length.
SearchResult max_irredundant_size(const StabilizerChain& g, const SearchOptions& options = {});

enum class IbisMode { kExact, kFast };
enum class VerdictMethod { kExact, kSampledRefutation, kBudgetExhausted };

struct IbisOptions {
  IbisMode mode = IbisMode::kExact;
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

struct IbisVerdict {
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  bool is_ibis = false;
  IrredundantSequence min_witness;
  IrredundantSequence max_witness;
  VerdictMethod method = VerdictMethod::kExact;
  /// False when IBIS was refuted but the exact maximum was not pinned;
  /// max_size is then the longest base found.
  bool max_exact = true;
  std::uint64_t nodes = 0;
  BigInt order;
};

IbisVerdict ibis_check(const StabilizerChain& g, const IbisOptions& options = {});
IbisVerdict ibis_check(const GeneratedGroup& g, const IbisOptions& options = {});

struct ReorderResult {
  bool invariant = true;
  /// An irredundant base and a reordering of it that is redundant.
  std::vector<Point> base;
  std::vector<Point> reordered;
  std::size_t trials_run = 0;
};

ReorderResult reorder_invariance_check(const StabilizerChain& g, std::size_t trials,
                                       std::uint64_t seed);

/// Unordered irredundant bases of a group of degree at most 64, as bit
/// masks, found by a DFS over every extension (no orbit pruning), plus the
/// number of ordered irredundant bases.
struct BaseFamily {
  std::vector<std::uint64_t> sets;
  BigInt ordered_count;
};
BaseFamily irredundant_base_sets(const StabilizerChain& g);
/// For bases A, B and a in A \ B some b in B \ A makes A - a + b a basis;
/// also requires all sets to have equal size.
bool satisfies_exchange_axiom(const std::vector<std::uint64_t>& sets);

struct GroupMatroid {
  std::size_t ground_size = 0;
  std::size_t rank = 0;
  std::vector<std::vector<Point>> bases;  // sorted point lists, sorted
  BigInt ordered_base_count;
  bool exchange_verified = false;
};

/// Throws kNotIbis when the irredundant bases do not form a matroid and
/// kInvalidArgument when the degree exceeds degree_bound (at most 64).
GroupMatroid matroid_from_group(const StabilizerChain& g, std::size_t degree_bound = 40);

/// Orders of two-point stabilizers G_{x0,x} (depth 2) for x over orbit
/// representatives of G_{x0}, and optionally one level deeper (depth 3) for
/// points moved by G_{x0,x}. Values are order -> number of points, weighted by
/// orbit size. x0 is point 0.
std::map<BigInt, std::uint64_t> stabilizer_profile(const StabilizerChain& g, int depth);

/// Closed forms used as search cross-checks.
struct BoundTable {
  /// Base size of Sym(n) on 2-subsets: ceil(2(n-1)/3).
  static std::size_t kappa2(std::size_t n);
  /// Upper bound on the base size on k-subsets, n >= 9: ceil((n-1)/2).
  static std::size_t kappa3(std::size_t n);
  /// ceil(log_b(a+3)) + 1, computed in integers.
  static std::size_t partition_bound(std::size_t a, std::size_t b);
};

const char* to_string(VerdictMethod m);
const char* to_string(SearchStatus s);

}  // namespace ibis

#endif  // IBIS_BASE_ANALYSIS_HPP
