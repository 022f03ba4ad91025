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

#ifndef IBIS_SRC_SEARCH_SPACE_HPP
#define IBIS_SRC_SEARCH_SPACE_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "ibis/base_analysis.hpp"

namespace ibis {

// Stabilizers reached from a root group, one node per distinct fixed-point
// set. Two point sequences with the same fixed-point set have the same
// pointwise stabilizer, so every search result can be shared through it.
class SearchSpace {
 public:
  struct BudgetExhausted {};

  struct Node {
    StabilizerChain chain;
    BigInt order;
    std::size_t omega = 0;  // prime factors of |H| with multiplicity
    std::vector<Point> moved;
    std::vector<Point> reps;  // least point of each nontrivial orbit
    std::vector<std::uint32_t> rep_orbit;
    std::size_t max_orbit = 0;
    std::unordered_map<Point, std::uint32_t> children;
    // Min search: no base of at most this many more points.
    std::int64_t fail_depth = -1;
    // Max search.
    std::int64_t value = -1;
    Point best_next = 0;
    std::int64_t not_exceed = std::numeric_limits<std::int64_t>::min();
  };

  explicit SearchSpace(const StabilizerChain& root);

  Node& node(std::uint32_t id) { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }
  std::uint32_t child(std::uint32_t id, Point x);

  void set_budget(std::uint64_t budget) { budget_ = expansions_ + budget; }
  std::uint64_t expansions() const { return expansions_; }
  void expand();

  IrredundantSequence sequence(std::span<const Point> points);
  std::vector<Point> random_base(std::uint64_t seed);

 private:
  std::string flat_key(const StabilizerChain& chain) const;
  std::uint32_t add_node(StabilizerChain chain);

  std::size_t degree_;
  std::deque<Node> nodes_;
  std::unordered_map<std::string, std::uint32_t> by_flat_;
  std::uint64_t expansions_ = 0;
  std::uint64_t budget_ = std::numeric_limits<std::uint64_t>::max();
};

struct RefuteResult {
  SearchStatus status = SearchStatus::kExact;  // kEarlyExit when refuted
  IrredundantSequence witness;
  std::uint64_t nodes = 0;
};

SearchResult min_base_size(SearchSpace& space, std::uint64_t budget);
SearchResult max_irredundant_size(SearchSpace& space, std::uint64_t budget,
                                  std::optional<std::size_t> early_exit_above);
// Looks for an irredundant base longer than k.
RefuteResult refute_above(SearchSpace& space, std::uint64_t budget, std::size_t k);

}  // namespace ibis

#endif  // IBIS_SRC_SEARCH_SPACE_HPP
