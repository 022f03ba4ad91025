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


// Property suites shared by the unit tests and the acceptance binary. Each
// returns the failures it saw (empty means the property held) and how many
// groups it examined.

#ifndef IBIS_TESTS_PROPERTIES_HPP
#define IBIS_TESTS_PROPERTIES_HPP

#include <string>
#include <vector>

#include "corpus.hpp"
#include "ibis/base_analysis.hpp"
#include "ibis/error.hpp"
#include "ibis/gf.hpp"
#include "ibis/stabchain.hpp"
#include "oracles.hpp"

namespace props {

struct Result {
  std::size_t examined = 0;
  std::vector<std::string> failures;
  bool ok() const { return examined > 0 && failures.empty(); }
};

inline std::string num(const ibis::BigInt& v) { return v.str(); }

// |G_x| * |x^G| = |G| for every orbit representative.
inline Result orbit_stabilizer(const std::vector<corpus::Item>& items) {
  Result r;
  for (const auto& it : items) {
    const auto c = ibis::StabilizerChain::build(it.group);
    const auto orb = ibis::orbits(it.group);
    for (std::size_t i = 0; i < orb.cells.size(); ++i) {
      const auto x = orb.representatives[i];
      const auto stab = ibis::StabilizerChain::build(ibis::point_stabilizer(c, x)).order();
      if (stab * orb.cells[i].size() != c.order())
        r.failures.push_back(it.name + ": point " + std::to_string(x + 1) + " stabilizer " + num(stab));
    }
    ++r.examined;
  }
  return r;
}

// Re-derives the stabilizer orders of a witness with pointwise_stabilizer.
inline bool witness_ok(const ibis::StabilizerChain& c, const ibis::IrredundantSequence& w) {
  if (w.orders.size() != w.points.size() + 1 || w.orders.front() != c.order() || w.orders.back() != 1)
    return false;
  std::vector<ibis::Point> prefix;
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    prefix.push_back(w.points[i]);
    const auto o = c.pointwise_stabilizer(prefix).order();
    if (o != w.orders[i + 1] || !(o < w.orders[i])) return false;
  }
  return true;
}

// Orbit-pruned min/max search against every point sequence (no pruning).
inline Result pruned_vs_unpruned(const std::vector<corpus::Item>& items, std::size_t max_degree = 12,
                                 std::uint64_t max_order = 10000) {
  Result r;
  for (const auto& it : items) {
    const auto c = ibis::StabilizerChain::build(it.group);
    if (it.group.degree() > max_degree || c.order() > max_order) continue;
    const auto v = ibis::ibis_check(c);
    const auto ref = oracle::base_size_range(it.group.degree(), it.group.generators());
    if (v.min_size != ref.min || !v.max_exact || v.max_size != ref.max)
      r.failures.push_back(it.name + ": search " + std::to_string(v.min_size) + ".." + std::to_string(v.max_size) +
                           ", exhaustive " + std::to_string(ref.min) + ".." + std::to_string(ref.max));
    if (!c.is_trivial() && (!witness_ok(c, v.min_witness) || !witness_ok(c, v.max_witness)))
      r.failures.push_back(it.name + ": witness does not re-verify");
    ++r.examined;
  }
  return r;
}

// Same-size verdict, reorder invariance by sampling, and the exchange axiom
// must agree on every group of small degree.
inline Result cf_equivalence(const std::vector<corpus::Item>& items, std::size_t max_degree = 15,
                             std::size_t trials = 300) {
  Result r;
  for (const auto& it : items) {
    if (it.group.degree() > max_degree) continue;
    const auto c = ibis::StabilizerChain::build(it.group);
    const auto v = ibis::ibis_check(c);
    const auto reorder = ibis::reorder_invariance_check(c, trials, 1);
    bool matroid = true;
    try {
      const auto m = ibis::matroid_from_group(c);
      matroid = m.exchange_verified && m.rank == v.min_size;
    } catch (const ibis::Error& e) {
      if (e.code() != ibis::ErrorCode::kNotIbis) throw;
      matroid = false;
    }
    if (v.is_ibis != reorder.invariant || v.is_ibis != matroid)
      r.failures.push_back(it.name + ": same-size " + (v.is_ibis ? "yes" : "no") + ", reorder " +
                           (reorder.invariant ? "yes" : "no") + ", matroid " + (matroid ? "yes" : "no"));
    ++r.examined;
  }
  return r;
}

// An almost simple IBIS group is not Frobenius, so b(G) >= 3.
inline Result frobenius_floor(const std::vector<corpus::Item>& items) {
  Result r;
  for (const auto& it : items) {
    if (!it.almost_simple) continue;
    const auto v = ibis::ibis_check(ibis::StabilizerChain::build(it.group));
    if (!v.is_ibis) continue;
    if (v.min_size < 3) r.failures.push_back(it.name + ": IBIS with b = " + std::to_string(v.min_size));
    ++r.examined;
  }
  return r;
}

// All Galois orbits off GF(p^ell) have one size iff ell = f or f/ell is prime.
inline Result galois_criterion() {
  Result r;
  for (std::uint64_t p : {2ull, 3ull})
    for (unsigned f = 1; f <= 6; ++f) {
      const auto field = ibis::gf::Field::create(p, f);
      for (unsigned ell = 1; ell <= f; ++ell) {
        if (f % ell) continue;
        const auto prof = ibis::gf::galois_orbit_profile(field, ell);
        const std::string tag = "p=" + std::to_string(p) + " f=" + std::to_string(f) + " ell=" + std::to_string(ell);
        if (prof != oracle::galois_profile(p, f, ell)) r.failures.push_back(tag + ": profile differs from count");
        if ((prof.size() <= 1) != (ell == f || ibis::gf::is_prime(f / ell)))
          r.failures.push_back(tag + ": criterion fails");
        ++r.examined;
      }
    }
  return r;
}

}  // namespace props

#endif  // IBIS_TESTS_PROPERTIES_HPP
