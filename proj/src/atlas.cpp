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

#include "ibis/atlas.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "ibis/error.hpp"
#include "ibis/group_file.hpp"

namespace ibis::atlas {

namespace {

using gf::Element;
using gf::Field;

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::size_t n, std::size_t k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Permutation from_cycle(std::size_t n, const std::vector<Point>& cycle) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation::from_images(std::move(img));
}

LabeledDomain numbered_domain(std::size_t n) {
  std::vector<std::string> objs, labels;
  for (Point i = 0; i < n; ++i) {
    const Point one[] = {i};
    objs.push_back(objects::encode_points(one));
    labels.push_back(std::to_string(i + 1));
  }
  return LabeledDomain(std::move(objs), std::move(labels));
}

std::string parent_name(Parent p) { return p == Parent::kSym ? "sym" : "alt"; }

GeneratedGroup natural(Parent p, std::size_t n) {
  return p == Parent::kSym ? sym(n).group : alt(n).group;
}

BigInt natural_order(Parent p, std::size_t n) {
  return p == Parent::kSym || n < 2 ? factorial(n) : factorial(n) / 2;
}

// q = p^f.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  const auto factors = gf::prime_factors(q);
  if (q < 2 || factors.size() != 1)
    throw Error(ErrorCode::kInvalidArgument, std::to_string(q) + " is not a prime power");
  unsigned f = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++f;
  return {factors[0], f};
}

BigInt psl2_order(std::uint64_t q) {
  const BigInt full = BigInt(q) * (BigInt(q) * q - 1);
  return q % 2 == 0 ? full : full / 2;
}

Element neg_one(const Field& f) { return f.neg(f.one()); }

// Name of delta^i phi^j.
std::string quotient_word(std::uint64_t i, std::uint64_t j) {
  std::string out;
  if (i) out += "delta";
  if (j) {
    if (!out.empty()) out += ' ';
    out += j == 1 ? "phi" : "phi^" + std::to_string(j);
  }
  return out;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kPaper: return "PAPER";
    case Provenance::kTrivial: return "TRIVIAL";
    case Provenance::kDerived: return "DERIVED";
  }
  return "?";
}

StabilizerChain AtlasEntry::chain() const {
  ChainOptions options;
  options.order_bound = order_bound;
  return StabilizerChain::build(group, {}, options);
}

// ---------------------------------------------------------------------------
// Symmetric and alternating groups

AtlasEntry sym(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "sym needs n >= 1");
  AtlasEntry e;
  e.name = "sym(" + std::to_string(n) + ")";
  e.parameters = {{"n", static_cast<std::int64_t>(n)}};
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    gens.push_back(from_cycle(n, cyc));
    gens.push_back(from_cycle(n, {0, 1}));
  }
  e.group = GeneratedGroup(n, std::move(gens), e.name);
  e.domain = numbered_domain(n);
  e.expected.degree = n;
  e.expected.order = factorial(n);
  e.expected.ibis = true;
  e.expected.rank = n - 1;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Thm 1.2(1)";
  e.almost_simple = n >= 5;
  return e;
}

AtlasEntry alt(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "alt needs n >= 3");
  AtlasEntry e;
  e.name = "alt(" + std::to_string(n) + ")";
  e.parameters = {{"n", static_cast<std::int64_t>(n)}};
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(from_cycle(n, {0, 1, k}));
  e.group = GeneratedGroup(n, std::move(gens), e.name);
  e.domain = numbered_domain(n);
  e.expected.degree = n;
  e.expected.order = factorial(n) / 2;
  e.expected.ibis = true;
  e.expected.rank = n - 2;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Thm 1.2(1)";
  e.almost_simple = n >= 5;
  return e;
}

AtlasEntry on_k_subsets(Parent parent, std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k > n)
    throw Error(ErrorCode::kInvalidArgument, "k-subset action needs 1 <= k <= n/2");
  AtlasEntry e;
  e.name = parent_name(parent) + "(" + std::to_string(n) + ") on " + std::to_string(k) + "-subsets";
  e.parameters = {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}};
  e.domain = objects::subset_domain(n, k);
  e.group = induce(natural(parent, n), e.domain, objects::subset_action, e.name);
  e.order_bound = natural_order(parent, n);
  e.expected.degree = static_cast<std::size_t>(binomial(n, k));
  e.expected.order = natural_order(parent, n);
  e.expected.provenance = Provenance::kTrivial;
  e.expected.citation = "C(n,k) subsets, faithful action";
  e.almost_simple = n >= 5;
  return e;
}

AtlasEntry on_partitions(Parent parent, std::size_t a, std::size_t b) {
  if (a < 2 || b < 2) throw Error(ErrorCode::kInvalidArgument, "partition action needs a, b >= 2");
  AtlasEntry e;
  e.name = parent_name(parent) + "(" + std::to_string(a * b) + ") on (" + std::to_string(a) + "," +
           std::to_string(b) + ")-partitions";
  e.parameters = {{"a", static_cast<std::int64_t>(a)}, {"b", static_cast<std::int64_t>(b)}};
  e.domain = objects::partition_domain(a, b);
  e.group = induce(natural(parent, a * b), e.domain, objects::partition_action, e.name);
  e.order_bound = natural_order(parent, a * b);
  BigInt deg = factorial(a * b);
  for (std::size_t i = 0; i < b; ++i) deg /= factorial(a);
  deg /= factorial(b);
  e.expected.degree = static_cast<std::size_t>(deg);
  e.expected.order = natural_order(parent, a * b);
  e.expected.provenance = Provenance::kDerived;
  e.expected.citation = "(ab)!/((a!)^b b!)";
  e.almost_simple = a * b >= 5;
  return e;
}

// ---------------------------------------------------------------------------
// Projective line

LabeledDomain projective_line(const Field& field) {
  std::vector<std::string> objs, labels;
  for (Point i = 0; i <= field.size(); ++i) {
    const Point one[] = {i};
    objs.push_back(objects::encode_points(one));
    labels.push_back(i == 0 ? "inf" : field.label(Element{i - 1}));
  }
  return LabeledDomain(std::move(objs), std::move(labels));
}

Permutation mobius(const Field& field, Element a, Element b, Element c, Element d) {
  if (field.sub(field.mul(a, d), field.mul(b, c)) == field.zero())
    throw Error(ErrorCode::kInvalidArgument, "singular matrix");
  const std::size_t n = field.size() + 1;
  std::vector<Point> img(n);
  img[0] = c == field.zero() ? 0 : static_cast<Point>(field.div(a, c).index + 1);
  for (Point i = 1; i < n; ++i) {
    const Element x{i - 1};
    const Element num = field.add(field.mul(a, x), b);
    const Element den = field.add(field.mul(c, x), d);
    img[i] = den == field.zero() ? 0 : static_cast<Point>(field.div(num, den).index + 1);
  }
  return Permutation::from_images(std::move(img));
}

Permutation frobenius_map(const Field& field) {
  const std::size_t n = field.size() + 1;
  std::vector<Point> img(n);
  img[0] = 0;
  for (Point i = 1; i < n; ++i)
    img[i] = static_cast<Point>(field.frobenius(Element{i - 1}, 1).index + 1);
  return Permutation::from_images(std::move(img));
}

std::vector<AtlasEntry> projective_groups(std::uint64_t q) {
  const auto [p, f] = prime_power(q);
  if (q < 4) throw Error(ErrorCode::kInvalidArgument, "projective_groups needs q >= 4");
  const Field field = Field::create(p, f);
  const Element lambda = field.primitive();
  const Element one = field.one(), zero = field.zero();
  const std::vector<Permutation> psl = {
      mobius(field, one, one, zero, one),
      mobius(field, field.mul(lambda, lambda), zero, zero, one),
      mobius(field, zero, neg_one(field), one, zero),
  };
  const Permutation delta = mobius(field, lambda, zero, zero, one);
  const Permutation phi = frobenius_map(field);
  const std::uint64_t d = p == 2 ? 1 : 2;
  const LabeledDomain line = projective_line(field);

  // Subgroups of Z_d x Z_f, each with a generating pair.
  using Elem = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<Elem> elems;
  for (std::uint64_t i = 0; i < d; ++i)
    for (std::uint64_t j = 0; j < f; ++j) elems.emplace_back(i, j);
  std::map<std::set<Elem>, std::pair<Elem, Elem>> subgroups;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      std::set<Elem> s;
      for (std::uint64_t a = 0; a < d * f; ++a)
        for (std::uint64_t b = 0; b < d * f; ++b)
          s.emplace((a * x.first + b * y.first) % d, (a * x.second + b * y.second) % f);
      subgroups.emplace(std::move(s), std::make_pair(x, y));
    }
  std::vector<std::pair<std::set<Elem>, std::pair<Elem, Elem>>> ordered(subgroups.begin(),
                                                                        subgroups.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& u, const auto& v) { return u.first.size() < v.first.size(); });

  auto word = [&](Elem e) {
    Permutation w(q + 1);
    for (std::uint64_t i = 0; i < e.first; ++i) w = w * delta;
    for (std::uint64_t j = 0; j < e.second; ++j) w = w * phi;
    return w;
  };
  const BigInt pgl_order = BigInt(q) * (BigInt(q) * q - 1);
  const std::string qs = std::to_string(q);

  std::vector<AtlasEntry> out;
  for (const auto& [s, gens] : ordered) {
    std::vector<Permutation> g = psl;
    std::string extra;
    for (const Elem& e : {gens.first, gens.second}) {
      if (e == Elem{0, 0}) continue;
      g.push_back(word(e));
    }
    AtlasEntry entry;
    const bool has_delta_only = s.size() == d && d == 2 && s.count({1, 0});
    const bool field_only = std::all_of(s.begin(), s.end(), [](const Elem& e) { return e.first == 0; });
    if (s.size() == 1)
      entry.name = "PSL2(" + qs + ")";
    else if (has_delta_only)
      entry.name = "PGL2(" + qs + ")";
    else if (s.size() == d * f)
      entry.name = "PGammaL2(" + qs + ")";
    else if (field_only && s.size() == f)
      entry.name = "PSigmaL2(" + qs + ")";
    else if (q == 9 && s.size() == 2 && s.count({1, 1}))
      entry.name = "M10";
    else {
      std::string desc;
      for (const Elem& e : {gens.first, gens.second}) {
        if (e == Elem{0, 0}) continue;
        if (!desc.empty()) desc += ", ";
        desc += quotient_word(e.first, e.second);
      }
      entry.name = "PSL2(" + qs + ").<" + desc + ">";
    }
    entry.group = GeneratedGroup(q + 1, std::move(g), entry.name);
    entry.domain = line;
    const auto chain = StabilizerChain::build(entry.group);
    std::vector<Permutation> with_pgl = entry.group.generators();
    with_pgl.push_back(delta);
    const BigInt joined = StabilizerChain::build(GeneratedGroup(q + 1, with_pgl)).order();
    const auto r = static_cast<std::uint64_t>(joined / pgl_order);
    // Pointwise stabilizer of inf, 0, 1: the field automorphisms inside G.
    const Point frame[] = {0, 1, 2};
    const auto h = static_cast<std::uint64_t>(chain.pointwise_stabilizer(frame).order());
    entry.parameters = {{"q", static_cast<std::int64_t>(q)},
                        {"p", static_cast<std::int64_t>(p)},
                        {"f", static_cast<std::int64_t>(f)},
                        {"r", static_cast<std::int64_t>(r)},
                        {"h", static_cast<std::int64_t>(h)},
                        {"index", static_cast<std::int64_t>(s.size())}};
    entry.expected.degree = q + 1;
    entry.expected.order = psl2_order(q) * s.size();
    entry.expected.ibis = r == 1 || (gf::is_prime(r) && f % r == 0);
    entry.expected.provenance = Provenance::kPaper;
    entry.expected.citation = "Example 1: IBIS iff r = 1 or r prime dividing f";
    if (chain.order() != *entry.expected.order)
      throw Error(ErrorCode::kVerificationFailed, entry.name + " has order " + chain.order().str());
    out.push_back(std::move(entry));
  }
  return out;
}

AtlasEntry projective_group(std::uint64_t q, const std::string& name) {
  auto all = projective_groups(q);
  std::string names;
  for (auto& e : all) {
    if (e.name == name) return std::move(e);
    names += (names.empty() ? "" : ", ") + e.name;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no group named " + name + " for q = " + std::to_string(q) + "; available: " + names);
}

AtlasEntry degree6_from_pgl25(Parent parent) {
  AtlasEntry e = projective_group(5, parent == Parent::kSym ? "PGL2(5)" : "PSL2(5)");
  e.name = parent == Parent::kSym ? "sym(5) = PGL2(5) on 6 points" : "alt(5) = PSL2(5) on 6 points";
  e.group.set_label(e.name);
  e.expected.ibis = true;
  e.expected.rank = 3;
  e.expected.citation = "Thm 1.2(2)";
  return e;
}

AtlasEntry degree6_cosets(Parent parent) {
  const AtlasEntry big = parent == Parent::kSym ? sym(6) : alt(6);
  const AtlasEntry small = projective_group(5, parent == Parent::kSym ? "PGL2(5)" : "PSL2(5)");
  // The projective line of GF(5) is already a 6-point set.
  const auto chain = StabilizerChain::build(big.group);
  auto action = coset_action(chain, small.group);
  AtlasEntry e;
  e.name = parent == Parent::kSym ? "sym(6) on cosets of PGL2(5)" : "alt(6) on cosets of PSL2(5)";
  e.group = action.group;
  e.group.set_label(e.name);
  e.domain = std::move(action.domain);
  e.order_bound = chain.order();
  e.expected.degree = 6;
  e.expected.order = chain.order();
  e.expected.ibis = true;
  e.expected.rank = parent == Parent::kSym ? 5 : 4;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Thm 1.2(3)";
  return e;
}

// ---------------------------------------------------------------------------
// Vector spaces over GF(2)

namespace {

std::string bit_label(std::uint32_t v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back((v >> i & 1) ? '1' : '0');
  return s;
}

LabeledDomain vector_domain(std::size_t n) {
  std::vector<std::string> objs, labels;
  for (std::uint32_t v = 1; v < (1u << n); ++v) {
    const Point one[] = {v - 1};
    objs.push_back(objects::encode_points(one));
    labels.push_back(bit_label(v, n));
  }
  return LabeledDomain(std::move(objs), std::move(labels));
}

template <typename Map>
Permutation linear_map(std::size_t n, Map&& m) {
  std::vector<Point> img((1u << n) - 1);
  for (std::uint32_t v = 1; v < (1u << n); ++v) img[v - 1] = static_cast<Point>(m(v) - 1);
  return Permutation::from_images(std::move(img));
}

// v -> v + v_j e_i
Permutation elementary_transvection(std::size_t n, std::size_t i, std::size_t j) {
  return linear_map(n, [&](std::uint32_t v) { return (v >> j & 1) ? v ^ (1u << i) : v; });
}

BigInt gl_n_2_order(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= (BigInt(1) << n) - (BigInt(1) << i);
  return r;
}

LabeledDomain hyperplane_domain(std::size_t n) {
  std::vector<std::string> objs, labels;
  for (std::uint32_t u = 1; u < (1u << n); ++u) {
    std::vector<Point> pts;
    for (std::uint32_t v = 1; v < (1u << n); ++v)
      if (std::popcount(u & v) % 2 == 0) pts.push_back(v - 1);
    objs.push_back(objects::encode_subset(pts));
    labels.push_back(bit_label(u, n) + "^perp");
  }
  return LabeledDomain(std::move(objs), std::move(labels));
}

}  // namespace

AtlasEntry sl_n_2_on_vectors(std::size_t n) {
  if (n < 2 || n > 6) throw Error(ErrorCode::kInvalidArgument, "SL_n(2) needs 2 <= n <= 6");
  AtlasEntry e;
  e.name = "SL" + std::to_string(n) + "(2) on vectors";
  e.parameters = {{"n", static_cast<std::int64_t>(n)}};
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gens.push_back(elementary_transvection(n, i, i + 1));
    gens.push_back(elementary_transvection(n, i + 1, i));
  }
  e.group = GeneratedGroup((1u << n) - 1, std::move(gens), e.name);
  e.domain = vector_domain(n);
  e.expected.degree = (1u << n) - 1;
  e.expected.order = gl_n_2_order(n);
  e.expected.ibis = true;
  e.expected.rank = n;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Example 3";
  e.almost_simple = n >= 3;
  return e;
}

AtlasEntry sl_n_2_on_hyperplanes(std::size_t n) {
  AtlasEntry v = sl_n_2_on_vectors(n);
  AtlasEntry e = v;
  e.name = "SL" + std::to_string(n) + "(2) on hyperplanes";
  e.domain = hyperplane_domain(n);
  e.group = induce(v.group, e.domain, objects::subset_action, e.name);
  e.order_bound = v.expected.order;
  e.expected.citation = "Thm 1.2(5), hyperplane action";
  return e;
}

AtlasEntry sp_n_2_on_vectors(std::size_t n) {
  if (n != 4 && n != 6) throw Error(ErrorCode::kInvalidArgument, "Sp_n(2) needs n in {4, 6}");
  const std::size_t m = n / 2;
  // Hyperbolic pairs (e_{2i}, e_{2i+1}).
  auto form = [&](std::uint32_t v, std::uint32_t w) {
    unsigned s = 0;
    for (std::size_t i = 0; i < m; ++i)
      s += ((v >> (2 * i)) & (w >> (2 * i + 1)) & 1) + ((v >> (2 * i + 1)) & (w >> (2 * i)) & 1);
    return s & 1;
  };
  BigInt order = BigInt(1) << (m * m);
  for (std::size_t i = 1; i <= m; ++i) order *= (BigInt(1) << (2 * i)) - 1;
  std::vector<Permutation> gens;
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    if (std::popcount(a) > 2) continue;
    gens.push_back(linear_map(n, [&](std::uint32_t v) { return form(v, a) ? v ^ a : v; }));
  }
  AtlasEntry e;
  e.name = "Sp" + std::to_string(n) + "(2) on vectors";
  e.parameters = {{"n", static_cast<std::int64_t>(n)}};
  e.group = GeneratedGroup((1u << n) - 1, std::move(gens), e.name);
  if (StabilizerChain::build(e.group).order() != order)
    throw Error(ErrorCode::kVerificationFailed, "symplectic transvections give the wrong order");
  e.domain = vector_domain(n);
  e.expected.degree = (1u << n) - 1;
  e.expected.order = order;
  e.expected.ibis = true;
  e.expected.rank = n;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Example 4";
  return e;
}

AtlasEntry sp4_2_derived() {
  const AtlasEntry sp = sp_n_2_on_vectors(4);
  AtlasEntry e = sp;
  e.name = "Sp4(2)' on vectors";
  e.group = derived_subgroup(StabilizerChain::build(sp.group));
  e.group.set_label(e.name);
  e.expected.order = 360;
  e.expected.citation = "Example 4, Sp4(2)' = Alt(6)";
  e.expected.rank.reset();
  return e;
}

std::pair<AtlasEntry, AtlasEntry> alt7_degree15_pair(std::uint64_t seed) {
  const AtlasEntry sl = sl_n_2_on_vectors(4);
  const auto chain = StabilizerChain::build(sl.group);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Permutation a = chain.random_element(rng);
    if (a.element_order() != 7) continue;
    Permutation b = chain.random_element(rng);
    GeneratedGroup h(15, {a, b});
    if (StabilizerChain::build(h).order() != 2520) continue;
    AtlasEntry points;
    points.name = "alt(7) on 15 vectors";
    points.parameters = {{"variant", 0}};
    points.group = GeneratedGroup(15, {a, b}, points.name);
    points.domain = sl.domain;
    points.seed = seed;
    points.expected.degree = 15;
    points.expected.order = 2520;
    points.expected.ibis = true;
    points.expected.provenance = Provenance::kPaper;
    points.expected.citation = "Thm 1.2(4), Example 10";
    AtlasEntry planes = points;
    planes.name = "alt(7) on 15 hyperplanes";
    planes.parameters = {{"variant", 1}};
    planes.domain = hyperplane_domain(4);
    planes.group = induce(points.group, planes.domain, objects::subset_action, planes.name);
    return {std::move(points), std::move(planes)};
  }
  throw Error(ErrorCode::kSearchExhausted, "no Alt(7) found in SL4(2); retry with another seed");
}

AtlasEntry alt7_degree15(Alt7Variant variant, std::uint64_t seed) {
  auto pair = alt7_degree15_pair(seed);
  return variant == Alt7Variant::kPoints ? std::move(pair.first) : std::move(pair.second);
}

// ---------------------------------------------------------------------------
// Example 7: dihedral subgroups of SL2(q), q even

namespace {

std::string encode_element(const Permutation& g) {
  std::string s;
  for (Point x : g.images()) s.push_back(static_cast<char>(x));
  return s;
}

Permutation decode_element(std::string_view s) {
  std::vector<Point> img;
  for (char c : s) img.push_back(static_cast<unsigned char>(c));
  return Permutation::from_images(std::move(img));
}

std::string encode_element_set(std::vector<std::string> elems) {
  std::sort(elems.begin(), elems.end());
  std::string out;
  for (auto& e : elems) out += e;
  return out;
}

struct DihedralData {
  AtlasEntry psl;
  std::vector<Permutation> h;  // the elements of H
  LabeledDomain conjugates;
  std::uint64_t seed;
};

DihedralData find_dihedral(std::uint64_t q, std::uint64_t seed) {
  const auto [p, f] = prime_power(q);
  if (p != 2 || q < 8 || q > 32)
    throw Error(ErrorCode::kInvalidArgument, "dihedral action needs q = 2^f with 8 <= q <= 32");
  DihedralData d{projective_group(q, "PSL2(" + std::to_string(q) + ")"), {}, {}, seed};
  const auto chain = StabilizerChain::build(d.psl.group);
  std::mt19937_64 rng(seed);
  Permutation a;
  for (int i = 0;; ++i) {
    if (i > 100000) throw Error(ErrorCode::kSearchExhausted, "no element of order q+1");
    a = chain.random_element(rng);
    if (a.element_order() == q + 1) break;
  }
  const Permutation a_inv = a.inverse();
  Permutation t;
  for (int i = 0;; ++i) {
    if (i > 100000) throw Error(ErrorCode::kSearchExhausted, "no inverting involution");
    Permutation g = chain.random_element(rng);
    const auto ord = g.element_order();
    if (ord % 2) continue;
    Permutation inv(q + 1);
    for (std::uint64_t k = 0; k < ord / 2; ++k) inv = inv * g;
    if (conjugate(a, inv) == a_inv) {
      t = inv;
      break;
    }
  }
  Permutation x(q + 1);
  for (std::uint64_t i = 0; i <= q; ++i) {
    d.h.push_back(x);
    d.h.push_back(x * t);
    x = x * a;
  }
  std::vector<std::string> start;
  for (const auto& e : d.h) start.push_back(encode_element(e));
  // Orbit of H under conjugation.
  std::vector<std::string> objs{encode_element_set(start)};
  std::unordered_map<std::string, std::size_t> seen{{objs[0], 0}};
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (const auto& g : d.psl.group.generators()) {
      std::vector<std::string> img;
      for (std::size_t k = 0; k < objs[i].size(); k += q + 1)
        img.push_back(encode_element(conjugate(decode_element(std::string_view(objs[i]).substr(k, q + 1)), g)));
      auto key = encode_element_set(std::move(img));
      if (seen.emplace(key, objs.size()).second) objs.push_back(std::move(key));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < objs.size(); ++i) labels.push_back(i == 0 ? "H" : "H^" + std::to_string(i));
  d.conjugates = LabeledDomain(std::move(objs), std::move(labels));
  return d;
}

std::string conjugation_action(std::string_view object, const Permutation& g) {
  const std::size_t n = g.degree();
  std::vector<std::string> img;
  for (std::size_t k = 0; k < object.size(); k += n)
    img.push_back(encode_element(conjugate(decode_element(object.substr(k, n)), g)));
  return encode_element_set(std::move(img));
}

}  // namespace

AtlasEntry dihedral_coset_action(std::uint64_t q, bool extended, std::uint64_t seed) {
  auto d = find_dihedral(q, seed);
  const auto [p, f] = prime_power(q);
  const std::string qs = std::to_string(q);
  GeneratedGroup parent = extended ? projective_group(q, "PGammaL2(" + qs + ")").group : d.psl.group;
  AtlasEntry e;
  e.name = std::string(extended ? "PGammaL2(" : "SL2(") + qs + ") on conjugates of D" +
           std::to_string(2 * (q + 1));
  e.parameters = {{"q", static_cast<std::int64_t>(q)}, {"extended", extended ? 1 : 0}};
  e.domain = d.conjugates;
  e.group = induce(parent, e.domain, conjugation_action, e.name);
  e.seed = seed;
  e.order_bound = psl2_order(q) * (extended ? f : 1);
  e.expected.degree = q * (q - 1) / 2;
  e.expected.order = *e.order_bound;
  e.expected.ibis = extended ? gf::is_prime(f) : true;
  e.expected.rank = 3;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = extended ? "Example 7, extension IBIS iff f prime" : "Example 7";
  if (extended && !gf::is_prime(f)) e.expected.rank.reset();
  return e;
}

DihedralCounting dihedral_counting(std::uint64_t q, std::uint64_t seed) {
  auto d = find_dihedral(q, seed);
  DihedralCounting out;
  out.conjugates = d.conjugates.size();
  const auto elements = enumerate_elements(StabilizerChain::build(d.psl.group));
  std::unordered_map<std::string, std::size_t> hits;
  for (const auto& g : elements)
    if (g.element_order() == 2) hits.emplace(encode_element(g), 0);
  out.involutions = hits.size();
  const std::size_t n = q + 1;
  for (const auto& obj : d.conjugates.objects())
    for (std::size_t k = 0; k < obj.size(); k += n) {
      auto it = hits.find(obj.substr(k, n));
      if (it != hits.end()) ++it->second;
    }
  for (const auto& [_, c] : hits) ++out.incidence[c];
  return out;
}

// ---------------------------------------------------------------------------
// Examples 8 and 9

AtlasEntry pair_decomposition_action(std::uint64_t q) {
  const auto [p, f] = prime_power(q);
  if (p != 2 || !gf::is_prime(f))
    throw Error(ErrorCode::kInvalidArgument, "pair decomposition needs q = 2^p with p prime");
  const std::string qs = std::to_string(q);
  const AtlasEntry pgaml = projective_group(q, "PGammaL2(" + qs + ")");
  AtlasEntry e;
  e.name = "PGammaL2(" + qs + ") on decompositions";
  e.parameters = {{"q", static_cast<std::int64_t>(q)}};
  std::vector<std::string> objs, labels;
  for (const auto& s : objects::k_subsets_colex(q + 1, 2)) {
    objs.push_back(objects::encode_points(s));
    labels.push_back("{" + pgaml.domain.label(s[0]) + "," + pgaml.domain.label(s[1]) + "}");
  }
  e.domain = LabeledDomain(std::move(objs), std::move(labels));
  e.group = induce(pgaml.group, e.domain, objects::subset_action, e.name);
  e.order_bound = *pgaml.expected.order;
  e.expected.degree = q * (q + 1) / 2;
  e.expected.order = *pgaml.expected.order;
  e.expected.ibis = true;
  e.expected.rank = 3;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Example 8";
  return e;
}

AtlasEntry subfield_coset_action(std::uint64_t q0) {
  const auto [p, f0] = prime_power(q0);
  if (p != 2 || q0 < 2 || q0 > 32)
    throw Error(ErrorCode::kInvalidArgument, "subfield coset action needs q0 = 2^e <= 32");
  const std::uint64_t q = q0 * q0;
  const Field field = Field::create(2, 2 * f0);
  const Element one = field.one(), zero = field.zero();
  const Element omega = field.pow(field.primitive(), (q - 1) / (q0 - 1));
  const AtlasEntry g = projective_group(q, "PSL2(" + std::to_string(q) + ")");
  GeneratedGroup h(q + 1, {mobius(field, one, one, zero, one), mobius(field, omega, zero, zero, one),
                           mobius(field, zero, one, one, zero)});
  const auto chain = StabilizerChain::build(g.group);
  auto action = coset_action(chain, h);
  AtlasEntry e;
  e.name = "SL2(" + std::to_string(q) + ") on cosets of SL2(" + std::to_string(q0) + ")";
  e.parameters = {{"q0", static_cast<std::int64_t>(q0)}};
  e.group = action.group;
  e.group.set_label(e.name);
  e.domain = std::move(action.domain);
  e.order_bound = chain.order();
  e.expected.degree = static_cast<std::size_t>(psl2_order(q) / psl2_order(q0));
  e.expected.order = chain.order();
  e.expected.ibis = true;
  e.expected.rank = 3;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Example 9";
  return e;
}

// ---------------------------------------------------------------------------
// Mathieu groups and the diagonal family

std::string data_dir() {
  if (const char* env = std::getenv("IBIS_DATA_DIR"); env && *env) return env;
#ifdef IBIS_DATA_DIR
  return IBIS_DATA_DIR;
#else
  return "data";
#endif
}

AtlasEntry mathieu(const std::string& name) {
  static const std::set<std::string> kNames = {"M11", "M12", "M22", "M23", "M24"};
  if (!kNames.count(name)) throw Error(ErrorCode::kInvalidArgument, "unknown Mathieu group " + name);
  const auto path = std::filesystem::path(data_dir()) / "mathieu" / (name + ".json");
  GroupFile file = load_group_file(path.string());
  if (!file.order) throw Error(ErrorCode::kParse, path.string() + " has no order");
  AtlasEntry e;
  e.name = name;
  e.group = file.group;
  e.group.set_label(name);
  e.domain = numbered_domain(e.group.degree());
  e.expected.degree = e.group.degree();
  e.expected.order = BigInt(*file.order);
  e.expected.ibis = true;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Example 2";
  // Two chains with different base hints must agree with the file.
  const auto a = StabilizerChain::build(e.group);
  std::vector<Point> hint(e.group.degree());
  std::iota(hint.rbegin(), hint.rend(), Point{0});
  const auto b = StabilizerChain::build(e.group, hint);
  if (a.order() != *e.expected.order || b.order() != *e.expected.order)
    throw Error(ErrorCode::kVerificationFailed, name + " generators give order " + a.order().str());
  return e;
}

AtlasEntry diagonal_psl2(unsigned f) {
  if (f != 2 && f != 3) throw Error(ErrorCode::kInvalidArgument, "diagonal_psl2 needs f in {2, 3}");
  const std::uint64_t q = std::uint64_t{1} << f;
  const AtlasEntry t = projective_group(q, "PSL2(" + std::to_string(q) + ")");
  const auto elements = enumerate_elements(StabilizerChain::build(t.group));
  std::vector<std::string> objs, labels;
  for (const auto& g : elements) {
    objs.push_back(encode_element(g));
    labels.push_back(render_cycles(g));
  }
  LabeledDomain domain(std::move(objs), std::move(labels));
  std::vector<Permutation> gens;
  for (const auto& s : t.group.generators()) {
    const Permutation s_inv = s.inverse();
    std::vector<Point> left(elements.size()), right(elements.size());
    for (Point i = 0; i < elements.size(); ++i) {
      left[i] = domain.index_of(encode_element(s_inv * elements[i]));
      right[i] = domain.index_of(encode_element(elements[i] * s));
    }
    gens.push_back(Permutation::from_images(std::move(left)));
    gens.push_back(Permutation::from_images(std::move(right)));
  }
  AtlasEntry e;
  e.name = "PSL2(" + std::to_string(q) + ") x PSL2(" + std::to_string(q) + ") diagonal";
  e.parameters = {{"f", static_cast<std::int64_t>(f)}};
  e.group = GeneratedGroup(elements.size(), std::move(gens), e.name);
  e.domain = std::move(domain);
  e.order_bound = psl2_order(q) * psl2_order(q);
  e.expected.degree = elements.size();
  e.expected.order = *e.order_bound;
  e.expected.ibis = true;
  e.expected.provenance = Provenance::kPaper;
  e.expected.citation = "Thm 1.1, diagonal family of degree 2^f(4^f-1)";
  e.almost_simple = false;
  return e;
}

// ---------------------------------------------------------------------------
// Witness sequences

namespace {

std::vector<Point> subsets_to_points(std::size_t n, std::size_t k,
                                     const std::vector<std::vector<Point>>& one_indexed) {
  const auto domain = objects::subset_domain(n, k);
  std::vector<Point> out;
  for (auto s : one_indexed) {
    for (auto& x : s) --x;
    out.push_back(domain.index_of(objects::encode_subset(s)));
  }
  return out;
}

std::int64_t need(const std::map<std::string, std::int64_t>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(ErrorCode::kInvalidArgument, "missing parameter " + key);
  return it->second;
}

}  // namespace

std::vector<Point> witness_points(const std::string& case_id,
                                  const std::map<std::string, std::int64_t>& params) {
  if (case_id == "sym8-3subsets-long")
    return subsets_to_points(8, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 2, 7}, {1, 3, 4}});
  if (case_id == "sym8-3subsets-short" || case_id == "alt8-3subsets-long")
    return subsets_to_points(8, 3, {{1, 2, 3}, {4, 5, 6}, {1, 4, 7}, {2, 5, 8}});
  if (case_id == "alt8-3subsets-short")
    return subsets_to_points(8, 3, {{1, 2, 3}, {1, 4, 5}, {2, 3, 6}});
  if (case_id == "partitions-a2-chain") {
    const auto b = static_cast<std::size_t>(need(params, "b"));
    if (b < 4) throw Error(ErrorCode::kInvalidArgument, "partitions-a2-chain needs b >= 4");
    const auto domain = objects::partition_domain(2, b);
    std::vector<Point> out;
    // alpha_1 is the standard partition; alpha_i swaps 2 and 2i. The printed
    // alpha_4 repeats 8, {7,2} is used instead of {7,8}.
    for (Point i = 1; i <= 4; ++i) {
      std::vector<std::vector<Point>> blocks;
      for (Point j = 0; j < b; ++j) blocks.push_back({2 * j, 2 * j + 1});
      if (i > 1) std::swap(blocks[0][1], blocks[i - 1][1]);
      out.push_back(domain.index_of(objects::encode_partition(blocks)));
    }
    return out;
  }
  if (case_id == "partitions-alpha-chain") {
    const auto a = static_cast<std::size_t>(need(params, "a"));
    const auto b = static_cast<std::size_t>(need(params, "b"));
    if (a < 3 || b < 2) throw Error(ErrorCode::kInvalidArgument, "partitions-alpha-chain needs a >= 3, b >= 2");
    const auto domain = objects::partition_domain(a, b);
    std::vector<std::vector<Point>> standard;
    for (Point j = 0; j < b; ++j) {
      standard.emplace_back();
      for (Point i = 0; i < a; ++i) standard.back().push_back(static_cast<Point>(j * a + i));
    }
    std::vector<Point> out{domain.index_of(objects::encode_partition(standard))};
    for (std::size_t pair = 0; 2 * pair + 1 < b; ++pair)
      for (std::size_t i = 0; i + 1 < a; ++i) {
        auto blocks = standard;
        std::swap(blocks[2 * pair][i], blocks[2 * pair + 1][i]);
        out.push_back(domain.index_of(objects::encode_partition(blocks)));
      }
    return out;
  }
  if (case_id == "ksubsets-alpha-beta") {
    const auto n = static_cast<Point>(need(params, "n"));
    const auto k = static_cast<Point>(need(params, "k"));
    const bool is_alt = params.count("alt") && params.at("alt") != 0;
    if (k < 3 || n < 2 * k - 2) throw Error(ErrorCode::kInvalidArgument, "ksubsets-alpha-beta needs k >= 3");
    std::vector<std::vector<Point>> sets;
    for (Point last = k; last <= n - 1; ++last) {
      std::vector<Point> s;
      for (Point x = 1; x < k; ++x) s.push_back(x);
      s.push_back(last);
      sets.push_back(s);
    }
    const Point betas = is_alt ? k - 3 : k - 2;
    for (Point j = 1; j <= betas; ++j) {
      std::vector<Point> s{j};
      for (Point x = k; x <= 2 * k - 2; ++x) s.push_back(x);
      sets.push_back(s);
    }
    return subsets_to_points(n, k, sets);
  }
  if (case_id == "2subsets-alpha") {
    const auto n = static_cast<Point>(need(params, "n"));
    const bool is_alt = params.count("alt") && params.at("alt") != 0;
    std::vector<std::vector<Point>> sets;
    for (Point i = 2; i <= n - 2; ++i) sets.push_back({1, i});
    if (!is_alt) sets.push_back({1, n});
    return subsets_to_points(n, 2, sets);
  }
  throw Error(ErrorCode::kUnknownCase, "unknown witness case " + case_id);
}

// ---------------------------------------------------------------------------
// Registry

namespace {

std::int64_t int_param(const std::map<std::string, std::string>& params, const std::string& key,
                       std::optional<std::int64_t> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw Error(ErrorCode::kInvalidArgument, "missing parameter " + key);
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "parameter " + key + " is not an integer: " + it->second);
  }
}

std::string str_param(const std::map<std::string, std::string>& params, const std::string& key,
                      std::optional<std::string> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  if (fallback) return *fallback;
  throw Error(ErrorCode::kInvalidArgument, "missing parameter " + key);
}

Parent parent_param(const std::map<std::string, std::string>& params) {
  const auto p = str_param(params, "parent", "sym");
  if (p == "sym") return Parent::kSym;
  if (p == "alt") return Parent::kAlt;
  throw Error(ErrorCode::kInvalidArgument, "parent must be sym or alt");
}

std::size_t size_param(const std::map<std::string, std::string>& params, const std::string& key,
                       std::optional<std::int64_t> fallback = std::nullopt) {
  const auto v = int_param(params, key, fallback);
  if (v < 0) throw Error(ErrorCode::kInvalidArgument, "parameter " + key + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<BuilderInfo> list_builders() {
  return {
      {"sym", "n", "Sym(n) on n points"},
      {"alt", "n", "Alt(n) on n points"},
      {"subsets", "parent n k", "Sym(n) or Alt(n) on k-subsets"},
      {"partitions", "parent a b", "Sym(ab) or Alt(ab) on partitions into b parts of size a"},
      {"projective", "q group", "PSL2(q) <= G <= PGammaL2(q) on the projective line (group=PSL2(q), M10, ...)"},
      {"degree6", "parent", "Alt(5) = PSL2(5) or Sym(5) = PGL2(5) on 6 points"},
      {"degree6-cosets", "parent", "Alt(6) or Sym(6) on the cosets of PSL2(5) or PGL2(5)"},
      {"sl-vectors", "n", "SL_n(2) on nonzero vectors"},
      {"sl-hyperplanes", "n", "SL_n(2) on hyperplanes"},
      {"sp-vectors", "n", "Sp_n(2) on nonzero vectors, n in {4, 6}"},
      {"sp4-derived", "", "Sp4(2)' on nonzero vectors"},
      {"alt7", "variant seed", "Alt(7) < SL4(2) on vectors (variant=points) or hyperplanes"},
      {"dihedral", "q extended seed", "SL2(q) or PGammaL2(q) on the conjugates of D_2(q+1)"},
      {"pair-decomposition", "q", "PGammaL2(q) on unordered pairs of projective points"},
      {"subfield-cosets", "q0", "SL2(q0^2) on the cosets of SL2(q0)"},
      {"mathieu", "name", "M11, M12, M22, M23 or M24"},
      {"diagonal-psl2", "f", "PSL2(2^f) x PSL2(2^f) on PSL2(2^f)"},
  };
}

AtlasEntry build(const std::string& name, const std::map<std::string, std::string>& params) {
  if (name == "sym") return sym(size_param(params, "n"));
  if (name == "alt") return alt(size_param(params, "n"));
  if (name == "subsets")
    return on_k_subsets(parent_param(params), size_param(params, "n"), size_param(params, "k"));
  if (name == "partitions")
    return on_partitions(parent_param(params), size_param(params, "a"), size_param(params, "b"));
  if (name == "projective") {
    const auto q = size_param(params, "q");
    return projective_group(q, str_param(params, "group", "PSL2(" + std::to_string(q) + ")"));
  }
  if (name == "degree6") return degree6_from_pgl25(parent_param(params));
  if (name == "degree6-cosets") return degree6_cosets(parent_param(params));
  if (name == "sl-vectors") return sl_n_2_on_vectors(size_param(params, "n"));
  if (name == "sl-hyperplanes") return sl_n_2_on_hyperplanes(size_param(params, "n"));
  if (name == "sp-vectors") return sp_n_2_on_vectors(size_param(params, "n"));
  if (name == "sp4-derived") return sp4_2_derived();
  if (name == "alt7") {
    const auto v = str_param(params, "variant", "points");
    if (v != "points" && v != "hyperplanes")
      throw Error(ErrorCode::kInvalidArgument, "variant must be points or hyperplanes");
    return alt7_degree15(v == "points" ? Alt7Variant::kPoints : Alt7Variant::kHyperplanes,
                         size_param(params, "seed", 7));
  }
  if (name == "dihedral")
    return dihedral_coset_action(size_param(params, "q"), int_param(params, "extended", 0) != 0,
                                 size_param(params, "seed", 11));
  if (name == "pair-decomposition") return pair_decomposition_action(size_param(params, "q"));
  if (name == "subfield-cosets") return subfield_coset_action(size_param(params, "q0"));
  if (name == "mathieu") return mathieu(str_param(params, "name"));
  if (name == "diagonal-psl2") return diagonal_psl2(static_cast<unsigned>(size_param(params, "f")));
  throw Error(ErrorCode::kUnknownCase, "unknown atlas builder " + name);
}

}  // namespace ibis::atlas
