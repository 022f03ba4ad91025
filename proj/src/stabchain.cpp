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

#include "ibis/stabchain.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "ibis/error.hpp"

namespace ibis {

namespace {

using Level = StabilizerChain::Level;

// g <- g * u_b^{-1}, i.e. first g, then the inverse coset representative.
void apply_inverse_rep(const Level& level, Point b, Permutation& g, Permutation& tmp) {
  if (level.explicit_reps) {
    compose_into(g, level.inverse_reps[level.position[b]], tmp);
    std::swap(g, tmp);
    return;
  }
  while (b != level.base) {
    const auto& s_inv = level.inverse_generators[static_cast<std::size_t>(level.edge[b])];
    compose_into(g, s_inv, tmp);
    std::swap(g, tmp);
    b = s_inv[b];
  }
}

Permutation rep_of(const Level& level, Point b, std::size_t degree) {
  if (level.explicit_reps) return level.inverse_reps[level.position[b]].inverse();
  // Walk back to the base, then multiply the path in forward order.
  std::vector<std::size_t> path;
  while (b != level.base) {
    const auto k = static_cast<std::size_t>(level.edge[b]);
    path.push_back(k);
    b = level.inverse_generators[k][b];
  }
  Permutation u(degree), tmp(degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    compose_into(u, level.generators[*it], tmp);
    std::swap(u, tmp);
  }
  return u;
}

Level make_level(Point base, std::size_t degree) {
  Level level;
  level.base = base;
  level.orbit.push_back(base);
  level.edge.assign(degree, -2);
  level.edge[base] = -1;
  level.position.assign(degree, 0);
  level.inverse_reps.emplace_back(degree);
  level.explicit_reps = degree <= StabilizerChain::kExplicitTableLimit;
  if (!level.explicit_reps) level.inverse_reps.clear();
  return level;
}

class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, std::span<const Point> hint) : chain_(degree), degree_(degree) {
    std::vector<bool> seen(degree, false);
    for (Point x : hint) {
      if (x >= degree)
        throw Error(ErrorCode::kInvalidArgument, "base hint point out of range");
      if (seen[x]) continue;
      seen[x] = true;
      add_level(x);
    }
  }

  std::size_t length() const { return chain_.length(); }

  // The full generating set goes on level 0 so that level 0 generates G.
  void seed_top_level(std::span<const Permutation> gens) {
    if (length() == 0) add_level(*gens.front().first_moved());
    for (const auto& s : gens) add_generator(0, s);
  }

  void add_level(Point base) {
    chain_.mutable_levels().push_back(make_level(base, degree_));
    checked_.emplace_back();
  }

  void add_generator(std::size_t li, const Permutation& g) {
    auto& level = chain_.mutable_levels()[li];
    level.generators.push_back(g);
    level.inverse_generators.push_back(g.inverse());
    checked_[li].push_back(0);
    extend_orbit(level, level.generators.size() - 1);
  }

  // h passed levels [0, fail) and stopped at `fail`; it belongs to every
  // level in [lo, fail].
  void add_residue(const Permutation& h, std::size_t lo, std::size_t fail) {
    if (fail == length()) add_level(*h.first_moved());
    for (std::size_t l = lo; l <= fail; ++l) add_generator(l, h);
  }

  std::pair<Permutation, std::size_t> sift_from(Permutation g, std::size_t start) const {
    Permutation tmp(degree_);
    const auto& levels = chain_.levels();
    for (std::size_t i = start; i < levels.size(); ++i) {
      const Point b = g[levels[i].base];
      if (!levels[i].in_orbit(b)) return {std::move(g), i};
      apply_inverse_rep(levels[i], b, g, tmp);
    }
    return {std::move(g), levels.size()};
  }

  BigInt product() const {
    BigInt p = 1;
    for (const auto& level : chain_.levels()) p *= level.orbit.size();
    return p;
  }

  template <typename RandomSource>
  bool random_phase(RandomSource&& next, const std::optional<BigInt>& bound,
                    std::size_t patience) {
    std::size_t quiet = 0;
    while (true) {
      if (bound && product() == *bound) return true;
      if (quiet >= patience) return false;
      auto [h, fail] = sift_from(next(), 0);
      if (h.is_identity()) {
        ++quiet;
        continue;
      }
      quiet = 0;
      add_residue(h, fail == 0 ? 0 : 1, fail);
    }
  }

  // Sims' algorithm: every Schreier generator of level i must sift through
  // levels below i. Checked (orbit point, generator) pairs stay valid because
  // orbits and generator lists only grow and transversal entries never change.
  void deterministic_phase() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(length()) - 1;
    Permutation tmp(degree_);
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      bool restarted = false;
      for (std::size_t k = 0; k < chain_.levels()[li].generators.size() && !restarted; ++k) {
        while (checked_[li][k] < chain_.levels()[li].orbit.size()) {
          const auto& level = chain_.levels()[li];
          const Point beta = level.orbit[checked_[li][k]++];
          const auto& s = level.generators[k];
          Permutation g = compose(rep_of(level, beta, degree_), s);
          apply_inverse_rep(level, s[beta], g, tmp);
          if (g.is_identity()) continue;
          auto [h, fail] = sift_from(std::move(g), li + 1);
          if (h.is_identity()) continue;
          add_residue(h, li + 1, fail);
          i = static_cast<std::ptrdiff_t>(fail);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }

  StabilizerChain finish(bool keep_trivial) {
    if (!keep_trivial) {
      auto& levels = chain_.mutable_levels();
      levels.erase(std::remove_if(levels.begin(), levels.end(),
                                  [](const Level& l) { return l.orbit.size() == 1; }),
                   levels.end());
    }
    return std::move(chain_);
  }

 private:
  void extend_orbit(Level& level, std::size_t first_new_gen) {
    const std::size_t old_size = level.orbit.size();
    for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
      const std::size_t k0 = pos < old_size ? first_new_gen : 0;
      for (std::size_t k = k0; k < level.generators.size(); ++k) {
        const Point c = level.orbit[pos];
        const Point y = level.generators[k][c];
        if (level.edge[y] != -2) continue;
        level.edge[y] = static_cast<std::int32_t>(k);
        level.position[y] = static_cast<std::uint32_t>(level.orbit.size());
        level.orbit.push_back(y);
        if (!level.explicit_reps) continue;
        if (level.orbit.size() * degree_ > StabilizerChain::kExplicitTableLimit) {
          level.explicit_reps = false;
          level.inverse_reps.clear();
          level.inverse_reps.shrink_to_fit();
          continue;
        }
        level.inverse_reps.push_back(
            compose(level.inverse_generators[k], level.inverse_reps[pos]));
      }
    }
  }

  StabilizerChain chain_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> checked_;
};

// Product replacement over the generators, seeded for reproducibility.
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, std::size_t degree, std::uint64_t seed)
      : rng_(seed), acc_(degree) {
    const std::size_t n = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < n; ++i) state_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 50; ++i) (void)next();
  }

  Permutation next() {
    const std::size_t n = state_.size();
    const std::size_t i = rng_() % n;
    std::size_t j = rng_() % (n - 1);
    if (j >= i) ++j;
    if (rng_() & 1)
      state_[i] = compose(state_[i], state_[j]);
    else
      state_[i] = compose(state_[j], state_[i]);
    acc_ = compose(acc_, state_[i]);
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> state_;
  Permutation acc_;
};

}  // namespace

StabilizerChain StabilizerChain::build(const GeneratedGroup& g,
                                       std::span<const Point> base_hint,
                                       const ChainOptions& options) {
  ChainBuilder builder(g.degree(), base_hint);
  if (g.is_trivial()) return builder.finish(options.keep_trivial_levels);
  builder.seed_top_level(g.generators());
  ProductReplacement pr(g.generators(), g.degree(), options.seed);
  const bool certified =
      builder.random_phase([&] { return pr.next(); }, options.order_bound,
                           options.order_bound ? 200 : 40);
  if (!certified) builder.deterministic_phase();
  return builder.finish(options.keep_trivial_levels);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt p = 1;
  for (const auto& l : levels_) p *= l.orbit.size();
  return p;
}

const std::vector<Permutation>& StabilizerChain::generators() const {
  static const std::vector<Permutation> kNone;
  return levels_.empty() ? kNone : levels_.front().generators;
}

GeneratedGroup StabilizerChain::group(std::string label) const {
  return GeneratedGroup(degree_, generators(), std::move(label));
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation p) const {
  if (p.degree() != degree_)
    throw Error(ErrorCode::kDegreeMismatch, "permutation degree " + std::to_string(p.degree()) +
                                                " vs chain degree " + std::to_string(degree_));
  Permutation tmp(degree_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Point b = p[levels_[i].base];
    if (!levels_[i].in_orbit(b)) return {std::move(p), i};
    apply_inverse_rep(levels_[i], b, p, tmp);
  }
  return {std::move(p), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& p) const {
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

Permutation StabilizerChain::transversal_element(std::size_t level, Point b) const {
  const auto& l = levels_.at(level);
  if (b >= degree_ || !l.in_orbit(b))
    throw Error(ErrorCode::kInvalidArgument, "point not in basic orbit");
  return rep_of(l, b, degree_);
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_), tmp(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    const Point b = it->orbit[rng() % it->orbit.size()];
    compose_into(g, rep_of(*it, b, degree_), tmp);
    std::swap(g, tmp);
  }
  return g;
}

StabilizerChain StabilizerChain::rebased(std::span<const Point> hint,
                                         bool keep_trivial_levels) const {
  ChainBuilder builder(degree_, hint);
  if (is_trivial()) return builder.finish(keep_trivial_levels);
  builder.seed_top_level(generators());
  std::mt19937_64 rng(0x5eed ^ (hint.empty() ? 0 : hint.front()));
  const BigInt target = order();
  while (builder.product() != target) {
    auto [h, fail] = builder.sift_from(random_element(rng), 0);
    if (!h.is_identity()) builder.add_residue(h, fail == 0 ? 0 : 1, fail);
  }
  return builder.finish(keep_trivial_levels);
}

StabilizerChain StabilizerChain::stabilizer(Point x) const {
  if (x >= degree_) throw Error(ErrorCode::kInvalidArgument, "point out of range");
  if (fixes(x)) return *this;
  const Point hint[] = {x};
  auto chain = rebased(hint);
  chain.levels_.erase(chain.levels_.begin());
  return chain;
}

StabilizerChain StabilizerChain::pointwise_stabilizer(std::span<const Point> xs) const {
  for (Point x : xs)
    if (x >= degree_) throw Error(ErrorCode::kInvalidArgument, "point out of range");
  if (xs.empty() || is_trivial()) return *this;
  auto chain = rebased(xs);
  // Hint levels come first; the ones the group fixed were dropped.
  std::vector<bool> in_hint(degree_, false);
  for (Point x : xs) in_hint[x] = true;
  std::size_t drop = 0;
  while (drop < chain.levels_.size() && in_hint[chain.levels_[drop].base]) ++drop;
  chain.levels_.erase(chain.levels_.begin(), chain.levels_.begin() + static_cast<std::ptrdiff_t>(drop));
  return chain;
}

std::vector<Point> StabilizerChain::fixed_points() const {
  std::vector<Point> out;
  for (Point x = 0; x < degree_; ++x)
    if (fixes(x)) out.push_back(x);
  return out;
}

bool StabilizerChain::fixes(Point x) const {
  for (const auto& g : generators())
    if (g[x] != x) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<Point> orbit_of(std::size_t degree, std::span<const Permutation> generators,
                            Point x) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : generators) {
      const Point y = s[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  return orbit;
}

OrbitPartition orbits(std::size_t degree, std::span<const Permutation> generators) {
  OrbitPartition out;
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  out.cell_of.assign(degree, kUnset);
  for (Point x = 0; x < degree; ++x) {
    if (out.cell_of[x] != kUnset) continue;
    auto cell = orbit_of(degree, generators, x);
    const auto idx = static_cast<std::uint32_t>(out.cells.size());
    for (Point y : cell) out.cell_of[y] = idx;
    std::sort(cell.begin(), cell.end());
    out.representatives.push_back(x);
    out.cells.push_back(std::move(cell));
  }
  return out;
}

OrbitPartition orbits(const GeneratedGroup& g) { return orbits(g.degree(), g.generators()); }

std::vector<Point> fixed_points(const GeneratedGroup& g) {
  std::vector<Point> out;
  for (Point x = 0; x < g.degree(); ++x) {
    bool fixed = true;
    for (const auto& s : g.generators())
      if (s[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

bool is_transitive(const GeneratedGroup& g) {
  if (g.degree() == 0) return true;
  return orbit_of(g.degree(), g.generators(), 0).size() == g.degree();
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace

std::vector<Point> minimal_block(const GeneratedGroup& g, Point a, Point b) {
  UnionFind uf(g.degree());
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators())
      if (uf.unite(s[x], s[y])) queue.emplace_back(s[x], s[y]);
  }
  std::vector<Point> block;
  const auto root = uf.find(a);
  for (Point x = 0; x < g.degree(); ++x)
    if (uf.find(x) == root) block.push_back(x);
  return block;
}

bool is_primitive(const GeneratedGroup& g) {
  if (!is_transitive(g))
    throw Error(ErrorCode::kInvalidArgument, "primitivity test needs a transitive group");
  if (g.degree() <= 2) return true;
  // A block through 0 and b is the block through 0 and any G_0-image of b,
  // so one candidate per G_0-orbit suffices.
  const auto stab = point_stabilizer(g, 0);
  const auto parts = orbits(stab);
  for (Point rep : parts.representatives) {
    if (rep == 0) continue;
    if (minimal_block(g, 0, rep).size() < g.degree()) return false;
  }
  return true;
}

GeneratedGroup point_stabilizer(const StabilizerChain& chain, Point x) {
  return chain.stabilizer(x).group();
}

GeneratedGroup point_stabilizer(const GeneratedGroup& g, Point x) {
  if (x >= g.degree()) throw Error(ErrorCode::kInvalidArgument, "point out of range");
  const Point hint[] = {x};
  auto chain = StabilizerChain::build(g, hint);
  return chain.stabilizer(x).group();
}

GeneratedGroup pointwise_stabilizer(const GeneratedGroup& g, std::span<const Point> xs) {
  if (xs.empty()) return g;
  auto chain = StabilizerChain::build(g, xs);
  return chain.pointwise_stabilizer(xs).group();
}

// ---------------------------------------------------------------------------

namespace {

// Canonical image of g's base over the coset H*x: at each level pick the
// basic-orbit point whose image under the running element is least.
std::string coset_key(const StabilizerChain& h_on_g_base, const Permutation& x) {
  Permutation y = x;
  std::vector<Point> key;
  key.reserve(h_on_g_base.length());
  for (std::size_t i = 0; i < h_on_g_base.length(); ++i) {
    const auto& level = h_on_g_base.levels()[i];
    Point best = level.orbit.front();
    for (Point beta : level.orbit)
      if (y[beta] < y[best]) best = beta;
    if (best != level.base) y = compose(h_on_g_base.transversal_element(i, best), y);
    key.push_back(y[level.base]);
  }
  return objects::encode_points(key);
}

}  // namespace

CosetAction coset_action(const StabilizerChain& g_chain, const GeneratedGroup& h,
                         std::size_t index_bound) {
  if (h.degree() != g_chain.degree())
    throw Error(ErrorCode::kDegreeMismatch, "subgroup degree differs from group degree");
  for (const auto& s : h.generators())
    if (!g_chain.contains(s))
      throw Error(ErrorCode::kNotASubgroup, "subgroup generator " + render_cycles(s) +
                                                " is not in the group");
  const auto h_chain = StabilizerChain::build(h);
  const BigInt index = g_chain.order() / h_chain.order();
  if (index > index_bound)
    throw Error(ErrorCode::kIndexTooLarge,
                "coset index " + index.str() + " exceeds bound " + std::to_string(index_bound));
  const auto g_base = g_chain.base();
  const auto h_on_base = h_chain.rebased(g_base, /*keep_trivial_levels=*/true);

  std::vector<Permutation> reps{Permutation(g_chain.degree())};
  std::vector<std::string> keys{coset_key(h_on_base, reps.front())};
  std::unordered_map<std::string, Point> index_of{{keys.front(), 0}};
  const auto& gens = g_chain.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = compose(reps[i], gens[k]);
      auto key = coset_key(h_on_base, y);
      auto [it, inserted] = index_of.emplace(key, static_cast<Point>(reps.size()));
      if (inserted) {
        if (reps.size() >= index_bound)
          throw Error(ErrorCode::kIndexTooLarge, "coset enumeration exceeded the index bound");
        reps.push_back(std::move(y));
        keys.push_back(std::move(key));
      }
      images[k].push_back(it->second);
    }
  }
  std::vector<Permutation> induced;
  for (auto& img : images) induced.push_back(Permutation::from_images(std::move(img)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < reps.size(); ++i) labels.push_back("H*c" + std::to_string(i + 1));
  return {GeneratedGroup(reps.size(), std::move(induced), h.label().empty() ? "" : "cosets of " + h.label()),
          LabeledDomain(std::move(keys), std::move(labels))};
}

GeneratedGroup normal_closure(const StabilizerChain& chain, std::span<const Permutation> gens) {
  std::vector<Permutation> n_gens;
  for (const auto& s : gens)
    if (!s.is_identity()) n_gens.push_back(s);
  GeneratedGroup n(chain.degree(), n_gens);
  auto n_chain = StabilizerChain::build(n);
  for (std::size_t i = 0; i < n_gens.size(); ++i) {
    for (const auto& g : chain.generators()) {
      Permutation c = conjugate(n_gens[i], g);
      if (n_chain.contains(c)) continue;
      n_gens.push_back(std::move(c));
      n_chain = StabilizerChain::build(GeneratedGroup(chain.degree(), n_gens));
    }
  }
  return GeneratedGroup(chain.degree(), std::move(n_gens));
}

GeneratedGroup derived_subgroup(const StabilizerChain& chain) {
  std::vector<Permutation> comms;
  const auto& gens = chain.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(chain, comms);
}

std::vector<Permutation> enumerate_elements(const StabilizerChain& chain, std::size_t limit) {
  if (chain.order() > limit)
    throw Error(ErrorCode::kInvalidArgument, "group order exceeds enumeration limit");
  std::vector<Permutation> out{Permutation(chain.degree())};
  // Elements are products u_{L-1} * ... * u_0 (left to right).
  for (std::size_t li = chain.length(); li-- > 0;) {
    const auto& level = chain.levels()[li];
    std::vector<Permutation> reps;
    for (Point b : level.orbit) reps.push_back(chain.transversal_element(li, b));
    std::vector<Permutation> next;
    next.reserve(out.size() * reps.size());
    for (const auto& e : out)
      for (const auto& u : reps) next.push_back(compose(e, u));
    out = std::move(next);
  }
  return out;
}

std::optional<std::vector<Point>> equivalence_map(const GeneratedGroup& a,
                                                  const GeneratedGroup& b) {
  if (a.degree() != b.degree() || a.generators().size() != b.generators().size())
    return std::nullopt;
  const std::size_t n = a.degree();
  if (n == 0) return std::vector<Point>{};
  constexpr auto kUnset = static_cast<Point>(-1);
  for (Point y = 0; y < n; ++y) {
    std::vector<Point> f(n, kUnset), finv(n, kUnset);
    f[0] = y;
    finv[y] = 0;
    std::vector<Point> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const Point x = queue[i];
      for (std::size_t k = 0; k < a.generators().size() && ok; ++k) {
        const Point ax = a.generators()[k][x];
        const Point bfx = b.generators()[k][f[x]];
        if (f[ax] == kUnset) {
          if (finv[bfx] != kUnset) {
            ok = false;
            break;
          }
          f[ax] = bfx;
          finv[bfx] = ax;
          queue.push_back(ax);
        } else if (f[ax] != bfx) {
          ok = false;
        }
      }
    }
    if (ok && queue.size() == n) return f;
  }
  return std::nullopt;
}

}  // namespace ibis
