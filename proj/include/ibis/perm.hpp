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

#ifndef IBIS_PERM_HPP
#define IBIS_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ibis {

/// Points are 0-indexed internally. Everything user-facing is 1-indexed.
using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as its image table.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Validates that `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  /// Checked action; throws on an out-of-range point.
  Point act(Point x) const;
  /// Unchecked action for inner loops.
  Point operator[](Point x) const noexcept { return images_[x]; }

  bool is_identity() const noexcept;
  bool fixes(Point x) const noexcept { return images_[x] == x; }
  /// Least moved point, or nullopt for the identity.
  std::optional<Point> first_moved() const noexcept;

  Permutation inverse() const;
  /// Order as an element (lcm of cycle lengths).
  std::uint64_t element_order() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  // Raw storage for in-place algorithms; callers keep the bijection intact.
  std::vector<Point>& mutable_images() noexcept { return images_; }

 private:
  explicit Permutation(std::vector<Point> images, int)
      : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// x -> q(p(x)): apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
/// out = compose(p, q) without allocation when out already has the degree.
void compose_into(const Permutation& p, const Permutation& q, Permutation& out);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}
Permutation inverse(const Permutation& p);
/// g^-1 h g
Permutation conjugate(const Permutation& h, const Permutation& g);
Permutation commutator(const Permutation& a, const Permutation& b);
Point act(const Permutation& p, Point x);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

/// Cycle notation "(1 2 3)(4 5)" (1-indexed) or an image list "1,0,2"
/// (0-indexed). Commas are accepted as separators inside cycles.
Permutation parse_permutation(std::string_view text, std::size_t degree);
/// Canonical cycle notation: cycles start at their least point and are
/// ordered by it; fixed points are omitted; the identity renders as "()".
std::string render_cycles(const Permutation& p);

/// A finitely generated permutation group. The identity is never stored.
class GeneratedGroup {
 public:
  GeneratedGroup() = default;
  explicit GeneratedGroup(std::size_t degree,
                          std::vector<Permutation> generators = {},
                          std::string label = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  bool is_trivial() const noexcept { return generators_.empty(); }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::string label_;
};

/// Names the points of an induced action. Objects are canonical byte
/// encodings; `labels` are human-readable renderings (1-indexed).
class LabeledDomain {
 public:
  LabeledDomain() = default;
  LabeledDomain(std::vector<std::string> objects,
                std::vector<std::string> labels);

  std::size_t size() const noexcept { return objects_.size(); }
  const std::string& object(Point x) const { return objects_.at(x); }
  const std::string& label(Point x) const { return labels_.at(x); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Point> find(std::string_view object) const;
  Point index_of(std::string_view object) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Point> index_;
};

/// Maps an encoded object under a permutation of the parent domain.
using ObjectAction =
    std::function<std::string(std::string_view object, const Permutation& g)>;

/// The permutation induced by g on the domain objects.
Permutation induced_permutation(const Permutation& g,
                                const LabeledDomain& domain,
                                const ObjectAction& action);

/// The group induced on `domain`, one induced generator per generator of g.
/// Throws if the action leaves the domain or is not bijective.
GeneratedGroup induce(const GeneratedGroup& g, const LabeledDomain& domain,
                      const ObjectAction& action, std::string label = {});

/// Canonical encodings of the structured objects used by induced actions.
namespace objects {

std::string encode_points(std::span<const Point> sorted_points);
std::vector<Point> decode_points(std::string_view object);

/// k-subsets as sorted point lists.
std::string encode_subset(std::vector<Point> points);
/// Partitions as sorted lists of sorted blocks.
std::string encode_partition(std::vector<std::vector<Point>> blocks);
std::vector<std::vector<Point>> decode_partition(std::string_view object);

std::string render_subset(std::span<const Point> points);
std::string render_partition(const std::vector<std::vector<Point>>& blocks);

std::string subset_action(std::string_view object, const Permutation& g);
std::string partition_action(std::string_view object, const Permutation& g);

/// All k-subsets of {0..n-1} in colex order.
std::vector<std::vector<Point>> k_subsets_colex(std::size_t n, std::size_t k);
/// All partitions of {0..a*b-1} into b blocks of size a, in generation order.
std::vector<std::vector<std::vector<Point>>> regular_partitions(std::size_t a,
                                                                std::size_t b);

LabeledDomain subset_domain(std::size_t n, std::size_t k);
LabeledDomain partition_domain(std::size_t a, std::size_t b);

}  // namespace objects

}  // namespace ibis

#endif  // IBIS_PERM_HPP
