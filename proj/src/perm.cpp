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

#include "ibis/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ibis/error.hpp"

namespace ibis {

namespace {

std::string degree_message(std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << "degree mismatch: " << a << " vs " << b;
  return os.str();
}

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::kDegreeMismatch, degree_message(p.degree(), q.degree()));
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "image " + std::to_string(y) + " out of range for degree " +
                      std::to_string(images.size()));
    if (seen[y])
      throw Error(ErrorCode::kInvalidArgument,
                  "image " + std::to_string(y) + " appears twice");
    seen[y] = true;
  }
  return Permutation(std::move(images), 0);
}

Point Permutation::act(Point x) const {
  if (x >= images_.size())
    throw Error(ErrorCode::kInvalidArgument,
                "point " + std::to_string(x) + " out of range for degree " +
                    std::to_string(images_.size()));
  return images_[x];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::optional<Point> Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), 0);
}

std::uint64_t Permutation::element_order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  Permutation out(p.degree());
  compose_into(p, q, out);
  return out;
}

void compose_into(const Permutation& p, const Permutation& q, Permutation& out) {
  require_same_degree(p, q);
  auto& dst = out.mutable_images();
  dst.resize(p.degree());
  const auto pi = p.images();
  const auto qi = q.images();
  for (std::size_t i = 0; i < pi.size(); ++i) dst[i] = qi[pi[i]];
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return compose(compose(g.inverse(), h), g);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

Point act(const Permutation& p, Point x) { return p.act(x); }

// ---------------------------------------------------------------------------
// Parsing and rendering

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos,
                              const std::string& what) {
  std::size_t end = pos;
  while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
         text[end] != ',' && text[end] != ')' && text[end] != '(')
    ++end;
  std::string token(text.substr(pos, std::max<std::size_t>(end - pos, 1)));
  if (pos >= text.size()) token = "<end of input>";
  throw Error(ErrorCode::kParse, what + " at offset " + std::to_string(pos) +
                                     " (token '" + token + "') in \"" +
                                     std::string(text) + "\"");
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

std::uint64_t read_number(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    parse_error(text, pos, "expected a number");
  std::uint64_t v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (v > (1ULL << 40)) parse_error(text, pos, "number too large");
    ++pos;
  }
  return v;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    if (text[pos] != '(') parse_error(text, pos, "expected '('");
    ++pos;
    std::vector<Point> cycle;
    skip_space(text, pos);
    while (pos < text.size() && text[pos] != ')') {
      const std::size_t start = pos;
      const std::uint64_t v = read_number(text, pos);
      if (v == 0 || v > degree)
        parse_error(text, start,
                    "point out of range 1.." + std::to_string(degree));
      const auto x = static_cast<Point>(v - 1);
      if (used[x]) parse_error(text, start, "repeated point");
      used[x] = true;
      cycle.push_back(x);
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_space(text, pos);
      }
    }
    if (pos >= text.size()) parse_error(text, pos, "unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space(text, pos);
  }
  return Permutation::from_images(std::move(images));
}

Permutation parse_image_list(std::string_view text, std::size_t degree) {
  std::vector<Point> images;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    const std::size_t start = pos;
    const std::uint64_t v = read_number(text, pos);
    if (v >= degree)
      parse_error(text, start, "point out of range 0.." + std::to_string(degree - 1));
    images.push_back(static_cast<Point>(v));
    skip_space(text, pos);
    if (pos < text.size()) {
      if (text[pos] != ',') parse_error(text, pos, "expected ','");
      ++pos;
      skip_space(text, pos);
    }
  }
  if (images.size() != degree)
    throw Error(ErrorCode::kParse, "image list has " + std::to_string(images.size()) +
                                       " entries, expected " + std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (Point y : images) {
    if (seen[y])
      throw Error(ErrorCode::kParse, "image list repeats point " + std::to_string(y));
    seen[y] = true;
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == '(') return parse_cycles(text, degree);
  if (pos == text.size()) {
    if (degree == 0) return Permutation(0);
    parse_error(text, pos, "empty permutation");
  }
  return parse_image_list(text, degree);
}

std::string render_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    bool first = true;
    for (Point x = i; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------

GeneratedGroup::GeneratedGroup(std::size_t degree,
                               std::vector<Permutation> generators,
                               std::string label)
    : degree_(degree), label_(std::move(label)) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::kDegreeMismatch, degree_message(g.degree(), degree));
    if (g.is_identity()) continue;
    generators_.push_back(std::move(g));
  }
}

LabeledDomain::LabeledDomain(std::vector<std::string> objects,
                             std::vector<std::string> labels)
    : objects_(std::move(objects)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_.resize(objects_.size());
  if (labels_.size() != objects_.size())
    throw Error(ErrorCode::kInvalidArgument, "labels and objects differ in length");
  index_.reserve(objects_.size());
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (labels_[i].empty()) labels_[i] = std::to_string(i + 1);
    if (!index_.emplace(objects_[i], static_cast<Point>(i)).second)
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate domain object at position " + std::to_string(i + 1));
  }
}

std::optional<Point> LabeledDomain::find(std::string_view object) const {
  auto it = index_.find(std::string(object));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Point LabeledDomain::index_of(std::string_view object) const {
  if (auto x = find(object)) return *x;
  throw Error(ErrorCode::kInvalidArgument, "object not in domain");
}

Permutation induced_permutation(const Permutation& g, const LabeledDomain& domain,
                                const ObjectAction& action) {
  std::vector<Point> images(domain.size());
  std::vector<bool> hit(domain.size(), false);
  for (Point x = 0; x < domain.size(); ++x) {
    const auto y = domain.find(action(domain.object(x), g));
    if (!y)
      throw Error(ErrorCode::kInvalidArgument,
                  "object action leaves the domain at point " + domain.label(x));
    if (hit[*y])
      throw Error(ErrorCode::kInvalidArgument, "induced map is not bijective");
    hit[*y] = true;
    images[x] = *y;
  }
  return Permutation::from_images(std::move(images));
}

GeneratedGroup induce(const GeneratedGroup& g, const LabeledDomain& domain,
                      const ObjectAction& action, std::string label) {
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto& s : g.generators())
    gens.push_back(induced_permutation(s, domain, action));
  return GeneratedGroup(domain.size(), std::move(gens),
                        label.empty() ? g.label() : std::move(label));
}

// ---------------------------------------------------------------------------

namespace objects {

namespace {
constexpr unsigned char kBlockSeparator = 0xFF;
}

std::string encode_points(std::span<const Point> sorted_points) {
  std::string out;
  out.reserve(sorted_points.size() * 2);
  for (Point x : sorted_points) {
    if (x >= 0xFF00)
      throw Error(ErrorCode::kInvalidArgument, "point too large to encode");
    out.push_back(static_cast<char>(x >> 8));
    out.push_back(static_cast<char>(x & 0xFF));
  }
  return out;
}

std::vector<Point> decode_points(std::string_view object) {
  std::vector<Point> pts;
  pts.reserve(object.size() / 2);
  for (std::size_t i = 0; i + 1 < object.size(); i += 2)
    pts.push_back((static_cast<Point>(static_cast<unsigned char>(object[i])) << 8) |
                  static_cast<unsigned char>(object[i + 1]));
  return pts;
}

std::string encode_subset(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  return encode_points(points);
}

std::string encode_partition(std::vector<std::vector<Point>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) {
      out.push_back(static_cast<char>(kBlockSeparator));
      out.push_back(static_cast<char>(kBlockSeparator));
    }
    out += encode_points(blocks[i]);
  }
  return out;
}

std::vector<std::vector<Point>> decode_partition(std::string_view object) {
  std::vector<std::vector<Point>> blocks(1);
  for (std::size_t i = 0; i + 1 < object.size(); i += 2) {
    const auto hi = static_cast<unsigned char>(object[i]);
    const auto lo = static_cast<unsigned char>(object[i + 1]);
    if (hi == kBlockSeparator && lo == kBlockSeparator) {
      blocks.emplace_back();
      continue;
    }
    blocks.back().push_back((static_cast<Point>(hi) << 8) | lo);
  }
  return blocks;
}

std::string render_subset(std::span<const Point> points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(points[i] + 1);
  }
  return out + "}";
}

std::string render_partition(const std::vector<std::vector<Point>>& blocks) {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ',';
    out += render_subset(blocks[i]);
  }
  return out + "}";
}

std::string subset_action(std::string_view object, const Permutation& g) {
  auto pts = decode_points(object);
  for (auto& x : pts) x = g.act(x);
  return encode_subset(std::move(pts));
}

std::string partition_action(std::string_view object, const Permutation& g) {
  auto blocks = decode_partition(object);
  for (auto& b : blocks)
    for (auto& x : b) x = g.act(x);
  return encode_partition(std::move(blocks));
}

std::vector<std::vector<Point>> k_subsets_colex(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  if (k > n) return out;
  std::vector<Point> cur(k);
  std::iota(cur.begin(), cur.end(), Point{0});
  while (true) {
    out.push_back(cur);
    // Colex successor: bump the first entry that can move without colliding.
    std::size_t i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : static_cast<Point>(n)))
      ++i;
    if (i == k) break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j) cur[j] = static_cast<Point>(j);
  }
  return out;
}

namespace {

void partitions_rec(std::size_t a, std::vector<bool>& used, std::size_t n,
                    std::vector<std::vector<Point>>& cur,
                    std::vector<std::vector<std::vector<Point>>>& out) {
  // The next block always contains the least unused point.
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    out.push_back(cur);
    return;
  }
  std::vector<Point> block{static_cast<Point>(first)};
  used[first] = true;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (block.size() == a) {
      cur.push_back(block);
      partitions_rec(a, used, n, cur, out);
      cur.pop_back();
      return;
    }
    for (std::size_t y = from; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      block.push_back(static_cast<Point>(y));
      extend(y + 1);
      block.pop_back();
      used[y] = false;
    }
  };
  extend(first + 1);
  used[first] = false;
}

}  // namespace

std::vector<std::vector<std::vector<Point>>> regular_partitions(std::size_t a,
                                                                std::size_t b) {
  std::vector<std::vector<std::vector<Point>>> out;
  const std::size_t n = a * b;
  std::vector<bool> used(n, false);
  std::vector<std::vector<Point>> cur;
  partitions_rec(a, used, n, cur, out);
  return out;
}

LabeledDomain subset_domain(std::size_t n, std::size_t k) {
  std::vector<std::string> objs, labels;
  for (const auto& s : k_subsets_colex(n, k)) {
    objs.push_back(encode_points(s));
    labels.push_back(render_subset(s));
  }
  return LabeledDomain(std::move(objs), std::move(labels));
}

LabeledDomain partition_domain(std::size_t a, std::size_t b) {
  std::vector<std::string> objs, labels;
  for (auto& p : regular_partitions(a, b)) {
    labels.push_back(render_partition(p));
    objs.push_back(encode_partition(std::move(p)));
  }
  return LabeledDomain(std::move(objs), std::move(labels));
}

}  // namespace objects

}  // namespace ibis
