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

#include "ibis/gf.hpp"

#include <algorithm>

#include "ibis/error.hpp"

namespace ibis::gf {

namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first, trimmed

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  const std::uint64_t lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// Ben-Or: m is irreducible iff gcd(x^(p^i) - x, m) = 1 for 1 <= i <= deg/2.
bool is_irreducible(const Poly& m, std::uint64_t p) {
  const std::size_t f = m.size() - 1;
  if (f <= 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= f / 2; ++i) {
    h = poly_powmod(h, p, m, p);
    if (poly_gcd(m, poly_sub(h, x, p), p).size() > 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned big_omega(std::uint64_t n) {
  unsigned count = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  return count + (n > 1 ? 1 : 0);
}

Field Field::create(std::uint64_t p, unsigned f) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (f == 0) throw Error(ErrorCode::kInvalidArgument, "field degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw Error(ErrorCode::kInvalidArgument, "field size exceeds 2^32");
  }
  Field field;
  field.p_ = p;
  field.f_ = f;
  field.q_ = q;
  for (std::uint64_t i = 0; i < q; ++i) {
    Poly m(f + 1, 0);
    std::uint64_t rest = i;
    for (unsigned j = 0; j < f; ++j) {
      m[j] = rest % p;
      rest /= p;
    }
    m[f] = 1;
    if (is_irreducible(m, p)) {
      field.modulus_ = m;
      break;
    }
  }
  const auto factors = prime_factors(q - 1);
  for (std::uint64_t i = 1; i < q; ++i) {
    const Element cand{i};
    bool full = true;
    for (auto r : factors) {
      // pow() is not usable before the tables exist; go through mul_poly.
      Element acc{1}, base = cand;
      for (std::uint64_t e = (q - 1) / r; e; e >>= 1) {
        if (e & 1) acc = field.mul_poly(acc, base);
        base = field.mul_poly(base, base);
      }
      if (acc.index == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      field.primitive_ = cand;
      break;
    }
  }
  if (q <= kTableLimit) {
    field.exp_.assign(q - 1, 0);
    field.log_.assign(q, 0);
    Element x{1};
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      field.exp_[k] = static_cast<std::uint32_t>(x.index);
      field.log_[x.index] = static_cast<std::uint32_t>(k);
      x = field.mul_poly(x, field.primitive_);
    }
  }
  return field;
}

Element Field::from_index(std::uint64_t i) const {
  if (i >= q_) throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  return {i};
}

Element Field::from_int(std::int64_t v) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(((v % pp) + pp) % pp)};
}

std::vector<std::uint64_t> Field::coefficients(Element e) const {
  std::vector<std::uint64_t> c(f_);
  for (unsigned j = 0; j < f_; ++j) {
    c[j] = e.index % p_;
    e.index /= p_;
  }
  return c;
}

Element Field::from_coefficients(const std::vector<std::uint64_t>& c) const {
  std::uint64_t idx = 0;
  for (std::size_t j = c.size(); j-- > 0;) idx = idx * p_ + (c[j] % p_);
  return {idx};
}

Element Field::add(Element a, Element b) const {
  if (p_ == 2) return {a.index ^ b.index};
  std::uint64_t out = 0, scale = 1;
  for (unsigned j = 0; j < f_; ++j) {
    out += ((a.index % p_ + b.index % p_) % p_) * scale;
    a.index /= p_;
    b.index /= p_;
    scale *= p_;
  }
  return {out};
}

Element Field::neg(Element a) const {
  if (p_ == 2) return a;
  std::uint64_t out = 0, scale = 1;
  for (unsigned j = 0; j < f_; ++j) {
    out += ((p_ - a.index % p_) % p_) * scale;
    a.index /= p_;
    scale *= p_;
  }
  return {out};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul_poly(Element a, Element b) const {
  Poly pa = coefficients(a), pb = coefficients(b);
  trim(pa);
  trim(pb);
  Poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  r.resize(f_, 0);
  return from_coefficients(r);
}

Element Field::mul(Element a, Element b) const {
  if (a.index == 0 || b.index == 0) return {0};
  if (!exp_.empty()) return {exp_[(log_[a.index] + static_cast<std::uint64_t>(log_[b.index])) % (q_ - 1)]};
  return mul_poly(a, b);
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return {1};
  if (a.index == 0) return {0};
  if (!exp_.empty()) return {exp_[mulmod(log_[a.index], e % (q_ - 1), q_ - 1)]};
  Element acc{1};
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::frobenius(Element e, unsigned k) const {
  k %= f_;
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p_;
  return pow(e, pk);
}

std::uint64_t Field::multiplicative_order(Element a) const {
  if (a.index == 0) throw Error(ErrorCode::kInvalidArgument, "zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (auto r : prime_factors(q_ - 1))
    while (order % r == 0 && pow(a, order / r).index == 1) order /= r;
  return order;
}

bool Field::in_subfield(Element e, unsigned ell) const { return frobenius(e, ell) == e; }

std::string Field::label(Element e) const {
  if (e.index == 0) return "0";
  if (e.index == 1) return "1";
  std::uint64_t k = 0;
  if (!log_.empty()) {
    k = log_[e.index];
  } else {
    Element x{1};
    while (x != e) {
      x = mul(x, primitive_);
      ++k;
    }
  }
  return "z^" + std::to_string(k);
}

std::map<std::uint64_t, std::uint64_t> galois_orbit_profile(const Field& field, unsigned ell) {
  if (ell == 0 || field.degree() % ell != 0)
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(ell) + " does not divide " + std::to_string(field.degree()));
  std::map<std::uint64_t, std::uint64_t> profile;
  std::vector<bool> seen(field.size(), false);
  for (std::uint64_t i = 0; i < field.size(); ++i) {
    if (seen[i]) continue;
    const Element e{i};
    if (field.in_subfield(e, ell)) continue;
    std::uint64_t size = 0;
    Element x = e;
    do {
      seen[x.index] = true;
      ++size;
      x = field.frobenius(x, ell);
    } while (x != e);
    ++profile[size];
  }
  return profile;
}

}  // namespace ibis::gf
