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

#ifndef IBIS_GF_HPP
#define IBIS_GF_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ibis::gf {

/// An element of GF(p^f), identified by its index: the coefficient vector
/// (constant term first) read as base-p digits. 0 and 1 are the field's
/// zero and one.
struct Element {
  std::uint64_t index = 0;
  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element, Element) = default;
};

bool is_prime(std::uint64_t n);
/// Prime factors without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Number of prime factors counted with multiplicity.
unsigned big_omega(std::uint64_t n);

/// Arithmetic context for GF(p^f). Immutable after creation.
class Field {
 public:
  /// The modulus is the least monic irreducible of degree f (polynomials
  /// ordered by their coefficient index), and the primitive element is the
  /// least element of full multiplicative order.
  static Field create(std::uint64_t p, unsigned f);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return f_; }
  std::uint64_t size() const noexcept { return q_; }
  /// Monic modulus, coefficients c_0 .. c_f (c_f == 1).
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  Element primitive() const noexcept { return primitive_; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }
  Element from_index(std::uint64_t i) const;
  Element from_int(std::int64_t v) const;  // image of the integer in the prime field

  std::vector<std::uint64_t> coefficients(Element e) const;
  Element from_coefficients(const std::vector<std::uint64_t>& c) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;  // throws on zero
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  /// e^(p^k)
  Element frobenius(Element e, unsigned k) const;
  std::uint64_t multiplicative_order(Element a) const;

  /// Elements fixed by x -> x^(p^ell), i.e. the subfield GF(p^ell).
  bool in_subfield(Element e, unsigned ell) const;

  /// "0", "1", or "z^k" with z the primitive element.
  std::string label(Element e) const;

 private:
  Field() = default;
  Element mul_poly(Element a, Element b) const;

  std::uint64_t p_ = 2;
  unsigned f_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint64_t> modulus_;
  Element primitive_{1};
  // Log tables when q is small enough.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Sizes of the orbits of Gal(GF(p^f)/GF(p^ell)) on GF(p^f) \ GF(p^ell),
/// as size -> number of orbits. Throws unless ell divides f.
std::map<std::uint64_t, std::uint64_t> galois_orbit_profile(const Field& field, unsigned ell);

}  // namespace ibis::gf

#endif  // IBIS_GF_HPP
