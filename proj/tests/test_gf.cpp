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


#include <doctest.h>

#include <random>

#include "ibis/error.hpp"
#include "ibis/gf.hpp"
#include "oracles.hpp"

using namespace ibis;
using gf::Element;
using gf::Field;

TEST_CASE("field creation") {
  const auto f2 = Field::create(2, 1);
  CHECK(f2.size() == 2);
  CHECK(f2.primitive() == f2.one());
  const auto f9 = Field::create(3, 2);
  CHECK(f9.size() == 9);
  CHECK(f9.multiplicative_order(f9.primitive()) == 8);
  // The primitive element is the least of full order.
  for (std::uint64_t i = 1; i < f9.primitive().index; ++i)
    CHECK(f9.multiplicative_order(f9.from_index(i)) < 8);
  CHECK_THROWS_AS(Field::create(4, 1), Error);
  CHECK_THROWS_AS(Field::create(2, 0), Error);
}

TEST_CASE("modulus gives a field: no zero divisors") {
  for (auto [p, f] : {std::pair{2ull, 4u}, {3ull, 3u}, {5ull, 2u}, {2ull, 5u}}) {
    const auto F = Field::create(p, f);
    CHECK(F.modulus().back() == 1);
    for (std::uint64_t a = 1; a < F.size(); ++a)
      for (std::uint64_t b = 1; b < F.size(); ++b) CHECK(F.mul({a}, {b}) != F.zero());
  }
}

TEST_CASE("arithmetic") {
  const auto F = Field::create(2, 4);
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(F.add({i}, F.zero()) == Element{i});
  for (std::uint64_t i = 1; i < 16; ++i) CHECK(F.mul({i}, F.inv({i})) == F.one());
  CHECK_THROWS_AS(F.inv(F.zero()), Error);
  const auto z = F.primitive();
  CHECK(F.pow(z, 15) == F.one());
  for (unsigned d : {1u, 3u, 5u}) CHECK(F.pow(z, d) != F.one());
  std::mt19937_64 rng(1);
  const auto G = Field::create(3, 4);
  for (int t = 0; t < 300; ++t) {
    const Element a{rng() % 81}, b{rng() % 81}, c{rng() % 81};
    CHECK(F.mul(F.add({a.index % 16}, {b.index % 16}), {c.index % 16}) ==
          F.add(F.mul({a.index % 16}, {c.index % 16}), F.mul({b.index % 16}, {c.index % 16})));
    CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
    CHECK(G.sub(G.add(a, b), b) == a);
  }
}

TEST_CASE("frobenius") {
  const auto F = Field::create(3, 4);
  std::mt19937_64 rng(2);
  for (std::uint64_t i = 0; i < F.size(); ++i) {
    CHECK(F.frobenius({i}, 0) == Element{i});
    CHECK(F.frobenius({i}, 4) == Element{i});
  }
  for (std::int64_t v = 0; v < 3; ++v) CHECK(F.frobenius(F.from_int(v), 1) == F.from_int(v));
  for (int t = 0; t < 200; ++t) {
    const Element a{rng() % 81}, b{rng() % 81};
    CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
    CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
  }
}

TEST_CASE("GF(16): orbit of elements outside GF(4) under Frobenius has size 4") {
  const auto F = Field::create(2, 4);
  for (std::uint64_t i = 0; i < 16; ++i) {
    if (F.in_subfield({i}, 2)) continue;
    unsigned k = 1;
    while (F.frobenius({i}, k) != Element{i}) ++k;
    CHECK(k == 4);
  }
}

TEST_CASE("galois orbit profiles") {
  using M = std::map<std::uint64_t, std::uint64_t>;
  CHECK(gf::galois_orbit_profile(Field::create(2, 4), 2) == M{{2, 6}});
  CHECK(gf::galois_orbit_profile(Field::create(2, 4), 1) == M{{2, 1}, {4, 3}});
  CHECK(gf::galois_orbit_profile(Field::create(2, 3), 1) == M{{3, 2}});
  CHECK_THROWS_AS(gf::galois_orbit_profile(Field::create(2, 4), 3), Error);
}

TEST_CASE("galois orbit criterion, p in {2,3}, f <= 6") {
  for (std::uint64_t p : {2ull, 3ull})
    for (unsigned f = 1; f <= 6; ++f) {
      const auto F = Field::create(p, f);
      for (unsigned ell = 1; ell <= f; ++ell) {
        if (f % ell) continue;
        const auto prof = gf::galois_orbit_profile(F, ell);
        CHECK(prof == oracle::galois_profile(p, f, ell));
        const bool equal = prof.size() <= 1;
        CHECK(equal == (ell == f || gf::is_prime(f / ell)));
      }
    }
}

TEST_CASE("integer helpers") {
  CHECK(gf::is_prime(2));
  CHECK_FALSE(gf::is_prime(1));
  CHECK_FALSE(gf::is_prime(91));
  CHECK(gf::prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(gf::big_omega(360) == 6);
}

TEST_CASE("labels") {
  const auto F = Field::create(3, 2);
  CHECK(F.label(F.zero()) == "0");
  CHECK(F.label(F.one()) == "1");
  CHECK(F.label(F.pow(F.primitive(), 3)) == "z^3");
}
