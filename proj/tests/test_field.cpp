// Copyright 2026 The quadricode developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "quadricode/field.hpp"

using namespace quadricode;

namespace {

// Independent GF(2)[x] oracle with polynomials as bitmasks.
int gf2_degree(uint32_t f) {
  int d = -1;
  while (f != 0) {
    ++d;
    f >>= 1;
  }
  return d;
}

bool gf2_divides(uint32_t g, uint32_t f) {
  const int dg = gf2_degree(g);
  int df = gf2_degree(f);
  while (df >= dg) {
    f ^= g << (df - dg);
    df = gf2_degree(f);
  }
  return f == 0;
}

bool gf2_irreducible(uint32_t f) {
  const int d = gf2_degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  for (uint32_t g = 2; gf2_degree(g) <= d / 2; ++g) {
    if (gf2_degree(g) >= 1 && gf2_divides(g, f)) return false;
  }
  return true;
}

uint32_t poly_to_mask(const std::vector<uint32_t>& coeffs) {
  uint32_t m = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) m |= coeffs[i] << i;
  return m;
}

}  // namespace

TEST_CASE("modulus selection matches brute-force scans") {
  SUBCASE("nine elements: least root-free monic quadratic over three") {
    // Degree-two polynomials are irreducible exactly when root-free.
    std::vector<uint32_t> expected;
    for (uint32_t enc = 0; enc < 9 && expected.empty(); ++enc) {
      const uint32_t c0 = enc % 3, c1 = enc / 3;
      bool rootfree = true;
      for (uint32_t x = 0; x < 3; ++x) {
        if ((c0 + c1 * x + x * x) % 3 == 0) rootfree = false;
      }
      if (rootfree) expected = {c0, c1, 1};
    }
    REQUIRE(expected == std::vector<uint32_t>{1, 0, 1});
    CHECK(Field::make(3, 2).modulus() == expected);
  }
  SUBCASE("sixteen elements: least irreducible quartic over two by bitmask division") {
    uint32_t mask = 0;
    for (uint32_t enc = 0; enc < 16 && mask == 0; ++enc) {
      const uint32_t f = (1u << 4) | enc;
      if (gf2_irreducible(f)) mask = f;
    }
    REQUIRE(mask == 0b10011);  // x^4 + x + 1
    CHECK(poly_to_mask(Field::make(2, 4).modulus()) == mask);
  }
  SUBCASE("four elements has a unique choice") {
    CHECK(Field::make(2, 2).modulus() == std::vector<uint32_t>{1, 1, 1});
  }
  SUBCASE("twenty-five elements") {
    // Squares mod 5 are {0, 1, 4}, so x^2 + 2 is the first root-free quadratic.
    CHECK(Field::make(5, 2).modulus() == std::vector<uint32_t>{2, 0, 1});
  }
  SUBCASE("second irreducible quadratic over three") {
    CHECK(nth_irreducible(3, 2, 1) == std::vector<uint32_t>{2, 1, 1});
  }
}

TEST_CASE("irreducibility test agrees with bitmask trial division over two") {
  for (int deg = 1; deg <= 6; ++deg) {
    for (uint32_t enc = 0; enc < (1u << deg); ++enc) {
      const uint32_t mask = (1u << deg) | enc;
      std::vector<uint32_t> coeffs(deg + 1);
      for (int i = 0; i <= deg; ++i) coeffs[i] = (mask >> i) & 1;
      CAPTURE(mask);
      CHECK(is_irreducible(coeffs, 2) == gf2_irreducible(mask));
    }
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  // Degree six over two: (2^6 - 2^3 - 2^2 + 2) / 6 = 9.
  uint32_t count = 0;
  for (uint32_t enc = 0; enc < 64; ++enc) {
    std::vector<uint32_t> coeffs(7);
    for (int i = 0; i < 6; ++i) coeffs[i] = (enc >> i) & 1;
    coeffs[6] = 1;
    if (is_irreducible(coeffs, 2)) ++count;
  }
  CHECK(count == 9);
  // Degree three over three: (27 - 3) / 3 = 8.
  count = 0;
  for (uint32_t enc = 0; enc < 27; ++enc) {
    std::vector<uint32_t> coeffs = {enc % 3, (enc / 3) % 3, enc / 9, 1};
    if (is_irreducible(coeffs, 3)) ++count;
  }
  CHECK(count == 8);
}

TEST_CASE("arithmetic in the nine-element field matches hand computation") {
  const Field f9 = Field::make(3, 2);
  // Encodings: c0 + 3*c1 represents c0 + c1*t with t^2 = -1.
  const uint32_t t = 3, one_plus_t = 4, one_plus_2t = 7;
  CHECK(f9.mul(t, t) == 2);                    // t^2 = 2
  CHECK(f9.mul(one_plus_t, one_plus_t) == 6);  // (1+t)^2 = 2t
  CHECK(f9.mul(one_plus_t, one_plus_2t) == 2); // (1+t)(1-t) = 1 - t^2 = 2
  CHECK(f9.add(one_plus_t, one_plus_2t) == 2); // 2 + 3t = 2
  CHECK(f9.neg(one_plus_t) == 8);              // 2 + 2t
  CHECK(f9.sub(one_plus_t, t) == 1);
  CHECK(f9.pow(one_plus_t, 4) == 2);
  CHECK(f9.pow(0, 0) == 1);
  CHECK(f9.pow(one_plus_t, -1) == f9.inv(one_plus_t));
  CHECK(f9.element_order(2) == 2);
  CHECK(f9.element_order(t) == 4);
  CHECK(f9.element_order(one_plus_t) == 8);
  CHECK(f9.primitive_element() == 4);
  CHECK(f9.coefficients(7) == std::vector<uint32_t>{1, 2});
  CHECK(f9.encode({1, 2}) == 7);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    auto [p, e] = factor_prime_power(q);
    const Field f = Field::make(p, e);
    CAPTURE(q);
    REQUIRE(f.cardinality() == q);

    uint32_t sum = 0, prod = 1;
    for (uint32_t a = 0; a < q; ++a) {
      sum = f.add(sum, a);
      if (a != 0) {
        prod = f.mul(prod, a);
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, static_cast<int64_t>(q) - 1) == 1);
      }
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, 0) == a);
    }
    CHECK(sum == (q == 2 ? 1 : 0));
    CHECK(prod == f.neg(1));  // pairing every element with its inverse

    // Spot-check associativity and distributivity on a fixed stride.
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        const uint32_t c = (a * 7 + b * 3 + 1) % q;
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      }
    }

    // Frobenius is a ring endomorphism fixing exactly the prime field.
    uint32_t fixed = 0;
    for (uint32_t a = 0; a < q; ++a) {
      if (f.frobenius(a) == a) ++fixed;
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
    }
    CHECK(fixed == p);

    CHECK(f.element_order(f.primitive_element()) == q - 1);
    const auto prims = f.primitive_elements(3);
    for (uint32_t w : prims) CHECK(f.element_order(w) == q - 1);
    if (!prims.empty()) CHECK(prims.front() == f.primitive_element());
  }
}

TEST_CASE("prime fields behave as integers modulo p") {
  const Field f5 = Field::make(5, 1);
  for (uint32_t a = 0; a < 5; ++a) {
    for (uint32_t b = 0; b < 5; ++b) {
      CHECK(f5.add(a, b) == (a + b) % 5);
      CHECK(f5.mul(a, b) == (a * b) % 5);
    }
  }
  CHECK(f5.primitive_element() == 2);
  CHECK(Field::make(7, 1).primitive_element() == 3);
}

TEST_CASE("extensions embed their base field coherently") {
  SUBCASE("prime base: encodings agree") {
    const Field f9 = Field::extension(Field::make(3, 1), 2);
    REQUIRE(f9.has_subfield());
    CHECK(f9.subfield_index() == 2);
    CHECK(f9.embed(2) == 2);
    CHECK(f9.project(2) == 2u);
    CHECK_FALSE(f9.project(5).has_value());
    CHECK(f9.in_subfield(1));
    CHECK_FALSE(f9.in_subfield(3));
  }
  SUBCASE("tower base: image of the base generator is the least root") {
    const Field f4 = Field::make(2, 2);
    const Field f16 = Field::extension(f4, 2);
    // x^2 + x + 1 evaluated at u^2 + u (encoding 6) gives u^4 + u + 1 = 0,
    // and no smaller encoding is a root.
    CHECK(f16.embed(2) == 6);
    for (uint32_t a = 0; a < 4; ++a) {
      for (uint32_t b = 0; b < 4; ++b) {
        CHECK(f16.embed(f4.mul(a, b)) == f16.mul(f16.embed(a), f16.embed(b)));
        CHECK(f16.embed(f4.add(a, b)) == f16.add(f16.embed(a), f16.embed(b)));
      }
    }
    uint32_t in_sub = 0;
    for (uint32_t x = 0; x < 16; ++x) in_sub += f16.in_subfield(x) ? 1 : 0;
    CHECK(in_sub == 4);
  }
}

TEST_CASE("norm and trace take values in the subfield with the right fibers") {
  const Field f3 = Field::make(3, 1);
  const Field f9 = Field::extension(f3, 2);
  const uint32_t w = 4;  // 1 + t, primitive
  CHECK(f9.norm(w) == 2);
  CHECK(f9.trace(w) == 2);

  // Multiplicativity and additivity over every pair.
  for (uint32_t a = 0; a < 9; ++a) {
    for (uint32_t b = 0; b < 9; ++b) {
      CHECK(f9.norm(f9.mul(a, b)) == f3.mul(f9.norm(a), f9.norm(b)));
      CHECK(f9.trace(f9.add(a, b)) == f3.add(f9.trace(a), f9.trace(b)));
    }
  }

  // Trace is onto with fibers of size q^(d-1) = 3.
  std::map<uint32_t, int> fibers;
  for (uint32_t a = 0; a < 9; ++a) fibers[f9.trace(a)]++;
  REQUIRE(fibers.size() == 3);
  for (const auto& [v, n] : fibers) CHECK(n == 3);

  // Nonzero norms are onto with fibers of size (q^d-1)/(q-1) = 4.
  std::map<uint32_t, int> nfibers;
  for (uint32_t a = 1; a < 9; ++a) nfibers[f9.norm(a)]++;
  REQUIRE(nfibers.size() == 2);
  for (const auto& [v, n] : nfibers) CHECK(n == 4);
}

TEST_CASE("degree-three relative norms compose over towers") {
  const Field f4 = Field::make(2, 2);
  const Field f64 = Field::extension(f4, 3);
  REQUIRE(f64.cardinality() == 64);
  for (uint32_t a = 1; a < 64; ++a) {
    // N(a) = a^(1 + 4 + 16) lands in the subfield and is multiplicative.
    const uint32_t n = f64.norm(a);
    CHECK(f64.embed(n) == f64.pow(a, 21));
  }
  for (uint32_t a = 0; a < 64; ++a) {
    const uint32_t tr = f64.trace(a);
    const uint32_t direct = f64.add(a, f64.add(f64.pow(a, 4), f64.pow(a, 16)));
    CHECK(f64.embed(tr) == direct);
  }
}

TEST_CASE("extension bases are independent and decompositions invert") {
  const Field f3 = Field::make(3, 1);
  const Field f9 = Field::extension(f3, 2);

  SUBCASE("polynomial basis of the quadratic extension") {
    const auto basis = f9.extension_basis(Field::BasisStyle::polynomial);
    CHECK(basis == std::vector<uint32_t>{1, 3});
    CHECK(f9.independent_over_subfield(basis));
  }
  SUBCASE("normal basis is the least Frobenius orbit that spans") {
    const auto basis = f9.extension_basis(Field::BasisStyle::normal);
    CHECK(basis == std::vector<uint32_t>{4, 7});
    CHECK(f9.independent_over_subfield(basis));
    CHECK(f9.relative_frobenius(basis[0], 1) == basis[1]);
  }
  SUBCASE("dependent sets are rejected") {
    CHECK_FALSE(f9.independent_over_subfield({3, 6}));  // t and 2t
    CHECK_FALSE(f9.independent_over_subfield({0}));
    CHECK(f9.independent_over_subfield({4}));
  }
  SUBCASE("decomposition round-trips and matches direct evaluation") {
    const SubfieldDecomposition dec(f9, f9.extension_basis());
    const auto c = dec.coords(7);  // 1 + 2t
    CHECK(c == std::vector<uint32_t>{1, 2});
    for (uint32_t x = 0; x < 9; ++x) {
      const auto coords = dec.coords(x);
      REQUIRE(coords.size() == 2);
      uint32_t recomposed = 0;
      for (size_t i = 0; i < 2; ++i)
        recomposed = f9.add(recomposed, f9.mul(f9.embed(coords[i]), dec.basis()[i]));
      CHECK(recomposed == x);
      CHECK(dec.compose(coords) == x);
    }
  }
  SUBCASE("decomposition over a non-prime base field") {
    const Field f4 = Field::make(2, 2);
    const Field f16 = Field::extension(f4, 2);
    const SubfieldDecomposition dec(f16, f16.extension_basis());
    for (uint32_t x = 0; x < 16; ++x) {
      const auto coords = dec.coords(x);
      uint32_t recomposed = 0;
      for (size_t i = 0; i < coords.size(); ++i)
        recomposed = f16.add(recomposed, f16.mul(f16.embed(coords[i]), dec.basis()[i]));
      CHECK(recomposed == x);
    }
  }
}

TEST_CASE("quadratic scalars produce zero-free binary forms") {
  SUBCASE("base three") {
    const auto qs = quadratic_scalars(Field::make(3, 1));
    CHECK(qs.ext.cardinality() == 9);
    CHECK(qs.w == 4);
    CHECK(qs.tr == 2);
    CHECK(qs.nrm == 2);
  }
  SUBCASE("base five") {
    const auto qs = quadratic_scalars(Field::make(5, 1));
    CHECK(qs.w == 6);
    CHECK(qs.tr == 2);
    CHECK(qs.nrm == 3);
  }
  SUBCASE("x^2 + tr*xy + nrm*y^2 never vanishes on nonzero pairs") {
    for (uint32_t qbase : {3u, 4u, 5u, 7u}) {
      auto [p, e] = factor_prime_power(qbase);
      const Field base = Field::make(p, e);
      const auto qs = quadratic_scalars(base);
      for (uint32_t x = 0; x < qbase; ++x) {
        for (uint32_t y = 0; y < qbase; ++y) {
          if (x == 0 && y == 0) continue;
          const uint32_t val = base.add(
              base.mul(x, x),
              base.add(base.mul(qs.tr, base.mul(x, y)), base.mul(qs.nrm, base.mul(y, y))));
          CAPTURE(qbase);
          CHECK(val != 0);
        }
      }
    }
  }
  SUBCASE("non-primitive w is rejected") {
    const Field f9 = Field::extension(Field::make(3, 1), 2);
    CHECK_THROWS_AS(quadratic_scalars(f9, 3), std::invalid_argument);  // t has order 4
    CHECK_THROWS_AS(quadratic_scalars(f9, 2), std::invalid_argument);  // scalar
  }
}

TEST_CASE("alternate moduli give isomorphic but distinct representations") {
  const Field a = Field::make(3, 2);
  const Field b = Field::make(3, 2, nth_irreducible(3, 2, 1));
  CHECK(a != b);
  CHECK(a == Field::make(3, 2, {1, 0, 1}));
  CHECK(b.modulus() == std::vector<uint32_t>{2, 1, 1});
  // Same arithmetic invariants either way.
  uint32_t prod = 1;
  for (uint32_t x = 1; x < 9; ++x) prod = b.mul(prod, x);
  CHECK(prod == b.neg(1));
  CHECK(b.element_order(b.primitive_element()) == 8);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);   // composite characteristic
  CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument);  // exceeds the size cap
  CHECK_THROWS_AS(Field::make(3, 2, {0, 0, 1}), std::invalid_argument);  // t^2 reducible
  CHECK_THROWS_AS(Field::make(3, 2, {1, 0, 2}), std::invalid_argument);  // not monic
  const Field f9 = Field::make(3, 2);
  CHECK_THROWS_AS(f9.inv(0), std::domain_error);
  CHECK_THROWS_AS(f9.pow(0, -1), std::domain_error);
  CHECK_THROWS_AS(f9.element_order(0), std::domain_error);
  CHECK_THROWS_AS(f9.norm(1), std::logic_error);  // no designated subfield
  CHECK_THROWS_AS(Field::extension(Field::make(2, 1), 25), std::invalid_argument);
}

TEST_CASE("field elements compose with operator syntax") {
  const Field f9 = Field::make(3, 2);
  const FieldElement w = f9(4);
  CHECK((w * w).enc() == 6);
  CHECK((w + (-w)).is_zero());
  CHECK((w / w).enc() == 1);
  CHECK(w.pow(8).enc() == 1);
  CHECK(w.frobenius().enc() == f9.frobenius(4));
  CHECK_THROWS_AS(w + Field::make(2, 2)(1), std::invalid_argument);
  CHECK_THROWS_AS(f9(9), std::out_of_range);
}

TEST_CASE("larger binary fields stay consistent") {
  const Field f1024 = Field::make(2, 10);
  CHECK(f1024.cardinality() == 1024);
  const uint32_t g = f1024.primitive_element();
  CHECK(f1024.element_order(g) == 1023);
  for (uint32_t a = 1; a < 1024; a += 37) {
    CHECK(f1024.mul(a, f1024.inv(a)) == 1);
    CHECK(f1024.pow(a, 1023) == 1);
    CHECK(f1024.frobenius(a, 10) == a);
  }
}
