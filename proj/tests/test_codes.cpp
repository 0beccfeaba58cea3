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

#include "quadricode/codes.hpp"
#include "quadricode/field.hpp"
#include "quadricode/geometry.hpp"
#include "quadricode/matrix.hpp"

using namespace quadricode;

namespace {

// Independent oracle: minimum weight by enumerating every nonzero message.
uint32_t brute_min_weight(const Matrix& gen) {
  const Field& f = gen.field();
  const uint32_t q = f.cardinality();
  const size_t k = gen.rows();
  std::vector<uint32_t> msg(k, 0);
  uint32_t best = static_cast<uint32_t>(gen.cols()) + 1;
  while (true) {
    size_t i = 0;
    while (i < k && ++msg[i] == q) msg[i++] = 0;
    if (i == k) break;
    const auto word = gen.left_multiply(msg);
    uint32_t w = 0;
    for (uint32_t x : word) w += x != 0;
    if (w != 0 && w < best) best = w;
  }
  return best;
}

// Column permutation sending code a's columns into code b's label order.
Matrix match_columns(const LinearCode& from, const LinearCode& to) {
  std::map<Point, size_t> where;
  for (size_t i = 0; i < from.length(); ++i) where[from.labels()[i]] = i;
  REQUIRE(where.size() == from.length());
  std::vector<size_t> order;
  for (const auto& label : to.labels()) {
    auto it = where.find(label);
    REQUIRE(it != where.end());
    order.push_back(it->second);
  }
  return select_columns(from.generator(), order);
}

}  // namespace

TEST_CASE("degree-zero evaluation is the repetition code") {
  const Field f3 = Field::make(3, 1);
  const auto pts = projective_space(f3, 2);
  const LinearCode c = evaluation_code(f3, pts, 0);
  CHECK(c.length() == 13);
  CHECK(c.dimension() == 1);
  CHECK(brute_min_weight(c.generator()) == 13);
}

TEST_CASE("evaluation ranks on the two quadric types") {
  const Field f3 = Field::make(3, 1);
  const LinearCode h = evaluation_code(f3, segre_variety(f3, 2), 1);
  CHECK(h.length() == 16);
  CHECK(h.dimension() == 4);

  const auto qs = quadratic_scalars(Field::make(2, 2));
  const LinearCode e = evaluation_code(qs.ext.subfield(), elliptic_points(qs), 2);
  CHECK(e.length() == 17);
  CHECK(e.dimension() == 9);
}

TEST_CASE("extended Reed-Solomon codes have the classical parameters") {
  const Field f3 = Field::make(3, 1);
  const LinearCode c = extended_rs(f3, 1);
  CHECK(c.length() == 4);
  CHECK(c.dimension() == 2);
  // Points run (0:1), (1:0), (1:1), (1:2); rows are y then x.
  CHECK(c.generator() == Matrix::from_rows(f3, {{1, 0, 1, 2}, {0, 1, 1, 1}}));
  CHECK(brute_min_weight(c.generator()) == 3);

  const Field f5 = Field::make(5, 1);
  const LinearCode c52 = extended_rs(f5, 2);
  CHECK(c52.length() == 6);
  CHECK(c52.dimension() == 3);
  CHECK(brute_min_weight(c52.generator()) == 4);

  CHECK_THROWS_AS(extended_rs(f3, 3), std::invalid_argument);
}

TEST_CASE("tensor codes multiply parameters") {
  const Field f3 = Field::make(3, 1);
  const LinearCode rs = extended_rs(f3, 1);
  const LinearCode t = tensor_code(rs, rs);
  CHECK(t.length() == 16);
  CHECK(t.dimension() == 4);
  CHECK(brute_min_weight(t.generator()) == 9);

  // Tensoring with a single-column code keeps the generator.
  const LinearCode one = evaluation_code(f3, {{1}}, 0);
  const LinearCode same = tensor_code(rs, one);
  CHECK(same.generator() == rs.generator());

  const Field f4 = Field::make(2, 2);
  CHECK_THROWS_AS(tensor_code(rs, extended_rs(f4, 1)), std::invalid_argument);
}

TEST_CASE("bidegree codes match the product-surface evaluation") {
  const Field f3 = Field::make(3, 1);
  const LinearCode mixed = bidegree_code(f3, 1, 2);
  CHECK(mixed.length() == 16);
  CHECK(mixed.dimension() == 6);
  CHECK(brute_min_weight(mixed.generator()) == 6);
  // Labels live on the product surface.
  const auto idx = index_points(segre_variety(f3, 2));
  for (const auto& label : mixed.labels()) CHECK(idx.count(label) == 1);

  for (uint32_t q : {3u, 4u}) {
    auto [p, e] = factor_prime_power(q);
    const Field f = Field::make(p, e);
    for (uint32_t s = 1; s < std::min(q, 3u); ++s) {
      const LinearCode onsurf = evaluation_code(f, segre_variety(f, 2), s);
      const LinearCode bid = bidegree_code(f, s, s);
      CAPTURE(q);
      CAPTURE(s);
      CHECK(row_space_equal(match_columns(bid, onsurf), onsurf.generator()));
    }
  }
}

TEST_CASE("cyclic power codes carry their exponent sets") {
  const Field f3 = Field::make(3, 1);
  const LinearCode b = bch_cyclic(f3, 2, 1);
  CHECK(b.length() == 8);
  CHECK(b.dimension() == 4);
  CHECK(b.provenance().exponents == std::vector<uint64_t>{0, 1, 3, 4});
  CHECK(b.field().cardinality() == 9);

  // Column labels follow powers of the primitive element.
  const Field ext = b.field();
  const uint32_t alpha = ext.primitive_element();
  for (size_t t = 0; t < 8; ++t) {
    CHECK(b.labels()[t] ==
          Point{1, ext.pow(alpha, static_cast<int64_t>(t))});
  }

  // The subfield subcode keeps the dimension and reaches weight 4.
  const LinearCode b0 = subfield_subcode(b);
  CHECK(b0.field().cardinality() == 3);
  CHECK(b0.length() == 8);
  CHECK(b0.dimension() == 4);
  CHECK(brute_min_weight(b0.generator()) == 4);

  // Shift invariance: rotating all columns by one preserves the row space.
  std::vector<size_t> rot;
  for (size_t i = 0; i < 8; ++i) rot.push_back((i + 1) % 8);
  CHECK(row_space_equal(select_columns(b0.generator(), rot), b0.generator()));
  CHECK(row_space_equal(select_columns(b.generator(), rot), b.generator()));

  // Degree zero gives the repetition code.
  const LinearCode rep = bch_cyclic(f3, 2, 0);
  CHECK(rep.dimension() == 1);
  CHECK(brute_min_weight(subfield_subcode(rep).generator()) == 8);
}

TEST_CASE("subfield dimensions do not collapse for the cyclic family") {
  for (uint32_t q : {3u, 4u}) {
    auto [p, e] = factor_prime_power(q);
    const Field f = Field::make(p, e);
    for (uint32_t s = 1; s < q; ++s) {
      const LinearCode b = bch_cyclic(f, 2, s);
      const LinearCode b0 = subfield_subcode(b);
      CAPTURE(q);
      CAPTURE(s);
      CHECK(b.dimension() == b0.dimension());
    }
  }
}

TEST_CASE("extended power codes and the puncture relation") {
  const Field f3 = Field::make(3, 1);
  const LinearCode bx = bch_extended(f3, 2, 1);
  CHECK(bx.length() == 10);
  CHECK(bx.provenance().exponents == std::vector<uint64_t>{0, 1, 3, 4});
  const LinearCode b0x = subfield_subcode(bx);
  CHECK(b0x.dimension() == 4);
  CHECK(brute_min_weight(b0x.generator()) == 6);

  // Deleting the two distinguished positions recovers the cyclic code,
  // matching columns through the labels.
  std::vector<size_t> specials;
  for (size_t i = 0; i < bx.length(); ++i) {
    if (bx.labels()[i] == Point{0, 1} || bx.labels()[i] == Point{1, 0}) {
      specials.push_back(i);
    }
  }
  REQUIRE(specials.size() == 2);
  const LinearCode punct = puncture(bx, specials);
  const LinearCode b = bch_cyclic(f3, 2, 1);
  CHECK(row_space_equal(match_columns(punct, b), b.generator()));

  const LinearCode punct0 = puncture(b0x, specials);
  const LinearCode b0 = subfield_subcode(b);
  CHECK(row_space_equal(match_columns(punct0, b0), b0.generator()));

  // Identity puncture and range errors.
  const LinearCode same = puncture(bx, {});
  CHECK(same.generator() == bx.generator());
  CHECK_THROWS_AS(puncture(bx, {10}), std::invalid_argument);
}

TEST_CASE("the triple extension reaches the predicted distance") {
  const Field f3 = Field::make(3, 1);
  const LinearCode bx = bch_extended(f3, 3, 1);
  CHECK(bx.length() == 28);
  CHECK(bx.provenance().exponents ==
        std::vector<uint64_t>{0, 1, 3, 4, 9, 10, 12, 13});
  const LinearCode b0x = subfield_subcode(bx);
  CHECK(b0x.dimension() == 8);
  CHECK(brute_min_weight(b0x.generator()) == 15);
}

TEST_CASE("digit-bounded exponents are the s-fold subset-sum set") {
  for (uint32_t q : {3u, 4u}) {
    for (uint32_t s = 1; s <= 3; ++s) {
      // Subset sums of {1, q, q^2}, zero included.
      std::vector<uint64_t> single;
      for (uint32_t mask = 0; mask < 8; ++mask) {
        uint64_t e = 0;
        uint64_t power = 1;
        for (uint32_t j = 0; j < 3; ++j, power *= q) {
          if (mask & (1u << j)) e += power;
        }
        single.push_back(e);
      }
      std::set<uint64_t> folded{0};
      for (uint32_t round = 0; round < s; ++round) {
        std::set<uint64_t> next;
        for (uint64_t acc : folded) {
          for (uint64_t e : single) next.insert(acc + e);
        }
        folded = std::move(next);
      }
      const auto bounded = bounded_digit_exponents(q, 3, s);
      CAPTURE(q);
      CAPTURE(s);
      CHECK(std::set<uint64_t>(bounded.begin(), bounded.end()) == folded);
      CHECK(bounded.size() == (s + 1) * (s + 1) * (s + 1));
    }
  }
}

TEST_CASE("the boundary degree still constructs") {
  const Field f3 = Field::make(3, 1);
  const LinearCode bx = bch_extended(f3, 2, 2);
  CHECK(bx.length() == 10);
  CHECK(bx.dimension() == 9);
  const LinearCode b0x = subfield_subcode(bx);
  CHECK(b0x.length() == 10);
  CHECK(b0x.dimension() <= 9);
  CHECK(b0x.dimension() >= 1);
  CHECK_THROWS_AS(bch_extended(f3, 2, 3), std::invalid_argument);
}

TEST_CASE("construction guards") {
  const Field f3 = Field::make(3, 1);
  CHECK_THROWS_AS(evaluation_code(f3, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(bch_cyclic(f3, 2, 3), std::invalid_argument);
  // Duplicate labels are rejected.
  CHECK_THROWS_AS(
      LinearCode(f3, Matrix::identity(f3, 2), {{1, 0}, {1, 0}}, {}),
      std::invalid_argument);
}
