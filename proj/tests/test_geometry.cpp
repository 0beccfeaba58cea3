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
#include <set>
#include <vector>

#include "quadricode/field.hpp"
#include "quadricode/geometry.hpp"
#include "quadricode/matrix.hpp"

using namespace quadricode;

namespace {

bool proj_equal(const Field& f, const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) {
      if (f.mul(a[i], b[j]) != f.mul(a[j], b[i])) return false;
    }
  }
  bool a_zero = true, b_zero = true;
  for (uint32_t x : a) a_zero = a_zero && x == 0;
  for (uint32_t x : b) b_zero = b_zero && x == 0;
  return a_zero == b_zero;
}

bool forms_proportional(const Form& a, const Form& b) {
  if (a.zero() || b.zero()) return a.zero() && b.zero();
  if (a.terms().begin()->first != b.terms().begin()->first) return false;
  const Field& f = a.field();
  const uint32_t c = f.div(b.terms().begin()->second, a.terms().begin()->second);
  return a.scale(c) == b;
}

}  // namespace

TEST_CASE("projective spaces enumerate each class once, in ascending order") {
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    auto [p, e] = factor_prime_power(q);
    const Field f = Field::make(p, e);
    for (uint32_t dim : {1u, 2u, 3u}) {
      const auto pts = projective_space(f, dim);
      CAPTURE(q);
      CAPTURE(dim);
      CHECK(pts.size() == projective_space_size(q, dim));
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      CHECK(std::set<Point>(pts.begin(), pts.end()).size() == pts.size());
      for (const auto& pt : pts) CHECK(pt == normalize_point(f, pt));
    }
  }
  // Every nonzero vector reduces to exactly one listed representative.
  const Field f3 = Field::make(3, 1);
  const auto pts = projective_space(f3, 2);
  const auto idx = index_points(pts);
  size_t hits = 0;
  for (uint32_t a = 0; a < 3; ++a) {
    for (uint32_t b = 0; b < 3; ++b) {
      for (uint32_t c = 0; c < 3; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const Point n = normalize_point(f3, {a, b, c});
        REQUIRE(idx.count(n) == 1);
        ++hits;
      }
    }
  }
  CHECK(hits == 26);
  CHECK(pts.front() == Point{0, 0, 1});
  CHECK(pts.back() == Point{1, 2, 2});
  CHECK_THROWS_AS(normalize_point(f3, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("forms parse, evaluate, print and differentiate") {
  const Field f5 = Field::make(5, 1);
  const Form g = Form::parse(f5, 4, "3*y^2 + 3*y*z + z^2 + 4*x*t");
  CHECK(g.degree() == 2);
  CHECK(g.homogeneous());
  CHECK(g.nvars() == 4);
  // At (x, y, z, t) = (1, 1, 1, 1): 3 + 3 + 1 + 4 = 11 = 1 mod 5.
  CHECK(g.evaluate({1, 1, 1, 1}) == 1);
  CHECK(g.evaluate({0, 1, 2, 0}) == (3 + 3 * 2 + 4) % 5);
  // Juxtaposed and explicit spellings agree, and text round-trips.
  CHECK(g == Form::parse(f5, 4, "3y^2+3yz+z^2+4xt"));
  CHECK(g == Form::parse(f5, 4, g.text()));

  const Form h = Form::parse(f5, 2, "x0^2*x1 - x1^2");
  CHECK(h.evaluate({2, 3}) == (4 * 3 + 5 * 5 - 9) % 5);
  CHECK(h.derivative(0) == Form::parse(f5, 2, "2*x0*x1"));
  CHECK(h.derivative(1) == Form::parse(f5, 2, "x0^2-2*x1"));
  CHECK_FALSE(h.homogeneous());

  // Monomial evaluation treats 0^0 as 1.
  const Form m = Form::monomial(f5, {0, 2}, 1);
  CHECK(m.evaluate({0, 1}) == 1);
  CHECK(m.evaluate({4, 0}) == 0);

  // Characteristic-p derivative kills p-th powers.
  const Field f3 = Field::make(3, 1);
  CHECK(Form::parse(f3, 1, "x0^3").derivative(0).zero());

  CHECK_THROWS_AS(Form::parse(f5, 2, "x2+1"), std::invalid_argument);
  CHECK_THROWS_AS(Form::parse(f5, 2, "7*x0"), std::invalid_argument);
  CHECK_THROWS_AS(Form::parse(f5, 2, "x0+"), std::invalid_argument);
  CHECK_THROWS_AS(Form::parse(f5, 2, ""), std::invalid_argument);
}

TEST_CASE("linear substitution composes with evaluation") {
  const Field f5 = Field::make(5, 1);
  const Form g = Form::parse(f5, 3, "x0*x2 + 2*x1^2");
  const Matrix m = Matrix::from_rows(f5, {{1, 2, 0}, {0, 1, 1}, {3, 0, 1}});
  const Form gm = g.substitute(m);
  for (uint32_t a = 0; a < 5; ++a) {
    for (uint32_t b = 0; b < 5; ++b) {
      for (uint32_t c = 0; c < 5; ++c) {
        const std::vector<uint32_t> x{a, b, c};
        std::vector<uint32_t> mx(3, 0);
        for (size_t i = 0; i < 3; ++i)
          for (size_t j = 0; j < 3; ++j) mx[i] = f5.add(mx[i], f5.mul(m.at(i, j), x[j]));
        CHECK(gm.evaluate(x) == g.evaluate(mx));
      }
    }
  }
  CHECK(g.substitute(Matrix::identity(f5, 3)) == g);
}

TEST_CASE("degree monomial enumeration is complete and descending") {
  const auto m42 = degree_monomials(4, 2);
  CHECK(m42.size() == 10);
  CHECK(m42.front() == std::vector<uint32_t>{2, 0, 0, 0});
  CHECK(m42.back() == std::vector<uint32_t>{0, 0, 0, 2});
  for (const auto& e : m42) CHECK(e[0] + e[1] + e[2] + e[3] == 2);
  CHECK(std::is_sorted(m42.rbegin(), m42.rend()));
  CHECK(degree_monomials(2, 3).size() == 4);
  CHECK(degree_monomials(8, 2).size() == 36);
  CHECK(degree_monomials(3, 0) == std::vector<std::vector<uint32_t>>{{0, 0, 0}});
}

TEST_CASE("the product surface coincides with the zero locus of x0x3 - x1x2") {
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    auto [p, e] = factor_prime_power(q);
    const Field f = Field::make(p, e);
    const auto segre = segre_variety(f, 2);
    CAPTURE(q);
    CHECK(segre.size() == (q + 1) * (q + 1));
    CHECK(std::set<Point>(segre.begin(), segre.end()).size() == segre.size());
    const auto locus = zero_locus(hyperbolic_quadric(f), 3);
    CHECK(std::set<Point>(segre.begin(), segre.end()) ==
          std::set<Point>(locus.begin(), locus.end()));
    CHECK(classify_quadric(hyperbolic_quadric(f)) == QuadricType::hyperbolic);
    // Round trip through the two rulings.
    for (const auto& pt : segre) {
      const auto [f0, f1] = segre_factors_d2(f, pt);
      CHECK(segre_image(f, {f0, f1}) == pt);
    }
  }
  const Field f3 = Field::make(3, 1);
  CHECK_THROWS_AS(segre_factors_d2(f3, {1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("triple products satisfy the bitwise quadric relations") {
  const Field f2 = Field::make(2, 1);
  const auto cube = segre_variety(f2, 3);
  CHECK(cube.size() == 27);
  CHECK(std::set<Point>(cube.begin(), cube.end()).size() == 27);
  for (const auto& c : cube) {
    for (uint32_t i = 0; i < 8; ++i) {
      for (uint32_t j = 0; j < 8; ++j) {
        CHECK(f2.mul(c[i], c[j]) == f2.mul(c[i | j], c[i & j]));
      }
    }
  }
}

TEST_CASE("elliptic parametrization covers the anisotropic quadric exactly") {
  for (uint32_t q : {3u, 4u, 5u, 7u}) {
    auto [p, e] = factor_prime_power(q);
    const auto qs = quadratic_scalars(Field::make(p, e));
    const auto pts = elliptic_points(qs);
    CAPTURE(q);
    CHECK(pts.size() == q * q + 1);
    CHECK(std::set<Point>(pts.begin(), pts.end()).size() == pts.size());
    CHECK(pts.back() == Point{0, 0, 0, 1});
    const Form quad = elliptic_quadric(qs);
    for (const auto& pt : pts) CHECK(quad.evaluate(pt) == 0);
    const auto locus = zero_locus(quad, 3);
    CHECK(std::set<Point>(pts.begin(), pts.end()) ==
          std::set<Point>(locus.begin(), locus.end()));
    CHECK(classify_quadric(quad) == QuadricType::elliptic);
  }
  // A split pair of planes is neither type.
  const Field f3 = Field::make(3, 1);
  CHECK(classify_quadric(Form::parse(f3, 4, "x*y")) == QuadricType::other);
}

TEST_CASE("the multiplication automorphism cycles the affine elliptic points") {
  for (uint32_t q : {3u, 4u, 5u}) {
    auto [p, e] = factor_prime_power(q);
    const auto qs = quadratic_scalars(Field::make(p, e));
    const Matrix a = cyclic_automorphism(qs);
    const auto pts = elliptic_points(qs);
    const auto idx = index_points(pts);
    CAPTURE(q);

    // The matrix permutes the quadric's points, fixing exactly two.
    uint32_t fixed = 0;
    for (const auto& pt : pts) {
      const Point img = apply_to_point(a, pt);
      REQUIRE(idx.count(img) == 1);
      if (img == pt) ++fixed;
    }
    CHECK(fixed == 2);
    CHECK(apply_to_point(a, {1, 0, 0, 0}) == Point{1, 0, 0, 0});
    CHECK(apply_to_point(a, {0, 0, 0, 1}) == Point{0, 0, 0, 1});

    // One orbit passes through every remaining point.
    const Point start = elliptic_param(qs, 1, 0);
    Point cur = start;
    std::set<Point> visited;
    do {
      visited.insert(cur);
      cur = apply_to_point(a, cur);
    } while (cur != start);
    CHECK(visited.size() == q * q - 1);

    // The quadratic form transforms by its multiplier.
    const Form quad = elliptic_quadric(qs);
    CHECK(quad.substitute(a) == quad.scale(qs.nrm));
  }
}

TEST_CASE("bit rotation orbits") {
  CHECK(rotation_orbits(2) ==
        std::vector<std::vector<uint32_t>>{{0}, {1, 2}, {3}});
  CHECK(rotation_orbits(3) ==
        std::vector<std::vector<uint32_t>>{{0}, {1, 2, 4}, {3, 6, 5}, {7}});
  const auto o4 = rotation_orbits(4);
  REQUIRE(o4.size() == 6);
  CHECK(o4[0] == std::vector<uint32_t>{0});
  CHECK(o4[1] == std::vector<uint32_t>{1, 2, 4, 8});
  CHECK(o4[2] == std::vector<uint32_t>{3, 6, 12, 9});
  CHECK(o4[3] == std::vector<uint32_t>{5, 10});
  CHECK(o4[4] == std::vector<uint32_t>{7, 14, 13, 11});
  CHECK(o4[5] == std::vector<uint32_t>{15});
}

TEST_CASE("conjugate-product coordinates obey the rotation identity") {
  const Field f3 = Field::make(3, 1);
  const TwistedEmbedding t = make_twisted(f3, 3);
  for (const auto& p : projective_space(t.ext, 1)) {
    const auto y = psi_coordinates(t, p);
    for (uint32_t i = 0; i < 8; ++i) {
      CHECK(y[rotate_index(i, 3)] == t.ext.pow(y[i], 3));
    }
  }
  // Explicit d = 2 chart: psi(x : 1) = (1, x, x^q, x^(q+1)).
  const auto qs = quadratic_scalars(f3);
  const TwistedEmbedding t2 = make_twisted(qs.ext, {1, qs.w});
  for (uint32_t x = 0; x < 9; ++x) {
    const auto y = psi_coordinates(t2, {x, 1});
    CHECK(y[0] == 1);
    CHECK(y[1] == x);
    CHECK(y[2] == qs.ext.pow(x, 3));
    CHECK(y[3] == qs.ext.pow(x, 4));
  }
  CHECK(psi_coordinates(t2, {1, 0}) == std::vector<uint32_t>{0, 0, 0, 1});
}

TEST_CASE("the descended quadratic embedding is the elliptic parametrization") {
  for (uint32_t q : {3u, 4u, 5u}) {
    auto [p, e] = factor_prime_power(q);
    const auto qs = quadratic_scalars(Field::make(p, e));
    const TwistedEmbedding t = make_twisted(qs.ext, {1, qs.w});
    CAPTURE(q);
    CHECK(t.mu == twist_matrix_d2(qs));
    CHECK(t.points.size() == q * q + 1);
    const auto ell = elliptic_points(qs);
    CHECK(std::set<Point>(t.points.begin(), t.points.end()) ==
          std::set<Point>(ell.begin(), ell.end()));
    // The norm form in two variables is the binary quadratic of w.
    Form expected = Form::monomial(t.base, {2, 0}, 1);
    expected = expected + Form::monomial(t.base, {1, 1}, qs.tr);
    expected = expected + Form::monomial(t.base, {0, 2}, qs.nrm);
    CHECK(t.norm_form == expected);
    // Affine images follow the chart (1 : u : v : Q(u, v)).
    for (uint32_t u = 0; u < q; ++u) {
      for (uint32_t v = 0; v < q; ++v) {
        const uint32_t x = t.ext.add(t.ext.embed(u), t.ext.mul(qs.w, t.ext.embed(v)));
        CHECK(twisted_image(t, {x, 1}) == elliptic_param(qs, u, v));
      }
    }
    CHECK(twisted_image(t, {1, 0}) == Point{0, 0, 0, 1});
  }
}

TEST_CASE("norm forms evaluate to field norms") {
  for (uint32_t d : {2u, 3u}) {
    const Field f3 = Field::make(3, 1);
    const TwistedEmbedding t = make_twisted(f3, d);
    CAPTURE(d);
    std::vector<uint32_t> u(d, 0);
    while (true) {
      uint32_t x = 0;
      for (uint32_t k = 0; k < d; ++k)
        x = t.ext.add(x, t.ext.mul(t.basis[k], t.ext.embed(u[k])));
      const uint32_t expected = x == 0 ? 0 : t.ext.norm(x);
      CHECK(t.norm_form.evaluate(u) == expected);
      size_t i = 0;
      while (i < d && ++u[i] == 3) u[i++] = 0;
      if (i == d) break;
    }
    // The norm form vanishes only at the origin, so it is irreducible.
    CHECK(t.norm_form.degree() == d);
  }
}

TEST_CASE("descent produces rational points matching the raw coordinates") {
  for (uint32_t q : {2u, 3u}) {
    auto [p, e] = factor_prime_power(q);
    const Field base = Field::make(p, e);
    const TwistedEmbedding t = make_twisted(base, 3);
    CAPTURE(q);
    CHECK(t.points.size() == q * q * q + 1);
    CHECK(std::set<Point>(t.points.begin(), t.points.end()).size() == t.points.size());
    const auto line = projective_space(t.ext, 1);
    for (size_t i = 0; i < line.size(); ++i) {
      // Lift the descended point and check mu z is projectively psi.
      std::vector<uint32_t> z(t.points[i].size());
      for (size_t k = 0; k < z.size(); ++k) z[k] = t.ext.embed(t.points[i][k]);
      const auto y = psi_coordinates(t, line[i]);
      std::vector<uint32_t> muz(z.size(), 0);
      for (size_t r = 0; r < z.size(); ++r)
        for (size_t c = 0; c < z.size(); ++c)
          muz[r] = t.ext.add(muz[r], t.ext.mul(t.mu.at(r, c), z[c]));
      CHECK(proj_equal(t.ext, muz, y));
    }
  }
}

TEST_CASE("twisted cubic surfaces are cut out by their quadrics") {
  for (uint32_t q : {2u, 3u}) {
    auto [p, e] = factor_prime_power(q);
    const Field base = Field::make(p, e);
    const TwistedEmbedding t = make_twisted(base, 3);
    const auto quads = vanishing_forms(base, t.points, 2);
    CAPTURE(q);
    CHECK(!quads.empty());
    const std::set<Point> pts(t.points.begin(), t.points.end());
    for (const auto& candidate : projective_space(base, 7)) {
      bool on_all = true;
      for (const auto& g : quads) {
        if (g.evaluate(candidate) != 0) {
          on_all = false;
          break;
        }
      }
      CHECK(on_all == (pts.count(candidate) == 1));
    }
  }
}

TEST_CASE("quadrics through the surfaces are spanned by the defining forms") {
  // For parameters where the degree-2 evaluation has corank one, the unique
  // vanishing quadric is the defining equation itself.
  const Field f3 = Field::make(3, 1);
  const auto hyp = vanishing_forms(f3, segre_variety(f3, 2), 2);
  REQUIRE(hyp.size() == 1);
  CHECK(forms_proportional(hyp[0], hyperbolic_quadric(f3)));

  const auto qs = quadratic_scalars(Field::make(2, 2));
  const auto ell = vanishing_forms(qs.ext.subfield(), elliptic_points(qs), 2);
  REQUIRE(ell.size() == 1);
  CHECK(forms_proportional(ell[0], elliptic_quadric(qs)));
}

TEST_CASE("example quadric over five with twenty-six points") {
  const Field f5 = Field::make(5, 1);
  const Form g = Form::parse(f5, 4, "3*y^2+3*y*z+z^2+4*x*t");
  CHECK(zero_locus(g, 3).size() == 26);
  CHECK(classify_quadric(g) == QuadricType::elliptic);
}
