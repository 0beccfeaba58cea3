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

#ifndef QUADRICODE_GEOMETRY_HPP
#define QUADRICODE_GEOMETRY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadricode/field.hpp"
#include "quadricode/matrix.hpp"

namespace quadricode {

// Homogeneous coordinates, normalized so the first nonzero entry is 1.
using Point = std::vector<uint32_t>;

// Scale so the first nonzero coordinate becomes 1; throws on the zero vector.
Point normalize_point(const Field& f, Point coords);

// Every point of P^dim(F_f), ascending in coordinate-vector lexicographic
// order: (0,...,0,1) first, (1, q-1, ..., q-1) last.
std::vector<Point> projective_space(const Field& f, uint32_t dim);
uint64_t projective_space_size(uint64_t q, uint32_t dim);
std::map<Point, size_t> index_points(const std::vector<Point>& pts);

// Column vector action p -> normalize(m p).
Point apply_to_point(const Matrix& m, const Point& p);

// Multivariate polynomial over a finite field with dense exponent-vector
// keys.  Evaluation uses the convention 0^0 = 1 so that monomials restrict
// coherently to coordinate hyperplanes.
class Form {
 public:
  Form() = default;
  Form(Field f, uint32_t nvars);
  static Form monomial(const Field& f, std::vector<uint32_t> exps, uint32_t coeff);
  // Grammar: terms joined by '+' or '-', each a '*'-separated product of an
  // optional coefficient (a field encoding), and powers `x<i>^<k>`.  The
  // aliases x, y, z, t name x0..x3, and juxtaposition like `3yz` works.
  static Form parse(const Field& f, uint32_t nvars, const std::string& text);

  const Field& field() const { return field_; }
  uint32_t nvars() const { return nvars_; }
  bool zero() const { return terms_.empty(); }
  uint32_t degree() const;
  bool homogeneous() const;
  const std::map<std::vector<uint32_t>, uint32_t>& terms() const { return terms_; }

  uint32_t evaluate(const std::vector<uint32_t>& pt) const;
  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  Form scale(uint32_t c) const;
  // Substitute x_i := sum_j m(i, j) y_j; requires m.rows() == nvars().
  Form substitute(const Matrix& m) const;
  Form derivative(uint32_t var) const;
  std::string text() const;
  bool operator==(const Form& o) const;
  bool operator!=(const Form& o) const { return !(*this == o); }

 private:
  void add_term(const std::vector<uint32_t>& exps, uint32_t coeff);
  Field field_;
  uint32_t nvars_ = 0;
  std::map<std::vector<uint32_t>, uint32_t> terms_;
};

// Exponent vectors of all degree-d monomials in n variables, first variable
// most significant, descending: x0^d first, x_{n-1}^d last.
std::vector<std::vector<uint32_t>> degree_monomials(uint32_t nvars, uint32_t degree);

// Points of P^dim where the form vanishes, in global enumeration order.
std::vector<Point> zero_locus(const Form& f, uint32_t dim);

// Basis of the space of degree-d forms vanishing on every listed point.
std::vector<Form> vanishing_forms(const Field& f, const std::vector<Point>& pts, uint32_t degree);

// ---- Segre products of projective lines ----

// Image of a d-tuple of points of P^1 under the Segre map to P^(2^d - 1):
// coordinate i multiplies factor j's coordinate selected by bit d-1-j of i,
// so for d = 2 the image of (u0:v0),(u1:v1) is (u0u1 : u0v1 : v0u1 : v0v1).
Point segre_image(const Field& f, const std::vector<Point>& factors);

// All Segre images, factors enumerated in product order (last factor
// fastest); for d = 2 these are exactly the points of the quadric
// x0 x3 - x1 x2.
std::vector<Point> segre_variety(const Field& f, uint32_t d);

// Invert the d = 2 Segre map; throws if the point violates x0 x3 = x1 x2.
std::pair<Point, Point> segre_factors_d2(const Field& f, const Point& img);

// ---- quadric surfaces in P^3 ----

Form hyperbolic_quadric(const Field& f);              // x0 x3 - x1 x2
Form elliptic_quadric(const QuadraticScalars& qs);    // x0 x3 - x1^2 - tr x1 x2 - nrm x2^2

enum class QuadricType { hyperbolic, elliptic, other };
// Classify a quadratic form in 4 variables by its point count over the
// base field: (q+1)^2 ruled, q^2+1 pointwise-smooth without lines.
QuadricType classify_quadric(const Form& q);

// Rational parametrization of the elliptic quadric: (u, v) maps to
// (1 : u : v : u^2 + tr uv + nrm v^2), plus (0:0:0:1) at infinity, listed
// last; the affine points run with v fastest.
Point elliptic_param(const QuadraticScalars& qs, uint32_t u, uint32_t v);
Point elliptic_infinity(const Field& base);
std::vector<Point> elliptic_points(const QuadraticScalars& qs);

// Order-(q^2-1) projective automorphism of the elliptic quadric induced by
// multiplication by w on the affine plane identified with F_{q^2}.  Fixes
// (1:0:0:0) and (0:0:0:1) and cycles the remaining q^2 - 1 points.
Matrix cyclic_automorphism(const QuadraticScalars& qs);

// ---- twisted product embeddings ----

// Bit rotation sending bit j to bit j+1 mod d.
uint32_t rotate_index(uint32_t i, uint32_t d);
// Orbits of rotate_index on {0, ..., 2^d - 1}, each starting at its least
// element and following successive rotations, ordered by least element.
std::vector<std::vector<uint32_t>> rotation_orbits(uint32_t d);

// The descended form of the conjugate-product embedding of P^1 over
// F_{q^d}: psi sends (x : y) to the 2^d coordinates x^(e(i)) y^(m - e(i))
// with e(i) summing q^j over the set bits of i, and the change of basis mu
// (block Moore matrices along rotation orbits) turns those values into
// base-field coordinates.
struct TwistedEmbedding {
  Field base;                   // F_q
  Field ext;                    // F_{q^d} with designated subfield base
  uint32_t d = 0;
  std::vector<uint32_t> basis;  // F_q-basis of ext used on full orbits
  Matrix mu;                    // 2^d x 2^d over ext, y = mu z
  Matrix mu_inv;
  std::vector<Point> points;    // descended images over P^1(F_{q^d})
  // First nonzero coordinate of mu_inv psi(p) before normalization, one per
  // point, as a base-field encoding; degree-s forms on the descended points
  // differ from the pre-normalization values by scalars[i]^s.
  std::vector<uint32_t> scalars;
  Form norm_form;               // N(sum_t basis_t x_t) in d variables over base
};

// Default basis: successive powers of the least primitive element.
TwistedEmbedding make_twisted(const Field& base, uint32_t d);
TwistedEmbedding make_twisted(const Field& ext_with_subfield, std::vector<uint32_t> basis);

// Raw conjugate-product coordinates of one point, before descent.
std::vector<uint32_t> psi_coordinates(const TwistedEmbedding& t, const Point& p);
// Descended image of one point of P^1(F_{q^d}).
Point twisted_image(const TwistedEmbedding& t, const Point& p);

// The classical 4x4 change of basis for d = 2 built directly from w; equals
// the mu of make_twisted with basis {1, w}.
Matrix twist_matrix_d2(const QuadraticScalars& qs);

}  // namespace quadricode

#endif  // QUADRICODE_GEOMETRY_HPP
