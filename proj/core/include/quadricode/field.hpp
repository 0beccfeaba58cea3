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

#ifndef QUADRICODE_FIELD_HPP
#define QUADRICODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace quadricode {

namespace detail {
struct FieldImpl;
}

class FieldElement;

// GF(p^e) with an explicit monic irreducible modulus over GF(p).
//
// Elements are encoded as integers: the residue class with coefficients
// c_0 + c_1 t + ... + c_{e-1} t^{e-1} has encoding c_0 + c_1 p + ... +
// c_{e-1} p^{e-1}.  Encoding 0 is the additive and 1 the multiplicative
// identity.  All operations are pure; a Field is immutable and cheap to
// copy.  Fields larger than 2^20 elements are rejected.
//
// A field may carry a designated subfield (a tower F_q inside F_{q^d}),
// with an explicit embedding computed at construction.  norm(), trace()
// and project() are relative to that subfield.
class Field {
 public:
  Field() = default;

  // GF(p^e) with the lexicographically least monic irreducible modulus,
  // least by the canonical encoding of its coefficient sequence.
  static Field make(uint32_t p, uint32_t e);

  // Modulus coefficients little-endian (constant term first), length e+1,
  // monic.  Throws if the polynomial is reducible.
  static Field make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus);

  // F_{q^d} represented as GF(p^{e*d}) with `base` as designated subfield.
  // The embedding sends the residue class of t in `base` to the least root
  // of the base modulus inside the big field.
  static Field extension(const Field& base, uint32_t d);
  static Field extension(const Field& base, uint32_t d,
                         const std::vector<uint32_t>& modulus);

  bool valid() const { return impl_ != nullptr; }

  uint32_t characteristic() const;
  uint32_t degree() const;       // e over the prime field
  uint32_t cardinality() const;  // p^e
  const std::vector<uint32_t>& modulus() const;

  // Structural identity: same p, e and modulus.  The subfield designation
  // does not participate, so elements of structurally equal fields mix.
  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  // ---- arithmetic on canonical encodings ----
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws on 0
  uint32_t div(uint32_t a, uint32_t b) const;
  // pow(0, 0) is 1; negative exponents invert.
  uint32_t pow(uint32_t a, int64_t k) const;
  // a^(p^k), the k-fold Frobenius over the prime field.
  uint32_t frobenius(uint32_t a, uint32_t k = 1) const;

  uint32_t element_order(uint32_t a) const;  // multiplicative order, throws on 0
  // Least-encoding generator of the multiplicative group.
  uint32_t primitive_element() const;
  // The first `count` generators in encoding order.
  std::vector<uint32_t> primitive_elements(size_t count) const;

  std::vector<uint32_t> coefficients(uint32_t enc) const;  // little-endian, length e
  uint32_t encode(const std::vector<uint32_t>& coeffs) const;

  // ---- designated subfield ----
  bool has_subfield() const;
  const Field& subfield() const;     // throws if none
  uint32_t subfield_index() const;   // d with |this| = |subfield|^d
  uint32_t embed(uint32_t sub_enc) const;
  std::optional<uint32_t> project(uint32_t enc) const;
  bool in_subfield(uint32_t enc) const;
  // N(x) = x^((q^d-1)/(q-1)) and Tr(x) = x + x^q + ... + x^(q^(d-1)),
  // returned as encodings of the designated subfield.
  uint32_t norm(uint32_t enc) const;
  uint32_t trace(uint32_t enc) const;
  // x^(q^k) where q is the subfield cardinality.
  uint32_t relative_frobenius(uint32_t enc, uint32_t k = 1) const;

  enum class BasisStyle { polynomial, normal };
  // A basis of this field over the designated subfield: the polynomial
  // basis 1, t, ..., t^(d-1), or a normal basis b, b^q, ..., b^(q^(d-1))
  // with b the least encoding that works.
  std::vector<uint32_t> extension_basis(BasisStyle style = BasisStyle::polynomial) const;
  // True iff the elements are linearly independent over the designated
  // subfield (Moore matrix rank test).
  bool independent_over_subfield(const std::vector<uint32_t>& elems) const;

  FieldElement operator()(uint32_t enc) const;
  FieldElement zero() const;
  FieldElement one() const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl);
  std::shared_ptr<const detail::FieldImpl> impl_;
};

// A field element bound to its field.  Convenient for expression-style
// code; hot loops should use the encoding-level Field operations.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, uint32_t enc) : f_(std::move(f)), v_(enc) {}

  const Field& field() const { return f_; }
  uint32_t enc() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return {f_, f_.add(v_, check(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {f_, f_.sub(v_, check(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {f_, f_.mul(v_, check(o))}; }
  FieldElement operator/(const FieldElement& o) const { return {f_, f_.div(v_, check(o))}; }
  FieldElement operator-() const { return {f_, f_.neg(v_)}; }
  FieldElement inverse() const { return {f_, f_.inv(v_)}; }
  FieldElement pow(int64_t k) const { return {f_, f_.pow(v_, k)}; }
  FieldElement frobenius(uint32_t k = 1) const { return {f_, f_.frobenius(v_, k)}; }

  bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  uint32_t check(const FieldElement& o) const;
  Field f_;
  uint32_t v_ = 0;
};

// Coordinates of elements of a field with respect to a fixed basis over
// its designated subfield.  The change-of-basis inverse is computed once.
class SubfieldDecomposition {
 public:
  SubfieldDecomposition(Field top, std::vector<uint32_t> basis);

  const Field& top() const { return top_; }
  const std::vector<uint32_t>& basis() const { return basis_; }
  // d subfield encodings c with enc = sum c_i * basis_i.
  std::vector<uint32_t> coords(uint32_t enc) const;
  uint32_t compose(const std::vector<uint32_t>& coords) const;

 private:
  Field top_;
  std::vector<uint32_t> basis_;
  std::vector<uint32_t> inverse_;  // row-major (E x E) over GF(p)
  uint32_t esub_ = 0, etop_ = 0;
};

// Scalars of the irreducible binary quadratic attached to a primitive w
// of F_{q^2}: Q(x, y) = (x + w y)(x + w^q y) = x^2 + tr x y + nrm y^2.
struct QuadraticScalars {
  Field ext;      // F_{q^2} with designated subfield F_q
  uint32_t w;     // primitive element of ext
  uint32_t tr;    // trace of w, encoded in the base field
  uint32_t nrm;   // norm of w, encoded in the base field
};

// Uses the least primitive element of F_{q^2} unless w_enc names another
// one.  Pass a prebuilt extension to control the modulus choice.
QuadraticScalars quadratic_scalars(const Field& base);
QuadraticScalars quadratic_scalars(const Field& ext_with_subfield, uint32_t w_enc);

// ---- polynomial utilities over GF(p) (little-endian coefficients) ----
bool is_prime(uint32_t n);
bool is_irreducible(const std::vector<uint32_t>& poly, uint32_t p);
std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t e);
// The n-th monic irreducible of degree e in encoding order (0-based).
std::vector<uint32_t> nth_irreducible(uint32_t p, uint32_t e, uint32_t n);
// Factor q = p^e with p prime; throws if q is not a prime power.
std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q);

}  // namespace quadricode

#endif  // QUADRICODE_FIELD_HPP
