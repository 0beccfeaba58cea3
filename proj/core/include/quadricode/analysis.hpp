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

#ifndef QUADRICODE_ANALYSIS_HPP
#define QUADRICODE_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadricode/codes.hpp"
#include "quadricode/field.hpp"
#include "quadricode/geometry.hpp"
#include "quadricode/matrix.hpp"

namespace quadricode {

// Raised when an exhaustive enumeration would exceed the caller's budget.
class budget_error : public std::runtime_error {
 public:
  budget_error(uint64_t required, uint64_t budget);
  uint64_t required() const { return required_; }
  uint64_t budget() const { return budget_; }

 private:
  uint64_t required_;
  uint64_t budget_;
};

// Computed code parameters with provenance of each number: d_exact only from
// exhaustion, d_lower from a designed-distance argument, d_upper from an
// explicit codeword witness.
struct ParamReport {
  uint32_t n = 0;
  uint32_t k = 0;
  std::optional<uint32_t> d_exact;
  std::optional<uint32_t> d_lower;
  std::optional<uint32_t> d_upper;
  std::vector<std::string> method;
  std::optional<std::vector<uint32_t>> witness;
  uint64_t elapsed_ms = 0;
};

// Number of scalar classes of nonzero messages, (q^k - 1)/(q - 1), saturated
// at 2^63 - 1 on overflow.
uint64_t scalar_class_count(uint32_t q, uint32_t k);

// Exact minimum distance by enumerating one message per scalar class (first
// nonzero coordinate fixed to 1). Work is partitioned deterministically by
// the first two message coordinates; the witness is the codeword of the
// earliest minimizing class in that order regardless of thread count.
// Throws budget_error when the class count exceeds the budget.
ParamReport min_distance_exhaustive(const LinearCode& c, uint64_t budget,
                                    uint32_t threads = 1);

// Root exponents of a cyclic power code: the j for which every spanning row,
// read as the polynomial sum_t c_t x^t, vanishes at alpha^j. Derived from
// the stored exponent set.
std::vector<uint64_t> cyclic_root_exponents(const LinearCode& c);

// Lower bound on the minimum distance: one plus the longest circular run of
// consecutive root exponents.
uint32_t designed_distance(const LinearCode& c);

// True when permuting the columns by perm (column i of the permuted code is
// column perm[i] of the original) preserves the row space.
bool automorphism_check(const LinearCode& c, const std::vector<size_t>& perm);

// True when the two codes have equal row spaces after matching columns by
// the given label bijection (a-label, b-label). Optional column scalars, in
// a's field and aligned with point_map, multiply a's columns first: they
// carry the representative rescaling when the two constructions normalize
// homogeneous coordinates in different charts.
bool equivalence_via_map(const LinearCode& a, const LinearCode& b,
                         const std::vector<std::pair<Point, Point>>& point_map,
                         const std::vector<uint32_t>& column_scalars = {});

// Outcome of transporting a code along a projective transformation of its
// column labels: literal means the bare column permutation preserves the row
// space; monomial means it does after the induced per-column scalars.
struct InvarianceResult {
  bool literal = false;
  bool monomial = false;
};

// Action of an invertible 2x2 matrix over ext on a code whose column labels
// are the points of the projective line over ext; form_degree is the common
// total degree of the evaluated forms (scalars are normalization factors
// raised to that degree, projected into the code's field when it is a
// subfield).
InvarianceResult projective_invariance(const LinearCode& c, const Field& ext,
                                       const Matrix& transform,
                                       uint64_t form_degree);

// Uniformly random invertible 2x2 matrix over the field, from rejection
// sampling with rng() % q digits.
Matrix sample_projective_transform(const Field& f, std::mt19937_64& rng);

// Exhaustive maximum of zero counts over all nonzero form classes modulo the
// ideal: messages run over scalar classes with respect to an independent
// subset of the generator's monomial rows.
struct SectionMaxima {
  uint32_t max_zeros = 0;
  std::vector<std::vector<uint32_t>> messages;
  std::vector<size_t> basis_rows;
};
SectionMaxima max_section_points(const LinearCode& eval_code, uint64_t budget);

// The form a max_section_points message denotes: the message-weighted sum of
// the basis monomial rows of the evaluation code.
Form message_to_form(const LinearCode& eval_code,
                     const std::vector<size_t>& basis_rows,
                     const std::vector<uint32_t>& message);

// Decomposition of a degree-s section of the product surface into s fibers
// of each ruling, when its zero set is exactly such a union.
struct RulingDecomposition {
  std::vector<Point> first;
  std::vector<Point> second;
};
std::optional<RulingDecomposition> ruling_decomposition(const Field& f,
                                                        const Form& section,
                                                        uint32_t s);

// Number of points of the zero locus of `surface` lying on the quadric.
uint32_t curve_point_count(const Form& quadric, const Form& surface);

// Searches for s linear forms whose sections of the point set have the given
// size and are pairwise disjoint; the product form then vanishes on exactly
// s * section_size points. Returns the forms, the product, and the product's
// evaluation codeword.
struct PlaneUnionWitness {
  std::vector<Form> planes;
  Form product;
  uint32_t zeros = 0;
  std::vector<uint32_t> codeword;
};
std::optional<PlaneUnionWitness> plane_union_witness(
    const Field& f, const std::vector<Point>& points, uint32_t s,
    uint32_t section_size);

// Coordinatewise product of two minimum-like words of the degree-one code
// with disjoint zero sets of the given size; the product is verified to lie
// in the degree-two code and is returned as an upper-bound witness.
std::optional<std::vector<uint32_t>> disjoint_zero_product_witness(
    const LinearCode& degree_one, const LinearCode& degree_two,
    uint32_t target_zeros, uint64_t budget);

// Checks that {(i+k, j+k) : i+j+k <= s} equals {0..s} x {0..s} and that the
// latter has (s+1)^2 elements.
bool lemma_uv_check(uint32_t s);

}  // namespace quadricode

#endif  // QUADRICODE_ANALYSIS_HPP
