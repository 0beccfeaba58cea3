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

#ifndef QUADRICODE_CODES_HPP
#define QUADRICODE_CODES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quadricode/field.hpp"
#include "quadricode/geometry.hpp"
#include "quadricode/matrix.hpp"

namespace quadricode {

// Construction record carried by every code: the family name, the defining
// parameters, and, for cyclic families, the exponent set of the spanning
// power functions reduced modulo the length.
struct CodeProvenance {
  std::string family;
  uint32_t q = 0;
  uint32_t d = 0;
  int32_t s = -1;
  int32_t a = -1;
  int32_t b = -1;
  std::vector<uint64_t> exponents;
};

// A linear code presented by a generator matrix whose rows may be dependent;
// the dimension is the rank. Columns carry distinct labels (projective
// points or concatenated factor labels) so that codes built by different
// constructions can be matched column-by-column.
class LinearCode {
 public:
  LinearCode(Field field, Matrix generator, std::vector<Point> labels,
             CodeProvenance provenance);

  const Field& field() const { return field_; }
  const Matrix& generator() const { return generator_; }
  const std::vector<Point>& labels() const { return labels_; }
  const CodeProvenance& provenance() const { return provenance_; }
  size_t length() const { return labels_.size(); }
  uint32_t dimension() const { return rank_; }

 private:
  Field field_;
  Matrix generator_;
  std::vector<Point> labels_;
  CodeProvenance provenance_;
  uint32_t rank_;
};

// Evaluation code of all degree-s monomials at the given projective points,
// monomials in the order of degree_monomials, labels equal to the points.
LinearCode evaluation_code(const Field& f, const std::vector<Point>& points,
                           uint32_t degree);

// Extended Reed-Solomon code on the projective line: rows x0^i x1^(s-i) for
// i = 0..s evaluated at all q+1 points. Requires s < q; parameters are
// [q+1, s+1, q-s+1].
LinearCode extended_rs(const Field& f, uint32_t s);

// Tensor product: Kronecker product of the generators; column labels are the
// concatenations of the factor labels, first factor outermost.
LinearCode tensor_code(const LinearCode& a, const LinearCode& b);

// Tensor of two extended Reed-Solomon codes of degrees a and b with columns
// relabeled by the Segre images of the point pairs, so the code can be
// matched against evaluation codes on the product surface.
LinearCode bidegree_code(const Field& f, uint32_t a, uint32_t b);

// Cyclic code of length q^d - 1 over the degree-d extension, spanned by the
// power functions zeta -> zeta^r with r running over all digit-bounded sums
// i_0 + i_1 q + ... + i_{d-1} q^(d-1), 0 <= i_t <= s, reduced modulo the
// length. Columns are ordered by powers of the canonical primitive element;
// column t is labeled (1 : alpha^t). Requires s < q.
LinearCode bch_cyclic(const Field& base, uint32_t d, uint32_t s);
LinearCode bch_cyclic(const Field& ext, uint32_t s);

// Extension of the cyclic family to all q^d + 1 points of the projective
// line: rows x0^i x1^(m-i) with m = s (q^d - 1)/(q - 1) and i in the same
// digit-bounded exponent set, columns in global point order. Requires
// s <= q - 1.
LinearCode bch_extended(const Field& base, uint32_t d, uint32_t s);
LinearCode bch_extended(const Field& ext, uint32_t s);

// Subfield subcode: the codewords with all coordinates in the base subfield,
// as a code over that subfield. Labels are preserved.
LinearCode subfield_subcode(const LinearCode& c);

// Deletes the given column positions (deduplicated) from every codeword.
LinearCode puncture(const LinearCode& c, const std::vector<size_t>& positions);

// The digit-bounded exponent set of the cyclic family, as integers
// i_0 + i_1 q + ... + i_{d-1} q^(d-1) with 0 <= i_t <= s, sorted ascending
// (not reduced modulo anything).
std::vector<uint64_t> bounded_digit_exponents(uint32_t q, uint32_t d,
                                              uint32_t s);

}  // namespace quadricode

#endif  // QUADRICODE_CODES_HPP
