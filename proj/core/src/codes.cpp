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

#include "quadricode/codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace quadricode {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

LinearCode::LinearCode(Field field, Matrix generator,
                       std::vector<Point> labels, CodeProvenance provenance)
    : field_(std::move(field)),
      generator_(std::move(generator)),
      labels_(std::move(labels)),
      provenance_(std::move(provenance)),
      rank_(0) {
  require(!labels_.empty(), "a code needs at least one column");
  require(generator_.cols() == labels_.size(),
          "generator width must match the label count");
  require(generator_.field() == field_,
          "generator must be defined over the code's field");
  require(std::set<Point>(labels_.begin(), labels_.end()).size() ==
              labels_.size(),
          "column labels must be pairwise distinct");
  rank_ = rank(generator_);
}

LinearCode evaluation_code(const Field& f, const std::vector<Point>& points,
                           uint32_t degree) {
  require(!points.empty(), "evaluation needs a nonempty point set");
  const size_t nvars = points.front().size();
  const auto monomials = degree_monomials(nvars, degree);
  Matrix gen(f, monomials.size(), points.size());
  for (size_t r = 0; r < monomials.size(); ++r) {
    const Form mono = Form::monomial(f, monomials[r], 1);
    for (size_t c = 0; c < points.size(); ++c) {
      require(points[c].size() == nvars,
              "all evaluation points must share one ambient space");
      gen.set(r, c, mono.evaluate(points[c]));
    }
  }
  CodeProvenance prov;
  prov.family = "evaluation";
  prov.q = f.cardinality();
  prov.s = static_cast<int32_t>(degree);
  return LinearCode(f, std::move(gen), points, std::move(prov));
}

LinearCode extended_rs(const Field& f, uint32_t s) {
  require(s < f.cardinality(),
          "an extended Reed-Solomon code needs degree below the field size");
  const auto points = projective_space(f, 1);
  Matrix gen(f, s + 1, points.size());
  for (uint32_t i = 0; i <= s; ++i) {
    for (size_t c = 0; c < points.size(); ++c) {
      gen.set(i, c, f.mul(f.pow(points[c][0], i), f.pow(points[c][1], s - i)));
    }
  }
  CodeProvenance prov;
  prov.family = "extended-rs";
  prov.q = f.cardinality();
  prov.s = static_cast<int32_t>(s);
  return LinearCode(f, std::move(gen), points, std::move(prov));
}

LinearCode tensor_code(const LinearCode& a, const LinearCode& b) {
  require(a.field() == b.field(),
          "tensor factors must share one coefficient field");
  Matrix gen = kronecker(a.generator(), b.generator());
  std::vector<Point> labels;
  labels.reserve(a.length() * b.length());
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) {
      Point joined = la;
      joined.insert(joined.end(), lb.begin(), lb.end());
      labels.push_back(std::move(joined));
    }
  }
  CodeProvenance prov;
  prov.family = "tensor";
  prov.q = a.field().cardinality();
  prov.a = a.provenance().s;
  prov.b = b.provenance().s;
  return LinearCode(a.field(), std::move(gen), std::move(labels),
                    std::move(prov));
}

LinearCode bidegree_code(const Field& f, uint32_t a, uint32_t b) {
  const LinearCode left = extended_rs(f, a);
  const LinearCode right = extended_rs(f, b);
  Matrix gen = kronecker(left.generator(), right.generator());
  std::vector<Point> labels;
  labels.reserve(left.length() * right.length());
  for (const auto& la : left.labels()) {
    for (const auto& lb : right.labels()) {
      labels.push_back(segre_image(f, {la, lb}));
    }
  }
  CodeProvenance prov;
  prov.family = "bidegree";
  prov.q = f.cardinality();
  prov.a = static_cast<int32_t>(a);
  prov.b = static_cast<int32_t>(b);
  return LinearCode(f, std::move(gen), std::move(labels), std::move(prov));
}

std::vector<uint64_t> bounded_digit_exponents(uint32_t q, uint32_t d,
                                              uint32_t s) {
  std::vector<uint64_t> out{0};
  uint64_t power = 1;
  for (uint32_t t = 0; t < d; ++t) {
    std::vector<uint64_t> next;
    next.reserve(out.size() * (s + 1));
    for (uint64_t digit = 0; digit <= s; ++digit) {
      for (uint64_t e : out) next.push_back(e + digit * power);
    }
    out = std::move(next);
    power *= q;
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearCode bch_cyclic(const Field& ext, uint32_t s) {
  require(ext.has_subfield(), "the cyclic family needs an extension tower");
  const Field base = ext.subfield();
  const uint32_t q = base.cardinality();
  const uint32_t d = ext.subfield_index();
  require(s < q, "the cyclic family needs degree below the base field size");
  const uint64_t n = ext.cardinality() - 1;

  std::set<uint64_t> residues;
  for (uint64_t e : bounded_digit_exponents(q, d, s)) residues.insert(e % n);
  std::vector<uint64_t> exps(residues.begin(), residues.end());

  const uint32_t alpha = ext.primitive_element();
  Matrix gen(ext, exps.size(), n);
  std::vector<Point> labels;
  labels.reserve(n);
  for (uint64_t t = 0; t < n; ++t) {
    const uint32_t zeta = ext.pow(alpha, static_cast<int64_t>(t));
    labels.push_back({1, zeta});
    for (size_t r = 0; r < exps.size(); ++r) {
      gen.set(r, t, ext.pow(zeta, static_cast<int64_t>(exps[r])));
    }
  }
  CodeProvenance prov;
  prov.family = "bch-cyclic";
  prov.q = q;
  prov.d = d;
  prov.s = static_cast<int32_t>(s);
  prov.exponents = std::move(exps);
  return LinearCode(ext, std::move(gen), std::move(labels), std::move(prov));
}

LinearCode bch_cyclic(const Field& base, uint32_t d, uint32_t s) {
  return bch_cyclic(Field::extension(base, d), s);
}

LinearCode bch_extended(const Field& ext, uint32_t s) {
  require(ext.has_subfield(), "the extended family needs an extension tower");
  const Field base = ext.subfield();
  const uint32_t q = base.cardinality();
  const uint32_t d = ext.subfield_index();
  require(s <= q - 1,
          "the extended family needs degree at most the base field size less "
          "one");
  const uint64_t n = ext.cardinality() - 1;
  const uint64_t m = static_cast<uint64_t>(s) * (n / (q - 1));

  const auto exps = bounded_digit_exponents(q, d, s);
  const auto points = projective_space(ext, 1);
  Matrix gen(ext, exps.size(), points.size());
  for (size_t r = 0; r < exps.size(); ++r) {
    for (size_t c = 0; c < points.size(); ++c) {
      const uint32_t x = points[c][0];
      const uint32_t y = points[c][1];
      gen.set(r, c,
              ext.mul(ext.pow(x, static_cast<int64_t>(exps[r])),
                      ext.pow(y, static_cast<int64_t>(m - exps[r]))));
    }
  }
  CodeProvenance prov;
  prov.family = "bch-extended";
  prov.q = q;
  prov.d = d;
  prov.s = static_cast<int32_t>(s);
  prov.exponents = exps;
  return LinearCode(ext, std::move(gen), points, std::move(prov));
}

LinearCode bch_extended(const Field& base, uint32_t d, uint32_t s) {
  return bch_extended(Field::extension(base, d), s);
}

LinearCode subfield_subcode(const LinearCode& c) {
  require(c.field().has_subfield(),
          "a subfield subcode needs an extension tower");
  Matrix gen = subfield_subcode(c.generator());
  CodeProvenance prov = c.provenance();
  prov.family += "-subfield";
  return LinearCode(c.field().subfield(), std::move(gen), c.labels(),
                    std::move(prov));
}

LinearCode puncture(const LinearCode& c, const std::vector<size_t>& positions) {
  std::set<size_t> drop(positions.begin(), positions.end());
  for (size_t p : drop) {
    require(p < c.length(), "puncture position out of range");
  }
  require(drop.size() < c.length(), "puncturing must leave at least a column");
  std::vector<size_t> keep;
  std::vector<Point> labels;
  for (size_t i = 0; i < c.length(); ++i) {
    if (drop.count(i) == 0) {
      keep.push_back(i);
      labels.push_back(c.labels()[i]);
    }
  }
  Matrix gen = select_columns(c.generator(), keep);
  CodeProvenance prov = c.provenance();
  if (!drop.empty()) prov.family += "-punctured";
  return LinearCode(c.field(), std::move(gen), std::move(labels),
                    std::move(prov));
}

}  // namespace quadricode
