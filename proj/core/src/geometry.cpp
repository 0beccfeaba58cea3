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

#include "quadricode/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quadricode {

namespace {

std::vector<uint32_t> mat_vec(const Matrix& m, const std::vector<uint32_t>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
  const Field& f = m.field();
  std::vector<uint32_t> out(m.rows(), 0);
  for (size_t i = 0; i < m.rows(); ++i) {
    uint32_t acc = 0;
    for (size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

}  // namespace

Point normalize_point(const Field& f, Point coords) {
  size_t first = coords.size();
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) {
      first = i;
      break;
    }
  }
  if (first == coords.size()) throw std::invalid_argument("zero vector has no projective class");
  const uint32_t s = f.inv(coords[first]);
  if (s != 1) {
    for (auto& c : coords) c = f.mul(s, c);
  }
  return coords;
}

std::vector<Point> projective_space(const Field& f, uint32_t dim) {
  const uint32_t q = f.cardinality();
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(projective_space_size(q, dim)));
  for (int lead = static_cast<int>(dim); lead >= 0; --lead) {
    Point p(dim + 1, 0);
    p[lead] = 1;
    while (true) {
      out.push_back(p);
      int pos = static_cast<int>(dim);
      while (pos > lead) {
        if (++p[pos] < q) break;
        p[pos] = 0;
        --pos;
      }
      if (pos == lead) break;
    }
  }
  return out;
}

uint64_t projective_space_size(uint64_t q, uint32_t dim) {
  uint64_t total = 0, power = 1;
  for (uint32_t i = 0; i <= dim; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::map<Point, size_t> index_points(const std::vector<Point>& pts) {
  std::map<Point, size_t> out;
  for (size_t i = 0; i < pts.size(); ++i) out.emplace(pts[i], i);
  if (out.size() != pts.size()) throw std::invalid_argument("duplicate points");
  return out;
}

Point apply_to_point(const Matrix& m, const Point& p) {
  return normalize_point(m.field(), mat_vec(m, p));
}

// ---- Form ----

Form::Form(Field f, uint32_t nvars) : field_(std::move(f)), nvars_(nvars) {
  if (!field_.valid()) throw std::invalid_argument("invalid field");
}

Form Form::monomial(const Field& f, std::vector<uint32_t> exps, uint32_t coeff) {
  Form out(f, static_cast<uint32_t>(exps.size()));
  if (coeff != 0) out.terms_.emplace(std::move(exps), coeff);
  return out;
}

void Form::add_term(const std::vector<uint32_t>& exps, uint32_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
    return;
  }
  const uint32_t s = field_.add(it->second, coeff);
  if (s == 0) {
    terms_.erase(it);
  } else {
    it->second = s;
  }
}

uint32_t Form::degree() const {
  uint32_t deg = 0;
  for (const auto& [e, c] : terms_) {
    uint32_t total = 0;
    for (uint32_t x : e) total += x;
    deg = std::max(deg, total);
  }
  return deg;
}

bool Form::homogeneous() const {
  bool first = true;
  uint32_t deg = 0;
  for (const auto& [e, c] : terms_) {
    uint32_t total = 0;
    for (uint32_t x : e) total += x;
    if (first) {
      deg = total;
      first = false;
    } else if (total != deg) {
      return false;
    }
  }
  return true;
}

uint32_t Form::evaluate(const std::vector<uint32_t>& pt) const {
  if (pt.size() != nvars_) throw std::invalid_argument("dimension mismatch");
  uint32_t acc = 0;
  for (const auto& [e, c] : terms_) {
    uint32_t term = c;
    for (uint32_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term = field_.mul(term, field_.pow(pt[i], e[i]));
    }
    acc = field_.add(acc, term);
  }
  return acc;
}

Form Form::operator+(const Form& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_) throw std::invalid_argument("form mismatch");
  Form out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Form Form::operator-(const Form& o) const { return *this + o.scale(field_.neg(1)); }

Form Form::operator*(const Form& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_) throw std::invalid_argument("form mismatch");
  Form out(field_, nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<uint32_t> e(nvars_);
      for (uint32_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, field_.mul(ca, cb));
    }
  }
  return out;
}

Form Form::scale(uint32_t c) const {
  Form out(field_, nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, field_.mul(v, c));
  return out;
}

Form Form::substitute(const Matrix& m) const {
  if (!(field_ == m.field())) throw std::invalid_argument("field mismatch");
  if (m.rows() != nvars_) throw std::invalid_argument("dimension mismatch");
  const uint32_t new_vars = static_cast<uint32_t>(m.cols());
  // Linear replacement forms, one per original variable.
  std::vector<Form> lin;
  lin.reserve(nvars_);
  for (uint32_t i = 0; i < nvars_; ++i) {
    Form l(field_, new_vars);
    for (uint32_t j = 0; j < new_vars; ++j) {
      std::vector<uint32_t> e(new_vars, 0);
      e[j] = 1;
      l.add_term(e, m.at(i, j));
    }
    lin.push_back(std::move(l));
  }
  Form out(field_, new_vars);
  for (const auto& [e, c] : terms_) {
    Form term = Form::monomial(field_, std::vector<uint32_t>(new_vars, 0), c);
    for (uint32_t i = 0; i < nvars_; ++i) {
      for (uint32_t k = 0; k < e[i]; ++k) term = term * lin[i];
    }
    out = out + term;
  }
  return out;
}

Form Form::derivative(uint32_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  const uint32_t p = field_.characteristic();
  Form out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    const uint32_t k = e[var] % p;  // integer multiple inside the prime field
    if (k == 0) continue;
    std::vector<uint32_t> de = e;
    --de[var];
    out.add_term(de, field_.mul(c, k));
  }
  return out;
}

std::string Form::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << '+';
    first = false;
    bool printed = false;
    bool any_var = false;
    for (uint32_t x : e) any_var = any_var || x != 0;
    if (c != 1 || !any_var) {
      os << c;
      printed = true;
    }
    for (uint32_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << '*';
      os << 'x' << i;
      if (e[i] > 1) os << '^' << e[i];
      printed = true;
    }
  }
  return os.str();
}

bool Form::operator==(const Form& o) const {
  return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Form Form::parse(const Field& f, uint32_t nvars, const std::string& text) {
  Form out(f, nvars);
  size_t i = 0;
  const size_t n = text.size();
  const auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_number = [&]() -> uint64_t {
    uint64_t v = 0;
    bool any = false;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<uint64_t>(text[i] - '0');
      if (v > (1u << 24)) throw std::invalid_argument("number out of range in form");
      ++i;
      any = true;
    }
    if (!any) throw std::invalid_argument("expected a number in form");
    return v;
  };

  skip_ws();
  if (i >= n) throw std::invalid_argument("empty form");
  bool negate = false;
  if (text[i] == '+' || text[i] == '-') {
    negate = text[i] == '-';
    ++i;
  }
  while (true) {
    uint32_t coeff = 1;
    std::vector<uint32_t> exps(nvars, 0);
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (i >= n) break;
      const char c = text[i];
      if (c == '+' || c == '-') break;
      if (c == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const uint64_t v = read_number();
        if (v >= f.cardinality()) throw std::invalid_argument("coefficient out of range in form");
        coeff = f.mul(coeff, static_cast<uint32_t>(v));
        any_factor = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        uint32_t var = 0;
        if (c == 'x' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
          ++i;
          var = static_cast<uint32_t>(read_number());
        } else if (c == 'x' || c == 'y' || c == 'z' || c == 't') {
          var = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
          ++i;
        } else {
          throw std::invalid_argument("unknown variable in form");
        }
        if (var >= nvars) throw std::invalid_argument("variable index out of range in form");
        uint32_t ex = 1;
        skip_ws();
        if (i < n && text[i] == '^') {
          ++i;
          skip_ws();
          ex = static_cast<uint32_t>(read_number());
        }
        exps[var] += ex;
        any_factor = true;
        continue;
      }
      throw std::invalid_argument("unexpected character in form");
    }
    if (!any_factor) throw std::invalid_argument("empty term in form");
    out.add_term(exps, negate ? f.neg(coeff) : coeff);
    skip_ws();
    if (i >= n) break;
    negate = text[i] == '-';
    ++i;
  }
  return out;
}

std::vector<std::vector<uint32_t>> degree_monomials(uint32_t nvars, uint32_t degree) {
  std::vector<std::vector<uint32_t>> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<uint32_t> cur(nvars, 0);
  const auto rec = [&](auto&& self, uint32_t pos, uint32_t remaining) -> void {
    if (pos == nvars - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (uint32_t e = remaining + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Point> zero_locus(const Form& f, uint32_t dim) {
  if (f.nvars() != dim + 1) throw std::invalid_argument("dimension mismatch");
  if (!f.homogeneous()) throw std::invalid_argument("zero locus requires a homogeneous form");
  std::vector<Point> out;
  for (const auto& p : projective_space(f.field(), dim)) {
    if (f.evaluate(p) == 0) out.push_back(p);
  }
  return out;
}

std::vector<Form> vanishing_forms(const Field& f, const std::vector<Point>& pts, uint32_t degree) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  const uint32_t nvars = static_cast<uint32_t>(pts[0].size());
  const auto monos = degree_monomials(nvars, degree);
  Matrix eval(f, monos.size(), pts.size());
  for (size_t i = 0; i < monos.size(); ++i) {
    for (size_t j = 0; j < pts.size(); ++j) {
      if (pts[j].size() != nvars) throw std::invalid_argument("ragged point set");
      uint32_t v = 1;
      for (uint32_t x = 0; x < nvars; ++x) {
        if (monos[i][x] != 0) v = f.mul(v, f.pow(pts[j][x], monos[i][x]));
      }
      eval.set(i, j, v);
    }
  }
  const Matrix null = kernel(eval.transpose());
  std::vector<Form> out;
  out.reserve(null.rows());
  for (size_t r = 0; r < null.rows(); ++r) {
    Form g(f, nvars);
    for (size_t i = 0; i < monos.size(); ++i) {
      if (null.at(r, i) != 0) g = g + Form::monomial(f, monos[i], null.at(r, i));
    }
    out.push_back(std::move(g));
  }
  return out;
}

// ---- Segre ----

Point segre_image(const Field& f, const std::vector<Point>& factors) {
  const uint32_t d = static_cast<uint32_t>(factors.size());
  if (d == 0 || d > 20) throw std::invalid_argument("factor count out of range");
  std::vector<Point> norm;
  norm.reserve(d);
  for (const auto& p : factors) {
    if (p.size() != 2) throw std::invalid_argument("factors must be points of a projective line");
    norm.push_back(normalize_point(f, p));
  }
  Point out(1u << d);
  for (uint32_t i = 0; i < (1u << d); ++i) {
    uint32_t v = 1;
    for (uint32_t j = 0; j < d; ++j) {
      v = f.mul(v, norm[j][(i >> (d - 1 - j)) & 1]);
    }
    out[i] = v;
  }
  return normalize_point(f, out);
}

std::vector<Point> segre_variety(const Field& f, uint32_t d) {
  const auto line = projective_space(f, 1);
  std::vector<Point> out;
  std::vector<size_t> idx(d, 0);
  std::vector<Point> factors(d);
  while (true) {
    for (uint32_t j = 0; j < d; ++j) factors[j] = line[idx[j]];
    out.push_back(segre_image(f, factors));
    int pos = static_cast<int>(d) - 1;
    while (pos >= 0) {
      if (++idx[pos] < line.size()) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::pair<Point, Point> segre_factors_d2(const Field& f, const Point& img) {
  if (img.size() != 4) throw std::invalid_argument("expected four coordinates");
  if (f.sub(f.mul(img[0], img[3]), f.mul(img[1], img[2])) != 0)
    throw std::invalid_argument("point violates x0 x3 = x1 x2");
  const Point f0 = (img[0] != 0 || img[2] != 0) ? Point{img[0], img[2]} : Point{img[1], img[3]};
  const Point f1 = (img[0] != 0 || img[1] != 0) ? Point{img[0], img[1]} : Point{img[2], img[3]};
  return {normalize_point(f, f0), normalize_point(f, f1)};
}

// ---- quadrics ----

Form hyperbolic_quadric(const Field& f) {
  return Form::monomial(f, {1, 0, 0, 1}, 1) + Form::monomial(f, {0, 1, 1, 0}, f.neg(1));
}

Form elliptic_quadric(const QuadraticScalars& qs) {
  const Field& base = qs.ext.subfield();
  Form out = Form::monomial(base, {1, 0, 0, 1}, 1);
  out = out + Form::monomial(base, {0, 2, 0, 0}, base.neg(1));
  if (qs.tr != 0) out = out + Form::monomial(base, {0, 1, 1, 0}, base.neg(qs.tr));
  out = out + Form::monomial(base, {0, 0, 2, 0}, base.neg(qs.nrm));
  return out;
}

QuadricType classify_quadric(const Form& q) {
  if (q.nvars() != 4 || q.zero() || !q.homogeneous() || q.degree() != 2)
    throw std::invalid_argument("expected a nonzero quadratic form in four variables");
  const uint64_t count = zero_locus(q, 3).size();
  const uint64_t card = q.field().cardinality();
  if (count == (card + 1) * (card + 1)) return QuadricType::hyperbolic;
  if (count == card * card + 1) return QuadricType::elliptic;
  return QuadricType::other;
}

Point elliptic_param(const QuadraticScalars& qs, uint32_t u, uint32_t v) {
  const Field& base = qs.ext.subfield();
  if (u >= base.cardinality() || v >= base.cardinality())
    throw std::out_of_range("encoding out of range");
  const uint32_t quad = base.add(
      base.mul(u, u), base.add(base.mul(qs.tr, base.mul(u, v)), base.mul(qs.nrm, base.mul(v, v))));
  return {1, u, v, quad};
}

Point elliptic_infinity(const Field& base) {
  (void)base;
  return {0, 0, 0, 1};
}

std::vector<Point> elliptic_points(const QuadraticScalars& qs) {
  const Field& base = qs.ext.subfield();
  const uint32_t q = base.cardinality();
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(q) * q + 1);
  for (uint32_t u = 0; u < q; ++u) {
    for (uint32_t v = 0; v < q; ++v) out.push_back(elliptic_param(qs, u, v));
  }
  out.push_back(elliptic_infinity(base));
  return out;
}

Matrix cyclic_automorphism(const QuadraticScalars& qs) {
  const Field& base = qs.ext.subfield();
  Matrix a(base, 4, 4);
  a.set(0, 0, 1);
  a.set(1, 2, base.neg(qs.nrm));
  a.set(2, 1, 1);
  a.set(2, 2, qs.tr);
  a.set(3, 3, qs.nrm);
  return a;
}

// ---- twisted embeddings ----

uint32_t rotate_index(uint32_t i, uint32_t d) {
  const uint32_t mask = (1u << d) - 1;
  return ((i << 1) | (i >> (d - 1))) & mask;
}

std::vector<std::vector<uint32_t>> rotation_orbits(uint32_t d) {
  const uint32_t n = 1u << d;
  std::vector<bool> seen(n, false);
  std::vector<std::vector<uint32_t>> out;
  for (uint32_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<uint32_t> orbit;
    uint32_t j = i;
    do {
      orbit.push_back(j);
      seen[j] = true;
      j = rotate_index(j, d);
    } while (j != i);
    out.push_back(std::move(orbit));
  }
  return out;
}

TwistedEmbedding make_twisted(const Field& base, uint32_t d) {
  const Field ext = Field::extension(base, d);
  const uint32_t w = ext.primitive_element();
  std::vector<uint32_t> basis(d);
  for (uint32_t k = 0; k < d; ++k) basis[k] = ext.pow(w, k);
  return make_twisted(ext, std::move(basis));
}

TwistedEmbedding make_twisted(const Field& ext_with_subfield, std::vector<uint32_t> basis) {
  const Field& ext = ext_with_subfield;
  if (!ext.has_subfield()) throw std::invalid_argument("requires a designated subfield");
  TwistedEmbedding t;
  t.ext = ext;
  t.base = ext.subfield();
  t.d = ext.subfield_index();
  t.basis = std::move(basis);
  if (t.basis.size() != t.d) throw std::invalid_argument("basis size must match the extension index");
  if (!ext.independent_over_subfield(t.basis))
    throw std::invalid_argument("basis is dependent over the subfield");
  if (t.d > 20) throw std::invalid_argument("extension index out of range");
  const uint32_t n = 1u << t.d;

  t.mu = Matrix(ext, n, n);
  for (const auto& orbit : rotation_orbits(t.d)) {
    const uint32_t len = static_cast<uint32_t>(orbit.size());
    std::vector<uint32_t> gamma;
    if (len == t.d) {
      gamma = t.basis;
    } else {
      // Least greedy basis of the subfield fixed by the len-step Frobenius.
      for (uint32_t x = 1; x < ext.cardinality() && gamma.size() < len; ++x) {
        if (ext.relative_frobenius(x, len) != x) continue;
        gamma.push_back(x);
        if (!ext.independent_over_subfield(gamma)) gamma.pop_back();
      }
      if (gamma.size() != len) throw std::logic_error("orbit subfield has no basis");
    }
    for (uint32_t ti = 0; ti < len; ++ti) {
      for (uint32_t k = 0; k < len; ++k) {
        t.mu.set(orbit[ti], orbit[k], ext.relative_frobenius(gamma[k], ti));
      }
    }
  }
  t.mu_inv = inverse(t.mu);

  // Norm form: product of the Galois conjugates of sum_t basis_t x_t.
  Form prod = Form::monomial(ext, std::vector<uint32_t>(t.d, 0), 1);
  for (uint32_t j = 0; j < t.d; ++j) {
    Form lin(ext, t.d);
    for (uint32_t k = 0; k < t.d; ++k) {
      std::vector<uint32_t> e(t.d, 0);
      e[k] = 1;
      lin = lin + Form::monomial(ext, e, ext.relative_frobenius(t.basis[k], j));
    }
    prod = prod * lin;
  }
  Form down(t.base, t.d);
  for (const auto& [e, c] : prod.terms()) {
    const auto pr = ext.project(c);
    if (!pr) throw std::logic_error("norm form has an irrational coefficient");
    down = down + Form::monomial(t.base, e, *pr);
  }
  t.norm_form = down;

  std::set<Point> seen;
  for (const auto& p : projective_space(ext, 1)) {
    const auto raw = mat_vec(t.mu_inv, psi_coordinates(t, p));
    uint32_t nu = 0;
    for (uint32_t c : raw) {
      if (c != 0) {
        nu = c;
        break;
      }
    }
    if (nu == 0) throw std::logic_error("descended coordinates all vanish");
    const auto nu_base = ext.project(nu);
    if (!nu_base) throw std::logic_error("descent scalar is not rational");
    Point img(raw.size());
    const uint32_t inv = ext.inv(nu);
    for (size_t i = 0; i < raw.size(); ++i) {
      const auto pr = ext.project(ext.mul(inv, raw[i]));
      if (!pr) throw std::logic_error("descended coordinates are not rational");
      img[i] = *pr;
    }
    if (!seen.insert(img).second) throw std::logic_error("descended embedding is not injective");
    t.points.push_back(std::move(img));
    t.scalars.push_back(*nu_base);
  }
  return t;
}

std::vector<uint32_t> psi_coordinates(const TwistedEmbedding& t, const Point& p) {
  if (p.size() != 2) throw std::invalid_argument("expected a point of the projective line");
  const uint32_t n = 1u << t.d;
  const uint64_t q = t.base.cardinality();
  uint64_t m = 0, qj = 1;
  for (uint32_t j = 0; j < t.d; ++j) {
    m += qj;
    qj *= q;
  }
  std::vector<uint32_t> out(n);
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t e = 0;
    qj = 1;
    for (uint32_t j = 0; j < t.d; ++j) {
      if ((i >> j) & 1) e += qj;
      qj *= q;
    }
    out[i] = t.ext.mul(t.ext.pow(p[0], static_cast<int64_t>(e)),
                       t.ext.pow(p[1], static_cast<int64_t>(m - e)));
  }
  return out;
}

Point twisted_image(const TwistedEmbedding& t, const Point& p) {
  const auto y = psi_coordinates(t, p);
  const auto z = normalize_point(t.ext, mat_vec(t.mu_inv, y));
  Point out(z.size());
  for (size_t i = 0; i < z.size(); ++i) {
    const auto pr = t.ext.project(z[i]);
    if (!pr) throw std::logic_error("descended coordinates are not rational");
    out[i] = *pr;
  }
  return out;
}

Matrix twist_matrix_d2(const QuadraticScalars& qs) {
  Matrix a(qs.ext, 4, 4);
  a.set(0, 0, 1);
  a.set(1, 1, 1);
  a.set(1, 2, qs.w);
  a.set(2, 1, 1);
  a.set(2, 2, qs.ext.relative_frobenius(qs.w, 1));
  a.set(3, 3, 1);
  return a;
}

}  // namespace quadricode
