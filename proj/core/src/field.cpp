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

#include "quadricode/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace quadricode {

namespace {

constexpr uint32_t kMaxCardinality = 1u << 20;
constexpr uint32_t kAddTableMax = 256;
constexpr uint32_t kLogSentinel = 0xFFFFFFFFu;

using Poly = std::vector<uint32_t>;  // little-endian coefficients over GF(p)

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t quot = r / nr;
    t = std::exchange(nt, t - quot * nt);
    r = std::exchange(nr, r - quot * nr);
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  return static_cast<uint32_t>(t < 0 ? t + p : t);
}

Poly pmul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return r;
}

// Reduction by a monic divisor.
void preduce(Poly& r, const Poly& f, uint32_t p) {
  while (r.size() >= f.size()) {
    uint32_t lead = r.back();
    if (lead == 0) {
      r.pop_back();
      continue;
    }
    size_t shift = r.size() - f.size();
    for (size_t i = 0; i + 1 < f.size(); ++i) {
      uint32_t s = static_cast<uint32_t>(static_cast<uint64_t>(lead) * f[i] % p);
      r[shift + i] = (r[shift + i] + p - s) % p;
    }
    r.pop_back();
  }
  trim(r);
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  Poly r = pmul(a, b, p);
  preduce(r, f, p);
  return r;
}

Poly ppowmod(Poly base, uint64_t k, const Poly& f, uint32_t p) {
  Poly result{1};
  preduce(base, f, p);
  while (k != 0) {
    if (k & 1) result = pmulmod(result, base, f, p);
    k >>= 1;
    if (k != 0) base = pmulmod(base, base, f, p);
  }
  return result;
}

Poly pgcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    uint32_t linv = mod_inverse(b.back(), p);
    while (a.size() >= b.size()) {
      uint32_t lead = a.back();
      if (lead == 0) {
        a.pop_back();
        continue;
      }
      uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(lead) * linv % p);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i + 1 < b.size(); ++i) {
        uint32_t s = static_cast<uint32_t>(static_cast<uint64_t>(c) * b[i] % p);
        a[shift + i] = (a[shift + i] + p - s) % p;
      }
      a.pop_back();
    }
    trim(a);
    std::swap(a, b);
  }
  return a;
}

std::vector<uint32_t> distinct_prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t c = 2; static_cast<uint64_t>(c) * c <= n; ++c) {
    if (n % c == 0) {
      out.push_back(c);
      while (n % c == 0) n /= c;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<uint32_t> digits_of(uint32_t enc, uint32_t p, uint32_t e) {
  std::vector<uint32_t> d(e, 0);
  for (uint32_t i = 0; i < e && enc != 0; ++i) {
    d[i] = enc % p;
    enc /= p;
  }
  return d;
}

uint32_t digits_to_enc(const std::vector<uint32_t>& d, uint32_t p) {
  uint32_t enc = 0;
  for (size_t i = d.size(); i-- > 0;) enc = enc * p + d[i];
  return enc;
}

}  // namespace

namespace detail {

struct FieldImpl {
  uint32_t p = 0;
  uint32_t e = 0;
  uint32_t q = 0;
  std::vector<uint32_t> modulus;
  std::vector<uint32_t> exp_;  // doubled: exp_[i] = g^i for i < 2(q-1)
  std::vector<uint32_t> log_;  // log_[0] = kLogSentinel
  std::vector<uint32_t> neg_;
  std::vector<uint32_t> add_;  // q*q lookup when q <= kAddTableMax
  uint32_t generator = 0;
  std::vector<uint32_t> qm1_primes;

  struct Sub {
    Field base;
    uint32_t d = 0;
    std::vector<uint32_t> embed_tab;
    std::unordered_map<uint32_t, uint32_t> project_tab;
  };
  std::optional<Sub> sub;
};

}  // namespace detail

namespace {

using detail::FieldImpl;

uint32_t impl_add(const FieldImpl& F, uint32_t a, uint32_t b) {
  if (F.p == 2) return a ^ b;
  if (!F.add_.empty()) return F.add_[a * F.q + b];
  uint32_t r = 0, place = 1;
  while (a != 0 || b != 0) {
    r += ((a % F.p) + (b % F.p)) % F.p * place;
    place *= F.p;
    a /= F.p;
    b /= F.p;
  }
  return r;
}

uint32_t impl_mul(const FieldImpl& F, uint32_t a, uint32_t b) {
  if (a == 0 || b == 0) return 0;
  return F.exp_[F.log_[a] + F.log_[b]];
}

uint32_t impl_inv(const FieldImpl& F, uint32_t a) {
  if (a == 0) throw std::domain_error("division by zero");
  return F.exp_[(F.q - 1) - F.log_[a]];
}

uint32_t impl_pow(const FieldImpl& F, uint32_t a, int64_t k) {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("division by zero");
    return 0;
  }
  const int64_t n = F.q - 1;
  if (n == 0) return 1;  // the one-element multiplicative group
  int64_t r = k % n;
  if (r < 0) r += n;
  uint64_t idx = static_cast<uint64_t>(F.log_[a]) * static_cast<uint64_t>(r) % static_cast<uint64_t>(n);
  return F.exp_[idx];
}

uint32_t impl_slow_mul(const FieldImpl& F, uint32_t a, uint32_t b) {
  Poly pa = digits_of(a, F.p, F.e);
  Poly pb = digits_of(b, F.p, F.e);
  Poly r = pmulmod(pa, pb, F.modulus, F.p);
  r.resize(F.e, 0);
  return digits_to_enc(r, F.p);
}

uint32_t impl_slow_pow(const FieldImpl& F, uint32_t a, uint64_t k) {
  uint32_t result = 1;
  while (k != 0) {
    if (k & 1) result = impl_slow_mul(F, result, a);
    k >>= 1;
    if (k != 0) a = impl_slow_mul(F, a, a);
  }
  return result;
}

std::shared_ptr<FieldImpl> build_impl(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  uint64_t q64 = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q64 *= p;
    if (q64 > kMaxCardinality) throw std::invalid_argument("field size exceeds 2^20");
  }
  const uint32_t q = static_cast<uint32_t>(q64);
  if (modulus.size() != e + 1 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree matching the field");
  for (uint32_t c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");

  auto impl = std::make_shared<FieldImpl>();
  impl->p = p;
  impl->e = e;
  impl->q = q;
  impl->modulus = modulus;

  impl->neg_.resize(q);
  for (uint32_t a = 0; a < q; ++a) {
    uint32_t v = a, r = 0, place = 1;
    while (v != 0) {
      r += (p - v % p) % p * place;
      place *= p;
      v /= p;
    }
    impl->neg_[a] = r;
  }

  if (p != 2 && q <= kAddTableMax) {
    impl->add_.resize(static_cast<size_t>(q) * q);
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        uint32_t va = a, vb = b, r = 0, place = 1;
        while (va != 0 || vb != 0) {
          r += ((va % p) + (vb % p)) % p * place;
          place *= p;
          va /= p;
          vb /= p;
        }
        impl->add_[a * q + b] = r;
      }
    }
  }

  impl->qm1_primes = distinct_prime_factors(q - 1);
  uint32_t gen = 0;
  for (uint32_t g = 1; g < q; ++g) {
    bool ok = true;
    for (uint32_t r : impl->qm1_primes) {
      if (impl_slow_pow(*impl, g, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("no multiplicative generator found");
  impl->generator = gen;

  impl->exp_.resize(2 * static_cast<size_t>(q - 1));
  impl->log_.assign(q, kLogSentinel);
  impl->exp_[0] = 1;
  impl->log_[1] = 0;
  for (uint32_t i = 1; i < q - 1; ++i) {
    impl->exp_[i] = impl_slow_mul(*impl, impl->exp_[i - 1], gen);
    impl->log_[impl->exp_[i]] = i;
  }
  for (uint32_t i = 0; i < q - 1; ++i) impl->exp_[q - 1 + i] = impl->exp_[i];
  return impl;
}

void attach_subfield(FieldImpl& big, const Field& base, uint32_t d) {
  if (!base.valid()) throw std::invalid_argument("invalid base field");
  if (d == 0) throw std::invalid_argument("extension index must be positive");
  if (base.characteristic() != big.p || base.degree() * d != big.e)
    throw std::invalid_argument("extension degrees are inconsistent");

  FieldImpl::Sub s;
  s.base = base;
  s.d = d;
  const uint32_t qs = base.cardinality();
  s.embed_tab.resize(qs);

  if (base.degree() == 1) {
    // The prime subfield: encodings already agree.
    for (uint32_t c = 0; c < qs; ++c) s.embed_tab[c] = c;
  } else {
    // Least root of the base modulus inside the big field.
    const auto& bm = base.modulus();
    uint32_t root = 0;
    bool found = false;
    for (uint32_t x = 0; x < big.q; ++x) {
      uint32_t acc = 0;
      for (size_t i = bm.size(); i-- > 0;) acc = impl_add(big, impl_mul(big, acc, x), bm[i]);
      if (acc == 0) {
        root = x;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("base modulus has no root in the extension");
    for (uint32_t c = 0; c < qs; ++c) {
      auto coeffs = base.coefficients(c);
      uint32_t acc = 0;
      for (size_t i = coeffs.size(); i-- > 0;)
        acc = impl_add(big, impl_mul(big, acc, root), coeffs[i]);
      s.embed_tab[c] = acc;
    }
  }

  for (uint32_t c = 0; c < qs; ++c) s.project_tab.emplace(s.embed_tab[c], c);
  if (s.project_tab.size() != qs) throw std::logic_error("subfield embedding is not injective");
  big.sub = std::move(s);
}

}  // namespace

Field::Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}

Field Field::make(uint32_t p, uint32_t e) { return make(p, e, least_irreducible(p, e)); }

Field Field::make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus) {
  return Field(build_impl(p, e, modulus));
}

Field Field::extension(const Field& base, uint32_t d) {
  if (!base.valid()) throw std::invalid_argument("invalid base field");
  return extension(base, d, least_irreducible(base.characteristic(), base.degree() * d));
}

Field Field::extension(const Field& base, uint32_t d, const std::vector<uint32_t>& modulus) {
  if (!base.valid()) throw std::invalid_argument("invalid base field");
  auto impl = build_impl(base.characteristic(), base.degree() * d, modulus);
  attach_subfield(*impl, base, d);
  return Field(std::move(impl));
}

namespace {
const FieldImpl& ref(const std::shared_ptr<const FieldImpl>& p) {
  if (!p) throw std::logic_error("uninitialized field");
  return *p;
}
}  // namespace

uint32_t Field::characteristic() const { return ref(impl_).p; }
uint32_t Field::degree() const { return ref(impl_).e; }
uint32_t Field::cardinality() const { return ref(impl_).q; }
const std::vector<uint32_t>& Field::modulus() const { return ref(impl_).modulus; }

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  return impl_->p == other.impl_->p && impl_->e == other.impl_->e &&
         impl_->modulus == other.impl_->modulus;
}

uint32_t Field::add(uint32_t a, uint32_t b) const { return impl_add(ref(impl_), a, b); }
uint32_t Field::sub(uint32_t a, uint32_t b) const {
  const auto& F = ref(impl_);
  return impl_add(F, a, F.neg_[b]);
}
uint32_t Field::neg(uint32_t a) const { return ref(impl_).neg_[a]; }
uint32_t Field::mul(uint32_t a, uint32_t b) const { return impl_mul(ref(impl_), a, b); }
uint32_t Field::inv(uint32_t a) const { return impl_inv(ref(impl_), a); }
uint32_t Field::div(uint32_t a, uint32_t b) const {
  const auto& F = ref(impl_);
  return impl_mul(F, a, impl_inv(F, b));
}
uint32_t Field::pow(uint32_t a, int64_t k) const { return impl_pow(ref(impl_), a, k); }

uint32_t Field::frobenius(uint32_t a, uint32_t k) const {
  const auto& F = ref(impl_);
  k %= F.e;
  uint64_t exp = 1;
  for (uint32_t i = 0; i < k; ++i) exp *= F.p;
  return impl_pow(F, a, static_cast<int64_t>(exp));
}

uint32_t Field::element_order(uint32_t a) const {
  const auto& F = ref(impl_);
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  uint32_t order = F.q - 1;
  for (uint32_t r : F.qm1_primes) {
    while (order % r == 0 && impl_pow(F, a, order / r) == 1) order /= r;
  }
  return order;
}

uint32_t Field::primitive_element() const { return ref(impl_).generator; }

std::vector<uint32_t> Field::primitive_elements(size_t count) const {
  const auto& F = ref(impl_);
  std::vector<uint32_t> out;
  for (uint32_t a = 1; a < F.q && out.size() < count; ++a) {
    if (element_order(a) == F.q - 1) out.push_back(a);
  }
  return out;
}

std::vector<uint32_t> Field::coefficients(uint32_t enc) const {
  const auto& F = ref(impl_);
  if (enc >= F.q) throw std::out_of_range("encoding out of range");
  return digits_of(enc, F.p, F.e);
}

uint32_t Field::encode(const std::vector<uint32_t>& coeffs) const {
  const auto& F = ref(impl_);
  if (coeffs.size() > F.e) throw std::invalid_argument("too many coefficients");
  for (uint32_t c : coeffs)
    if (c >= F.p) throw std::invalid_argument("coefficient out of range");
  return digits_to_enc(coeffs, F.p);
}

bool Field::has_subfield() const { return ref(impl_).sub.has_value(); }

const Field& Field::subfield() const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  return F.sub->base;
}

uint32_t Field::subfield_index() const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  return F.sub->d;
}

uint32_t Field::embed(uint32_t sub_enc) const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  if (sub_enc >= F.sub->embed_tab.size()) throw std::out_of_range("encoding out of range");
  return F.sub->embed_tab[sub_enc];
}

std::optional<uint32_t> Field::project(uint32_t enc) const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  auto it = F.sub->project_tab.find(enc);
  if (it == F.sub->project_tab.end()) return std::nullopt;
  return it->second;
}

bool Field::in_subfield(uint32_t enc) const { return project(enc).has_value(); }

uint32_t Field::norm(uint32_t enc) const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  const uint32_t qs = F.sub->base.cardinality();
  uint32_t val = impl_pow(F, enc, (F.q - 1) / (qs - 1));
  auto down = project(val);
  if (!down) throw std::logic_error("norm landed outside the subfield");
  return *down;
}

uint32_t Field::trace(uint32_t enc) const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  const uint32_t qs = F.sub->base.cardinality();
  uint32_t acc = 0, x = enc;
  for (uint32_t i = 0; i < F.sub->d; ++i) {
    acc = impl_add(F, acc, x);
    x = impl_pow(F, x, qs);
  }
  auto down = project(acc);
  if (!down) throw std::logic_error("trace landed outside the subfield");
  return *down;
}

uint32_t Field::relative_frobenius(uint32_t enc, uint32_t k) const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  return frobenius(enc, F.sub->base.degree() * k);
}

std::vector<uint32_t> Field::extension_basis(BasisStyle style) const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  const uint32_t d = F.sub->d;
  if (style == BasisStyle::polynomial) {
    std::vector<uint32_t> basis(d);
    uint32_t t = F.p >= F.q ? 0 : F.p;  // residue class of the defining variable
    basis[0] = 1;
    for (uint32_t k = 1; k < d; ++k) basis[k] = impl_pow(F, t, k);
    return basis;
  }
  for (uint32_t b = 1; b < F.q; ++b) {
    std::vector<uint32_t> orbit(d);
    uint32_t x = b;
    for (uint32_t i = 0; i < d; ++i) {
      orbit[i] = x;
      x = relative_frobenius(x, 1);
    }
    if (independent_over_subfield(orbit)) return orbit;
  }
  throw std::logic_error("no normal basis found");
}

bool Field::independent_over_subfield(const std::vector<uint32_t>& elems) const {
  const auto& F = ref(impl_);
  if (!F.sub) throw std::logic_error("field has no designated subfield");
  const size_t k = elems.size();
  if (k == 0) return true;
  if (k > F.sub->d) return false;
  // Moore matrix rank test: rows are successive relative Frobenius images.
  std::vector<std::vector<uint32_t>> m(k, std::vector<uint32_t>(k));
  for (size_t j = 0; j < k; ++j) {
    uint32_t x = elems[j];
    for (size_t i = 0; i < k; ++i) {
      m[i][j] = x;
      x = relative_frobenius(x, 1);
    }
  }
  size_t rank = 0;
  for (size_t col = 0; col < k && rank < k; ++col) {
    size_t piv = rank;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) continue;
    std::swap(m[piv], m[rank]);
    const uint32_t inv_p = impl_inv(F, m[rank][col]);
    for (size_t j = col; j < k; ++j) m[rank][j] = impl_mul(F, m[rank][j], inv_p);
    for (size_t r = 0; r < k; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const uint32_t f = m[r][col];
      for (size_t j = col; j < k; ++j)
        m[r][j] = impl_add(F, m[r][j], F.neg_[impl_mul(F, f, m[rank][j])]);
    }
    ++rank;
  }
  return rank == k;
}

FieldElement Field::operator()(uint32_t enc) const {
  if (enc >= ref(impl_).q) throw std::out_of_range("encoding out of range");
  return FieldElement(*this, enc);
}
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

uint32_t FieldElement::check(const FieldElement& o) const {
  if (!(f_ == o.f_)) throw std::invalid_argument("field mismatch");
  return o.v_;
}

SubfieldDecomposition::SubfieldDecomposition(Field top, std::vector<uint32_t> basis)
    : top_(std::move(top)), basis_(std::move(basis)) {
  if (!top_.has_subfield()) throw std::logic_error("field has no designated subfield");
  const uint32_t d = top_.subfield_index();
  if (basis_.size() != d) throw std::invalid_argument("basis size must match the extension index");
  const Field& base = top_.subfield();
  const uint32_t p = top_.characteristic();
  esub_ = base.degree();
  etop_ = top_.degree();
  const uint32_t E = etop_;

  // Column (i, j) holds the prime-field digits of basis_i * embed(t^j).
  std::vector<std::vector<uint32_t>> a(E, std::vector<uint32_t>(2 * E, 0));
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = 0; j < esub_; ++j) {
      uint32_t tj = 1;
      for (uint32_t s = 0; s < j; ++s) tj *= p;  // base encoding of t^j
      const uint32_t prod = top_.mul(basis_[i], top_.embed(tj));
      const auto dig = top_.coefficients(prod);
      const uint32_t col = i * esub_ + j;
      for (uint32_t row = 0; row < E; ++row) a[row][col] = dig[row];
    }
  }
  for (uint32_t i = 0; i < E; ++i) a[i][E + i] = 1;

  // Gauss-Jordan over GF(p).
  uint32_t rank = 0;
  for (uint32_t col = 0; col < E; ++col) {
    uint32_t piv = rank;
    while (piv < E && a[piv][col] == 0) ++piv;
    if (piv == E) continue;
    std::swap(a[piv], a[rank]);
    const uint64_t ipiv = mod_inverse(a[rank][col], p);
    for (uint32_t j = 0; j < 2 * E; ++j)
      a[rank][j] = static_cast<uint32_t>(a[rank][j] * ipiv % p);
    for (uint32_t r = 0; r < E; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const uint64_t f = a[r][col];
      for (uint32_t j = 0; j < 2 * E; ++j)
        a[r][j] = static_cast<uint32_t>((a[r][j] + (p - 1) * f % p * a[rank][j]) % p);
    }
    ++rank;
  }
  if (rank != E) throw std::invalid_argument("basis is dependent over the subfield");
  inverse_.resize(static_cast<size_t>(E) * E);
  for (uint32_t r = 0; r < E; ++r)
    for (uint32_t c = 0; c < E; ++c) inverse_[r * E + c] = a[r][E + c];
}

std::vector<uint32_t> SubfieldDecomposition::coords(uint32_t enc) const {
  const uint32_t p = top_.characteristic();
  const uint32_t E = etop_;
  const auto y = top_.coefficients(enc);
  std::vector<uint32_t> a(E, 0);
  for (uint32_t r = 0; r < E; ++r) {
    uint64_t acc = 0;
    for (uint32_t c = 0; c < E; ++c) acc += static_cast<uint64_t>(inverse_[r * E + c]) * y[c];
    a[r] = static_cast<uint32_t>(acc % p);
  }
  const uint32_t d = top_.subfield_index();
  std::vector<uint32_t> out(d, 0);
  for (uint32_t i = 0; i < d; ++i) {
    uint32_t enc_i = 0, place = 1;
    for (uint32_t j = 0; j < esub_; ++j) {
      enc_i += a[i * esub_ + j] * place;
      place *= p;
    }
    out[i] = enc_i;
  }
  return out;
}

uint32_t SubfieldDecomposition::compose(const std::vector<uint32_t>& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate count mismatch");
  uint32_t acc = 0;
  for (size_t i = 0; i < basis_.size(); ++i)
    acc = top_.add(acc, top_.mul(top_.embed(coords[i]), basis_[i]));
  return acc;
}

QuadraticScalars quadratic_scalars(const Field& base) {
  Field ext = Field::extension(base, 2);
  return quadratic_scalars(ext, ext.primitive_element());
}

QuadraticScalars quadratic_scalars(const Field& ext, uint32_t w_enc) {
  if (!ext.has_subfield() || ext.subfield_index() != 2)
    throw std::invalid_argument("requires a degree-two extension with designated subfield");
  if (ext.element_order(w_enc) != ext.cardinality() - 1)
    throw std::invalid_argument("w must be a primitive element");
  return QuadraticScalars{ext, w_enc, ext.trace(w_enc), ext.norm(w_enc)};
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t c = 2; static_cast<uint64_t>(c) * c <= n; ++c)
    if (n % c == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<uint32_t>& poly, uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  for (uint32_t c : poly)
    if (c >= p) throw std::invalid_argument("coefficient out of range");
  Poly f = poly;
  trim(f);
  if (f.size() <= 1) return false;
  const uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  if (deg == 1) return true;
  if (f.back() != 1) {
    const uint64_t linv = mod_inverse(f.back(), p);
    for (auto& c : f) c = static_cast<uint32_t>(c * linv % p);
  }
  if (f[0] == 0) return false;

  std::vector<uint32_t> checkpoints;
  for (uint32_t r : distinct_prime_factors(deg)) checkpoints.push_back(deg / r);
  std::sort(checkpoints.begin(), checkpoints.end());

  const Poly x{0, 1};
  Poly h = x;
  uint32_t k = 0;
  auto advance_to = [&](uint32_t target) {
    while (k < target) {
      h = ppowmod(h, p, f, p);
      ++k;
    }
  };
  for (uint32_t t : checkpoints) {
    advance_to(t);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = diff.empty() ? f : pgcd(diff, f, p);
    if (g.size() != 1) return false;
  }
  advance_to(deg);
  return h == x;
}

std::vector<uint32_t> nth_irreducible(uint32_t p, uint32_t e, uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (e == 0) throw std::invalid_argument("degree must be positive");
  uint64_t bound = 1;
  for (uint32_t i = 0; i < e; ++i) {
    bound *= p;
    if (bound > kMaxCardinality) throw std::invalid_argument("field size exceeds 2^20");
  }
  for (uint64_t enc = 0; enc < bound; ++enc) {
    std::vector<uint32_t> f(e + 1, 0);
    uint64_t v = enc;
    for (uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) {
      if (n == 0) return f;
      --n;
    }
  }
  throw std::invalid_argument("irreducible index out of range");
}

std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t e) { return nth_irreducible(p, e, 0); }

std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power");
  uint32_t p = q;
  for (uint32_t c = 2; static_cast<uint64_t>(c) * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  uint32_t e = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) throw std::invalid_argument("not a prime power");
  return {p, e};
}

}  // namespace quadricode
