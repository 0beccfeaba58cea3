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

#include "quadricode/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <set>
#include <thread>

namespace quadricode {

namespace {

uint64_t elapsed_since(std::chrono::steady_clock::time_point start) {
  const auto dt = std::chrono::steady_clock::now() - start;
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
}

// One unit of the scalar-class scan: the first nonzero message coordinate is
// `lead` (fixed to 1) and, when `second` is nonnegative, the next coordinate
// is fixed to it; the remaining coordinates run through a full odometer.
struct ScanTask {
  uint32_t lead = 0;
  int32_t second = -1;
};

struct ScanResult {
  uint32_t weight = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> message;
};

std::vector<ScanTask> scan_tasks(uint32_t k, uint32_t q) {
  std::vector<ScanTask> tasks;
  for (uint32_t lead = 0; lead + 1 < k; ++lead)
    for (uint32_t v = 0; v < q; ++v)
      tasks.push_back({lead, static_cast<int32_t>(v)});
  tasks.push_back({k - 1, -1});
  return tasks;
}

using StepTable = std::vector<std::vector<std::vector<uint32_t>>>;

// steps[p][v] is (enc(v+1) - enc(v)) * rows[p], wrapping to enc 0 at v = q-1,
// so an odometer digit increment is always a single vector add.  Encodings
// of non-prime fields are not integer multiples of 1, which is why the
// stepped row depends on the digit value.
StepTable digit_steps(const Field& f,
                      const std::vector<std::vector<uint32_t>>& rows,
                      uint32_t q) {
  StepTable steps(rows.size());
  for (size_t p = 0; p < rows.size(); ++p) {
    steps[p].resize(q);
    for (uint32_t v = 0; v < q; ++v) {
      const uint32_t next = v + 1 == q ? 0 : v + 1;
      const uint32_t c = f.sub(next, v);
      auto& dst = steps[p][v];
      dst.resize(rows[p].size());
      for (size_t i = 0; i < rows[p].size(); ++i)
        dst[i] = f.mul(c, rows[p][i]);
    }
  }
  return steps;
}

// Word of the task's first message: the lead coordinate is 1 and, when
// present, the pinned second coordinate multiplies the following row.
std::vector<uint32_t> task_start(const Field& f,
                                 const std::vector<std::vector<uint32_t>>& basis,
                                 const ScanTask& task,
                                 std::vector<uint32_t>& msg,
                                 size_t& first_free) {
  const size_t k = basis.size();
  const size_t n = basis[0].size();
  msg.assign(k, 0);
  std::vector<uint32_t> word = basis[task.lead];
  msg[task.lead] = 1;
  first_free = k;
  if (task.second >= 0) {
    const auto v = static_cast<uint32_t>(task.second);
    msg[task.lead + 1] = v;
    if (v != 0) {
      const auto& row = basis[task.lead + 1];
      for (size_t i = 0; i < n; ++i) word[i] = f.add(word[i], f.mul(v, row[i]));
    }
    first_free = task.lead + 2;
  }
  return word;
}

// Visits every message of the task in odometer order (last coordinate
// fastest), keeping the first message attaining the minimum weight.
ScanResult scan_task(const Field& f,
                     const std::vector<std::vector<uint32_t>>& basis,
                     const StepTable& steps, uint32_t q, const ScanTask& task) {
  const size_t k = basis.size();
  const size_t n = basis[0].size();
  std::vector<uint32_t> msg;
  size_t first_free = 0;
  std::vector<uint32_t> word = task_start(f, basis, task, msg, first_free);
  ScanResult best;
  while (true) {
    uint32_t weight = 0;
    for (uint32_t x : word) weight += (x != 0);
    if (weight < best.weight) {
      best.weight = weight;
      best.message = msg;
    }
    size_t p = first_free;
    while (p < k) {
      const auto& row = steps[p][msg[p]];
      for (size_t i = 0; i < n; ++i) word[i] = f.add(word[i], row[i]);
      if (++msg[p] < q) break;
      msg[p] = 0;
      ++p;
    }
    if (p >= k) break;
  }
  return best;
}

// ---- packed characteristic-2 scan ----
//
// Encodings of GF(2^e) are coefficient bit vectors, so addition is XOR and a
// whole word of coordinates can be added in one machine operation.  Each
// coordinate occupies an e-bit lane of a 64-bit word; a weight count ORs the
// lane bits down onto the lane's low bit and popcounts.

struct PackedLayout {
  uint32_t width = 0;   // bits per coordinate
  uint32_t lanes = 0;   // coordinates per 64-bit word
  size_t words = 0;
  uint64_t lsb = 0;     // low bit of every lane
};

PackedLayout packed_layout(const Field& f, size_t n) {
  PackedLayout lay;
  lay.width = f.degree();
  lay.lanes = 64 / lay.width;
  lay.words = (n + lay.lanes - 1) / lay.lanes;
  for (uint32_t l = 0; l < lay.lanes; ++l)
    lay.lsb |= uint64_t{1} << (l * lay.width);
  return lay;
}

std::vector<uint64_t> pack_row(const PackedLayout& lay,
                               const std::vector<uint32_t>& row) {
  std::vector<uint64_t> out(lay.words, 0);
  for (size_t i = 0; i < row.size(); ++i)
    out[i / lay.lanes] |= uint64_t{row[i]} << ((i % lay.lanes) * lay.width);
  return out;
}

uint32_t packed_weight(const PackedLayout& lay, uint64_t x) {
  for (uint32_t b = 1; b < lay.width; b <<= 1) x |= x >> b;
  return static_cast<uint32_t>(std::popcount(x & lay.lsb));
}

ScanResult scan_task_packed(const Field& f,
                            const std::vector<std::vector<uint32_t>>& basis,
                            const StepTable& steps, const PackedLayout& lay,
                            uint32_t q, const ScanTask& task) {
  const size_t k = basis.size();
  std::vector<uint32_t> msg;
  size_t first_free = 0;
  const auto start = task_start(f, basis, task, msg, first_free);

  std::vector<std::vector<std::vector<uint64_t>>> psteps(k);
  for (size_t p = first_free; p < k; ++p) {
    psteps[p].reserve(q);
    for (uint32_t v = 0; v < q; ++v) psteps[p].push_back(pack_row(lay, steps[p][v]));
  }

  ScanResult best;
  if (lay.words == 1) {
    uint64_t word = pack_row(lay, start)[0];
    while (true) {
      const uint32_t weight = packed_weight(lay, word);
      if (weight < best.weight) {
        best.weight = weight;
        best.message = msg;
      }
      size_t p = first_free;
      while (p < k) {
        word ^= psteps[p][msg[p]][0];
        if (++msg[p] < q) break;
        msg[p] = 0;
        ++p;
      }
      if (p >= k) break;
    }
    return best;
  }

  std::vector<uint64_t> word = pack_row(lay, start);
  while (true) {
    uint32_t weight = 0;
    for (uint64_t w : word) weight += packed_weight(lay, w);
    if (weight < best.weight) {
      best.weight = weight;
      best.message = msg;
    }
    size_t p = first_free;
    while (p < k) {
      const auto& dl = psteps[p][msg[p]];
      for (size_t i = 0; i < word.size(); ++i) word[i] ^= dl[i];
      if (++msg[p] < q) break;
      msg[p] = 0;
      ++p;
    }
    if (p >= k) break;
  }
  return best;
}

// Independent rows of the reduced row echelon form, the message basis every
// scan enumerates against.
std::vector<std::vector<uint32_t>> rref_basis(const Matrix& gen, uint32_t k) {
  const auto red = rref(gen);
  std::vector<std::vector<uint32_t>> basis;
  basis.reserve(k);
  for (uint32_t r = 0; r < k; ++r) basis.push_back(red.reduced.row(r));
  return basis;
}

std::vector<uint32_t> combine(const Field& f,
                              const std::vector<std::vector<uint32_t>>& basis,
                              const std::vector<uint32_t>& message) {
  std::vector<uint32_t> word(basis[0].size(), 0);
  for (size_t j = 0; j < basis.size(); ++j) {
    if (message[j] == 0) continue;
    for (size_t i = 0; i < word.size(); ++i)
      word[i] = f.add(word[i], f.mul(message[j], basis[j][i]));
  }
  return word;
}

}  // namespace

budget_error::budget_error(uint64_t required, uint64_t budget)
    : std::runtime_error("the enumeration needs " + std::to_string(required) +
                         " scalar classes but the budget allows " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

uint64_t scalar_class_count(uint32_t q, uint32_t k) {
  const uint64_t cap = std::numeric_limits<int64_t>::max();
  uint64_t total = 0;
  uint64_t power = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (total > cap - power) return cap;
    total += power;
    if (i + 1 < k) {
      if (power > cap / q) return cap;
      power *= q;
    }
  }
  return total;
}

ParamReport min_distance_exhaustive(const LinearCode& c, uint64_t budget,
                                    uint32_t threads) {
  const auto start = std::chrono::steady_clock::now();
  const Field& f = c.field();
  const uint32_t q = f.cardinality();
  const uint32_t k = c.dimension();
  if (k == 0)
    throw std::invalid_argument("the minimum distance needs a nonzero code");
  const uint64_t classes = scalar_class_count(q, k);
  if (classes > budget) throw budget_error(classes, budget);

  const auto basis = rref_basis(c.generator(), k);
  const auto steps = digit_steps(f, basis, q);
  const bool packed = f.characteristic() == 2;
  const auto lay = packed_layout(f, c.length());
  const auto run_one = [&](const ScanTask& task) {
    return packed ? scan_task_packed(f, basis, steps, lay, q, task)
                  : scan_task(f, basis, steps, q, task);
  };
  const auto tasks = scan_tasks(k, q);
  std::vector<ScanResult> results(tasks.size());

  const uint32_t workers = std::max<uint32_t>(
      1, static_cast<uint32_t>(
             std::min<uint64_t>(threads == 0 ? 1 : threads, tasks.size())));
  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = run_one(tasks[i]);
  } else {
    std::atomic<size_t> next{0};
    const auto work = [&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        results[i] = run_one(tasks[i]);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint32_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // Merge in task order so the witness does not depend on the thread count.
  ScanResult best;
  for (const auto& r : results)
    if (r.weight < best.weight) best = r;

  ParamReport rep;
  rep.n = static_cast<uint32_t>(c.length());
  rep.k = k;
  rep.d_exact = best.weight;
  rep.method = {"exhaustive"};
  rep.witness = combine(f, basis, best.message);
  rep.elapsed_ms = elapsed_since(start);
  return rep;
}

std::vector<uint64_t> cyclic_root_exponents(const LinearCode& c) {
  const auto& prov = c.provenance();
  if (prov.family.rfind("bch-cyclic", 0) != 0 || prov.exponents.empty())
    throw std::invalid_argument(
        "root exponents need a cyclic power construction");
  uint64_t expected = 1;
  for (uint32_t t = 0; t < prov.d; ++t) expected *= prov.q;
  expected -= 1;
  if (c.length() != expected)
    throw std::invalid_argument(
        "root exponents need the full cyclic length q^d - 1");
  const uint64_t n = c.length();
  std::vector<char> present(n, 0);
  for (uint64_t e : prov.exponents) present[e % n] = 1;
  std::vector<uint64_t> roots;
  for (uint64_t j = 0; j < n; ++j)
    if (!present[(n - j) % n]) roots.push_back(j);
  return roots;
}

uint32_t designed_distance(const LinearCode& c) {
  const auto roots = cyclic_root_exponents(c);
  const uint64_t n = c.length();
  std::vector<char> z(n, 0);
  for (uint64_t j : roots) z[j] = 1;
  uint64_t best = 0;
  uint64_t run = 0;
  for (uint64_t i = 0; i < 2 * n; ++i) {
    if (z[i % n]) {
      ++run;
      best = std::max(best, std::min(run, n));
    } else {
      run = 0;
    }
  }
  return static_cast<uint32_t>(best) + 1;
}

bool automorphism_check(const LinearCode& c, const std::vector<size_t>& perm) {
  if (perm.size() != c.length())
    throw std::invalid_argument("the permutation length must match the code");
  std::vector<char> seen(perm.size(), 0);
  for (size_t i : perm) {
    if (i >= perm.size() || seen[i])
      throw std::invalid_argument("not a permutation of the columns");
    seen[i] = 1;
  }
  const Matrix& g = c.generator();
  return row_space_equal(g, select_columns(g, perm));
}

bool equivalence_via_map(const LinearCode& a, const LinearCode& b,
                         const std::vector<std::pair<Point, Point>>& point_map,
                         const std::vector<uint32_t>& column_scalars) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("the codes live over different fields");
  if (a.length() != b.length() || point_map.size() != a.length())
    throw std::invalid_argument(
        "the map must pair every column of both codes");
  if (!column_scalars.empty() && column_scalars.size() != point_map.size())
    throw std::invalid_argument(
        "column scalars must align with the point map");

  const auto ia = index_points(a.labels());
  const auto ib = index_points(b.labels());
  std::vector<size_t> cols_a;
  std::vector<size_t> cols_b;
  cols_a.reserve(point_map.size());
  cols_b.reserve(point_map.size());
  std::vector<char> used_a(a.length(), 0);
  std::vector<char> used_b(b.length(), 0);
  for (const auto& [la, lb] : point_map) {
    const auto fa = ia.find(la);
    const auto fb = ib.find(lb);
    if (fa == ia.end() || fb == ib.end())
      throw std::invalid_argument("the map references an unknown label");
    if (used_a[fa->second] || used_b[fb->second])
      throw std::invalid_argument("the map is not a bijection of the labels");
    used_a[fa->second] = 1;
    used_b[fb->second] = 1;
    cols_a.push_back(fa->second);
    cols_b.push_back(fb->second);
  }

  Matrix ga = select_columns(a.generator(), cols_a);
  if (!column_scalars.empty()) ga = scale_columns(ga, column_scalars);
  const Matrix gb = select_columns(b.generator(), cols_b);
  return row_space_equal(ga, gb);
}

InvarianceResult projective_invariance(const LinearCode& c, const Field& ext,
                                       const Matrix& transform,
                                       uint64_t form_degree) {
  if (transform.rows() != 2 || transform.cols() != 2 ||
      !(transform.field() == ext))
    throw std::invalid_argument("expected a 2x2 matrix over the label field");
  if (ext.sub(ext.mul(transform.at(0, 0), transform.at(1, 1)),
              ext.mul(transform.at(0, 1), transform.at(1, 0))) == 0)
    throw std::invalid_argument("the matrix must be invertible");
  const bool same_field = c.field() == ext;
  if (!same_field && !(ext.has_subfield() && ext.subfield() == c.field()))
    throw std::invalid_argument("the label field does not extend the code field");

  const auto& labels = c.labels();
  const auto idx = index_points(labels);
  const uint64_t group_order = ext.cardinality() - 1;
  std::vector<size_t> perm(labels.size());
  std::vector<uint32_t> scalars(labels.size());
  bool projectable = true;
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto& p = labels[i];
    if (p.size() != 2)
      throw std::invalid_argument("labels must be projective-line points");
    const uint32_t r0 = ext.add(ext.mul(transform.at(0, 0), p[0]),
                                ext.mul(transform.at(0, 1), p[1]));
    const uint32_t r1 = ext.add(ext.mul(transform.at(1, 0), p[0]),
                                ext.mul(transform.at(1, 1), p[1]));
    const uint32_t lam = r0 != 0 ? r0 : r1;
    const uint32_t il = ext.inv(lam);
    const Point img{ext.mul(il, r0), ext.mul(il, r1)};
    const auto it = idx.find(img);
    if (it == idx.end())
      throw std::invalid_argument(
          "the transformation does not permute the label set");
    perm[i] = it->second;
    const uint32_t sc =
        ext.pow(lam, static_cast<int64_t>(form_degree % group_order));
    if (same_field) {
      scalars[i] = sc;
    } else {
      const auto pr = ext.project(sc);
      if (pr) {
        scalars[i] = *pr;
      } else {
        projectable = false;
        scalars[i] = 1;
      }
    }
  }

  const Matrix& g = c.generator();
  const Matrix permuted = select_columns(g, perm);
  InvarianceResult out;
  out.literal = row_space_equal(g, permuted);
  out.monomial =
      projectable && row_space_equal(g, scale_columns(permuted, scalars));
  return out;
}

Matrix sample_projective_transform(const Field& f, std::mt19937_64& rng) {
  const uint32_t q = f.cardinality();
  while (true) {
    const uint32_t a = static_cast<uint32_t>(rng() % q);
    const uint32_t b = static_cast<uint32_t>(rng() % q);
    const uint32_t c = static_cast<uint32_t>(rng() % q);
    const uint32_t d = static_cast<uint32_t>(rng() % q);
    if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
    Matrix m(f, 2, 2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 0, c);
    m.set(1, 1, d);
    return m;
  }
}

SectionMaxima max_section_points(const LinearCode& eval_code,
                                 uint64_t budget) {
  const Field& f = eval_code.field();
  const uint32_t q = f.cardinality();
  const Matrix& g = eval_code.generator();

  // Greedy independent subset of the original monomial rows, so messages
  // stay interpretable as forms.
  std::vector<size_t> basis_rows;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t i = 0; i < g.rows(); ++i) {
    basis.push_back(g.row(i));
    basis_rows.push_back(i);
    if (rank(Matrix::from_rows(f, basis)) < basis.size()) {
      basis.pop_back();
      basis_rows.pop_back();
    }
  }
  const auto k = static_cast<uint32_t>(basis.size());
  if (k == 0)
    throw std::invalid_argument("section maxima need a nonzero code");
  const uint64_t classes = scalar_class_count(q, k);
  if (classes > budget) throw budget_error(classes, budget);

  SectionMaxima out;
  out.basis_rows = basis_rows;
  const auto steps = digit_steps(f, basis, q);
  for (uint32_t lead = 0; lead < k; ++lead) {
    std::vector<uint32_t> msg(k, 0);
    msg[lead] = 1;
    std::vector<uint32_t> word = basis[lead];
    const size_t first_free = lead + 1;
    while (true) {
      uint32_t zeros = 0;
      for (uint32_t x : word) zeros += (x == 0);
      if (zeros > out.max_zeros) {
        out.max_zeros = zeros;
        out.messages.clear();
        out.messages.push_back(msg);
      } else if (zeros == out.max_zeros) {
        out.messages.push_back(msg);
      }
      size_t p = first_free;
      while (p < k) {
        const auto& row = steps[p][msg[p]];
        for (size_t i = 0; i < word.size(); ++i)
          word[i] = f.add(word[i], row[i]);
        if (++msg[p] < q) break;
        msg[p] = 0;
        ++p;
      }
      if (p >= k) break;
    }
  }
  return out;
}

Form message_to_form(const LinearCode& eval_code,
                     const std::vector<size_t>& basis_rows,
                     const std::vector<uint32_t>& message) {
  const auto& prov = eval_code.provenance();
  if (prov.family != "evaluation" || prov.s < 0)
    throw std::invalid_argument("messages denote forms only for evaluation codes");
  if (basis_rows.size() != message.size())
    throw std::invalid_argument("the message must align with the basis rows");
  const Field& f = eval_code.field();
  const auto nvars = static_cast<uint32_t>(eval_code.labels()[0].size());
  const auto monomials =
      degree_monomials(nvars, static_cast<uint32_t>(prov.s));
  if (monomials.size() != eval_code.generator().rows())
    throw std::logic_error("the generator does not list one row per monomial");
  Form out(f, nvars);
  for (size_t j = 0; j < message.size(); ++j) {
    if (message[j] == 0) continue;
    if (basis_rows[j] >= monomials.size())
      throw std::invalid_argument("basis row index out of range");
    out = out + Form::monomial(f, monomials[basis_rows[j]], message[j]);
  }
  return out;
}

std::optional<RulingDecomposition> ruling_decomposition(const Field& f,
                                                        const Form& section,
                                                        uint32_t s) {
  const auto line = projective_space(f, 1);
  const auto surface = segre_variety(f, 2);
  std::set<Point> zeros;
  for (const auto& p : surface)
    if (section.evaluate(p) == 0) zeros.insert(p);

  RulingDecomposition dec;
  for (const auto& a : line) {
    bool full = true;
    for (const auto& b : line)
      if (!zeros.count(segre_image(f, {a, b}))) {
        full = false;
        break;
      }
    if (full) dec.first.push_back(a);
  }
  for (const auto& b : line) {
    bool full = true;
    for (const auto& a : line)
      if (!zeros.count(segre_image(f, {a, b}))) {
        full = false;
        break;
      }
    if (full) dec.second.push_back(b);
  }
  if (dec.first.size() != s || dec.second.size() != s) return std::nullopt;

  std::set<Point> covered;
  for (const auto& a : dec.first)
    for (const auto& b : line) covered.insert(segre_image(f, {a, b}));
  for (const auto& a : line)
    for (const auto& b : dec.second) covered.insert(segre_image(f, {a, b}));
  if (covered != zeros) return std::nullopt;
  return dec;
}

uint32_t curve_point_count(const Form& quadric, const Form& surface) {
  if (quadric.nvars() != surface.nvars())
    throw std::invalid_argument("the forms must share one variable set");
  uint32_t count = 0;
  for (const auto& p : zero_locus(quadric, quadric.nvars() - 1))
    if (surface.evaluate(p) == 0) ++count;
  return count;
}

std::optional<PlaneUnionWitness> plane_union_witness(
    const Field& f, const std::vector<Point>& points, uint32_t s,
    uint32_t section_size) {
  if (points.empty() || s == 0)
    throw std::invalid_argument("the search needs points and s >= 1");
  const auto nvars = static_cast<uint32_t>(points[0].size());

  struct Candidate {
    Form form;
    std::vector<char> zero;
  };
  std::vector<Candidate> candidates;
  for (const auto& rep : projective_space(f, nvars - 1)) {
    Form lin(f, nvars);
    for (uint32_t i = 0; i < nvars; ++i) {
      if (rep[i] == 0) continue;
      std::vector<uint32_t> e(nvars, 0);
      e[i] = 1;
      lin = lin + Form::monomial(f, e, rep[i]);
    }
    std::vector<char> zero(points.size(), 0);
    uint32_t count = 0;
    for (size_t t = 0; t < points.size(); ++t) {
      if (lin.evaluate(points[t]) == 0) {
        zero[t] = 1;
        ++count;
      }
    }
    if (count == section_size)
      candidates.push_back({std::move(lin), std::move(zero)});
  }

  std::vector<size_t> pick;
  std::vector<char> covered(points.size(), 0);
  const std::function<bool(size_t)> dfs = [&](size_t from) -> bool {
    if (pick.size() == s) return true;
    for (size_t i = from; i < candidates.size(); ++i) {
      bool disjoint = true;
      for (size_t t = 0; t < points.size() && disjoint; ++t)
        if (candidates[i].zero[t] && covered[t]) disjoint = false;
      if (!disjoint) continue;
      pick.push_back(i);
      for (size_t t = 0; t < points.size(); ++t)
        if (candidates[i].zero[t]) covered[t] = 1;
      if (dfs(i + 1)) return true;
      for (size_t t = 0; t < points.size(); ++t)
        if (candidates[i].zero[t]) covered[t] = 0;
      pick.pop_back();
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;

  PlaneUnionWitness w;
  Form prod = Form::monomial(f, std::vector<uint32_t>(nvars, 0), 1);
  for (size_t i : pick) {
    w.planes.push_back(candidates[i].form);
    prod = prod * candidates[i].form;
  }
  w.product = prod;
  w.codeword.resize(points.size());
  for (size_t t = 0; t < points.size(); ++t) {
    w.codeword[t] = prod.evaluate(points[t]);
    if (w.codeword[t] == 0) ++w.zeros;
  }
  return w;
}

std::optional<std::vector<uint32_t>> disjoint_zero_product_witness(
    const LinearCode& degree_one, const LinearCode& degree_two,
    uint32_t target_zeros, uint64_t budget) {
  if (!(degree_one.field() == degree_two.field()) ||
      degree_one.length() != degree_two.length())
    throw std::invalid_argument("the codes must share a field and length");
  const Field& f = degree_one.field();
  const uint32_t q = f.cardinality();
  const uint32_t k = degree_one.dimension();
  if (k == 0)
    throw std::invalid_argument("the search needs a nonzero code");
  const uint64_t classes = scalar_class_count(q, k);
  if (classes > budget) throw budget_error(classes, budget);

  const auto basis = rref_basis(degree_one.generator(), k);
  const auto steps = digit_steps(f, basis, q);
  const size_t n = degree_one.length();
  const size_t mask_words = (n + 63) / 64;
  std::vector<std::pair<std::vector<uint32_t>, std::vector<uint64_t>>> found;

  for (uint32_t lead = 0; lead < k; ++lead) {
    std::vector<uint32_t> msg(k, 0);
    msg[lead] = 1;
    std::vector<uint32_t> word = basis[lead];
    const size_t first_free = lead + 1;
    while (true) {
      uint32_t zeros = 0;
      for (uint32_t x : word) zeros += (x == 0);
      if (zeros == target_zeros) {
        std::vector<uint64_t> mask(mask_words, 0);
        for (size_t i = 0; i < n; ++i)
          if (word[i] == 0) mask[i / 64] |= uint64_t{1} << (i % 64);
        for (const auto& [other, omask] : found) {
          bool disjoint = true;
          for (size_t wdx = 0; wdx < mask_words && disjoint; ++wdx)
            if (mask[wdx] & omask[wdx]) disjoint = false;
          if (!disjoint) continue;
          std::vector<uint32_t> prod(n);
          for (size_t i = 0; i < n; ++i) prod[i] = f.mul(word[i], other[i]);
          if (row_space_contains(degree_two.generator(), prod)) return prod;
        }
        found.emplace_back(word, std::move(mask));
      }
      size_t p = first_free;
      while (p < k) {
        const auto& row = steps[p][msg[p]];
        for (size_t i = 0; i < word.size(); ++i)
          word[i] = f.add(word[i], row[i]);
        if (++msg[p] < q) break;
        msg[p] = 0;
        ++p;
      }
      if (p >= k) break;
    }
  }
  return std::nullopt;
}

bool lemma_uv_check(uint32_t s) {
  std::set<std::pair<uint32_t, uint32_t>> u;
  for (uint32_t i = 0; i <= s; ++i)
    for (uint32_t j = 0; i + j <= s; ++j)
      for (uint32_t k = 0; i + j + k <= s; ++k) u.insert({i + k, j + k});
  std::set<std::pair<uint32_t, uint32_t>> v;
  for (uint32_t i = 0; i <= s; ++i)
    for (uint32_t j = 0; j <= s; ++j) v.insert({i, j});
  return u == v && v.size() == static_cast<size_t>(s + 1) * (s + 1);
}

}  // namespace quadricode
