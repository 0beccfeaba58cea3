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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadricode/analysis.hpp"
#include "quadricode/codes.hpp"
#include "quadricode/field.hpp"
#include "quadricode/geometry.hpp"
#include "quadricode/matrix.hpp"
#include "quadricode/serialize.hpp"
#include "quadricode/suites.hpp"

namespace {

using namespace quadricode;

// A rejected hypothesis or malformed request; mapped to exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  uint32_t q = 0;
  uint32_t d = 2;
  int64_t s = -1;
  std::string variety;
  std::vector<int64_t> bidegree;
  std::string dmode = "exhaustive";
  uint64_t budget = 1ull << 31;
  std::string format = "text";
  std::string out;
  uint64_t seed = 0xC0DE5EEDull;
  int64_t modulus = 0;
  bool timing = false;
  std::string suite;
};

uint32_t thread_cap() {
  const char* env = std::getenv("QUADRICODE_THREADS");
  if (env == nullptr) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v < 1 ? 1 : static_cast<uint32_t>(v);
}

Field base_for(uint32_t q) {
  try {
    const auto [p, e] = factor_prime_power(q);
    return Field::make(p, e);
  } catch (const std::exception&) {
    throw usage_error("q must be a prime power of at least 2; got " +
                      std::to_string(q));
  }
}

// d-th degree extension of GF(q), honoring the modulus ordinal: choice n
// selects the n-th monic irreducible polynomial of the right degree over the
// prime field, 0 being the default presentation.
Field ext_for(const Field& base, uint32_t d, int64_t choice) {
  try {
    if (choice == 0) return Field::extension(base, d);
    return Field::extension(
        base, d,
        nth_irreducible(base.characteristic(), base.degree() * d,
                        static_cast<uint32_t>(choice)));
  } catch (const usage_error&) {
    throw;
  } catch (const std::exception& e) {
    throw usage_error(e.what());
  }
}

QuadraticScalars scalars_for(const RunConfig& rc) {
  const Field ext = ext_for(base_for(rc.q), 2, rc.modulus);
  return quadratic_scalars(ext, ext.primitive_element());
}

TwistedEmbedding twisted_for(const RunConfig& rc) {
  const Field ext = ext_for(base_for(rc.q), rc.d, rc.modulus);
  const uint32_t w = ext.primitive_element();
  std::vector<uint32_t> basis;
  uint32_t cur = 1;
  for (uint32_t i = 0; i < rc.d; ++i) {
    basis.push_back(cur);
    cur = ext.mul(cur, w);
  }
  return make_twisted(ext, basis);
}

void require_variety(const RunConfig& rc) {
  if (rc.variety.empty())
    throw usage_error(
        "choose a variety: hyperbolic, elliptic, segre, or twisted");
}

void require_degree(const RunConfig& rc) {
  if (rc.s < 0 && rc.bidegree.empty())
    throw usage_error("this construction needs a form degree: pass --s");
}

// Range guards; each message names the violated hypothesis.
void check_ranges(const RunConfig& rc) {
  const auto q = static_cast<int64_t>(rc.q);
  if (rc.variety == "hyperbolic" || rc.variety == "segre") {
    if (rc.variety == "hyperbolic" && rc.d != 2)
      throw usage_error(
          "the hyperbolic quadric is the product of two lines; --d must be "
          "2");
    if (rc.d < 2)
      throw usage_error("the product variety needs at least two line "
                        "factors; --d must be at least 2");
    if (rc.s >= q)
      throw usage_error("the product family requires s < q; got s=" +
                        std::to_string(rc.s) + " with q=" +
                        std::to_string(rc.q));
  } else if (rc.variety == "elliptic") {
    if (rc.d != 2)
      throw usage_error(
          "the elliptic quadric is a surface in P^3; --d must be 2");
    if (rc.s >= q - 1)
      throw usage_error("the elliptic family requires s < q - 1; got s=" +
                        std::to_string(rc.s) + " with q=" +
                        std::to_string(rc.q));
  } else if (rc.variety == "twisted") {
    if (rc.d < 2)
      throw usage_error("the twisted embedding needs at least two factors; "
                        "--d must be at least 2");
    if (rc.s > q - 1)
      throw usage_error("the twisted family requires s <= q - 1; got s=" +
                        std::to_string(rc.s) + " with q=" +
                        std::to_string(rc.q));
  } else {
    throw usage_error("unknown variety: " + rc.variety);
  }
}

LinearCode make_code(const RunConfig& rc) {
  require_variety(rc);
  const Field base = base_for(rc.q);

  if (!rc.bidegree.empty()) {
    if (rc.variety != "hyperbolic" && rc.variety != "segre")
      throw usage_error(
          "the bidegree grading lives on the product of two lines; use the "
          "hyperbolic or segre variety");
    if (rc.d != 2)
      throw usage_error("a bidegree code needs exactly two line factors");
    if (rc.s >= 0)
      throw usage_error(
          "give either a total degree --s or a --bidegree pair, not both");
    if (rc.bidegree.size() != 2)
      throw usage_error("--bidegree takes exactly two values a,b");
    const int64_t a = rc.bidegree[0];
    const int64_t b = rc.bidegree[1];
    if (a < 0 || b < 0 || a >= rc.q || b >= rc.q)
      throw usage_error(
          "the bidegree family requires 0 <= a < q and 0 <= b < q; got a=" +
          std::to_string(a) + " b=" + std::to_string(b) + " with q=" +
          std::to_string(rc.q));
    return bidegree_code(base, static_cast<uint32_t>(a),
                         static_cast<uint32_t>(b));
  }

  require_degree(rc);
  check_ranges(rc);
  const auto s = static_cast<uint32_t>(rc.s);
  if (rc.variety == "hyperbolic" || rc.variety == "segre") {
    if (rc.modulus != 0 && base.degree() == 1)
      throw usage_error(
          "a prime field has a unique presentation; the modulus ordinal "
          "applies to extension fields");
    const Field f = rc.modulus == 0
                        ? base
                        : Field::make(base.characteristic(), base.degree(),
                                      nth_irreducible(
                                          base.characteristic(),
                                          base.degree(),
                                          static_cast<uint32_t>(rc.modulus)));
    return evaluation_code(f, segre_variety(f, rc.d), s);
  }
  if (rc.variety == "elliptic") {
    const auto qs = scalars_for(rc);
    return evaluation_code(qs.ext.subfield(), elliptic_points(qs), s);
  }
  const auto t = twisted_for(rc);
  return evaluation_code(t.base, t.points, s);
}

// Closed-form designed distance of each family.
uint32_t designed_value(const RunConfig& rc) {
  const uint64_t q = rc.q;
  if (!rc.bidegree.empty()) {
    const uint64_t a = static_cast<uint64_t>(rc.bidegree[0]);
    const uint64_t b = static_cast<uint64_t>(rc.bidegree[1]);
    return static_cast<uint32_t>((q - a + 1) * (q - b + 1));
  }
  const uint64_t s = static_cast<uint64_t>(rc.s);
  if (rc.variety == "hyperbolic" || rc.variety == "segre") {
    uint64_t v = 1;
    for (uint32_t i = 0; i < rc.d; ++i) v *= q - s + 1;
    return static_cast<uint32_t>(v);
  }
  uint64_t n = 1;
  for (uint32_t i = 0; i < rc.d; ++i) n *= q;
  n += 1;
  uint64_t section = 0;  // s (q^d - 1) / (q - 1)
  uint64_t pw = 1;
  for (uint32_t i = 0; i < rc.d; ++i) {
    section += pw;
    pw *= q;
  }
  return static_cast<uint32_t>(n - s * section);
}

uint32_t weight_of(const std::vector<uint32_t>& v) {
  uint32_t w = 0;
  for (const uint32_t x : v) w += (x != 0);
  return w;
}

// Product of two split polynomials, one per line factor: vanishes on a of
// the q+1 points of the first factor and b of the second, so its codeword
// has weight (q+1-a)(q+1-b).
std::vector<uint32_t> split_product_word(const Field& f,
                                         const std::vector<Point>& labels,
                                         uint32_t a, uint32_t b) {
  std::vector<uint32_t> word;
  word.reserve(labels.size());
  for (const Point& img : labels) {
    const auto [p1, p2] = segre_factors_d2(f, img);
    uint32_t v = 1;
    for (uint32_t j = 0; j < a; ++j)
      v = f.mul(v, f.sub(p1[1], f.mul(j, p1[0])));
    for (uint32_t j = 0; j < b; ++j)
      v = f.mul(v, f.sub(p2[1], f.mul(j, p2[0])));
    word.push_back(v);
  }
  return word;
}

// Lightest row of the reduced generator: always a valid codeword witness.
std::vector<uint32_t> lightest_reduced_row(const LinearCode& c) {
  const Matrix red = rref(c.generator()).reduced;
  std::vector<uint32_t> best;
  uint32_t best_w = 0;
  for (size_t i = 0; i < c.dimension(); ++i) {
    const std::vector<uint32_t> row = red.row(i);
    const uint32_t w = weight_of(row);
    if (best.empty() || w < best_w) {
      best = row;
      best_w = w;
    }
  }
  return best;
}

ParamReport run_params(const LinearCode& c, const RunConfig& rc) {
  if (rc.dmode == "exhaustive")
    return min_distance_exhaustive(c, rc.budget, thread_cap());

  ParamReport rep;
  rep.n = c.length();
  rep.k = c.dimension();
  if (rc.dmode == "skip") {
    rep.method = {"distance skipped"};
    return rep;
  }

  rep.d_lower = designed_value(rc);
  rep.method = {"closed-form designed distance"};
  if (rc.dmode == "designed") return rep;

  // bounds: add an explicit codeword witness for the upper bound.
  std::vector<uint32_t> word;
  std::string how;
  if ((rc.variety == "hyperbolic" ||
       (rc.variety == "segre" && rc.d == 2))) {
    const uint32_t a =
        rc.bidegree.empty() ? static_cast<uint32_t>(rc.s)
                            : static_cast<uint32_t>(rc.bidegree[0]);
    const uint32_t b =
        rc.bidegree.empty() ? static_cast<uint32_t>(rc.s)
                            : static_cast<uint32_t>(rc.bidegree[1]);
    word = split_product_word(c.field(), c.labels(), a, b);
    how = "split-product witness";
  } else if ((rc.variety == "elliptic" ||
              (rc.variety == "twisted" && rc.d == 2)) &&
             rc.s > 0) {
    const auto qs = scalars_for(rc);
    const auto w = plane_union_witness(qs.ext.subfield(),
                                       elliptic_points(qs),
                                       static_cast<uint32_t>(rc.s), rc.q + 1);
    if (w) {
      word = w->codeword;
      how = "plane-union witness";
    }
  }
  if (word.empty() || !row_space_contains(c.generator(), word)) {
    word = lightest_reduced_row(c);
    how = "reduced-row witness";
  }
  rep.d_upper = weight_of(word);
  rep.witness = word;
  rep.method.push_back(how);
  return rep;
}

SearchOutcome run_search(const LinearCode& c, const RunConfig& rc) {
  const auto mx = max_section_points(c, rc.budget);
  SearchOutcome o;
  o.variety = rc.variety;
  o.q = rc.q;
  o.s = static_cast<uint32_t>(rc.s);
  o.max_zeros = mx.max_zeros;
  o.bound = c.length() - designed_value(rc);
  o.maximizer_count = mx.messages.size();
  const size_t shown = std::min<size_t>(3, mx.messages.size());
  for (size_t i = 0; i < shown; ++i)
    o.sample_forms.push_back(
        message_to_form(c, mx.basis_rows, mx.messages[i]).text());
  return o;
}

CountOutcome run_count(const RunConfig& rc) {
  require_variety(rc);
  CountOutcome o;
  o.variety = rc.variety;
  o.q = rc.q;
  o.d = rc.d;
  const Field base = base_for(rc.q);
  if (rc.variety == "hyperbolic" || rc.variety == "segre") {
    if (rc.variety == "hyperbolic" && rc.d != 2)
      throw usage_error(
          "the hyperbolic quadric is the product of two lines; --d must be "
          "2");
    o.points = segre_variety(base, rc.d).size();
  } else if (rc.variety == "elliptic") {
    if (rc.d != 2)
      throw usage_error(
          "the elliptic quadric is a surface in P^3; --d must be 2");
    o.points = elliptic_points(scalars_for(rc)).size();
  } else if (rc.variety == "twisted") {
    o.points = twisted_for(rc).points.size();
  } else {
    throw usage_error("unknown variety: " + rc.variety);
  }
  return o;
}

void emit(const RunConfig& rc, const std::string& body) {
  if (rc.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(rc.out, std::ios::binary);
  if (!f) throw usage_error("cannot open output file: " + rc.out);
  f << body;
}

int dispatch(const RunConfig& rc) {
  const bool json = rc.format == "json";
  if (rc.suite.empty() == false) {  // verify
    SuiteConfig cfg;
    cfg.seed = rc.seed;
    cfg.threads = thread_cap();
    cfg.budget = rc.budget;
    cfg.timing = rc.timing;
    cfg.modulus_choice = static_cast<uint32_t>(rc.modulus);
    cfg.q_override = rc.q == 0 ? -1 : static_cast<int32_t>(rc.q);
    cfg.s_override = rc.s < 0 ? -1 : static_cast<int32_t>(rc.s);
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), rc.suite) == names.end())
      throw usage_error("unknown suite: " + rc.suite);
    const SuiteResult r = run_suite(rc.suite, cfg);
    emit(rc, json ? suite_json(r, rc.timing) : suite_text(r, rc.timing));
    return r.pass ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  CLI::App app{"Evaluation codes on quadric surfaces and twisted products "
               "of projective lines"};
  app.require_subcommand(1);

  app.add_option("--q", rc.q, "Base field size, a prime power of at least 2");
  app.add_option("--d", rc.d, "Number of projective-line factors")
      ->capture_default_str();
  app.add_option("--s", rc.s, "Total degree of the evaluated forms");
  app.add_option("--variety", rc.variety,
                 "Point set to evaluate on: hyperbolic, elliptic, segre, or "
                 "twisted");
  app.add_option("--bidegree", rc.bidegree,
                 "Bidegree pair a,b on the product of two lines")
      ->delimiter(',');
  app.add_option("--dmode", rc.dmode,
                 "Minimum-distance mode: exhaustive, designed, bounds, skip")
      ->check(CLI::IsMember({"exhaustive", "designed", "bounds", "skip"}))
      ->capture_default_str();
  app.add_option("--budget", rc.budget,
                 "Largest scalar-class count an exhaustive scan may visit")
      ->capture_default_str();
  app.add_option("--format", rc.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", rc.out, "Write output to this file");
  app.add_option("--seed", rc.seed, "Seed for sampled checks")
      ->capture_default_str();
  app.add_option("--modulus", rc.modulus,
                 "Modulus ordinal: use the n-th monic irreducible for each "
                 "extension field (0 = default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", rc.timing,
               "Keep wall-clock timings in the output (breaks byte-exact "
               "reproducibility)");

  auto* cmd_build = app.add_subcommand("build", "Construct a code");
  auto* cmd_params =
      app.add_subcommand("params", "Compute code parameters");
  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  auto* cmd_search =
      app.add_subcommand("search", "Search maximal section point counts");
  auto* cmd_count = app.add_subcommand("count", "Count rational points");
  auto* cmd_export =
      app.add_subcommand("export", "Export a code with labels and matrix");
  std::string suite_arg;
  cmd_verify
      ->add_option("suite", suite_arg,
                   "One of: hyperbolic, elliptic, segre, twisted, "
                   "equivalence, cyclic, psl2, lemma-uv, corollaries, "
                   "example-q5")
      ->required();
  for (auto* sub :
       {cmd_build, cmd_params, cmd_verify, cmd_search, cmd_count, cmd_export})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool json = rc.format == "json";
  try {
    if (cmd_verify->parsed()) {
      rc.suite = suite_arg;
      return dispatch(rc);
    }
    if (cmd_build->parsed() || cmd_export->parsed()) {
      const LinearCode c = make_code(rc);
      const bool full = cmd_export->parsed();
      emit(rc, json ? code_json(c, full) : code_text(c, full));
      return 0;
    }
    if (cmd_params->parsed()) {
      const LinearCode c = make_code(rc);
      const ParamReport rep = run_params(c, rc);
      emit(rc, json ? report_json(rep, rc.timing)
                    : report_text(rep, rc.timing));
      return 0;
    }
    if (cmd_search->parsed()) {
      require_variety(rc);
      require_degree(rc);
      if (!rc.bidegree.empty())
        throw usage_error(
            "the search reports degree-s section maxima; pass --s");
      const LinearCode c = make_code(rc);
      const SearchOutcome o = run_search(c, rc);
      emit(rc, json ? search_json(o) : search_text(o));
      return 0;
    }
    if (cmd_count->parsed()) {
      const CountOutcome o = run_count(rc);
      emit(rc, json ? count_json(o) : count_text(o));
      return 0;
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "; raise --budget\n";
    return 3;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
