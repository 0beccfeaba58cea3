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

#include "quadricode/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace quadricode {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json report_value(const ParamReport& rep, bool keep_timing) {
  ordered_json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["d_exact"] = rep.d_exact ? ordered_json(*rep.d_exact) : ordered_json();
  j["d_lower"] = rep.d_lower ? ordered_json(*rep.d_lower) : ordered_json();
  j["d_upper"] = rep.d_upper ? ordered_json(*rep.d_upper) : ordered_json();
  j["method"] = rep.method;
  j["witness"] = rep.witness ? ordered_json(*rep.witness) : ordered_json();
  j["elapsed_ms"] = keep_timing ? rep.elapsed_ms : 0;
  return j;
}

ordered_json field_value(const Field& f) {
  ordered_json j;
  j["p"] = f.characteristic();
  j["e"] = f.degree();
  j["modulus"] = f.modulus();
  return j;
}

ordered_json code_value(const LinearCode& c, bool include_matrix) {
  const auto& prov = c.provenance();
  ordered_json j;
  j["family"] = prov.family;
  j["q"] = prov.q;
  if (prov.d > 0) j["d"] = prov.d;
  if (prov.s >= 0) j["s"] = prov.s;
  if (prov.a >= 0) j["a"] = prov.a;
  if (prov.b >= 0) j["b"] = prov.b;
  if (!prov.exponents.empty()) j["exponents"] = prov.exponents;
  j["field"] = field_value(c.field());
  j["n"] = c.length();
  j["k"] = c.dimension();
  if (include_matrix) {
    j["labels"] = c.labels();
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < c.generator().rows(); ++r)
      rows.push_back(c.generator().row(r));
    j["generator"] = rows;
  }
  return j;
}

ordered_json suite_value(const SuiteResult& r, bool keep_timing) {
  ordered_json j;
  j["suite"] = r.name;
  j["pass"] = r.pass;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["details"] = c.details;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["elapsed_ms"] = keep_timing ? r.elapsed_ms : 0;
  return j;
}

std::string join_ints(const std::vector<uint32_t>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

}  // namespace

std::string report_json(const ParamReport& rep, bool keep_timing) {
  return dump(report_value(rep, keep_timing));
}

std::string report_text(const ParamReport& rep, bool keep_timing) {
  std::ostringstream out;
  out << "n: " << rep.n << "\n";
  out << "k: " << rep.k << "\n";
  out << "d_exact: " << opt_text(rep.d_exact) << "\n";
  out << "d_lower: " << opt_text(rep.d_lower) << "\n";
  out << "d_upper: " << opt_text(rep.d_upper) << "\n";
  out << "method:";
  for (const auto& m : rep.method) out << ' ' << m;
  out << "\n";
  out << "witness: " << (rep.witness ? join_ints(*rep.witness) : "-") << "\n";
  out << "elapsed_ms: " << (keep_timing ? rep.elapsed_ms : 0) << "\n";
  return out.str();
}

std::string code_json(const LinearCode& c, bool include_matrix) {
  return dump(code_value(c, include_matrix));
}

std::string code_text(const LinearCode& c, bool include_matrix) {
  const auto& prov = c.provenance();
  std::ostringstream out;
  out << "family: " << prov.family << "\n";
  out << "q: " << prov.q << "\n";
  if (prov.d > 0) out << "d: " << prov.d << "\n";
  if (prov.s >= 0) out << "s: " << prov.s << "\n";
  if (prov.a >= 0) out << "a: " << prov.a << "\n";
  if (prov.b >= 0) out << "b: " << prov.b << "\n";
  if (!prov.exponents.empty()) {
    out << "exponents:";
    for (uint64_t e : prov.exponents) out << ' ' << e;
    out << "\n";
  }
  out << "field: p=" << c.field().characteristic()
      << " e=" << c.field().degree() << " modulus=";
  const auto& mod = c.field().modulus();
  for (size_t i = 0; i < mod.size(); ++i) {
    if (i) out << ',';
    out << mod[i];
  }
  out << "\n";
  out << "n: " << c.length() << "\n";
  out << "k: " << c.dimension() << "\n";
  if (include_matrix) {
    out << "labels:";
    for (const auto& p : c.labels()) {
      out << " (";
      for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ':';
        out << p[i];
      }
      out << ")";
    }
    out << "\n";
    for (size_t r = 0; r < c.generator().rows(); ++r)
      out << "row " << r << ": " << join_ints(c.generator().row(r)) << "\n";
  }
  return out.str();
}

std::string suite_json(const SuiteResult& r, bool keep_timing) {
  return dump(suite_value(r, keep_timing));
}

std::string suite_text(const SuiteResult& r, bool keep_timing) {
  std::ostringstream out;
  out << "suite: " << r.name << "\n";
  out << "pass: " << (r.pass ? "true" : "false") << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.details.empty()) out << ": " << c.details;
    out << "\n";
  }
  out << "elapsed_ms: " << (keep_timing ? r.elapsed_ms : 0) << "\n";
  return out.str();
}

std::string search_json(const SearchOutcome& o) {
  ordered_json j;
  j["variety"] = o.variety;
  j["q"] = o.q;
  j["s"] = o.s;
  j["max_zeros"] = o.max_zeros;
  j["bound"] = o.bound;
  j["maximizers"] = o.maximizer_count;
  j["sample_forms"] = o.sample_forms;
  return dump(j);
}

std::string search_text(const SearchOutcome& o) {
  std::ostringstream out;
  out << "variety: " << o.variety << "\n";
  out << "q: " << o.q << "\n";
  out << "s: " << o.s << "\n";
  out << "max_zeros: " << o.max_zeros << "\n";
  out << "bound: " << o.bound << "\n";
  out << "maximizers: " << o.maximizer_count << "\n";
  for (const auto& f : o.sample_forms) out << "form: " << f << "\n";
  return out.str();
}

std::string count_json(const CountOutcome& o) {
  ordered_json j;
  j["variety"] = o.variety;
  j["q"] = o.q;
  j["d"] = o.d;
  j["points"] = o.points;
  return dump(j);
}

std::string count_text(const CountOutcome& o) {
  std::ostringstream out;
  out << "variety: " << o.variety << "\n";
  out << "q: " << o.q << "\n";
  out << "d: " << o.d << "\n";
  out << "points: " << o.points << "\n";
  return out.str();
}

}  // namespace quadricode
