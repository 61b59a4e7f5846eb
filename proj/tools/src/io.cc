// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exactbasis/io.h"

#include <algorithm>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace exactbasis::io {
namespace {

std::string At(const std::string& path, const std::string& key) {
  return path.empty() ? key : absl::StrCat(path, ".", key);
}
std::string At(const std::string& path, size_t index) {
  return absl::StrCat(path, "[", index, "]");
}

absl::Status Error(const std::string& path, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("at ", path.empty() ? "<root>" : path, ": ", what));
}

absl::StatusOr<const Json*> Field(const Json& j, const std::string& path,
                                  const std::string& key) {
  if (!j.is_object()) return Error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) return Error(At(path, key), "missing field");
  return &*it;
}

// Integers may be JSON numbers or decimal strings.
absl::StatusOr<int64_t> Int(const Json& j, const std::string& path,
                            int64_t lo = std::numeric_limits<int64_t>::min(),
                            int64_t hi = std::numeric_limits<int64_t>::max()) {
  int64_t v = 0;
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() &&
        j.get<uint64_t>() > static_cast<uint64_t>(hi)) {
      return Error(path, "integer out of range");
    }
    v = j.get<int64_t>();
  } else if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) {
      return Error(path, "expected a decimal integer");
    }
    if (!z.fits_slong_p()) return Error(path, "integer out of range");
    v = z.get_si();
  } else {
    return Error(path, "expected an integer");
  }
  if (v < lo || v > hi) {
    return Error(path, absl::StrCat("value ", v, " outside [", lo, ", ", hi, "]"));
  }
  return v;
}

absl::StatusOr<std::vector<int64_t>> IntList(
    const Json& j, const std::string& path,
    int64_t lo = std::numeric_limits<int64_t>::min(),
    int64_t hi = std::numeric_limits<int64_t>::max()) {
  if (!j.is_array()) return Error(path, "expected an array");
  std::vector<int64_t> out;
  for (size_t i = 0; i < j.size(); ++i) {
    absl::StatusOr<int64_t> v = Int(j[i], At(path, i), lo, hi);
    if (!v.ok()) return v.status();
    out.push_back(*v);
  }
  return out;
}

absl::StatusOr<std::vector<ElementId>> IdList(const Json& j,
                                              const std::string& path) {
  absl::StatusOr<std::vector<int64_t>> v =
      IntList(j, path, 0, std::numeric_limits<ElementId>::max());
  if (!v.ok()) return v.status();
  return std::vector<ElementId>(v->begin(), v->end());
}

absl::StatusOr<mpq_class> Rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) return Error(path, "expected a rational string");
  mpq_class q;
  const std::string s = j.get<std::string>();
  if (s.empty() || q.set_str(s, 10) != 0) {
    return Error(path, absl::StrCat("malformed rational \"", s, "\""));
  }
  if (q.get_den() == 0) return Error(path, "zero denominator");
  q.canonicalize();
  return q;
}

absl::StatusOr<std::string> String(const Json& j, const std::string& path) {
  if (!j.is_string()) return Error(path, "expected a string");
  return j.get<std::string>();
}

#define ASSIGN_OR_RETURN_IMPL(var, expr, tmp) \
  auto tmp = (expr);                          \
  if (!tmp.ok()) return tmp.status();         \
  var = *std::move(tmp)
#define EB_CONCAT_INNER(a, b) a##b
#define EB_CONCAT(a, b) EB_CONCAT_INNER(a, b)
#define ASSIGN_OR_RETURN(var, expr) \
  ASSIGN_OR_RETURN_IMPL(var, expr, EB_CONCAT(status_or_, __LINE__))

}  // namespace

Json EncodeRational(const mpq_class& q) { return q.get_str(); }

Json EncodeSpec(const MatroidSpec& spec) {
  Json j;
  j["kind"] = spec.KindName();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          j["n"] = s.n;
          j["r"] = s.r;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          j["blocks"] = s.blocks;
          j["capacities"] = s.capacities;
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          j["vertices"] = s.vertex_count;
          Json edges = Json::array();
          for (auto [u, v] : s.edges) edges.push_back({u, v});
          j["edges"] = edges;
        } else if constexpr (std::is_same_v<T, LinearSpec>) {
          j["field"] =
              s.field == LinearSpec::Field::kPrime ? "prime" : "rational";
          if (s.field == LinearSpec::Field::kPrime) j["prime"] = s.prime;
          j["rows"] = s.rows;
          j["cols"] = s.cols;
          Json entries = Json::array();
          for (const mpq_class& q : s.entries) entries.push_back(EncodeRational(q));
          j["entries"] = entries;
        } else if constexpr (std::is_same_v<T, TransversalSpec>) {
          j["left_size"] = s.left_size;
          j["adjacency"] = s.adjacency;
        } else if constexpr (std::is_same_v<T, DirectSumSpec>) {
          Json parts = Json::array();
          for (const MatroidSpec& p : s.parts) parts.push_back(EncodeSpec(p));
          j["parts"] = parts;
        } else if constexpr (std::is_same_v<T, RestrictionSpec>) {
          j["base"] = EncodeSpec(*s.base);
          j["keep"] = s.keep;
        } else if constexpr (std::is_same_v<T, ContractionSpec>) {
          j["base"] = EncodeSpec(*s.base);
          j["contract"] = s.contract;
        }
      },
      spec.kind);
  return j;
}

absl::StatusOr<MatroidSpec> DecodeSpec(const Json& j, const std::string& path) {
  const Json* f;
  ASSIGN_OR_RETURN(f, Field(j, path, "kind"));
  std::string kind;
  ASSIGN_OR_RETURN(kind, String(*f, At(path, "kind")));
  constexpr int64_t kMaxSize = 1 << 20;
  if (kind == "uniform") {
    int64_t n, r;
    ASSIGN_OR_RETURN(f, Field(j, path, "n"));
    ASSIGN_OR_RETURN(n, Int(*f, At(path, "n"), 0, kMaxSize));
    ASSIGN_OR_RETURN(f, Field(j, path, "r"));
    ASSIGN_OR_RETURN(r, Int(*f, At(path, "r"), 0, kMaxSize));
    return Uniform(static_cast<int>(n), static_cast<int>(r));
  }
  if (kind == "partition") {
    ASSIGN_OR_RETURN(f, Field(j, path, "blocks"));
    if (!f->is_array()) return Error(At(path, "blocks"), "expected an array");
    std::vector<std::vector<ElementId>> blocks;
    for (size_t i = 0; i < f->size(); ++i) {
      std::vector<ElementId> b;
      ASSIGN_OR_RETURN(b, IdList((*f)[i], At(At(path, "blocks"), i)));
      blocks.push_back(std::move(b));
    }
    ASSIGN_OR_RETURN(f, Field(j, path, "capacities"));
    std::vector<int64_t> caps;
    ASSIGN_OR_RETURN(caps, IntList(*f, At(path, "capacities"), 0, kMaxSize));
    return Partition(std::move(blocks), std::vector<int>(caps.begin(), caps.end()));
  }
  if (kind == "graphic") {
    int64_t vertices;
    ASSIGN_OR_RETURN(f, Field(j, path, "vertices"));
    ASSIGN_OR_RETURN(vertices, Int(*f, At(path, "vertices"), 0, kMaxSize));
    ASSIGN_OR_RETURN(f, Field(j, path, "edges"));
    if (!f->is_array()) return Error(At(path, "edges"), "expected an array");
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < f->size(); ++i) {
      const std::string p = At(At(path, "edges"), i);
      std::vector<int64_t> e;
      ASSIGN_OR_RETURN(e, IntList((*f)[i], p, 0, vertices - 1));
      if (e.size() != 2) return Error(p, "an edge has two endpoints");
      edges.emplace_back(static_cast<int>(e[0]), static_cast<int>(e[1]));
    }
    return Graphic(static_cast<int>(vertices), std::move(edges));
  }
  if (kind == "linear") {
    std::string field;
    ASSIGN_OR_RETURN(f, Field(j, path, "field"));
    ASSIGN_OR_RETURN(field, String(*f, At(path, "field")));
    if (field != "rational" && field != "prime") {
      return Error(At(path, "field"), "expected \"rational\" or \"prime\"");
    }
    int64_t rows, cols;
    ASSIGN_OR_RETURN(f, Field(j, path, "rows"));
    ASSIGN_OR_RETURN(rows, Int(*f, At(path, "rows"), 0, kMaxSize));
    ASSIGN_OR_RETURN(f, Field(j, path, "cols"));
    ASSIGN_OR_RETURN(cols, Int(*f, At(path, "cols"), 0, kMaxSize));
    ASSIGN_OR_RETURN(f, Field(j, path, "entries"));
    if (!f->is_array()) return Error(At(path, "entries"), "expected an array");
    if (static_cast<int64_t>(f->size()) != rows * cols) {
      return Error(At(path, "entries"),
                   absl::StrCat("expected rows*cols = ", rows * cols,
                                " entries, got ", f->size()));
    }
    std::vector<mpq_class> entries;
    for (size_t i = 0; i < f->size(); ++i) {
      mpq_class q;
      ASSIGN_OR_RETURN(q, Rational((*f)[i], At(At(path, "entries"), i)));
      entries.push_back(q);
    }
    if (field == "rational") {
      return RationalLinear(static_cast<int>(rows), static_cast<int>(cols),
                            std::move(entries));
    }
    int64_t prime;
    ASSIGN_OR_RETURN(f, Field(j, path, "prime"));
    ASSIGN_OR_RETURN(prime, Int(*f, At(path, "prime"), 2));
    return PrimeLinear(prime, static_cast<int>(rows), static_cast<int>(cols),
                       std::move(entries));
  }
  if (kind == "transversal") {
    int64_t left;
    ASSIGN_OR_RETURN(f, Field(j, path, "left_size"));
    ASSIGN_OR_RETURN(left, Int(*f, At(path, "left_size"), 0, kMaxSize));
    ASSIGN_OR_RETURN(f, Field(j, path, "adjacency"));
    if (!f->is_array()) return Error(At(path, "adjacency"), "expected an array");
    std::vector<std::vector<int>> adjacency;
    for (size_t i = 0; i < f->size(); ++i) {
      std::vector<int64_t> a;
      ASSIGN_OR_RETURN(a, IntList((*f)[i], At(At(path, "adjacency"), i), 0,
                                  left - 1));
      adjacency.emplace_back(a.begin(), a.end());
    }
    return Transversal(static_cast<int>(left), std::move(adjacency));
  }
  if (kind == "direct_sum") {
    ASSIGN_OR_RETURN(f, Field(j, path, "parts"));
    if (!f->is_array()) return Error(At(path, "parts"), "expected an array");
    std::vector<MatroidSpec> parts;
    for (size_t i = 0; i < f->size(); ++i) {
      MatroidSpec p;
      ASSIGN_OR_RETURN(p, DecodeSpec((*f)[i], At(At(path, "parts"), i)));
      parts.push_back(std::move(p));
    }
    return DirectSumOf(std::move(parts));
  }
  if (kind == "restriction" || kind == "contraction") {
    const char* key = kind == "restriction" ? "keep" : "contract";
    ASSIGN_OR_RETURN(f, Field(j, path, "base"));
    MatroidSpec base;
    ASSIGN_OR_RETURN(base, DecodeSpec(*f, At(path, "base")));
    ASSIGN_OR_RETURN(f, Field(j, path, key));
    std::vector<ElementId> ids;
    ASSIGN_OR_RETURN(ids, IdList(*f, At(path, key)));
    return kind == "restriction" ? RestrictionOf(std::move(base), std::move(ids))
                                 : ContractionOf(std::move(base), std::move(ids));
  }
  return Error(At(path, "kind"), absl::StrCat("unknown matroid kind \"", kind, "\""));
}

Json EncodeConstraint(const ConstraintSpec& c) {
  Json j;
  j["kind"] = KindName(c.kind);
  j["weights"] = c.weights;
  j["target"] = c.target;
  if (c.kind == ConstraintSpec::Kind::kCongruence) j["modulus"] = c.modulus;
  return j;
}

namespace {

absl::StatusOr<ConstraintSpec> DecodeConstraint(const Json& j,
                                                const std::string& path, int n) {
  const Json* f;
  std::string kind;
  ASSIGN_OR_RETURN(f, Field(j, path, "kind"));
  ASSIGN_OR_RETURN(kind, String(*f, At(path, "kind")));
  ConstraintSpec c;
  if (kind == "equality") {
    c.kind = ConstraintSpec::Kind::kEquality;
  } else if (kind == "less_equal") {
    c.kind = ConstraintSpec::Kind::kLessEqual;
  } else if (kind == "greater_equal") {
    c.kind = ConstraintSpec::Kind::kGreaterEqual;
  } else if (kind == "congruence") {
    c.kind = ConstraintSpec::Kind::kCongruence;
  } else {
    return Error(At(path, "kind"),
                 absl::StrCat("unknown constraint kind \"", kind, "\""));
  }
  ASSIGN_OR_RETURN(f, Field(j, path, "weights"));
  ASSIGN_OR_RETURN(c.weights,
                   IntList(*f, At(path, "weights"), -kMaxAbsWeight, kMaxAbsWeight));
  if (static_cast<int>(c.weights.size()) != n) {
    return Error(At(path, "weights"),
                 absl::StrCat("expected ", n, " weights, got ", c.weights.size()));
  }
  ASSIGN_OR_RETURN(f, Field(j, path, "target"));
  ASSIGN_OR_RETURN(c.target, Int(*f, At(path, "target"), -kMaxAbsTarget,
                                 kMaxAbsTarget));
  if (c.kind == ConstraintSpec::Kind::kCongruence) {
    ASSIGN_OR_RETURN(f, Field(j, path, "modulus"));
    ASSIGN_OR_RETURN(c.modulus, Int(*f, At(path, "modulus"), 1, kMaxAbsWeight));
  }
  return c;
}

absl::StatusOr<Json> ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    size_t line = 1, col = 1;
    const size_t end = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return absl::InvalidArgumentError(
        absl::StrCat("syntax error at line ", line, ", column ", col, ": ",
                     e.what()));
  }
}

}  // namespace

Json EncodeInstance(const InstanceDocument& doc) {
  Json j;
  j["format_version"] = doc.format_version;
  j["matroid"] = EncodeSpec(doc.matroid);
  j["weights"] = doc.weights;
  j["target"] = doc.target;
  if (doc.constraints.has_value()) {
    Json c = Json::array();
    for (const ConstraintSpec& x : *doc.constraints) c.push_back(EncodeConstraint(x));
    j["constraints"] = c;
  }
  j["metadata"] = doc.metadata;
  return j;
}

std::string SerializeInstance(const InstanceDocument& doc) {
  return EncodeInstance(doc).dump(2) + "\n";
}

absl::StatusOr<InstanceDocument> ParseInstance(std::string_view text) {
  Json j;
  ASSIGN_OR_RETURN(j, ParseJson(text));
  if (!j.is_object()) return Error("", "expected an object");
  InstanceDocument doc;
  const Json* f;
  ASSIGN_OR_RETURN(f, Field(j, "", "format_version"));
  int64_t version;
  ASSIGN_OR_RETURN(version, Int(*f, "format_version"));
  if (version != kFormatVersion) {
    return Error("format_version",
                 absl::StrCat("unsupported version ", version, ", expected ",
                              kFormatVersion));
  }
  ASSIGN_OR_RETURN(f, Field(j, "", "matroid"));
  ASSIGN_OR_RETURN(doc.matroid, DecodeSpec(*f, "matroid"));
  const int n = doc.matroid.GroundSize();
  if (auto it = j.find("constraints"); it != j.end()) {
    if (!it->is_array()) return Error("constraints", "expected an array");
    std::vector<ConstraintSpec> cs;
    for (size_t i = 0; i < it->size(); ++i) {
      ConstraintSpec c;
      ASSIGN_OR_RETURN(c, DecodeConstraint((*it)[i], At("constraints", i), n));
      cs.push_back(std::move(c));
    }
    doc.constraints = std::move(cs);
  }
  const bool need_weights = !doc.constraints.has_value();
  if (auto it = j.find("weights"); it != j.end() || need_weights) {
    ASSIGN_OR_RETURN(f, Field(j, "", "weights"));
    if (!f->is_array()) return Error("weights", "expected an array");
    for (size_t i = 0; i < f->size(); ++i) {
      std::vector<int64_t> row;
      ASSIGN_OR_RETURN(row, IntList((*f)[i], At("weights", i), -kMaxAbsWeight,
                                    kMaxAbsWeight));
      if (static_cast<int>(row.size()) != n) {
        return Error(At("weights", i), absl::StrCat("expected ", n,
                                                    " entries, got ", row.size()));
      }
      doc.weights.push_back(std::move(row));
    }
  }
  if (auto it = j.find("target"); it != j.end() || need_weights) {
    ASSIGN_OR_RETURN(f, Field(j, "", "target"));
    ASSIGN_OR_RETURN(doc.target, IntList(*f, "target", -kMaxAbsTarget, kMaxAbsTarget));
    if (doc.target.size() != doc.weights.size()) {
      return Error("target", absl::StrCat("expected ", doc.weights.size(),
                                          " entries, got ", doc.target.size()));
    }
  }
  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) return Error("metadata", "expected an object");
    for (auto& [k, v] : it->items()) {
      std::string s;
      ASSIGN_OR_RETURN(s, String(v, At("metadata", k)));
      doc.metadata[k] = s;
    }
  }
  for (auto& [k, v] : j.items()) {
    static const char* kKnown[] = {"format_version", "matroid", "weights",
                                   "target", "constraints", "metadata"};
    if (std::find(std::begin(kKnown), std::end(kKnown), k) == std::end(kKnown)) {
      return Error(k, "unknown field");
    }
  }
  absl::StatusOr<Matroid> compiled = Compile(doc.matroid);
  if (!compiled.ok()) {
    return Error("matroid", compiled.status().message());
  }
  return doc;
}

Json EncodeBoundReport(const BoundReport& r) {
  Json j;
  j["instance_id"] = r.instance_id;
  j["observed"] = EncodeRational(r.observed);
  j["proven_bound"] = r.proven_bound.get_str();
  j["ratio"] = EncodeRational(r.ratio);
  j["pass"] = r.pass;
  j["vacuous"] = r.vacuous;
  return j;
}

std::string SerializeResult(const ResultDocument& doc) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["status"] = doc.status;
  if (doc.basis.has_value()) j["basis"] = *doc.basis;
  j["stats"] = {{"oracle_calls", doc.stats.oracle_calls},
                {"lp_pivots", doc.stats.lp_pivots},
                {"lp_cuts", doc.stats.lp_cuts},
                {"candidates_enumerated", doc.stats.candidates_enumerated},
                {"candidates_tested", doc.stats.candidates_tested},
                {"window_radius", doc.window_radius}};
  Json reports = Json::array();
  for (const BoundReport& r : doc.bound_reports) reports.push_back(EncodeBoundReport(r));
  j["bound_reports"] = reports;
  j["seed"] = std::to_string(doc.seed);
  j["solver"] = {{"fpt", doc.solver.fpt},
                 {"linear_algebraic", doc.solver.linear_algebraic},
                 {"brute_force", doc.solver.brute_force}};
  j["details"] = doc.details;
  return j.dump(2) + "\n";
}

absl::StatusOr<ResultDocument> ParseResult(std::string_view text) {
  Json j;
  ASSIGN_OR_RETURN(j, ParseJson(text));
  ResultDocument doc;
  const Json* f;
  ASSIGN_OR_RETURN(f, Field(j, "", "status"));
  ASSIGN_OR_RETURN(doc.status, String(*f, "status"));
  if (auto it = j.find("basis"); it != j.end()) {
    std::vector<ElementId> b;
    ASSIGN_OR_RETURN(b, IdList(*it, "basis"));
    doc.basis = std::move(b);
  }
  ASSIGN_OR_RETURN(f, Field(j, "", "stats"));
  const Json& st = *f;
  struct {
    const char* key;
    int64_t* out;
  } stat_fields[] = {
      {"oracle_calls", &doc.stats.oracle_calls},
      {"lp_pivots", &doc.stats.lp_pivots},
      {"lp_cuts", &doc.stats.lp_cuts},
      {"candidates_enumerated", &doc.stats.candidates_enumerated},
      {"candidates_tested", &doc.stats.candidates_tested},
      {"window_radius", &doc.window_radius},
  };
  for (auto& sf : stat_fields) {
    ASSIGN_OR_RETURN(f, Field(st, "stats", sf.key));
    ASSIGN_OR_RETURN(*sf.out, Int(*f, At("stats", sf.key)));
  }
  ASSIGN_OR_RETURN(f, Field(j, "", "bound_reports"));
  if (!f->is_array()) return Error("bound_reports", "expected an array");
  for (size_t i = 0; i < f->size(); ++i) {
    const Json& r = (*f)[i];
    const std::string p = At("bound_reports", i);
    BoundReport br;
    const Json* g;
    ASSIGN_OR_RETURN(g, Field(r, p, "instance_id"));
    ASSIGN_OR_RETURN(br.instance_id, String(*g, At(p, "instance_id")));
    ASSIGN_OR_RETURN(g, Field(r, p, "observed"));
    ASSIGN_OR_RETURN(br.observed, Rational(*g, At(p, "observed")));
    ASSIGN_OR_RETURN(g, Field(r, p, "ratio"));
    ASSIGN_OR_RETURN(br.ratio, Rational(*g, At(p, "ratio")));
    ASSIGN_OR_RETURN(g, Field(r, p, "proven_bound"));
    std::string bound;
    ASSIGN_OR_RETURN(bound, String(*g, At(p, "proven_bound")));
    if (br.proven_bound.set_str(bound, 10) != 0) {
      return Error(At(p, "proven_bound"), "expected a decimal integer");
    }
    ASSIGN_OR_RETURN(g, Field(r, p, "pass"));
    if (!g->is_boolean()) return Error(At(p, "pass"), "expected a boolean");
    br.pass = g->get<bool>();
    ASSIGN_OR_RETURN(g, Field(r, p, "vacuous"));
    if (!g->is_boolean()) return Error(At(p, "vacuous"), "expected a boolean");
    br.vacuous = g->get<bool>();
    doc.bound_reports.push_back(std::move(br));
  }
  ASSIGN_OR_RETURN(f, Field(j, "", "seed"));
  std::string seed;
  ASSIGN_OR_RETURN(seed, String(*f, "seed"));
  mpz_class z;
  if (z.set_str(seed, 10) != 0 || z < 0 || !z.fits_ulong_p()) {
    return Error("seed", "expected an unsigned decimal integer");
  }
  doc.seed = z.get_ui();
  ASSIGN_OR_RETURN(f, Field(j, "", "solver"));
  for (auto [key, out] : {std::pair{"fpt", &doc.solver.fpt},
                          std::pair{"linear_algebraic", &doc.solver.linear_algebraic},
                          std::pair{"brute_force", &doc.solver.brute_force}}) {
    const Json* g;
    ASSIGN_OR_RETURN(g, Field(*f, "solver", key));
    if (!g->is_boolean()) return Error(At("solver", key), "expected a boolean");
    *out = g->get<bool>();
  }
  if (auto it = j.find("details"); it != j.end()) doc.details = *it;
  return doc;
}

bool SameResult(const ResultDocument& a, const ResultDocument& b) {
  return SerializeResult(a) == SerializeResult(b);
}

}  // namespace exactbasis::io
