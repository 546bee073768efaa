// The instance file format: a JSON document with field / algebra / group /
// action / global_action / triangular blocks, exact rationals as "p/q"
// strings, strict by default (unknown keys are parse errors; a lenient mode
// downgrades them to warnings). Serialization is deterministic: keys are
// sorted and scalars are canonical.

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcp/globalization.hpp"
#include "pcp/lab.hpp"
#include "pcp/triangular.hpp"

namespace pcp {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw ParseError(msg); }

struct InstanceData {
  FieldSpec field;
  AlgebraPtr algebra;  // the acting algebra (assembled L when triangular present)
  std::optional<GroupModel> group;
  std::optional<TwistedPartialAction> action;
  std::optional<GlobalAction> global;
  std::optional<TriangularAlgebra> triangular;
  std::vector<std::string> warnings;
};

namespace iodetail {

using nlohmann::json;

inline void check_keys(const json& obj, const std::vector<std::string>& allowed,
                       const std::string& where, bool lenient,
                       std::vector<std::string>& warnings) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const auto& k : allowed)
      if (it.key() == k) known = true;
    if (!known) {
      std::string msg = "unknown field '" + it.key() + "' in " + where;
      if (lenient)
        warnings.push_back(msg);
      else
        fail_parse(msg);
    }
  }
}

inline const json& need(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail_parse("missing field '" + key + "' in " + where);
  return *it;
}

inline Scalar parse_scalar(const json& j, const FieldSpec& f, const std::string& where) {
  if (!j.is_string()) fail_parse("scalar at " + where + " must be a string like \"3\" or \"3/2\"");
  try {
    return Scalar::parse(j.get<std::string>(), f);
  } catch (const std::exception& e) {
    fail_parse(std::string(e.what()) + " at " + where);
  }
}

inline Vec parse_vec(const json& j, size_t n, const FieldSpec& f, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    fail_parse("expected an array of " + std::to_string(n) + " scalars at " + where);
  Vec v;
  for (size_t i = 0; i < n; ++i) v.push_back(parse_scalar(j[i], f, where));
  return v;
}

inline ExactMatrix parse_matrix(const json& j, size_t rows, size_t cols, const FieldSpec& f,
                                const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    fail_parse("expected " + std::to_string(rows) + " matrix rows at " + where);
  ExactMatrix m(rows, cols, f);
  for (size_t i = 0; i < rows; ++i) {
    Vec row = parse_vec(j[i], cols, f, where + " row " + std::to_string(i));
    m.set_row(i, row);
  }
  return m;
}

inline FieldSpec parse_field(const json& j, bool lenient, std::vector<std::string>& warnings) {
  if (!j.is_object()) fail_parse("'field' must be an object");
  check_keys(j, {"kind", "p"}, "field", lenient, warnings);
  std::string kind = need(j, "kind", "field").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GF") {
    auto p = need(j, "p", "field");
    if (!p.is_number_unsigned()) fail_parse("'field.p' must be a positive integer");
    try {
      return FieldSpec::prime_field(p.get<unsigned long>());
    } catch (const std::exception& e) {
      fail_parse(e.what());
    }
  }
  fail_parse("unknown field kind '" + kind + "' (use \"Q\" or \"GF\")");
}

inline StructureAlgebra parse_algebra(const json& j, const FieldSpec& f, bool lenient,
                                      std::vector<std::string>& warnings,
                                      const std::string& where = "algebra") {
  if (!j.is_object()) fail_parse("'" + where + "' must be an object");
  check_keys(j, {"dim", "basis", "unit", "table"}, where, lenient, warnings);
  auto dj = need(j, "dim", where);
  if (!dj.is_number_unsigned()) fail_parse("'" + where + ".dim' must be a nonnegative integer");
  size_t dim = dj.get<size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& s : j["basis"]) names.push_back(s.get<std::string>());
    if (names.size() != dim) fail_parse("'" + where + ".basis' length != dim");
  }
  Vec unit = parse_vec(need(j, "unit", where), dim, f, where + ".unit");
  const json& tj = need(j, "table", where);
  if (!tj.is_array() || tj.size() != dim) fail_parse("'" + where + ".table' must have dim rows");
  std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
  for (size_t i = 0; i < dim; ++i) {
    if (!tj[i].is_array() || tj[i].size() != dim)
      fail_parse("'" + where + ".table' row " + std::to_string(i) + " must have dim entries");
    for (size_t k = 0; k < dim; ++k)
      table[i][k] = parse_vec(tj[i][k], dim, f,
                              where + ".table[" + std::to_string(i) + "][" + std::to_string(k) +
                                  "]");
  }
  try {
    return StructureAlgebra::make(f, dim, names, unit, table);
  } catch (const std::exception& e) {
    fail_parse(std::string("bad ") + where + ": " + e.what());
  }
}

inline GroupModel parse_group(const json& j, bool lenient, std::vector<std::string>& warnings) {
  if (!j.is_object()) fail_parse("'group' must be an object");
  check_keys(j, {"kind", "identity", "labels", "table"}, "group", lenient, warnings);
  std::string kind = need(j, "kind", "group").get<std::string>();
  if (kind == "Z") return GroupModel::integers();
  if (kind != "table") fail_parse("unknown group kind '" + kind + "' (use \"Z\" or \"table\")");
  const json& tj = need(j, "table", "group");
  if (!tj.is_array()) fail_parse("'group.table' must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : tj) {
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) fail_parse("'group.table' entries must be integers");
      r.push_back(x.get<int>());
    }
    table.push_back(std::move(r));
  }
  int identity = need(j, "identity", "group").get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& s : j["labels"]) labels.push_back(s.get<std::string>());
  return GroupModel::from_table(std::move(table), identity, std::move(labels));
}

inline GElem parse_gelem(const std::string& s, const GroupModel& g, const std::string& where) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail_parse("bad group element '" + s + "' at " + where);
    if (g.is_finite() && (v < 0 || v >= static_cast<long long>(g.order())))
      fail_parse("group element index " + s + " out of range at " + where);
    return v;
  } catch (const std::invalid_argument&) {
    fail_parse("bad group element '" + s + "' at " + where);
  } catch (const std::out_of_range&) {
    fail_parse("group element '" + s + "' out of range at " + where);
  }
}

inline std::pair<GElem, GElem> parse_gpair(const std::string& s, const GroupModel& g,
                                           const std::string& where) {
  auto comma = s.find(',');
  if (comma == std::string::npos) fail_parse("twist key '" + s + "' must be 'g,h' at " + where);
  return {parse_gelem(s.substr(0, comma), g, where), parse_gelem(s.substr(comma + 1), g, where)};
}

inline TwistedPartialAction parse_action(const json& j, const AlgebraPtr& algebra,
                                         const GroupModel& group, bool lenient,
                                         std::vector<std::string>& warnings) {
  if (!j.is_object()) fail_parse("'action' must be an object");
  check_keys(j, {"support", "idempotents", "alpha", "twist"}, "action", lenient, warnings);
  TwistedPartialAction a;
  a.algebra = algebra;
  a.group = group;
  size_t d = algebra->dim;
  for (const auto& s : need(j, "support", "action"))
    a.support.push_back(parse_gelem(s.get<std::string>(), group, "action.support"));
  std::sort(a.support.begin(), a.support.end());
  const json& idem = need(j, "idempotents", "action");
  const json& alpha = need(j, "alpha", "action");
  for (GElem g : a.support) {
    std::string key = std::to_string(g);
    if (!idem.contains(key)) fail_parse("missing idempotent for support element " + key);
    a.idem[g] = parse_vec(idem[key], d, algebra->field, "action.idempotents[" + key + "]");
    if (!alpha.contains(key)) fail_parse("missing alpha matrix for support element " + key);
    a.alpha.emplace(g, parse_matrix(alpha[key], d, d, algebra->field, "action.alpha[" + key + "]"));
  }
  for (auto it = idem.begin(); it != idem.end(); ++it)
    if (!a.in_support(parse_gelem(it.key(), group, "action.idempotents")))
      fail_parse("idempotent given for non-support element " + it.key());
  for (auto it = alpha.begin(); it != alpha.end(); ++it)
    if (!a.in_support(parse_gelem(it.key(), group, "action.alpha")))
      fail_parse("alpha given for non-support element " + it.key());
  if (j.contains("twist"))
    for (auto it = j["twist"].begin(); it != j["twist"].end(); ++it) {
      auto gh = parse_gpair(it.key(), group, "action.twist");
      a.twist[gh] = parse_vec(it.value(), d, algebra->field, "action.twist[" + it.key() + "]");
    }
  return a;
}

inline GlobalAction parse_global(const json& j, const AlgebraPtr& algebra, const GroupModel& group,
                                 bool lenient, std::vector<std::string>& warnings) {
  if (!j.is_object()) fail_parse("'global_action' must be an object");
  check_keys(j, {"beta", "twist"}, "global_action", lenient, warnings);
  GlobalAction b;
  b.algebra = algebra;
  b.group = group;
  size_t d = algebra->dim;
  const json& beta = need(j, "beta", "global_action");
  for (auto it = beta.begin(); it != beta.end(); ++it) {
    GElem g = parse_gelem(it.key(), group, "global_action.beta");
    b.beta.emplace(g,
                   parse_matrix(it.value(), d, d, algebra->field,
                                "global_action.beta[" + it.key() + "]"));
  }
  if (group.is_finite()) {
    for (GElem g : group.elements())
      if (!b.beta.count(g)) fail_parse("missing beta matrix for group element " + group.label(g));
  } else if (!b.beta.count(1)) {
    fail_parse("integer-group global action must provide beta for the generator \"1\"");
  }
  if (j.contains("twist"))
    for (auto it = j["twist"].begin(); it != j["twist"].end(); ++it) {
      auto gh = parse_gpair(it.key(), group, "global_action.twist");
      b.twist[gh] =
          parse_vec(it.value(), d, algebra->field, "global_action.twist[" + it.key() + "]");
    }
  return b;
}

inline Bimodule parse_bimodule(const json& j, const AlgebraPtr& left, const AlgebraPtr& right,
                               bool lenient, std::vector<std::string>& warnings) {
  if (!j.is_object()) fail_parse("'triangular.bimodule' must be an object");
  check_keys(j, {"dim", "left_action", "right_action"}, "triangular.bimodule", lenient, warnings);
  Bimodule bm;
  bm.left_algebra = left;
  bm.right_algebra = right;
  bm.dim = need(j, "dim", "triangular.bimodule").get<size_t>();
  const json& la = need(j, "left_action", "triangular.bimodule");
  if (!la.is_array() || la.size() != left->dim)
    fail_parse("'triangular.bimodule.left_action' needs one matrix per left basis element");
  for (size_t i = 0; i < left->dim; ++i)
    bm.left_act.push_back(parse_matrix(la[i], bm.dim, bm.dim, left->field,
                                       "triangular.bimodule.left_action[" + std::to_string(i) +
                                           "]"));
  const json& ra = need(j, "right_action", "triangular.bimodule");
  if (!ra.is_array() || ra.size() != right->dim)
    fail_parse("'triangular.bimodule.right_action' needs one matrix per right basis element");
  for (size_t i = 0; i < right->dim; ++i)
    bm.right_act.push_back(parse_matrix(ra[i], bm.dim, bm.dim, right->field,
                                        "triangular.bimodule.right_action[" + std::to_string(i) +
                                            "]"));
  return bm;
}

// serialization -------------------------------------------------------------

inline json scalar_json(const Scalar& s) { return s.str(); }

inline json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

inline json matrix_json(const ExactMatrix& m) {
  json a = json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

inline json field_json(const FieldSpec& f) {
  json j;
  j["kind"] = f.is_rationals() ? "Q" : "GF";
  if (!f.is_rationals()) j["p"] = f.p;
  return j;
}

inline json algebra_json(const StructureAlgebra& a) {
  json j;
  j["dim"] = a.dim;
  j["basis"] = a.basis_names;
  j["unit"] = vec_json(a.unit);
  json table = json::array();
  for (size_t i = 0; i < a.dim; ++i) {
    json row = json::array();
    for (size_t k = 0; k < a.dim; ++k) row.push_back(vec_json(a.basis_product(i, k)));
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

inline json group_json(const GroupModel& g) {
  json j;
  if (!g.is_finite()) {
    j["kind"] = "Z";
    return j;
  }
  j["kind"] = "table";
  j["identity"] = g.identity_index;
  j["labels"] = g.labels;
  j["table"] = g.table;
  return j;
}

inline json action_json(const TwistedPartialAction& a) {
  json j;
  json support = json::array();
  json idem = json::object();
  json alpha = json::object();
  for (GElem g : a.support) {
    std::string key = std::to_string(g);
    support.push_back(key);
    idem[key] = vec_json(a.one(g));
    alpha[key] = matrix_json(a.alpha.at(g));
  }
  j["support"] = support;
  j["idempotents"] = idem;
  j["alpha"] = alpha;
  if (!a.twist.empty()) {
    json tw = json::object();
    for (const auto& [gh, w] : a.twist)
      tw[std::to_string(gh.first) + "," + std::to_string(gh.second)] = vec_json(w);
    j["twist"] = tw;
  }
  return j;
}

inline json global_json(const GlobalAction& b) {
  json j;
  json beta = json::object();
  for (const auto& [g, m] : b.beta) beta[std::to_string(g)] = matrix_json(m);
  j["beta"] = beta;
  if (!b.twist.empty()) {
    json tw = json::object();
    for (const auto& [gh, u] : b.twist)
      tw[std::to_string(gh.first) + "," + std::to_string(gh.second)] = vec_json(u);
    j["twist"] = tw;
  }
  return j;
}

}  // namespace iodetail

inline InstanceData parse_instance(const std::string& text, bool lenient = false) {
  using iodetail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail_parse("instance file must be a JSON object");
  InstanceData out;
  iodetail::check_keys(
      j, {"format", "field", "algebra", "group", "action", "global_action", "triangular"},
      "instance", lenient, out.warnings);
  std::string format = iodetail::need(j, "format", "instance").get<std::string>();
  if (format != "pcp-instance-v1") fail_parse("unsupported format '" + format + "'");
  out.field = iodetail::parse_field(iodetail::need(j, "field", "instance"), lenient, out.warnings);

  if (j.contains("algebra") && j.contains("triangular"))
    fail_parse("give either 'algebra' or 'triangular', not both");
  if (j.contains("algebra"))
    out.algebra = std::make_shared<StructureAlgebra>(
        iodetail::parse_algebra(j["algebra"], out.field, lenient, out.warnings));
  if (j.contains("triangular")) {
    const json& tj = j["triangular"];
    iodetail::check_keys(tj, {"left", "right", "bimodule"}, "triangular", lenient, out.warnings);
    auto left = std::make_shared<StructureAlgebra>(iodetail::parse_algebra(
        iodetail::need(tj, "left", "triangular"), out.field, lenient, out.warnings,
        "triangular.left"));
    auto right = std::make_shared<StructureAlgebra>(iodetail::parse_algebra(
        iodetail::need(tj, "right", "triangular"), out.field, lenient, out.warnings,
        "triangular.right"));
    Bimodule bm = iodetail::parse_bimodule(iodetail::need(tj, "bimodule", "triangular"), left,
                                           right, lenient, out.warnings);
    try {
      out.triangular = assemble_triangular(bm);
    } catch (const std::exception& e) {
      fail_parse(std::string("bad triangular block: ") + e.what());
    }
    out.algebra = out.triangular->algebra;
  }
  if (j.contains("group"))
    out.group = iodetail::parse_group(j["group"], lenient, out.warnings);
  if (j.contains("action")) {
    if (!out.algebra || !out.group)
      fail_parse("'action' requires both an algebra (or triangular) block and a group block");
    out.action =
        iodetail::parse_action(j["action"], out.algebra, *out.group, lenient, out.warnings);
  }
  if (j.contains("global_action")) {
    if (!out.algebra || !out.group)
      fail_parse("'global_action' requires both an algebra block and a group block");
    out.global =
        iodetail::parse_global(j["global_action"], out.algebra, *out.group, lenient, out.warnings);
  }
  return out;
}

inline InstanceData load_instance(const std::string& path, bool lenient = false) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str(), lenient);
}

inline std::string serialize_algebra_instance(const FieldSpec& f, const StructureAlgebra& a) {
  iodetail::json j;
  j["format"] = "pcp-instance-v1";
  j["field"] = iodetail::field_json(f);
  j["algebra"] = iodetail::algebra_json(a);
  return j.dump(2) + "\n";
}

inline std::string serialize_action_instance(const TwistedPartialAction& a) {
  iodetail::json j;
  j["format"] = "pcp-instance-v1";
  j["field"] = iodetail::field_json(a.R().field);
  j["algebra"] = iodetail::algebra_json(a.R());
  j["group"] = iodetail::group_json(a.group);
  j["action"] = iodetail::action_json(a);
  return j.dump(2) + "\n";
}

inline std::string serialize_global_instance(const GlobalAction& b) {
  iodetail::json j;
  j["format"] = "pcp-instance-v1";
  j["field"] = iodetail::field_json(b.T().field);
  j["algebra"] = iodetail::algebra_json(b.T());
  j["group"] = iodetail::group_json(b.group);
  j["global_action"] = iodetail::global_json(b);
  return j.dump(2) + "\n";
}

inline std::string serialize_triangular_instance(const TriangularAlgebra& L,
                                                 const std::optional<TwistedPartialAction>& act) {
  iodetail::json j;
  j["format"] = "pcp-instance-v1";
  j["field"] = iodetail::field_json(L.algebra->field);
  iodetail::json tj;
  tj["left"] = iodetail::algebra_json(*L.bimodule.left_algebra);
  tj["right"] = iodetail::algebra_json(*L.bimodule.right_algebra);
  iodetail::json bj;
  bj["dim"] = L.bimodule.dim;
  iodetail::json la = iodetail::json::array();
  for (const auto& m : L.bimodule.left_act) la.push_back(iodetail::matrix_json(m));
  bj["left_action"] = la;
  iodetail::json ra = iodetail::json::array();
  for (const auto& m : L.bimodule.right_act) ra.push_back(iodetail::matrix_json(m));
  bj["right_action"] = ra;
  tj["bimodule"] = bj;
  j["triangular"] = tj;
  if (act) {
    j["group"] = iodetail::group_json(act->group);
    j["action"] = iodetail::action_json(*act);
  }
  return j.dump(2) + "\n";
}

/// The linked-pair file written by the globalize command.
inline std::string serialize_pair(const std::string& partial_path, const std::string& global_path,
                                  const ExactMatrix& embedding) {
  iodetail::json j;
  j["format"] = "pcp-pair-v1";
  j["partial"] = partial_path;
  j["global"] = global_path;
  j["embedding"] = iodetail::matrix_json(embedding);
  return j.dump(2) + "\n";
}

struct PairFile {
  std::string partial_path;
  std::string global_path;
  std::vector<std::vector<std::string>> embedding_rows;  // parsed after both sides load
};

inline PairFile parse_pair_file(const std::string& text) {
  using iodetail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(std::string("not valid JSON: ") + e.what());
  }
  std::vector<std::string> warnings;
  iodetail::check_keys(j, {"format", "partial", "global", "embedding"}, "pair", false, warnings);
  if (iodetail::need(j, "format", "pair").get<std::string>() != "pcp-pair-v1")
    fail_parse("unsupported pair format");
  PairFile out;
  out.partial_path = iodetail::need(j, "partial", "pair").get<std::string>();
  out.global_path = iodetail::need(j, "global", "pair").get<std::string>();
  for (const auto& row : iodetail::need(j, "embedding", "pair")) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.get<std::string>());
    out.embedding_rows.push_back(std::move(r));
  }
  return out;
}

/// One finding as a line-delimited JSON record.
inline std::string finding_json_line(const Finding& f) {
  iodetail::json j;
  j["suite"] = f.suite;
  j["fingerprint"] = f.fingerprint;
  j["claim"] = f.claim;
  j["verdict"] = f.verdict;
  j["witness"] = f.witness;
  return j.dump();
}

}  // namespace pcp
