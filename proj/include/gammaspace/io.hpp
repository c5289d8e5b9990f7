#pragma once

// JSON formats.
//
//   group:    {"elements": [...], "table": [[...]]}, identity listed first
//   monoid:   {"elements": [...], "unit": e, "table": [[...]]}, optional "inverse"
//   action:   {"group": group, "monoid": monoid, "action": [[...]]}, one row per
//             group element in group order
//   presheaf: {"format": "gammaspace-presheaf", "version": 1, "group": group,
//              "levels": N, "elements": [[...] per level],
//              "morphisms": [{"source", "target", "map", "g", "table"}],
//              "digests": {"m->n": sha256 of the hom-set's tables}}
//
// Table entries may be element labels (strings) or indices (integers).

#include <openssl/evp.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gammaspace/algebra.hpp"
#include "gammaspace/classifying.hpp"
#include "gammaspace/error.hpp"
#include "gammaspace/group.hpp"
#include "gammaspace/homology.hpp"
#include "gammaspace/presheaf.hpp"

namespace gammaspace {

using json = nlohmann::json;

/// Input that does not match a schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace detail {

inline const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

inline std::vector<std::string> labels_of(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw SchemaError(std::string(what) + ": elements must be a non-empty array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(e.get<std::string>());
    else if (e.is_number_integer())
      out.push_back(std::to_string(e.get<std::int64_t>()));
    else
      throw SchemaError(std::string(what) + ": element labels must be strings or integers");
  }
  std::map<std::string, int> seen;
  for (const auto& l : out)
    if (seen[l]++) throw SchemaError(std::string(what) + ": duplicate element \"" + l + "\"");
  return out;
}

inline std::size_t resolve(const json& e, const std::vector<std::string>& labels, const char* what) {
  if (e.is_string()) {
    const auto s = e.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    throw SchemaError(std::string(what) + ": unknown element \"" + s + "\"");
  }
  if (e.is_number_unsigned() || (e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
    const auto i = e.get<std::size_t>();
    if (i >= labels.size()) throw SchemaError(std::string(what) + ": index out of range");
    return i;
  }
  throw SchemaError(std::string(what) + ": entries must be labels or indices");
}

inline Table square_table(const json& j, const std::vector<std::string>& row_labels,
                          std::size_t rows, const char* what) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError(std::string(what) + ": table must have " + std::to_string(rows) + " rows");
  Table t;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != row_labels.size())
      throw SchemaError(std::string(what) + ": table rows must have " +
                        std::to_string(row_labels.size()) + " entries");
    std::vector<std::size_t> r;
    for (const auto& e : row) r.push_back(resolve(e, row_labels, what));
    t.push_back(std::move(r));
  }
  return t;
}

inline json table_json(const Table& t) {
  json out = json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

}  // namespace detail

inline GroupPtr group_from_json(const json& j) {
  auto labels = detail::labels_of(detail::field(j, "elements", "group"), "group");
  auto table = detail::square_table(detail::field(j, "table", "group"), labels, labels.size(), "group");
  return std::make_shared<const FiniteGroup>(std::move(labels), std::move(table));
}

inline json to_json(const FiniteGroup& g) {
  return {{"elements", g.labels()}, {"table", detail::table_json(g.table())}};
}

inline FinAbMonoid monoid_from_json(const json& j) {
  auto labels = detail::labels_of(detail::field(j, "elements", "monoid"), "monoid");
  const auto unit = detail::resolve(detail::field(j, "unit", "monoid"), labels, "monoid");
  auto table = detail::square_table(detail::field(j, "table", "monoid"), labels, labels.size(), "monoid");
  FinAbMonoid m(std::move(labels), unit, std::move(table));
  if (auto it = j.find("inverse"); it != j.end()) {
    if (!it->is_array() || it->size() != m.size())
      throw SchemaError("monoid: inverse must list one entry per element");
    for (std::size_t a = 0; a < m.size(); ++a) {
      const auto b = detail::resolve((*it)[a], m.labels(), "monoid");
      if (m.mult(a, b) != m.unit()) throw AlgebraError("inverse", {a, b});
    }
  }
  return m;
}

inline json to_json(const FinAbMonoid& m) {
  return {{"elements", m.labels()}, {"unit", m.unit()}, {"table", detail::table_json(m.table())}};
}

inline json to_json(const FinAbGroup& a) {
  auto j = to_json(a.monoid());
  j["inverse"] = a.inverse_table();
  return j;
}

inline GMonoid gmonoid_from_json(const json& j) {
  auto group = group_from_json(detail::field(j, "group", "action file"));
  auto monoid = monoid_from_json(detail::field(j, "monoid", "action file"));
  auto action = detail::square_table(detail::field(j, "action", "action file"), monoid.labels(),
                                     group->order(), "action");
  return {std::move(monoid), std::move(group), std::move(action)};
}

inline json to_json(const GMonoid& a) {
  return {{"group", to_json(*a.group())},
          {"monoid", to_json(a.monoid())},
          {"action", detail::table_json(a.action())}};
}

/// A monoid file or an action file; a bare monoid gets the trivial action.
inline GMonoid algebra_from_json(const json& j) {
  if (j.is_object() && j.contains("group") && j.contains("action")) return gmonoid_from_json(j);
  return GMonoid::trivial_action(monoid_from_json(j));
}

inline bool is_presheaf_json(const json& j) {
  return j.is_object() && j.value("format", "") == "gammaspace-presheaf";
}

/// Every table of x up to its level bound, plus per-hom-set digests.
inline json presheaf_to_json(const GammaSet& x, std::size_t budget) {
  const auto tab = tabulate(x, budget);
  json j;
  j["format"] = "gammaspace-presheaf";
  j["version"] = 1;
  j["group"] = to_json(*x.group());
  j["levels"] = x.level_bound();
  j["elements"] = tab->elements();
  json morphisms = json::array();
  std::map<std::string, std::string> hom_data;
  for (const auto& f : enumerate_ggamma(x.level_bound(), x.group())) {
    const auto t = tab->table(f);
    morphisms.push_back({{"source", f.source()},
                         {"target", f.target()},
                         {"map", f.underlying().values()},
                         {"g", f.element()},
                         {"table", *t}});
    auto& acc = hom_data[std::to_string(f.source()) + "->" + std::to_string(f.target())];
    acc += json(f.underlying().values()).dump() + ":" + std::to_string(f.element()) + "=" +
           json(*t).dump() + ";";
  }
  j["morphisms"] = std::move(morphisms);
  json digests = json::object();
  for (const auto& [k, v] : hom_data) digests[k] = sha256_hex(v);
  j["digests"] = std::move(digests);
  return j;
}

inline std::shared_ptr<const TabulatedGammaSet> presheaf_from_json(const json& j) {
  if (!is_presheaf_json(j)) throw SchemaError("presheaf: missing format tag");
  if (detail::field(j, "version", "presheaf") != 1) throw SchemaError("presheaf: unsupported version");
  auto group = group_from_json(detail::field(j, "group", "presheaf"));
  const auto& levels = detail::field(j, "elements", "presheaf");
  if (!levels.is_array() || levels.empty()) throw SchemaError("presheaf: elements must list levels");
  std::vector<std::vector<std::string>> elements;
  for (const auto& level : levels) elements.push_back(detail::labels_of(level, "presheaf level"));
  if (detail::field(j, "levels", "presheaf") != elements.size() - 1)
    throw SchemaError("presheaf: level count disagrees with elements");
  std::vector<TabulatedGammaSet::Entry> entries;
  for (const auto& m : detail::field(j, "morphisms", "presheaf")) {
    try {
      const auto source = detail::field(m, "source", "morphism").get<std::size_t>();
      const auto target = detail::field(m, "target", "morphism").get<std::size_t>();
      auto values = detail::field(m, "map", "morphism").get<std::vector<std::size_t>>();
      const auto g = detail::field(m, "g", "morphism").get<std::size_t>();
      auto table = detail::field(m, "table", "morphism").get<LevelTable>();
      entries.push_back({GGammaMap(GammaOpMap(source, target, std::move(values)), g, group),
                         std::move(table)});
    } catch (const json::exception& e) {
      throw SchemaError(std::string("presheaf morphism: ") + e.what());
    }
  }
  try {
    return std::make_shared<const TabulatedGammaSet>(group, std::move(elements), std::move(entries));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
}

inline json to_json(const ChainComplex& c) {
  json degrees = json::array();
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    const auto& m = c.boundary[p];
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::vector<std::int64_t> row(m.cols());
      for (std::size_t col = 0; col < m.cols(); ++col) row[col] = m(r, col);
      rows.push_back(std::move(row));
    }
    degrees.push_back({{"degree", p}, {"rank", c.ranks[p]}, {"rows", m.rows()},
                       {"cols", m.cols()}, {"matrix", std::move(rows)}});
  }
  return {{"degrees", std::move(degrees)}};
}

inline json to_json(const HomologyGroup& h) {
  return {{"rank", h.free_rank}, {"torsion", h.torsion}, {"group", h.to_string()}};
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::int64_t> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const ConditionReport& r) {
  json j = {{"condition", r.condition}, {"upto", r.upto}, {"passed", r.passed},
            {"message", r.message()}};
  if (!r.passed) {
    j["failing_level"] = *r.failing_level;
    j["failure"] = r.failure;
    j["witness"] = r.witness;
  }
  return j;
}

inline json to_json(const FunctorialityReport& r) {
  json j = {{"pairs_checked", r.pairs_checked}, {"passed", r.passed}};
  if (!r.passed) j["failure"] = r.failure;
  return j;
}

inline json to_json(const DeloopingReport& r, const FiniteGroup& group) {
  json homology = json::array();
  for (std::size_t q = 0; q < r.homology.size(); ++q) {
    auto h = to_json(r.homology[q]);
    h["degree"] = q;
    homology.push_back(std::move(h));
  }
  json actions = json::array();
  for (const auto& a : r.actions)
    actions.push_back({{"element", group.label(a.element)}, {"degree", a.degree},
                       {"matrix", to_json(a.matrix)}, {"orders", a.orders}});
  json oracle = json::array();
  for (const auto& o : r.oracle)
    oracle.push_back({{"degree", o.degree}, {"expected", to_json(o.expected)},
                      {"computed", to_json(o.computed)}, {"match", o.match}});
  return {{"iterations", r.iterations}, {"truncation", r.truncation}, {"object", r.object},
          {"levels", r.level_sizes},    {"homology", std::move(homology)},
          {"g_action_on_H", std::move(actions)}, {"group_like", r.group_like},
          {"oracle_comparisons", std::move(oracle)}};
}

}  // namespace gammaspace
