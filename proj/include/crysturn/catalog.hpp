#pragma once

// Group definition files: JSON with exact rational strings, and the
// built-in fixture catalog.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "crysturn/catalog_data.hpp"
#include "crysturn/cryst_group.hpp"
#include "crysturn/reidemeister.hpp"
#include "crysturn/spectrum_description.hpp"

namespace crysturn {

/// Annotation with the result a group is expected to have.
struct ExpectedResult {
  std::string spectrum;  // finite part, see SpectrumDescription::parse
  bool r_infinity = false;
  std::optional<std::size_t> normaliser_order;
  std::optional<bool> bieberbach;
};

struct GroupFile {
  std::string name;
  std::size_t dimension = 0;
  std::map<std::string, std::string> labels;
  std::vector<AffineMap> generators;
  std::optional<std::vector<IntMatrix>> normalizer_generators;
  std::optional<ExpectedResult> expected;
};

namespace detail {

using nlohmann::json;

inline IntMatrix matrix_from_json(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw ParseError(where + ": matrix must be an array of " + std::to_string(n) + " rows");
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError(where + ": row " + std::to_string(r) + " must have " + std::to_string(n) + " integers");
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_number_integer()) throw ParseError(where + ": matrix entries must be integers");
      m(r, c) = Integer(row[c].dump());
    }
  }
  return m;
}

inline json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).fits_slong_p()) throw DomainError("matrix entry too large for the file format");
      row.push_back(m(r, c).get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline std::string rational_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace detail

/// Parses a group document. Unknown keys and non-exact numbers are rejected.
inline GroupFile parse_group_file(const std::string& text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("group document must be a JSON object");
  static const std::set<std::string> known{"name", "dimension", "labels", "generators", "normalizer_generators", "expected"};
  for (const auto& [key, _] : doc.items())
    if (!known.contains(key)) throw ParseError("unknown key '" + key + "'");

  GroupFile out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() <= 0)
    throw ParseError("dimension must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["dimension"].get<long long>());
  out.dimension = n;

  if (doc.contains("labels")) {
    if (!doc["labels"].is_object()) throw ParseError("labels must be an object");
    for (const auto& [key, value] : doc["labels"].items()) {
      if (!value.is_string()) throw ParseError("label '" + key + "' must be a string");
      out.labels[key] = value.get<std::string>();
    }
  }

  if (!doc.contains("generators") || !doc["generators"].is_array()) throw ParseError("generators must be an array");
  std::size_t idx = 0;
  for (const auto& g : doc["generators"]) {
    const std::string where = "generator " + std::to_string(idx++);
    if (!g.is_object() || !g.contains("translation") || !g.contains("matrix"))
      throw ParseError(where + ": needs 'translation' and 'matrix'");
    for (const auto& [key, _] : g.items())
      if (key != "translation" && key != "matrix") throw ParseError(where + ": unknown key '" + key + "'");
    const json& t = g["translation"];
    if (!t.is_array() || t.size() != n) throw ParseError(where + ": translation must have " + std::to_string(n) + " entries");
    RatVector translation;
    for (const auto& c : t) {
      if (!c.is_string()) throw ParseError(where + ": translation entries must be strings \"p/q\"");
      translation.push_back(parse_rational(c.get<std::string>()));
    }
    out.generators.push_back({std::move(translation), detail::matrix_from_json(g["matrix"], n, where)});
  }

  if (doc.contains("normalizer_generators")) {
    const json& ng = doc["normalizer_generators"];
    if (!ng.is_array()) throw ParseError("normalizer_generators must be an array");
    std::vector<IntMatrix> mats;
    for (std::size_t i = 0; i < ng.size(); ++i)
      mats.push_back(detail::matrix_from_json(ng[i], n, "normalizer generator " + std::to_string(i)));
    out.normalizer_generators = std::move(mats);
  }

  if (doc.contains("expected")) {
    const json& e = doc["expected"];
    if (!e.is_object()) throw ParseError("expected must be an object");
    ExpectedResult exp;
    for (const auto& [key, value] : e.items()) {
      if (key == "spectrum") {
        if (!value.is_string()) throw ParseError("expected.spectrum must be a string");
        exp.spectrum = value.get<std::string>();
        SpectrumDescription::parse(exp.spectrum);
      } else if (key == "r_infinity") {
        if (!value.is_boolean()) throw ParseError("expected.r_infinity must be a boolean");
        exp.r_infinity = value.get<bool>();
      } else if (key == "normaliser_order") {
        if (!value.is_number_unsigned()) throw ParseError("expected.normaliser_order must be a positive integer");
        exp.normaliser_order = value.get<std::size_t>();
      } else if (key == "bieberbach") {
        if (!value.is_boolean()) throw ParseError("expected.bieberbach must be a boolean");
        exp.bieberbach = value.get<bool>();
      } else {
        throw ParseError("unknown key 'expected." + key + "'");
      }
    }
    out.expected = std::move(exp);
  }
  return out;
}

/// Builds and validates the group described by a file. Non-canonical
/// translations are reduced into [0, 1) and reported through `warnings`.
inline CrystGroup to_group(const GroupFile& file, std::vector<std::string>* warnings = nullptr,
                           std::size_t cap = kDefaultClosureCap) {
  if (warnings) {
    for (std::size_t i = 0; i < file.generators.size(); ++i)
      if (canonical_translation(file.generators[i].translation) != file.generators[i].translation)
        warnings->push_back("generator " + std::to_string(i) + ": translation reduced into [0,1)");
  }
  return build_group(file.dimension, file.generators, file.normalizer_generators, file.labels, file.name, cap);
}

inline CrystGroup load_group_text(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  return to_group(parse_group_file(text), warnings);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline CrystGroup load_group(const std::string& path, std::vector<std::string>* warnings = nullptr) {
  return load_group_text(read_text_file(path), warnings);
}

inline nlohmann::json group_to_json(const CrystGroup& g, const std::optional<ExpectedResult>& expected = std::nullopt) {
  using detail::json;
  json doc;
  doc["name"] = g.name();
  doc["dimension"] = g.dimension();
  doc["labels"] = json::object();
  for (const auto& [k, v] : g.labels()) doc["labels"][k] = v;
  doc["generators"] = json::array();
  for (const auto& gen : g.generators()) {
    json t = json::array();
    for (const auto& q : gen.translation) t.push_back(detail::rational_string(q));
    doc["generators"].push_back({{"translation", t}, {"matrix", detail::matrix_to_json(gen.linear)}});
  }
  if (g.normaliser_generators()) {
    doc["normalizer_generators"] = json::array();
    for (const auto& m : *g.normaliser_generators()) doc["normalizer_generators"].push_back(detail::matrix_to_json(m));
  }
  if (expected) {
    json e{{"spectrum", expected->spectrum}, {"r_infinity", expected->r_infinity}};
    if (expected->normaliser_order) e["normaliser_order"] = *expected->normaliser_order;
    if (expected->bieberbach) e["bieberbach"] = *expected->bieberbach;
    doc["expected"] = e;
  }
  return doc;
}

inline std::string save_group_text(const CrystGroup& g) { return group_to_json(g).dump(2) + "\n"; }

inline void save_group(const CrystGroup& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << save_group_text(g);
  if (!out) throw Error("write to '" + path + "' failed");
}

class Catalog {
 public:
  explicit Catalog(std::map<std::string, GroupFile> entries) : entries_(std::move(entries)) {}

  const std::map<std::string, GroupFile>& entries() const { return entries_; }
  bool contains(const std::string& name) const { return entries_.contains(name); }
  const GroupFile& at(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw DomainError("no catalog entry named '" + name + "'");
    return it->second;
  }
  CrystGroup group(const std::string& name) const { return to_group(at(name)); }

 private:
  std::map<std::string, GroupFile> entries_;
};

inline const Catalog& builtin_catalog() {
  static const Catalog catalog = [] {
    const auto docs = nlohmann::json::parse(data::kBuiltinCatalog);
    std::map<std::string, GroupFile> entries;
    for (const auto& doc : docs) {
      GroupFile f = parse_group_file(doc.dump());
      if (!entries.emplace(f.name, f).second) throw std::logic_error("duplicate catalog entry " + f.name);
    }
    return Catalog(std::move(entries));
  }();
  return catalog;
}

struct CheckReport {
  std::string name;
  bool passed = true;
  bool sampled = false;  // infinite N_F: spectrum checked on a sample of D only
  std::vector<std::string> details;
};

namespace detail {

inline void check_item(CheckReport& r, bool ok, const std::string& what) {
  r.details.push_back(std::string(ok ? "ok: " : "MISMATCH: ") + what);
  if (!ok) r.passed = false;
}

inline std::string set_str(const std::set<Integer>& values) {
  return SpectrumDescription::finite_set(values).str();
}

}  // namespace detail

/// Compares computed results with the expected block of `file`.
///
/// With finite N_F (closure within `cap`) the spectrum, |N_F|, the
/// Bieberbach flag and the R∞ verdict are compared exactly. Otherwise the
/// R∞ verdict is confirmed by a word search of length `search_words`, and
/// every value found for D among words of length <= `sample_words` must lie
/// in the expected description.
inline CheckReport check_entry(const GroupFile& file, std::size_t cap = kDefaultClosureCap, std::size_t search_words = 4,
                               std::size_t sample_words = 2) {
  CheckReport r;
  r.name = file.name;
  if (!file.expected) {
    r.passed = false;
    r.details.push_back("no expected block");
    return r;
  }
  const ExpectedResult& exp = *file.expected;
  const CrystGroup g = to_group(file);
  const SpectrumDescription want = SpectrumDescription::parse(exp.spectrum);

  if (exp.bieberbach)
    detail::check_item(r, is_bieberbach(g) == *exp.bieberbach, std::string("Bieberbach = ") + (*exp.bieberbach ? "yes" : "no"));

  auto normaliser = enumerate_normaliser(g, cap);
  if (normaliser) {
    if (exp.normaliser_order)
      detail::check_item(r, normaliser->size() == *exp.normaliser_order,
                         "|N_F| = " + std::to_string(normaliser->size()) + " (expected " + std::to_string(*exp.normaliser_order) + ")");
    const RInfinityVerdict verdict = has_r_infinity(g, cap);
    const bool holds = verdict.kind == RInfinityVerdict::Kind::kHolds;
    detail::check_item(r, holds == exp.r_infinity, std::string("R-infinity ") + (holds ? "holds" : "fails"));
    const ComputedSpectrum spec = spectrum(g, cap);
    detail::check_item(r, spec.finite_values == want.finite_values() && want.scale_factors().empty(),
                       "spectrum finite part " + detail::set_str(spec.finite_values) + " (expected " + want.str() + ")");
    if (want.includes_infinity()) detail::check_item(r, spec.contains_infinity, "infinity in spectrum");
    return r;
  }

  r.sampled = true;
  if (exp.normaliser_order) detail::check_item(r, false, "N_F exceeds the cap but a finite order is expected");
  const auto witness = find_nonvanishing_D(g, search_words);
  if (exp.r_infinity) {
    detail::check_item(r, !witness.has_value(), "no finite Reidemeister number among sampled D");
    return r;
  }
  detail::check_item(r, witness.has_value(),
                     witness ? "R-infinity fails, witness D = " + to_string(*witness) : "no witness found for R-infinity failing");

  std::vector<IntMatrix> letters = *g.normaliser_generators();
  std::sort(letters.begin(), letters.end());
  const std::size_t gen_count = letters.size();
  for (std::size_t i = 0; i < gen_count; ++i) letters.push_back(inverse_unimodular(letters[i]));
  std::set<IntMatrix> seen{IntMatrix::identity(g.dimension())};
  std::vector<IntMatrix> level{IntMatrix::identity(g.dimension())};
  for (std::size_t len = 1; len <= sample_words; ++len) {
    std::vector<IntMatrix> next;
    for (const auto& w : level)
      for (const auto& l : letters)
        if (IntMatrix m = w * l; seen.insert(m).second) next.push_back(std::move(m));
    level = std::move(next);
  }
  if (witness) seen.insert(*witness);
  std::set<Integer> found;
  for (const auto& d_mat : seen)
    for (const auto& v : reidemeister_set_for_D(g, d_mat))
      if (!v.is_infinite()) found.insert(v.value());
  bool all_in = std::all_of(found.begin(), found.end(), [&](const Integer& v) { return want.contains(v); });
  detail::check_item(r, all_in && !found.empty(),
                     "sampled values " + detail::set_str(found) + " from " + std::to_string(seen.size()) +
                         " matrices lie in " + want.str());
  return r;
}

inline std::vector<CheckReport> catalog_check(const Catalog& catalog, const std::optional<std::string>& name = std::nullopt,
                                              std::size_t cap = kDefaultClosureCap) {
  std::vector<CheckReport> out;
  if (name) {
    out.push_back(check_entry(catalog.at(*name), cap));
    return out;
  }
  for (const auto& [_, file] : catalog.entries()) out.push_back(check_entry(file, cap));
  return out;
}

}  // namespace crysturn
