#pragma once

// Command-line front end. run() is the whole program; the executable in
// tools/ only forwards argv.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crysturn/crysturn.hpp"

namespace crysturn::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidData = 2, kUndecided = 3, kInternal = 4 };

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

using nlohmann::json;

inline std::string vector_str(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += crysturn::detail::rational_string(v[i]);
  }
  return s;
}

inline json count_json(const ReidCount& r) {
  if (r.is_infinite()) return "inf";
  if (r.value().fits_slong_p()) return r.value().get_si();
  return r.value().get_str();
}

inline json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline std::size_t default_cap() {
  if (const char* env = std::getenv("CRYSTURN_CAP")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("CRYSTURN_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultClosureCap;
}

/// A path to a group file, or else the name of a catalog entry.
inline CrystGroup resolve_source(const std::string& source, std::vector<std::string>* warnings) {
  if (std::filesystem::is_regular_file(source)) return load_group(source, warnings);
  if (builtin_catalog().contains(source)) return builtin_catalog().group(source);
  throw UsageError("'" + source + "' is neither a readable group file nor a catalog entry");
}

/// Command-line matrix and vector arguments; malformed text is a usage error.
inline IntMatrix matrix_arg(const std::string& text) {
  try {
    return parse_int_matrix(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--D: ") + e.what());
  }
}

inline RatVector vector_arg(const std::string& text) {
  try {
    return parse_rat_vector(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--d: ") + e.what());
  }
}

/// Normaliser size for the meta block.
inline json normaliser_meta(const CrystGroup& g, std::size_t cap) {
  if (!g.normaliser_generators()) return nullptr;
  auto n = enumerate_normaliser(g, cap);
  if (!n) return "infinite/over-cap";
  return n->size();
}

class Session {
 public:
  Session(std::ostream& out, bool json_mode) : out_(out), json_mode_(json_mode) {}

  void line(const std::string& text) {
    if (!json_mode_) out_ << text << '\n';
  }
  json& result() { return result_; }
  json& meta() { return meta_; }

  void finish(std::chrono::steady_clock::time_point start) {
    meta_["time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (json_mode_) out_ << json{{"result", result_}, {"meta", meta_}}.dump(2) << '\n';
  }

 private:
  std::ostream& out_;
  bool json_mode_;
  json result_ = json::object();
  json meta_ = json::object();
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using detail::json;
  CLI::App app{"Reidemeister numbers, spectra and the R-infinity property of crystallographic groups", "crysturn"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Machine-readable output");

  std::string file, source, d_matrix, d_vector, catalog_name;
  std::optional<std::size_t> cap_opt;
  std::size_t search_words = 3;

  auto* validate = app.add_subcommand("validate", "Load and validate a group file");
  validate->add_option("FILE", file)->required();

  auto* rinf = app.add_subcommand("rinf", "Decide the R-infinity property");
  rinf->add_option("SOURCE", source)->required();
  rinf->add_option("--cap", cap_opt, "Closure cap for the normaliser")->check(CLI::PositiveNumber);
  rinf->add_option("--search-words", search_words, "Word length searched when N_F is over the cap (0 disables)");

  auto* spec = app.add_subcommand("spectrum", "Reidemeister spectrum (finite normaliser)");
  spec->add_option("SOURCE", source)->required();
  spec->add_option("--cap", cap_opt, "Closure cap for the normaliser")->check(CLI::PositiveNumber);

  auto* reidnr = app.add_subcommand("reidnr", "Reidemeister number of xi_(d,D)");
  reidnr->add_option("SOURCE", source)->required();
  reidnr->add_option("--D", d_matrix, "Linear part, e.g. [[0,-1],[1,-1]]")->required();
  reidnr->add_option("--d", d_vector, "Translation part, e.g. 0,1/2")->required();

  auto* find_d = app.add_subcommand("find-d", "Find d making xi_(d,D) an automorphism");
  find_d->add_option("SOURCE", source)->required();
  find_d->add_option("--D", d_matrix, "Linear part")->required();

  auto* dbase = app.add_subcommand("delta-base", "Translations representing automorphisms trivial on Z^n");
  dbase->add_option("SOURCE", source)->required();

  auto* catalog = app.add_subcommand("catalog", "Browse and check the built-in catalog");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List entries");
  auto* cat_show = catalog->add_subcommand("show", "Print an entry as a group file");
  cat_show->add_option("NAME", catalog_name)->required();
  auto* cat_check = catalog->add_subcommand("check", "Compare computed results with the expected blocks");
  cat_check->add_option("NAME", catalog_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  detail::Session s(out, json_mode);
  auto fail = [&](int code, const std::string& message) {
    err << "error: " << message << '\n';
    if (json_mode) {
      s.result() = nullptr;
      s.meta()["error"] = message;
      s.meta()["exit_code"] = code;
      s.finish(start);
    }
    return code;
  };

  try {
    const std::size_t cap = cap_opt ? *cap_opt : detail::default_cap();
    std::vector<std::string> warnings;

    if (validate->parsed()) {
      CrystGroup g = load_group(file, &warnings);
      const json normaliser = detail::normaliser_meta(g, cap);
      s.meta()["group"] = g.name();
      s.meta()["normaliser"] = normaliser;
      s.result() = {{"valid", true},
                    {"dimension", g.dimension()},
                    {"holonomy_order", g.holonomy_order()},
                    {"bieberbach", is_bieberbach(g)},
                    {"warnings", warnings}};
      s.line("valid: " + (g.name().empty() ? file : g.name()));
      s.line("dimension: " + std::to_string(g.dimension()));
      s.line("holonomy order: " + std::to_string(g.holonomy_order()));
      s.line(std::string("bieberbach: ") + (is_bieberbach(g) ? "yes" : "no"));
      s.line("normaliser: " + (normaliser.is_null() ? std::string("not supplied")
                                                     : normaliser.is_string() ? normaliser.get<std::string>()
                                                                              : normaliser.dump()));
      for (const auto& w : warnings) s.line("warning: " + w);
      s.finish(start);
      return kOk;
    }

    if (catalog->parsed()) {
      const Catalog& cat = builtin_catalog();
      if (cat_list->parsed()) {
        json entries = json::array();
        for (const auto& [name, f] : cat.entries()) {
          json labels = json::object();
          std::string text = name;
          for (const auto& [k, v] : f.labels) {
            labels[k] = v;
            text += "  " + k + "=" + v;
          }
          entries.push_back({{"name", name}, {"dimension", f.dimension}, {"labels", labels}});
          s.line(text);
        }
        s.result()["entries"] = entries;
        s.meta()["group"] = nullptr;
        s.meta()["normaliser"] = nullptr;
        s.finish(start);
        return kOk;
      }
      if (cat_show->parsed()) {
        const GroupFile& f = cat.at(catalog_name);
        json doc = group_to_json(to_group(f), f.expected);
        s.result()["document"] = doc;
        s.meta()["group"] = f.name;
        s.meta()["normaliser"] = detail::normaliser_meta(to_group(f), cap);
        s.line(doc.dump(2));
        s.finish(start);
        return kOk;
      }
      std::optional<std::string> only;
      if (!catalog_name.empty()) only = catalog_name;
      if (only && !cat.contains(*only)) throw UsageError("no catalog entry named '" + *only + "'");
      const auto reports = catalog_check(cat, only, cap);
      json rows = json::array();
      std::size_t passed = 0;
      for (const auto& r : reports) {
        if (r.passed) ++passed;
        rows.push_back({{"name", r.name}, {"passed", r.passed}, {"sampled", r.sampled}, {"details", r.details}});
        s.line(std::string(r.passed ? "PASS" : "FAIL") + (r.sampled ? " (sampled)" : "") + "  " + r.name);
        for (const auto& d : r.details) s.line("    " + d);
      }
      const std::string summary = std::to_string(passed) + " passed, " + std::to_string(reports.size() - passed) + " failed";
      s.line(summary);
      s.result() = {{"entries", rows}, {"passed", passed}, {"failed", reports.size() - passed}, {"summary", summary}};
      s.meta()["group"] = only ? json(*only) : json(nullptr);
      s.meta()["normaliser"] = nullptr;
      s.finish(start);
      return passed == reports.size() ? kOk : kInternal;
    }

    CrystGroup g = detail::resolve_source(source, &warnings);
    s.meta()["group"] = g.name();
    for (const auto& w : warnings) err << "warning: " << w << '\n';

    if (rinf->parsed()) {
      const RInfinityVerdict v = has_r_infinity(g, cap);
      using Kind = RInfinityVerdict::Kind;
      s.meta()["normaliser"] = v.normaliser_order ? json(*v.normaliser_order)
                               : v.kind == Kind::kUndecidedNoNormaliser ? json(nullptr)
                                                                        : json("infinite/over-cap");
      std::optional<IntMatrix> witness = v.witness;
      if (v.kind == Kind::kUndecidedInfinite && search_words > 0) witness = find_nonvanishing_D(g, search_words);
      if (v.kind == Kind::kHolds) {
        s.result() = {{"verdict", "holds"}, {"r_infinity", true}, {"witness", nullptr}};
        s.line("R-infinity: YES");
      } else if (witness) {
        s.result() = {{"verdict", "fails"}, {"r_infinity", false}, {"witness", to_string(*witness)}};
        s.line("R-infinity: NO, witness D = " + to_string(*witness));
      } else {
        const std::string why =
            v.kind == Kind::kUndecidedNoNormaliser ? "no normaliser generators supplied" : "normaliser infinite or over cap";
        s.result() = {{"verdict", "undecided"}, {"r_infinity", nullptr}, {"witness", nullptr}, {"reason", why}};
        s.line("R-infinity: UNDECIDED (" + why + ")");
        s.finish(start);
        return kUndecided;
      }
      s.finish(start);
      return kOk;
    }

    if (spec->parsed()) {
      if (!g.normaliser_generators()) {
        s.meta()["normaliser"] = nullptr;
        s.result() = {{"decided", false}, {"reason", "no normaliser generators supplied"}};
        s.line("spectrum: UNDECIDED (no normaliser generators supplied)");
        s.finish(start);
        return kUndecided;
      }
      ComputedSpectrum c;
      try {
        c = spectrum(g, cap);
      } catch (const CapExceededError&) {
        s.meta()["normaliser"] = "infinite/over-cap";
        s.result() = {{"decided", false}, {"reason", "normaliser infinite or over cap"}};
        s.line("spectrum: UNDECIDED (normaliser infinite or over cap)");
        s.finish(start);
        return kUndecided;
      }
      json values = json::array();
      for (const auto& v : c.finite_values) values.push_back(detail::integer_json(v));
      const std::string finite = SpectrumDescription::finite_set(c.finite_values).str();
      s.meta()["normaliser"] = c.normaliser_order;
      s.result() = {{"decided", true}, {"finite_part", values}, {"infinity", c.contains_infinity}, {"text", finite}};
      s.line("finite part: " + finite);
      s.line(std::string("infinity: ") + (c.contains_infinity ? "yes" : "no"));
      s.line("normaliser order: " + std::to_string(c.normaliser_order));
      s.finish(start);
      return kOk;
    }

    s.meta()["normaliser"] = detail::normaliser_meta(g, cap);

    if (reidnr->parsed()) {
      const AutomorphismSpec phi(g, detail::vector_arg(d_vector), detail::matrix_arg(d_matrix));
      const ReidCount r = reidemeister_number(phi);
      s.result() = {{"R", detail::count_json(r)}, {"D", to_string(phi.linear())}, {"d", detail::vector_str(phi.d())}};
      s.line("R = " + r.str());
      s.finish(start);
      return kOk;
    }

    if (find_d->parsed()) {
      const IntMatrix d_mat = detail::matrix_arg(d_matrix);
      const auto d = find_translation_part(g, d_mat);
      s.result() = {{"D", to_string(d_mat)}, {"d", d ? json(detail::vector_str(*d)) : json(nullptr)}};
      s.line(d ? "d = " + detail::vector_str(*d) : std::string("d: none (no automorphism has this linear part)"));
      s.finish(start);
      return kOk;
    }

    if (dbase->parsed()) {
      const auto base = delta_base(g);
      json list = json::array();
      s.line("delta-base: " + std::to_string(base.size()) + " translation(s)");
      for (const auto& v : base) {
        list.push_back(detail::vector_str(v));
        s.line("  " + detail::vector_str(v));
      }
      s.result() = {{"count", base.size()}, {"translations", list}};
      s.finish(start);
      return kOk;
    }
    return fail(kUsage, "no subcommand");
  } catch (const UsageError& e) {
    return fail(kUsage, e.what());
  } catch (const CapExceededError& e) {
    return fail(kUndecided, e.what());
  } catch (const Error& e) {
    return fail(kInvalidData, e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, std::string("internal error: ") + e.what());
  }
}

}  // namespace crysturn::cli
