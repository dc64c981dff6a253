#include <unistd.h>

#include <filesystem>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace crysturn;

namespace {

const char* kP3 = R"({
  "name": "p3",
  "dimension": 2,
  "labels": {"bbnwz": "2/4/1/1/1"},
  "generators": [{"translation": ["0", "0"], "matrix": [[0, -1], [1, -1]]}],
  "normalizer_generators": [[[1, -1], [1, 0]], [[0, 1], [1, 0]]]
})";

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / (stem + "-" + std::to_string(::getpid()) + ".json");
}

}  // namespace

TEST(LoadGroup, MinimalDocumentIsZ) {
  const CrystGroup g = load_group_text(R"({"dimension": 1, "generators": []})");
  EXPECT_EQ(g.dimension(), 1u);
  EXPECT_EQ(g.holonomy_order(), 1u);
  EXPECT_FALSE(g.normaliser_generators().has_value());
}

TEST(LoadGroup, PointReflection) {
  const CrystGroup g = load_group_text(
      R"({"dimension": 2, "generators": [{"translation": ["0", "0"], "matrix": [[-1, 0], [0, -1]]}]})");
  EXPECT_EQ(g.holonomy_order(), 2u);
}

TEST(LoadGroup, P3WithNormaliser) {
  const CrystGroup g = load_group_text(kP3);
  EXPECT_EQ(g.holonomy_order(), 3u);
  EXPECT_EQ(g.name(), "p3");
  EXPECT_EQ(g.labels().at("bbnwz"), "2/4/1/1/1");
  EXPECT_EQ(enumerate_normaliser(g)->size(), 12u);
}

TEST(LoadGroup, SchemaRejections) {
  const std::vector<std::string> bad{
      "not json",
      "[]",
      R"({"generators": []})",
      R"({"dimension": 0, "generators": []})",
      R"({"dimension": 1})",
      R"({"dimension": 1, "generators": [], "colour": "red"})",
      R"({"dimension": 1, "generators": [{"translation": [0.5], "matrix": [[-1]]}]})",
      R"({"dimension": 1, "generators": [{"translation": ["1/2"], "matrix": [[-1.0]]}]})",
      R"({"dimension": 1, "generators": [{"translation": ["0.5"], "matrix": [[-1]]}]})",
      R"({"dimension": 2, "generators": [{"translation": ["0"], "matrix": [[-1, 0], [0, -1]]}]})",
      R"({"dimension": 2, "generators": [{"translation": ["0", "0"], "matrix": [[-1, 0]]}]})",
      R"({"dimension": 1, "generators": [{"translation": ["0"], "matrix": [[-1]], "x": 1}]})",
      R"({"dimension": 1, "generators": [], "normalizer_generators": [[[1, 0]]]})",
      R"({"dimension": 1, "generators": [], "expected": {"spectrum": "{2}", "r_infinity": false, "extra": 1}})",
      R"({"dimension": 1, "generators": [], "expected": {"spectrum": "{2", "r_infinity": false}})",
      R"({"dimension": 1, "generators": [], "labels": {"bbnwz": 3}})",
  };
  for (const auto& text : bad) EXPECT_THROW(load_group_text(text), ParseError) << text;
}

TEST(LoadGroup, ValidationFailuresNameTheInvariant) {
  try {
    load_group_text(R"({"dimension": 1, "generators": [{"translation": ["1/4"], "matrix": [[-1]]},
                                                        {"translation": ["0"], "matrix": [[-1]]}]})");
    FAIL() << "expected InvalidGroupError";
  } catch (const InvalidGroupError& e) {
    EXPECT_NE(std::string(e.what()).find("cocycle"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_group_text(R"({"dimension": 2, "generators": [{"translation": ["0", "0"], "matrix": [[1, 1], [0, 1]]}]})"),
               InvalidGroupError);
}

TEST(LoadGroup, CanonicalisesAndWarns) {
  std::vector<std::string> warnings;
  const CrystGroup g = load_group_text(
      R"({"dimension": 3, "generators": [{"translation": ["1", "-1", "3/2"], "matrix": [[-1,0,0],[0,-1,0],[0,0,1]]}]})",
      &warnings);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_EQ(g.generators()[0].translation, (RatVector{0, 0, Rational(1, 2)}));

  warnings.clear();
  load_group_text(kP3, &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(SaveGroup, RoundTrips) {
  for (const char* name : {"2/1/1/1/1", "2/4/1/1/1", "3/2/1/2/1", "3/3/1/4/2", "pg"}) {
    const CrystGroup g = builtin_catalog().group(name);
    const auto path = temp_file("roundtrip");
    save_group(g, path.string());
    const CrystGroup h = load_group(path.string());
    std::filesystem::remove(path);
    EXPECT_EQ(h.f_ext(), g.f_ext()) << name;
    EXPECT_EQ(h.generators(), g.generators()) << name;
    EXPECT_EQ(h.normaliser_generators(), g.normaliser_generators()) << name;
    EXPECT_EQ(h.labels(), g.labels()) << name;
    EXPECT_EQ(h.name(), g.name()) << name;
  }
}

TEST(SaveGroup, DocumentRoundTripIsExact) {
  // A glide with a translation that is not a half.
  const CrystGroup g = build_group(3, {AffineMap{RatVector{0, 0, Rational(1, 3)}, IntMatrix{{0, -1, 0}, {1, -1, 0}, {0, 0, 1}}}});
  const std::string text = save_group_text(g);
  EXPECT_NE(text.find("\"1/3\""), std::string::npos);
  EXPECT_EQ(save_group_text(load_group_text(text)), text);
  EXPECT_EQ(nlohmann::json::parse(text), group_to_json(load_group_text(text)));
}

TEST(SaveGroup, ExpectedBlockSurvives) {
  const GroupFile& f = builtin_catalog().at("3/5/1/2/1");
  const std::string text = group_to_json(to_group(f), f.expected).dump();
  const GroupFile back = parse_group_file(text);
  ASSERT_TRUE(back.expected.has_value());
  EXPECT_EQ(back.expected->spectrum, f.expected->spectrum);
  EXPECT_EQ(back.expected->r_infinity, f.expected->r_infinity);
  EXPECT_EQ(back.expected->normaliser_order, f.expected->normaliser_order);
}

TEST(SaveGroup, UnwritablePathThrows) {
  EXPECT_THROW(save_group(torus_group(1), "/nonexistent-dir/x.json"), Error);
  EXPECT_THROW(load_group("/nonexistent-dir/x.json"), Error);
}

TEST(BuiltinCatalog, RequiredEntries) {
  const Catalog& cat = builtin_catalog();
  for (const char* name : {"1/1/1/1/1", "infinite-dihedral", "2/1/1/1/1", "2/1/2/1/1", "2/4/1/1/1", "3/1/1/1/1",
                           "3/1/2/1/1", "3/2/1/1/1", "3/2/1/1/2", "3/2/1/2/1", "3/3/1/1/1", "3/3/1/1/4", "3/3/1/3/1",
                           "3/3/1/4/1", "3/3/1/4/2", "3/5/1/1/1", "3/5/1/2/1", "4/3/1/1/1", "4/9/2/1/1"})
    EXPECT_TRUE(cat.contains(name)) << name;
  EXPECT_THROW(cat.at("no-such-group"), DomainError);
}

TEST(BuiltinCatalog, Examples) {
  const GroupFile& g = builtin_catalog().at("3/2/1/2/1");
  ASSERT_EQ(g.generators.size(), 1u);
  EXPECT_EQ(g.generators[0].linear, (IntMatrix{{1, -1, 0}, {0, -1, 0}, {0, 0, -1}}));
  EXPECT_EQ(builtin_catalog().at("2/4/1/1/1").expected->spectrum, "{4}");
  const GroupFile& h = builtin_catalog().at("3/5/1/2/1");
  EXPECT_EQ(h.expected->spectrum, "{8}");
  EXPECT_EQ(h.expected->normaliser_order, 24u);
  EXPECT_EQ(enumerate_normaliser(to_group(h))->size(), 24u);
}

TEST(BuiltinCatalog, EveryEntryValidatesAndChecks) {
  for (const auto& [name, file] : builtin_catalog().entries()) {
    EXPECT_EQ(name, file.name);
    EXPECT_NO_THROW(to_group(file)) << name;
    const CheckReport r = check_entry(file);
    std::string details;
    for (const auto& d : r.details) details += d + "; ";
    EXPECT_TRUE(r.passed) << name << ": " << details;
  }
}

TEST(BuiltinCatalog, CheckDetectsWrongExpectation) {
  GroupFile f = builtin_catalog().at("2/4/1/1/1");
  f.expected->spectrum = "{6}";
  EXPECT_FALSE(check_entry(f).passed);
  f = builtin_catalog().at("infinite-dihedral");
  f.expected->r_infinity = false;
  EXPECT_FALSE(check_entry(f).passed);
  f = builtin_catalog().at("3/2/1/2/1");
  f.expected->spectrum = "8N";
  EXPECT_FALSE(check_entry(f).passed);
}
