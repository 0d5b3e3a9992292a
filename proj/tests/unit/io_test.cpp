#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "catrw/io.hpp"
#include "catrw/mesh.hpp"
#include "support/fixture_files.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace catrw;

namespace {

const std::filesystem::path kFixtures = CATRW_FIXTURES;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Json, DumpIsIndentedWithTrailingNewline) {
  EXPECT_EQ(dump(Json{{"a", 1}}), "{\n  \"a\": 1\n}\n");
  EXPECT_THROW(parse_json("{\"a\": "), ParseError);
  EXPECT_THROW(read_json_file(kFixtures / "does_not_exist.json"), ParseError);
}

TEST(Workspace, BuiltinsAndConflicts) {
  Workspace ws;
  for (const char* n : {"Set", "Graph", "Delta2", "Delta2Free"}) EXPECT_TRUE(ws.has_schema(n));
  EXPECT_THROW(ws.schema("Petri"), UnknownReference);
  ws.add_schema(graph_schema());  // identical: fine
  SchemaPresentation other{"Graph", {"V"}, {}, {}};
  EXPECT_THROW(ws.add_schema(Schema::make(other)), ParseError);
  ws.add_schema(fixture::petri_schema());
  EXPECT_EQ(*ws.schema("Petri"), *fixture::petri_schema());
}

TEST(SchemaJson, RoundTrip) {
  const auto j = schema_to_json(delta2_schema()->presentation());
  EXPECT_EQ(j["name"], "Delta2");
  EXPECT_EQ(schema_presentation_from_json(j), delta2_schema()->presentation());
  EXPECT_EQ(*schema_from_json(j), *delta2_schema());
}

TEST(SchemaJson, Errors) {
  EXPECT_THROW(schema_from_json(parse_json(R"({"objects": ["V"], "generators": [{"name": "f", "dom": "V", "cod": "W"}]})")),
               InvalidSchema);
  EXPECT_THROW(schema_from_json(parse_json(R"({"objects": 3})")), ParseError);
  EXPECT_THROW(schema_from_json(parse_json(R"({"objects": ["V"], "generators": [["f", "V", "V"]]})")), ParseError);
  EXPECT_THROW(schema_from_json(parse_json("[]")), ParseError);
}

TEST(InstanceJson, OneBasedColumns) {
  const auto j = instance_to_json(*fixture::fig1_graph());
  EXPECT_EQ(j["schema"], "Graph");
  EXPECT_EQ(j["columns"]["src"], Json::array({1, 2, 2}));
  Workspace ws;
  EXPECT_EQ(instance_from_json(j, ws), *fixture::fig1_graph());
}

TEST(InstanceJson, RandomRoundTripOnInlineSchemas) {
  gen::Rng rng(5);
  Workspace ws;
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = gen::acyclic_schema(rng);
    const CSet x = gen::instance(rng, s);
    const auto j = instance_to_json(x);
    const CSet y = instance_from_json(j, ws);
    EXPECT_EQ(x, y);
    EXPECT_EQ(dump(instance_to_json(y)), dump(j));
  }
}

TEST(InstanceJson, ValidationErrors) {
  Workspace ws;
  const auto bad = read_json_file(kFixtures / "invalid/fig2_bad_equation.json");
  EXPECT_THROW(instance_from_json(bad, ws), InvalidInstance);
  const CSet x = instance_from_json_unchecked(bad, ws);
  ASSERT_EQ(validate_instance(x).size(), 1u);
  EXPECT_THROW(instance_from_json(read_json_file(kFixtures / "invalid/missing_schema.json"), ws), UnknownReference);
  EXPECT_THROW(instance_from_json(parse_json(R"({"schema": "Graph", "card": {"V": -1}})"), ws), ParseError);
  EXPECT_THROW(instance_from_json(parse_json(R"({"schema": "Graph", "card": {"V": 1.5}})"), ws), ParseError);
  EXPECT_THROW(instance_from_json(parse_json(R"({"schema": "Graph", "card": {"W": 1}})"), ws), UnknownReference);
}

TEST(TransformationJson, RoundTripAndShapeChecks) {
  const auto g = fixture::fig1_graph();
  const auto id = Transformation::identity(g);
  const auto j = transformation_to_json(id);
  EXPECT_EQ(transformation_from_json(j, g, g), id);
  auto short_comp = j;
  short_comp["comp"]["V"] = Json::array({1, 2});
  EXPECT_THROW(transformation_from_json(short_comp, g, g), ParseError);
  auto out_of_range = j;
  out_of_range["comp"]["E"] = Json::array({1, 2, 4});
  EXPECT_THROW(transformation_from_json(out_of_range, g, g), ParseError);
}

TEST(RuleJson, RoundTrip) {
  Workspace ws;
  for (const auto& r : {edge_flip_rule(), fixture::fig6(true).rule, fixture::fig6(false).rule}) {
    const auto j = rule_to_json(r);
    EXPECT_EQ(rule_from_json(j, ws), r);
    EXPECT_EQ(dump(rule_to_json(rule_from_json(j, ws))), dump(j));
  }
}

TEST(CospanAndDiagramJson, RoundTrip) {
  Workspace ws;
  const auto c = fixture::open_edge();
  EXPECT_EQ(cospan_from_json(cospan_to_json(c), ws), c);
  const auto d = fixture::cube_diagram();
  EXPECT_EQ(diagram_from_json(diagram_to_json(d), ws), d);
}

TEST(Corpus, FilesOnDiskMatchTheFixtures) {
  std::set<std::string> expected;
  for (const auto& [name, j] : fixture::corpus()) {
    expected.insert(name);
    EXPECT_EQ(slurp(kFixtures / name), dump(j)) << name << " is stale; rebuild with make_fixtures";
  }
  std::set<std::string> on_disk;
  for (const auto& e : std::filesystem::recursive_directory_iterator(kFixtures))
    if (e.is_regular_file()) on_disk.insert(std::filesystem::relative(e.path(), kFixtures).generic_string());
  EXPECT_EQ(on_disk, expected);
}

TEST(Corpus, EveryFileRoundTripsBitExactly) {
  Workspace ws;
  for (const auto& [name, unused] : fixture::corpus()) {
    const std::string text = slurp(kFixtures / name);
    const Json j = parse_json(text);
    EXPECT_EQ(dump(j), text) << name;
    if (name == "invalid/missing_schema.json") {
      EXPECT_THROW(fixture::reprint(name, j, ws, kFixtures), UnknownReference);
      continue;
    }
    EXPECT_EQ(fixture::reprint(name, j, ws, kFixtures), text) << name;
  }
}
