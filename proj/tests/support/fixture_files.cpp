#include "support/fixture_files.hpp"

#include "catrw/mesh.hpp"
#include "support/fixtures.hpp"

namespace fixture {

using namespace catrw;

SchemaPtr petri_schema() {
  SchemaPresentation p = slice_schema(*petri_base())->presentation();
  p.name = "Petri";
  return Schema::make(std::move(p));
}

namespace {

Rule vertex_delete_rule(RewriteKind kind) {
  auto L = share(make_instance(graph_schema(), {{"V", 1}}, {}));
  auto I = share(make_instance(graph_schema(), std::vector<std::size_t>{0, 0}, {{}, {}}));
  return Rule(Transformation::from_empty(I, L), Transformation::identity(I), kind);
}

}  // namespace

std::vector<std::pair<std::string, Json>> corpus() {
  std::vector<std::pair<std::string, Json>> out;
  auto add = [&](std::string name, Json j) { out.emplace_back(std::move(name), std::move(j)); };

  add("delta2_schema.json", schema_to_json(delta2_schema()->presentation()));
  add("petri_schema.json", schema_to_json(petri_schema()->presentation()));
  add("fig1_graph.json", instance_to_json(*fig1_graph()));
  add("fig2_delta2.json", instance_to_json(*fig2_delta2()));

  const Rule flip = edge_flip_rule();
  add("fig4_rule.json", rule_to_json(flip));
  add("fig4_mesh.json", instance_to_json(*fig4_mesh()));
  add("fig4_match.json", transformation_to_json(fig4_match(flip)));
  add("fig4_flipped.json", instance_to_json(*fig4_flipped()));

  const Rule del = vertex_delete_rule(RewriteKind::SPO);
  add("fig5_rule.json", rule_to_json(del));
  add("fig5_match.json", transformation_to_json(Transformation(del.L(), fig1_graph(), {{1}, {}})));

  for (bool eq : {true, false}) {
    const auto f = fig6(eq);
    const std::string tag = eq ? "" : "_free";
    add("fig6_rule" + tag + ".json", rule_to_json(f.rule));
    add("fig6_G" + tag + ".json", instance_to_json(*f.G));
    add("fig6_match" + tag + ".json", transformation_to_json(f.match));
  }

  add("cube_diagram.json", diagram_to_json(cube_diagram()));
  add("open_edge.json", cospan_to_json(open_edge()));
  add("mesh_2x2.json", instance_to_json(gen_mesh(2, 2)));

  // A small Petri net typed over petri_base: two states, one transition.
  const auto ps = petri_schema();
  add("petri_net.json", instance_to_json(make_instance(ps, {{"V#1", 2}, {"V#2", 1}, {"E#1", 2}, {"E#2", 1}},
                                                       {{"src#1", {1, 2}},
                                                        {"tgt#1", {1, 1}},
                                                        {"src#2", {1}},
                                                        {"tgt#2", {1}}})));
  // Inline anonymous schema.
  SchemaPresentation arrow{std::nullopt, {"X", "Y"}, {{"f", "X", "Y"}}, {}};
  add("inline_schema_instance.json",
      instance_to_json(make_instance(Schema::make(arrow), {{"X", 2}, {"Y", 1}}, {{"f", {1, 1}}})));

  // Broken inputs.
  auto bad = make_instance_unchecked(delta2_schema(), {4, 5, 2},
                                     {{0, 1, 0, 0, 2}, {1, 3, 3, 2, 1}, {2, 2}, {0, 3}, {1, 4}});
  add("invalid/fig2_bad_equation.json", instance_to_json(bad));
  auto range = make_instance_unchecked(graph_schema(), {4, 1}, {{0}, {6}});
  add("invalid/out_of_range.json", instance_to_json(range));
  Json missing = instance_to_json(*fig1_graph());
  missing["schema"] = "Nope";
  add("invalid/missing_schema.json", missing);
  add("invalid/bad_schema.json",
      schema_to_json(SchemaPresentation{"Broken", {"V"}, {{"src", "W", "V"}}, {}}));
  return out;
}

}  // namespace fixture

namespace fixture {

namespace {

std::string match_host(const std::string& name) {
  if (name.rfind("fig4_", 0) == 0) return "fig4_mesh.json";
  if (name.rfind("fig5_", 0) == 0) return "fig1_graph.json";
  if (name == "fig6_match.json") return "fig6_G.json";
  if (name == "fig6_match_free.json") return "fig6_G_free.json";
  throw std::invalid_argument("no host known for " + name);
}

std::string match_rule(const std::string& name) {
  std::string r = name;
  r.replace(r.find("_match"), 6, "_rule");
  return r;
}

}  // namespace

std::string reprint(const std::string& relpath, const Json& j, Workspace& ws, const std::filesystem::path& dir) {
  const std::string name = std::filesystem::path(relpath).filename().string();
  if (j.contains("objects")) {
    const auto p = schema_presentation_from_json(j);
    if (p.name && validate_schema(p).empty()) ws.add_schema(Schema::make(p));
    return dump(schema_to_json(p));
  }
  if (j.contains("kind")) return dump(rule_to_json(rule_from_json(j, ws)));
  if (j.contains("apex")) return dump(cospan_to_json(cospan_from_json(j, ws)));
  if (j.contains("nodes")) return dump(diagram_to_json(diagram_from_json(j, ws)));
  if (j.contains("comp")) {
    const Rule rule = rule_from_json(read_json_file(dir / match_rule(name)), ws);
    const auto host = share(instance_from_json(read_json_file(dir / match_host(name)), ws));
    return dump(transformation_to_json(transformation_from_json(j, rule.L(), host)));
  }
  if (j.contains("schema")) return dump(instance_to_json(instance_from_json_unchecked(j, ws)));
  throw ParseError(relpath + ": unrecognized file");
}

}  // namespace fixture
