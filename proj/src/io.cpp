#include "catrw/io.hpp"

#include <fstream>
#include <sstream>

namespace catrw {

namespace {

// nlohmann reports type errors with its own exceptions; surface them all as
// ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

Json path_to_json(const PathSpec& p) { return Json{{"source", p.source}, {"components", p.components}}; }

PathSpec path_from_json(const Json& j) {
  return PathSpec{field(j, "source", "path").get<std::string>(),
                  field(j, "components", "path").get<std::vector<std::string>>()};
}

Json parts_to_json(std::span<const Part> v) {
  Json a = Json::array();
  for (Part p : v) a.push_back(p == kNoPart ? 0 : static_cast<std::uint64_t>(p) + 1);
  return a;
}

std::vector<Part> parts_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of part ids");
  std::vector<Part> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw ParseError(std::string(what) + ": part ids must be nonnegative integers");
    const auto n = v.get<std::uint64_t>();
    if (n > kNoPart) throw ParseError(std::string(what) + ": part id too large");
    out.push_back(n == 0 ? kNoPart : static_cast<Part>(n - 1));
  }
  return out;
}

SchemaPtr resolve_schema(const Json& j, const Workspace& ws) {
  if (j.is_string()) return ws.schema(j.get<std::string>());
  if (j.is_object()) return schema_from_json(j);
  throw ParseError("instance: 'schema' must be a name or an inline schema");
}

}  // namespace

// --------------------------------------------------------------------------

Workspace::Workspace() {
  for (const auto& s : {set_schema(), graph_schema(), delta2_schema(true), delta2_schema(false)}) add_schema(s);
}

void Workspace::add_schema(const SchemaPtr& s) {
  if (!s->name()) throw ParseError("only named schemas can be registered");
  auto [it, inserted] = schemas_.emplace(*s->name(), s);
  if (!inserted && !(*it->second == *s)) throw ParseError("schema name '" + *s->name() + "' is already taken");
}

SchemaPtr Workspace::schema(const std::string& name) const {
  auto it = schemas_.find(name);
  if (it == schemas_.end()) throw UnknownReference("schema '" + name + "'");
  return it->second;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(p.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  out << text;
}

// --------------------------------------------------------------------------
// schemas

Json schema_to_json(const SchemaPresentation& s) {
  Json j = Json::object();
  if (s.name) j["name"] = *s.name;
  j["objects"] = s.objects;
  j["generators"] = Json::array();
  for (const auto& g : s.generators) j["generators"].push_back(Json{{"name", g.name}, {"dom", g.dom}, {"cod", g.cod}});
  j["equations"] = Json::array();
  for (const auto& [lhs, rhs] : s.equations) j["equations"].push_back(Json::array({path_to_json(lhs), path_to_json(rhs)}));
  return j;
}

SchemaPresentation schema_presentation_from_json(const Json& j) {
  return guarded("schema", [&] {
    SchemaPresentation s;
    if (!j.is_object()) throw ParseError("schema: expected an object");
    if (j.contains("name")) s.name = j["name"].get<std::string>();
    s.objects = field(j, "objects", "schema").get<std::vector<std::string>>();
    for (const auto& g : field(j, "generators", "schema"))
      s.generators.push_back({field(g, "name", "generator").get<std::string>(),
                              field(g, "dom", "generator").get<std::string>(),
                              field(g, "cod", "generator").get<std::string>()});
    if (j.contains("equations"))
      for (const auto& e : j["equations"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("schema: an equation is a pair of paths");
        s.equations.emplace_back(path_from_json(e[0]), path_from_json(e[1]));
      }
    return s;
  });
}

SchemaPtr schema_from_json(const Json& j) { return Schema::make(schema_presentation_from_json(j)); }

// --------------------------------------------------------------------------
// instances

Json instance_to_json(const CSet& x) {
  const Schema& s = x.schema();
  Json j = Json::object();
  j["schema"] = s.name() ? Json(*s.name()) : schema_to_json(s.presentation());
  j["card"] = Json::object();
  for (ObId c = 0; c < s.num_objects(); ++c) j["card"][s.object_name(c)] = x.card(c);
  j["columns"] = Json::object();
  for (GenId f = 0; f < s.num_generators(); ++f) j["columns"][s.generator(f).name] = parts_to_json(x.column(f));
  return j;
}

CSet instance_from_json_unchecked(const Json& j, const Workspace& ws) {
  return guarded("instance", [&] {
    const SchemaPtr schema = resolve_schema(field(j, "schema", "instance"), ws);
    std::vector<std::size_t> card(schema->num_objects(), 0);
    if (j.contains("card"))
      for (const auto& [name, n] : j["card"].items()) {
        if (!n.is_number_unsigned() || n.get<std::uint64_t>() >= kNoPart)
          throw ParseError("instance: card of '" + name + "' must be a nonnegative integer");
        card[schema->object(name)] = n.get<std::size_t>();
      }
    std::vector<std::vector<Part>> cols(schema->num_generators());
    std::vector<bool> seen(schema->num_generators(), false);
    if (j.contains("columns"))
      for (const auto& [name, col] : j["columns"].items()) {
        const GenId f = schema->generator_id(name);
        cols[f] = parts_from_json(col, "instance column");
        seen[f] = true;
      }
    for (GenId f = 0; f < schema->num_generators(); ++f)
      if (!seen[f]) cols[f].assign(card[schema->generator(f).dom], kNoPart);
    return make_instance_unchecked(schema, std::move(card), std::move(cols));
  });
}

CSet instance_from_json(const Json& j, const Workspace& ws) {
  CSet x = instance_from_json_unchecked(j, ws);
  if (auto v = validate_instance(x); !v.empty()) throw InvalidInstance(std::move(v));
  return x;
}

// --------------------------------------------------------------------------
// transformations

Json transformation_to_json(const Transformation& t) {
  const Schema& s = t.schema();
  Json comp = Json::object();
  for (ObId c = 0; c < s.num_objects(); ++c) comp[s.object_name(c)] = parts_to_json(t.component(c));
  return Json{{"comp", comp}};
}

Transformation transformation_from_json(const Json& j, const CSetPtr& dom, const CSetPtr& cod) {
  return guarded("transformation", [&] {
    const Schema& s = dom->schema();
    std::vector<std::vector<Part>> comp(s.num_objects());
    std::vector<bool> seen(s.num_objects(), false);
    for (const auto& [name, v] : field(j, "comp", "transformation").items()) {
      const ObId c = s.object(name);
      comp[c] = parts_from_json(v, "transformation component");
      seen[c] = true;
    }
    for (ObId c = 0; c < s.num_objects(); ++c) {
      if (!seen[c] && dom->card(c) > 0)
        throw ParseError("transformation: missing component for '" + s.object_name(c) + "'");
      if (comp[c].size() != dom->card(c))
        throw ParseError("transformation: component '" + s.object_name(c) + "' has the wrong length");
      for (Part p : comp[c])
        if (p == kNoPart || p >= cod->card(c))
          throw ParseError("transformation: component '" + s.object_name(c) + "' has an entry out of range");
    }
    return Transformation(dom, cod, std::move(comp));
  });
}

// --------------------------------------------------------------------------
// rules, cospans, diagrams

Json rule_to_json(const Rule& r) {
  return Json{{"kind", to_string(r.kind)},
              {"L", instance_to_json(*r.L())},
              {"I", instance_to_json(*r.I())},
              {"R", instance_to_json(*r.R())},
              {"l", transformation_to_json(r.l)},
              {"r", transformation_to_json(r.r)}};
}

Rule rule_from_json(const Json& j, const Workspace& ws) {
  return guarded("rule", [&] {
    const auto kind = parse_rewrite_kind(field(j, "kind", "rule").get<std::string>());
    auto L = share(instance_from_json(field(j, "L", "rule"), ws));
    auto I = share(instance_from_json(field(j, "I", "rule"), ws));
    auto R = share(instance_from_json(field(j, "R", "rule"), ws));
    return Rule(transformation_from_json(field(j, "l", "rule"), I, L),
                transformation_from_json(field(j, "r", "rule"), I, R), kind);
  });
}

Json cospan_to_json(const StructuredCospan& c) {
  Json feet = Json::array(), legs = Json::array();
  for (std::size_t i = 0; i < c.legs.size(); ++i) {
    feet.push_back(instance_to_json(*c.foot(i)));
    legs.push_back(transformation_to_json(c.legs[i]));
  }
  return Json{{"apex", instance_to_json(*c.apex)}, {"feet", feet}, {"legs", legs}};
}

StructuredCospan cospan_from_json(const Json& j, const Workspace& ws) {
  return guarded("cospan", [&] {
    StructuredCospan c;
    c.apex = share(instance_from_json(field(j, "apex", "cospan"), ws));
    const Json& feet = field(j, "feet", "cospan");
    const Json& legs = field(j, "legs", "cospan");
    if (!feet.is_array() || !legs.is_array() || feet.size() != legs.size())
      throw ParseError("cospan: 'feet' and 'legs' must be arrays of equal length");
    for (std::size_t i = 0; i < feet.size(); ++i) {
      auto foot = share(instance_from_json(feet[i], ws));
      if (!same_schema(foot->schema_ptr(), c.apex->schema_ptr()))
        throw SchemaMismatch("cospan: foot " + std::to_string(i + 1) + " is on a different schema");
      c.legs.push_back(transformation_from_json(legs[i], foot, c.apex));
    }
    return c;
  });
}

Json diagram_to_json(const Diagram& d) {
  Json nodes = Json::array(), arrows = Json::array();
  for (const auto& n : d.nodes) nodes.push_back(Json{{"id", n.id}, {"instance", instance_to_json(*n.instance)}});
  for (const auto& a : d.arrows)
    arrows.push_back(Json{{"src", a.src}, {"tgt", a.tgt}, {"map", transformation_to_json(a.map)}});
  return Json{{"nodes", nodes}, {"arrows", arrows}};
}

Diagram diagram_from_json(const Json& j, const Workspace& ws) {
  return guarded("diagram", [&] {
    Diagram d;
    for (const auto& n : field(j, "nodes", "diagram"))
      d.nodes.push_back({field(n, "id", "diagram node").get<std::string>(),
                         share(instance_from_json(field(n, "instance", "diagram node"), ws))});
    if (j.contains("arrows"))
      for (const auto& a : j["arrows"]) {
        const auto src = field(a, "src", "diagram arrow").get<std::string>();
        const auto tgt = field(a, "tgt", "diagram arrow").get<std::string>();
        const auto& s = d.nodes[d.node_index(src)].instance;
        const auto& t = d.nodes[d.node_index(tgt)].instance;
        if (!same_schema(s->schema_ptr(), t->schema_ptr()))
          throw SchemaMismatch("diagram arrow " + src + " -> " + tgt + " joins different schemas");
        d.arrows.push_back({src, tgt, transformation_from_json(field(a, "map", "diagram arrow"), s, t)});
      }
    return d;
  });
}

}  // namespace catrw
