#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "catrw/open_systems.hpp"
#include "catrw/rewrite.hpp"

namespace catrw {

using Json = nlohmann::ordered_json;

/// Named schemas available to files. Starts with the built-ins "Set",
/// "Graph", "Delta2" and "Delta2Free".
class Workspace {
 public:
  Workspace();

  /// Register a named schema. Re-registering an identical schema is a no-op;
  /// a different schema under a taken name throws ParseError.
  void add_schema(const SchemaPtr& s);
  SchemaPtr schema(const std::string& name) const;  // throws UnknownReference
  bool has_schema(const std::string& name) const { return schemas_.count(name) > 0; }

 private:
  std::map<std::string, SchemaPtr> schemas_;
};

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);       // throws ParseError
Json read_json_file(const std::filesystem::path& p);  // throws ParseError
void write_text_file(const std::filesystem::path& p, const std::string& text);

Json schema_to_json(const SchemaPresentation& s);
SchemaPresentation schema_presentation_from_json(const Json& j);
/// Throws InvalidSchema when the presentation is ill-formed.
SchemaPtr schema_from_json(const Json& j);

/// Named schemas are written by reference, anonymous ones inline. Part ids
/// are 1-based; undefined entries are written as 0.
Json instance_to_json(const CSet& x);
/// Throws InvalidInstance unless the data satisfies every instance invariant.
CSet instance_from_json(const Json& j, const Workspace& ws);
/// Shape-checked only, so that violations can be reported.
CSet instance_from_json_unchecked(const Json& j, const Workspace& ws);

Json transformation_to_json(const Transformation& t);
/// Components must have the right lengths and entries in range; naturality
/// is not checked here.
Transformation transformation_from_json(const Json& j, const CSetPtr& dom, const CSetPtr& cod);

Json rule_to_json(const Rule& r);
Rule rule_from_json(const Json& j, const Workspace& ws);

Json cospan_to_json(const StructuredCospan& c);
StructuredCospan cospan_from_json(const Json& j, const Workspace& ws);

Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j, const Workspace& ws);

}  // namespace catrw
