#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catrw/io.hpp"

namespace fixture {

/// Named schema "Petri": the category of elements of petri_base().
catrw::SchemaPtr petri_schema();

/// Every file of the JSON corpus (relative path, content). Files under
/// invalid/ parse but fail validation or reference resolution.
std::vector<std::pair<std::string, catrw::Json>> corpus();

}  // namespace fixture

namespace fixture {

/// Parse a corpus file into its library object and print it again. Schema
/// files with a name are registered in ws so later files can refer to them.
/// Match files are read against the rule and host named by convention
/// (figN_match*.json pairs with figN_rule*.json and the figure's host).
/// Throws whatever the parser throws.
std::string reprint(const std::string& relpath, const catrw::Json& j, catrw::Workspace& ws,
                    const std::filesystem::path& dir);

}  // namespace fixture
