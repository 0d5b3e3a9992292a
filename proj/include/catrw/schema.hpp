#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace catrw {

using ObId = std::uint32_t;
using GenId = std::uint32_t;

// ---------------------------------------------------------------------------
// Name-level presentation. This is what files contain and what validation
// inspects; it may be ill-formed.
// ---------------------------------------------------------------------------

struct GeneratorSpec {
  std::string name;
  std::string dom;
  std::string cod;
  bool operator==(const GeneratorSpec&) const = default;
};

struct PathSpec {
  std::string source;
  std::vector<std::string> components;
  bool operator==(const PathSpec&) const = default;
};

struct SchemaPresentation {
  std::optional<std::string> name;
  std::vector<std::string> objects;
  std::vector<GeneratorSpec> generators;
  std::vector<std::pair<PathSpec, PathSpec>> equations;
  bool operator==(const SchemaPresentation&) const = default;
};

/// Every way the presentation fails to describe a finitely presented
/// category. Empty means well-formed.
std::vector<std::string> validate_schema(const SchemaPresentation& s);

// ---------------------------------------------------------------------------
// Compiled schema: dense indices, adjacency and (for acyclic schemas) the
// congruence classes of paths.
// ---------------------------------------------------------------------------

struct Generator {
  std::string name;
  ObId dom;
  ObId cod;
};

/// A composable sequence of generators. Empty components = identity at source.
struct Path {
  ObId source = 0;
  std::vector<GenId> components;
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct Equation {
  Path lhs;
  Path rhs;
};

class Schema;
using SchemaPtr = std::shared_ptr<const Schema>;

class Schema {
 public:
  /// Throws InvalidSchema if validate_schema(p) is nonempty.
  explicit Schema(SchemaPresentation p);

  static SchemaPtr make(SchemaPresentation p) { return std::make_shared<const Schema>(std::move(p)); }

  const SchemaPresentation& presentation() const { return pres_; }
  const std::optional<std::string>& name() const { return pres_.name; }

  std::size_t num_objects() const { return pres_.objects.size(); }
  std::size_t num_generators() const { return gens_.size(); }
  const std::string& object_name(ObId c) const { return pres_.objects[c]; }
  const Generator& generator(GenId f) const { return gens_[f]; }
  const std::vector<Equation>& equations() const { return eqs_; }
  /// Human-readable form such as "d1;tgt = d2;src".
  std::string equation_string(std::size_t i) const;
  std::string path_string(const Path& p) const;

  std::optional<ObId> find_object(const std::string& name) const;
  std::optional<GenId> find_generator(const std::string& name) const;
  ObId object(const std::string& name) const;    // throws UnknownReference
  GenId generator_id(const std::string& name) const;  // throws UnknownReference

  const std::vector<GenId>& outgoing(ObId c) const { return out_[c]; }
  const std::vector<GenId>& incoming(ObId c) const { return in_[c]; }

  ObId target(const Path& p) const;
  /// True iff consecutive components compose and all ids are in range.
  bool composable(const Path& p) const;

  bool is_acyclic() const { return acyclic_; }
  /// Objects ordered so every generator goes from an earlier to a later
  /// object. Only meaningful for acyclic schemas.
  const std::vector<ObId>& topological_order() const { return topo_; }
  std::size_t topological_rank(ObId c) const { return topo_rank_[c]; }

  // --- path congruence (acyclic schemas only; CyclicSchema otherwise) ---

  /// Equivalence classes of paths a -> b, each listed with its canonical
  /// representative first (shortest, then lexicographic by generator id).
  /// Classes are sorted by their representatives.
  std::vector<std::vector<Path>> hom_paths(ObId a, ObId b) const;
  bool paths_equal(const Path& p, const Path& q) const;

  /// Dense id of the congruence class of p (unique across the whole schema).
  std::size_t path_class(const Path& p) const;
  const Path& class_representative(std::size_t cls) const;
  std::size_t num_path_classes() const { return class_rep_.size(); }
  /// Classes of paths starting at c, sorted by representative.
  const std::vector<std::size_t>& classes_from(ObId c) const;
  /// Class of (rep(cls) ; f), or of (f ; rep(cls)) for prepend.
  std::size_t class_append(std::size_t cls, GenId f) const;
  std::size_t class_prepend(GenId f, std::size_t cls) const;

  /// Same objects and generators, no equations.
  SchemaPtr without_equations() const;

  bool operator==(const Schema& o) const { return pres_ == o.pres_; }

 private:
  void build_congruence();
  void require_acyclic() const;

  SchemaPresentation pres_;
  std::vector<Generator> gens_;
  std::vector<Equation> eqs_;
  std::vector<std::vector<GenId>> out_, in_;
  bool acyclic_ = false;
  std::vector<ObId> topo_;
  std::vector<std::size_t> topo_rank_;

  // congruence data (acyclic only)
  std::vector<Path> all_paths_;                 // every path, sorted
  std::vector<std::size_t> path_to_class_;      // parallel to all_paths_
  std::vector<Path> class_rep_;
  std::vector<std::vector<std::size_t>> class_members_;  // indices into all_paths_
  std::vector<std::vector<std::size_t>> classes_from_;
  std::vector<std::vector<std::size_t>> append_;   // [class][gen] or npos
  std::vector<std::vector<std::size_t>> prepend_;  // [class][gen] or npos
};

/// Compare two schemas structurally (pointer equality short-circuits).
bool same_schema(const SchemaPtr& a, const SchemaPtr& b);

// Schemas used throughout the library and its tests.
SchemaPtr set_schema();                       // one object "X"
SchemaPtr graph_schema();                     // V, E; src, tgt: E -> V
SchemaPtr delta2_schema(bool equations = true);  // V, E, T; src, tgt; d0, d1, d2: T -> E

}  // namespace catrw
