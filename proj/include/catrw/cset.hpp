#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catrw/errors.hpp"
#include "catrw/schema.hpp"

namespace catrw {

/// Parts are 0-based internally; every external format shifts to 1-based.
using Part = std::uint32_t;
inline constexpr Part kNoPart = std::numeric_limits<Part>::max();

struct InstanceViolation {
  enum class Kind { ColumnLength, Undefined, OutOfRange, Equation };
  Kind kind;
  std::size_t which;  // generator id, or equation index for Kind::Equation
  Part part;          // offending part of the domain object
  std::string message;
};

class InvalidInstance : public Error {
 public:
  explicit InvalidInstance(std::vector<InstanceViolation> v);
  const std::vector<InstanceViolation>& violations() const { return violations_; }

 private:
  std::vector<InstanceViolation> violations_;
};

/// Finite C-set stored column-wise: a cardinality per object and one total
/// column per generator, with a preimage index per generator kept in sync by
/// every mutator.
class CSet {
 public:
  CSet() = default;
  explicit CSet(SchemaPtr schema);

  const Schema& schema() const { return *schema_; }
  const SchemaPtr& schema_ptr() const { return schema_; }

  std::size_t card(ObId c) const { return card_[c]; }
  std::size_t card(const std::string& ob) const { return card_[schema_->object(ob)]; }
  std::size_t total_parts() const;

  Part subpart(GenId f, Part x) const { return column_[f][x]; }
  std::span<const Part> column(GenId f) const { return column_[f]; }
  /// Sorted preimage of y under f. Throws PartOutOfRange.
  std::span<const Part> incident(GenId f, Part y) const;

  Part add_part(ObId c);
  Part add_parts(ObId c, std::size_t n);
  /// Columns of new parts start undefined (kNoPart) until set.
  void set_subpart(GenId f, Part x, Part y);

  /// Evaluate a path at a part by following columns.
  Part evaluate(const Path& p, Part x) const;

  /// Remove the listed parts of each object, filling holes by moving the last
  /// part into the vacated slot. Surviving parts must not refer to removed
  /// ones. Returns, per object, old id -> new id (kNoPart if removed).
  std::vector<std::vector<Part>> remove_parts(const std::vector<std::vector<Part>>& doomed);

  /// Reinterpret on a schema with the same objects and generators.
  CSet with_schema(SchemaPtr s) const;

  bool operator==(const CSet& o) const;

 private:
  friend CSet make_instance_unchecked(SchemaPtr, std::vector<std::size_t>, std::vector<std::vector<Part>>);
  void rebuild_index(GenId f);

  SchemaPtr schema_;
  std::vector<std::size_t> card_;
  std::vector<std::vector<Part>> column_;
  std::vector<std::vector<std::vector<Part>>> index_;
};

using CSetPtr = std::shared_ptr<const CSet>;

inline CSetPtr share(CSet x) { return std::make_shared<const CSet>(std::move(x)); }

/// Totality, codomain bounds and path equations. Empty means valid.
std::vector<InstanceViolation> validate_instance(const CSet& x);

/// Build an instance and its indices from raw columns (0-based ids).
/// Throws InvalidInstance on any violation.
CSet make_instance(SchemaPtr schema, std::vector<std::size_t> card, std::vector<std::vector<Part>> columns);
/// Same, but by name and with 1-based ids as they appear in files.
CSet make_instance(SchemaPtr schema, const std::vector<std::pair<std::string, std::size_t>>& card,
                   const std::vector<std::pair<std::string, std::vector<Part>>>& columns_1based);
/// No validation beyond array shapes; used when reading possibly broken data.
CSet make_instance_unchecked(SchemaPtr schema, std::vector<std::size_t> card,
                             std::vector<std::vector<Part>> columns);

// ---------------------------------------------------------------------------
// Typed graphs and the category of elements.
// ---------------------------------------------------------------------------

/// The underlying graph of a schema: one vertex per object, one edge per
/// generator.
CSet schema_graph(const Schema& s);

/// A graph together with a homomorphism into the underlying graph of a
/// schema, stored as per-vertex and per-edge type labels.
struct TypedGraph {
  SchemaPtr schema;
  CSet graph;                       // on graph_schema()
  std::vector<ObId> vertex_type;    // indexed by graph vertex
  std::vector<GenId> edge_type;     // indexed by graph edge

  /// Naturality of the typing against the schema graph.
  bool well_typed() const;
  /// Graph subtraction: drop the listed vertices and every incident edge.
  TypedGraph without_vertices(const std::vector<Part>& vertices) const;
};

/// Category of elements. Vertices are listed object by object in part
/// order, edges generator by generator in part order.
TypedGraph elements(const CSet& x);
/// Vertex id in elements(x) of part p of object c.
Part element_vertex(const CSet& x, ObId c, Part p);

struct OpfibrationViolation {
  enum class Kind { MissingEdge, MultipleEdges, EquationFailure };
  Kind kind;
  std::size_t which;  // generator id, or equation index
  Part vertex;        // typed-graph vertex
};

struct OpfibrationCheck {
  std::optional<CSet> instance;
  std::vector<OpfibrationViolation> violations;
};

/// Existence and uniqueness of lifts for every generator, then the path
/// equations wherever both sides are defined. On success the instance is
/// rebuilt with parts numbered in vertex order within each type.
OpfibrationCheck check_discrete_opfibration(const TypedGraph& t);

std::string to_string(const InstanceViolation& v, const Schema& s);
std::string to_string(const OpfibrationViolation& v, const Schema& s);

}  // namespace catrw
