#pragma once

#include <optional>
#include <vector>

#include "catrw/transformation.hpp"

namespace catrw {

enum class VariableOrder {
  /// Objects in declaration order, parts ascending. Results come out in
  /// lexicographic order of their components. Only a search with a limit
  /// actually runs in this order; otherwise the faster order is used and the
  /// results are sorted, which gives the same list.
  Declaration,
  /// Most constrained variable first (fewest candidate values); results are
  /// sorted afterwards.
  MostConstrained,
};

struct SearchOptions {
  bool monic = false;
  /// Per-object partial assignment; kNoPart marks an unassigned part. Empty
  /// means no initial assignment.
  std::vector<std::vector<Part>> initial;
  std::optional<std::size_t> limit;
  VariableOrder order = VariableOrder::Declaration;
};

/// Every natural transformation X -> Y extending opts.initial (monic ones
/// only when requested), found by backtracking with forward propagation
/// along columns and candidate values drawn from the preimage indices.
std::vector<Transformation> homomorphisms(const CSetPtr& X, const CSetPtr& Y, const SearchOptions& opts = {});

std::optional<Transformation> find_homomorphism(const CSetPtr& X, const CSetPtr& Y, SearchOptions opts = {});

std::size_t count_homomorphisms(const CSetPtr& X, const CSetPtr& Y, const SearchOptions& opts = {});

/// A monic map between instances of equal cardinality is an isomorphism, so
/// this is a cardinality check followed by a single monic search.
std::optional<Transformation> is_isomorphic(const CSetPtr& X, const CSetPtr& Y);

}  // namespace catrw
