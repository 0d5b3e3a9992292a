#pragma once

#include <span>
#include <string>
#include <vector>

#include "catrw/cset.hpp"

namespace catrw {

/// Componentwise map between two instances on the same schema. Naturality is
/// not enforced on construction; see is_natural.
class Transformation {
 public:
  Transformation() = default;
  Transformation(CSetPtr dom, CSetPtr cod, std::vector<std::vector<Part>> components);

  static Transformation identity(const CSetPtr& x);
  /// Unique map out of an instance with no parts.
  static Transformation from_empty(const CSetPtr& empty, const CSetPtr& cod);

  const CSet& dom() const { return *dom_; }
  const CSet& cod() const { return *cod_; }
  const CSetPtr& dom_ptr() const { return dom_; }
  const CSetPtr& cod_ptr() const { return cod_; }
  const Schema& schema() const { return dom_->schema(); }

  Part operator()(ObId c, Part x) const { return comp_[c][x]; }
  std::span<const Part> component(ObId c) const { return comp_[c]; }
  const std::vector<std::vector<Part>>& components() const { return comp_; }

  bool is_monic() const;
  bool is_epic() const;
  bool is_iso() const { return is_monic() && is_epic(); }

  /// Same components; dom/cod compared structurally.
  bool operator==(const Transformation& o) const;

 private:
  CSetPtr dom_, cod_;
  std::vector<std::vector<Part>> comp_;
};

/// Diagrammatic order: first f, then g.
Transformation compose(const Transformation& f, const Transformation& g);

struct NaturalityViolation {
  GenId generator;
  Part part;
};

/// Empty iff every naturality square commutes and every entry is in range.
std::vector<NaturalityViolation> is_natural(const Transformation& t);

/// Instances are interchangeable when they are the same object or equal by
/// value.
bool same_instance(const CSetPtr& a, const CSetPtr& b);

/// Inclusion of the subobject spanned by the kept parts, renumbered with
/// swap-compaction. Kept sets must be closed under every generator.
Transformation subobject(const CSetPtr& x, const std::vector<std::vector<bool>>& keep);

/// Smallest subobject containing the seed parts (closure under generators).
std::vector<std::vector<bool>> generated_subobject(const CSet& x, const std::vector<std::vector<bool>>& seed);
/// Largest subobject avoiding the doomed parts (anything that reaches a
/// doomed part through a generator is doomed too).
std::vector<std::vector<bool>> avoiding_subobject(const CSet& x, const std::vector<std::vector<bool>>& doomed);

}  // namespace catrw
