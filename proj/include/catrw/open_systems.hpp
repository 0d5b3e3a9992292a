#pragma once

#include <string>
#include <vector>

#include "catrw/colimits.hpp"
#include "catrw/rewrite.hpp"

namespace catrw {

// ---------------------------------------------------------------------------
// Slice categories C-Set/X
// ---------------------------------------------------------------------------

/// An instance together with a typing map into a fixed base instance.
struct SliceInstance {
  Transformation typing;  // total -> base
  const CSetPtr& total() const { return typing.dom_ptr(); }
  const CSetPtr& base() const { return typing.cod_ptr(); }
};

/// A morphism of slices over the same base must commute with the typings.
bool commutes_over_base(const Transformation& f, const SliceInstance& from, const SliceInstance& to);

/// Category of elements of X presented as a schema: one object per part of
/// X (named "<object>#<1-based part>"), one generator per generator and
/// part ("<generator>#<part>"), and the base equations instantiated at every
/// part.
SchemaPtr slice_schema(const CSet& X);

/// Split total by typing fibres into an instance on slice_schema(base).
CSet slice_to_cset(const SliceInstance& s, const SchemaPtr& elements_schema);
/// Inverse direction: reassemble the total instance and its typing.
SliceInstance cset_to_slice(const CSet& x, const CSetPtr& base);
/// Restrict a slice morphism to fibres.
Transformation migrate_morphism(const Transformation& f, const SliceInstance& from, const SliceInstance& to,
                                const CSetPtr& from_migrated, const CSetPtr& to_migrated);

struct SliceRule {
  SliceInstance L, I, R;
  Transformation l, r;  // on totals
};

struct SliceOutcome {
  SliceInstance result;
  RewriteOutcome total;  // the underlying rewrite of total instances
};

/// DPO on the total instances; the result's typing comes from the pushout's
/// universal property. Throws TypingMismatch if rule or match do not commute
/// with the typings.
SliceOutcome slice_rewrite(const SliceRule& rule, const SliceInstance& G, const Transformation& match);

/// Same rewrite through the equivalent schema: migrate everything to the
/// category of elements, rewrite there, migrate back.
SliceOutcome slice_rewrite_migrating(const SliceRule& rule, const SliceInstance& G, const Transformation& match);

// ---------------------------------------------------------------------------
// Structured cospans with discrete feet
// ---------------------------------------------------------------------------

/// Objects with no outgoing generators: the default interface objects.
std::vector<ObId> default_interface(const Schema& s);

/// A foot is discrete when only interface objects are populated and none of
/// them has outgoing generators.
bool is_discrete(const CSet& foot, const std::vector<ObId>& interface);

/// Open system x with legs from its feet; conventionally legs[0] is the input
/// and legs.back() the output.
struct StructuredCospan {
  CSetPtr apex;
  std::vector<Transformation> legs;

  const CSetPtr& foot(std::size_t i) const { return legs[i].dom_ptr(); }
  bool operator==(const StructuredCospan&) const;
};

/// Empty iff legs end at the apex, feet are discrete and legs are natural.
std::vector<std::string> validate_cospan(const StructuredCospan& c, const std::vector<ObId>& interface);

/// The identity cospan foot -> foot <- foot.
StructuredCospan identity_cospan(const CSetPtr& foot);

/// (La -> x <- Lb) ; (Lb -> y <- Lc) = (La -> x +_Lb y <- Lc). Throws
/// FootMismatch unless a's last foot equals b's first foot.
StructuredCospan compose_cospans(const StructuredCospan& a, const StructuredCospan& b);

/// Map of cospans: one map between apexes and one per foot.
struct CospanMorphism {
  Transformation apex;
  std::vector<Transformation> feet;
};

struct OpenRule {
  StructuredCospan L, I, R;
  CospanMorphism l, r;  // I -> L, I -> R
};

struct OpenOutcome {
  StructuredCospan k;
  StructuredCospan h;
  CospanMorphism k_to_g;
  CospanMorphism k_to_h;
};

/// DPO of structured cospans: pushout complements apex- and foot-wise, the
/// legs of K induced through the complements, pushouts for H, and the legs of
/// H by the universal property of the foot pushouts.
OpenOutcome open_rewrite(const OpenRule& rule, const StructuredCospan& G, const CospanMorphism& match);

// ---------------------------------------------------------------------------
// Diagrams of C-sets
// ---------------------------------------------------------------------------

struct Diagram {
  struct Node {
    std::string id;
    CSetPtr instance;
  };
  struct Arrow {
    std::string src;
    std::string tgt;
    Transformation map;
  };
  std::vector<Node> nodes;
  std::vector<Arrow> arrows;

  std::size_t node_index(const std::string& id) const;  // throws UnknownReference
  std::vector<std::string> validate() const;
  bool operator==(const Diagram&) const;
};

/// Coproduct of the node instances quotiented by every arrow.
ColimitResult diagram_colimit(const Diagram& d);

}  // namespace catrw
