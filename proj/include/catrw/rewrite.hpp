#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catrw/colimits.hpp"
#include "catrw/hom_search.hpp"

namespace catrw {

enum class RewriteKind { DPO, SPO, SqPO };

std::string to_string(RewriteKind k);
RewriteKind parse_rewrite_kind(const std::string& s);  // "dpo" | "spo" | "sqpo"

/// Span L <-l- I -r-> R.
struct Rule {
  Transformation l;
  Transformation r;
  RewriteKind kind = RewriteKind::DPO;

  Rule() = default;
  /// Checks the shared interface, naturality of both legs and, for DPO and
  /// SPO, monicity of l.
  Rule(Transformation l, Transformation r, RewriteKind kind);

  const CSetPtr& L() const { return l.cod_ptr(); }
  const CSetPtr& I() const { return l.dom_ptr(); }
  const CSetPtr& R() const { return r.cod_ptr(); }

  /// The same span read right to left.
  Rule reversed() const { return Rule(r, l, kind); }
  bool operator==(const Rule&) const = default;
};

struct RewriteOutcome {
  CSetPtr result;
  CSetPtr k;
  Transformation match;   // L -> G
  Transformation i_to_k;  // I -> K (SPO: defined on the subobject i_domain)
  Transformation k_to_g;  // K -> G
  Transformation k_to_h;  // K -> result
  Transformation r_to_h;  // R -> result (SPO: defined on the subobject r_domain)
  /// SPO only: inclusions of the parts of I and R that survive.
  std::optional<Transformation> i_domain;
  std::optional<Transformation> r_domain;
};

RewriteOutcome rewrite_dpo(const Rule& rule, const Transformation& match);
RewriteOutcome rewrite_spo(const Rule& rule, const Transformation& match);
RewriteOutcome rewrite_sqpo(const Rule& rule, const Transformation& match);
/// Dispatch on rule.kind.
RewriteOutcome rewrite(const Rule& rule, const Transformation& match);

/// Would rewrite() succeed at this match? Never throws for a natural match.
bool applicable(const Rule& rule, const Transformation& match);

/// Enumerate matches L -> G (monic ones when opts.monic, and always for
/// SqPO), keep the applicable ones, and rewrite G independently at each.
std::vector<RewriteOutcome> find_and_rewrite(const Rule& rule, const CSetPtr& G, SearchOptions opts = {});

}  // namespace catrw
