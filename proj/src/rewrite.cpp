#include "catrw/rewrite.hpp"

namespace catrw {

namespace {

void require_natural_match(const Rule& rule, const Transformation& match) {
  if (!same_instance(match.dom_ptr(), rule.L())) throw MatchNotNatural("match does not start at the rule's L");
  if (!is_natural(match).empty()) throw MatchNotNatural("match is not a natural transformation");
}

// old part -> new part for the inclusion of a subobject
std::vector<std::vector<Part>> invert_inclusion(const Transformation& incl) {
  std::vector<std::vector<Part>> inv(incl.schema().num_objects());
  for (ObId c = 0; c < inv.size(); ++c) {
    inv[c].assign(incl.cod().card(c), kNoPart);
    for (Part p = 0; p < incl.dom().card(c); ++p) inv[c][incl(c, p)] = p;
  }
  return inv;
}

std::vector<std::vector<bool>> none_marked(const CSet& x) {
  std::vector<std::vector<bool>> v(x.schema().num_objects());
  for (ObId c = 0; c < v.size(); ++c) v[c].assign(x.card(c), false);
  return v;
}

}  // namespace

std::string to_string(RewriteKind k) {
  switch (k) {
    case RewriteKind::DPO: return "dpo";
    case RewriteKind::SPO: return "spo";
    case RewriteKind::SqPO: return "sqpo";
  }
  return {};
}

RewriteKind parse_rewrite_kind(const std::string& s) {
  if (s == "dpo") return RewriteKind::DPO;
  if (s == "spo") return RewriteKind::SPO;
  if (s == "sqpo") return RewriteKind::SqPO;
  throw ParseError("unknown rewrite kind '" + s + "'");
}

Rule::Rule(Transformation l_, Transformation r_, RewriteKind k) : l(std::move(l_)), r(std::move(r_)), kind(k) {
  if (!same_instance(l.dom_ptr(), r.dom_ptr())) throw std::invalid_argument("rule legs do not share a domain");
  if (!is_natural(l).empty() || !is_natural(r).empty()) throw std::invalid_argument("rule legs must be natural");
  if (kind != RewriteKind::SqPO && !l.is_monic()) throw NotMonic("DPO and SPO rules need a monic left leg");
}

RewriteOutcome rewrite_dpo(const Rule& rule, const Transformation& match) {
  require_natural_match(rule, match);
  auto pc = pushout_complement(rule.l, match);
  auto po = pushout(rule.r, pc.a_to_d);
  RewriteOutcome out;
  out.result = po.apex;
  out.k = pc.a_to_d.cod_ptr();
  out.match = match;
  out.i_to_k = pc.a_to_d;
  out.k_to_g = pc.d_to_c;
  out.k_to_h = po.right;
  out.r_to_h = po.left;
  return out;
}

RewriteOutcome rewrite_spo(const Rule& rule, const Transformation& match) {
  require_natural_match(rule, match);
  if (!rule.l.is_monic()) throw NotMonic("SPO rules need a monic left leg");
  const CSet& G = match.cod();
  const CSet& I = *rule.I();
  const CSet& R = *rule.R();
  const Schema& s = G.schema();
  const std::size_t nobj = s.num_objects();

  // Seeds: images of the parts of L that the rule deletes.
  auto doomed_g = none_marked(G);
  for (ObId c = 0; c < nobj; ++c) {
    std::vector<bool> preserved(rule.L()->card(c), false);
    for (Part i : rule.l.component(c)) preserved[i] = true;
    for (Part x = 0; x < preserved.size(); ++x)
      if (!preserved[x]) doomed_g[c][match(c, x)] = true;
  }

  // Deletion wins over preservation: a part of I survives only if its image
  // in G survives, and a part of R survives only if every part of I sent to
  // it survives. Iterate until both sides agree.
  std::vector<std::vector<bool>> keep_g, keep_i(nobj), keep_r;
  for (;;) {
    keep_g = avoiding_subobject(G, doomed_g);
    auto doomed_r = none_marked(R);
    for (ObId c = 0; c < nobj; ++c) {
      keep_i[c].assign(I.card(c), false);
      for (Part i = 0; i < I.card(c); ++i) {
        keep_i[c][i] = keep_g[c][match(c, rule.l(c, i))];
        if (!keep_i[c][i]) doomed_r[c][rule.r(c, i)] = true;
      }
    }
    keep_r = avoiding_subobject(R, doomed_r);
    bool changed = false;
    for (ObId c = 0; c < nobj; ++c)
      for (Part i = 0; i < I.card(c); ++i)
        if (keep_i[c][i] && !keep_r[c][rule.r(c, i)]) {
          doomed_g[c][match(c, rule.l(c, i))] = true;
          changed = true;
        }
    if (!changed) break;
  }

  const auto k_incl = subobject(match.cod_ptr(), keep_g);
  const auto i_incl = subobject(rule.I(), keep_i);
  const auto r_incl = subobject(rule.R(), keep_r);
  const auto k_inv = invert_inclusion(k_incl);
  const auto r_inv = invert_inclusion(r_incl);
  std::vector<std::vector<Part>> ik(nobj), ir(nobj);
  for (ObId c = 0; c < nobj; ++c)
    for (Part i = 0; i < i_incl.dom().card(c); ++i) {
      const Part orig = i_incl(c, i);
      ik[c].push_back(k_inv[c][match(c, rule.l(c, orig))]);
      ir[c].push_back(r_inv[c][rule.r(c, orig)]);
    }
  Transformation i_to_k(i_incl.dom_ptr(), k_incl.dom_ptr(), std::move(ik));
  Transformation i_to_r(i_incl.dom_ptr(), r_incl.dom_ptr(), std::move(ir));
  auto po = pushout(i_to_r, i_to_k);

  RewriteOutcome out;
  out.result = po.apex;
  out.k = k_incl.dom_ptr();
  out.match = match;
  out.i_to_k = i_to_k;
  out.k_to_g = k_incl;
  out.k_to_h = po.right;
  out.r_to_h = po.left;
  out.i_domain = i_incl;
  out.r_domain = r_incl;
  return out;
}

RewriteOutcome rewrite_sqpo(const Rule& rule, const Transformation& match) {
  if (!match.schema().is_acyclic()) throw CyclicSchema();
  require_natural_match(rule, match);
  if (!match.is_monic()) throw NotMonic("SqPO needs a monic match");
  auto fpc = final_pullback_complement(rule.l, match);
  auto po = pushout(rule.r, fpc.i_to_k);
  RewriteOutcome out;
  out.result = po.apex;
  out.k = fpc.i_to_k.cod_ptr();
  out.match = match;
  out.i_to_k = fpc.i_to_k;
  out.k_to_g = fpc.k_to_g;
  out.k_to_h = po.right;
  out.r_to_h = po.left;
  return out;
}

RewriteOutcome rewrite(const Rule& rule, const Transformation& match) {
  switch (rule.kind) {
    case RewriteKind::DPO: return rewrite_dpo(rule, match);
    case RewriteKind::SPO: return rewrite_spo(rule, match);
    case RewriteKind::SqPO: return rewrite_sqpo(rule, match);
  }
  throw std::logic_error("unknown rewrite kind");
}

bool applicable(const Rule& rule, const Transformation& match) {
  if (!same_instance(match.dom_ptr(), rule.L()) || !is_natural(match).empty()) return false;
  switch (rule.kind) {
    case RewriteKind::DPO:
      return rule.l.is_monic() && check_pushout_complement(rule.l, match).empty();
    case RewriteKind::SPO:
      return rule.l.is_monic();
    case RewriteKind::SqPO:
      return match.schema().is_acyclic() && match.is_monic();
  }
  return false;
}

std::vector<RewriteOutcome> find_and_rewrite(const Rule& rule, const CSetPtr& G, SearchOptions opts) {
  if (rule.kind == RewriteKind::SqPO) opts.monic = true;
  std::vector<RewriteOutcome> out;
  for (const auto& m : homomorphisms(rule.L(), G, opts))
    if (applicable(rule, m)) out.push_back(rewrite(rule, m));
  return out;
}

}  // namespace catrw
