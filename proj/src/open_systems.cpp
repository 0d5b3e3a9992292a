#include "catrw/open_systems.hpp"

#include <algorithm>

namespace catrw {

namespace {

std::string element_name(const std::string& base, Part p) { return base + "#" + std::to_string(p + 1); }

// Object of slice_schema(X) for part x of c: objects are listed object by
// object, part by part, and generators likewise.
std::vector<std::size_t> object_offsets(const CSet& X) {
  std::vector<std::size_t> off(X.schema().num_objects() + 1, 0);
  for (ObId c = 0; c < X.schema().num_objects(); ++c) off[c + 1] = off[c] + X.card(c);
  return off;
}

std::vector<std::size_t> generator_offsets(const CSet& X) {
  const Schema& s = X.schema();
  std::vector<std::size_t> off(s.num_generators() + 1, 0);
  for (GenId f = 0; f < s.num_generators(); ++f) off[f + 1] = off[f] + X.card(s.generator(f).dom);
  return off;
}

// Position of each total part inside its typing fibre, and the fibres.
struct Fibres {
  std::vector<std::vector<Part>> local;                   // [c][total part]
  std::vector<std::vector<std::vector<Part>>> members;    // [c][base part]
};

Fibres fibres_of(const SliceInstance& s) {
  const CSet& T = *s.total();
  const CSet& X = *s.base();
  const std::size_t nobj = X.schema().num_objects();
  Fibres fb;
  fb.local.resize(nobj);
  fb.members.resize(nobj);
  for (ObId c = 0; c < nobj; ++c) {
    fb.members[c].resize(X.card(c));
    for (Part p = 0; p < T.card(c); ++p) {
      auto& m = fb.members[c][s.typing(c, p)];
      fb.local[c].push_back(static_cast<Part>(m.size()));
      m.push_back(p);
    }
  }
  return fb;
}

void require_over_base(const Transformation& f, const SliceInstance& from, const SliceInstance& to, const char* what) {
  if (!same_instance(from.base(), to.base())) throw TypingMismatch(std::string(what) + ": slices have different bases");
  if (!commutes_over_base(f, from, to)) throw TypingMismatch(std::string(what) + " does not commute with the typings");
}

bool commutes(const Transformation& a, const Transformation& b, const Transformation& c, const Transformation& d) {
  return compose(a, b).components() == compose(c, d).components();
}

}  // namespace

// --------------------------------------------------------------------------
// slices

bool commutes_over_base(const Transformation& f, const SliceInstance& from, const SliceInstance& to) {
  if (!same_instance(f.dom_ptr(), from.total()) || !same_instance(f.cod_ptr(), to.total())) return false;
  return compose(f, to.typing).components() == from.typing.components();
}

SchemaPtr slice_schema(const CSet& X) {
  const Schema& s = X.schema();
  SchemaPresentation p;
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part x = 0; x < X.card(c); ++x) p.objects.push_back(element_name(s.object_name(c), x));
  for (GenId f = 0; f < s.num_generators(); ++f) {
    const auto& g = s.generator(f);
    for (Part x = 0; x < X.card(g.dom); ++x)
      p.generators.push_back({element_name(g.name, x), element_name(s.object_name(g.dom), x),
                              element_name(s.object_name(g.cod), X.subpart(f, x))});
  }
  auto lift = [&](const Path& path, Part x) {
    PathSpec spec{element_name(s.object_name(path.source), x), {}};
    for (GenId f : path.components) {
      spec.components.push_back(element_name(s.generator(f).name, x));
      x = X.subpart(f, x);
    }
    return spec;
  };
  for (const auto& eq : s.equations())
    for (Part x = 0; x < X.card(eq.lhs.source); ++x) p.equations.emplace_back(lift(eq.lhs, x), lift(eq.rhs, x));
  return Schema::make(std::move(p));
}

CSet slice_to_cset(const SliceInstance& s, const SchemaPtr& elements_schema) {
  const CSet& T = *s.total();
  const CSet& X = *s.base();
  const Schema& base = X.schema();
  const auto ob_off = object_offsets(X);
  const auto gen_off = generator_offsets(X);
  if (elements_schema->num_objects() != ob_off.back() || elements_schema->num_generators() != gen_off.back())
    throw SchemaMismatch("slice_to_cset: schema is not the category of elements of the base");
  const Fibres fb = fibres_of(s);

  std::vector<std::size_t> card(ob_off.back());
  for (ObId c = 0; c < base.num_objects(); ++c)
    for (Part x = 0; x < X.card(c); ++x) card[ob_off[c] + x] = fb.members[c][x].size();
  std::vector<std::vector<Part>> cols(gen_off.back());
  for (GenId f = 0; f < base.num_generators(); ++f) {
    const auto& g = base.generator(f);
    for (Part x = 0; x < X.card(g.dom); ++x)
      for (Part p : fb.members[g.dom][x]) cols[gen_off[f] + x].push_back(fb.local[g.cod][T.subpart(f, p)]);
  }
  return make_instance(elements_schema, std::move(card), std::move(cols));
}

SliceInstance cset_to_slice(const CSet& x, const CSetPtr& base) {
  const CSet& X = *base;
  const Schema& s = X.schema();
  const auto ob_off = object_offsets(X);
  const auto gen_off = generator_offsets(X);
  if (x.schema().num_objects() != ob_off.back() || x.schema().num_generators() != gen_off.back())
    throw SchemaMismatch("cset_to_slice: instance is not on the category of elements of the base");

  // Total parts of c: fibre over part 0, then fibre over part 1, ...
  std::vector<std::vector<Part>> start(s.num_objects());
  std::vector<std::size_t> card(s.num_objects(), 0);
  std::vector<std::vector<Part>> typing(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part e = 0; e < X.card(c); ++e) {
      start[c].push_back(static_cast<Part>(card[c]));
      const std::size_t n = x.card(static_cast<ObId>(ob_off[c] + e));
      card[c] += n;
      typing[c].insert(typing[c].end(), n, e);
    }
  std::vector<std::vector<Part>> cols(s.num_generators());
  for (GenId f = 0; f < s.num_generators(); ++f) {
    const auto& g = s.generator(f);
    for (Part e = 0; e < X.card(g.dom); ++e) {
      const Part target = X.subpart(f, e);
      for (Part v : x.column(static_cast<GenId>(gen_off[f] + e))) cols[f].push_back(start[g.cod][target] + v);
    }
  }
  auto total = share(make_instance(base->schema_ptr(), std::move(card), std::move(cols)));
  return SliceInstance{Transformation(total, base, std::move(typing))};
}

Transformation migrate_morphism(const Transformation& f, const SliceInstance& from, const SliceInstance& to,
                                const CSetPtr& from_migrated, const CSetPtr& to_migrated) {
  require_over_base(f, from, to, "migrate_morphism");
  const CSet& X = *from.base();
  const auto ob_off = object_offsets(X);
  const Fibres a = fibres_of(from);
  const Fibres b = fibres_of(to);
  std::vector<std::vector<Part>> comp(ob_off.back());
  for (ObId c = 0; c < X.schema().num_objects(); ++c)
    for (Part e = 0; e < X.card(c); ++e)
      for (Part p : a.members[c][e]) comp[ob_off[c] + e].push_back(b.local[c][f(c, p)]);
  return Transformation(from_migrated, to_migrated, std::move(comp));
}

SliceOutcome slice_rewrite(const SliceRule& rule, const SliceInstance& G, const Transformation& match) {
  require_over_base(rule.l, rule.I, rule.L, "rule leg l");
  require_over_base(rule.r, rule.I, rule.R, "rule leg r");
  require_over_base(match, rule.L, G, "match");
  const Rule total_rule(rule.l, rule.r, RewriteKind::DPO);
  if (!same_instance(match.dom_ptr(), total_rule.L()) || !is_natural(match).empty())
    throw MatchNotNatural("match is not a natural transformation out of L");

  auto pc = pushout_complement(rule.l, match);
  auto po = pushout(rule.r, pc.a_to_d);
  SliceOutcome out;
  out.total.result = po.apex;
  out.total.k = pc.a_to_d.cod_ptr();
  out.total.match = match;
  out.total.i_to_k = pc.a_to_d;
  out.total.k_to_g = pc.d_to_c;
  out.total.k_to_h = po.right;
  out.total.r_to_h = po.left;
  out.result.typing = po.universal(rule.R.typing, compose(pc.d_to_c, G.typing));
  return out;
}

SliceOutcome slice_rewrite_migrating(const SliceRule& rule, const SliceInstance& G, const Transformation& match) {
  require_over_base(rule.l, rule.I, rule.L, "rule leg l");
  require_over_base(rule.r, rule.I, rule.R, "rule leg r");
  require_over_base(match, rule.L, G, "match");
  const CSetPtr& base = G.base();
  const SchemaPtr E = slice_schema(*base);
  auto L = share(slice_to_cset(rule.L, E));
  auto I = share(slice_to_cset(rule.I, E));
  auto R = share(slice_to_cset(rule.R, E));
  auto H = share(slice_to_cset(G, E));
  const Rule migrated(migrate_morphism(rule.l, rule.I, rule.L, I, L), migrate_morphism(rule.r, rule.I, rule.R, I, R),
                      RewriteKind::DPO);
  SliceOutcome out;
  out.total = rewrite_dpo(migrated, migrate_morphism(match, rule.L, G, L, H));
  out.result = cset_to_slice(*out.total.result, base);
  return out;
}

// --------------------------------------------------------------------------
// structured cospans

std::vector<ObId> default_interface(const Schema& s) {
  std::vector<ObId> out;
  for (ObId c = 0; c < s.num_objects(); ++c)
    if (s.outgoing(c).empty()) out.push_back(c);
  return out;
}

bool is_discrete(const CSet& foot, const std::vector<ObId>& interface) {
  const Schema& s = foot.schema();
  for (ObId c = 0; c < s.num_objects(); ++c) {
    if (foot.card(c) == 0) continue;
    if (std::find(interface.begin(), interface.end(), c) == interface.end() || !s.outgoing(c).empty()) return false;
  }
  return true;
}

bool StructuredCospan::operator==(const StructuredCospan& o) const {
  return same_instance(apex, o.apex) && legs == o.legs;
}

std::vector<std::string> validate_cospan(const StructuredCospan& c, const std::vector<ObId>& interface) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.legs.size(); ++i) {
    const std::string leg = "leg " + std::to_string(i + 1);
    if (!same_instance(c.legs[i].cod_ptr(), c.apex)) out.push_back(leg + " does not end at the apex");
    if (!is_discrete(*c.foot(i), interface)) out.push_back(leg + ": foot is not discrete");
    if (!is_natural(c.legs[i]).empty()) out.push_back(leg + " is not natural");
  }
  return out;
}

StructuredCospan identity_cospan(const CSetPtr& foot) {
  const auto id = Transformation::identity(foot);
  return StructuredCospan{foot, {id, id}};
}

StructuredCospan compose_cospans(const StructuredCospan& a, const StructuredCospan& b) {
  if (a.legs.empty() || b.legs.empty()) throw FootMismatch("cannot compose cospans without feet");
  if (!same_instance(a.legs.back().dom_ptr(), b.legs.front().dom_ptr()))
    throw FootMismatch("output foot of the first cospan differs from the input foot of the second");
  auto po = pushout(a.legs.back(), b.legs.front());
  StructuredCospan out{po.apex, {}};
  for (std::size_t i = 0; i + 1 < a.legs.size(); ++i) out.legs.push_back(compose(a.legs[i], po.left));
  for (std::size_t i = 1; i < b.legs.size(); ++i) out.legs.push_back(compose(b.legs[i], po.right));
  return out;
}

OpenOutcome open_rewrite(const OpenRule& rule, const StructuredCospan& G, const CospanMorphism& match) {
  const std::size_t n = G.legs.size();
  if (rule.L.legs.size() != n || rule.I.legs.size() != n || rule.R.legs.size() != n || rule.l.feet.size() != n ||
      rule.r.feet.size() != n || match.feet.size() != n)
    throw FootMismatch("open rule, match and host disagree on the number of feet");
  for (std::size_t i = 0; i < n; ++i) {
    if (!commutes(rule.I.legs[i], rule.l.apex, rule.l.feet[i], rule.L.legs[i]))
      throw CommutativityFailure("rule map l does not commute with the legs at foot " + std::to_string(i + 1));
    if (!commutes(rule.I.legs[i], rule.r.apex, rule.r.feet[i], rule.R.legs[i]))
      throw CommutativityFailure("rule map r does not commute with the legs at foot " + std::to_string(i + 1));
    if (!commutes(rule.L.legs[i], match.apex, match.feet[i], G.legs[i]))
      throw CommutativityFailure("match does not commute with the legs at foot " + std::to_string(i + 1));
  }

  const Schema& s = G.apex->schema();
  std::vector<ComplementViolation> violations = check_pushout_complement(rule.l.apex, match.apex);
  const auto apex_deleted = deleted_parts(rule.l.apex, match.apex);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = check_pushout_complement(rule.l.feet[i], match.feet[i]);
    violations.insert(violations.end(), v.begin(), v.end());
    const auto foot_deleted = deleted_parts(rule.l.feet[i], match.feet[i]);
    const CSet& foot = *G.foot(i);
    for (ObId c = 0; c < s.num_objects(); ++c)
      for (Part y = 0; y < foot.card(c); ++y) {
        const Part img = G.legs[i](c, y);
        if (!foot_deleted[c][y] && apex_deleted[c][img])
          violations.push_back({ComplementViolation::Kind::Boundary, i, y, img, c});
      }
  }
  if (!violations.empty()) throw ComplementViolations(std::move(violations), s);

  const auto k_apex = pushout_complement(rule.l.apex, match.apex);
  const auto h_apex = pushout(rule.r.apex, k_apex.a_to_d);
  OpenOutcome out;
  out.k.apex = k_apex.a_to_d.cod_ptr();
  out.h.apex = h_apex.apex;
  out.k_to_g.apex = k_apex.d_to_c;
  out.k_to_h.apex = h_apex.right;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k_foot = pushout_complement(rule.l.feet[i], match.feet[i]);
    const CSet& kf = k_foot.a_to_d.cod();
    std::vector<std::vector<Part>> leg(s.num_objects());
    for (ObId c = 0; c < s.num_objects(); ++c)
      for (Part y = 0; y < kf.card(c); ++y) leg[c].push_back(k_apex.renumbering[c][G.legs[i](c, k_foot.d_to_c(c, y))]);
    Transformation k_leg(k_foot.a_to_d.cod_ptr(), out.k.apex, std::move(leg));
    const auto h_foot = pushout(rule.r.feet[i], k_foot.a_to_d);
    out.k.legs.push_back(k_leg);
    out.h.legs.push_back(h_foot.universal(compose(rule.R.legs[i], h_apex.left), compose(k_leg, h_apex.right)));
    out.k_to_g.feet.push_back(k_foot.d_to_c);
    out.k_to_h.feet.push_back(h_foot.right);
  }
  return out;
}

// --------------------------------------------------------------------------
// diagrams

std::size_t Diagram::node_index(const std::string& id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return i;
  throw UnknownReference("diagram node '" + id + "'");
}

std::vector<std::string> Diagram::validate() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[i].id == nodes[j].id) out.push_back("duplicate node id '" + nodes[i].id + "'");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = arrows[k];
    const std::string name = "arrow " + std::to_string(k + 1) + " (" + a.src + " -> " + a.tgt + ")";
    const auto find = [&](const std::string& id) -> const Node* {
      for (const auto& nd : nodes)
        if (nd.id == id) return &nd;
      return nullptr;
    };
    const Node* s = find(a.src);
    const Node* t = find(a.tgt);
    if (!s || !t) {
      out.push_back(name + " refers to an unknown node");
      continue;
    }
    if (!same_instance(a.map.dom_ptr(), s->instance) || !same_instance(a.map.cod_ptr(), t->instance))
      out.push_back(name + " does not match its endpoint instances");
    else if (!is_natural(a.map).empty())
      out.push_back(name + " is not natural");
  }
  return out;
}

bool Diagram::operator==(const Diagram& o) const {
  if (nodes.size() != o.nodes.size() || arrows.size() != o.arrows.size()) return false;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id != o.nodes[i].id || !same_instance(nodes[i].instance, o.nodes[i].instance)) return false;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src != o.arrows[i].src || arrows[i].tgt != o.arrows[i].tgt || !(arrows[i].map == o.arrows[i].map))
      return false;
  return true;
}

ColimitResult diagram_colimit(const Diagram& d) {
  std::vector<CSetPtr> nodes;
  for (const auto& nd : d.nodes) nodes.push_back(nd.instance);
  std::vector<DiagramArrow> arrows;
  for (const auto& a : d.arrows) arrows.push_back({d.node_index(a.src), d.node_index(a.tgt), a.map});
  return colimit(nodes, arrows);
}

}  // namespace catrw
