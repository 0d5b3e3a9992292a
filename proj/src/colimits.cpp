#include "catrw/colimits.hpp"

#include <numeric>

namespace catrw {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Smallest id stays the root.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void require_same_schema(const CSetPtr& a, const CSetPtr& b, const char* what) {
  if (!same_schema(a->schema_ptr(), b->schema_ptr())) throw SchemaMismatch(std::string(what) + ": schemas differ");
}

}  // namespace

// --------------------------------------------------------------------------
// colimits

ColimitResult colimit(const std::vector<CSetPtr>& nodes, const std::vector<DiagramArrow>& arrows) {
  if (nodes.empty()) throw std::invalid_argument("colimit of an empty diagram needs a schema; use an empty instance");
  const SchemaPtr schema = nodes.front()->schema_ptr();
  for (const auto& n : nodes) require_same_schema(nodes.front(), n, "colimit");
  for (const auto& a : arrows) {
    if (a.src >= nodes.size() || a.tgt >= nodes.size()) throw std::invalid_argument("colimit: arrow endpoint out of range");
    if (!same_instance(a.map.dom_ptr(), nodes[a.src]) || !same_instance(a.map.cod_ptr(), nodes[a.tgt]))
      throw std::invalid_argument("colimit: arrow does not match its endpoints");
  }
  const std::size_t nobj = schema->num_objects();

  ColimitResult out;
  out.arrows_ = arrows;
  out.reps_.resize(nobj);
  // class_of[c][node][part] = apex part
  std::vector<std::vector<std::vector<Part>>> class_of(nobj, std::vector<std::vector<Part>>(nodes.size()));
  std::vector<std::size_t> apex_card(nobj, 0);

  for (ObId c = 0; c < nobj; ++c) {
    std::vector<std::size_t> offset(nodes.size() + 1, 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) offset[i + 1] = offset[i] + nodes[i]->card(c);
    UnionFind uf(offset.back());
    for (const auto& a : arrows)
      for (Part x = 0; x < nodes[a.src]->card(c); ++x) uf.unite(offset[a.src] + x, offset[a.tgt] + a.map(c, x));
    std::vector<Part> id_of_root(offset.back(), kNoPart);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      class_of[c][i].resize(nodes[i]->card(c));
      for (Part x = 0; x < nodes[i]->card(c); ++x) {
        const std::size_t g = offset[i] + x;
        const std::size_t r = uf.find(g);
        if (r == g) {
          id_of_root[g] = static_cast<Part>(apex_card[c]++);
          out.reps_[c].emplace_back(i, x);
        }
        class_of[c][i][x] = id_of_root[r];
      }
    }
  }

  std::vector<std::vector<Part>> cols(schema->num_generators());
  for (GenId f = 0; f < schema->num_generators(); ++f) {
    const auto& g = schema->generator(f);
    for (auto [node, x] : out.reps_[g.dom]) cols[f].push_back(class_of[g.cod][node][nodes[node]->subpart(f, x)]);
  }
  out.apex = share(make_instance_unchecked(schema, apex_card, std::move(cols)));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<std::vector<Part>> comp(nobj);
    for (ObId c = 0; c < nobj; ++c) comp[c] = class_of[c][i];
    out.legs.emplace_back(nodes[i], out.apex, std::move(comp));
  }
  return out;
}

ColimitResult coproduct(const std::vector<CSetPtr>& nodes) { return colimit(nodes, {}); }

Transformation ColimitResult::universal(const std::vector<Transformation>& cocone) const {
  if (cocone.size() != legs.size()) throw std::invalid_argument("cocone has the wrong number of legs");
  for (std::size_t i = 0; i < legs.size(); ++i)
    if (!same_instance(cocone[i].dom_ptr(), legs[i].dom_ptr()) ||
        !same_instance(cocone[i].cod_ptr(), cocone.front().cod_ptr()))
      throw std::invalid_argument("cocone legs do not match the diagram");
  for (const auto& a : arrows_)
    if (compose(a.map, cocone[a.tgt]).components() != cocone[a.src].components())
      throw CommutativityFailure("cocone does not commute with the diagram");
  const std::size_t nobj = apex->schema().num_objects();
  std::vector<std::vector<Part>> comp(nobj);
  for (ObId c = 0; c < nobj; ++c)
    for (auto [node, x] : reps_[c]) comp[c].push_back(cocone[node](c, x));
  return Transformation(apex, cocone.front().cod_ptr(), std::move(comp));
}

PushoutResult pushout(const Transformation& f, const Transformation& g) {
  if (!same_instance(f.dom_ptr(), g.dom_ptr())) throw std::invalid_argument("pushout: maps do not share a domain");
  // Nodes B, C, A: every class containing an element of A also contains a
  // smaller element of B, so representatives never come from A.
  PushoutResult out;
  out.impl_ = colimit({f.cod_ptr(), g.cod_ptr(), f.dom_ptr()}, {{2, 0, f}, {2, 1, g}});
  out.apex = out.impl_.apex;
  out.left = out.impl_.legs[0];
  out.right = out.impl_.legs[1];
  out.f_ = f;
  return out;
}

Transformation PushoutResult::universal(const Transformation& u, const Transformation& v) const {
  return impl_.universal({u, v, compose(f_, u)});
}

// --------------------------------------------------------------------------
// pullbacks

PullbackResult pullback(const Transformation& f, const Transformation& g) {
  if (!same_instance(f.cod_ptr(), g.cod_ptr())) throw std::invalid_argument("pullback: maps do not share a codomain");
  const CSet& B = f.dom();
  const CSet& C = g.dom();
  const Schema& s = B.schema();
  const std::size_t nobj = s.num_objects();

  PullbackResult out;
  out.pairs_.resize(nobj);
  std::vector<std::vector<std::pair<Part, Part>>> parts(nobj);
  for (ObId c = 0; c < nobj; ++c) {
    std::vector<std::vector<Part>> bucket(f.cod().card(c));
    for (Part y = 0; y < C.card(c); ++y) bucket[g(c, y)].push_back(y);
    for (Part x = 0; x < B.card(c); ++x)
      for (Part y : bucket[f(c, x)]) {
        out.pairs_[c].emplace(std::make_pair(x, y), static_cast<Part>(parts[c].size()));
        parts[c].emplace_back(x, y);
      }
  }
  std::vector<std::size_t> card(nobj);
  for (ObId c = 0; c < nobj; ++c) card[c] = parts[c].size();
  std::vector<std::vector<Part>> cols(s.num_generators());
  for (GenId h = 0; h < s.num_generators(); ++h) {
    const auto& gen = s.generator(h);
    for (auto [x, y] : parts[gen.dom]) cols[h].push_back(out.pairs_[gen.cod].at({B.subpart(h, x), C.subpart(h, y)}));
  }
  out.apex = share(make_instance_unchecked(f.dom().schema_ptr(), card, std::move(cols)));
  std::vector<std::vector<Part>> lc(nobj), rc(nobj);
  for (ObId c = 0; c < nobj; ++c)
    for (auto [x, y] : parts[c]) {
      lc[c].push_back(x);
      rc[c].push_back(y);
    }
  out.left = Transformation(out.apex, f.dom_ptr(), std::move(lc));
  out.right = Transformation(out.apex, g.dom_ptr(), std::move(rc));
  return out;
}

Transformation PullbackResult::universal(const Transformation& p, const Transformation& q) const {
  if (!same_instance(p.dom_ptr(), q.dom_ptr())) throw std::invalid_argument("cone legs do not share a domain");
  const std::size_t nobj = apex->schema().num_objects();
  std::vector<std::vector<Part>> comp(nobj);
  for (ObId c = 0; c < nobj; ++c)
    for (Part z = 0; z < p.dom().card(c); ++z) {
      auto it = pairs_[c].find({p(c, z), q(c, z)});
      if (it == pairs_[c].end()) throw CommutativityFailure("cone does not commute over the pullback's base");
      comp[c].push_back(it->second);
    }
  return Transformation(p.dom_ptr(), apex, std::move(comp));
}

// --------------------------------------------------------------------------
// pushout complements

std::string to_string(const ComplementViolation& v, const Schema& s) {
  if (v.kind == ComplementViolation::Kind::Identification)
    return "identification: parts " + std::to_string(v.first + 1) + " and " + std::to_string(v.second + 1) + " of '" +
           s.object_name(static_cast<ObId>(v.which)) + "' are merged but not both preserved";
  if (v.kind == ComplementViolation::Kind::Boundary)
    return "boundary: part " + std::to_string(v.first + 1) + " of '" + s.object_name(v.object) + "' in foot " +
           std::to_string(v.which + 1) + " survives but its apex image (part " + std::to_string(v.second + 1) +
           ") is deleted";
  const auto& g = s.generator(static_cast<GenId>(v.which));
  return "dangling: part " + std::to_string(v.first + 1) + " of '" + s.object_name(g.dom) + "' survives but its '" +
         g.name + "' (part " + std::to_string(v.second + 1) + " of '" + s.object_name(g.cod) + "') is deleted";
}

namespace {
std::string describe_all(const std::vector<ComplementViolation>& v, const Schema& s) {
  std::string out = "pushout complement does not exist";
  for (const auto& x : v) out += "; " + to_string(x, s);
  return out;
}
}  // namespace

ComplementViolations::ComplementViolations(std::vector<ComplementViolation> v, const Schema& s)
    : Error(describe_all(v, s)), violations_(std::move(v)) {}

std::vector<std::vector<bool>> deleted_parts(const Transformation& f, const Transformation& g) {
  const Schema& s = f.schema();
  std::vector<std::vector<bool>> gone(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c) {
    std::vector<bool> kept(f.cod().card(c), false);
    for (Part a : f.component(c)) kept[a] = true;
    gone[c].assign(g.cod().card(c), false);
    for (Part b = 0; b < f.cod().card(c); ++b)
      if (!kept[b]) gone[c][g(c, b)] = true;
  }
  return gone;
}

std::vector<ComplementViolation> check_pushout_complement(const Transformation& f, const Transformation& g) {
  if (!same_instance(f.cod_ptr(), g.dom_ptr())) throw std::invalid_argument("pushout complement: maps not composable");
  if (!f.is_monic()) throw NotMonic("pushout complement: first map must be monic");
  const Schema& s = f.schema();
  std::vector<ComplementViolation> out;

  for (ObId c = 0; c < s.num_objects(); ++c) {
    std::vector<bool> preserved(f.cod().card(c), false);
    for (Part a : f.component(c)) preserved[a] = true;
    std::vector<std::vector<Part>> fibre(g.cod().card(c));
    for (Part b = 0; b < f.cod().card(c); ++b) fibre[g(c, b)].push_back(b);
    for (const auto& fb : fibre)
      for (std::size_t i = 0; i < fb.size(); ++i)
        for (std::size_t j = i + 1; j < fb.size(); ++j)
          if (!(preserved[fb[i]] && preserved[fb[j]]))
            out.push_back({ComplementViolation::Kind::Identification, c, fb[i], fb[j]});
  }

  const auto gone = deleted_parts(f, g);
  const CSet& C = g.cod();
  for (GenId h = 0; h < s.num_generators(); ++h) {
    const auto& gen = s.generator(h);
    for (Part y = 0; y < C.card(gen.cod); ++y) {
      if (!gone[gen.cod][y]) continue;
      for (Part x : C.incident(h, y))
        if (!gone[gen.dom][x]) out.push_back({ComplementViolation::Kind::Dangling, h, x, y});
    }
  }
  return out;
}

PushoutComplement pushout_complement(const Transformation& f, const Transformation& g) {
  if (auto v = check_pushout_complement(f, g); !v.empty()) throw ComplementViolations(std::move(v), f.schema());
  const Schema& s = f.schema();
  const auto gone = deleted_parts(f, g);
  std::vector<std::vector<Part>> doomed(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part p = 0; p < gone[c].size(); ++p)
      if (gone[c][p]) doomed[c].push_back(p);

  CSet D = g.cod();
  PushoutComplement out;
  out.renumbering = D.remove_parts(doomed);
  auto Dp = share(std::move(D));

  std::vector<std::vector<Part>> incl(s.num_objects()), a_to_d(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c) {
    incl[c].resize(Dp->card(c));
    for (Part p = 0; p < out.renumbering[c].size(); ++p)
      if (out.renumbering[c][p] != kNoPart) incl[c][out.renumbering[c][p]] = p;
    for (Part a = 0; a < f.dom().card(c); ++a) a_to_d[c].push_back(out.renumbering[c][g(c, f(c, a))]);
  }
  out.a_to_d = Transformation(f.dom_ptr(), Dp, std::move(a_to_d));
  out.d_to_c = Transformation(Dp, g.cod_ptr(), std::move(incl));
  return out;
}

}  // namespace catrw
