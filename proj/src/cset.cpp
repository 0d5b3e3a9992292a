#include "catrw/cset.hpp"

#include <algorithm>
#include <numeric>

namespace catrw {

namespace {

std::string join_violations(const std::vector<InstanceViolation>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : "; ") + x.message;
  return out;
}

// Path evaluation that reports failure instead of reading out of bounds.
std::optional<Part> try_evaluate(const CSet& x, const Path& p, Part at) {
  ObId ob = p.source;
  for (GenId f : p.components) {
    if (at >= x.card(ob)) return std::nullopt;
    at = x.subpart(f, at);
    ob = x.schema().generator(f).cod;
  }
  if (at >= x.card(ob)) return std::nullopt;
  return at;
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<InstanceViolation> v)
    : Error("invalid instance: " + join_violations(v)), violations_(std::move(v)) {}

CSet::CSet(SchemaPtr schema)
    : schema_(std::move(schema)),
      card_(schema_->num_objects(), 0),
      column_(schema_->num_generators()),
      index_(schema_->num_generators()) {}

std::size_t CSet::total_parts() const { return std::accumulate(card_.begin(), card_.end(), std::size_t{0}); }

std::span<const Part> CSet::incident(GenId f, Part y) const {
  const ObId b = schema_->generator(f).cod;
  if (y >= card_[b])
    throw PartOutOfRange("part " + std::to_string(y + 1) + " out of range for object '" +
                         schema_->object_name(b) + "'");
  return index_[f][y];
}

Part CSet::add_part(ObId c) { return add_parts(c, 1); }

Part CSet::add_parts(ObId c, std::size_t n) {
  const Part first = static_cast<Part>(card_[c]);
  card_[c] += n;
  for (GenId f : schema_->outgoing(c)) column_[f].resize(card_[c], kNoPart);
  for (GenId f : schema_->incoming(c)) index_[f].resize(card_[c]);
  return first;
}

void CSet::set_subpart(GenId f, Part x, Part y) {
  const auto& g = schema_->generator(f);
  if (x >= card_[g.dom] || y >= card_[g.cod])
    throw PartOutOfRange("set_subpart out of range for generator '" + g.name + "'");
  Part& slot = column_[f][x];
  if (slot == y) return;
  if (slot != kNoPart) {
    auto& pre = index_[f][slot];
    pre.erase(std::lower_bound(pre.begin(), pre.end(), x));
  }
  auto& pre = index_[f][y];
  pre.insert(std::lower_bound(pre.begin(), pre.end(), x), x);
  slot = y;
}

Part CSet::evaluate(const Path& p, Part x) const {
  for (GenId f : p.components) x = column_[f][x];
  return x;
}

void CSet::rebuild_index(GenId f) {
  const ObId b = schema_->generator(f).cod;
  index_[f].assign(card_[b], {});
  for (Part x = 0; x < column_[f].size(); ++x) {
    const Part y = column_[f][x];
    if (y != kNoPart && y < card_[b]) index_[f][y].push_back(x);
  }
}

std::vector<std::vector<Part>> CSet::remove_parts(const std::vector<std::vector<Part>>& doomed) {
  const std::size_t n = schema_->num_objects();
  std::vector<std::vector<Part>> renum(n);
  std::vector<std::vector<Part>> order(n);  // new id -> old id
  bool changed = false;
  for (ObId c = 0; c < n; ++c) {
    order[c].resize(card_[c]);
    std::iota(order[c].begin(), order[c].end(), Part{0});
    std::vector<Part> gone = c < doomed.size() ? doomed[c] : std::vector<Part>{};
    std::sort(gone.begin(), gone.end(), std::greater<>());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    for (Part x : gone) {
      if (x >= card_[c])
        throw PartOutOfRange("cannot remove part " + std::to_string(x + 1) + " of '" + schema_->object_name(c) + "'");
      // Descending order guarantees the current last slot is a survivor.
      order[c][x] = order[c].back();
      order[c].pop_back();
      changed = true;
    }
    renum[c].assign(card_[c], kNoPart);
    for (Part i = 0; i < order[c].size(); ++i) renum[c][order[c][i]] = i;
  }
  if (!changed) return renum;

  for (GenId f = 0; f < schema_->num_generators(); ++f) {
    const auto& g = schema_->generator(f);
    std::vector<Part> col(order[g.dom].size());
    for (Part i = 0; i < col.size(); ++i) {
      const Part y = column_[f][order[g.dom][i]];
      if (y == kNoPart) {
        col[i] = kNoPart;
        continue;
      }
      col[i] = renum[g.cod][y];
      if (col[i] == kNoPart)
        throw std::logic_error("remove_parts: surviving part of '" + schema_->object_name(g.dom) +
                               "' refers to a removed part through '" + g.name + "'");
    }
    column_[f] = std::move(col);
  }
  for (ObId c = 0; c < n; ++c) card_[c] = order[c].size();
  for (GenId f = 0; f < schema_->num_generators(); ++f) rebuild_index(f);
  return renum;
}

CSet CSet::with_schema(SchemaPtr s) const {
  const auto& a = schema_->presentation();
  const auto& b = s->presentation();
  if (a.objects != b.objects || a.generators != b.generators)
    throw SchemaMismatch("with_schema: objects or generators differ");
  CSet out = *this;
  out.schema_ = std::move(s);
  return out;
}

bool CSet::operator==(const CSet& o) const {
  return same_schema(schema_, o.schema_) && card_ == o.card_ && column_ == o.column_;
}

std::vector<InstanceViolation> validate_instance(const CSet& x) {
  using K = InstanceViolation::Kind;
  const Schema& s = x.schema();
  std::vector<InstanceViolation> out;
  for (GenId f = 0; f < s.num_generators(); ++f) {
    const auto& g = s.generator(f);
    const auto col = x.column(f);
    if (col.size() != x.card(g.dom)) {
      out.push_back({K::ColumnLength, f, kNoPart,
                     "column '" + g.name + "' has length " + std::to_string(col.size()) + " but '" +
                         s.object_name(g.dom) + "' has " + std::to_string(x.card(g.dom)) + " parts"});
      continue;
    }
    for (Part p = 0; p < col.size(); ++p) {
      if (col[p] == kNoPart)
        out.push_back({K::Undefined, f, p, "'" + g.name + "' undefined at part " + std::to_string(p + 1)});
      else if (col[p] >= x.card(g.cod))
        out.push_back({K::OutOfRange, f, p,
                       "'" + g.name + "' sends part " + std::to_string(p + 1) + " to " + std::to_string(col[p] + 1) +
                           " but '" + s.object_name(g.cod) + "' has " + std::to_string(x.card(g.cod)) + " parts"});
    }
  }
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < s.equations().size(); ++i) {
    const auto& eq = s.equations()[i];
    for (Part p = 0; p < x.card(eq.lhs.source); ++p) {
      auto l = try_evaluate(x, eq.lhs, p);
      auto r = try_evaluate(x, eq.rhs, p);
      if (l && r && *l != *r)
        out.push_back({K::Equation, i, p,
                       "equation " + s.equation_string(i) + " fails at part " + std::to_string(p + 1) + " of '" +
                           s.object_name(eq.lhs.source) + "'"});
    }
  }
  return out;
}

CSet make_instance_unchecked(SchemaPtr schema, std::vector<std::size_t> card, std::vector<std::vector<Part>> columns) {
  CSet x(std::move(schema));
  if (card.size() != x.schema().num_objects() || columns.size() != x.schema().num_generators())
    throw std::invalid_argument("instance data does not match the schema's shape");
  x.card_ = std::move(card);
  x.column_ = std::move(columns);
  for (GenId f = 0; f < x.schema().num_generators(); ++f) x.rebuild_index(f);
  return x;
}

CSet make_instance(SchemaPtr schema, std::vector<std::size_t> card, std::vector<std::vector<Part>> columns) {
  CSet x = make_instance_unchecked(std::move(schema), std::move(card), std::move(columns));
  if (auto v = validate_instance(x); !v.empty()) throw InvalidInstance(std::move(v));
  return x;
}

CSet make_instance(SchemaPtr schema, const std::vector<std::pair<std::string, std::size_t>>& card,
                   const std::vector<std::pair<std::string, std::vector<Part>>>& columns_1based) {
  std::vector<std::size_t> c(schema->num_objects(), 0);
  for (const auto& [name, n] : card) c[schema->object(name)] = n;
  std::vector<std::vector<Part>> cols(schema->num_generators());
  for (const auto& [name, col] : columns_1based) {
    auto& dst = cols[schema->generator_id(name)];
    dst.clear();
    for (Part v : col) dst.push_back(v == 0 ? kNoPart : v - 1);
  }
  for (GenId f = 0; f < schema->num_generators(); ++f)
    if (cols[f].empty()) cols[f].assign(c[schema->generator(f).dom], kNoPart);
  return make_instance(std::move(schema), std::move(c), std::move(cols));
}

CSet schema_graph(const Schema& s) {
  std::vector<Part> src, tgt;
  for (GenId f = 0; f < s.num_generators(); ++f) {
    src.push_back(s.generator(f).dom);
    tgt.push_back(s.generator(f).cod);
  }
  return make_instance(graph_schema(), {s.num_objects(), s.num_generators()}, {src, tgt});
}

Part element_vertex(const CSet& x, ObId c, Part p) {
  Part offset = 0;
  for (ObId d = 0; d < c; ++d) offset += static_cast<Part>(x.card(d));
  return offset + p;
}

TypedGraph elements(const CSet& x) {
  const Schema& s = x.schema();
  TypedGraph t{x.schema_ptr(), CSet(graph_schema()), {}, {}};
  for (ObId c = 0; c < s.num_objects(); ++c) t.vertex_type.insert(t.vertex_type.end(), x.card(c), c);
  std::vector<Part> src, tgt;
  for (GenId f = 0; f < s.num_generators(); ++f) {
    const auto& g = s.generator(f);
    for (Part p = 0; p < x.card(g.dom); ++p) {
      src.push_back(element_vertex(x, g.dom, p));
      tgt.push_back(element_vertex(x, g.cod, x.subpart(f, p)));
      t.edge_type.push_back(f);
    }
  }
  t.graph = make_instance(graph_schema(), {t.vertex_type.size(), src.size()}, {src, tgt});
  return t;
}

bool TypedGraph::well_typed() const {
  if (vertex_type.size() != graph.card(ObId{0}) || edge_type.size() != graph.card(ObId{1})) return false;
  for (Part e = 0; e < edge_type.size(); ++e) {
    if (edge_type[e] >= schema->num_generators()) return false;
    const auto& g = schema->generator(edge_type[e]);
    if (vertex_type[graph.subpart(0, e)] != g.dom || vertex_type[graph.subpart(1, e)] != g.cod) return false;
  }
  for (ObId c : vertex_type)
    if (c >= schema->num_objects()) return false;
  return true;
}

TypedGraph TypedGraph::without_vertices(const std::vector<Part>& vertices) const {
  std::vector<bool> gone(vertex_type.size(), false);
  for (Part v : vertices) gone.at(v) = true;
  std::vector<Part> remap(vertex_type.size(), kNoPart);
  TypedGraph out{schema, CSet(graph_schema()), {}, {}};
  for (Part v = 0; v < vertex_type.size(); ++v)
    if (!gone[v]) {
      remap[v] = static_cast<Part>(out.vertex_type.size());
      out.vertex_type.push_back(vertex_type[v]);
    }
  std::vector<Part> src, tgt;
  for (Part e = 0; e < edge_type.size(); ++e) {
    const Part a = graph.subpart(0, e), b = graph.subpart(1, e);
    if (gone[a] || gone[b]) continue;
    src.push_back(remap[a]);
    tgt.push_back(remap[b]);
    out.edge_type.push_back(edge_type[e]);
  }
  out.graph = make_instance(graph_schema(), {out.vertex_type.size(), src.size()}, {src, tgt});
  return out;
}

OpfibrationCheck check_discrete_opfibration(const TypedGraph& t) {
  using K = OpfibrationViolation::Kind;
  const Schema& s = *t.schema;
  OpfibrationCheck out;
  const std::size_t nv = t.vertex_type.size();

  // lift[v][f] = unique f-typed out-edge target, or kNoPart when absent/ambiguous
  std::vector<std::vector<Part>> lift(nv, std::vector<Part>(s.num_generators(), kNoPart));
  std::vector<std::vector<std::size_t>> count(nv, std::vector<std::size_t>(s.num_generators(), 0));
  for (Part e = 0; e < t.edge_type.size(); ++e) {
    const Part v = t.graph.subpart(0, e);
    const GenId f = t.edge_type[e];
    if (++count[v][f] == 1) lift[v][f] = t.graph.subpart(1, e);
  }
  for (Part v = 0; v < nv; ++v) {
    for (GenId f : s.outgoing(t.vertex_type[v])) {
      if (count[v][f] == 0) out.violations.push_back({K::MissingEdge, f, v});
      if (count[v][f] > 1) {
        out.violations.push_back({K::MultipleEdges, f, v});
        lift[v][f] = kNoPart;
      }
    }
  }

  auto follow = [&](const Path& p, Part v) -> std::optional<Part> {
    for (GenId f : p.components) {
      v = lift[v][f];
      if (v == kNoPart) return std::nullopt;
    }
    return v;
  };
  for (std::size_t i = 0; i < s.equations().size(); ++i) {
    const auto& eq = s.equations()[i];
    for (Part v = 0; v < nv; ++v) {
      if (t.vertex_type[v] != eq.lhs.source) continue;
      auto l = follow(eq.lhs, v);
      auto r = follow(eq.rhs, v);
      if (l && r && *l != *r) out.violations.push_back({K::EquationFailure, i, v});
    }
  }
  if (!out.violations.empty()) return out;

  std::vector<std::size_t> card(s.num_objects(), 0);
  std::vector<Part> local(nv);
  for (Part v = 0; v < nv; ++v) local[v] = static_cast<Part>(card[t.vertex_type[v]]++);
  std::vector<std::vector<Part>> cols(s.num_generators());
  for (GenId f = 0; f < s.num_generators(); ++f) cols[f].assign(card[s.generator(f).dom], kNoPart);
  for (Part v = 0; v < nv; ++v)
    for (GenId f : s.outgoing(t.vertex_type[v])) cols[f][local[v]] = local[lift[v][f]];
  out.instance = make_instance(t.schema, std::move(card), std::move(cols));
  return out;
}

std::string to_string(const InstanceViolation& v, const Schema&) { return v.message; }

std::string to_string(const OpfibrationViolation& v, const Schema& s) {
  switch (v.kind) {
    case OpfibrationViolation::Kind::MissingEdge:
      return "MissingEdge(" + s.generator(v.which).name + ", vertex " + std::to_string(v.vertex + 1) + ")";
    case OpfibrationViolation::Kind::MultipleEdges:
      return "MultipleEdges(" + s.generator(v.which).name + ", vertex " + std::to_string(v.vertex + 1) + ")";
    case OpfibrationViolation::Kind::EquationFailure:
      return "EquationFailure(" + s.equation_string(v.which) + ", vertex " + std::to_string(v.vertex + 1) +
             ")";
  }
  return {};
}

}  // namespace catrw
