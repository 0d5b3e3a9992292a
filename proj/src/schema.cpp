#include "catrw/schema.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "catrw/errors.hpp"

namespace catrw {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

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
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool shortlex_less(const Path& a, const Path& b) {
  if (a.components.size() != b.components.size()) return a.components.size() < b.components.size();
  return a.components < b.components;
}

std::string describe(const PathSpec& p) {
  std::string s = p.source + ":[";
  for (std::size_t i = 0; i < p.components.size(); ++i) s += (i ? "," : "") + p.components[i];
  return s + "]";
}

}  // namespace

std::vector<std::string> validate_schema(const SchemaPresentation& s) {
  std::vector<std::string> out;
  std::set<std::string> names;
  std::set<std::string> objects;
  for (const auto& o : s.objects) {
    if (o.empty()) out.push_back("object with empty name");
    if (!names.insert(o).second) out.push_back("duplicate name '" + o + "'");
    objects.insert(o);
  }
  std::map<std::string, const GeneratorSpec*> gens;
  for (const auto& g : s.generators) {
    if (g.name.empty()) out.push_back("generator with empty name");
    if (!names.insert(g.name).second) out.push_back("duplicate name '" + g.name + "'");
    if (!objects.count(g.dom))
      out.push_back("generator '" + g.name + "' has domain '" + g.dom + "' which is not an object");
    if (!objects.count(g.cod))
      out.push_back("generator '" + g.name + "' has codomain '" + g.cod + "' which is not an object");
    gens.emplace(g.name, &g);
  }

  // Returns the target object of a path, or nullopt after recording why not.
  auto check_path = [&](const PathSpec& p, std::size_t eq) -> std::optional<std::string> {
    const std::string where = "equation " + std::to_string(eq + 1) + " path " + describe(p);
    if (!objects.count(p.source)) {
      out.push_back(where + ": source '" + p.source + "' is not an object");
      return std::nullopt;
    }
    std::string at = p.source;
    for (const auto& c : p.components) {
      auto it = gens.find(c);
      if (it == gens.end()) {
        out.push_back(where + ": unknown generator '" + c + "'");
        return std::nullopt;
      }
      if (it->second->dom != at) {
        out.push_back(where + ": generator '" + c + "' does not compose after object '" + at + "'");
        return std::nullopt;
      }
      at = it->second->cod;
    }
    return at;
  };

  for (std::size_t i = 0; i < s.equations.size(); ++i) {
    const auto& [lhs, rhs] = s.equations[i];
    auto lt = check_path(lhs, i);
    auto rt = check_path(rhs, i);
    if (!lt || !rt) continue;
    if (lhs.source != rhs.source || *lt != *rt)
      out.push_back("equation " + std::to_string(i + 1) + ": endpoints differ (" + describe(lhs) + " vs " +
                    describe(rhs) + ")");
  }
  return out;
}

Schema::Schema(SchemaPresentation p) : pres_(std::move(p)) {
  if (auto v = validate_schema(pres_); !v.empty()) throw InvalidSchema(std::move(v));

  const std::size_t n = pres_.objects.size();
  out_.resize(n);
  in_.resize(n);
  for (const auto& g : pres_.generators) {
    Generator gen{g.name, object(g.dom), object(g.cod)};
    out_[gen.dom].push_back(static_cast<GenId>(gens_.size()));
    in_[gen.cod].push_back(static_cast<GenId>(gens_.size()));
    gens_.push_back(std::move(gen));
  }
  auto compile = [&](const PathSpec& ps) {
    Path p{object(ps.source), {}};
    for (const auto& c : ps.components) p.components.push_back(generator_id(c));
    return p;
  };
  for (const auto& [l, r] : pres_.equations) eqs_.push_back({compile(l), compile(r)});

  // Kahn's algorithm; ties broken by declaration order.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& g : gens_) ++indeg[g.cod];
  std::vector<bool> done(n, false);
  topo_rank_.assign(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<ObId> next;
    for (ObId c = 0; c < n && !next; ++c)
      if (!done[c] && indeg[c] == 0) next = c;
    if (!next) break;
    done[*next] = true;
    topo_rank_[*next] = topo_.size();
    topo_.push_back(*next);
    for (GenId f : out_[*next]) --indeg[gens_[f].cod];
  }
  acyclic_ = topo_.size() == n;
  if (acyclic_) build_congruence();
}

void Schema::build_congruence() {
  // Enumerate every path; finite because the generator graph is acyclic.
  std::vector<Path> stack;
  for (ObId c = 0; c < num_objects(); ++c) stack.push_back(Path{c, {}});
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    for (GenId f : out_[target(p)]) {
      Path q = p;
      q.components.push_back(f);
      stack.push_back(std::move(q));
    }
    all_paths_.push_back(std::move(p));
  }
  std::sort(all_paths_.begin(), all_paths_.end());

  auto index_of = [&](const Path& p) {
    auto it = std::lower_bound(all_paths_.begin(), all_paths_.end(), p);
    return static_cast<std::size_t>(it - all_paths_.begin());
  };

  std::vector<std::vector<std::size_t>> ending_at(num_objects()), starting_at(num_objects());
  for (std::size_t i = 0; i < all_paths_.size(); ++i) {
    ending_at[target(all_paths_[i])].push_back(i);
    starting_at[all_paths_[i].source].push_back(i);
  }

  // Congruence closure: the pairs (r;p;t, r;q;t) are closed under whiskering,
  // so their equivalence closure is already a congruence.
  UnionFind uf(all_paths_.size());
  for (const auto& eq : eqs_) {
    const ObId x = eq.lhs.source;
    const ObId y = target(eq.lhs);
    for (std::size_t ri : ending_at[x]) {
      for (std::size_t ti : starting_at[y]) {
        const auto& r = all_paths_[ri].components;
        const auto& t = all_paths_[ti].components;
        Path a{all_paths_[ri].source, r}, b{all_paths_[ri].source, r};
        a.components.insert(a.components.end(), eq.lhs.components.begin(), eq.lhs.components.end());
        a.components.insert(a.components.end(), t.begin(), t.end());
        b.components.insert(b.components.end(), eq.rhs.components.begin(), eq.rhs.components.end());
        b.components.insert(b.components.end(), t.begin(), t.end());
        uf.unite(index_of(a), index_of(b));
      }
    }
  }

  path_to_class_.assign(all_paths_.size(), npos);
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < all_paths_.size(); ++i) {
    auto [it, fresh] = root_to_class.emplace(uf.find(i), class_rep_.size());
    if (fresh) {
      class_rep_.push_back(all_paths_[i]);
      class_members_.emplace_back();
    }
    path_to_class_[i] = it->second;
    class_members_[it->second].push_back(i);
    if (shortlex_less(all_paths_[i], class_rep_[it->second])) class_rep_[it->second] = all_paths_[i];
  }
  for (auto& members : class_members_)
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return shortlex_less(all_paths_[a], all_paths_[b]); });

  classes_from_.resize(num_objects());
  for (std::size_t k = 0; k < class_rep_.size(); ++k) classes_from_[class_rep_[k].source].push_back(k);
  for (auto& v : classes_from_)
    std::sort(v.begin(), v.end(),
              [&](std::size_t a, std::size_t b) { return shortlex_less(class_rep_[a], class_rep_[b]); });

  append_.assign(class_rep_.size(), std::vector<std::size_t>(gens_.size(), npos));
  prepend_.assign(class_rep_.size(), std::vector<std::size_t>(gens_.size(), npos));
  for (std::size_t k = 0; k < class_rep_.size(); ++k) {
    const Path& rep = class_rep_[k];
    for (GenId f : out_[target(rep)]) {
      Path q = rep;
      q.components.push_back(f);
      append_[k][f] = path_to_class_[index_of(q)];
    }
    for (GenId f : in_[rep.source]) {
      Path q{gens_[f].dom, {f}};
      q.components.insert(q.components.end(), rep.components.begin(), rep.components.end());
      prepend_[k][f] = path_to_class_[index_of(q)];
    }
  }
}

std::optional<ObId> Schema::find_object(const std::string& name) const {
  auto it = std::find(pres_.objects.begin(), pres_.objects.end(), name);
  if (it == pres_.objects.end()) return std::nullopt;
  return static_cast<ObId>(it - pres_.objects.begin());
}

std::optional<GenId> Schema::find_generator(const std::string& name) const {
  for (GenId f = 0; f < pres_.generators.size(); ++f)
    if (pres_.generators[f].name == name) return f;
  return std::nullopt;
}

ObId Schema::object(const std::string& name) const {
  if (auto c = find_object(name)) return *c;
  throw UnknownReference("unknown object '" + name + "'");
}

GenId Schema::generator_id(const std::string& name) const {
  if (auto f = find_generator(name)) return *f;
  throw UnknownReference("unknown generator '" + name + "'");
}

ObId Schema::target(const Path& p) const {
  return p.components.empty() ? p.source : gens_[p.components.back()].cod;
}

bool Schema::composable(const Path& p) const {
  if (p.source >= num_objects()) return false;
  ObId at = p.source;
  for (GenId f : p.components) {
    if (f >= gens_.size() || gens_[f].dom != at) return false;
    at = gens_[f].cod;
  }
  return true;
}

std::string Schema::path_string(const Path& p) const {
  if (p.components.empty()) return "id(" + object_name(p.source) + ")";
  std::string s;
  for (GenId f : p.components) s += (s.empty() ? "" : ";") + gens_[f].name;
  return s;
}

std::string Schema::equation_string(std::size_t i) const {
  return path_string(eqs_.at(i).lhs) + " = " + path_string(eqs_.at(i).rhs);
}

void Schema::require_acyclic() const {
  if (!acyclic_) throw CyclicSchema();
}

std::vector<std::vector<Path>> Schema::hom_paths(ObId a, ObId b) const {
  require_acyclic();
  std::vector<std::vector<Path>> out;
  for (std::size_t k : classes_from_.at(a)) {
    if (target(class_rep_[k]) != b) continue;
    std::vector<Path> cls;
    for (std::size_t i : class_members_[k]) cls.push_back(all_paths_[i]);
    out.push_back(std::move(cls));
  }
  return out;
}

std::size_t Schema::path_class(const Path& p) const {
  require_acyclic();
  if (!composable(p)) throw EndpointMismatch("path does not compose");
  auto it = std::lower_bound(all_paths_.begin(), all_paths_.end(), p);
  return path_to_class_[static_cast<std::size_t>(it - all_paths_.begin())];
}

bool Schema::paths_equal(const Path& p, const Path& q) const {
  require_acyclic();
  if (!composable(p) || !composable(q)) throw EndpointMismatch("path does not compose");
  if (p.source != q.source || target(p) != target(q))
    throw EndpointMismatch("paths have different endpoints");
  return path_class(p) == path_class(q);
}

const Path& Schema::class_representative(std::size_t cls) const { return class_rep_.at(cls); }

const std::vector<std::size_t>& Schema::classes_from(ObId c) const {
  require_acyclic();
  return classes_from_.at(c);
}

std::size_t Schema::class_append(std::size_t cls, GenId f) const {
  require_acyclic();
  return append_.at(cls).at(f);
}

std::size_t Schema::class_prepend(GenId f, std::size_t cls) const {
  require_acyclic();
  return prepend_.at(cls).at(f);
}

SchemaPtr Schema::without_equations() const {
  SchemaPresentation p = pres_;
  p.equations.clear();
  p.name.reset();
  return Schema::make(std::move(p));
}

bool same_schema(const SchemaPtr& a, const SchemaPtr& b) { return a == b || (a && b && *a == *b); }

SchemaPtr set_schema() {
  static const SchemaPtr s = Schema::make({"Set", {"X"}, {}, {}});
  return s;
}

SchemaPtr graph_schema() {
  static const SchemaPtr s = Schema::make({"Graph", {"V", "E"}, {{"src", "E", "V"}, {"tgt", "E", "V"}}, {}});
  return s;
}

SchemaPtr delta2_schema(bool equations) {
  // Triangle (a,b,c): d1 = a->b, d2 = b->c, d0 = a->c.
  static const SchemaPtr with_eqs = Schema::make(
      {"Delta2",
       {"V", "E", "T"},
       {{"src", "E", "V"}, {"tgt", "E", "V"}, {"d0", "T", "E"}, {"d1", "T", "E"}, {"d2", "T", "E"}},
       {{{"T", {"d1", "tgt"}}, {"T", {"d2", "src"}}},
        {{"T", {"d0", "src"}}, {"T", {"d1", "src"}}},
        {{"T", {"d0", "tgt"}}, {"T", {"d2", "tgt"}}}}});
  static const SchemaPtr free = [] {
    SchemaPresentation p = with_eqs->presentation();
    p.name = "Delta2Free";
    p.equations.clear();
    return Schema::make(std::move(p));
  }();
  return equations ? with_eqs : free;
}

}  // namespace catrw
