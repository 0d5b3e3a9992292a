#include "catrw/hom_search.hpp"

#include <algorithm>

namespace catrw {

namespace {

struct Candidates {
  std::span<const Part> list;  // used when !all
  bool all = true;
  std::size_t size = 0;
  Part at(std::size_t i) const { return all ? static_cast<Part>(i) : list[i]; }
};

class Backtracker {
 public:
  Backtracker(const CSet& X, const CSet& Y, const SearchOptions& opts)
      : X_(X), Y_(Y), s_(X.schema()), opts_(opts) {
    const std::size_t n = s_.num_objects();
    comp_.resize(n);
    if (opts_.monic) inv_.resize(n);
    for (ObId c = 0; c < n; ++c) {
      comp_[c].assign(X_.card(c), kNoPart);
      if (opts_.monic) inv_[c].assign(Y_.card(c), kNoPart);
      for (Part x = 0; x < X_.card(c); ++x) vars_.emplace_back(c, x);
    }
  }

  template <class OnSolution>
  void run(OnSolution&& on_solution) {
    if (opts_.monic)
      for (ObId c = 0; c < s_.num_objects(); ++c)
        if (X_.card(c) > Y_.card(c)) return;
    for (ObId c = 0; c < opts_.initial.size() && c < s_.num_objects(); ++c) {
      const auto& row = opts_.initial[c];
      for (Part x = 0; x < row.size() && x < X_.card(c); ++x) {
        if (row[x] == kNoPart) continue;
        if (row[x] >= Y_.card(c) || !assign(c, x, row[x])) return;
      }
    }
    dfs(0, on_solution);
  }

 private:
  // Assign x -> y and propagate along every outgoing column. Returns false on
  // conflict; the caller rolls back through the trail.
  bool assign(ObId c, Part x, Part y) {
    Part& slot = comp_[c][x];
    if (slot != kNoPart) return slot == y;
    if (opts_.monic) {
      if (inv_[c][y] != kNoPart) return false;
      inv_[c][y] = x;
    }
    slot = y;
    trail_.emplace_back(c, x);
    for (GenId f : s_.outgoing(c))
      if (!assign(s_.generator(f).cod, X_.subpart(f, x), Y_.subpart(f, y))) return false;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [c, x] = trail_.back();
      trail_.pop_back();
      if (opts_.monic) inv_[c][comp_[c][x]] = kNoPart;
      comp_[c][x] = kNoPart;
    }
  }

  Candidates candidates(ObId c, Part x) const {
    Candidates best;
    best.size = Y_.card(c);
    for (GenId f : s_.outgoing(c)) {
      const Part image = comp_[s_.generator(f).cod][X_.subpart(f, x)];
      if (image == kNoPart) continue;
      auto pre = Y_.incident(f, image);
      if (best.all || pre.size() < best.size) best = Candidates{pre, false, pre.size()};
    }
    return best;
  }

  // Cheap necessary condition from incoming columns.
  bool plausible(ObId c, Part x, Part y) const {
    for (GenId g : s_.incoming(c)) {
      const std::size_t need = X_.incident(g, x).size();
      if (need == 0) continue;
      const std::size_t have = Y_.incident(g, y).size();
      if (have == 0 || (opts_.monic && have < need)) return false;
    }
    return true;
  }

  std::optional<std::size_t> choose(std::size_t from) const {
    if (opts_.order == VariableOrder::Declaration) {
      for (std::size_t i = from; i < vars_.size(); ++i)
        if (comp_[vars_[i].first][vars_[i].second] == kNoPart) return i;
      return std::nullopt;
    }
    // Fewest candidates first; ties go to objects earlier in topological
    // order, whose assignment propagates furthest.
    std::optional<std::size_t> best;
    std::pair<std::size_t, std::size_t> best_key{};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto [c, x] = vars_[i];
      if (comp_[c][x] != kNoPart) continue;
      const std::pair<std::size_t, std::size_t> key{candidates(c, x).size,
                                                    s_.is_acyclic() ? s_.topological_rank(c) : 0};
      if (!best || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    return best;
  }

  // Returns false once the caller asked to stop.
  template <class OnSolution>
  bool dfs(std::size_t from, OnSolution& on_solution) {
    auto next = choose(from);
    if (!next) return on_solution(comp_);
    auto [c, x] = vars_[*next];
    const Candidates cand = candidates(c, x);
    for (std::size_t i = 0; i < cand.size; ++i) {
      const Part y = cand.at(i);
      if (opts_.monic && inv_[c][y] != kNoPart) continue;
      if (!plausible(c, x, y)) continue;
      const std::size_t mark = trail_.size();
      const bool ok = assign(c, x, y);
      const bool keep_going = !ok || dfs(*next + 1, on_solution);
      undo(mark);
      if (!keep_going) return false;
    }
    return true;
  }

  const CSet& X_;
  const CSet& Y_;
  const Schema& s_;
  const SearchOptions& opts_;
  std::vector<std::vector<Part>> comp_, inv_;
  std::vector<std::pair<ObId, Part>> vars_;
  std::vector<std::pair<ObId, Part>> trail_;
};

void check_schemas(const CSetPtr& X, const CSetPtr& Y) {
  if (!same_schema(X->schema_ptr(), Y->schema_ptr()))
    throw SchemaMismatch("homomorphism search between instances on different schemas");
}

}  // namespace

std::vector<Transformation> homomorphisms(const CSetPtr& X, const CSetPtr& Y, const SearchOptions& opts) {
  check_schemas(X, Y);
  if (opts.limit && *opts.limit == 0) return {};
  std::vector<std::vector<std::vector<Part>>> found;
  // Without a limit the declaration-order result is just the sorted set of
  // all solutions, so any search order will do.
  SearchOptions eff = opts;
  if (!opts.limit) eff.order = VariableOrder::MostConstrained;
  Backtracker search(*X, *Y, eff);
  search.run([&](const std::vector<std::vector<Part>>& comp) {
    found.push_back(comp);
    return !opts.limit || found.size() < *opts.limit;
  });
  if (eff.order != VariableOrder::Declaration) std::sort(found.begin(), found.end());
  std::vector<Transformation> out;
  out.reserve(found.size());
  for (auto& comp : found) out.emplace_back(X, Y, std::move(comp));
  return out;
}

std::optional<Transformation> find_homomorphism(const CSetPtr& X, const CSetPtr& Y, SearchOptions opts) {
  opts.limit = 1;
  auto all = homomorphisms(X, Y, opts);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::size_t count_homomorphisms(const CSetPtr& X, const CSetPtr& Y, const SearchOptions& opts) {
  check_schemas(X, Y);
  if (opts.limit && *opts.limit == 0) return 0;
  std::size_t n = 0;
  // The count does not depend on the search order.
  SearchOptions eff = opts;
  eff.order = VariableOrder::MostConstrained;
  Backtracker search(*X, *Y, eff);
  search.run([&](const std::vector<std::vector<Part>>&) {
    ++n;
    return !opts.limit || n < *opts.limit;
  });
  return n;
}

std::optional<Transformation> is_isomorphic(const CSetPtr& X, const CSetPtr& Y) {
  check_schemas(X, Y);
  for (ObId c = 0; c < X->schema().num_objects(); ++c)
    if (X->card(c) != Y->card(c)) return std::nullopt;
  SearchOptions opts;
  opts.monic = true;
  opts.order = VariableOrder::MostConstrained;
  return find_homomorphism(X, Y, opts);
}

}  // namespace catrw
