#include "catrw/transformation.hpp"

#include <deque>

namespace catrw {

Transformation::Transformation(CSetPtr dom, CSetPtr cod, std::vector<std::vector<Part>> components)
    : dom_(std::move(dom)), cod_(std::move(cod)), comp_(std::move(components)) {
  if (!same_schema(dom_->schema_ptr(), cod_->schema_ptr()))
    throw SchemaMismatch("transformation between instances on different schemas");
  if (comp_.size() != dom_->schema().num_objects())
    throw std::invalid_argument("transformation needs one component per object");
  for (ObId c = 0; c < comp_.size(); ++c)
    if (comp_[c].size() != dom_->card(c))
      throw std::invalid_argument("component for '" + dom_->schema().object_name(c) + "' has wrong length");
}

Transformation Transformation::identity(const CSetPtr& x) {
  std::vector<std::vector<Part>> comp(x->schema().num_objects());
  for (ObId c = 0; c < comp.size(); ++c)
    for (Part p = 0; p < x->card(c); ++p) comp[c].push_back(p);
  return Transformation(x, x, std::move(comp));
}

Transformation Transformation::from_empty(const CSetPtr& empty, const CSetPtr& cod) {
  if (empty->total_parts() != 0) throw std::invalid_argument("from_empty: domain is not empty");
  return Transformation(empty, cod, std::vector<std::vector<Part>>(empty->schema().num_objects()));
}

bool Transformation::is_monic() const {
  for (ObId c = 0; c < comp_.size(); ++c) {
    std::vector<bool> seen(cod_->card(c), false);
    for (Part y : comp_[c]) {
      if (seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

bool Transformation::is_epic() const {
  for (ObId c = 0; c < comp_.size(); ++c) {
    std::vector<bool> seen(cod_->card(c), false);
    std::size_t hit = 0;
    for (Part y : comp_[c])
      if (!seen[y]) {
        seen[y] = true;
        ++hit;
      }
    if (hit != cod_->card(c)) return false;
  }
  return true;
}

bool Transformation::operator==(const Transformation& o) const {
  return comp_ == o.comp_ && same_instance(dom_, o.dom_) && same_instance(cod_, o.cod_);
}

bool same_instance(const CSetPtr& a, const CSetPtr& b) { return a == b || (a && b && *a == *b); }

Transformation compose(const Transformation& f, const Transformation& g) {
  if (!same_instance(f.cod_ptr(), g.dom_ptr())) throw std::invalid_argument("compose: maps are not composable");
  std::vector<std::vector<Part>> comp(f.schema().num_objects());
  for (ObId c = 0; c < comp.size(); ++c)
    for (Part y : f.component(c)) comp[c].push_back(g(c, y));
  return Transformation(f.dom_ptr(), g.cod_ptr(), std::move(comp));
}

std::vector<NaturalityViolation> is_natural(const Transformation& t) {
  const Schema& s = t.schema();
  const CSet& X = t.dom();
  const CSet& Y = t.cod();
  std::vector<NaturalityViolation> out;
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part y : t.component(c))
      if (y >= Y.card(c)) {
        out.push_back({kNoPart, y});
        return out;
      }
  for (GenId f = 0; f < s.num_generators(); ++f) {
    const auto& g = s.generator(f);
    for (Part x = 0; x < X.card(g.dom); ++x)
      if (Y.subpart(f, t(g.dom, x)) != t(g.cod, X.subpart(f, x))) out.push_back({f, x});
  }
  return out;
}

Transformation subobject(const CSetPtr& x, const std::vector<std::vector<bool>>& keep) {
  const Schema& s = x->schema();
  std::vector<std::vector<Part>> doomed(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part p = 0; p < x->card(c); ++p)
      if (!keep[c][p]) doomed[c].push_back(p);
  CSet sub = *x;
  auto renum = sub.remove_parts(doomed);
  std::vector<std::vector<Part>> incl(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c) {
    incl[c].resize(sub.card(c));
    for (Part p = 0; p < renum[c].size(); ++p)
      if (renum[c][p] != kNoPart) incl[c][renum[c][p]] = p;
  }
  return Transformation(share(std::move(sub)), x, std::move(incl));
}

std::vector<std::vector<bool>> generated_subobject(const CSet& x, const std::vector<std::vector<bool>>& seed) {
  const Schema& s = x.schema();
  auto in = seed;
  std::deque<std::pair<ObId, Part>> work;
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part p = 0; p < x.card(c); ++p)
      if (in[c][p]) work.emplace_back(c, p);
  while (!work.empty()) {
    auto [c, p] = work.front();
    work.pop_front();
    for (GenId f : s.outgoing(c)) {
      const ObId d = s.generator(f).cod;
      const Part q = x.subpart(f, p);
      if (!in[d][q]) {
        in[d][q] = true;
        work.emplace_back(d, q);
      }
    }
  }
  return in;
}

std::vector<std::vector<bool>> avoiding_subobject(const CSet& x, const std::vector<std::vector<bool>>& doomed) {
  const Schema& s = x.schema();
  auto gone = doomed;
  std::deque<std::pair<ObId, Part>> work;
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part p = 0; p < x.card(c); ++p)
      if (gone[c][p]) work.emplace_back(c, p);
  while (!work.empty()) {
    auto [c, p] = work.front();
    work.pop_front();
    for (GenId f : s.incoming(c)) {
      const ObId d = s.generator(f).dom;
      for (Part q : x.incident(f, p))
        if (!gone[d][q]) {
          gone[d][q] = true;
          work.emplace_back(d, q);
        }
    }
  }
  for (auto& row : gone) row.flip();
  return gone;
}

}  // namespace catrw
