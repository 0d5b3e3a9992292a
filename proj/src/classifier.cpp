#include <algorithm>

#include "catrw/colimits.hpp"

namespace catrw {

namespace {

// Elements of the representable at c: path classes out of c, with the
// position of each class in classes_from(c).
struct Representable {
  std::vector<std::size_t> classes;           // sorted as in classes_from(c)
  std::vector<std::size_t> position;          // class id -> index, or npos
  std::vector<std::size_t> order;             // indices, predecessors first
  std::vector<std::vector<std::pair<std::size_t, GenId>>> preds;  // index -> (index, f) with pred;f = it
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Representable representable(const Schema& s, ObId c) {
  Representable r;
  r.classes = s.classes_from(c);
  r.position.assign(s.num_path_classes(), npos);
  for (std::size_t i = 0; i < r.classes.size(); ++i) r.position[r.classes[i]] = i;
  r.preds.resize(r.classes.size());
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const ObId d = s.target(s.class_representative(r.classes[i]));
    for (GenId f : s.outgoing(d)) r.preds[r.position[s.class_append(r.classes[i], f)]].emplace_back(i, f);
  }
  r.order.resize(r.classes.size());
  for (std::size_t i = 0; i < r.order.size(); ++i) r.order[i] = i;
  std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
    return s.topological_rank(s.target(s.class_representative(r.classes[a]))) <
           s.topological_rank(s.target(s.class_representative(r.classes[b])));
  });
  return r;
}

// Every natural partial map from the representable at c into X, i.e. every
// choice of subfunctor S and natural h : S -> X.
void enumerate_partial_maps(const Schema& s, const Representable& r, const CSet& X,
                            std::vector<std::vector<Part>>& out) {
  std::vector<Part> h(r.classes.size(), kNoPart);
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == r.order.size()) {
      out.push_back(h);
      return;
    }
    const std::size_t e = r.order[k];
    Part forced = kNoPart;
    for (auto [p, f] : r.preds[e]) {
      if (h[p] == kNoPart) continue;
      const Part v = X.subpart(f, h[p]);
      if (forced != kNoPart && forced != v) return;
      forced = v;
    }
    if (forced != kNoPart) {
      h[e] = forced;
      self(self, k + 1);
      h[e] = kNoPart;
      return;
    }
    self(self, k + 1);
    const ObId d = s.target(s.class_representative(r.classes[e]));
    for (Part v = 0; v < X.card(d); ++v) {
      h[e] = v;
      self(self, k + 1);
    }
    h[e] = kNoPart;
  };
  rec(rec, 0);
}

}  // namespace

Part PartialMapClassifier::find(ObId c, const std::vector<Part>& h) const {
  auto it = lookup_[c].find(h);
  if (it == lookup_[c].end()) throw std::out_of_range("partial map not present in the classifier");
  return it->second;
}

PartialMapClassifier partial_map_classifier(const CSetPtr& X) {
  const Schema& s = X->schema();
  if (!s.is_acyclic()) throw CyclicSchema();
  const std::size_t nobj = s.num_objects();

  std::vector<Representable> reps;
  for (ObId c = 0; c < nobj; ++c) reps.push_back(representable(s, c));

  PartialMapClassifier out;
  out.records.resize(nobj);
  out.lookup_.resize(nobj);
  std::vector<std::size_t> card(nobj);
  for (ObId c = 0; c < nobj; ++c) {
    enumerate_partial_maps(s, reps[c], *X, out.records[c]);
    for (Part i = 0; i < out.records[c].size(); ++i) out.lookup_[c].emplace(out.records[c][i], i);
    card[c] = out.records[c].size();
  }

  // (S, h) . f = (f*S, h(f ; -)).
  std::vector<std::vector<Part>> cols(s.num_generators());
  for (GenId f = 0; f < s.num_generators(); ++f) {
    const auto& g = s.generator(f);
    const auto& from = reps[g.dom];
    const auto& to = reps[g.cod];
    std::vector<std::size_t> pull(to.classes.size());
    for (std::size_t j = 0; j < to.classes.size(); ++j) pull[j] = from.position[s.class_prepend(f, to.classes[j])];
    for (const auto& h : out.records[g.dom]) {
      std::vector<Part> moved(to.classes.size());
      for (std::size_t j = 0; j < moved.size(); ++j) moved[j] = h[pull[j]];
      cols[f].push_back(out.lookup_[g.cod].at(moved));
    }
  }
  out.T = share(make_instance_unchecked(X->schema_ptr(), card, std::move(cols)));

  std::vector<std::vector<Part>> eta(nobj);
  for (ObId c = 0; c < nobj; ++c)
    for (Part x = 0; x < X->card(c); ++x) {
      std::vector<Part> h(reps[c].classes.size());
      for (std::size_t j = 0; j < h.size(); ++j) h[j] = X->evaluate(s.class_representative(reps[c].classes[j]), x);
      eta[c].push_back(out.lookup_[c].at(h));
    }
  out.eta = Transformation(X, out.T, std::move(eta));
  return out;
}

Transformation characteristic_map(const Transformation& m, const PartialMapClassifier& TL) {
  if (!m.is_monic()) throw NotMonic("characteristic map needs a monic map");
  const Schema& s = m.schema();
  const CSet& G = m.cod();
  const std::size_t nobj = s.num_objects();
  std::vector<std::vector<Part>> inverse(nobj);
  for (ObId c = 0; c < nobj; ++c) {
    inverse[c].assign(G.card(c), kNoPart);
    for (Part x = 0; x < m.dom().card(c); ++x) inverse[c][m(c, x)] = x;
  }
  std::vector<std::vector<Part>> comp(nobj);
  for (ObId c = 0; c < nobj; ++c) {
    const auto& classes = s.classes_from(c);
    for (Part g = 0; g < G.card(c); ++g) {
      std::vector<Part> h(classes.size());
      for (std::size_t j = 0; j < classes.size(); ++j) {
        const Path& p = s.class_representative(classes[j]);
        h[j] = inverse[s.target(p)][G.evaluate(p, g)];
      }
      comp[c].push_back(TL.find(c, h));
    }
  }
  return Transformation(m.cod_ptr(), TL.T, std::move(comp));
}

Transformation classifier_map(const Transformation& f, const PartialMapClassifier& TA,
                              const PartialMapClassifier& TB) {
  const Schema& s = f.schema();
  std::vector<std::vector<Part>> comp(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c) {
    const auto& classes = s.classes_from(c);
    for (const auto& h : TA.records[c]) {
      std::vector<Part> moved(h.size());
      for (std::size_t j = 0; j < h.size(); ++j)
        moved[j] = h[j] == kNoPart ? kNoPart : f(s.target(s.class_representative(classes[j])), h[j]);
      comp[c].push_back(TB.find(c, moved));
    }
  }
  return Transformation(TA.T, TB.T, std::move(comp));
}

FinalPullbackComplement final_pullback_complement(const Transformation& l, const Transformation& m) {
  if (!same_instance(l.cod_ptr(), m.dom_ptr())) throw std::invalid_argument("final pullback complement: maps not composable");
  if (!l.schema().is_acyclic()) throw CyclicSchema();
  if (!m.is_monic()) throw NotMonic("final pullback complement: match must be monic");
  const auto TI = partial_map_classifier(l.dom_ptr());
  const auto TL = partial_map_classifier(l.cod_ptr());
  const auto chi = characteristic_map(m, TL);
  const auto Tl = classifier_map(l, TI, TL);
  const auto pb = pullback(chi, Tl);
  return {pb.universal(compose(l, m), TI.eta), pb.left};
}

}  // namespace catrw
