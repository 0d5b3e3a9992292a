#include "support/random.hpp"

#include <functional>

#include "catrw/hom_search.hpp"

namespace gen {

using catrw::GenId;
using catrw::ObId;
using catrw::Part;

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

SchemaPtr acyclic_schema(Rng& rng, std::size_t max_objects, bool equations) {
  catrw::SchemaPresentation p;
  const std::size_t n = uniform(rng, 1, max_objects);
  for (std::size_t i = 0; i < n; ++i) p.objects.push_back(std::string(1, static_cast<char>('A' + i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = uniform(rng, 0, 2); k > 0 && p.generators.size() < 4; --k)
        p.generators.push_back({"f" + std::to_string(p.generators.size() + 1), p.objects[i], p.objects[j]});

  if (equations) {
    // Parallel pairs of nonempty paths.
    std::vector<catrw::PathSpec> paths;
    std::vector<std::string> targets;
    std::function<void(catrw::PathSpec, const std::string&)> walk = [&](catrw::PathSpec ps, const std::string& at) {
      if (!ps.components.empty()) {
        paths.push_back(ps);
        targets.push_back(at);
      }
      for (const auto& g : p.generators)
        if (g.dom == at) {
          auto q = ps;
          q.components.push_back(g.name);
          walk(q, g.cod);
        }
    };
    for (const auto& ob : p.objects) walk({ob, {}}, ob);
    std::vector<std::pair<std::size_t, std::size_t>> parallel;
    for (std::size_t a = 0; a < paths.size(); ++a)
      for (std::size_t b = a + 1; b < paths.size(); ++b)
        if (paths[a].source == paths[b].source && targets[a] == targets[b]) parallel.emplace_back(a, b);
    std::shuffle(parallel.begin(), parallel.end(), rng);
    const std::size_t k = parallel.empty() ? 0 : uniform(rng, 0, std::min<std::size_t>(2, parallel.size()));
    for (std::size_t i = 0; i < k; ++i) p.equations.emplace_back(paths[parallel[i].first], paths[parallel[i].second]);
  }
  return catrw::Schema::make(std::move(p));
}

CSet instance(Rng& rng, const SchemaPtr& s, std::size_t max_parts) {
  const std::size_t n = s->num_objects();
  std::vector<std::size_t> card(n, 0);
  // Objects are drawn sinks first so a populated object never maps into an
  // empty one.
  const auto& topo = s->topological_order();
  for (std::size_t k = n; k-- > 0;) {
    const ObId c = topo[k];
    card[c] = uniform(rng, 0, max_parts);
    for (GenId f : s->outgoing(c))
      if (card[s->generator(f).cod] == 0) card[c] = 0;
  }
  auto draw = [&](bool constant) {
    std::vector<std::vector<Part>> cols(s->num_generators());
    for (GenId f = 0; f < s->num_generators(); ++f) {
      const auto& g = s->generator(f);
      for (Part x = 0; x < card[g.dom]; ++x)
        cols[f].push_back(constant ? 0 : static_cast<Part>(uniform(rng, 0, card[g.cod] - 1)));
    }
    return catrw::make_instance_unchecked(s, card, std::move(cols));
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    CSet x = draw(false);
    if (catrw::validate_instance(x).empty()) return x;
  }
  return draw(true);
}

std::optional<Transformation> hom(Rng& rng, const CSetPtr& X, const CSetPtr& Y, bool monic) {
  catrw::SearchOptions opts;
  opts.monic = monic;
  auto all = catrw::homomorphisms(X, Y, opts);
  if (all.empty()) return std::nullopt;
  return all[uniform(rng, 0, all.size() - 1)];
}

Transformation sub_inclusion(Rng& rng, const CSetPtr& X) {
  const auto& s = X->schema();
  std::vector<std::vector<bool>> seed(s.num_objects());
  for (ObId c = 0; c < s.num_objects(); ++c)
    for (Part x = 0; x < X->card(c); ++x) seed[c].push_back(uniform(rng, 0, 2) == 0);
  return catrw::subobject(X, catrw::generated_subobject(*X, seed));
}

}  // namespace gen
