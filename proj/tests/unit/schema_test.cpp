#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "catrw/errors.hpp"
#include "catrw/schema.hpp"
#include "support/random.hpp"

using namespace catrw;

namespace {

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

// All paths out of every object, by brute force.
std::vector<Path> all_paths(const Schema& s) {
  std::vector<Path> out;
  std::function<void(Path)> walk = [&](Path p) {
    out.push_back(p);
    for (GenId f : s.outgoing(s.target(p))) {
      Path q = p;
      q.components.push_back(f);
      walk(q);
    }
  };
  for (ObId c = 0; c < s.num_objects(); ++c) walk(Path{c, {}});
  return out;
}

Path concat(const Path& a, const Path& b) {
  Path out = a;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  return out;
}

// Congruence closure by repeated whiskering until nothing changes.
std::vector<std::size_t> closure_classes(const Schema& s, const std::vector<Path>& paths) {
  std::vector<std::size_t> cls(paths.size());
  std::iota(cls.begin(), cls.end(), 0);
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
  auto merge = [&](std::size_t a, std::size_t b) {
    const std::size_t from = std::max(cls[a], cls[b]), to = std::min(cls[a], cls[b]);
    if (from == to) return false;
    for (auto& c : cls)
      if (c == from) c = to;
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& eq : s.equations())
      for (const auto& r : paths) {
        if (s.target(r) != eq.lhs.source) continue;
        for (const auto& t : paths) {
          if (t.source != s.target(eq.lhs)) continue;
          changed |= merge(index.at(concat(concat(r, eq.lhs), t)), index.at(concat(concat(r, eq.rhs), t)));
        }
      }
  }
  return cls;
}

}  // namespace

TEST(ValidateSchema, WellFormedBuiltins) {
  EXPECT_TRUE(validate_schema(graph_schema()->presentation()).empty());
  EXPECT_TRUE(validate_schema(delta2_schema()->presentation()).empty());
  EXPECT_TRUE(validate_schema(set_schema()->presentation()).empty());
}

TEST(ValidateSchema, UnknownDomainIsNamed) {
  SchemaPresentation p{std::nullopt, {"V", "E"}, {{"src", "W", "V"}}, {}};
  const auto v = validate_schema(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(mentions(v, "'W'"));
  EXPECT_THROW(Schema{p}, InvalidSchema);
}

TEST(ValidateSchema, DuplicateNamesAndBadEquations) {
  SchemaPresentation p{std::nullopt, {"A", "B"}, {{"A", "A", "B"}, {"g", "A", "B"}, {"h", "B", "A"}}, {}};
  EXPECT_TRUE(mentions(validate_schema(p), "duplicate name 'A'"));

  SchemaPresentation q{std::nullopt, {"A", "B"}, {{"f", "A", "B"}, {"h", "B", "A"}}, {{{"A", {"f"}}, {"A", {}}}}};
  EXPECT_TRUE(mentions(validate_schema(q), "endpoints differ"));

  SchemaPresentation r{std::nullopt, {"A", "B"}, {{"f", "A", "B"}}, {{{"A", {"f", "f"}}, {"A", {"f"}}}}};
  EXPECT_TRUE(mentions(validate_schema(r), "does not compose"));

  SchemaPresentation u{std::nullopt, {"A"}, {}, {{{"A", {"nope"}}, {"A", {}}}}};
  EXPECT_TRUE(mentions(validate_schema(u), "unknown generator 'nope'"));
}

TEST(Acyclic, Examples) {
  EXPECT_TRUE(graph_schema()->is_acyclic());
  EXPECT_TRUE(delta2_schema()->is_acyclic());
  EXPECT_FALSE(Schema({std::nullopt, {"X"}, {{"f", "X", "X"}}, {}}).is_acyclic());
  EXPECT_FALSE(Schema({std::nullopt, {"X", "Y"}, {{"f", "X", "Y"}, {"g", "Y", "X"}}, {}}).is_acyclic());
}

TEST(Acyclic, TopologicalOrderRespectsGenerators) {
  const auto s = delta2_schema();
  for (GenId f = 0; f < s->num_generators(); ++f)
    EXPECT_LT(s->topological_rank(s->generator(f).dom), s->topological_rank(s->generator(f).cod));
}

TEST(HomPaths, GraphEdgeToVertex) {
  const auto s = graph_schema();
  const auto classes = s->hom_paths(s->object("E"), s->object("V"));
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0], (std::vector<Path>{{s->object("E"), {s->generator_id("src")}}}));
  EXPECT_EQ(classes[1], (std::vector<Path>{{s->object("E"), {s->generator_id("tgt")}}}));
}

TEST(HomPaths, IdentityClass) {
  const auto s = delta2_schema();
  for (ObId c = 0; c < s->num_objects(); ++c) {
    const auto classes = s->hom_paths(c, c);
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].front(), (Path{c, {}}));
  }
}

TEST(HomPaths, Delta2TriangleToVertexMatchesClosure) {
  const auto s = delta2_schema();
  const ObId T = s->object("T"), V = s->object("V");
  const auto classes = s->hom_paths(T, V);
  // Three corners of a triangle.
  ASSERT_EQ(classes.size(), 3u);

  const auto paths = all_paths(*s);
  const auto cls = closure_classes(*s, paths);
  std::set<std::size_t> oracle_classes;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (paths[i].source == T && s->target(paths[i]) == V) oracle_classes.insert(cls[i]);
  EXPECT_EQ(oracle_classes.size(), 3u);

  auto index_of = [&](const Path& p) {
    return static_cast<std::size_t>(std::find(paths.begin(), paths.end(), p) - paths.begin());
  };
  for (const auto& a : classes)
    for (const auto& b : classes)
      for (const auto& p : a)
        for (const auto& q : b) EXPECT_EQ(&a == &b, cls[index_of(p)] == cls[index_of(q)]);
}

TEST(HomPaths, CanonicalRepresentativeIsShortestThenLexicographic) {
  const auto s = delta2_schema();
  for (const auto& cls : s->hom_paths(s->object("T"), s->object("V")))
    for (const auto& p : cls) {
      const auto& rep = cls.front();
      EXPECT_TRUE(rep.components.size() < p.components.size() ||
                  (rep.components.size() == p.components.size() && rep.components <= p.components));
    }
}

TEST(HomPaths, CyclicSchemaThrows) {
  Schema s({std::nullopt, {"X"}, {{"f", "X", "X"}}, {}});
  EXPECT_THROW(s.hom_paths(0, 0), CyclicSchema);
  EXPECT_THROW(s.paths_equal({0, {}}, {0, {0}}), CyclicSchema);
}

TEST(PathsEqual, Examples) {
  const auto d = delta2_schema();
  const ObId T = d->object("T");
  const GenId src = d->generator_id("src"), tgt = d->generator_id("tgt");
  const GenId d0 = d->generator_id("d0"), d1 = d->generator_id("d1"), d2 = d->generator_id("d2");
  EXPECT_TRUE(d->paths_equal({T, {d1, tgt}}, {T, {d2, src}}));
  EXPECT_TRUE(d->paths_equal({T, {d0, src}}, {T, {d1, src}}));
  EXPECT_FALSE(d->paths_equal({T, {d0, src}}, {T, {d0, tgt}}));
  EXPECT_TRUE(d->paths_equal({T, {d0}}, {T, {d0}}));

  const auto g = graph_schema();
  const ObId E = g->object("E");
  EXPECT_FALSE(g->paths_equal({E, {g->generator_id("src")}}, {E, {g->generator_id("tgt")}}));
  EXPECT_THROW(g->paths_equal({E, {g->generator_id("src")}}, {E, {}}), EndpointMismatch);
}

TEST(PathsEqual, FreeSchemaCountsDistinctPaths) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = gen::acyclic_schema(rng, 3, false);
    const auto paths = all_paths(*s);
    for (ObId a = 0; a < s->num_objects(); ++a)
      for (ObId b = 0; b < s->num_objects(); ++b) {
        std::size_t n = 0;
        for (const auto& p : paths) n += p.source == a && s->target(p) == b;
        EXPECT_EQ(s->hom_paths(a, b).size(), n);
      }
  }
}

TEST(PathsEqual, CongruenceOnRandomSchemas) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = gen::acyclic_schema(rng, 3, true);
    const auto paths = all_paths(*s);
    const auto cls = closure_classes(*s, paths);
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (std::size_t j = 0; j < paths.size(); ++j) {
        const Path &p = paths[i], &q = paths[j];
        if (p.source != q.source || s->target(p) != s->target(q)) continue;
        const bool eq = s->paths_equal(p, q);
        ASSERT_EQ(eq, cls[i] == cls[j]) << s->path_string(p) << " vs " << s->path_string(q);
        if (!eq) continue;
        // Whiskering on both sides preserves equality.
        for (const auto& r : paths) {
          if (s->target(r) != p.source) continue;
          for (const auto& t : paths)
            if (t.source == s->target(p)) EXPECT_TRUE(s->paths_equal(concat(concat(r, p), t), concat(concat(r, q), t)));
        }
      }
  }
}

TEST(PathClasses, AppendAndPrependAgreeWithPaths) {
  const auto s = delta2_schema();
  for (std::size_t cls = 0; cls < s->num_path_classes(); ++cls) {
    const Path& rep = s->class_representative(cls);
    for (GenId f : s->outgoing(s->target(rep)))
      EXPECT_EQ(s->class_append(cls, f), s->path_class(concat(rep, Path{s->target(rep), {f}})));
    for (GenId f : s->incoming(rep.source))
      EXPECT_EQ(s->class_prepend(f, cls), s->path_class(concat(Path{s->generator(f).dom, {f}}, rep)));
  }
}

TEST(SchemaMisc, EquationStringAndWithoutEquations) {
  const auto d = delta2_schema();
  EXPECT_EQ(d->equation_string(0), "d1;tgt = d2;src");
  const auto free = d->without_equations();
  EXPECT_TRUE(free->equations().empty());
  EXPECT_FALSE(free->name().has_value());
  EXPECT_EQ(free->num_generators(), d->num_generators());
  EXPECT_THROW(d->object("Q"), UnknownReference);
  EXPECT_THROW(d->generator_id("q"), UnknownReference);
}
