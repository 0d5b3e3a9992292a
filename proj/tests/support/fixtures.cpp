#include "support/fixtures.hpp"

#include <algorithm>

namespace fixture {

using catrw::delta2_schema;
using catrw::graph_schema;
using catrw::make_instance;
using catrw::Part;
using catrw::share;

CSetPtr fig1_graph() {
  return share(make_instance(graph_schema(), {{"V", 3}, {"E", 3}}, {{"src", {1, 2, 2}}, {"tgt", {2, 3, 3}}}));
}

CSetPtr fig2_delta2() {
  return share(make_instance(delta2_schema(), {{"V", 4}, {"E", 5}, {"T", 2}},
                             {{"src", {1, 2, 1, 1, 3}},
                              {"tgt", {2, 4, 4, 3, 4}},
                              {"d0", {3, 3}},
                              {"d1", {1, 4}},
                              {"d2", {2, 5}}}));
}

catrw::TypedGraph fig3b_typed_graph() {
  const auto s = delta2_schema();
  const catrw::GenId src = 0, tgt = 1, d0 = 2, d1 = 3, d2 = 4;
  struct E {
    Part from, to;
    catrw::GenId type;
  };
  const std::vector<E> edges = {
      {5, 1, src}, {6, 0, src}, {7, 0, src}, {8, 2, src},                // e1 has no src
      {4, 1, tgt}, {5, 3, tgt}, {6, 3, tgt}, {7, 2, tgt}, {8, 1, tgt},   // e5 -> v2
      {9, 6, d0},  {10, 6, d0},                                          //
      {9, 4, d1},  {9, 7, d1},  {10, 7, d1},                             // T1 has two
      {9, 5, d2},  {10, 8, d2},
  };
  std::vector<std::vector<Part>> cols(2);
  catrw::TypedGraph t;
  t.schema = s;
  for (const auto& e : edges) {
    cols[0].push_back(e.from);
    cols[1].push_back(e.to);
    t.edge_type.push_back(e.type);
  }
  t.graph = catrw::make_instance(graph_schema(), {11, edges.size()}, std::move(cols));
  t.vertex_type = {0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2};
  return t;
}

// Strip layout: bottom vertices 1 2 3, top vertices 4 5 6.
CSetPtr fig4_mesh() {
  return share(make_instance(delta2_schema(), {{"V", 6}, {"E", 9}, {"T", 4}},
                             {{"src", {1, 2, 4, 5, 1, 2, 3, 1, 2}},
                              {"tgt", {2, 3, 5, 6, 4, 5, 6, 5, 6}},
                              {"d0", {8, 8, 9, 9}},
                              {"d1", {1, 5, 2, 6}},
                              {"d2", {6, 3, 7, 4}}}));
}

Transformation fig4_match(const Rule& flip) {
  // Quadrilateral pattern: bl br tl tr; bottom right diagonal left top.
  return Transformation(flip.L(), fig4_mesh(), {{0, 1, 3, 4}, {0, 5, 7, 4, 2}, {0, 1}});
}

CSetPtr fig4_flipped() {
  // Edge 8 is now 2 -> 4; the left quadrilateral's triangles are (1,2,4)
  // and (2,4,5).
  return share(make_instance(delta2_schema(), {{"V", 6}, {"E", 9}, {"T", 4}},
                             {{"src", {1, 2, 4, 5, 1, 2, 3, 2, 2}},
                              {"tgt", {2, 3, 5, 6, 4, 5, 6, 4, 6}},
                              {"d0", {5, 6, 9, 9}},
                              {"d1", {1, 8, 2, 6}},
                              {"d2", {8, 3, 7, 4}}}));
}

Fig6 fig6(bool equations) {
  const auto s = delta2_schema(equations);
  auto L = share(make_instance(s, {{"V", 1}}, {}));
  auto I = share(make_instance(s, {{"V", 2}}, {}));
  auto G = share(make_instance(s, {{"V", 3}, {"E", 3}, {"T", 1}},
                               {{"src", {1, 2, 1}}, {"tgt", {2, 3, 3}}, {"d0", {3}}, {"d1", {1}}, {"d2", {2}}}));
  Transformation l(I, L, {{0, 0}, {}, {}});
  Transformation r = Transformation::identity(I);
  Transformation m(L, G, {{0}, {}, {}});
  return Fig6{Rule(l, r, catrw::RewriteKind::SqPO), G, m};
}

namespace {

std::vector<std::pair<Part, Part>> cube_edges() {
  std::vector<std::pair<Part, Part>> out;
  for (Part u = 0; u < 8; ++u)
    for (Part bit = 1; bit < 8; bit <<= 1)
      if (!(u & bit)) out.emplace_back(u, u | bit);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

catrw::Diagram cube_diagram() {
  const auto g = graph_schema();
  const auto edges = cube_edges();
  catrw::Diagram d;

  struct Face {
    std::vector<Part> verts;   // cube ids, ascending
    std::vector<std::size_t> edges;  // cube edge indices, ascending
  };
  std::vector<Face> faces;
  const char* axis = "xyz";
  for (Part k = 0; k < 3; ++k)
    for (Part val = 0; val < 2; ++val) {
      Face f;
      for (Part v = 0; v < 8; ++v)
        if ((v >> k & 1) == val) f.verts.push_back(v);
      for (std::size_t e = 0; e < edges.size(); ++e)
        if ((edges[e].first >> k & 1) == val && (edges[e].second >> k & 1) == val) f.edges.push_back(e);
      std::vector<Part> src, tgt;
      auto local = [&](Part v) { return static_cast<Part>(std::find(f.verts.begin(), f.verts.end(), v) - f.verts.begin()); };
      for (std::size_t e : f.edges) {
        src.push_back(local(edges[e].first));
        tgt.push_back(local(edges[e].second));
      }
      d.nodes.push_back({std::string("face_") + axis[k] + std::to_string(val),
                         share(make_instance(g, {4, 4}, {src, tgt}))});
      faces.push_back(std::move(f));
    }
  auto seg = share(make_instance(g, {2, 1}, {{0}, {1}}));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    const std::string id = "edge_" + std::to_string(u) + std::to_string(v);
    d.nodes.push_back({id, seg});
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      const auto& f = faces[fi];
      const auto pos = std::find(f.edges.begin(), f.edges.end(), e);
      if (pos == f.edges.end()) continue;
      auto local = [&](Part x) { return static_cast<Part>(std::find(f.verts.begin(), f.verts.end(), x) - f.verts.begin()); };
      d.arrows.push_back({id, d.nodes[fi].id,
                          Transformation(seg, d.nodes[fi].instance,
                                         {{local(u), local(v)}, {static_cast<Part>(pos - f.edges.begin())}})});
    }
  }
  return d;
}

CSetPtr cube_surface() {
  return share(make_instance(graph_schema(), {{"V", 8}, {"E", 12}},
                             {{"src", {1, 1, 1, 2, 2, 3, 3, 4, 5, 5, 6, 7}},
                              {"tgt", {2, 3, 5, 4, 6, 4, 7, 8, 6, 7, 8, 8}}}));
}

CSetPtr petri_base() {
  return share(make_instance(graph_schema(), {{"V", 2}, {"E", 2}}, {{"src", {1, 2}}, {"tgt", {2, 1}}}));
}

catrw::StructuredCospan open_edge() {
  const auto g = graph_schema();
  auto apex = share(make_instance(g, {{"V", 2}, {"E", 1}}, {{"src", {1}}, {"tgt", {2}}}));
  auto foot = share(make_instance(g, {{"V", 1}}, {}));
  return catrw::StructuredCospan{apex, {Transformation(foot, apex, {{0}, {}}), Transformation(foot, apex, {{1}, {}})}};
}

}  // namespace fixture
