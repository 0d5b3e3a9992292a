#pragma once

// Instances reconstructed from the figures, written out part by part.

#include "catrw/open_systems.hpp"
#include "catrw/rewrite.hpp"

namespace fixture {

using catrw::CSetPtr;
using catrw::Rule;
using catrw::Transformation;

/// Graph with 3 vertices and edges 1->2, 2->3, 2->3.
CSetPtr fig1_graph();

/// Two triangles sharing the diagonal edge of a square. Vertices v1=bl,
/// v2=br, v3=tl, v4=tr; edges e1 v1->v2, e2 v2->v4, e3 v1->v4, e4 v1->v3,
/// e5 v3->v4; T1 = (e1, e2; e3), T2 = (e4, e5; e3) as (d1, d2; d0).
CSetPtr fig2_delta2();

/// Fig 3b: the Fig 2 typed graph with T1 given a second d1 edge (to e4),
/// e1's src edge removed and e5 retargeted to v2, breaking the last
/// equation at T2. Vertex ids: v1..v4 = 0..3, e1..e5 = 4..8, T1, T2 = 9, 10.
catrw::TypedGraph fig3b_typed_graph();

/// Fig 4: two adjacent quadrilaterals (a 1 x 2 strip), the match of the
/// quadrilateral pattern onto the left one, and the strip with that
/// quadrilateral's diagonal flipped.
CSetPtr fig4_mesh();
Transformation fig4_match(const Rule& flip);
CSetPtr fig4_flipped();

/// Fig 6: creation in an unknown context. L is one vertex, I two vertices
/// both sent to it, R = I. G is one triangle; the match hits its first
/// vertex. With equations=false everything lives on Delta2Free.
struct Fig6 {
  Rule rule;
  CSetPtr G;
  Transformation match;
};
Fig6 fig6(bool equations);

/// Fig 9: six four-cycle faces of a cube glued along twelve single-edge
/// nodes, each mapping into its two faces. Cube vertices are 3-bit numbers
/// and edges go from the smaller endpoint to the larger.
catrw::Diagram cube_diagram();
/// The cube surface built directly: 8 vertices, 12 edges.
CSetPtr cube_surface();

/// Graph with vertices {state, transition} and edges input: state ->
/// transition, output: transition -> state.
CSetPtr petri_base();

/// Open graph with one edge 1->2: inputs at vertex 1, outputs at vertex 2.
catrw::StructuredCospan open_edge();

}  // namespace fixture
