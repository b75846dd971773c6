#pragma once

// Hand-checked drawings shared across the test suites.

#include "oneplane/constructions.hpp"
#include "oneplane/drawing.hpp"
#include "oneplane/saturation.hpp"

namespace oneplane::fixtures {

// Tetrahedral plane embedding of K4: faces are four true 3-faces.
inline Drawing plane_k4() {
  DrawingBuilder b;
  b.n = 4;
  b.vertex_rotation.resize(4);
  int e01 = b.add_edge(0, 1);
  int e02 = b.add_edge(0, 2);
  int e03 = b.add_edge(0, 3);
  int e12 = b.add_edge(1, 2);
  int e13 = b.add_edge(1, 3);
  int e23 = b.add_edge(2, 3);
  b.vertex_rotation[0] = {e01, e03, e02};
  b.vertex_rotation[1] = {e12, e13, e01};
  b.vertex_rotation[2] = {e02, e23, e12};
  b.vertex_rotation[3] = {e23, e03, e13};
  return b.build();
}

// Plain 4-cycle 0-1-2-3: two 4-faces.
inline Drawing four_cycle() {
  DrawingBuilder b;
  b.n = 4;
  b.vertex_rotation.resize(4);
  int e01 = b.add_edge(0, 1);
  int e12 = b.add_edge(1, 2);
  int e23 = b.add_edge(2, 3);
  int e03 = b.add_edge(0, 3);
  b.vertex_rotation[0] = {e01, e03};
  b.vertex_rotation[1] = {e01, e12};
  b.vertex_rotation[2] = {e12, e23};
  b.vertex_rotation[3] = {e23, e03};
  return b.build();
}

// Plane octahedron: the triangulation on six vertices, eight 3-faces.
inline Drawing octahedron() {
  DrawingBuilder b;
  b.n = 6;
  b.vertex_rotation.resize(6);
  int e01 = b.add_edge(0, 1);
  int e02 = b.add_edge(0, 2);
  int e03 = b.add_edge(0, 3);
  int e04 = b.add_edge(0, 4);
  int e12 = b.add_edge(1, 2);
  int e14 = b.add_edge(1, 4);
  int e15 = b.add_edge(1, 5);
  int e23 = b.add_edge(2, 3);
  int e25 = b.add_edge(2, 5);
  int e34 = b.add_edge(3, 4);
  int e35 = b.add_edge(3, 5);
  int e45 = b.add_edge(4, 5);
  b.vertex_rotation[0] = {e01, e02, e03, e04};
  b.vertex_rotation[1] = {e15, e12, e01, e14};
  b.vertex_rotation[2] = {e25, e23, e02, e12};
  b.vertex_rotation[3] = {e03, e23, e35, e34};
  b.vertex_rotation[4] = {e14, e04, e34, e45};
  b.vertex_rotation[5] = {e15, e45, e35, e25};
  return b.build();
}

// K5 drawn with one crossing (edge 2-4 crossing edge 0-1), built through the
// public insertion operations on top of plane K4.
inline Drawing one_crossing_k5() {
  Drawing d = plane_k4();
  // Vertex 4 goes inside the face {0,1,3}, joined to 0 and 1.
  int target = -1, occ0 = -1, occ1 = -1;
  for (const Face& f : d.faces())
    if (f.vertices == std::vector<int>{0, 1, 3}) target = f.id;
  const Face& f = d.faces()[target];
  for (int i = 0; i < f.size(); ++i) {
    if (d.dart_tail(f.boundary[i]) == 0) occ0 = i;
    if (d.dart_tail(f.boundary[i]) == 1) occ1 = i;
  }
  d = add_vertex_in_face(d, target, occ0, occ1);
  // Complete K5: 3-4 inside a shared face, then 2-4 across edge 0-1.
  for (auto want : {std::pair{3, Insertion::Kind::ZeroCross},
                    std::pair{2, Insertion::Kind::OneCross}}) {
    auto options = addable_edges(d, DrawingClass::OnePlane);
    bool applied = false;
    for (const Insertion& ins : options)
      if (ins.v == 4 && ins.u == want.first && ins.kind == want.second) {
        d = insert_edge(d, ins);
        applied = true;
        break;
      }
    if (!applied) throw std::runtime_error("k5 fixture: insertion not found");
  }
  return d;
}

}  // namespace oneplane::fixtures

namespace oneplane::fixtures2 {

// Two triangles joined by a bridge 2-3: the outer face carries both darts of
// the bridge, and nodes 2 and 3 appear twice on its walk.
inline oneplane::Drawing bridged_triangles() {
  using namespace oneplane;
  DrawingBuilder b;
  b.n = 6;
  b.vertex_rotation.resize(6);
  int e01 = b.add_edge(0, 1);
  int e02 = b.add_edge(0, 2);
  int e12 = b.add_edge(1, 2);
  int e34 = b.add_edge(3, 4);
  int e35 = b.add_edge(3, 5);
  int e45 = b.add_edge(4, 5);
  int e23 = b.add_edge(2, 3);  // the bridge
  b.vertex_rotation[0] = {e01, e02};
  b.vertex_rotation[1] = {e12, e01};
  b.vertex_rotation[2] = {e23, e02, e12};
  b.vertex_rotation[3] = {e34, e23, e35};
  b.vertex_rotation[4] = {e34, e45};
  b.vertex_rotation[5] = {e45, e35};
  return b.build();
}

// Two triangles sharing the cut vertex 0.
inline oneplane::Drawing bowtie() {
  using namespace oneplane;
  DrawingBuilder b;
  b.n = 5;
  b.vertex_rotation.resize(5);
  int e01 = b.add_edge(0, 1);
  int e02 = b.add_edge(0, 2);
  int e12 = b.add_edge(1, 2);
  int e03 = b.add_edge(0, 3);
  int e04 = b.add_edge(0, 4);
  int e34 = b.add_edge(3, 4);
  b.vertex_rotation[0] = {e03, e01, e02, e04};
  b.vertex_rotation[1] = {e12, e01};
  b.vertex_rotation[2] = {e02, e12};
  b.vertex_rotation[3] = {e03, e34};
  b.vertex_rotation[4] = {e34, e04};
  return b.build();
}

}  // namespace oneplane::fixtures2
