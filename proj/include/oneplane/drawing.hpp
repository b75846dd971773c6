#pragma once

// Combinatorial 1-plane drawings stored as planarized rotation systems.
//
// A drawing has n original vertices (nodes 0..n-1) and c crossing nodes
// (nodes n..n+c-1).  Every edge joins two original vertices and is crossed
// at most once; a crossed edge is split into two half-edge segments at its
// crossing node.  Each segment owns two darts (2*id forward, 2*id+1
// reverse), and every node carries a counterclockwise cyclic order of its
// outgoing darts.  Faces are the orbits of next(d) = rotation-successor of
// twin(d); a spherical embedding must satisfy V - E + F = 2.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oneplane {

enum class ErrorCode {
  TooSmall,
  LoopEdge,
  DuplicateEdge,
  BadSegment,
  TwinMismatch,
  CrossingDegree,
  NonAlternatingCrossing,
  AdjacentCrossing,
  Disconnected,
  NonSpherical,
  ClassViolation,
  InvalidInsertion,
  NotFalse3Face,
  InvalidSpec,
  BudgetExceeded,
};

const char* error_name(ErrorCode code);

class DrawingError : public std::runtime_error {
 public:
  DrawingError(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class DrawingClass { Plane, OnePlane, IcPlane, NicPlane };

// CLI spellings: "plane", "1p", "ic", "nic".
const char* class_name(DrawingClass cls);
std::optional<DrawingClass> class_from_name(const std::string& name);

struct EdgeRecord {
  int id = 0;
  int u = 0;
  int v = 0;
  int crossed_by = -1;  // crossing node id, or -1 when uncrossed
};

struct Segment {
  int id = 0;
  int tail = 0;
  int head = 0;
  int edge = 0;
};

inline int dart_twin(int dart) { return dart ^ 1; }
inline int dart_segment(int dart) { return dart >> 1; }

struct Face {
  int id = 0;
  std::vector<int> boundary;  // dart walk, rotated so the smallest dart leads
  std::vector<int> vertices;  // distinct original vertices, ascending
  bool is_true = false;
  int size() const { return static_cast<int>(boundary.size()); }
};

struct Census {
  int n = 0;
  int m = 0;
  int c = 0;
  int h = 0;  // hermits: original vertices of graph degree 2
  int t = 0;  // false 3-faces
  std::map<int, std::pair<int, int>> face_histogram;  // size -> (true, false)
};

struct CrossingViolation {
  int a = 0;  // crossing node ids
  int b = 0;
  std::vector<int> shared;  // common K4 endpoints (for Plane: a == b)
};

struct ValidationReport {
  DrawingClass cls = DrawingClass::OnePlane;
  bool ok = false;
  std::vector<CrossingViolation> violations;
};

class Drawing {
 public:
  // Validates every structural invariant, traverses faces and checks the
  // Euler formula.  Throws DrawingError on any violation.
  static Drawing create(int n, int c, std::vector<EdgeRecord> edges,
                        std::vector<Segment> segments,
                        std::vector<std::vector<int>> rotation,
                        std::optional<int> outer = std::nullopt);

  int vertex_count() const { return n_; }
  int crossing_count() const { return c_; }
  int node_count() const { return n_ + c_; }
  bool is_crossing_node(int node) const { return node >= n_; }

  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::optional<int> outer_face() const { return outer_; }

  int dart_count() const { return static_cast<int>(segments_.size()) * 2; }
  int dart_tail(int dart) const;
  int dart_head(int dart) const { return dart_tail(dart_twin(dart)); }
  const Segment& segment_of(int dart) const { return segments_[dart_segment(dart)]; }
  bool segment_is_half(int seg) const;
  int face_of(int dart) const { return face_of_dart_[dart]; }

  std::optional<int> edge_between(int u, int v) const;
  int graph_degree(int vertex) const { return graph_degree_[vertex]; }

  // The two edges crossing at a crossing node, and their four endpoints.
  std::array<int, 2> crossing_edges(int crossing_node) const;
  std::array<int, 4> crossing_endpoints(int crossing_node) const;  // ascending

 private:
  Drawing() = default;

  int n_ = 0;
  int c_ = 0;
  std::vector<EdgeRecord> edges_;
  std::vector<Segment> segments_;
  std::vector<std::vector<int>> rotation_;
  std::optional<int> outer_;
  std::vector<Face> faces_;
  std::vector<int> face_of_dart_;
  std::vector<int> graph_degree_;
  std::vector<std::array<int, 2>> crossing_edges_;
  std::map<std::pair<int, int>, int> edge_by_pair_;
};

// Mutable working form.  Rotations reference edges rather than darts so that
// surgery never has to renumber anything; build() materializes canonical
// segment and dart numbering and runs full validation.
struct DrawingBuilder {
  struct Edge {
    int u = 0;
    int v = 0;
    int crossing = -1;  // crossing index (node id = n + crossing), or -1
  };

  // A port names one outgoing dart.  At an original vertex the edge id alone
  // identifies it; at a crossing the (edge, toward-endpoint) pair does.
  struct Port {
    int edge = 0;
    int toward = -1;  // original endpoint the dart heads toward (crossings only)
  };

  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> vertex_rotation;          // per vertex: edge ids, CCW
  std::vector<std::array<Port, 4>> crossing_rotation;     // per crossing, CCW
  std::optional<int> outer;

  static DrawingBuilder from(const Drawing& d);
  Drawing build() const;

  int add_vertex();
  // Appends an edge record; callers splice its ports into rotations themselves.
  int add_edge(int u, int v, int crossing = -1);

  // Inserts `edge` into u's rotation immediately before `before_edge`
  // (the port of the boundary dart of the chosen face occurrence).
  void insert_before(int vertex, int before_edge, int edge);
  void insert_after(int vertex, int after_edge, int edge);
};

// Operations ----------------------------------------------------------------

ValidationReport validate(const Drawing& d, DrawingClass cls);

// (size, vertex_count, is_true)
std::tuple<int, int, bool> classify_face(const Drawing& d, const Face& f);

Census census(const Drawing& d);

struct PlaneGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;     // one per segment
  std::vector<std::vector<int>> rotation;     // dart lists per node
  int faces = 0;
};

PlaneGraph planarize(const Drawing& d);

// Splits `face` by a new vertex joined to the tails of boundary darts
// occ_a and occ_b (walk indices; tails must be distinct original vertices).
Drawing add_vertex_in_face(const Drawing& d, int face, int occ_a, int occ_b);

}  // namespace oneplane
