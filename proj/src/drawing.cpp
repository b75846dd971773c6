#include "oneplane/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace oneplane {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooSmall: return "TOO_SMALL";
    case ErrorCode::LoopEdge: return "LOOP_EDGE";
    case ErrorCode::DuplicateEdge: return "DUPLICATE_EDGE";
    case ErrorCode::BadSegment: return "BAD_SEGMENT";
    case ErrorCode::TwinMismatch: return "TWIN_MISMATCH";
    case ErrorCode::CrossingDegree: return "CROSSING_DEGREE";
    case ErrorCode::NonAlternatingCrossing: return "NON_ALTERNATING_CROSSING";
    case ErrorCode::AdjacentCrossing: return "ADJACENT_CROSSING";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::NonSpherical: return "NON_SPHERICAL";
    case ErrorCode::ClassViolation: return "CLASS_VIOLATION";
    case ErrorCode::InvalidInsertion: return "INVALID_INSERTION";
    case ErrorCode::NotFalse3Face: return "NOT_FALSE_3_FACE";
    case ErrorCode::InvalidSpec: return "INVALID_SPEC";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

DrawingError::DrawingError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what),
      code_(code) {}

const char* class_name(DrawingClass cls) {
  switch (cls) {
    case DrawingClass::Plane: return "plane";
    case DrawingClass::OnePlane: return "1p";
    case DrawingClass::IcPlane: return "ic";
    case DrawingClass::NicPlane: return "nic";
  }
  return "?";
}

std::optional<DrawingClass> class_from_name(const std::string& name) {
  if (name == "plane") return DrawingClass::Plane;
  if (name == "1p") return DrawingClass::OnePlane;
  if (name == "ic") return DrawingClass::IcPlane;
  if (name == "nic") return DrawingClass::NicPlane;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& what) {
  throw DrawingError(code, what);
}

std::string pair_str(int a, int b) {
  return std::to_string(a) + "," + std::to_string(b);
}

}  // namespace

int Drawing::dart_tail(int dart) const {
  const Segment& s = segments_[dart_segment(dart)];
  return (dart & 1) ? s.head : s.tail;
}

bool Drawing::segment_is_half(int seg) const {
  const Segment& s = segments_[seg];
  return is_crossing_node(s.tail) || is_crossing_node(s.head);
}

std::optional<int> Drawing::edge_between(int u, int v) const {
  auto it = edge_by_pair_.find({std::min(u, v), std::max(u, v)});
  if (it == edge_by_pair_.end()) return std::nullopt;
  return it->second;
}

std::array<int, 2> Drawing::crossing_edges(int crossing_node) const {
  return crossing_edges_[crossing_node - n_];
}

std::array<int, 4> Drawing::crossing_endpoints(int crossing_node) const {
  auto [e, f] = crossing_edges(crossing_node);
  std::array<int, 4> out{edges_[e].u, edges_[e].v, edges_[f].u, edges_[f].v};
  std::sort(out.begin(), out.end());
  return out;
}

Drawing Drawing::create(int n, int c, std::vector<EdgeRecord> edges,
                        std::vector<Segment> segments,
                        std::vector<std::vector<int>> rotation,
                        std::optional<int> outer) {
  if (n < 3) fail(ErrorCode::TooSmall, "need at least 3 vertices, got " + std::to_string(n));
  if (c < 0) fail(ErrorCode::TooSmall, "negative crossing count");
  const int nodes = n + c;
  const int num_segments = static_cast<int>(segments.size());
  const int num_darts = 2 * num_segments;

  Drawing d;
  d.n_ = n;
  d.c_ = c;

  // Edge table: simple graph on the original vertices.
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    EdgeRecord& e = edges[i];
    if (e.id != i) fail(ErrorCode::BadSegment, "edge ids must be consecutive from 0");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      fail(ErrorCode::BadSegment, "edge " + std::to_string(i) + " endpoint out of range");
    if (e.u == e.v) fail(ErrorCode::LoopEdge, "edge " + std::to_string(i));
    if (e.crossed_by != -1 && (e.crossed_by < n || e.crossed_by >= nodes))
      fail(ErrorCode::BadSegment, "edge " + std::to_string(i) + " crossed by invalid node");
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    if (!d.edge_by_pair_.emplace(key, i).second)
      fail(ErrorCode::DuplicateEdge, pair_str(e.u, e.v));
  }

  // Segment table: one segment per uncrossed edge, two per crossed edge,
  // meeting at the crossing node; never two crossing endpoints.
  std::vector<std::vector<int>> segs_of_edge(edges.size());
  for (int i = 0; i < num_segments; ++i) {
    const Segment& s = segments[i];
    if (s.id != i) fail(ErrorCode::BadSegment, "segment ids must be consecutive from 0");
    if (s.tail < 0 || s.tail >= nodes || s.head < 0 || s.head >= nodes)
      fail(ErrorCode::BadSegment, "segment " + std::to_string(i) + " endpoint out of range");
    if (s.tail == s.head) fail(ErrorCode::BadSegment, "segment " + std::to_string(i) + " is a loop");
    if (s.tail >= n && s.head >= n)
      fail(ErrorCode::BadSegment, "segment " + std::to_string(i) + " joins two crossing nodes");
    if (s.edge < 0 || s.edge >= static_cast<int>(edges.size()))
      fail(ErrorCode::BadSegment, "segment " + std::to_string(i) + " references invalid edge");
    segs_of_edge[s.edge].push_back(i);
  }
  for (const EdgeRecord& e : edges) {
    const auto& segs = segs_of_edge[e.id];
    if (e.crossed_by == -1) {
      if (segs.size() != 1)
        fail(ErrorCode::BadSegment, "uncrossed edge " + std::to_string(e.id) +
                                        " must have exactly one segment");
      const Segment& s = segments[segs[0]];
      if (std::minmax(s.tail, s.head) != std::minmax(e.u, e.v))
        fail(ErrorCode::BadSegment, "segment of edge " + std::to_string(e.id) +
                                        " does not join its endpoints");
    } else {
      if (segs.size() != 2)
        fail(ErrorCode::BadSegment, "crossed edge " + std::to_string(e.id) +
                                        " must have exactly two segments");
      std::set<std::pair<int, int>> have, want;
      for (int si : segs) have.insert(std::minmax(segments[si].tail, segments[si].head));
      want.insert(std::minmax(e.u, e.crossed_by));
      want.insert(std::minmax(e.v, e.crossed_by));
      if (have != want)
        fail(ErrorCode::BadSegment, "segments of edge " + std::to_string(e.id) +
                                        " do not meet at its crossing");
    }
  }

  // Rotation system: every dart appears exactly once, at its tail node.
  if (static_cast<int>(rotation.size()) != nodes)
    fail(ErrorCode::TwinMismatch, "expected one rotation per node");
  d.segments_ = std::move(segments);
  std::vector<int> seen(num_darts, -1);
  for (int node = 0; node < nodes; ++node) {
    for (int dart : rotation[node]) {
      if (dart < 0 || dart >= num_darts)
        fail(ErrorCode::TwinMismatch, "dart " + std::to_string(dart) + " out of range");
      if (seen[dart] != -1)
        fail(ErrorCode::TwinMismatch, "dart " + std::to_string(dart) + " listed twice");
      seen[dart] = node;
      const Segment& s = d.segments_[dart_segment(dart)];
      int tail = (dart & 1) ? s.head : s.tail;
      if (tail != node)
        fail(ErrorCode::TwinMismatch, "dart " + std::to_string(dart) +
                                          " listed at node " + std::to_string(node) +
                                          " but its tail is " + std::to_string(tail));
    }
  }
  for (int dart = 0; dart < num_darts; ++dart)
    if (seen[dart] == -1)
      fail(ErrorCode::TwinMismatch, "dart " + std::to_string(dart) + " missing from rotations");

  // Crossing nodes: degree four, two edges, alternating.
  d.crossing_edges_.assign(c, {-1, -1});
  for (const EdgeRecord& e : edges)
    if (e.crossed_by != -1) {
      auto& pair = d.crossing_edges_[e.crossed_by - n];
      if (pair[0] == -1) pair[0] = e.id;
      else if (pair[1] == -1) pair[1] = e.id;
      else
        fail(ErrorCode::CrossingDegree,
             "crossing node " + std::to_string(e.crossed_by) + " crossed by three edges");
    }
  for (int ci = 0; ci < c; ++ci) {
    if (d.crossing_edges_[ci][1] == -1)
      fail(ErrorCode::CrossingDegree,
           "crossing node " + std::to_string(n + ci) + " crossed by fewer than two edges");
    const auto& rot = rotation[n + ci];
    if (rot.size() != 4)
      fail(ErrorCode::CrossingDegree, "crossing node " + std::to_string(n + ci) +
                                          " has degree " + std::to_string(rot.size()));
    int e0 = d.segments_[dart_segment(rot[0])].edge;
    int e1 = d.segments_[dart_segment(rot[1])].edge;
    int e2 = d.segments_[dart_segment(rot[2])].edge;
    int e3 = d.segments_[dart_segment(rot[3])].edge;
    if (e0 != e2 || e1 != e3 || e0 == e1)
      fail(ErrorCode::NonAlternatingCrossing, "crossing node " + std::to_string(n + ci));
    const EdgeRecord& a = edges[e0];
    const EdgeRecord& b = edges[e1];
    std::set<int> ends{a.u, a.v, b.u, b.v};
    if (ends.size() != 4)
      fail(ErrorCode::AdjacentCrossing, "edges " + std::to_string(e0) + " and " +
                                            std::to_string(e1) + " share an endpoint");
  }

  // Connectivity of the planarization.
  {
    std::vector<int> comp(nodes, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (int dart : rotation[node]) {
        const Segment& s = d.segments_[dart_segment(dart)];
        int other = (dart & 1) ? s.tail : s.head;
        if (comp[other] == -1) {
          comp[other] = 0;
          stack.push_back(other);
        }
      }
    }
    for (int node = 0; node < nodes; ++node)
      if (comp[node] == -1)
        fail(ErrorCode::Disconnected, "node " + std::to_string(node) + " unreachable");
  }

  d.edges_ = std::move(edges);
  d.rotation_ = std::move(rotation);
  d.outer_ = outer;

  // Face traversal: next(dart) = rotation-successor of twin(dart).
  std::vector<int> succ(num_darts);  // rotation successor of each dart at its tail
  for (int node = 0; node < nodes; ++node) {
    const auto& rot = d.rotation_[node];
    for (size_t i = 0; i < rot.size(); ++i)
      succ[rot[i]] = rot[(i + 1) % rot.size()];
  }
  d.face_of_dart_.assign(num_darts, -1);
  for (int start = 0; start < num_darts; ++start) {
    if (d.face_of_dart_[start] != -1) continue;
    Face face;
    face.id = static_cast<int>(d.faces_.size());
    int dart = start;
    do {
      d.face_of_dart_[dart] = face.id;
      face.boundary.push_back(dart);
      dart = succ[dart_twin(dart)];
    } while (dart != start);
    face.is_true = true;
    for (int bd : face.boundary) {
      int tail = d.dart_tail(bd);
      if (tail < n) face.vertices.push_back(tail);
      if (d.segment_is_half(dart_segment(bd))) face.is_true = false;
    }
    std::sort(face.vertices.begin(), face.vertices.end());
    face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()),
                        face.vertices.end());
    d.faces_.push_back(std::move(face));
  }
  // Canonical walk start for reproducible face reports.
  for (Face& f : d.faces_) {
    auto it = std::min_element(f.boundary.begin(), f.boundary.end());
    std::rotate(f.boundary.begin(), it, f.boundary.end());
  }

  int euler = nodes - num_segments + static_cast<int>(d.faces_.size());
  if (euler != 2)
    fail(ErrorCode::NonSpherical, "V - E + F = " + std::to_string(euler));

  if (outer && (*outer < 0 || *outer >= static_cast<int>(d.faces_.size())))
    fail(ErrorCode::BadSegment, "outer face index out of range");

  d.graph_degree_.assign(n, 0);
  for (const EdgeRecord& e : d.edges_) {
    ++d.graph_degree_[e.u];
    ++d.graph_degree_[e.v];
  }

  return d;
}

// DrawingBuilder --------------------------------------------------------------

DrawingBuilder DrawingBuilder::from(const Drawing& d) {
  DrawingBuilder b;
  b.n = d.vertex_count();
  b.outer = d.outer_face();
  for (const EdgeRecord& e : d.edges()) {
    Edge be;
    be.u = std::min(e.u, e.v);
    be.v = std::max(e.u, e.v);
    be.crossing = e.crossed_by == -1 ? -1 : e.crossed_by - b.n;
    b.edges.push_back(be);
  }
  b.vertex_rotation.resize(b.n);
  for (int v = 0; v < b.n; ++v)
    for (int dart : d.rotation()[v])
      b.vertex_rotation[v].push_back(d.segment_of(dart).edge);
  b.crossing_rotation.resize(d.crossing_count());
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const auto& rot = d.rotation()[b.n + ci];
    for (int i = 0; i < 4; ++i) {
      int head = d.dart_head(rot[i]);  // always an original vertex
      b.crossing_rotation[ci][i] = Port{d.segment_of(rot[i]).edge, head};
    }
  }
  return b;
}

int DrawingBuilder::add_vertex() {
  vertex_rotation.emplace_back();
  return n++;
}

int DrawingBuilder::add_edge(int u, int v, int crossing) {
  edges.push_back(Edge{std::min(u, v), std::max(u, v), crossing});
  return static_cast<int>(edges.size()) - 1;
}

void DrawingBuilder::insert_before(int vertex, int before_edge, int edge) {
  auto& rot = vertex_rotation[vertex];
  auto it = std::find(rot.begin(), rot.end(), before_edge);
  if (it == rot.end())
    fail(ErrorCode::InvalidInsertion,
         "edge " + std::to_string(before_edge) + " not at vertex " + std::to_string(vertex));
  rot.insert(it, edge);
}

void DrawingBuilder::insert_after(int vertex, int after_edge, int edge) {
  auto& rot = vertex_rotation[vertex];
  auto it = std::find(rot.begin(), rot.end(), after_edge);
  if (it == rot.end())
    fail(ErrorCode::InvalidInsertion,
         "edge " + std::to_string(after_edge) + " not at vertex " + std::to_string(vertex));
  rot.insert(it + 1, edge);
}

Drawing DrawingBuilder::build() const {
  const int c = static_cast<int>(crossing_rotation.size());

  std::vector<EdgeRecord> edge_records;
  edge_records.reserve(edges.size());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const Edge& e = edges[i];
    EdgeRecord rec;
    rec.id = i;
    rec.u = std::min(e.u, e.v);
    rec.v = std::max(e.u, e.v);
    rec.crossed_by = e.crossing == -1 ? -1 : n + e.crossing;
    edge_records.push_back(rec);
  }

  // Canonical segments: edge-id order; a crossed edge u<v contributes
  // (u, x) then (x, v).
  std::vector<Segment> segs;
  // dart at an original vertex for an edge; darts at crossings by (edge, toward).
  std::map<std::pair<int, int>, int> dart_at;         // (vertex, edge) -> dart
  std::map<std::pair<int, int>, int> cross_dart_at;   // (edge, toward) -> dart
  for (const EdgeRecord& rec : edge_records) {
    if (rec.crossed_by == -1) {
      int id = static_cast<int>(segs.size());
      segs.push_back(Segment{id, rec.u, rec.v, rec.id});
      dart_at[{rec.u, rec.id}] = 2 * id;
      dart_at[{rec.v, rec.id}] = 2 * id + 1;
    } else {
      int id = static_cast<int>(segs.size());
      segs.push_back(Segment{id, rec.u, rec.crossed_by, rec.id});
      segs.push_back(Segment{id + 1, rec.crossed_by, rec.v, rec.id});
      dart_at[{rec.u, rec.id}] = 2 * id;
      dart_at[{rec.v, rec.id}] = 2 * (id + 1) + 1;
      cross_dart_at[{rec.id, rec.u}] = 2 * id + 1;
      cross_dart_at[{rec.id, rec.v}] = 2 * (id + 1);
    }
  }

  std::vector<std::vector<int>> rotation(n + c);
  for (int v = 0; v < n; ++v) {
    rotation[v].reserve(vertex_rotation[v].size());
    for (int e : vertex_rotation[v]) {
      auto it = dart_at.find({v, e});
      if (it == dart_at.end())
        fail(ErrorCode::TwinMismatch, "vertex " + std::to_string(v) +
                                          " rotation references edge " + std::to_string(e) +
                                          " it is not an endpoint of");
      rotation[v].push_back(it->second);
    }
  }
  for (int ci = 0; ci < c; ++ci) {
    for (const Port& p : crossing_rotation[ci]) {
      auto it = cross_dart_at.find({p.edge, p.toward});
      if (it == cross_dart_at.end())
        fail(ErrorCode::TwinMismatch, "crossing " + std::to_string(ci) +
                                          " rotation references missing half-edge");
      rotation[n + ci].push_back(it->second);
    }
  }

  return Drawing::create(n, c, std::move(edge_records), std::move(segs),
                         std::move(rotation), outer);
}

// Operations ------------------------------------------------------------------

ValidationReport validate(const Drawing& d, DrawingClass cls) {
  ValidationReport report;
  report.cls = cls;
  report.ok = true;
  const int n = d.vertex_count();
  const int c = d.crossing_count();

  if (cls == DrawingClass::Plane) {
    for (int ci = 0; ci < c; ++ci) {
      report.ok = false;
      report.violations.push_back(CrossingViolation{n + ci, n + ci, {}});
    }
    return report;
  }
  if (cls == DrawingClass::OnePlane) return report;  // holds structurally

  size_t max_shared = cls == DrawingClass::IcPlane ? 0 : 1;
  for (int a = 0; a < c; ++a) {
    auto ea = d.crossing_endpoints(n + a);
    for (int b = a + 1; b < c; ++b) {
      auto eb = d.crossing_endpoints(n + b);
      std::vector<int> shared;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(shared));
      if (shared.size() > max_shared) {
        report.ok = false;
        report.violations.push_back(CrossingViolation{n + a, n + b, shared});
      }
    }
  }
  return report;
}

std::tuple<int, int, bool> classify_face(const Drawing&, const Face& f) {
  return {f.size(), static_cast<int>(f.vertices.size()), f.is_true};
}

Census census(const Drawing& d) {
  Census cen;
  cen.n = d.vertex_count();
  cen.m = static_cast<int>(d.edges().size());
  cen.c = d.crossing_count();
  for (int v = 0; v < cen.n; ++v)
    if (d.graph_degree(v) == 2) ++cen.h;
  for (const Face& f : d.faces()) {
    auto& bucket = cen.face_histogram[f.size()];
    if (f.is_true) ++bucket.first;
    else ++bucket.second;
    if (!f.is_true && f.size() == 3) ++cen.t;
  }
  return cen;
}

PlaneGraph planarize(const Drawing& d) {
  PlaneGraph g;
  g.nodes = d.node_count();
  for (const Segment& s : d.segments()) g.edges.emplace_back(s.tail, s.head);
  g.rotation = d.rotation();
  g.faces = static_cast<int>(d.faces().size());
  return g;
}

Drawing add_vertex_in_face(const Drawing& d, int face, int occ_a, int occ_b) {
  if (face < 0 || face >= static_cast<int>(d.faces().size()))
    fail(ErrorCode::InvalidInsertion, "no face " + std::to_string(face));
  const Face& f = d.faces()[face];
  int len = f.size();
  if (occ_a < 0 || occ_a >= len || occ_b < 0 || occ_b >= len || occ_a == occ_b)
    fail(ErrorCode::InvalidInsertion, "bad occurrence indices");
  int dart_a = f.boundary[occ_a];
  int dart_b = f.boundary[occ_b];
  int a = d.dart_tail(dart_a);
  int b = d.dart_tail(dart_b);
  if (d.is_crossing_node(a) || d.is_crossing_node(b) || a == b)
    fail(ErrorCode::InvalidInsertion, "occurrence tails must be distinct original vertices");

  DrawingBuilder builder = DrawingBuilder::from(d);
  int w = builder.add_vertex();
  int ea = builder.add_edge(a, w);
  int eb = builder.add_edge(b, w);
  builder.insert_before(a, d.segment_of(dart_a).edge, ea);
  builder.insert_before(b, d.segment_of(dart_b).edge, eb);
  builder.vertex_rotation[w] = {ea, eb};
  return builder.build();
}

}  // namespace oneplane
