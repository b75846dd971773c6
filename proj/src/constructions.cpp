#include "oneplane/constructions.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace oneplane {

namespace {

// Local vertex coding inside a gadget: -1 is the host edge's u end, -2 its
// v end, values >= 0 are the gadget's new vertices.
constexpr int kU = -1;
constexpr int kV = -2;

struct LocalEdge {
  int a;
  int b;
  bool crossed;
};

// A gadget is a one-crossing drawing sharing edge uv with its host.  The
// rotation data is stored counterclockwise; u_after lists the gadget ports
// that follow the uv port at u, v_before the ones preceding the vu port at v.
struct Gadget {
  int internal_count;
  std::vector<LocalEdge> edges;  // excluding uv
  std::vector<int> u_after;      // local edge indices
  std::vector<int> v_before;
  std::vector<std::vector<int>> internal_rotation;
  std::array<std::pair<int, int>, 4> crossing;  // (local edge, toward local vertex)
};

// Six-vertex gadget: internals a=0, b=1, c=2, d=3; edges
// 0:ua 1:ub 2:vb 3:va 4:ab 5:bc 6:cd 7:da 8:ac(x) 9:bd(x).
const Gadget& h_star_gadget() {
  static const Gadget g = {
      4,
      {{kU, 0, false},
       {kU, 1, false},
       {kV, 1, false},
       {kV, 0, false},
       {0, 1, false},
       {1, 2, false},
       {2, 3, false},
       {3, 0, false},
       {0, 2, true},
       {1, 3, true}},
      {1, 0},        // u: uv, ub, ua
      {3, 2},        // v: va, vb, vu
      {
          {4, 7, 8, 3, 0},  // a: ab, ad, ac, av, au
          {9, 5, 4, 1, 2},  // b: bd, bc, ba, bu, bv
          {8, 6, 5},        // c: ca, cd, cb
          {6, 9, 7},        // d: dc, db, da
      },
      {{{9, 1}, {8, 0}, {9, 3}, {8, 2}}},  // toward b, a, d, c
  };
  return g;
}

// Five-vertex gadget: internals b=0, c=1, s=2; edges
// 0:ub 1:bc 2:cs 3:su 4:sv 5:uc(x) 6:bs(x).
const Gadget& m_star_gadget() {
  static const Gadget g = {
      3,
      {{kU, 0, false},
       {0, 1, false},
       {1, 2, false},
       {2, kU, false},
       {2, kV, false},
       {kU, 1, true},
       {0, 2, true}},
      {3, 0, 5},     // u: uv, us, ub, uc
      {4},           // v: vs, vu
      {
          {1, 6, 0},     // b: bc, bs, bu
          {5, 1, 2},     // c: cu, cb, cs
          {6, 2, 3, 4},  // s: sb, sc, su, sv
      },
      {{{6, 2}, {5, kU}, {6, 0}, {5, 1}}},  // toward s, u, b, c
  };
  return g;
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Builds the gadget as a standalone drawing: u=0, v=1, internals from 2.
Drawing standalone(const Gadget& g) {
  DrawingBuilder b;
  b.n = 2 + g.internal_count;
  b.vertex_rotation.resize(b.n);
  auto vertex = [&](int local) {
    if (local == kU) return 0;
    if (local == kV) return 1;
    return 2 + local;
  };
  int uv = -1;
  std::vector<int> edge_ids(g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const LocalEdge& e = g.edges[i];
    edge_ids[i] = b.add_edge(vertex(e.a), vertex(e.b), e.crossed ? 0 : -1);
  }
  uv = b.add_edge(0, 1);

  b.vertex_rotation[0].push_back(uv);
  for (int le : g.u_after) b.vertex_rotation[0].push_back(edge_ids[le]);
  b.vertex_rotation[1].push_back(uv);
  for (int le : g.v_before) b.vertex_rotation[1].push_back(edge_ids[le]);
  for (int iv = 0; iv < g.internal_count; ++iv)
    for (int le : g.internal_rotation[iv])
      b.vertex_rotation[2 + iv].push_back(edge_ids[le]);

  b.crossing_rotation.resize(1);
  for (int i = 0; i < 4; ++i) {
    auto [le, toward] = g.crossing[i];
    b.crossing_rotation[0][i] = DrawingBuilder::Port{edge_ids[le], vertex(toward)};
  }
  return b.build();
}

// The unique full-edge dart of a false 3-face.
int full_dart_index(const Drawing& d, const Face& f) {
  for (int i = 0; i < f.size(); ++i)
    if (!d.segment_is_half(dart_segment(f.boundary[i]))) return i;
  return -1;
}

// Inserts a gadget into a false 3-face, identifying the gadget's uv with the
// face's non-crossing edge; the gadget's u lands on the lower-numbered
// endpoint, mirroring the gadget when that endpoint is the dart's tail.
Drawing apply_gadget(const Drawing& d, int face, const Gadget& g) {
  const Face& f = d.faces()[face];
  int full_idx = full_dart_index(d, f);
  int full_dart = f.boundary[full_idx];
  int tail = d.dart_tail(full_dart);
  int head = d.dart_head(full_dart);
  int host_edge = d.segment_of(full_dart).edge;

  bool mirrored = tail < head;  // gadget u must sit on min(tail, head)
  int host_u = mirrored ? tail : head;
  int host_v = mirrored ? head : tail;

  DrawingBuilder b = DrawingBuilder::from(d);
  int base_vertex = b.n;
  for (int i = 0; i < g.internal_count; ++i) b.add_vertex();
  auto vertex = [&](int local) {
    if (local == kU) return host_u;
    if (local == kV) return host_v;
    return base_vertex + local;
  };
  int crossing_index = static_cast<int>(b.crossing_rotation.size());
  std::vector<int> edge_ids(g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const LocalEdge& e = g.edges[i];
    edge_ids[i] = b.add_edge(vertex(e.a), vertex(e.b), e.crossed ? crossing_index : -1);
  }

  auto ports_of = [&](const std::vector<int>& locals) {
    std::vector<int> out;
    out.reserve(locals.size());
    for (int le : locals) out.push_back(edge_ids[le]);
    return out;
  };
  std::vector<int> u_seq = mirrored ? reversed(g.u_after) : g.u_after;
  std::vector<int> v_seq = mirrored ? reversed(g.v_before) : g.v_before;
  // The face lies after the host-edge port at the dart's head and before it
  // at the dart's tail.
  auto splice = [&](int node, const std::vector<int>& seq, bool after) {
    auto& rot = b.vertex_rotation[node];
    auto it = std::find(rot.begin(), rot.end(), host_edge);
    if (after) ++it;
    auto ports = ports_of(seq);
    rot.insert(it, ports.begin(), ports.end());
  };
  if (mirrored) {
    splice(host_u, u_seq, /*after=*/false);  // u at the tail
    splice(host_v, v_seq, /*after=*/true);
  } else {
    splice(host_u, u_seq, /*after=*/true);   // u at the head
    splice(host_v, v_seq, /*after=*/false);
  }

  for (int iv = 0; iv < g.internal_count; ++iv) {
    std::vector<int> cycle = g.internal_rotation[iv];
    if (mirrored) std::reverse(cycle.begin(), cycle.end());
    b.vertex_rotation[base_vertex + iv] = ports_of(cycle);
  }

  std::array<std::pair<int, int>, 4> cross = g.crossing;
  if (mirrored) std::reverse(cross.begin(), cross.end());
  b.crossing_rotation.emplace_back();
  for (int i = 0; i < 4; ++i)
    b.crossing_rotation[crossing_index][i] =
        DrawingBuilder::Port{edge_ids[cross[i].first], vertex(cross[i].second)};

  return b.build();
}

// Target face for the next gadget: the false 3-face whose non-crossing edge
// has the lowest id, ties broken by face id.
int pick_false_3_face(const Drawing& d) {
  int best_face = -1;
  int best_edge = -1;
  for (const Face& f : d.faces()) {
    if (f.is_true || f.size() != 3) continue;
    int idx = full_dart_index(d, f);
    if (idx < 0) continue;
    int edge = d.segment_of(f.boundary[idx]).edge;
    if (best_face == -1 || edge < best_edge) {
      best_face = f.id;
      best_edge = edge;
    }
  }
  return best_face;
}

void require_positive_k(int k) {
  if (k < 1)
    throw DrawingError(ErrorCode::InvalidSpec, "family parameter k must be >= 1");
}

Drawing grow_family(int k, const Gadget& g) {
  Drawing d = gen_base();
  for (int i = 2; i <= k; ++i) d = apply_gadget(d, pick_false_3_face(d), g);
  return d;
}

Drawing hermits_everywhere(Drawing d) {
  while (true) {
    int target = -1;
    for (const Face& f : d.faces())
      if (!f.is_true && f.size() == 3) { target = f.id; break; }
    if (target == -1) return d;
    d = insert_hermit(d, target);
  }
}

}  // namespace

Drawing gen_base() {
  // 4-cycle 0-1-2-3 with diagonals 02 and 13 crossing at node 4.
  DrawingBuilder b;
  b.n = 4;
  b.vertex_rotation.resize(4);
  int e01 = b.add_edge(0, 1);
  int e12 = b.add_edge(1, 2);
  int e23 = b.add_edge(2, 3);
  int e03 = b.add_edge(0, 3);
  int e02 = b.add_edge(0, 2, 0);
  int e13 = b.add_edge(1, 3, 0);
  b.vertex_rotation[0] = {e01, e02, e03};
  b.vertex_rotation[1] = {e12, e13, e01};
  b.vertex_rotation[2] = {e23, e02, e12};
  b.vertex_rotation[3] = {e03, e13, e23};
  b.crossing_rotation.push_back({DrawingBuilder::Port{e02, 2},
                                 DrawingBuilder::Port{e13, 3},
                                 DrawingBuilder::Port{e02, 0},
                                 DrawingBuilder::Port{e13, 1}});
  return b.build();
}

Drawing gen_h_star() { return standalone(h_star_gadget()); }

Drawing gen_m_star() { return standalone(m_star_gadget()); }

Drawing gen_h(int k) {
  require_positive_k(k);
  return grow_family(k, h_star_gadget());
}

Drawing gen_m(int k) {
  require_positive_k(k);
  return grow_family(k, m_star_gadget());
}

Drawing insert_hermit(const Drawing& d, int face) {
  if (face < 0 || face >= static_cast<int>(d.faces().size()))
    throw DrawingError(ErrorCode::NotFalse3Face, "no face " + std::to_string(face));
  const Face& f = d.faces()[face];
  if (f.is_true || f.size() != 3)
    throw DrawingError(ErrorCode::NotFalse3Face,
                       "face " + std::to_string(face) + " is not a false 3-face");
  int idx = full_dart_index(d, f);
  return add_vertex_in_face(d, face, idx, (idx + 1) % 3);
}

Drawing gen_h_prime(int k) {
  require_positive_k(k);
  return hermits_everywhere(gen_h(k));
}

Drawing gen_m_prime(int k) {
  require_positive_k(k);
  return hermits_everywhere(gen_m(k));
}

}  // namespace oneplane
