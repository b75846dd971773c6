#include "oneplane/saturation.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "oneplane/detail/rng.hpp"

namespace oneplane {

namespace {

// Endpoint sets of all existing crossings, for the pair constraint.
std::vector<std::array<int, 4>> crossing_sets(const Drawing& d) {
  std::vector<std::array<int, 4>> sets;
  sets.reserve(d.crossing_count());
  for (int ci = 0; ci < d.crossing_count(); ++ci)
    sets.push_back(d.crossing_endpoints(d.vertex_count() + ci));
  return sets;
}

bool new_crossing_allowed(const std::vector<std::array<int, 4>>& sets,
                          std::array<int, 4> candidate, DrawingClass cls) {
  if (cls == DrawingClass::Plane) return false;
  if (cls == DrawingClass::OnePlane) return true;
  size_t max_shared = cls == DrawingClass::IcPlane ? 0 : 1;
  std::sort(candidate.begin(), candidate.end());
  for (const auto& set : sets) {
    size_t shared = 0;
    for (int x : candidate)
      if (std::binary_search(set.begin(), set.end(), x)) ++shared;
    if (shared > max_shared) return false;
  }
  return true;
}

// Occurrence indices of original vertices on a face walk.
std::vector<std::pair<int, int>> original_occurrences(const Drawing& d, const Face& f) {
  std::vector<std::pair<int, int>> occ;  // (vertex, walk index)
  for (int i = 0; i < f.size(); ++i) {
    int tail = d.dart_tail(f.boundary[i]);
    if (!d.is_crossing_node(tail)) occ.emplace_back(tail, i);
  }
  return occ;
}

// Emits every insertion valid for `cls`; stops early when the callback
// returns false.
template <typename Callback>
bool for_each_insertion(const Drawing& d, DrawingClass cls, Callback&& emit) {
  auto sets = crossing_sets(d);

  std::vector<std::vector<std::pair<int, int>>> occurrences;
  occurrences.reserve(d.faces().size());
  for (const Face& f : d.faces()) occurrences.push_back(original_occurrences(d, f));

  // ZeroCross: both endpoints on one face boundary.
  for (const Face& f : d.faces()) {
    const auto& occ = occurrences[f.id];
    for (size_t i = 0; i < occ.size(); ++i)
      for (size_t j = 0; j < occ.size(); ++j) {
        auto [u, oi] = occ[i];
        auto [v, oj] = occ[j];
        if (u >= v || d.edge_between(u, v)) continue;
        Insertion ins;
        ins.u = u;
        ins.v = v;
        ins.kind = Insertion::Kind::ZeroCross;
        ins.face = f.id;
        ins.occ_u = oi;
        ins.occ_v = oj;
        if (!emit(ins)) return false;
      }
  }

  if (cls == DrawingClass::Plane) return true;

  std::vector<int> segment_of_edge(d.edges().size(), -1);
  for (const Segment& s : d.segments())
    if (segment_of_edge[s.edge] == -1) segment_of_edge[s.edge] = s.id;

  // OneCross: cross one uncrossed edge; the smaller endpoint sits on the
  // emitting dart's own face, so each chirality appears exactly once.
  for (const EdgeRecord& e : d.edges()) {
    if (e.crossed_by != -1) continue;
    int seg = segment_of_edge[e.id];
    for (int dart : {2 * seg, 2 * seg + 1}) {
      const auto& occ_u = occurrences[d.face_of(dart)];
      const auto& occ_v = occurrences[d.face_of(dart_twin(dart))];
      for (auto [u, oi] : occ_u) {
        if (u == e.u || u == e.v) continue;
        for (auto [v, oj] : occ_v) {
          if (v == e.u || v == e.v || u >= v) continue;
          if (d.edge_between(u, v)) continue;
          if (!new_crossing_allowed(sets, {u, v, e.u, e.v}, cls)) continue;
          Insertion ins;
          ins.u = u;
          ins.v = v;
          ins.kind = Insertion::Kind::OneCross;
          ins.crossed_edge = e.id;
          ins.dart = dart;
          ins.occ_u = oi;
          ins.occ_v = oj;
          if (!emit(ins)) return false;
        }
      }
    }
  }
  return true;
}

void require_class(const Drawing& d, DrawingClass cls) {
  if (!validate(d, cls).ok)
    throw DrawingError(ErrorCode::ClassViolation,
                       std::string("drawing does not validate as ") + class_name(cls));
}

std::tuple<int, int, int, int, int, int, int> sort_key(const Insertion& ins) {
  int route = ins.kind == Insertion::Kind::ZeroCross ? 0 : 1;
  int anchor = ins.kind == Insertion::Kind::ZeroCross ? ins.face : ins.crossed_edge;
  return {ins.u, ins.v, route, anchor, ins.occ_u, ins.occ_v, ins.dart};
}

}  // namespace

std::vector<Insertion> addable_edges(const Drawing& d, DrawingClass cls) {
  require_class(d, cls);
  std::vector<Insertion> out;
  for_each_insertion(d, cls, [&](const Insertion& ins) {
    out.push_back(ins);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Insertion& a, const Insertion& b) {
    return sort_key(a) < sort_key(b);
  });
  return out;
}

bool has_addable_edge(const Drawing& d, DrawingClass cls) {
  require_class(d, cls);
  bool found = false;
  for_each_insertion(d, cls, [&](const Insertion&) {
    found = true;
    return false;
  });
  return found;
}

Drawing insert_edge(const Drawing& d, const Insertion& ins) {
  auto invalid = [](const std::string& what) -> DrawingError {
    return DrawingError(ErrorCode::InvalidInsertion, what);
  };
  if (ins.u >= ins.v) throw invalid("endpoints must satisfy u < v");
  if (ins.u < 0 || ins.v >= d.vertex_count()) throw invalid("endpoint out of range");
  if (d.edge_between(ins.u, ins.v)) throw invalid("edge already present");

  DrawingBuilder builder = DrawingBuilder::from(d);

  if (ins.kind == Insertion::Kind::ZeroCross) {
    if (ins.face < 0 || ins.face >= static_cast<int>(d.faces().size()))
      throw invalid("no such face");
    const Face& f = d.faces()[ins.face];
    if (ins.occ_u < 0 || ins.occ_u >= f.size() || ins.occ_v < 0 || ins.occ_v >= f.size())
      throw invalid("occurrence index out of range");
    int dart_u = f.boundary[ins.occ_u];
    int dart_v = f.boundary[ins.occ_v];
    if (d.dart_tail(dart_u) != ins.u || d.dart_tail(dart_v) != ins.v)
      throw invalid("occurrence does not match endpoint");
    int e = builder.add_edge(ins.u, ins.v);
    builder.insert_before(ins.u, d.segment_of(dart_u).edge, e);
    builder.insert_before(ins.v, d.segment_of(dart_v).edge, e);
    return builder.build();
  }

  // OneCross
  if (ins.dart < 0 || ins.dart >= d.dart_count()) throw invalid("dart out of range");
  const Segment& seg = d.segment_of(ins.dart);
  if (seg.edge != ins.crossed_edge) throw invalid("dart does not lie on the crossed edge");
  const EdgeRecord& crossed = d.edges()[seg.edge];
  if (crossed.crossed_by != -1) throw invalid("edge is already crossed");
  if (ins.u == crossed.u || ins.u == crossed.v || ins.v == crossed.u || ins.v == crossed.v)
    throw invalid("new edge may not cross an adjacent edge");
  const Face& fu = d.faces()[d.face_of(ins.dart)];
  const Face& fv = d.faces()[d.face_of(dart_twin(ins.dart))];
  if (ins.occ_u < 0 || ins.occ_u >= fu.size() || ins.occ_v < 0 || ins.occ_v >= fv.size())
    throw invalid("occurrence index out of range");
  int dart_u = fu.boundary[ins.occ_u];
  int dart_v = fv.boundary[ins.occ_v];
  if (d.dart_tail(dart_u) != ins.u || d.dart_tail(dart_v) != ins.v)
    throw invalid("occurrence does not match endpoint");

  int toward_head = d.dart_head(ins.dart);
  int toward_tail = d.dart_tail(ins.dart);
  int ci = static_cast<int>(builder.crossing_rotation.size());
  int g = builder.add_edge(ins.u, ins.v, ci);
  builder.edges[ins.crossed_edge].crossing = ci;
  // CCW around the new crossing: toward u, toward the crossed dart's head,
  // toward v, toward its tail; u's side is the dart's own face.
  builder.crossing_rotation.push_back({DrawingBuilder::Port{g, ins.u},
                                       DrawingBuilder::Port{ins.crossed_edge, toward_head},
                                       DrawingBuilder::Port{g, ins.v},
                                       DrawingBuilder::Port{ins.crossed_edge, toward_tail}});
  builder.insert_before(ins.u, d.segment_of(dart_u).edge, g);
  builder.insert_before(ins.v, d.segment_of(dart_v).edge, g);
  return builder.build();
}

bool is_maximal(const Drawing& d, DrawingClass cls) {
  return !has_addable_edge(d, cls);
}

SaturationResult saturate(const Drawing& d, DrawingClass cls,
                          const SaturationPolicy& policy) {
  require_class(d, cls);
  detail::SplitMix64 rng(policy.seed);
  SaturationResult result{d, {}};
  while (true) {
    auto options = addable_edges(result.drawing, cls);
    if (options.empty()) break;
    size_t pick = 0;
    if (policy.mode == SaturationPolicy::Mode::SeededRandom)
      pick = static_cast<size_t>(rng.below(static_cast<int>(options.size())));
    result.drawing = insert_edge(result.drawing, options[pick]);
    result.log.push_back(options[pick]);
  }
  return result;
}

std::string serialize_log(const std::vector<Insertion>& log) {
  std::ostringstream out;
  for (const Insertion& ins : log) {
    out << "add " << ins.u << " " << ins.v;
    if (ins.kind == Insertion::Kind::ZeroCross)
      out << " zero " << ins.face;
    else
      out << " cross " << ins.crossed_edge;
    out << "\n";
  }
  return out.str();
}

}  // namespace oneplane
