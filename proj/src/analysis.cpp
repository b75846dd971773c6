#include "oneplane/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace oneplane {

long long ceil_div(long long num, long long den) {
  // den > 0; rounds toward positive infinity.
  long long q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

long long ic_lower_bound(int n) { return ceil_div(7LL * n - 14, 3); }

long long nic_lower_bound(int n) { return ceil_div(11LL * n - 18, 5); }

long long one_plane_lower_bound(int n) { return ceil_div(7LL * n, 3) - 3; }

Rational upper_bound(DrawingClass cls, int n) {
  switch (cls) {
    case DrawingClass::Plane: return {3LL * n - 6, 1};
    case DrawingClass::OnePlane: return {4LL * n - 8, 1};
    case DrawingClass::IcPlane: return {13LL * n - 24, 4};
    case DrawingClass::NicPlane: return {18LL * n - 36, 5};
  }
  return {0, 1};
}

namespace {

CheckResult pass() { return {CheckStatus::Pass, ""}; }
CheckResult fail(std::string witness) { return {CheckStatus::Fail, std::move(witness)}; }
CheckResult not_applicable() { return {CheckStatus::NotApplicable, ""}; }

// Strongest class the drawing validates as, for the face-size range.
DrawingClass strongest_class(const Drawing& d) {
  if (validate(d, DrawingClass::Plane).ok) return DrawingClass::Plane;
  if (validate(d, DrawingClass::IcPlane).ok) return DrawingClass::IcPlane;
  if (validate(d, DrawingClass::NicPlane).ok) return DrawingClass::NicPlane;
  return DrawingClass::OnePlane;
}

}  // namespace

std::vector<int> crossing_face_incidence(const Drawing& d, int crossing_node) {
  std::set<int> incident;
  for (const Face& f : d.faces())
    for (int dart : f.boundary)
      if (d.dart_tail(dart) == crossing_node) incident.insert(f.id);
  auto k4 = d.crossing_endpoints(crossing_node);
  std::vector<int> k4v(k4.begin(), k4.end());
  for (const Face& f : d.faces())
    if (f.is_true && f.size() == 4 && f.vertices == k4v) incident.insert(f.id);
  return {incident.begin(), incident.end()};
}

bool StructureReport::all_ok() const {
  for (auto& [name, check] : items())
    if (check->failed()) return false;
  return true;
}

std::vector<std::pair<std::string, const CheckResult*>> StructureReport::items() const {
  return {{"prop21_adjacency", &prop21_adjacency},
          {"prop21_vertex_range", &prop21_vertex_range},
          {"prop21_clique", &prop21_clique},
          {"prop21_min_degree", &prop21_min_degree},
          {"lemma22_face_sizes", &lemma22_face_sizes},
          {"prop23_incidence", &prop23_incidence},
          {"prop23_crossing_caps", &prop23_crossing_caps},
          {"handshake", &handshake},
          {"euler", &euler},
          {"class_hierarchy", &class_hierarchy}};
}

StructureReport verify_structure(const Drawing& d, bool assume_maximal) {
  StructureReport report;
  const int n = d.vertex_count();

  // Unconditional: sum of face sizes equals twice the segment count.
  long long size_sum = 0;
  for (const Face& f : d.faces()) size_sum += f.size();
  report.handshake = size_sum == 2LL * static_cast<long long>(d.segments().size())
                         ? pass()
                         : fail("sum=" + std::to_string(size_sum));

  // Unconditional: Euler formula on the planarization.
  long long euler = d.node_count() - static_cast<long long>(d.segments().size()) +
                    static_cast<long long>(d.faces().size());
  report.euler = euler == 2 ? pass() : fail("V-E+F=" + std::to_string(euler));

  // Unconditional: plane => ic => nic => 1-plane as predicates.
  {
    bool p = validate(d, DrawingClass::Plane).ok;
    bool ic = validate(d, DrawingClass::IcPlane).ok;
    bool nic = validate(d, DrawingClass::NicPlane).ok;
    bool op = validate(d, DrawingClass::OnePlane).ok;
    bool chain = (!p || ic) && (!ic || nic) && (!nic || op);
    report.class_hierarchy = chain ? pass() : fail("hierarchy broken");
  }

  // The face-structure statements cover maximal drawings of the NIC class
  // and its subclasses; a drawing that is merely 1-plane can carry faces
  // outside their reach (a four-vertex boundary with a crossing on it, say),
  // so the checks are not applicable there.
  bool covered = validate(d, DrawingClass::NicPlane).ok;
  if (!assume_maximal || !covered) {
    report.prop21_adjacency = not_applicable();
    report.prop21_vertex_range = not_applicable();
    report.prop21_clique = not_applicable();
    report.prop21_min_degree = not_applicable();
    report.lemma22_face_sizes = not_applicable();
    report.prop23_incidence = not_applicable();
    report.prop23_crossing_caps = not_applicable();
    return report;
  }

  // Any two vertices on a face boundary are adjacent.
  report.prop21_adjacency = pass();
  for (const Face& f : d.faces()) {
    for (size_t i = 0; i < f.vertices.size() && !report.prop21_adjacency.failed(); ++i)
      for (size_t j = i + 1; j < f.vertices.size(); ++j)
        if (!d.edge_between(f.vertices[i], f.vertices[j])) {
          report.prop21_adjacency =
              fail("face=" + std::to_string(f.id) + " pair=" +
                   std::to_string(f.vertices[i]) + "," + std::to_string(f.vertices[j]));
          break;
        }
    if (report.prop21_adjacency.failed()) break;
  }

  // Between two and four vertices per boundary; two => false 3-face,
  // four => true 4-face.
  report.prop21_vertex_range = pass();
  for (const Face& f : d.faces()) {
    size_t k = f.vertices.size();
    bool ok = k >= 2 && k <= 4;
    if (ok && k == 2) ok = !f.is_true && f.size() == 3;
    if (ok && k == 4) ok = f.is_true && f.size() == 4;
    if (!ok) {
      report.prop21_vertex_range = fail("face=" + std::to_string(f.id));
      break;
    }
  }

  // Crossing endpoints form a clique.
  report.prop21_clique = pass();
  for (int ci = 0; ci < d.crossing_count() && !report.prop21_clique.failed(); ++ci) {
    auto ends = d.crossing_endpoints(n + ci);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j)
        if (!d.edge_between(ends[i], ends[j])) {
          report.prop21_clique = fail("crossing=" + std::to_string(n + ci));
          break;
        }
  }

  report.prop21_min_degree = pass();
  for (int v = 0; v < n; ++v)
    if (d.graph_degree(v) < 2) {
      report.prop21_min_degree = fail("vertex=" + std::to_string(v));
      break;
    }

  // Face sizes: 3..4 for IC drawings, 3..6 otherwise.
  int max_size = strongest_class(d) == DrawingClass::IcPlane ||
                         strongest_class(d) == DrawingClass::Plane
                     ? 4
                     : 6;
  report.lemma22_face_sizes = pass();
  for (const Face& f : d.faces())
    if (f.size() < 3 || f.size() > max_size) {
      report.lemma22_face_sizes =
          fail("face=" + std::to_string(f.id) + " size=" + std::to_string(f.size()));
      break;
    }

  // Every k-face with 4 <= k <= 6 is incident with exactly k-3 crossings.
  report.prop23_incidence = pass();
  {
    std::vector<int> incident_count(d.faces().size(), 0);
    for (int ci = 0; ci < d.crossing_count(); ++ci)
      for (int face : crossing_face_incidence(d, n + ci)) ++incident_count[face];
    for (const Face& f : d.faces()) {
      if (f.size() < 4 || f.size() > 6) continue;
      if (incident_count[f.id] != f.size() - 3) {
        report.prop23_incidence =
            fail("face=" + std::to_string(f.id) + " incident=" +
                 std::to_string(incident_count[f.id]));
        break;
      }
    }
  }

  // Each crossing: at most one true 4-face and at most four false faces of
  // size >= 4.
  report.prop23_crossing_caps = pass();
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    int true4 = 0, false_big = 0;
    for (int face : crossing_face_incidence(d, n + ci)) {
      const Face& f = d.faces()[face];
      if (f.is_true && f.size() == 4) ++true4;
      if (!f.is_true && f.size() >= 4) ++false_big;
    }
    if (true4 > 1 || false_big > 4) {
      report.prop23_crossing_caps = fail("crossing=" + std::to_string(n + ci));
      break;
    }
  }

  return report;
}

bool BoundReport::all_ok() const {
  for (auto& [name, check] : items())
    if (check->failed()) return false;
  return true;
}

std::vector<std::pair<std::string, const CheckResult*>> BoundReport::items() const {
  return {{"lower_bound", &lower_bound}, {"upper_bound", &upper_bound},
          {"lemma24", &lemma24},         {"lemma25", &lemma25},
          {"lemma26", &lemma26},         {"claim41", &claim41}};
}

BoundReport verify_bounds(const Census& cen, DrawingClass cls, bool maximal) {
  BoundReport report;
  const long long n = cen.n;
  const long long m = cen.m;
  const long long c = cen.c;
  const long long h = cen.h;

  switch (cls) {
    case DrawingClass::IcPlane: report.lower_bound_required = ic_lower_bound(cen.n); break;
    case DrawingClass::NicPlane: report.lower_bound_required = nic_lower_bound(cen.n); break;
    case DrawingClass::OnePlane:
      report.lower_bound_required = cen.n >= 5 ? one_plane_lower_bound(cen.n) : 0;
      break;
    case DrawingClass::Plane: report.lower_bound_required = 3 * n - 6; break;
  }
  report.upper_bound_allowed = upper_bound(cls, cen.n);

  // Upper bound holds for every drawing of the class.
  report.upper_bound =
      m * report.upper_bound_allowed.den <= report.upper_bound_allowed.num
          ? pass()
          : fail("m=" + std::to_string(m));

  if (maximal && !(cls == DrawingClass::OnePlane && n < 5)) {
    report.lower_bound = m >= report.lower_bound_required
                             ? pass()
                             : fail("m=" + std::to_string(m) + " required=" +
                                    std::to_string(report.lower_bound_required));
  } else {
    report.lower_bound = not_applicable();
  }

  // Lemma inequalities: 4c + h <= n for maximal IC, 6c + 2h <= m for maximal NIC.
  report.lemma24 = not_applicable();
  report.lemma25 = not_applicable();
  if (maximal && cls == DrawingClass::IcPlane)
    report.lemma24 = 4 * c + h <= n ? pass() : fail("4c+h=" + std::to_string(4 * c + h));
  if (maximal && cls == DrawingClass::NicPlane)
    report.lemma25 = 6 * c + 2 * h <= m ? pass() : fail("6c+2h=" + std::to_string(6 * c + 2 * h));

  // m = 3n - 6 + c whenever every face is a 3-face.
  bool all_three = true;
  bool all_three_or_four = true;
  for (auto& [size, counts] : cen.face_histogram) {
    if (size != 3) all_three = false;
    if (size != 3 && size != 4) all_three_or_four = false;
  }
  report.lemma26_applicable = all_three;
  report.lemma26 = not_applicable();
  if (all_three)
    report.lemma26 = m == 3 * n - 6 + c
                         ? pass()
                         : fail("m=" + std::to_string(m) + " expected=" +
                                std::to_string(3 * n - 6 + c));

  // m >= 3n - 6 - 4c on maximal drawings whose faces all have size 3 or 4.
  report.claim41 = not_applicable();
  if (maximal && all_three_or_four)
    report.claim41 = m >= 3 * n - 6 - 4 * c
                         ? pass()
                         : fail("m=" + std::to_string(m) + " floor=" +
                                std::to_string(3 * n - 6 - 4 * c));

  return report;
}

CStarReport detect_c_star(const Drawing& d) {
  CStarReport report;
  const int n = d.vertex_count();
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    int node = n + ci;
    // Faces whose walk passes through the crossing node.
    std::set<int> through;
    for (const Face& f : d.faces())
      for (int dart : f.boundary)
        if (d.dart_tail(dart) == node) through.insert(f.id);
    if (through.size() != 4) continue;
    bool all_false_4 = true;
    for (int fid : through) {
      const Face& f = d.faces()[fid];
      if (f.is_true || f.size() != 4) all_false_4 = false;
    }
    if (!all_false_4) continue;

    report.members.push_back(node);
    int not_faces = 0;
    for (int fid : through) {
      const Face& f = d.faces()[fid];
      // Walk as (node->p, p->w, w->q, q->node); the region beyond path
      // p-w-q is a face iff both opposite darts border one true 3-face.
      int start = -1;
      for (int i = 0; i < 4; ++i)
        if (d.dart_tail(f.boundary[i]) == node) start = i;
      int dart_pw = f.boundary[(start + 1) % 4];
      int dart_wq = f.boundary[(start + 2) % 4];
      int beyond1 = d.face_of(dart_twin(dart_pw));
      int beyond2 = d.face_of(dart_twin(dart_wq));
      const Face& beyond = d.faces()[beyond1];
      bool is_face = beyond1 == beyond2 && beyond.is_true && beyond.size() == 3;
      if (!is_face) ++not_faces;
    }
    report.r_star[node] = not_faces;
  }
  return report;
}

}  // namespace oneplane
