#pragma once

// Structural and density checks: face/vertex structure of maximal drawings,
// crossing-face incidence, the counting inequalities, the exact-rational
// density bounds, and detection of crossings surrounded by four false 4-faces.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

// Exact fraction; bounds never touch floating point.
struct Rational {
  long long num = 0;
  long long den = 1;
};

long long ceil_div(long long num, long long den);

// ceil(7n/3 - 14/3)
long long ic_lower_bound(int n);
// ceil(11n/5 - 18/5)
long long nic_lower_bound(int n);
// ceil(7n/3) - 3, defined for n >= 5
long long one_plane_lower_bound(int n);

// 13n/4 - 6, 18n/5 - 36/5, 4n - 8, 3n - 6
Rational upper_bound(DrawingClass cls, int n);

enum class CheckStatus { Pass, Fail, NotApplicable };

struct CheckResult {
  CheckStatus status = CheckStatus::NotApplicable;
  std::string witness;  // set on failure

  bool failed() const { return status == CheckStatus::Fail; }
};

struct StructureReport {
  CheckResult prop21_adjacency;
  CheckResult prop21_vertex_range;
  CheckResult prop21_clique;
  CheckResult prop21_min_degree;
  CheckResult lemma22_face_sizes;
  CheckResult prop23_incidence;
  CheckResult prop23_crossing_caps;
  // Unconditional checks, evaluated for every drawing.
  CheckResult handshake;
  CheckResult euler;
  CheckResult class_hierarchy;

  bool all_ok() const;
  std::vector<std::pair<std::string, const CheckResult*>> items() const;
};

struct BoundReport {
  long long lower_bound_required = 0;
  Rational upper_bound_allowed;
  CheckResult lower_bound;
  CheckResult upper_bound;
  CheckResult lemma24;
  CheckResult lemma25;
  CheckResult lemma26;
  bool lemma26_applicable = false;
  CheckResult claim41;

  bool all_ok() const;
  std::vector<std::pair<std::string, const CheckResult*>> items() const;
};

struct CStarReport {
  std::vector<int> members;          // crossing node ids, ascending
  std::map<int, int> r_star;         // member -> 0..4 (absent for non-members)
};

// Faces incident with crossing `crossing_node`: every face whose walk passes
// through the node, plus any true 4-face whose vertex set equals the
// crossing's four endpoints.  Sorted face ids.
std::vector<int> crossing_face_incidence(const Drawing& d, int crossing_node);

StructureReport verify_structure(const Drawing& d, bool assume_maximal);

BoundReport verify_bounds(const Census& cen, DrawingClass cls, bool maximal);

CStarReport detect_c_star(const Drawing& d);

}  // namespace oneplane
