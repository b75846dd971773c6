#pragma once

// Edge addability, insertion and deterministic saturation.
//
// An edge uv can be added to a drawing in exactly two route shapes:
//   ZeroCross - a curve inside one face whose boundary carries both u and v;
//   OneCross  - a curve from u's face through one uncrossed edge into v's face.
// Distinct boundary occurrences of u or v are distinct insertion slots.

#include <cstdint>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

struct Insertion {
  enum class Kind { ZeroCross, OneCross };

  int u = 0;  // u < v
  int v = 0;
  Kind kind = Kind::ZeroCross;

  // ZeroCross: `face` plus occurrence indices of u and v on its walk.
  // OneCross: `dart` lies on the crossed edge's segment with u's face on its
  // own side; occ_u indexes face_of(dart)'s walk, occ_v face_of(twin)'s walk.
  int face = -1;
  int crossed_edge = -1;
  int dart = -1;
  int occ_u = -1;
  int occ_v = -1;
};

struct SaturationPolicy {
  enum class Mode { Lexicographic, SeededRandom };
  Mode mode = Mode::Lexicographic;
  std::uint64_t seed = 0;

  static SaturationPolicy lexicographic() { return {}; }
  static SaturationPolicy seeded(std::uint64_t seed) {
    return {Mode::SeededRandom, seed};
  }
};

// Every insertion whose application yields a valid drawing of class `cls`,
// sorted by (u, v, kind, face-or-edge, occurrences, dart).
// Throws ClassViolation when d itself does not validate as `cls`.
std::vector<Insertion> addable_edges(const Drawing& d, DrawingClass cls);

// Fast emptiness check used by is_maximal.
bool has_addable_edge(const Drawing& d, DrawingClass cls);

// Applies one insertion.  Throws InvalidInsertion when the route does not
// structurally fit the drawing (class legality is the caller's concern).
Drawing insert_edge(const Drawing& d, const Insertion& ins);

bool is_maximal(const Drawing& d, DrawingClass cls);

struct SaturationResult {
  Drawing drawing;
  std::vector<Insertion> log;
};

SaturationResult saturate(const Drawing& d, DrawingClass cls,
                          const SaturationPolicy& policy = {});

// "add <u> <v> zero <face>" / "add <u> <v> cross <edgeId>" lines.
std::string serialize_log(const std::vector<Insertion>& log);

}  // namespace oneplane
