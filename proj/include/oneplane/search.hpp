#pragma once

// Desk-scale independent verification: exhaustive enumeration of small
// maximal drawings and seeded random sampling of saturated drawings.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Unordered pairs of edge indices designated to cross.  Pairs must be
// edge-disjoint with four distinct endpoints per pair, and the endpoint sets
// of distinct pairs must satisfy the class constraint.
struct CrossingSpec {
  std::vector<std::pair<int, int>> pairs;
};

void check_crossing_spec(const SimpleGraph& g, const CrossingSpec& spec,
                         DrawingClass cls);  // throws InvalidSpec

// First (in deterministic order) drawing realizing exactly the specified
// crossings, or nullopt when no spherical embedding exists.
std::optional<Drawing> realizable(const SimpleGraph& g, const CrossingSpec& spec,
                                  DrawingClass cls = DrawingClass::OnePlane);

// Number of combinatorially distinct spherical embeddings realizing the
// specified crossings (labeled nodes; both chiralities counted).
long long count_embeddings(const SimpleGraph& g, const CrossingSpec& spec,
                           DrawingClass cls = DrawingClass::OnePlane);

struct EnumResult {
  int n = 0;
  DrawingClass cls = DrawingClass::OnePlane;
  int c_max = 0;
  long long examined = 0;       // distinct realizable drawings
  long long maximal = 0;
  long long min_edges_maximal = -1;
  std::optional<Drawing> witness;
};

// Iterates every labeled simple connected graph on n vertices, every valid
// CrossingSpec with at most c_max pairs, and every combinatorially distinct
// spherical embedding.  Throws BudgetExceeded when the work cap is hit.
// `on_maximal` (when set) observes every maximal drawing found.
EnumResult enumerate_maximal_small(
    int n, DrawingClass cls, int c_max, long long budget = 500'000'000,
    const std::function<void(const Drawing&)>& on_maximal = nullptr);

// Deterministic in seed: grows a random plane skeleton, applies a few random
// one-cross insertions, then saturates under the class with a seeded policy.
Drawing random_saturated(int n, DrawingClass cls, std::uint64_t seed);

}  // namespace oneplane
