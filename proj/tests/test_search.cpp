#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oneplane/analysis.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/io.hpp"
#include "oneplane/saturation.hpp"
#include "oneplane/search.hpp"

using namespace oneplane;

namespace {

SimpleGraph k4_graph() {
  return SimpleGraph{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

}  // namespace

TEST_CASE("realizable: K4 with crossed diagonals") {
  SimpleGraph g = k4_graph();
  CrossingSpec spec{{{1, 4}}};  // 02 x 13
  auto d = realizable(g, spec, DrawingClass::IcPlane);
  REQUIRE(d.has_value());
  Census cen = census(*d);
  CHECK(cen.n == 4);
  CHECK(cen.m == 6);
  CHECK(cen.c == 1);
  CHECK(cen.t == 4);  // same face profile as the figure drawing
  CHECK(validate(*d, DrawingClass::IcPlane).ok);
}

TEST_CASE("realizable: non-adjacent pair positions still embed") {
  SimpleGraph g = k4_graph();
  CrossingSpec spec{{{0, 5}}};  // 01 x 23
  auto d = realizable(g, spec, DrawingClass::OnePlane);
  REQUIRE(d.has_value());
  CHECK(census(*d).c == 1);
}

TEST_CASE("invalid crossing specs are rejected") {
  SimpleGraph k5{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                     {2, 3}, {2, 4}, {3, 4}}};
  // Two pairs on the same four vertices share more than one endpoint.
  CrossingSpec spec{{{0, 7}, {1, 5}}};  // 01x23 and 02x12? -> overlapping sets
  CHECK_THROWS_AS(realizable(k5, spec, DrawingClass::IcPlane), DrawingError);

  // An adjacent pair can never cross.
  CrossingSpec adjacent{{{0, 1}}};  // 01 x 02 share vertex 0
  CHECK_THROWS_AS(realizable(k5, adjacent, DrawingClass::OnePlane), DrawingError);

  // Disconnected graphs are rejected.
  SimpleGraph disconnected{4, {{0, 1}, {2, 3}}};
  CHECK_THROWS_AS(realizable(disconnected, {}, DrawingClass::OnePlane), DrawingError);
}

TEST_CASE("unrealizable specs return nothing") {
  // K5 drawn plane (no crossings) is impossible.
  SimpleGraph k5{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                     {2, 3}, {2, 4}, {3, 4}}};
  CHECK_FALSE(realizable(k5, {}, DrawingClass::OnePlane).has_value());
}

TEST_CASE("enumeration at n=4 matches the frozen oracle values") {
  EnumResult r = enumerate_maximal_small(4, DrawingClass::IcPlane, 1);
  CHECK(r.examined == 151);
  CHECK(r.maximal == 8);
  CHECK(r.min_edges_maximal == 6);
  CHECK(r.min_edges_maximal >= ic_lower_bound(4));
  REQUIRE(r.witness.has_value());
  CHECK(is_maximal(*r.witness, DrawingClass::IcPlane));
  CHECK(r.witness->edges().size() == 6);
}

TEST_CASE("every enumerated maximal drawing is structurally sound") {
  long long seen = 0;
  EnumResult r = enumerate_maximal_small(
      4, DrawingClass::IcPlane, 1, 500'000'000, [&](const Drawing& d) {
        ++seen;
        StructureReport structure = verify_structure(d, true);
        CHECK(structure.all_ok());
        BoundReport bounds = verify_bounds(census(d), DrawingClass::IcPlane, true);
        CHECK(bounds.all_ok());
      });
  CHECK(seen == r.maximal);
}

TEST_CASE("enumeration respects the work budget") {
  try {
    enumerate_maximal_small(5, DrawingClass::IcPlane, 1, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const DrawingError& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("random_saturated: determinism and base cases") {
  for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
    Drawing a = random_saturated(9, DrawingClass::IcPlane, seed);
    Drawing b = random_saturated(9, DrawingClass::IcPlane, seed);
    CHECK(serialize_drawing(a) == serialize_drawing(b));
    CHECK(is_maximal(a, DrawingClass::IcPlane));
  }
  Drawing different = random_saturated(9, DrawingClass::IcPlane, 3);
  Drawing other = random_saturated(9, DrawingClass::IcPlane, 4);
  CHECK(serialize_drawing(different) != serialize_drawing(other));

  Drawing triangle = random_saturated(3, DrawingClass::IcPlane, 99);
  CHECK(triangle.vertex_count() == 3);
  CHECK(triangle.edges().size() == 3);
}

TEST_CASE("random_saturated meets the density floors") {
  for (int seed = 1; seed <= 25; ++seed) {
    Drawing ic = random_saturated(10, DrawingClass::IcPlane, seed);
    CHECK(static_cast<long long>(ic.edges().size()) >= ic_lower_bound(10));
    Drawing nic = random_saturated(13, DrawingClass::NicPlane, seed);
    CHECK(static_cast<long long>(nic.edges().size()) >= nic_lower_bound(13));
  }
}

TEST_CASE("enumeration under NIC at n=5 and n=6 respects the theorem floor") {
  EnumResult r5 = enumerate_maximal_small(5, DrawingClass::NicPlane, 1);
  CHECK(r5.examined == 12232);
  CHECK(r5.maximal == 150);
  CHECK(r5.min_edges_maximal == 8);
  CHECK(r5.min_edges_maximal >= nic_lower_bound(5));

  EnumResult r6 = enumerate_maximal_small(6, DrawingClass::NicPlane, 1);
  CHECK(r6.min_edges_maximal == 10);
  CHECK(r6.min_edges_maximal >= nic_lower_bound(6));  // = 10: tight here
}

TEST_CASE("two-crossing specs respect the per-class pair constraint") {
  SimpleGraph g{8, {{0, 1}, {2, 3}, {3, 4}, {5, 6}, {2, 4}, {3, 5}}};
  // {0,1,2,3} and {3,4,5,6} share one vertex: fine for NIC, not for IC.
  CrossingSpec one_shared{{{0, 1}, {2, 3}}};
  CHECK_NOTHROW(check_crossing_spec(g, one_shared, DrawingClass::NicPlane));
  CHECK_THROWS_AS(check_crossing_spec(g, one_shared, DrawingClass::IcPlane),
                  DrawingError);
  // {0,1,2,3} and {2,3,4,5} share two vertices: too many even for NIC.
  CrossingSpec two_shared{{{0, 1}, {4, 5}}};
  CHECK_THROWS_AS(check_crossing_spec(g, two_shared, DrawingClass::NicPlane),
                  DrawingError);
  CHECK_NOTHROW(check_crossing_spec(g, two_shared, DrawingClass::OnePlane));
}

namespace {

// Independent embedding oracle: enumerate every rotation system of the
// planarization skeleton (cyclic representative per node, alternating hubs)
// and keep the spherical ones.  Completely separate from the incremental
// face-insertion enumerator it checks.
long long brute_force_embeddings(const SimpleGraph& g, const CrossingSpec& spec) {
  int hubs = static_cast<int>(spec.pairs.size());
  int nodes = g.n + hubs;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 2>> hub_pairs;  // spoke targets per hub: (ab),(cd)
  std::vector<bool> crossed(g.edges.size(), false);
  for (auto [e1, e2] : spec.pairs) crossed[e1] = crossed[e2] = true;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    if (!crossed[i]) edges.push_back(g.edges[i]);
  for (int p = 0; p < hubs; ++p) {
    auto [e1, e2] = spec.pairs[p];
    edges.emplace_back(g.n + p, g.edges[e1].first);
    edges.emplace_back(g.n + p, g.edges[e1].second);
    edges.emplace_back(g.n + p, g.edges[e2].first);
    edges.emplace_back(g.n + p, g.edges[e2].second);
    hub_pairs.push_back({g.edges[e1].first, g.edges[e1].second});
  }
  int num_darts = 2 * static_cast<int>(edges.size());
  auto tail = [&](int dart) {
    return (dart & 1) ? edges[dart >> 1].second : edges[dart >> 1].first;
  };
  std::vector<std::vector<int>> at_node(nodes);
  for (int dart = 0; dart < num_darts; ++dart) at_node[tail(dart)].push_back(dart);

  // successor[d] = next dart in the rotation at tail(d)
  std::vector<int> successor(num_darts, -1);
  long long count = 0;

  auto spherical = [&]() {
    std::vector<bool> seen(num_darts, false);
    int faces = 0;
    for (int start = 0; start < num_darts; ++start) {
      if (seen[start]) continue;
      int dart = start;
      do {
        seen[dart] = true;
        dart = successor[dart ^ 1];
      } while (dart != start);
      ++faces;
    }
    return nodes - static_cast<int>(edges.size()) + faces == 2;
  };

  auto hub_ok = [&](int node) {
    if (node < g.n) return true;
    const auto& pair_ab = hub_pairs[node - g.n];
    auto in_first = [&](int dart) {
      int other = tail(dart ^ 1);
      return other == pair_ab[0] || other == pair_ab[1];
    };
    int dart = at_node[node][0];
    bool expect = in_first(dart);
    for (int i = 0; i < 4; ++i) {
      if (in_first(dart) != ((i % 2 == 0) == expect)) return false;
      dart = successor[dart];
    }
    return true;
  };

  std::function<void(int)> assign = [&](int node) {
    if (node == nodes) {
      if (spherical()) ++count;
      return;
    }
    auto& darts = at_node[node];
    std::vector<int> rest(darts.begin() + 1, darts.end());
    std::sort(rest.begin(), rest.end());
    do {
      int prev = darts[0];
      for (int d : rest) {
        successor[prev] = d;
        prev = d;
      }
      successor[prev] = darts[0];
      if (hub_ok(node)) assign(node + 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  assign(0);
  return count;
}

}  // namespace

TEST_CASE("embedding enumerator agrees with brute-force rotation systems") {
  SimpleGraph k4 = k4_graph();
  SimpleGraph diamond{4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
  SimpleGraph cycle5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
  SimpleGraph star{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
  SimpleGraph bowtie{5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}};
  SimpleGraph dense5{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}};

  auto agree = [&](const SimpleGraph& g, const CrossingSpec& spec) {
    long long dfs = count_embeddings(g, spec);
    long long brute = brute_force_embeddings(g, spec);
    CHECK(dfs == brute);
    return dfs;
  };

  // Plane cases.
  CHECK(agree(k4, {}) == 2);  // 3-connected: a single mirror pair
  agree(diamond, {});
  agree(cycle5, {});
  CHECK(agree(star, {}) == 6);  // (4-1)! cyclic orders at the hub vertex
  agree(bowtie, {});
  agree(dense5, {});

  // One-crossing cases.
  agree(k4, CrossingSpec{{{1, 4}}});   // 02 x 13
  agree(k4, CrossingSpec{{{0, 5}}});   // 01 x 23
  agree(dense5, CrossingSpec{{{1, 6}}});  // 02 x 34
  agree(bowtie, CrossingSpec{{{1, 5}}});  // 02 x 34

  // A two-crossing case on six vertices (prism graph, IC-disjoint pairs).
  SimpleGraph prism{6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                        {0, 3}, {1, 4}, {2, 5}}};
  agree(prism, CrossingSpec{{{0, 4}}});          // 01 x 45
  agree(prism, CrossingSpec{{{0, 5}, {3, 8}}});  // 01x35 and 34x25
}

TEST_CASE("realizable produces exactly the requested crossing pairs") {
  SimpleGraph g = k4_graph();
  CrossingSpec spec{{{1, 4}}};  // edges 02 and 13
  auto d = realizable(g, spec, DrawingClass::IcPlane);
  REQUIRE(d.has_value());
  REQUIRE(d->crossing_count() == 1);
  auto pair = d->crossing_edges(d->vertex_count());
  std::set<std::pair<int, int>> crossed;
  for (int e : pair) crossed.insert({d->edges()[e].u, d->edges()[e].v});
  CHECK(crossed == std::set<std::pair<int, int>>{{0, 2}, {1, 3}});
  // Uncrossed edges stay uncrossed.
  for (const EdgeRecord& e : d->edges())
    if (!crossed.count({e.u, e.v})) CHECK(e.crossed_by == -1);
}
