#include "oneplane/search.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "oneplane/detail/rng.hpp"
#include "oneplane/io.hpp"
#include "oneplane/saturation.hpp"

namespace oneplane {

namespace {

[[noreturn]] void bad_spec(const std::string& what) {
  throw DrawingError(ErrorCode::InvalidSpec, what);
}

std::array<int, 4> pair_endpoints(const SimpleGraph& g, std::pair<int, int> pair) {
  auto [e1, e2] = pair;
  std::array<int, 4> out{g.edges[e1].first, g.edges[e1].second,
                         g.edges[e2].first, g.edges[e2].second};
  std::sort(out.begin(), out.end());
  return out;
}

// Enumerates every spherical embedding of a connected skeleton by inserting
// edges one at a time into faces of the partial map.  Every reachable state
// is planar by construction, and each final embedding restricts to a unique
// slot at every level, so each rotation system is produced exactly once.
class EmbeddingEnumerator {
 public:
  // hub nodes are first_hub..nodes-1; their rotations must alternate between
  // the two spoke pairs listed in hub_spokes.
  EmbeddingEnumerator(int nodes, std::vector<std::pair<int, int>> edges,
                      std::vector<int> edge_tags,
                      std::vector<std::array<int, 4>> hub_spokes, int first_hub,
                      long long* work, long long budget)
      : nodes_(nodes),
        hub_spokes_(std::move(hub_spokes)),
        first_hub_(first_hub),
        work_(work),
        budget_(budget) {
    order_connected(std::move(edges), std::move(edge_tags));
    int darts = 2 * static_cast<int>(edges_.size());
    next_.assign(darts, -1);
    prev_.assign(darts, -1);
    degree_.assign(nodes_, 0);
    face_label_.assign(darts, -1);
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& edge_tags() const { return tags_; }

  // emit receives node rotations (dart lists); return false to stop the search.
  void run(const std::function<bool(const std::vector<std::vector<int>>&)>& emit) {
    emit_ = emit;
    stop_ = false;
    if (!edges_.empty()) descend(0);
  }

 private:
  int tail(int dart) const {
    auto [a, b] = edges_[dart >> 1];
    return (dart & 1) ? b : a;
  }
  int head(int dart) const { return tail(dart ^ 1); }

  void order_connected(std::vector<std::pair<int, int>> edges, std::vector<int> tags) {
    std::vector<bool> used(edges.size(), false);
    std::vector<bool> seen(nodes_, false);
    seen[0] = true;
    for (size_t step = 0; step < edges.size(); ++step) {
      size_t pick = edges.size();
      for (size_t i = 0; i < edges.size(); ++i)
        if (!used[i] && (seen[edges[i].first] || seen[edges[i].second])) {
          pick = i;
          break;
        }
      if (pick == edges.size()) bad_spec("skeleton is disconnected");
      used[pick] = true;
      seen[edges[pick].first] = seen[edges[pick].second] = true;
      edges_.push_back(edges[pick]);
      tags_.push_back(tags[pick]);
    }
  }

  void link_single(int dart) {
    next_[dart] = dart;
    prev_[dart] = dart;
  }
  void link_before(int dart, int anchor) {
    int p = prev_[anchor];
    next_[p] = dart;
    prev_[dart] = p;
    next_[dart] = anchor;
    prev_[anchor] = dart;
  }
  void unlink(int dart) {
    next_[prev_[dart]] = next_[dart];
    prev_[next_[dart]] = prev_[dart];
    prev_[dart] = -1;
    next_[dart] = -1;
  }

  bool hub_alternates(int hub, int known_dart) const {
    const auto& spokes = hub_spokes_[hub - first_hub_];
    std::array<int, 4> around{};
    int dart = known_dart;
    for (int i = 0; i < 4; ++i) {
      around[i] = head(dart);
      dart = next_[dart];
    }
    auto in_first_pair = [&](int w) { return w == spokes[0] || w == spokes[1]; };
    bool even_first = in_first_pair(around[0]);
    for (int i = 0; i < 4; ++i)
      if (in_first_pair(around[i]) != ((i % 2 == 0) == even_first)) return false;
    return true;
  }

  void spend() {
    if (++*work_ > budget_)
      throw DrawingError(ErrorCode::BudgetExceeded,
                         "work limit " + std::to_string(budget_) + " hit");
  }

  // Labels faces of the partial map over the first `level` edges.
  void label_faces(int level) {
    int darts = 2 * level;
    std::fill(face_label_.begin(), face_label_.begin() + darts, -1);
    int next_label = 0;
    for (int start = 0; start < darts; ++start) {
      if (face_label_[start] != -1) continue;
      int dart = start;
      do {
        face_label_[dart] = next_label;
        dart = next_[dart ^ 1];
      } while (dart != start);
      ++next_label;
    }
  }

  void emit_current() {
    int darts = 2 * static_cast<int>(edges_.size());
    std::vector<std::vector<int>> rotations(nodes_);
    std::vector<bool> done(darts, false);
    for (int dart = 0; dart < darts; ++dart) {
      if (done[dart]) continue;
      int node = tail(dart);
      int cur = dart;
      do {
        rotations[node].push_back(cur);
        done[cur] = true;
        cur = next_[cur];
      } while (cur != dart);
    }
    if (!emit_(rotations)) stop_ = true;
  }

  void maybe_recurse(int level, int touched1, int touched2) {
    for (int node : {touched1, touched2})
      if (node >= first_hub_ && degree_[node] == 4) {
        int dart = -1;
        for (int cand : {2 * level, 2 * level + 1})
          if (tail(cand) == node) dart = cand;
        if (dart != -1 && !hub_alternates(node, dart)) return;
      }
    if (level + 1 == static_cast<int>(edges_.size()))
      emit_current();
    else
      descend(level + 1);
  }

  void descend(int level) {
    if (stop_) return;
    spend();
    auto [a, b] = edges_[level];
    int da = 2 * level;      // tail a
    int db = 2 * level + 1;  // tail b

    if (level == 0) {
      link_single(da);
      link_single(db);
      degree_[a] = degree_[b] = 1;
      maybe_recurse(0, a, b);
      degree_[a] = degree_[b] = 0;
      unlink(da);
      unlink(db);
      return;
    }

    bool a_new = degree_[a] == 0;
    bool b_new = degree_[b] == 0;

    if (a_new || b_new) {
      int fresh_dart = a_new ? da : db;
      int fresh_node = a_new ? a : b;
      int grow_dart = a_new ? db : da;
      int grow_node = a_new ? b : a;
      for (int anchor = 0; anchor < 2 * level && !stop_; ++anchor) {
        if (prev_[anchor] == -1 || tail(anchor) != grow_node) continue;
        spend();
        link_before(grow_dart, anchor);
        link_single(fresh_dart);
        ++degree_[grow_node];
        degree_[fresh_node] = 1;
        maybe_recurse(level, grow_node, fresh_node);
        degree_[fresh_node] = 0;
        --degree_[grow_node];
        unlink(fresh_dart);
        unlink(grow_dart);
      }
      return;
    }

    // Collect the slot pairs up front; deeper levels overwrite the labels.
    label_faces(level);
    std::vector<std::pair<int, int>> slots;
    for (int anchor = 0; anchor < 2 * level; ++anchor) {
      if (tail(anchor) != a) continue;
      for (int anchor2 = 0; anchor2 < 2 * level; ++anchor2)
        if (tail(anchor2) == b && face_label_[anchor] == face_label_[anchor2])
          slots.emplace_back(anchor, anchor2);
    }
    for (auto [anchor, anchor2] : slots) {
      if (stop_) return;
      spend();
      link_before(da, anchor);
      link_before(db, anchor2);
      ++degree_[a];
      ++degree_[b];
      maybe_recurse(level, a, b);
      --degree_[a];
      --degree_[b];
      unlink(db);
      unlink(da);
    }
  }

  int nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> tags_;
  std::vector<std::array<int, 4>> hub_spokes_;
  int first_hub_;
  long long* work_;
  long long budget_;
  bool stop_ = false;
  std::vector<int> next_, prev_, degree_, face_label_;
  std::function<bool(const std::vector<std::vector<int>>&)> emit_;
};

// Planarization skeleton: four spokes per hub (listed first so alternation
// pruning bites early), then the uncrossed edges.  Tags carry g edge ids.
struct Skeleton {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> tags;
  std::vector<std::array<int, 4>> hub_spokes;
};

Skeleton make_skeleton(const SimpleGraph& g, const CrossingSpec& spec) {
  Skeleton sk;
  sk.nodes = g.n + static_cast<int>(spec.pairs.size());
  for (int p = 0; p < static_cast<int>(spec.pairs.size()); ++p) {
    int hub = g.n + p;
    auto [e1, e2] = spec.pairs[p];
    auto [a, b] = g.edges[e1];
    auto [c, d] = g.edges[e2];
    sk.hub_spokes.push_back({a, b, c, d});
    for (auto [endpoint, edge] :
         {std::pair{a, e1}, std::pair{b, e1}, std::pair{c, e2}, std::pair{d, e2}}) {
      sk.edges.emplace_back(hub, endpoint);
      sk.tags.push_back(edge);
    }
  }
  std::vector<bool> crossed(g.edges.size(), false);
  for (auto [e1, e2] : spec.pairs) crossed[e1] = crossed[e2] = true;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    if (!crossed[i]) {
      sk.edges.push_back(g.edges[i]);
      sk.tags.push_back(i);
    }
  return sk;
}

// Converts one enumerated rotation system into a Drawing.
Drawing realize_rotations(const SimpleGraph& g, const CrossingSpec& spec,
                          const std::vector<std::pair<int, int>>& pedges,
                          const std::vector<int>& tags,
                          const std::vector<std::vector<int>>& rotations) {
  DrawingBuilder b;
  b.n = g.n;
  b.vertex_rotation.resize(g.n);
  std::vector<int> crossing_of_edge(g.edges.size(), -1);
  for (int p = 0; p < static_cast<int>(spec.pairs.size()); ++p) {
    crossing_of_edge[spec.pairs[p].first] = p;
    crossing_of_edge[spec.pairs[p].second] = p;
  }
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    b.add_edge(g.edges[i].first, g.edges[i].second, crossing_of_edge[i]);

  auto dart_head = [&](int dart) {
    auto [x, y] = pedges[dart >> 1];
    return (dart & 1) ? x : y;
  };

  for (int v = 0; v < g.n; ++v)
    for (int dart : rotations[v]) b.vertex_rotation[v].push_back(tags[dart >> 1]);
  b.crossing_rotation.resize(spec.pairs.size());
  for (int p = 0; p < static_cast<int>(spec.pairs.size()); ++p) {
    const auto& rot = rotations[g.n + p];
    for (int i = 0; i < 4; ++i)
      b.crossing_rotation[p][i] =
          DrawingBuilder::Port{tags[rot[i] >> 1], dart_head(rot[i])};
  }
  return b.build();
}

bool connected(const SimpleGraph& g) {
  if (g.n == 0) return false;
  std::vector<int> parent(g.n);
  for (int i = 0; i < g.n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : g.edges) parent[find(a)] = find(b);
  for (int v = 1; v < g.n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

}  // namespace

void check_crossing_spec(const SimpleGraph& g, const CrossingSpec& spec,
                         DrawingClass cls) {
  std::set<int> used;
  for (auto [e1, e2] : spec.pairs) {
    if (e1 < 0 || e2 < 0 || e1 >= static_cast<int>(g.edges.size()) ||
        e2 >= static_cast<int>(g.edges.size()) || e1 == e2)
      bad_spec("crossing pair references invalid edges");
    if (!used.insert(e1).second || !used.insert(e2).second)
      bad_spec("pairs must be edge-disjoint");
    std::set<int> ends{g.edges[e1].first, g.edges[e1].second, g.edges[e2].first,
                       g.edges[e2].second};
    if (ends.size() != 4) bad_spec("crossing pair endpoints must be distinct");
  }
  if (cls == DrawingClass::Plane && !spec.pairs.empty())
    bad_spec("plane class admits no crossings");
  size_t max_shared = cls == DrawingClass::IcPlane    ? 0
                      : cls == DrawingClass::NicPlane ? 1
                                                      : 4;
  for (size_t i = 0; i < spec.pairs.size(); ++i)
    for (size_t j = i + 1; j < spec.pairs.size(); ++j) {
      auto a = pair_endpoints(g, spec.pairs[i]);
      auto b = pair_endpoints(g, spec.pairs[j]);
      std::vector<int> shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(shared));
      if (shared.size() > max_shared) bad_spec("pair endpoint sets violate class constraint");
    }
}

std::optional<Drawing> realizable(const SimpleGraph& g, const CrossingSpec& spec,
                                  DrawingClass cls) {
  if (g.n < 3) bad_spec("graph too small");
  if (!connected(g)) bad_spec("graph must be connected");
  check_crossing_spec(g, spec, cls);

  Skeleton sk = make_skeleton(g, spec);
  // Euler rules out anything denser than a triangulated planarization.
  if (static_cast<int>(sk.edges.size()) > 3 * sk.nodes - 6) return std::nullopt;

  long long work = 0;
  EmbeddingEnumerator enumerator(sk.nodes, sk.edges, sk.tags, sk.hub_spokes, g.n,
                                 &work, 500'000'000);
  std::optional<Drawing> result;
  enumerator.run([&](const std::vector<std::vector<int>>& rotations) {
    result = realize_rotations(g, spec, enumerator.edges(), enumerator.edge_tags(),
                               rotations);
    return false;  // first embedding wins
  });
  return result;
}

long long count_embeddings(const SimpleGraph& g, const CrossingSpec& spec,
                           DrawingClass cls) {
  if (g.n < 3) bad_spec("graph too small");
  if (!connected(g)) bad_spec("graph must be connected");
  check_crossing_spec(g, spec, cls);
  Skeleton sk = make_skeleton(g, spec);
  if (static_cast<int>(sk.edges.size()) > 3 * sk.nodes - 6) return 0;
  long long work = 0;
  long long count = 0;
  EmbeddingEnumerator enumerator(sk.nodes, sk.edges, sk.tags, sk.hub_spokes, g.n,
                                 &work, 500'000'000);
  enumerator.run([&](const std::vector<std::vector<int>>&) {
    ++count;
    return true;
  });
  return count;
}

EnumResult enumerate_maximal_small(
    int n, DrawingClass cls, int c_max, long long budget,
    const std::function<void(const Drawing&)>& on_maximal) {
  if (n < 3 || n > 6) bad_spec("enumeration supports 3 <= n <= 6");
  if (c_max < 0 || c_max > 2) bad_spec("enumeration supports c_max <= 2");

  EnumResult result;
  result.n = n;
  result.cls = cls;
  result.c_max = c_max;
  long long work = 0;

  int slots = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);

  for (int mask = 0; mask < (1 << slots); ++mask) {
    SimpleGraph g;
    g.n = n;
    for (int i = 0; i < slots; ++i)
      if (mask & (1 << i)) g.edges.push_back(all_pairs[i]);
    if (!connected(g)) continue;

    // Valid crossing specs with at most c_max pairs, the empty spec first.
    std::vector<CrossingSpec> specs;
    specs.push_back({});
    std::vector<std::pair<int, int>> indep;
    int m = static_cast<int>(g.edges.size());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        std::set<int> ends{g.edges[i].first, g.edges[i].second, g.edges[j].first,
                           g.edges[j].second};
        if (ends.size() == 4) indep.emplace_back(i, j);
      }
    if (c_max >= 1 && cls != DrawingClass::Plane)
      for (auto pr : indep) specs.push_back(CrossingSpec{{pr}});
    if (c_max >= 2 && cls != DrawingClass::Plane)
      for (size_t i = 0; i < indep.size(); ++i)
        for (size_t j = i + 1; j < indep.size(); ++j) {
          CrossingSpec spec{{indep[i], indep[j]}};
          try {
            check_crossing_spec(g, spec, cls);
          } catch (const DrawingError&) {
            continue;
          }
          specs.push_back(spec);
        }

    for (const CrossingSpec& spec : specs) {
      Skeleton sk = make_skeleton(g, spec);
      if (static_cast<int>(sk.edges.size()) > 3 * sk.nodes - 6) continue;
      std::set<std::string> seen;  // canonical-form dedup within (g, spec)
      EmbeddingEnumerator enumerator(sk.nodes, sk.edges, sk.tags, sk.hub_spokes,
                                     g.n, &work, budget);
      enumerator.run([&](const std::vector<std::vector<int>>& rotations) {
        Drawing d = realize_rotations(g, spec, enumerator.edges(),
                                      enumerator.edge_tags(), rotations);
        if (!seen.insert(serialize_drawing(d)).second) return true;
        if (!validate(d, cls).ok) return true;
        ++result.examined;
        if (is_maximal(d, cls)) {
          ++result.maximal;
          if (on_maximal) on_maximal(d);
          long long edges = static_cast<long long>(d.edges().size());
          if (result.min_edges_maximal < 0 || edges < result.min_edges_maximal) {
            result.min_edges_maximal = edges;
            result.witness = d;
          }
        }
        return true;
      });
    }
  }
  return result;
}

Drawing random_saturated(int n, DrawingClass cls, std::uint64_t seed) {
  if (n < 3) bad_spec("need n >= 3");
  detail::SplitMix64 rng(seed);

  DrawingBuilder b;
  b.n = 3;
  b.vertex_rotation.resize(3);
  int e01 = b.add_edge(0, 1);
  int e02 = b.add_edge(0, 2);
  int e12 = b.add_edge(1, 2);
  b.vertex_rotation[0] = {e01, e02};
  b.vertex_rotation[1] = {e12, e01};
  b.vertex_rotation[2] = {e02, e12};
  Drawing d = b.build();

  for (int v = 3; v < n; ++v) {
    const auto& faces = d.faces();
    const Face& f = faces[rng.below(static_cast<int>(faces.size()))];
    std::vector<int> occ;
    for (int i = 0; i < f.size(); ++i)
      if (!d.is_crossing_node(d.dart_tail(f.boundary[i]))) occ.push_back(i);
    int first = occ[rng.below(static_cast<int>(occ.size()))];
    std::vector<int> others;
    for (int i : occ)
      if (d.dart_tail(f.boundary[i]) != d.dart_tail(f.boundary[first]))
        others.push_back(i);
    int second = others[rng.below(static_cast<int>(others.size()))];
    d = add_vertex_in_face(d, f.id, first, second);
  }

  int extra_crossings = rng.below(3);
  for (int i = 0; i < extra_crossings; ++i) {
    auto options = addable_edges(d, cls);
    std::erase_if(options, [](const Insertion& ins) {
      return ins.kind != Insertion::Kind::OneCross;
    });
    if (options.empty()) break;
    d = insert_edge(d, options[rng.below(static_cast<int>(options.size()))]);
  }

  return saturate(d, cls, SaturationPolicy::seeded(rng.next())).drawing;
}

}  // namespace oneplane
