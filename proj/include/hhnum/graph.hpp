#pragma once

// Finite simple undirected graphs over vertices 0..n-1, the BFS metric and
// the structural subroutines (cuts, tree paths, articulation, spanning trees)
// the rest of the library is built on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hhnum/errors.hpp"

namespace hhnum {

using Vertex = int;

// Unordered pair, stored normalized with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  static Edge of(Vertex x, Vertex y) { return x < y ? Edge{x, y} : Edge{y, x}; }
  bool touches(Vertex v) const { return a == v || b == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  // Normalizes and deduplicates. Throws InvalidGraphError on self-loops or
  // out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw InvalidGraphError("negative vertex count");
    adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : edges) {
      if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) {
        throw InvalidGraphError("edge {" + std::to_string(e.a) + "," +
                                std::to_string(e.b) +
                                "} has an endpoint outside 0.." +
                                std::to_string(n - 1));
      }
      if (e.a == e.b) {
        throw InvalidGraphError("self-loop at vertex " + std::to_string(e.a));
      }
      edges_.push_back(Edge::of(e.a, e.b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    neighbors_.assign(n, {});
    for (const Edge& e : edges_) {
      adjacency_[index(e.a, e.b)] = 1;
      adjacency_[index(e.b, e.a)] = 1;
      neighbors_[e.a].push_back(e.b);
      neighbors_[e.b].push_back(e.a);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
  bool adjacent(Vertex x, Vertex y) const {
    return x != y && adjacency_[index(x, y)] != 0;
  }
  bool has_edge(Edge e) const { return adjacent(e.a, e.b); }

  // Copy with `removed` deleted and `added` inserted.
  Graph with_edge_swapped(Edge removed, Edge added) const {
    std::vector<Edge> next;
    next.reserve(edges_.size() + 1);
    for (const Edge& e : edges_) {
      if (e != removed) next.push_back(e);
    }
    next.push_back(added);
    return Graph(n_, next);
  }

  // Image under the vertex map x -> perm[x].
  Graph relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> next;
    next.reserve(edges_.size());
    for (const Edge& e : edges_) next.push_back(Edge::of(perm[e.a], perm[e.b]));
    return Graph(n_, next);
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  std::size_t index(Vertex x, Vertex y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint8_t> adjacency_;
};

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : flags_(universe, false) {}
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  void insert(Vertex v) { flags_[v] = true; }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe() && flags_[v];
  }
  int universe() const { return static_cast<int>(flags_.size()); }
  int count() const {
    return static_cast<int>(std::count(flags_.begin(), flags_.end(), true));
  }
  bool empty() const { return count() == 0; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (int v = 0; v < universe(); ++v) {
      if (flags_[v]) out.push_back(v);
    }
    return out;
  }

  VertexSet complement() const {
    VertexSet out(universe());
    for (int v = 0; v < universe(); ++v) {
      if (!flags_[v]) out.insert(v);
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> flags_;
};

// All-pairs hop counts of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> table)
      : n_(n), table_(std::move(table)) {}

  int order() const { return n_; }
  int operator()(Vertex x, Vertex y) const {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }
  int diameter() const {
    return table_.empty() ? 0 : *std::max_element(table_.begin(), table_.end());
  }
  std::span<const int> row(Vertex x) const {
    return std::span<const int>(table_).subspan(
        static_cast<std::size_t>(x) * n_, n_);
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) =
      default;

 private:
  int n_ = 0;
  std::vector<int> table_;
};

enum class Shape { kPath, kCycle, kOther };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::kPath:
      return "path";
    case Shape::kCycle:
      return "cycle";
    case Shape::kOther:
      return "other";
  }
  return "other";
}

// ---------------------------------------------------------------------------
// Construction

inline Graph build_graph(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 1) throw InvalidGraphError("a graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [x, y] : pairs) edges.push_back(Edge{x, y});
  return Graph(n, edges);
}

inline Graph build_graph(int n,
                         std::initializer_list<std::pair<int, int>> pairs) {
  return build_graph(n, std::span<const std::pair<int, int>>(pairs.begin(),
                                                             pairs.size()));
}

// P_{n-1}: 0-1-...-(n-1).
inline Graph make_path(int n) {
  if (n < 2) throw PreconditionError("make_path needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return Graph(n, edges);
}

// C_n: the path plus {n-1, 0}.
inline Graph make_cycle(int n) {
  if (n < 3) throw PreconditionError("make_cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  edges.push_back(Edge{0, n - 1});
  return Graph(n, edges);
}

// K_{1,n-1} with center 0.
inline Graph make_star(int n) {
  if (n < 2) throw PreconditionError("make_star needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back(Edge{0, i});
  return Graph(n, edges);
}

inline Graph make_complete(int n) {
  if (n < 1) throw PreconditionError("make_complete needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j});
  }
  return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Metric and predicates

namespace detail {

// Hop counts from `source`; -1 marks unreachable vertices. Edges equal to
// `skip` are ignored and `blocked` (if >= 0) is treated as absent.
inline std::vector<int> bfs(const Graph& g, Vertex source,
                            Edge skip = Edge{-1, -1}, Vertex blocked = -1) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (y == blocked || dist[y] >= 0 || Edge::of(x, y) == skip) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = detail::bfs(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

inline DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto dist = detail::bfs(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (dist[t] < 0) {
        throw PreconditionError(
            "distance matrix requested for a disconnected graph");
      }
      table[static_cast<std::size_t>(s) * n + t] = dist[t];
    }
  }
  return DistanceMatrix(n, std::move(table));
}

inline std::vector<int> degrees(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

inline VertexSet leaves(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

// A single vertex counts as the trivial path P_0.
inline Shape classify_shape(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("classify_shape needs a connected graph");
  }
  const int n = g.order();
  if (n <= 2) return Shape::kPath;
  int ones = 0;
  int twos = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) ++ones;
    if (g.degree(v) == 2) ++twos;
  }
  if (twos == n) return Shape::kCycle;
  if (ones == 2 && twos == n - 2) return Shape::kPath;
  return Shape::kOther;
}

inline bool is_path(const Graph& g) {
  return is_connected(g) && classify_shape(g) == Shape::kPath;
}

// ---------------------------------------------------------------------------
// Structural subroutines

// The unique simple path a = p_1, ..., p_m = b of a tree.
inline std::vector<Vertex> tree_path(const Graph& t, Vertex a, Vertex b) {
  if (!is_tree(t)) throw PreconditionError("tree_path needs a tree");
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<bool> seen(t.order(), false);
  std::deque<Vertex> queue{b};
  seen[b] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : t.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<Vertex> out{a};
  for (Vertex x = a; x != b;) {
    x = parent[x];
    out.push_back(x);
  }
  return out;
}

// Component of (V, E \ {cut}) containing `seed`.
inline VertexSet component_after_cut(const Graph& g, Edge cut, Vertex seed) {
  cut = Edge::of(cut.a, cut.b);
  if (!g.has_edge(cut)) {
    throw PreconditionError("cut {" + std::to_string(cut.a) + "," +
                            std::to_string(cut.b) + "} is not an edge");
  }
  auto dist = detail::bfs(g, seed, cut);
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] >= 0) out.insert(v);
  }
  return out;
}

// g minus v (and its incident edges) is connected.
inline bool connected_without(const Graph& g, Vertex v) {
  if (g.order() <= 2) return true;
  Vertex start = v == 0 ? 1 : 0;
  auto dist = detail::bfs(g, start, Edge{-1, -1}, v);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x != v && dist[x] < 0) return false;
  }
  return true;
}

// Smallest vertex whose removal keeps g connected. One always exists: a leaf
// block of the block-cut tree has a non-cut vertex.
inline Vertex non_articulation_vertex(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionError(
        "non_articulation_vertex needs a connected graph with n >= 2");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (connected_without(g, v)) return v;
  }
  throw InternalInvariantError("connected graph without a non-cut vertex");
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

// Every spanning tree, by (n-1)-edge-subset enumeration. Trees come out in
// lexicographic order of their sorted edge lists.
inline std::vector<Graph> spanning_trees(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("spanning_trees needs a connected graph");
  }
  const int n = g.order();
  const int m = g.size();
  const int k = n - 1;
  const auto& edges = g.edges();
  std::vector<Graph> out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Edge> chosen(k);
  while (true) {
    detail::DisjointSets sets(n);
    bool acyclic = true;
    for (int i = 0; i < k && acyclic; ++i) {
      chosen[i] = edges[pick[i]];
      acyclic = sets.unite(chosen[i].a, chosen[i].b);
    }
    if (acyclic) out.emplace_back(n, chosen);
    // advance to the next k-combination of 0..m-1
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// spanning_trees(g).front() without the enumeration: greedy over edges in
// sorted order yields the lexicographically smallest basis of the cycle
// matroid.
inline Graph first_spanning_tree(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("first_spanning_tree needs a connected graph");
  }
  detail::DisjointSets sets(g.order());
  std::vector<Edge> chosen;
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.a, e.b)) chosen.push_back(e);
  }
  return Graph(g.order(), chosen);
}

}  // namespace hhnum
