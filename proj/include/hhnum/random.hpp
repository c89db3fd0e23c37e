#pragma once

// Seeded generators for randomized property runs. Draws go through
// mt19937_64 with explicit rejection sampling so a seed gives the same
// instances on every standard library.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hhnum/graph.hpp"
#include "hhnum/pseudoordering.hpp"

namespace hhnum {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform(0, i)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

// Uniform labelled tree via a random Prüfer sequence.
inline Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw PreconditionError("random_tree needs n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return make_path(2);
  std::vector<int> code(n - 2);
  for (int& c : code) c = rng.uniform(0, n - 1);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back(Edge::of(leaf, c));
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  int x = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (x < 0) {
        x = v;
      } else {
        edges.push_back(Edge::of(x, v));
        break;
      }
    }
  }
  return Graph(n, edges);
}

// Random tree plus extra edges at a per-graph density drawn from 0..100%,
// so both sparse and dense connected graphs come up.
inline Graph random_connected_graph(int n, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  const int density = rng.uniform(0, 100);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!tree.adjacent(a, b) && rng.uniform(1, 100) <= density) {
        edges.push_back(Edge{a, b});
      }
    }
  }
  return Graph(n, edges);
}

inline Pseudoordering random_pseudoordering(int n, Rng& rng) {
  return Pseudoordering(rng.permutation(n));
}

}  // namespace hhnum
