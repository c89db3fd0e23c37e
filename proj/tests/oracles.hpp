#pragma once

// Test-only reference computations. Deliberately naive and independent of
// the library code paths they are compared against: Floyd-Warshall instead
// of BFS, recursive enumeration instead of next_permutation blocks, raw
// edge-subset enumeration instead of vertex extension.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hhnum/graph.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const hhnum::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.a][e.b] = d[e.b][e.a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// sum value -> multiplicity over all bijections V(H) -> V(G)
inline std::map<int, long long> brute_spectrum(const hhnum::Graph& h,
                                               const hhnum::Graph& g) {
  const int n = g.order();
  auto d = floyd_warshall(g);
  std::map<int, long long> out;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      int s = 0;
      for (const auto& e : h.edges()) s += d[image[e.a]][image[e.b]];
      ++out[s];
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      image[x] = y;
      self(self, x + 1);
      used[y] = false;
    }
  };
  rec(rec, 0);
  return out;
}

inline bool brute_isomorphic(const hhnum::Graph& a, const hhnum::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      if (!b.adjacent(p[e.a], p[e.b])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Number of isomorphism classes of connected graphs on n vertices, by brute
// force over all edge subsets with min-bitstring dedup. Practical for n <= 6.
inline int brute_connected_class_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());
  std::set<std::uint64_t> classes;
  std::vector<int> p(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<hhnum::Edge> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
    hhnum::Graph g(n, edges);
    auto d = floyd_warshall(g);
    bool connected = true;
    for (int v = 0; v < n; ++v) connected = connected && d[0][v] < kInf;
    if (!connected) continue;
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t key = 0;
      for (const auto& [i, j] : pairs) key = (key << 1) | (g.adjacent(p[i], p[j]) ? 1 : 0);
      best = std::min(best, key);
    } while (std::next_permutation(p.begin(), p.end()));
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

}  // namespace oracle
