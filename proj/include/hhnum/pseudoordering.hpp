#pragma once

// Pseudoorderings f : V(H) -> V(G), their sums
//
//   s_H(f, G) = sum over {x,y} in E(H) of dist_G(f(x), f(y)),
//
// H-Hamiltonian spectra, and the extremal numbers h_H(G) (min) and h+_H(G)
// (max). With H = C_n these are the Hamiltonian numbers h, h+; with
// H = P_{n-1} the traceable numbers t, t+.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hhnum/errors.hpp"
#include "hhnum/graph.hpp"
#include "json.hpp"

namespace hhnum {

// A bijection 0..n-1 -> 0..n-1 stored as its image list: image()[x] = f(x).
class Pseudoordering {
 public:
  Pseudoordering() = default;
  explicit Pseudoordering(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (Vertex y : image_) {
      if (y < 0 || y >= order() || hit[y]) {
        throw InvalidGraphError("pseudoordering is not a bijection of 0.." +
                                std::to_string(order() - 1));
      }
      hit[y] = true;
    }
  }

  static Pseudoordering identity(int n) {
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Pseudoordering(std::move(image));
  }

  int order() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex x) const { return image_[x]; }
  std::span<const Vertex> image() const { return image_; }

  Pseudoordering inverse() const {
    std::vector<Vertex> inv(image_.size());
    for (int x = 0; x < order(); ++x) inv[image_[x]] = x;
    return Pseudoordering(std::move(inv));
  }

  friend auto operator<=>(const Pseudoordering&, const Pseudoordering&) =
      default;

 private:
  std::vector<Vertex> image_;
};

inline void to_json(nlohmann::json& j, const Pseudoordering& f) {
  j = std::vector<Vertex>(f.image().begin(), f.image().end());
}

namespace detail {

inline void require_same_order(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) {
    throw PreconditionError("|V(H)| = " + std::to_string(h.order()) +
                            " but |V(G)| = " + std::to_string(g.order()));
  }
}

inline int sum_over(std::span<const Edge> h_edges, const DistanceMatrix& dg,
                    std::span<const Vertex> image) {
  int total = 0;
  for (const Edge& e : h_edges) total += dg(image[e.a], image[e.b]);
  return total;
}

inline std::vector<Vertex> require_permutation(const Graph& g,
                                               std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw PreconditionError("ordering length differs from |V(G)|");
  }
  // the Pseudoordering constructor validates bijectivity
  Pseudoordering check(std::vector<Vertex>(order.begin(), order.end()));
  return std::vector<Vertex>(order.begin(), order.end());
}

}  // namespace detail

inline int pseudo_sum(const Graph& h, const Graph& g, const Pseudoordering& f,
                      const DistanceMatrix& dg) {
  detail::require_same_order(h, g);
  if (f.order() != g.order() || dg.order() != g.order()) {
    throw PreconditionError("pseudoordering or distance matrix size mismatch");
  }
  return detail::sum_over(h.edges(), dg, f.image());
}

inline int pseudo_sum(const Graph& h, const Graph& g, const Pseudoordering& f) {
  return pseudo_sum(h, g, f, distance_matrix(g));
}

// s(f, G): consecutive distances including the wrap-around term.
inline int cyclic_sum(const Graph& g, std::span<const Vertex> order) {
  auto seq = detail::require_permutation(g, order);
  auto dg = distance_matrix(g);
  int total = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    total += dg(seq[i], seq[(i + 1) % seq.size()]);
  }
  return total;
}

// s-bar(f, G): consecutive distances without the wrap-around term.
inline int trail_sum(const Graph& g, std::span<const Vertex> order) {
  auto seq = detail::require_permutation(g, order);
  auto dg = distance_matrix(g);
  int total = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    total += dg(seq[i], seq[i + 1]);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Spectrum

inline constexpr int kDefaultExhaustiveCap = 9;

struct SpectrumOptions {
  int cap = kDefaultExhaustiveCap;
  int jobs = 1;
};

struct SpectrumReport {
  std::map<int, long long> values;  // sum -> number of bijections attaining it
  int min = 0;
  int max = 0;
  Pseudoordering min_witness;
  Pseudoordering max_witness;
  long long enumerated = 0;

  std::vector<int> distinct() const {
    std::vector<int> out;
    for (const auto& [v, _] : values) out.push_back(v);
    return out;
  }
};

inline void to_json(nlohmann::json& j, const SpectrumReport& r) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [v, count] : r.values) values.push_back({v, count});
  j = nlohmann::json{{"values", values},
                     {"min", r.min},
                     {"max", r.max},
                     {"min_witness", r.min_witness},
                     {"max_witness", r.max_witness},
                     {"enumerated", r.enumerated}};
}

namespace detail {

// Visits, in lexicographic order, every permutation whose first entry is
// `first`. Visitor receives the image list.
template <typename Visitor>
void for_each_in_block(int n, Vertex first, Visitor&& visit) {
  std::vector<Vertex> perm;
  perm.reserve(n);
  perm.push_back(first);
  for (Vertex v = 0; v < n; ++v) {
    if (v != first) perm.push_back(v);
  }
  do {
    visit(std::span<const Vertex>(perm));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

// Runs `work(block)` for every block 0..n-1 over `jobs` threads; results are
// returned indexed by block so that merging stays schedule-independent.
template <typename Result, typename Work>
std::vector<Result> run_blocks(int n, int jobs, Work&& work) {
  std::vector<Result> results(n);
  jobs = std::clamp(jobs, 1, std::max(1, n));
  if (jobs == 1) {
    for (int b = 0; b < n; ++b) results[b] = work(b);
    return results;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (int b = w; b < n; b += jobs) results[b] = work(b);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

inline void check_exhaustive_domain(const Graph& h, const Graph& g, int cap) {
  require_same_order(h, g);
  if (g.order() > cap) {
    throw PreconditionError("n = " + std::to_string(g.order()) +
                            " exceeds the exhaustive cap " +
                            std::to_string(cap));
  }
  if (g.order() < 1) throw PreconditionError("empty graph");
}

}  // namespace detail

inline SpectrumReport spectrum(const Graph& h, const Graph& g,
                               const SpectrumOptions& options = {}) {
  detail::check_exhaustive_domain(h, g, options.cap);
  const int n = g.order();
  const auto dg = distance_matrix(g);
  const auto& h_edges = h.edges();

  struct Block {
    std::map<int, long long> values;
    int min = std::numeric_limits<int>::max();
    int max = std::numeric_limits<int>::min();
    std::vector<Vertex> min_witness, max_witness;
    long long count = 0;
  };
  auto blocks = detail::run_blocks<Block>(n, options.jobs, [&](int b) {
    Block out;
    detail::for_each_in_block(n, b, [&](std::span<const Vertex> perm) {
      int s = detail::sum_over(h_edges, dg, perm);
      ++out.values[s];
      ++out.count;
      if (s < out.min) {
        out.min = s;
        out.min_witness.assign(perm.begin(), perm.end());
      }
      if (s > out.max) {
        out.max = s;
        out.max_witness.assign(perm.begin(), perm.end());
      }
    });
    return out;
  });

  SpectrumReport report;
  report.min = std::numeric_limits<int>::max();
  report.max = std::numeric_limits<int>::min();
  std::vector<Vertex> min_w, max_w;
  for (const Block& b : blocks) {
    for (const auto& [v, c] : b.values) report.values[v] += c;
    report.enumerated += b.count;
    if (b.min < report.min) {
      report.min = b.min;
      min_w = b.min_witness;
    }
    if (b.max > report.max) {
      report.max = b.max;
      max_w = b.max_witness;
    }
  }
  report.min_witness = Pseudoordering(std::move(min_w));
  report.max_witness = Pseudoordering(std::move(max_w));
  return report;
}

// ---------------------------------------------------------------------------
// Extremal numbers

enum class Sense { kMin, kMax };
enum class Method { kExhaustive, kBranchAndBound };

struct ExtremalQuery {
  Sense sense = Sense::kMax;
  Method method = Method::kExhaustive;
  int cap = kDefaultExhaustiveCap;  // exhaustive only
};

struct Extremum {
  int value = 0;
  Pseudoordering witness;
};

namespace detail {

inline Extremum exhaustive_extremum(const Graph& h, const Graph& g,
                                    const ExtremalQuery& q) {
  check_exhaustive_domain(h, g, q.cap);
  const int n = g.order();
  const auto dg = distance_matrix(g);
  const bool maximize = q.sense == Sense::kMax;
  int best = maximize ? std::numeric_limits<int>::min()
                      : std::numeric_limits<int>::max();
  std::vector<Vertex> witness;
  for (Vertex b = 0; b < n; ++b) {
    for_each_in_block(n, b, [&](std::span<const Vertex> perm) {
      int s = sum_over(h.edges(), dg, perm);
      if (maximize ? s > best : s < best) {
        best = s;
        witness.assign(perm.begin(), perm.end());
      }
    });
  }
  return Extremum{best, Pseudoordering(std::move(witness))};
}

// Depth-first assignment of H-vertices (descending H-degree, then id) to
// G-vertices (ascending id). Each placed vertex adds the distances of its
// already-placed H-neighbours. Remaining H-edges are bounded by 1 each (min)
// or by diam(G) each (max); a node is cut when its bound cannot strictly
// beat the incumbent.
class BranchAndBound {
 public:
  BranchAndBound(const Graph& h, const Graph& g, Sense sense)
      : n_(g.order()),
        dg_(distance_matrix(g)),
        maximize_(sense == Sense::kMax),
        per_edge_bound_(maximize_ ? dg_.diameter() : 1) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
      return h.degree(x) > h.degree(y);
    });
    std::vector<int> position(n_);
    for (int p = 0; p < n_; ++p) position[order_[p]] = p;
    earlier_.resize(n_);
    remaining_after_.resize(n_);
    int placed_edges = 0;
    for (int p = 0; p < n_; ++p) {
      for (Vertex y : h.neighbors(order_[p])) {
        if (position[y] < p) earlier_[p].push_back(y);
      }
      placed_edges += static_cast<int>(earlier_[p].size());
      remaining_after_[p] = h.size() - placed_edges;
    }
    image_.assign(n_, -1);
    used_.assign(n_, false);
  }

  Extremum solve() {
    search(0, 0);
    return Extremum{incumbent_, Pseudoordering(best_image_)};
  }

  long long nodes() const { return nodes_; }

 private:
  void search(int p, int partial) {
    ++nodes_;
    if (p == n_) {
      if (!have_incumbent_ ||
          (maximize_ ? partial > incumbent_ : partial < incumbent_)) {
        have_incumbent_ = true;
        incumbent_ = partial;
        best_image_ = image_;
      }
      return;
    }
    const Vertex x = order_[p];
    for (Vertex y = 0; y < n_; ++y) {
      if (used_[y]) continue;
      int next = partial;
      for (Vertex z : earlier_[p]) next += dg_(y, image_[z]);
      if (have_incumbent_) {
        int bound = next + remaining_after_[p] * per_edge_bound_;
        if (maximize_ ? bound <= incumbent_ : bound >= incumbent_) continue;
      }
      used_[y] = true;
      image_[x] = y;
      search(p + 1, next);
      image_[x] = -1;
      used_[y] = false;
    }
  }

  int n_;
  DistanceMatrix dg_;
  bool maximize_;
  int per_edge_bound_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<int> remaining_after_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  bool have_incumbent_ = false;
  int incumbent_ = 0;
  std::vector<Vertex> best_image_;
  long long nodes_ = 0;
};

}  // namespace detail

// h_H(G) (Sense::kMin) or h+_H(G) (Sense::kMax), with a witness. The
// exhaustive witness is the lexicographically smallest optimal bijection.
inline Extremum extremal_number(const Graph& h, const Graph& g,
                                const ExtremalQuery& q) {
  if (q.method == Method::kExhaustive) return detail::exhaustive_extremum(h, g, q);
  detail::require_same_order(h, g);
  if (g.order() < 1) throw PreconditionError("empty graph");
  return detail::BranchAndBound(h, g, q.sense).solve();
}

struct ClassicNumbers {
  int h = 0;
  int h_plus = 0;
  int t = 0;
  int t_plus = 0;
};

// (t, t+) via H = P_{n-1}; needs n >= 2.
inline std::pair<int, int> traceable_numbers(const Graph& g,
                                             int cap = kDefaultExhaustiveCap) {
  if (g.order() < 2) throw PreconditionError("traceable numbers need n >= 2");
  auto path = make_path(g.order());
  return {extremal_number(path, g, {Sense::kMin, Method::kExhaustive, cap}).value,
          extremal_number(path, g, {Sense::kMax, Method::kExhaustive, cap}).value};
}

// (h, h+) via H = C_n; needs n >= 3.
inline std::pair<int, int> hamiltonian_numbers(const Graph& g,
                                               int cap = kDefaultExhaustiveCap) {
  if (g.order() < 3) {
    throw PreconditionError("Hamiltonian numbers need n >= 3 (C_n undefined)");
  }
  auto cycle = make_cycle(g.order());
  return {
      extremal_number(cycle, g, {Sense::kMin, Method::kExhaustive, cap}).value,
      extremal_number(cycle, g, {Sense::kMax, Method::kExhaustive, cap}).value};
}

inline ClassicNumbers classic_numbers(const Graph& g,
                                      int cap = kDefaultExhaustiveCap) {
  auto [h, h_plus] = hamiltonian_numbers(g, cap);
  auto [t, t_plus] = traceable_numbers(g, cap);
  return ClassicNumbers{h, h_plus, t, t_plus};
}

// H embeds in G iff h_H(G) = |E(H)|.
inline bool contains_subgraph(const Graph& h, const Graph& g) {
  detail::require_same_order(h, g);
  if (!is_connected(g)) throw PreconditionError("G must be connected");
  auto best = extremal_number(h, g, {Sense::kMin, Method::kBranchAndBound});
  return best.value == h.size();
}

// With |V| and |E| equal, G is isomorphic to H iff h_H(G) = |E(H)|.
inline bool isomorphic_via_h(const Graph& h, const Graph& g) {
  detail::require_same_order(h, g);
  if (h.size() != g.size()) {
    throw PreconditionError("|E(H)| = " + std::to_string(h.size()) +
                            " but |E(G)| = " + std::to_string(g.size()));
  }
  return contains_subgraph(h, g);
}

}  // namespace hhnum
