#pragma once

// Tree surgery that turns any spanning tree into a path without decreasing
// s_H(f, .).
//
// For a tree T that is not a path pick leaves l, k, v. Let Q be the l-k path
// and walk from v towards l; u is the first vertex of that walk on Q, w the
// vertex just before it, and u+ / u- are u's neighbours on Q towards l / k.
// Cutting {w,u} splits off K, the side containing v. The two candidate trees
// are
//
//   bar   = T - {w,u} + {w,l}
//   tilde = T - {w,u} + {w,k}
//
// Distances inside K and inside V\K are unchanged. A cross pair (x in K, y
// outside) is in F+ if its tree path uses {u,u+}, F- if it uses {u,u-}, F0
// otherwise. L collects the cross pairs whose f-preimages are H-adjacent.
// Picking bar when |L∩F+| <= |L∩F-| and tilde otherwise never decreases the
// sum, and alpha (the degree mass on vertices of degree >= 3) drops by at
// least one per step, so iterating reaches a path.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hhnum/errors.hpp"
#include "hhnum/graph.hpp"
#include "hhnum/pseudoordering.hpp"
#include "json.hpp"

namespace hhnum {

struct LeafTriple {
  Vertex l = 0;
  Vertex k = 0;
  Vertex v = 0;

  friend auto operator<=>(const LeafTriple&, const LeafTriple&) = default;
};

struct Junction {
  Vertex u = 0;
  Vertex w = 0;
  Vertex u_plus = 0;
  Vertex u_minus = 0;

  Edge cut() const { return Edge::of(w, u); }
  friend auto operator<=>(const Junction&, const Junction&) = default;
};

enum class PairClass { kPlus, kMinus, kZero };
enum class Choice { kBar, kTilde };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::kPlus:
      return "F+";
    case PairClass::kMinus:
      return "F-";
    case PairClass::kZero:
      return "F0";
  }
  return "F0";
}

inline const char* to_string(Choice c) {
  return c == Choice::kBar ? "bar" : "tilde";
}

// Ordered cross pair (K side first).
using CrossPair = std::pair<Vertex, Vertex>;

namespace detail {

inline void require_leaf_triple(const Graph& t, const LeafTriple& triple) {
  const Vertex ids[] = {triple.l, triple.k, triple.v};
  for (Vertex x : ids) {
    if (x < 0 || x >= t.order() || t.degree(x) != 1) {
      throw PreconditionError("leaf triple member " + std::to_string(x) +
                              " is not a leaf");
    }
  }
  if (triple.l == triple.k || triple.k == triple.v || triple.l == triple.v) {
    throw PreconditionError("leaf triple members must be pairwise distinct");
  }
}

inline void require_non_path_tree(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("surgery needs a tree");
  if (classify_shape(t) == Shape::kPath) {
    throw PreconditionError("surgery needs a tree that is not a path");
  }
}

inline bool path_uses(const std::vector<Vertex>& path, Edge e) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (Edge::of(path[i], path[i + 1]) == e) return true;
  }
  return false;
}

}  // namespace detail

inline Junction find_junction(const Graph& t, const LeafTriple& triple) {
  detail::require_non_path_tree(t);
  detail::require_leaf_triple(t, triple);
  const auto lk = tree_path(t, triple.l, triple.k);
  const auto vl = tree_path(t, triple.v, triple.l);
  for (std::size_t i = 0; i < vl.size(); ++i) {
    auto hit = std::find(lk.begin(), lk.end(), vl[i]);
    if (hit == lk.end()) continue;
    if (i == 0 || hit == lk.begin() || hit + 1 == lk.end()) {
      // v on Q, or u equal to l or k: impossible for three distinct leaves
      throw InternalInvariantError("junction degenerates: u coincides with l or k");
    }
    return Junction{vl[i], vl[i - 1], *(hit - 1), *(hit + 1)};
  }
  throw InternalInvariantError("v-l path never meets the l-k path");
}

// K(v, T): component of T - {w,u} containing v.
inline VertexSet k_component(const Graph& t, const Junction& j, Vertex v) {
  return component_after_cut(t, j.cut(), v);
}

inline std::pair<Graph, Graph> build_bar_tilde(const Graph& t,
                                               const Junction& j,
                                               const LeafTriple& triple) {
  Graph bar = t.with_edge_swapped(j.cut(), Edge::of(j.w, triple.l));
  Graph tilde = t.with_edge_swapped(j.cut(), Edge::of(j.w, triple.k));
  if (!is_tree(bar) || !is_tree(tilde)) {
    throw InternalInvariantError("edge swap did not produce a tree");
  }
  return {std::move(bar), std::move(tilde)};
}

inline PairClass classify_pair(const Graph& t, const Junction& j, Vertex a,
                               Vertex b) {
  VertexSet k_set = component_after_cut(t, j.cut(), j.w);
  if (!k_set.contains(a) || k_set.contains(b)) {
    throw PreconditionError("classify_pair needs a in K and b outside K");
  }
  auto path = tree_path(t, a, b);
  if (detail::path_uses(path, Edge::of(j.u, j.u_plus))) return PairClass::kPlus;
  if (detail::path_uses(path, Edge::of(j.u, j.u_minus))) return PairClass::kMinus;
  return PairClass::kZero;
}

// L: ordered cross pairs (x in K, y outside) with {f^-1(x), f^-1(y)} in E(H).
inline std::vector<CrossPair> adjacency_pairs_L(const Graph& h,
                                                const Pseudoordering& f,
                                                const VertexSet& k_set) {
  std::vector<CrossPair> out;
  for (const Edge& e : h.edges()) {
    Vertex x = f(e.a);
    Vertex y = f(e.b);
    if (k_set.contains(x) == k_set.contains(y)) continue;
    if (!k_set.contains(x)) std::swap(x, y);
    out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int alpha(const Graph& g) {
  int total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) total += g.degree(v);
  }
  return total;
}

// Everything derived from one (tree, leaf triple): junction, K, both
// candidate trees and the three metrics. Built once per step and reused by
// the lemma checks.
class Surgery {
 public:
  Surgery(Graph tree, LeafTriple triple)
      : tree_(std::move(tree)),
        triple_(triple),
        junction_(find_junction(tree_, triple_)),
        k_set_(k_component(tree_, junction_, triple_.v)),
        lk_path_(tree_path(tree_, triple_.l, triple_.k)) {
    auto [bar, tilde] = build_bar_tilde(tree_, junction_, triple_);
    bar_ = std::move(bar);
    tilde_ = std::move(tilde);
    d_ = distance_matrix(tree_);
    d_bar_ = distance_matrix(bar_);
    d_tilde_ = distance_matrix(tilde_);
  }

  const Graph& tree() const { return tree_; }
  const LeafTriple& triple() const { return triple_; }
  const Junction& junction() const { return junction_; }
  const VertexSet& k_set() const { return k_set_; }
  const Graph& bar() const { return bar_; }
  const Graph& tilde() const { return tilde_; }
  const std::vector<Vertex>& lk_path() const { return lk_path_; }
  const DistanceMatrix& dist() const { return d_; }
  const DistanceMatrix& dist_bar() const { return d_bar_; }
  const DistanceMatrix& dist_tilde() const { return d_tilde_; }

  PairClass classify(Vertex a, Vertex b) const {
    if (!k_set_.contains(a) || k_set_.contains(b)) {
      throw PreconditionError("classify needs a in K and b outside K");
    }
    auto path = tree_path(tree_, a, b);
    if (detail::path_uses(path, Edge::of(junction_.u, junction_.u_plus))) {
      return PairClass::kPlus;
    }
    if (detail::path_uses(path, Edge::of(junction_.u, junction_.u_minus))) {
      return PairClass::kMinus;
    }
    return PairClass::kZero;
  }

  // First vertex of the tree path from `from` to `to` that lies on the l-k
  // path.
  Vertex first_on_lk_path(Vertex from, Vertex to) const {
    for (Vertex x : tree_path(tree_, from, to)) {
      if (std::find(lk_path_.begin(), lk_path_.end(), x) != lk_path_.end()) {
        return x;
      }
    }
    throw InternalInvariantError("cross path misses the l-k path");
  }

 private:
  Graph tree_;
  LeafTriple triple_;
  Junction junction_;
  VertexSet k_set_;
  std::vector<Vertex> lk_path_;
  Graph bar_;
  Graph tilde_;
  DistanceMatrix d_;
  DistanceMatrix d_bar_;
  DistanceMatrix d_tilde_;
};

struct TransformStep {
  Graph before;
  LeafTriple leaf_triple;
  Junction junction;
  int n_plus = 0;
  int n_minus = 0;
  Choice choice = Choice::kBar;
  Graph after;
  int sum_before = 0;
  int sum_after = 0;
  int alpha_before = 0;
  int alpha_after = 0;
};

// Takes bar when |L∩F+| < |L∩F-| and tilde when |L∩F+| > |L∩F-|; both keep
// the sum from dropping. On a tie both do, and bar is taken unless it leaves
// the sum unchanged while tilde raises it.
inline TransformStep choose_transform(const Graph& t, const Graph& h,
                                      const Pseudoordering& f,
                                      const LeafTriple& triple) {
  detail::require_same_order(h, t);
  if (f.order() != t.order()) {
    throw PreconditionError("pseudoordering size differs from |V(T)|");
  }
  Surgery s(t, triple);
  TransformStep step;
  step.before = t;
  step.leaf_triple = triple;
  step.junction = s.junction();
  for (const auto& [x, y] : adjacency_pairs_L(h, f, s.k_set())) {
    switch (s.classify(x, y)) {
      case PairClass::kPlus:
        ++step.n_plus;
        break;
      case PairClass::kMinus:
        ++step.n_minus;
        break;
      case PairClass::kZero:
        break;
    }
  }
  step.sum_before = detail::sum_over(h.edges(), s.dist(), f.image());
  const int bar_sum = detail::sum_over(h.edges(), s.dist_bar(), f.image());
  const int tilde_sum = detail::sum_over(h.edges(), s.dist_tilde(), f.image());
  if (step.n_plus < step.n_minus) {
    step.choice = Choice::kBar;
  } else if (step.n_plus > step.n_minus) {
    step.choice = Choice::kTilde;
  } else {
    bool tilde_only_strict =
        bar_sum == step.sum_before && tilde_sum > step.sum_before;
    step.choice = tilde_only_strict ? Choice::kTilde : Choice::kBar;
  }
  const bool bar = step.choice == Choice::kBar;
  step.after = bar ? s.bar() : s.tilde();
  step.sum_after = bar ? bar_sum : tilde_sum;
  step.alpha_before = alpha(t);
  step.alpha_after = alpha(step.after);
  if (step.sum_after < step.sum_before) {
    throw InternalInvariantError("surgery step decreased the sum");
  }
  return step;
}

struct TransformTrace {
  Graph initial;
  Pseudoordering f;
  Graph spanning_tree;  // equals `initial` when the input is already a tree
  int initial_sum = 0;
  int tree_sum = 0;
  std::vector<TransformStep> steps;
  Graph final;
  int final_sum = 0;
};

// The three smallest leaf ids, as (l, k, v).
inline LeafTriple smallest_leaf_triple(const Graph& t) {
  auto ids = leaves(t).members();
  if (ids.size() < 3) {
    throw PreconditionError("a tree with fewer than three leaves is a path");
  }
  return LeafTriple{ids[0], ids[1], ids[2]};
}

inline TransformTrace pathify(const Graph& t, const Graph& h,
                              const Pseudoordering& f) {
  if (!is_tree(t)) throw PreconditionError("pathify needs a tree");
  detail::require_same_order(h, t);
  if (f.order() != t.order()) {
    throw PreconditionError("pseudoordering size differs from |V(T)|");
  }
  TransformTrace trace;
  trace.initial = t;
  trace.f = f;
  trace.spanning_tree = t;
  trace.initial_sum = pseudo_sum(h, t, f);
  trace.tree_sum = trace.initial_sum;
  Graph current = t;
  const int budget = alpha(t);
  while (classify_shape(current) != Shape::kPath) {
    if (static_cast<int>(trace.steps.size()) >= budget) {
      throw InternalInvariantError("pathify exceeded alpha(T) steps");
    }
    auto step = choose_transform(current, h, f, smallest_leaf_triple(current));
    current = step.after;
    trace.steps.push_back(std::move(step));
  }
  trace.final = current;
  trace.final_sum = trace.steps.empty() ? trace.tree_sum
                                        : trace.steps.back().sum_after;
  return trace;
}

// Route through the first spanning tree (sorted-edge order), whose distances
// dominate those of g, then pathify it.
inline TransformTrace pathify_general(const Graph& g, const Graph& h,
                                      const Pseudoordering& f) {
  if (!is_connected(g)) {
    throw PreconditionError("pathify_general needs a connected graph");
  }
  Graph tree = first_spanning_tree(g);
  TransformTrace trace = pathify(tree, h, f);
  trace.initial = g;
  trace.initial_sum = pseudo_sum(h, g, f);
  if (trace.initial_sum > trace.tree_sum) {
    throw InternalInvariantError("spanning tree sum below the graph sum");
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline std::string edge_string(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.a) + "-" + std::to_string(e.b);
  }
  return out;
}

inline nlohmann::json edge_json(const Graph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : g.edges()) out.push_back({e.a, e.b});
  return out;
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const TransformStep& s) {
  j = nlohmann::json{
      {"before", detail::edge_json(s.before)},
      {"l", s.leaf_triple.l},
      {"k", s.leaf_triple.k},
      {"v", s.leaf_triple.v},
      {"u", s.junction.u},
      {"w", s.junction.w},
      {"u_plus", s.junction.u_plus},
      {"u_minus", s.junction.u_minus},
      {"n_plus", s.n_plus},
      {"n_minus", s.n_minus},
      {"choice", to_string(s.choice)},
      {"after", detail::edge_json(s.after)},
      {"sum_before", s.sum_before},
      {"sum_after", s.sum_after},
      {"alpha_before", s.alpha_before},
      {"alpha_after", s.alpha_after}};
}

inline void to_json(nlohmann::json& j, const TransformTrace& t) {
  j = nlohmann::json{{"n", t.initial.order()},
                     {"initial", detail::edge_json(t.initial)},
                     {"f", t.f},
                     {"spanning_tree", detail::edge_json(t.spanning_tree)},
                     {"initial_sum", t.initial_sum},
                     {"tree_sum", t.tree_sum},
                     {"steps", t.steps},
                     {"final", detail::edge_json(t.final)},
                     {"final_sum", t.final_sum}};
}

inline std::string render_trace_text(const TransformTrace& t,
                                     bool with_steps = true) {
  std::ostringstream out;
  out << "n " << t.initial.order() << "\n";
  out << "initial " << detail::edge_string(t.initial) << "\n";
  out << "f";
  for (Vertex y : t.f.image()) out << ' ' << y;
  out << "\n";
  out << "spanning_tree " << detail::edge_string(t.spanning_tree) << "\n";
  out << "initial_sum " << t.initial_sum << "\n";
  out << "tree_sum " << t.tree_sum << "\n";
  out << "steps " << t.steps.size() << "\n";
  if (with_steps) {
    int index = 1;
    for (const auto& s : t.steps) {
      out << "step " << index++ << "\n";
      out << "  before " << detail::edge_string(s.before) << "\n";
      out << "  leaves l=" << s.leaf_triple.l << " k=" << s.leaf_triple.k
          << " v=" << s.leaf_triple.v << "\n";
      out << "  junction u=" << s.junction.u << " w=" << s.junction.w
          << " u+=" << s.junction.u_plus << " u-=" << s.junction.u_minus
          << "\n";
      out << "  n+=" << s.n_plus << " n-=" << s.n_minus
          << " choice=" << to_string(s.choice) << "\n";
      out << "  after " << detail::edge_string(s.after) << "\n";
      out << "  sum " << s.sum_before << " -> " << s.sum_after << "\n";
      out << "  alpha " << s.alpha_before << " -> " << s.alpha_after << "\n";
    }
  }
  out << "final " << detail::edge_string(t.final) << "\n";
  out << "final_sum " << t.final_sum << "\n";
  return out.str();
}

}  // namespace hhnum
