#ifndef STOPLAT_BOUNDARY_HPP
#define STOPLAT_BOUNDARY_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/errors.hpp"

namespace stoplat {

/// Simple undirected graph on {0,...,n-1}.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0 || n > kMaxGroundSet) throw BoundsError("graph size out of range");
    adjacency_.assign(static_cast<std::size_t>(n), 0);
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) throw BoundsError("edge endpoint out of range");
      if (u == v) throw Error("loop edge (" + std::to_string(u) + "," + std::to_string(u) + ")");
      if (u > v) std::swap(u, v);
      if (has_bit(adjacency_[u], v)) throw Error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      adjacency_[u] |= bit(v);
      adjacency_[v] |= bit(u);
    }
    edges_ = std::move(edges);
    std::sort(edges_.begin(), edges_.end());
  }

  int size() const { return n_; }
  Subset adjacency(int v) const { return adjacency_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<Subset> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

/// Assigns a boundary size to a subset: an additive integer weight, the
/// edge boundary of a graph, or the vertex boundary of a graph. All
/// values are exact integers.
class BoundaryFunctional {
 public:
  static BoundaryFunctional additive_weight(std::vector<long long> weights) {
    return BoundaryFunctional(Additive{std::move(weights)});
  }
  static BoundaryFunctional edge_boundary(Graph g) { return BoundaryFunctional(EdgeKind{std::move(g)}); }
  static BoundaryFunctional vertex_boundary(Graph g) { return BoundaryFunctional(VertexKind{std::move(g)}); }

  int ground_size() const {
    if (auto* a = std::get_if<Additive>(&kind_)) return static_cast<int>(a->weights.size());
    if (auto* e = std::get_if<EdgeKind>(&kind_)) return e->graph.size();
    return std::get<VertexKind>(kind_).graph.size();
  }

  long long evaluate(Subset s) const {
    if (auto* a = std::get_if<Additive>(&kind_)) {
      long long total = 0;
      for_each_bit(s, [&](int v) { total += a->weights[static_cast<std::size_t>(v)]; });
      return total;
    }
    if (auto* e = std::get_if<EdgeKind>(&kind_)) {
      const Graph& g = e->graph;
      const Subset outside = full_set(g.size()) & ~s;
      long long crossing = 0;
      for_each_bit(s, [&](int v) { crossing += popcount(g.adjacency(v) & outside); });
      return crossing;
    }
    const Graph& g = std::get<VertexKind>(kind_).graph;
    Subset reached = 0;
    for_each_bit(s, [&](int v) { reached |= g.adjacency(v); });
    return popcount(reached & ~s);
  }

 private:
  struct Additive {
    std::vector<long long> weights;
  };
  struct EdgeKind {
    Graph graph;
  };
  struct VertexKind {
    Graph graph;
  };

  template <typename K>
  explicit BoundaryFunctional(K kind) : kind_(std::move(kind)) {}

  std::variant<Additive, EdgeKind, VertexKind> kind_;
};

inline long long evaluate_boundary(const BoundaryFunctional& b, Subset s) { return b.evaluate(s); }

}  // namespace stoplat

#endif
