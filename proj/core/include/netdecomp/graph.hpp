#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace netdecomp {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

using Edge = std::pair<Vertex, Vertex>;

/// Subset of a fixed vertex universe [0, n).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}

  static VertexSet all(std::size_t universe);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> ids);

  bool contains(Vertex v) const {
    return v < bits_.size() && bits_[v];
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::size_t universe_size() const { return bits_.size(); }

  /// Member ids in ascending order.
  std::vector<Vertex> to_vector() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t v = 0; v < bits_.size(); ++v) {
      if (bits_[v]) fn(static_cast<Vertex>(v));
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// Immutable undirected simple graph over dense ids [0, n).
/// Adjacency lists are sorted ascending; symmetry, no self-loops and no
/// duplicate entries are enforced at construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Accepts either endpoint order, rejects
  /// self-loops, out-of-range ids and duplicate edges.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return adj_[v];
  }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// One cluster of a decomposition: a connected piece of a block.
struct Cluster {
  VertexSet members;
  std::uint32_t block_index = 0;
  Vertex center = kNoVertex;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Hop distances from `source` within the subgraph induced by `alive`,
/// optionally truncated at `max_depth` hops (-1 = unbounded). Unreachable
/// vertices (and vertices outside `alive`) get -1.
/// Throws std::invalid_argument if `source` is not alive.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& alive, Vertex source,
                               int max_depth = -1);

/// Maximal connected subsets of the subgraph induced by `s`, ordered by
/// minimum member id.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);

/// Maximum pairwise hop distance measured inside the subgraph induced by
/// `members`. Empty or singleton sets give 0; a disconnected set gives
/// nullopt (infinite diameter, i.e. not a valid cluster).
std::optional<int> strong_diameter(const Graph& g, const VertexSet& members);

/// Edge-list text format: first line "n m", then m lines "u v" with
/// 0 <= u < v < n. Lines starting with '#' and blank lines are ignored.
/// Parse errors throw std::runtime_error naming the offending line.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// FNV-1a hash of the canonical edge-list serialization; stable across runs.
std::uint64_t graph_fingerprint(const Graph& g);

}  // namespace netdecomp
