#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace opdyn {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Every row of the adjacency is sorted and duplicate free, the adjacency is
/// symmetric and there are no self-loops. A Graph can be shared freely across
/// threads once built.
class Graph {
 public:
  Graph() = default;

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const noexcept;

  // Undirected edges as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  friend struct GraphAccess;
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> targets_;
};

struct BuildReport {
  std::size_t input_pairs = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

// Builds a graph from an unordered edge list. Self-loops and repeated pairs
// (in either orientation) are dropped and counted in `report`.
// Throws OutOfRangeError if an endpoint is >= n.
Graph build_graph(std::size_t n, std::span<const Edge> edges, BuildReport* report = nullptr);

// Exact edge-set union of two graphs on the same node set.
Graph graph_union(const Graph& g1, const Graph& g2);

struct DegreeStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;

  double average() const noexcept { return n == 0 ? 0.0 : 2.0 * static_cast<double>(m) / static_cast<double>(n); }
};

DegreeStats degree_stats(const Graph& g);

/// Sorted set of distinct node ids, all below the node count it was made for.
class NodeSet {
 public:
  NodeSet() = default;
  // Sorts and dedupes; throws OutOfRangeError on ids >= n.
  NodeSet(std::size_t n, std::vector<NodeId> ids);

  std::span<const NodeId> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(NodeId v) const noexcept;

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

// Membership mask of length n.
std::vector<bool> to_mask(const NodeSet& s, std::size_t n);

// Node ids ordered by (degree desc, id asc).
std::vector<NodeId> nodes_by_degree(const Graph& g);

// The k highest-degree nodes; ties go to the lower id.
NodeSet top_degree_nodes(const Graph& g, std::size_t k);

// e(S, S') = |{(v, u) in S x S' : {v, u} in E}|. Ordered pairs, so an edge
// with both endpoints in S n S' is counted twice.
std::uint64_t edges_between(const Graph& g, const NodeSet& s1, const NodeSet& s2);

// d_S(v) = |N(v) n S| given a membership mask.
std::size_t degree_into(const Graph& g, NodeId v, const std::vector<bool>& mask);

bool is_connected(const Graph& g);

// Canonical serialization: one "u v" line per edge, u < v, ascending.
void write_edge_list(std::ostream& out, const Graph& g);
std::string canonical_string(const Graph& g);

}  // namespace opdyn
