#include "opdyn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "opdyn/error.hpp"

namespace opdyn {

struct GraphAccess {
  static Graph make(std::vector<std::uint64_t> offsets, std::vector<NodeId> targets) {
    Graph g;
    g.offsets_ = std::move(offsets);
    g.targets_ = std::move(targets);
    return g;
  }
};

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, BuildReport* report) {
  BuildReport local;
  local.input_pairs = edges.size();

  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw OutOfRangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint >= n = " + std::to_string(n));
    }
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    ++counts[u + 1];
    ++counts[v + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());

  std::vector<NodeId> raw(counts[n]);
  std::vector<std::uint64_t> cursor(counts.begin(), counts.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[cursor[u]++] = v;
    raw[cursor[v]++] = u;
  }

  // Sort and dedupe each row, compacting in place.
  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::uint64_t write = 0;
  std::size_t removed_directed = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto begin = raw.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    const auto end = raw.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(begin, end);
    const auto last = std::unique(begin, end);
    removed_directed += static_cast<std::size_t>(end - last);
    offsets[v] = write;
    for (auto it = begin; it != last; ++it) raw[write++] = *it;
  }
  offsets[n] = write;
  raw.resize(write);
  raw.shrink_to_fit();
  local.duplicates_dropped = removed_directed / 2;

  if (report != nullptr) *report = local;
  return GraphAccess::make(std::move(offsets), std::move(raw));
}

Graph graph_union(const Graph& g1, const Graph& g2) {
  if (g1.num_nodes() != g2.num_nodes()) {
    throw ParameterError("graph_union: node counts differ (" + std::to_string(g1.num_nodes()) + " vs " +
                         std::to_string(g2.num_nodes()) + ")");
  }
  const std::size_t n = g1.num_nodes();
  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::vector<NodeId> targets;
  targets.reserve(2 * (g1.num_edges() + g2.num_edges()));
  for (NodeId v = 0; v < n; ++v) {
    offsets[v] = targets.size();
    const auto a = g1.neighbors(v);
    const auto b = g2.neighbors(v);
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(targets));
  }
  offsets[n] = targets.size();
  return GraphAccess::make(std::move(offsets), std::move(targets));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.n = g.num_nodes();
  s.m = g.num_edges();
  if (s.n == 0) return s;
  s.min_degree = g.degree(0);
  s.max_degree = g.degree(0);
  for (NodeId v = 1; v < s.n; ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

NodeSet::NodeSet(std::size_t n, std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (!ids_.empty() && ids_.back() >= n) {
    throw OutOfRangeError("node id " + std::to_string(ids_.back()) + " >= n = " + std::to_string(n));
  }
}

bool NodeSet::contains(NodeId v) const noexcept { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::vector<bool> to_mask(const NodeSet& s, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (NodeId v : s) mask[v] = true;
  return mask;
}

std::vector<NodeId> nodes_by_degree(const Graph& g) {
  std::vector<NodeId> order(g.num_nodes());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  return order;
}

NodeSet top_degree_nodes(const Graph& g, std::size_t k) {
  if (k > g.num_nodes()) {
    throw ParameterError("top_degree_nodes: k = " + std::to_string(k) + " exceeds n = " +
                         std::to_string(g.num_nodes()));
  }
  auto order = nodes_by_degree(g);
  order.resize(k);
  return NodeSet(g.num_nodes(), std::move(order));
}

std::uint64_t edges_between(const Graph& g, const NodeSet& s1, const NodeSet& s2) {
  const auto mask = to_mask(s2, g.num_nodes());
  std::uint64_t total = 0;
  for (NodeId v : s1) total += degree_into(g, v, mask);
  return total;
}

std::size_t degree_into(const Graph& g, NodeId v, const std::vector<bool>& mask) {
  std::size_t count = 0;
  for (NodeId u : g.neighbors(v)) count += mask[u] ? 1 : 0;
  return count;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::string line;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u >= v) continue;
      line.clear();
      line += std::to_string(u);
      line += ' ';
      line += std::to_string(v);
      line += '\n';
      out << line;
    }
  }
}

std::string canonical_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace opdyn
