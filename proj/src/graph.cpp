#include "gwspec/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gwspec {

namespace {

void check_order(std::size_t order) {
  if (order == 0) throw invalid_parameter("graph order must be at least 1");
  if (order > kMaxOrder) {
    throw invalid_parameter("graph order " + std::to_string(order) + " exceeds cap of " +
                            std::to_string(kMaxOrder));
  }
}

// Distances from one source; -1 marks unreachable vertices.
std::vector<std::int64_t> bfs(const Graph& g, Graph::Vertex source) {
  std::vector<std::int64_t> dist(g.order(), -1);
  std::queue<Graph::Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const auto u = frontier.front();
    frontier.pop();
    for (const auto v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

void require_connected(const Graph& g) {
  const auto dist = bfs(g, 0);
  if (std::any_of(dist.begin(), dist.end(), [](std::int64_t d) { return d < 0; })) {
    throw not_connected("distance matrices are only defined for connected graphs");
  }
}

}  // namespace

Graph::Graph(std::size_t order, const std::vector<Edge>& edges) {
  check_order(order);
  adjacency_.assign(order, {});
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) throw invalid_parameter("edge endpoint out of range");
    if (u == v) throw invalid_parameter("self-loops are not allowed");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  edge_count_ = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (const auto v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

WheelParams WheelParams::make(std::int64_t a, std::int64_t m, std::int64_t n) {
  if (a < 1) throw invalid_parameter("a must be >= 1");
  if (m < 1) throw invalid_parameter("m must be >= 1");
  if (n < 3) throw invalid_parameter("n must be >= 3");
  return WheelParams{a, m, n};
}

Graph complete(std::size_t m) {
  check_order(m);
  std::vector<Graph::Edge> edges;
  edges.reserve(m * (m - 1) / 2);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  return Graph(m, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw invalid_parameter("a cycle needs at least 3 vertices");
  check_order(n);
  std::vector<Graph::Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph copies(std::size_t k, const Graph& g) {
  if (k == 0) throw invalid_parameter("copy count must be at least 1");
  if (g.order() > kMaxOrder / k) throw invalid_parameter("disjoint union exceeds the order cap");
  Graph out;
  const std::size_t n = g.order();
  out.adjacency_.resize(k * n);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& list = out.adjacency_[c * n + v];
      list.reserve(g.adjacency_[v].size());
      for (const auto w : g.adjacency_[v]) list.push_back(c * n + w);
    }
  }
  out.edge_count_ = k * g.edge_count_;
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  check_order(n1 + n2);
  Graph out;
  out.adjacency_.resize(n1 + n2);
  for (std::size_t v = 0; v < n1; ++v) {
    auto& list = out.adjacency_[v];
    list = g1.adjacency_[v];
    for (std::size_t w = 0; w < n2; ++w) list.push_back(n1 + w);
  }
  for (std::size_t v = 0; v < n2; ++v) {
    auto& list = out.adjacency_[n1 + v];
    list.reserve(n1 + g2.adjacency_[v].size());
    for (std::size_t w = 0; w < n1; ++w) list.push_back(w);
    for (const auto w : g2.adjacency_[v]) list.push_back(n1 + w);
  }
  out.edge_count_ = g1.edge_count_ + g2.edge_count_ + n1 * n2;
  return out;
}

Graph generalized_wheel(const WheelParams& p) {
  const auto checked = WheelParams::make(p.a, p.m, p.n);
  if (checked.a * checked.m > static_cast<std::int64_t>(kMaxOrder)) {
    throw invalid_parameter("generalized wheel exceeds the order cap");
  }
  return join(copies(static_cast<std::size_t>(checked.a), complete(static_cast<std::size_t>(checked.m))),
              cycle(static_cast<std::size_t>(checked.n)));
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Graph::Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Graph::Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::optional<std::size_t> regular_degree(const Graph& g) {
  const std::size_t d = g.degree(0);
  for (Graph::Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  IntMatrix out = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    out(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1;
    out(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1;
  }
  return out;
}

IntMatrix distance_matrix(const Graph& g) {
  require_connected(g);
  const auto n = static_cast<Eigen::Index>(g.order());
  IntMatrix out(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    const auto dist = bfs(g, static_cast<Graph::Vertex>(s));
    for (Eigen::Index t = 0; t < n; ++t) out(s, t) = dist[static_cast<std::size_t>(t)];
  }
  return out;
}

IntMatrix transmission_matrix(const Graph& g) {
  const IntMatrix d = distance_matrix(g);
  return d.rowwise().sum().asDiagonal();
}

IntMatrix dl_matrix(const Graph& g) {
  const IntMatrix d = distance_matrix(g);
  IntMatrix out = -d;
  out.diagonal() += d.rowwise().sum();
  return out;
}

IntMatrix dq_matrix(const Graph& g) {
  const IntMatrix d = distance_matrix(g);
  IntMatrix out = d;
  out.diagonal() += d.rowwise().sum();
  return out;
}

std::int64_t wiener_index(const Graph& g) { return distance_matrix(g).sum() / 2; }

std::int64_t diameter(const Graph& g) { return distance_matrix(g).maxCoeff(); }

}  // namespace gwspec
