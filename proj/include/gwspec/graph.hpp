#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gwspec/integer.hpp"

namespace gwspec {

/// Exact integer matrix. Every distance-based matrix of a connected graph
/// has integer entries, so these are never stored in floating point.
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest graph any constructor will build.
inline constexpr std::size_t kMaxOrder = 10000;

struct not_connected : std::domain_error {
  using std::domain_error::domain_error;
};

/// Finite simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  using Vertex = std::size_t;
  using Edge = std::pair<Vertex, Vertex>;

  /// Builds from an edge list; rejects self-loops, out-of-range endpoints
  /// and order 0. Duplicate pairs (in either orientation) collapse.
  Graph(std::size_t order, const std::vector<Edge>& edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (lo, hi) pairs in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  Graph() = default;
  friend Graph copies(std::size_t k, const Graph& g);
  friend Graph join(const Graph& g1, const Graph& g2);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Validated (a, m, n) for the generalized wheel aK_m joined with C_n.
struct WheelParams {
  std::int64_t a;
  std::int64_t m;
  std::int64_t n;

  /// Throws invalid_parameter unless a >= 1, m >= 1, n >= 3.
  static WheelParams make(std::int64_t a, std::int64_t m, std::int64_t n);

  std::int64_t order() const { return a * m + n; }
  friend bool operator==(const WheelParams&, const WheelParams&) = default;
  friend auto operator<=>(const WheelParams&, const WheelParams&) = default;
};

Graph complete(std::size_t m);
Graph cycle(std::size_t n);
Graph copies(std::size_t k, const Graph& g);
Graph join(const Graph& g1, const Graph& g2);

/// Copies of K_m take vertices 0..am-1 (copy-major), the cycle takes
/// am..am+n-1.
Graph generalized_wheel(const WheelParams& p);

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Common degree, or nullopt when degrees differ.
std::optional<std::size_t> regular_degree(const Graph& g);

IntMatrix adjacency_matrix(const Graph& g);

/// All-pairs BFS distances. Throws not_connected for disconnected input.
IntMatrix distance_matrix(const Graph& g);
IntMatrix transmission_matrix(const Graph& g);
IntMatrix dl_matrix(const Graph& g);
IntMatrix dq_matrix(const Graph& g);

/// Sum of distances over unordered vertex pairs.
std::int64_t wiener_index(const Graph& g);

std::int64_t diameter(const Graph& g);

}  // namespace gwspec
