#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qvest {

enum class TopologyKind { Complete, SquareGrid, LinearChain, Custom };

std::string_view to_string(TopologyKind kind);
/// Accepts "complete", "grid"/"square_grid", "linear"/"linear_chain".
TopologyKind topology_kind_from_string(std::string_view name);

using Edge = std::pair<std::int64_t, std::int64_t>;

/// Undirected, unweighted qubit connectivity graph. Edges are stored
/// normalised (first < second), sorted and deduplicated.
class TopologyGraph {
 public:
  static TopologyGraph complete(std::int64_t n);
  /// ceil(sqrt(n)) columns filled row-major; an exact square for n = s^2.
  static TopologyGraph square_grid(std::int64_t n);
  static TopologyGraph linear_chain(std::int64_t n);
  /// Throws InvalidParameter on self-loops or endpoints outside [0, n).
  /// Connectivity is not required here; see is_connected().
  static TopologyGraph custom(std::int64_t n, std::vector<Edge> edges);
  static TopologyGraph make(TopologyKind kind, std::int64_t n);

  std::int64_t qubit_count() const { return qubit_count_; }
  TopologyKind kind() const { return kind_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const std::int64_t> neighbors(std::int64_t q) const;
  bool is_connected() const;

 private:
  TopologyGraph(std::int64_t n, TopologyKind kind, std::vector<Edge> edges);

  std::int64_t qubit_count_ = 0;
  TopologyKind kind_ = TopologyKind::Custom;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_;  // CSR adjacency
  std::vector<std::int64_t> targets_;
};

struct ConnectivityFit {
  double m_fit = 0.0;
  double residual = 0.0;  // RMS residual of the log-log fit
  std::vector<std::int64_t> sizes;
  std::vector<double> avg_swaps;
};

struct TopologyProfile {
  TopologyGraph graph;
  double avg_swaps = 0.0;
  double m_fit = 0.0;
  double fit_residual = 0.0;
};

/// Mean over unordered qubit pairs of (shortest-path length - 1), exact via
/// breadth-first search from every vertex. Throws DisconnectedGraph.
double average_swap_count(const TopologyGraph& g);

using TopologyGenerator = std::function<TopologyGraph(std::int64_t)>;

/// Slope of log(N + 1) against log(n) over the given sizes (at least four).
/// A family with N == 0 everywhere returns m = 0 exactly.
ConnectivityFit fit_connectivity_exponent(const TopologyGenerator& generator,
                                          std::span<const std::int64_t> sizes);
ConnectivityFit fit_connectivity_exponent(TopologyKind kind,
                                          std::span<const std::int64_t> sizes);

/// Size ladder used when profiling a standard kind.
std::vector<std::int64_t> default_fit_sizes(TopologyKind kind);

/// Standard kinds are fitted over default_fit_sizes(); a custom graph gets
/// the single-graph estimate m = log(N + 1) / log(n).
TopologyProfile profile_topology(const TopologyGraph& g);

/// eps_eff = n^m * eps, clamped to at most 1.
double effective_error(double m, std::int64_t n, double eps);
double effective_error(const TopologyProfile& profile, std::int64_t n,
                       double eps);

}  // namespace qvest
