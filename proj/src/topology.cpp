#include "qvest/topology.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "qvest/error.hpp"

namespace qvest {

namespace {

void check_size(std::int64_t n) {
  if (n < 1) {
    throw InvalidParameter("qubit_count must be >= 1, got " +
                           std::to_string(n));
  }
}

// Sum of BFS distances from every source in [begin, end) to all vertices.
// Returns uint64 max if some vertex is unreachable from a source.
std::uint64_t distance_sum(const TopologyGraph& g, std::int64_t begin,
                           std::int64_t end) {
  const std::int64_t n = g.qubit_count();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n));
  std::vector<std::int64_t> queue(static_cast<std::size_t>(n));
  std::uint64_t total = 0;
  for (std::int64_t s = begin; s < end; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const std::int64_t u = queue[head++];
      for (const std::int64_t v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (tail != static_cast<std::size_t>(n)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    for (const std::int64_t d : dist) total += static_cast<std::uint64_t>(d);
  }
  return total;
}

}  // namespace

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Complete:
      return "complete";
    case TopologyKind::SquareGrid:
      return "grid";
    case TopologyKind::LinearChain:
      return "linear";
    case TopologyKind::Custom:
      return "custom";
  }
  return "unknown";
}

TopologyKind topology_kind_from_string(std::string_view name) {
  if (name == "complete") return TopologyKind::Complete;
  if (name == "grid" || name == "square_grid") return TopologyKind::SquareGrid;
  if (name == "linear" || name == "linear_chain") {
    return TopologyKind::LinearChain;
  }
  if (name == "custom") return TopologyKind::Custom;
  throw InvalidParameter("unknown topology kind '" + std::string(name) + "'");
}

TopologyGraph::TopologyGraph(std::int64_t n, TopologyKind kind,
                             std::vector<Edge> edges)
    : qubit_count_(n), kind_(kind), edges_(std::move(edges)) {
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : edges_) {
    ++degree[a];
    ++degree[b];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  targets_.resize(static_cast<std::size_t>(offsets_.back()));
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    targets_[cursor[a]++] = b;
    targets_[cursor[b]++] = a;
  }
}

TopologyGraph TopologyGraph::complete(std::int64_t n) {
  check_size(n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return TopologyGraph(n, TopologyKind::Complete, std::move(edges));
}

TopologyGraph TopologyGraph::square_grid(std::int64_t n) {
  check_size(n);
  auto side = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (side * side < n) ++side;
  while (side > 1 && (side - 1) * (side - 1) >= n) --side;
  std::vector<Edge> edges;
  for (std::int64_t q = 0; q < n; ++q) {
    const std::int64_t col = q % side;
    if (col + 1 < side && q + 1 < n) edges.emplace_back(q, q + 1);
    if (q + side < n) edges.emplace_back(q, q + side);
  }
  return TopologyGraph(n, TopologyKind::SquareGrid, std::move(edges));
}

TopologyGraph TopologyGraph::linear_chain(std::int64_t n) {
  check_size(n);
  std::vector<Edge> edges;
  for (std::int64_t q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  return TopologyGraph(n, TopologyKind::LinearChain, std::move(edges));
}

TopologyGraph TopologyGraph::custom(std::int64_t n, std::vector<Edge> edges) {
  check_size(n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidParameter("edge (" + std::to_string(a) + ", " +
                             std::to_string(b) + ") has an endpoint outside [0, " +
                             std::to_string(n) + ")");
    }
    if (a == b) {
      throw InvalidParameter("self-loop on qubit " + std::to_string(a));
    }
  }
  return TopologyGraph(n, TopologyKind::Custom, std::move(edges));
}

TopologyGraph TopologyGraph::make(TopologyKind kind, std::int64_t n) {
  switch (kind) {
    case TopologyKind::Complete:
      return complete(n);
    case TopologyKind::SquareGrid:
      return square_grid(n);
    case TopologyKind::LinearChain:
      return linear_chain(n);
    case TopologyKind::Custom:
      break;
  }
  throw InvalidParameter("custom topologies need an explicit edge list");
}

std::span<const std::int64_t> TopologyGraph::neighbors(std::int64_t q) const {
  return {targets_.data() + offsets_[q],
          static_cast<std::size_t>(offsets_[q + 1] - offsets_[q])};
}

bool TopologyGraph::is_connected() const {
  return distance_sum(*this, 0, 1) != std::numeric_limits<std::uint64_t>::max();
}

double average_swap_count(const TopologyGraph& g) {
  const std::int64_t n = g.qubit_count();
  if (n < 2) return 0.0;

  // Sources are split into fixed chunks; integer sums make the result
  // independent of how the chunks are scheduled.
  const std::int64_t workers = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::thread::hardware_concurrency()), 1,
      std::max<std::int64_t>(1, n / 64));
  std::vector<std::future<std::uint64_t>> parts;
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t begin = n * w / workers;
    const std::int64_t end = n * (w + 1) / workers;
    parts.push_back(std::async(workers == 1 ? std::launch::deferred
                                            : std::launch::async,
                               [&g, begin, end] {
                                 return distance_sum(g, begin, end);
                               }));
  }
  std::uint64_t ordered_pairs_sum = 0;
  for (auto& part : parts) {
    const std::uint64_t s = part.get();
    if (s == std::numeric_limits<std::uint64_t>::max()) {
      throw DisconnectedGraph("topology with " + std::to_string(n) +
                              " qubits is not connected");
    }
    ordered_pairs_sum += s;
  }
  // Every unordered pair is counted twice.
  const auto pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  return static_cast<double>(ordered_pairs_sum) / pairs - 1.0;
}

ConnectivityFit fit_connectivity_exponent(const TopologyGenerator& generator,
                                          std::span<const std::int64_t> sizes) {
  if (sizes.size() < 4) {
    throw InvalidParameter("connectivity fit needs at least 4 sizes, got " +
                           std::to_string(sizes.size()));
  }
  ConnectivityFit fit;
  fit.sizes.assign(sizes.begin(), sizes.end());
  for (const std::int64_t n : sizes) {
    fit.avg_swaps.push_back(average_swap_count(generator(n)));
  }
  if (std::all_of(fit.avg_swaps.begin(), fit.avg_swaps.end(),
                  [](double v) { return v == 0.0; })) {
    return fit;
  }

  const auto count = static_cast<double>(sizes.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    xs.push_back(std::log(static_cast<double>(sizes[i])));
    ys.push_back(std::log(fit.avg_swaps[i] + 1.0));
    mean_x += xs.back();
    mean_y += ys.back();
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) {
    throw DegenerateFit("connectivity fit needs at least two distinct sizes");
  }
  fit.m_fit = sxy / sxx;
  const double intercept = mean_y - fit.m_fit * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + fit.m_fit * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / count);
  return fit;
}

ConnectivityFit fit_connectivity_exponent(TopologyKind kind,
                                          std::span<const std::int64_t> sizes) {
  if (kind == TopologyKind::Custom) {
    throw InvalidParameter("custom topologies need an explicit generator");
  }
  return fit_connectivity_exponent(
      [kind](std::int64_t n) { return TopologyGraph::make(kind, n); }, sizes);
}

std::vector<std::int64_t> default_fit_sizes(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Complete:
      return {10, 20, 50, 100};
    case TopologyKind::SquareGrid:
      return {16, 64, 144, 256};
    case TopologyKind::LinearChain:
      return {10, 50, 100, 200};
    case TopologyKind::Custom:
      break;
  }
  return {};
}

TopologyProfile profile_topology(const TopologyGraph& g) {
  TopologyProfile profile{g, average_swap_count(g), 0.0, 0.0};
  if (g.kind() == TopologyKind::Custom) {
    if (g.qubit_count() > 1) {
      profile.m_fit = std::log(profile.avg_swaps + 1.0) /
                      std::log(static_cast<double>(g.qubit_count()));
    }
    return profile;
  }
  const auto sizes = default_fit_sizes(g.kind());
  const auto fit = fit_connectivity_exponent(g.kind(), sizes);
  profile.m_fit = fit.m_fit;
  profile.fit_residual = fit.residual;
  return profile;
}

double effective_error(double m, std::int64_t n, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw InvalidParameter("eps must lie in (0, 1], got " + std::to_string(eps));
  }
  if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
  if (!(m >= 0.0) || !std::isfinite(m)) {
    throw InvalidParameter("connectivity exponent must be finite and >= 0");
  }
  if (m == 0.0) return eps;
  return std::min(1.0, std::pow(static_cast<double>(n), m) * eps);
}

double effective_error(const TopologyProfile& profile, std::int64_t n,
                       double eps) {
  return effective_error(profile.m_fit, n, eps);
}

}  // namespace qvest
