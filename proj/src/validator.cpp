#include "qvest/validator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "qvest/error.hpp"
#include "qvest/rng.hpp"

namespace qvest {

namespace {

constexpr std::int64_t kBlockTrials = 4096;
constexpr std::uint64_t kSingleStepSalt = 0x5ee5'1e57'e9a1'0001ULL;

// Streaming moments of one block; merged in block order.
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * other.count / total;
    m2 += other.m2 + delta * delta * count * other.count / total;
    count = total;
  }
};

// Index (0-based, raster order over layer x qubit) of the first erroneous
// qubit-slot. Geometric skip-ahead: identical in distribution to drawing a
// Bernoulli(eps) for every slot in turn.
double first_error_slot(CounterRng& rng, double log_survival) {
  return std::floor(std::log(rng.next_open_unit()) / log_survival);
}

template <typename BlockFn>
void for_each_block(std::int64_t trials, int threads, BlockFn&& fn) {
  const std::int64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
  const auto hw = threads > 0
                      ? static_cast<std::int64_t>(threads)
                      : static_cast<std::int64_t>(std::thread::hardware_concurrency());
  const std::int64_t workers = std::clamp<std::int64_t>(hw, 1, blocks);
  if (workers == 1) {
    for (std::int64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  for (std::int64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, w, workers, blocks] {
      for (std::int64_t b = w; b < blocks; b += workers) fn(b);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void TrialConfig::validate() const {
  if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
  if (trials < 1) {
    throw InvalidParameter("trials must be >= 1, got " + std::to_string(trials));
  }
  if (!(eps_eff >= 0.0 && eps_eff <= 1.0)) {
    throw InvalidParameter("eps_eff must lie in [0, 1], got " +
                           std::to_string(eps_eff));
  }
  if (threads < 0) {
    throw InvalidParameter("threads must be >= 0, got " + std::to_string(threads));
  }
}

double layer_failure_probability(std::int64_t n, double eps_eff) {
  return -std::expm1(static_cast<double>(n) * std::log1p(-eps_eff));
}

double exact_mean_depth(std::int64_t n, double eps_eff) {
  return 1.0 / layer_failure_probability(n, eps_eff);
}

DepthStatistics simulate_depth_to_first_error(const TrialConfig& cfg) {
  cfg.validate();
  if (cfg.eps_eff == 0.0) {
    throw InvalidParameter("eps_eff = 0 never fails; depth is unbounded");
  }
  const double log_survival = std::log1p(-cfg.eps_eff);
  const auto width = static_cast<double>(cfg.n);

  const std::int64_t blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<Moments> per_block(static_cast<std::size_t>(blocks));
  for_each_block(cfg.trials, cfg.threads, [&](std::int64_t b) {
    Moments m;
    const std::int64_t end = std::min(cfg.trials, (b + 1) * kBlockTrials);
    for (std::int64_t t = b * kBlockTrials; t < end; ++t) {
      CounterRng rng(cfg.seed, static_cast<std::uint64_t>(t));
      double layers = 1.0;
      if (cfg.eps_eff < 1.0) {
        layers = std::floor(first_error_slot(rng, log_survival) / width) + 1.0;
      }
      m.add(layers);
    }
    per_block[static_cast<std::size_t>(b)] = m;
  });

  Moments total;
  for (const Moments& m : per_block) total.merge(m);
  DepthStatistics out;
  out.mean_depth = total.mean;
  if (total.count > 1.0) {
    const double variance = total.m2 / (total.count - 1.0);
    out.std_error = std::sqrt(variance / total.count);
  }
  return out;
}

double single_step_error_rate(const TrialConfig& cfg) {
  cfg.validate();
  if (cfg.eps_eff == 0.0) return 0.0;
  if (cfg.eps_eff == 1.0) return 1.0;
  const double log_survival = std::log1p(-cfg.eps_eff);
  const auto width = static_cast<double>(cfg.n);

  const std::int64_t blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<std::int64_t> failures(static_cast<std::size_t>(blocks), 0);
  for_each_block(cfg.trials, cfg.threads, [&](std::int64_t b) {
    std::int64_t count = 0;
    const std::int64_t end = std::min(cfg.trials, (b + 1) * kBlockTrials);
    for (std::int64_t t = b * kBlockTrials; t < end; ++t) {
      CounterRng rng(cfg.seed ^ kSingleStepSalt, static_cast<std::uint64_t>(t));
      if (first_error_slot(rng, log_survival) < width) ++count;
    }
    failures[static_cast<std::size_t>(b)] = count;
  });

  std::int64_t total = 0;
  for (const std::int64_t f : failures) total += f;
  return static_cast<double>(total) / static_cast<double>(cfg.trials);
}

}  // namespace qvest
