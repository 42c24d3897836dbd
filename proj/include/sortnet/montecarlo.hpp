#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/rng.hpp"

#include "json.hpp"

// Seed-deterministic Monte Carlo estimators tying the samplers to the exact
// predictions. Sampling is embarrassingly parallel: worker w draws from
// Rng::for_worker(seed, w) and partial accumulators merge in worker order,
// so results are bit-identical for a fixed (seed, workers) pair.
namespace sortnet::mc {

struct Estimate {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  int64_t count = 0;
};

// Streaming (count, mean, M2) accumulator.
class Welford {
 public:
  void add(double x) {
    ++count_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(count_);
    m2_ += d * (x - mean_);
  }

  // Exact merged accumulator; merging with an empty one is the identity.
  static Welford merge(const Welford& a, const Welford& b);

  int64_t count() const { return count_; }
  double mean() const { return mean_; }
  double m2() const { return m2_; }
  Estimate estimate() const;

 private:
  int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

namespace detail {
void run_workers(int64_t samples, int workers,
                 const std::function<void(int, int64_t)>& run_chunk);
}

// Runs `body(rng, acc)` once per sample across `workers` threads. Worker w
// owns Rng::for_worker(seed, w) and a copy of `init`; partial accumulators
// merge in worker order, so the result is a function of (seed, workers)
// alone.
template <class Acc, class Body, class Merge>
Acc parallel_fold(int64_t samples, std::uint64_t seed, int workers,
                  const Acc& init, Body&& body, Merge&& merge) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (workers < 1) throw std::invalid_argument("need at least one worker");
  std::vector<Acc> partial(static_cast<size_t>(workers), init);
  detail::run_workers(samples, workers, [&](int w, int64_t chunk) {
    Rng rng = Rng::for_worker(seed, static_cast<unsigned>(w));
    Acc& acc = partial[static_cast<size_t>(w)];
    for (int64_t i = 0; i < chunk; ++i) body(rng, acc);
  });
  Acc out = init;
  for (const Acc& p : partial) out = merge(out, p);
  return out;
}

// parallel_fold specialised to a Welford accumulator.
Welford run_parallel(int64_t samples, std::uint64_t seed, int workers,
                     const std::function<void(Rng&, Welford&)>& body);

// Draws m distinct values from {1..n} by a partial Fisher-Yates pass;
// returned sorted.
std::vector<int> sample_subset(int n, int m, Rng& rng);

// Mean +- SE of #{t: s_t = j} in the random m-out-of-n subnetwork.
// Target: exact::expected_swaps(m, j), independent of n.
Estimate subnet_swap_expectation(int n, int m, int j, int64_t samples,
                                 std::uint64_t seed, int workers = 1);

// Per-location estimates for all j at once. Asserts, for every sample, that
// the location counts sum to exactly C(m,2) (each pair swaps exactly once).
std::vector<Estimate> subnet_swap_profile(int n, int m, int64_t samples,
                                          std::uint64_t seed, int workers = 1);

// Frequency of the distinguished four 4-particle networks among
// 4-out-of-n subnetworks; target 1/4 for every n >= 4.
Estimate four_subnet_frequency(int n, int64_t samples, std::uint64_t seed,
                               int workers = 1);

// Empirical law over the 16 possible 4-particle networks, indexed in
// enumeration order.
struct LawM4 {
  std::array<int64_t, 16> counts{};
  int64_t samples = 0;

  std::array<double, 16> frequencies() const;
};

int index_of_4network(const SortingNetwork& net);  // -1 if not a 4-network

LawM4 subnet_law_m4(int n, int64_t samples, std::uint64_t seed, int workers = 1);
LawM4 geometric_law_m4(int64_t samples, std::uint64_t seed, int workers = 1);

// Total-variation distance between two empirical laws, with a multinomial
// bootstrap spread. Descriptive only; there is no pass/fail threshold.
struct TvReport {
  double tv = 0.0;
  double bootstrap_stderr = 0.0;
  int rounds = 0;
};
TvReport tv_distance_report(const LawM4& a, const LawM4& b, int rounds,
                            std::uint64_t seed);

// Experiment driver: specs come from a JSON config file and results append
// to a JSON-lines log.
struct ExperimentConfig {
  std::string experiment;
  nlohmann::json parameters;
  int64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);

// Runs one experiment and returns the full record (spec + result). Unknown
// experiment names and parameter violations throw std::invalid_argument.
nlohmann::json run_experiment(const ExperimentConfig& config);

}  // namespace sortnet::mc
