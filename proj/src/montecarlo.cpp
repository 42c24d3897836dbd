#include "sortnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "sortnet/exact.hpp"
#include "sortnet/geometry.hpp"
#include "sortnet/tableau.hpp"

namespace sortnet::mc {

namespace detail {

void run_workers(int64_t samples, int workers,
                 const std::function<void(int, int64_t)>& run_chunk) {
  workers = static_cast<int>(std::min<int64_t>(workers, samples));
  const int64_t base = samples / workers;
  const int64_t extra = samples % workers;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  threads.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int64_t chunk = base + (w < extra ? 1 : 0);
    threads.emplace_back([&, w, chunk] {
      try {
        run_chunk(w, chunk);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

Welford Welford::merge(const Welford& a, const Welford& b) {
  if (a.count_ == 0) return b;
  if (b.count_ == 0) return a;
  Welford out;
  out.count_ = a.count_ + b.count_;
  const double delta = b.mean_ - a.mean_;
  const double na = static_cast<double>(a.count_);
  const double nb = static_cast<double>(b.count_);
  const double n = na + nb;
  out.mean_ = a.mean_ + delta * nb / n;
  out.m2_ = a.m2_ + b.m2_ + delta * delta * na * nb / n;
  return out;
}

Estimate Welford::estimate() const {
  Estimate e;
  e.count = count_;
  e.mean = mean_;
  if (count_ > 1) {
    const double variance = m2_ / static_cast<double>(count_ - 1);
    e.stderr_of_mean = std::sqrt(variance / static_cast<double>(count_));
  }
  return e;
}

Welford run_parallel(int64_t samples, std::uint64_t seed, int workers,
                     const std::function<void(Rng&, Welford&)>& body) {
  return parallel_fold(samples, seed, workers, Welford{}, body, &Welford::merge);
}

std::vector<int> sample_subset(int n, int m, Rng& rng) {
  if (m < 1 || m > n) throw std::invalid_argument("subset size out of range");
  static thread_local std::vector<int> pool;
  pool.resize(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto pick = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[pick]);
    out[i] = pool[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_subnet_params(int n, int m) {
  if (m < 2 || m > n) throw std::invalid_argument("need 2 <= m <= n");
}

}  // namespace

Estimate subnet_swap_expectation(int n, int m, int j, int64_t samples,
                                 std::uint64_t seed, int workers) {
  require_subnet_params(n, m);
  if (j < 1 || j > m - 1) throw std::invalid_argument("location out of range");
  return run_parallel(samples, seed, workers, [&](Rng& rng, Welford& acc) {
    const SortingNetwork net = tableau::sample_uniform_network(n, rng);
    const auto labels = sample_subset(n, m, rng);
    const SortingNetwork sub = subnetwork(net, labels);
    acc.add(static_cast<double>(std::count(sub.swaps.begin(), sub.swaps.end(), j)));
  }).estimate();
}

std::vector<Estimate> subnet_swap_profile(int n, int m, int64_t samples,
                                          std::uint64_t seed, int workers) {
  require_subnet_params(n, m);
  using Acc = std::vector<Welford>;
  const Acc init(static_cast<size_t>(m) - 1);
  const Acc folded = parallel_fold(
      samples, seed, workers, init,
      [&](Rng& rng, Acc& acc) {
        const SortingNetwork net = tableau::sample_uniform_network(n, rng);
        const auto labels = sample_subset(n, m, rng);
        const SortingNetwork sub = subnetwork(net, labels);
        // Each pair swaps exactly once, so the per-sample location counts
        // must sum to C(m,2); the summed estimator has zero variance.
        if (sub.length() != static_cast<int>(swap_count(m)))
          throw std::logic_error("subnetwork does not have C(m,2) swaps");
        for (int j = 1; j <= m - 1; ++j)
          acc[static_cast<size_t>(j) - 1].add(static_cast<double>(
              std::count(sub.swaps.begin(), sub.swaps.end(), j)));
      },
      [](Acc a, const Acc& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] = Welford::merge(a[i], b[i]);
        return a;
      });
  std::vector<Estimate> out;
  out.reserve(folded.size());
  for (const auto& w : folded) out.push_back(w.estimate());
  return out;
}

Estimate four_subnet_frequency(int n, int64_t samples, std::uint64_t seed,
                               int workers) {
  if (n < 4) throw std::invalid_argument("need n >= 4");
  const auto& targets = exact::hull_networks();
  return run_parallel(samples, seed, workers, [&](Rng& rng, Welford& acc) {
    const SortingNetwork net = tableau::sample_uniform_network(n, rng);
    const auto labels = sample_subset(n, 4, rng);
    const SortingNetwork sub = subnetwork(net, labels);
    bool hit = false;
    for (const auto& target : targets)
      if (sub.swaps == target.swaps) {
        hit = true;
        break;
      }
    acc.add(hit ? 1.0 : 0.0);
  }).estimate();
}

std::array<double, 16> LawM4::frequencies() const {
  std::array<double, 16> f{};
  for (size_t i = 0; i < counts.size(); ++i)
    f[i] = samples ? static_cast<double>(counts[i]) / static_cast<double>(samples) : 0.0;
  return f;
}

int index_of_4network(const SortingNetwork& net) {
  static const std::map<std::vector<int>, int> index = [] {
    std::map<std::vector<int>, int> m;
    int i = 0;
    for (const auto& w : exact::enumerate_networks(4)) m[w.swaps] = i++;
    return m;
  }();
  if (net.n != 4) return -1;
  const auto it = index.find(net.swaps);
  return it == index.end() ? -1 : it->second;
}

namespace {

struct CountsAcc {
  std::array<int64_t, 16> counts{};
  int64_t samples = 0;
};

LawM4 fold_law(int64_t samples, std::uint64_t seed, int workers,
               const std::function<SortingNetwork(Rng&)>& draw) {
  const CountsAcc folded = parallel_fold(
      samples, seed, workers, CountsAcc{},
      [&](Rng& rng, CountsAcc& acc) {
        const int idx = index_of_4network(draw(rng));
        if (idx < 0) throw std::logic_error("sampler produced a non-4-network");
        ++acc.counts[static_cast<size_t>(idx)];
        ++acc.samples;
      },
      [](CountsAcc a, const CountsAcc& b) {
        for (size_t i = 0; i < a.counts.size(); ++i) a.counts[i] += b.counts[i];
        a.samples += b.samples;
        return a;
      });
  return LawM4{folded.counts, folded.samples};
}

double tv_distance(const std::array<double, 16>& a, const std::array<double, 16>& b) {
  double tv = 0;
  for (size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return tv / 2;
}

// One nonparametric bootstrap replicate: `samples` categorical draws from
// the empirical law.
std::array<double, 16> resample_frequencies(const LawM4& law, Rng& rng) {
  std::array<double, 16> cdf{};
  double running = 0;
  const auto freq = law.frequencies();
  for (size_t i = 0; i < freq.size(); ++i) {
    running += freq[i];
    cdf[i] = running;
  }
  std::array<int64_t, 16> counts{};
  for (int64_t s = 0; s < law.samples; ++s) {
    const double u = rng.unit();
    size_t i = 0;
    while (i + 1 < cdf.size() && u >= cdf[i]) ++i;
    ++counts[i];
  }
  std::array<double, 16> out{};
  for (size_t i = 0; i < counts.size(); ++i)
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(law.samples);
  return out;
}

}  // namespace

LawM4 subnet_law_m4(int n, int64_t samples, std::uint64_t seed, int workers) {
  if (n < 4) throw std::invalid_argument("need n >= 4");
  return fold_law(samples, seed, workers, [n](Rng& rng) {
    const SortingNetwork net = tableau::sample_uniform_network(n, rng);
    return subnetwork(net, sample_subset(n, 4, rng));
  });
}

LawM4 geometric_law_m4(int64_t samples, std::uint64_t seed, int workers) {
  return fold_law(samples, seed, workers, [](Rng& rng) {
    return geom::geometric_network(geom::sample_archimedes(4, rng).points);
  });
}

TvReport tv_distance_report(const LawM4& a, const LawM4& b, int rounds,
                            std::uint64_t seed) {
  if (rounds < 2) throw std::invalid_argument("need at least 2 bootstrap rounds");
  TvReport report;
  report.tv = tv_distance(a.frequencies(), b.frequencies());
  report.rounds = rounds;
  Rng rng(seed);
  std::vector<double> replicates;
  replicates.reserve(static_cast<size_t>(rounds));
  for (int r = 0; r < rounds; ++r)
    replicates.push_back(
        tv_distance(resample_frequencies(a, rng), resample_frequencies(b, rng)));
  double mean = 0;
  for (double v : replicates) mean += v;
  mean /= rounds;
  double ss = 0;
  for (double v : replicates) ss += (v - mean) * (v - mean);
  report.bootstrap_stderr = std::sqrt(ss / (rounds - 1));
  return report;
}

ExperimentConfig parse_config(const nlohmann::json& j) {
  ExperimentConfig c;
  c.experiment = j.at("experiment").get<std::string>();
  c.parameters = j.value("parameters", nlohmann::json::object());
  c.samples = j.at("samples").get<int64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.workers = j.value("workers", 1);
  if (c.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (c.workers < 1) throw std::invalid_argument("workers must be >= 1");
  return c;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  return parse_config(j);
}

namespace {

nlohmann::json estimate_record(const Estimate& e) {
  return {{"mean", e.mean}, {"stderr", e.stderr_of_mean}, {"n", e.count}};
}

}  // namespace

nlohmann::json run_experiment(const ExperimentConfig& c) {
  nlohmann::json result;
  const auto& p = c.parameters;
  if (c.experiment == "mc-subnet") {
    result = estimate_record(subnet_swap_expectation(
        p.at("n").get<int>(), p.at("m").get<int>(), p.at("j").get<int>(),
        c.samples, c.seed, c.workers));
  } else if (c.experiment == "mc-corollary2") {
    result = estimate_record(
        four_subnet_frequency(p.at("n").get<int>(), c.samples, c.seed, c.workers));
  } else if (c.experiment == "mc-geom-expect") {
    result = estimate_record(geom::mc_swap_expectation(
        p.at("m").get<int>(), p.at("j").get<int>(), c.samples, c.seed, c.workers));
  } else if (c.experiment == "subnet-law-m4") {
    const int n = p.at("n").get<int>();
    const int rounds = p.value("bootstrap_rounds", 100);
    const LawM4 uniform = subnet_law_m4(n, c.samples, c.seed, c.workers);
    const LawM4 geometric = geometric_law_m4(c.samples, c.seed + 1, c.workers);
    const TvReport tv = tv_distance_report(uniform, geometric, rounds, c.seed + 2);
    result["subnet_frequencies"] = uniform.frequencies();
    result["geometric_frequencies"] = geometric.frequencies();
    result["tv_distance"] = tv.tv;
    result["tv_bootstrap_stderr"] = tv.bootstrap_stderr;
  } else {
    throw std::invalid_argument("unknown experiment: " + c.experiment);
  }
  return {{"experiment", c.experiment}, {"parameters", c.parameters},
          {"samples", c.samples},       {"seed", c.seed},
          {"workers", c.workers},       {"result", result}};
}

}  // namespace sortnet::mc
