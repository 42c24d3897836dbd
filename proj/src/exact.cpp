#include "sortnet/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sortnet/tableau.hpp"

namespace sortnet::exact {

namespace {

// Subsets of {1..n} of size m in lexicographic order.
std::vector<std::vector<int>> subsets_of(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(m));
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int k = i + 1; k < m; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

// Walks a network restricted to `watched`, invoking `emit(location)` for
// each induced swap. Buffers are caller-provided so enumeration loops do not
// allocate.
struct RestrictionWalker {
  std::vector<int> conf;
  std::vector<int> prefix;
  std::vector<char> watched;

  void reset_size(int n) {
    conf.resize(static_cast<size_t>(n) + 1);
    prefix.assign(static_cast<size_t>(n) + 1, 0);
    watched.assign(static_cast<size_t>(n) + 1, 0);
  }

  template <class Emit>
  void walk(const SortingNetwork& net, const std::vector<int>& labels, Emit&& emit) {
    const int n = net.n;
    std::iota(conf.begin(), conf.end(), 0);
    std::fill(watched.begin(), watched.end(), 0);
    for (int a : labels) watched[a] = 1;
    for (int pos = 1; pos <= n; ++pos)
      prefix[pos] = prefix[pos - 1] + watched[conf[pos]];
    for (int s : net.swaps) {
      const bool left = watched[conf[s]];
      const bool right = watched[conf[s + 1]];
      if (left && right) emit(prefix[s]);
      std::swap(conf[s], conf[s + 1]);
      if (left != right) prefix[s] = prefix[s - 1] + watched[conf[s]];
    }
  }
};

void require_brute_range(int n, int m) {
  if (m < 2 || m > n || n > 6)
    throw std::invalid_argument("brute-force range is 2 <= m <= n <= 6");
}

}  // namespace

std::vector<SortingNetwork> enumerate_networks(int n, bool allow_expensive) {
  std::vector<SortingNetwork> out;
  for_each_network(n, [&](const SortingNetwork& net) { out.push_back(net); },
                   allow_expensive);
  return out;
}

BigInt count_networks(int n) {
  if (n < 2) throw std::invalid_argument("count_networks needs n >= 2");
  const unsigned long N = static_cast<unsigned long>(swap_count(n));
  BigInt hooks = 1;
  for (int row = 1; row < n; ++row)
    for (int col = 1; col <= n - row; ++col)
      hooks *= tableau::hook_length(n, row, col);
  BigInt count = factorial(N);
  mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), hooks.get_mpz_t());
  return count;
}

Rational falling_factorial(const Rational& a, unsigned r) {
  Rational v = 1;
  Rational factor = a;
  for (unsigned i = 0; i < r; ++i, factor -= 1) v *= factor;
  return v;
}

Rational first_swap_pmf(int n, int k) {
  if (n < 2) throw std::invalid_argument("first_swap_pmf needs n >= 2");
  if (k < 1 || k > n - 1) return Rational(0);
  const Rational half = make_rational(1, 2);
  Rational v = falling_factorial(k - half, static_cast<unsigned>(k - 1));
  v *= falling_factorial(n - k - half, static_cast<unsigned>(n - k - 1));
  v /= Rational(factorial(static_cast<unsigned long>(k - 1)) *
                factorial(static_cast<unsigned long>(n - k - 1)));
  v /= static_cast<long>(swap_count(n));
  return v;
}

std::vector<Rational> first_swap_pmf(int n) {
  std::vector<Rational> pmf;
  pmf.reserve(static_cast<size_t>(n) - 1);
  for (int k = 1; k <= n - 1; ++k) pmf.push_back(first_swap_pmf(n, k));
  return pmf;
}

Rational expected_swaps(int m, int j) {
  if (m < 2) throw std::invalid_argument("expected_swaps needs m >= 2");
  if (j < 1 || j > m - 1) throw std::invalid_argument("location out of range");
  return Rational(static_cast<long>(swap_count(m))) * first_swap_pmf(m, j);
}

std::map<std::pair<int, int>, Rational> expected_swaps_bruteforce_all(int n) {
  require_brute_range(n, 2);
  std::vector<std::vector<std::vector<int>>> subsets(static_cast<size_t>(n) + 1);
  for (int m = 2; m <= n; ++m) subsets[m] = subsets_of(n, m);

  // totals[m][j] = location-j swaps summed over every (network, m-subset).
  std::vector<std::vector<long long>> totals(static_cast<size_t>(n) + 1);
  for (int m = 2; m <= n; ++m) totals[m].assign(static_cast<size_t>(m), 0);

  long long networks = 0;
  RestrictionWalker walker;
  walker.reset_size(n);
  for_each_network(n, [&](const SortingNetwork& net) {
    ++networks;
    for (int m = 2; m <= n; ++m) {
      auto& row = totals[m];
      for (const auto& labels : subsets[m])
        walker.walk(net, labels, [&](int loc) { ++row[loc]; });
    }
  });

  std::map<std::pair<int, int>, Rational> out;
  for (int m = 2; m <= n; ++m) {
    const BigInt pairs = to_bigint(networks) * BigInt(static_cast<long>(subsets[m].size()));
    for (int j = 1; j <= m - 1; ++j)
      out[{m, j}] = make_rational(to_bigint(totals[m][j]), pairs);
  }
  return out;
}

Rational expected_swaps_bruteforce(int n, int m, int j) {
  require_brute_range(n, m);
  if (j < 1 || j > m - 1) throw std::invalid_argument("location out of range");
  const auto subsets = subsets_of(n, m);
  long long total = 0;
  long long networks = 0;
  RestrictionWalker walker;
  walker.reset_size(n);
  for_each_network(n, [&](const SortingNetwork& net) {
    ++networks;
    for (const auto& labels : subsets)
      walker.walk(net, labels, [&](int loc) { total += loc == j; });
  });
  return make_rational(to_bigint(total),
                       to_bigint(networks) * BigInt(static_cast<long>(subsets.size())));
}

Rational hypergeometric_pmf(int n, int m, int k, int i) {
  if (n < 0 || m < 0 || k < 0 || m > n || k > n)
    throw std::invalid_argument("hypergeometric_pmf needs 0 <= m, k <= n");
  auto choose = [](long long a, long long b) -> BigInt {
    if (b < 0 || b > a) return BigInt(0);
    return binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  };
  const BigInt numerator = choose(k, i) * choose(n - k, m - i);
  return make_rational(numerator, choose(n, m));
}

ConvolutionCheck convolution_check(int n, int m, int j) {
  if (m < 2 || m > n) throw std::invalid_argument("convolution_check needs 2 <= m <= n");
  if (j < 1 || j > m - 1) throw std::invalid_argument("location out of range");
  ConvolutionCheck result;
  result.lhs = 0;
  for (int k = 1; k <= n - 1; ++k)
    result.lhs += first_swap_pmf(n, k) * hypergeometric_pmf(n - 2, m - 2, k - 1, j - 1);
  result.rhs = first_swap_pmf(m, j);
  result.equal = result.lhs == result.rhs;
  return result;
}

const std::array<SortingNetwork, 4>& hull_networks() {
  static const std::array<SortingNetwork, 4> nets = {
      SortingNetwork{4, {1, 2, 3, 2, 1, 2}},
      SortingNetwork{4, {3, 2, 1, 2, 3, 2}},
      SortingNetwork{4, {2, 1, 2, 3, 2, 1}},
      SortingNetwork{4, {2, 3, 2, 1, 2, 3}},
  };
  return nets;
}

Rational four_subnet_probability(int n) {
  if (n < 4 || n > 6)
    throw std::invalid_argument("exact four-network probability needs 4 <= n <= 6");
  const auto subsets = subsets_of(n, 4);
  const auto& targets = hull_networks();

  long long hits = 0;
  long long networks = 0;
  RestrictionWalker walker;
  walker.reset_size(n);
  std::vector<int> word;
  word.reserve(6);
  for_each_network(n, [&](const SortingNetwork& net) {
    ++networks;
    for (const auto& labels : subsets) {
      word.clear();
      walker.walk(net, labels, [&](int loc) { word.push_back(loc); });
      for (const auto& target : targets)
        if (word == target.swaps) {
          ++hits;
          break;
        }
    }
  });
  return make_rational(to_bigint(hits),
                       to_bigint(networks) * BigInt(static_cast<long>(subsets.size())));
}

SwapCountLaw swap_count_law(int n, int m, int j) {
  require_brute_range(n, m);
  if (j < 1 || j > m - 1) throw std::invalid_argument("location out of range");
  const auto subsets = subsets_of(n, m);
  std::map<int, long long> counts;
  long long networks = 0;
  RestrictionWalker walker;
  walker.reset_size(n);
  for_each_network(n, [&](const SortingNetwork& net) {
    ++networks;
    for (const auto& labels : subsets) {
      int c = 0;
      walker.walk(net, labels, [&](int loc) { c += loc == j; });
      ++counts[c];
    }
  });
  const BigInt pairs = to_bigint(networks) * BigInt(static_cast<long>(subsets.size()));
  SwapCountLaw law;
  for (const auto& [count, hits] : counts) law[count] = make_rational(to_bigint(hits), pairs);
  return law;
}

Rational law_mean(const SwapCountLaw& law) {
  Rational mean = 0;
  for (const auto& [count, mass] : law) mean += Rational(count) * mass;
  return mean;
}

std::pair<std::vector<Rational>, std::vector<Rational>>
first_and_second_swap_laws(int n, int m) {
  require_brute_range(n, m);
  if (m < 3)
    throw std::invalid_argument("second swap needs m >= 3 (C(m,2) >= 2 swaps)");
  const auto subsets = subsets_of(n, m);
  std::vector<long long> first(static_cast<size_t>(m), 0);
  std::vector<long long> second(static_cast<size_t>(m), 0);
  long long networks = 0;
  RestrictionWalker walker;
  walker.reset_size(n);
  for_each_network(n, [&](const SortingNetwork& net) {
    ++networks;
    for (const auto& labels : subsets) {
      int seen = 0;
      walker.walk(net, labels, [&](int loc) {
        if (seen == 0) ++first[loc];
        else if (seen == 1) ++second[loc];
        ++seen;
      });
    }
  });
  const BigInt pairs = to_bigint(networks) * BigInt(static_cast<long>(subsets.size()));
  std::vector<Rational> law1, law2;
  for (int loc = 1; loc <= m - 1; ++loc) {
    law1.push_back(make_rational(to_bigint(first[loc]), pairs));
    law2.push_back(make_rational(to_bigint(second[loc]), pairs));
  }
  return {law1, law2};
}

}  // namespace sortnet::exact
