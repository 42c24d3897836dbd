#pragma once

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet::exact {

// Streams every n-particle sorting network exactly once, by iterative
// depth-first extension of reduced words: a prefix with configuration sigma
// extends by any location s with sigma(s) < sigma(s+1). The visitor receives
// a reference to a reused buffer; copy it if it must outlive the call.
//
// n = 7 (1,100,742,656 networks) is allowed only with allow_expensive.
template <class Visit>
void for_each_network(int n, Visit&& visit, bool allow_expensive = false) {
  if (n < 2 || n > 7)
    throw std::invalid_argument("network enumeration supports 2 <= n <= 7");
  if (n == 7 && !allow_expensive)
    throw std::invalid_argument(
        "n = 7 enumerates over 1.1e9 networks; pass allow_expensive to proceed");

  const int N = static_cast<int>(swap_count(n));
  std::vector<int> conf(static_cast<size_t>(n) + 1);  // conf[pos], 1-based
  std::iota(conf.begin(), conf.end(), 0);
  std::vector<int> next_try(static_cast<size_t>(N) + 1, 1);

  SortingNetwork net;
  net.n = n;
  net.swaps.resize(static_cast<size_t>(N));
  std::vector<int>& word = net.swaps;

  int depth = 0;
  for (;;) {
    if (depth == N) {
      visit(std::as_const(net));
      if (--depth < 0) break;
      std::swap(conf[word[depth]], conf[word[depth] + 1]);
      next_try[depth] = word[depth] + 1;
      continue;
    }
    int s = next_try[depth];
    while (s < n && conf[s] >= conf[s + 1]) ++s;
    if (s >= n) {
      if (--depth < 0) break;
      std::swap(conf[word[depth]], conf[word[depth] + 1]);
      next_try[depth] = word[depth] + 1;
      continue;
    }
    word[depth] = s;
    std::swap(conf[s], conf[s + 1]);
    ++depth;
    next_try[depth] = 1;
  }
}

}  // namespace sortnet::exact
