#pragma once

#include <vector>

#include "sortnet/rational.hpp"
#include "sortnet/rng.hpp"

// Polya urn with fractional ball counts, started from 1.5 white and 1.5
// black. The color sequence is exchangeable, and after n-2 additions the law
// of 1 + #whites equals the first-swap mass function p_n, which yields a
// monotone coupling of the first swap location across n.
namespace sortnet::urn {

enum class Ball { white, black };
using ColorSequence = std::vector<Ball>;

struct UrnState {
  Rational white;
  Rational black;

  Rational total() const { return white + black; }
};

UrnState initial_state();  // 3/2 white, 3/2 black

// Draws white with probability white/total, exactly: a 64-bit uniform
// variate is compared against the rational threshold, so the variate's
// resolution is the only stochastic approximation anywhere in this module.
// The drawn color's count is incremented by 1.
Ball step(UrnState& state, Rng& rng);

// Exact probability of observing `colors` as the added-ball sequence from
// the initial state. Depends only on the multiset of colors.
Rational sequence_probability(const ColorSequence& colors);

// Law of k = 1 + #whites among n-2 additions; index 0 holds k = 1. Equals
// the first-swap pmf p_n entrywise. Computed exactly, never by simulation.
std::vector<Rational> white_count_pmf(int n);

// One simulated urn path, reporting s(n) = 1 + #whites among the first n-2
// additions for n = 2..n_max (s(2) first). Consecutive differences lie in
// {0, 1}; each marginal s(n) is p_n-distributed.
std::vector<int> coupled_first_swaps(int n_max, Rng& rng);

// Verifies exhaustively that sequence_probability is constant on every
// permutation class of length n-2 color sequences. Requires n-2 <= 12.
bool exchangeability_check(int n);

}  // namespace sortnet::urn
