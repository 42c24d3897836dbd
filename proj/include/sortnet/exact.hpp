#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "sortnet/enumerate.hpp"
#include "sortnet/network.hpp"
#include "sortnet/rational.hpp"

// Exhaustive enumeration for small n and exact rational laws: the first-swap
// mass function, the subnetwork swap expectation (closed form and brute
// force), the hypergeometric convolution identity, and the distinguished
// four-network probability. Everything here is exact; no floating point.
namespace sortnet::exact {

std::vector<SortingNetwork> enumerate_networks(int n, bool allow_expensive = false);

// N! over the product of hook lengths of the staircase shape.
BigInt count_networks(int n);

// (a)_r = a(a-1)...(a-r+1); (a)_0 = 1. Defined for any rational a.
Rational falling_factorial(const Rational& a, unsigned r);

// p_n(k): mass function of the first swap location of the uniform n-particle
// network; zero outside [1, n-1].
Rational first_swap_pmf(int n, int k);
std::vector<Rational> first_swap_pmf(int n);  // index 0 holds k = 1

// Expected number of swaps at location j in the random m-out-of-n
// subnetwork; independent of n, and equal to C(m,2) * p_m(j).
Rational expected_swaps(int m, int j);

// The same expectation by definitional brute force: exact average over all
// n-particle networks and all m-subsets. 2 <= m <= n <= 6.
Rational expected_swaps_bruteforce(int n, int m, int j);

// One enumeration pass covering every (m, j) with 2 <= m <= n; keys (m, j).
std::map<std::pair<int, int>, Rational> expected_swaps_bruteforce_all(int n);

// h^n_{m,k}(i) with the convention C(a,b) = 0 for b outside [0,a].
Rational hypergeometric_pmf(int n, int m, int k, int i);

struct ConvolutionCheck {
  Rational lhs;  // sum_k p_n(k) h^{n-2}_{m-2,k-1}(j-1)
  Rational rhs;  // p_m(j)
  bool equal = false;
};

// The n-independence identity behind the subnetwork expectation.
ConvolutionCheck convolution_check(int n, int m, int j);

// The four 4-particle networks with three location-2 swaps; as geometric
// networks these are exactly the configurations with one point inside the
// convex hull of the other three.
const std::array<SortingNetwork, 4>& hull_networks();

// Exact probability that the random 4-out-of-n subnetwork lies in
// hull_networks(); 4 <= n <= 6.
Rational four_subnet_probability(int n);

// Law of #{t : s_t = j} in the random m-out-of-n subnetwork, count -> mass.
using SwapCountLaw = std::map<int, Rational>;
SwapCountLaw swap_count_law(int n, int m, int j);
Rational law_mean(const SwapCountLaw& law);

// Exact laws of the first and second swap locations of the m-out-of-n
// subnetwork (index 0 holds location 1); demonstrates that the subnetwork is
// not stationary in general. Requires 3 <= m <= n <= 6.
std::pair<std::vector<Rational>, std::vector<Rational>>
first_and_second_swap_laws(int n, int m);

}  // namespace sortnet::exact
