#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sortnet/permutation.hpp"

namespace sortnet {

// An n-particle sorting network: N = n(n-1)/2 swap locations (1-based),
// composing to the reverse permutation. Equivalently a reduced word for the
// longest element of the symmetric group in adjacent transpositions.
struct SortingNetwork {
  int n = 0;
  std::vector<int> swaps;

  int length() const { return static_cast<int>(swaps.size()); }
  friend bool operator==(const SortingNetwork&, const SortingNetwork&) = default;
  friend auto operator<=>(const SortingNetwork&, const SortingNetwork&) = default;
};

constexpr long long swap_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

enum class NetworkFault {
  none,
  wrong_length,
  location_out_of_range,
  non_reduced_prefix,  // a swap that does not raise the inversion count
  wrong_endpoint,      // final configuration is not the reverse permutation
};

const char* describe(NetworkFault fault);

struct ValidationReport {
  NetworkFault fault = NetworkFault::none;
  int step = 0;  // 1-based index of the offending swap, when applicable
  bool ok() const { return fault == NetworkFault::none; }
};

// Full diagnosis of a candidate word; n >= 2 required, any word length
// accepted. A word of full length whose every prefix raises the inversion
// count necessarily ends at the reverse permutation; the endpoint check is a
// final guard.
ValidationReport validate_word(int n, std::span<const int> swaps);

inline bool validate(int n, std::span<const int> swaps) {
  return validate_word(n, swaps).ok();
}
inline bool validate(const SortingNetwork& net) { return validate(net.n, net.swaps); }

// Throws std::invalid_argument (with the fault description) unless valid.
SortingNetwork make_network(int n, std::vector<int> swaps);

// Visits sigma_0 = id, sigma_1, ..., sigma_N = reverse without materialising
// the whole sequence.
void for_each_configuration(const SortingNetwork& net,
                            const std::function<void(int, const Permutation&)>& visit);

std::vector<Permutation> configurations(const SortingNetwork& net);

// Restriction to the particles in `labels` (a subset of {1..n}, size >= 2).
// A swap of the host network contributes one swap iff both exchanged
// particles are watched; its location is the number of watched particles at
// positions <= s_t just before the swap. Runs in O(N) time.
SortingNetwork subnetwork(const SortingNetwork& net, std::span<const int> labels);

// The stationarity map (s_1,...,s_N) -> (s_2,...,s_N, n - s_1): a bijection
// on the set of n-particle networks. Applying it N times yields the
// location-complemented word (n-s_1,...,n-s_N), so its order divides 2N.
SortingNetwork shift(const SortingNetwork& net);

// Line format "n: s_1 s_2 ... s_N".
std::string to_line(const SortingNetwork& net);
SortingNetwork network_from_line(const std::string& line);
std::vector<SortingNetwork> read_networks(std::istream& in);
std::vector<SortingNetwork> read_network_file(const std::string& path);

}  // namespace sortnet
