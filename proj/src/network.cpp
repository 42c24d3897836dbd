#include "sortnet/network.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sortnet {

const char* describe(NetworkFault fault) {
  switch (fault) {
    case NetworkFault::none: return "valid";
    case NetworkFault::wrong_length: return "wrong length";
    case NetworkFault::location_out_of_range: return "swap location out of range";
    case NetworkFault::non_reduced_prefix: return "swap does not raise the inversion count";
    case NetworkFault::wrong_endpoint: return "final configuration is not the reverse permutation";
  }
  return "unknown fault";
}

ValidationReport validate_word(int n, std::span<const int> swaps) {
  if (n < 2) throw std::invalid_argument("a sorting network needs n >= 2");
  for (size_t t = 0; t < swaps.size(); ++t)
    if (swaps[t] < 1 || swaps[t] >= n)
      return {NetworkFault::location_out_of_range, static_cast<int>(t) + 1};
  if (static_cast<long long>(swaps.size()) != swap_count(n))
    return {NetworkFault::wrong_length, 0};

  std::vector<int> conf(static_cast<size_t>(n) + 1);
  std::iota(conf.begin(), conf.end(), 0);  // conf[pos], 1-based
  for (size_t t = 0; t < swaps.size(); ++t) {
    const int s = swaps[t];
    if (conf[s] >= conf[s + 1])
      return {NetworkFault::non_reduced_prefix, static_cast<int>(t) + 1};
    std::swap(conf[s], conf[s + 1]);
  }
  // A full-length word of inversion-raising swaps must end at the reverse
  // permutation; this is a guard, not a reachable failure.
  for (int pos = 1; pos <= n; ++pos)
    if (conf[pos] != n + 1 - pos) return {NetworkFault::wrong_endpoint, 0};
  return {};
}

SortingNetwork make_network(int n, std::vector<int> swaps) {
  const ValidationReport report = validate_word(n, swaps);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "invalid sorting network: " << describe(report.fault);
    if (report.step) msg << " (step " << report.step << ")";
    throw std::invalid_argument(msg.str());
  }
  return SortingNetwork{n, std::move(swaps)};
}

void for_each_configuration(const SortingNetwork& net,
                            const std::function<void(int, const Permutation&)>& visit) {
  if (!validate(net)) throw std::invalid_argument("invalid sorting network");
  Permutation conf = Permutation::identity(net.n);
  visit(0, conf);
  for (int t = 1; t <= net.length(); ++t) {
    conf.swap_adjacent(net.swaps[t - 1]);
    visit(t, conf);
  }
}

std::vector<Permutation> configurations(const SortingNetwork& net) {
  std::vector<Permutation> out;
  out.reserve(net.swaps.size() + 1);
  for_each_configuration(net, [&](int, const Permutation& p) { out.push_back(p); });
  return out;
}

SortingNetwork subnetwork(const SortingNetwork& net, std::span<const int> labels) {
  if (!validate(net)) throw std::invalid_argument("invalid sorting network");
  const int n = net.n;
  const int m = static_cast<int>(labels.size());
  if (m < 2) throw std::invalid_argument("subnetwork needs at least 2 particles");

  std::vector<char> watched(static_cast<size_t>(n) + 1, 0);
  for (int a : labels) {
    if (a < 1 || a > n) throw std::invalid_argument("particle label out of range");
    if (watched[a]) throw std::invalid_argument("duplicate particle label");
    watched[a] = 1;
  }

  std::vector<int> conf(static_cast<size_t>(n) + 1);
  std::iota(conf.begin(), conf.end(), 0);
  // prefix[pos] = watched particles at positions <= pos; O(1) update per swap.
  std::vector<int> prefix(static_cast<size_t>(n) + 1, 0);
  for (int pos = 1; pos <= n; ++pos) prefix[pos] = prefix[pos - 1] + watched[conf[pos]];

  SortingNetwork sub;
  sub.n = m;
  sub.swaps.reserve(static_cast<size_t>(swap_count(m)));
  for (int s : net.swaps) {
    const bool left = watched[conf[s]];
    const bool right = watched[conf[s + 1]];
    if (left && right) sub.swaps.push_back(prefix[s]);
    std::swap(conf[s], conf[s + 1]);
    if (left != right) prefix[s] = prefix[s - 1] + watched[conf[s]];
  }
  return sub;
}

SortingNetwork shift(const SortingNetwork& net) {
  if (!validate(net)) throw std::invalid_argument("invalid sorting network");
  SortingNetwork out;
  out.n = net.n;
  out.swaps.assign(net.swaps.begin() + 1, net.swaps.end());
  out.swaps.push_back(net.n - net.swaps.front());
  return out;
}

std::string to_line(const SortingNetwork& net) {
  std::ostringstream out;
  out << net.n << ':';
  for (int s : net.swaps) out << ' ' << s;
  return out.str();
}

SortingNetwork network_from_line(const std::string& line) {
  const size_t colon = line.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("expected \"n: s_1 s_2 ...\", missing ':'");
  int n = 0;
  try {
    n = std::stoi(line.substr(0, colon));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse particle count before ':'");
  }
  std::istringstream rest(line.substr(colon + 1));
  std::vector<int> swaps;
  int s;
  while (rest >> s) swaps.push_back(s);
  if (!rest.eof()) throw std::invalid_argument("trailing junk in network line");
  return make_network(n, std::move(swaps));
}

std::vector<SortingNetwork> read_networks(std::istream& in) {
  std::vector<SortingNetwork> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(network_from_line(line));
  }
  return out;
}

std::vector<SortingNetwork> read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open network file: " + path);
  return read_networks(in);
}

}  // namespace sortnet
