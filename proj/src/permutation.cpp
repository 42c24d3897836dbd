#include "sortnet/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sortnet {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  if (n == 0) throw std::invalid_argument("permutation must be non-empty");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("entries are not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e), Unchecked{});
}

Permutation Permutation::reversal(int n) {
  std::vector<int> e(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return Permutation(std::move(e), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int pos = 1; pos <= size(); ++pos) inv[entry(pos) - 1] = pos;
  return Permutation(std::move(inv), Unchecked{});
}

long long Permutation::inversions() const {
  long long count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (entries_[i] > entries_[j]) ++count;
  return count;
}

void Permutation::swap_adjacent(int s) {
  if (s < 1 || s >= size()) throw std::invalid_argument("swap location out of range");
  std::swap(entries_[s - 1], entries_[s]);
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out << ' ';
    out << p.entries()[i];
  }
  return out.str();
}

}  // namespace sortnet
