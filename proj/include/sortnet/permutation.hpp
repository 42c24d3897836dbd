#pragma once

#include <string>
#include <vector>

namespace sortnet {

// A permutation of {1,...,n}, stored one-line: entry(i) is the value at
// position i (1-based). Network configurations read entry(position) =
// particle, so inverse() gives particle locations.
class Permutation {
 public:
  // Throws std::invalid_argument unless entries is a bijection of 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  static Permutation reversal(int n);  // (n, n-1, ..., 1)

  int size() const { return static_cast<int>(entries_.size()); }
  int entry(int pos) const { return entries_[pos - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  Permutation inverse() const;
  long long inversions() const;

  // Exchanges the values at positions s and s+1.
  void swap_adjacent(int s);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

std::string to_string(const Permutation& p);

}  // namespace sortnet
