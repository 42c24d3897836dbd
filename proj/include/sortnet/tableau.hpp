#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/rng.hpp"

// Staircase standard Young tableaux and their correspondence with sorting
// networks. The correspondence is Coxeter-Knuth (Edelman-Greene) insertion
// applied to the swap word read from last swap to first; with that reading
// the first swap location of a network equals the column of the cell holding
// the largest entry of its recording tableau. Uniform tableaux are sampled
// by the hook-walk method, giving an exactly uniform network sampler that
// scales to n in the hundreds.
namespace sortnet::tableau {

// Standard Young tableau of shape (n-1, n-2, ..., 1): entries 1..N, rows and
// columns strictly increasing.
class StaircaseTableau {
 public:
  // Throws std::invalid_argument unless rows form a staircase SYT.
  explicit StaircaseTableau(std::vector<std::vector<int>> rows);

  int n() const { return static_cast<int>(rows_.size()) + 1; }
  int cells() const;
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }  // 1-based
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // (row, col) of a given entry, 1-based.
  std::pair<int, int> cell_of(int entry) const;

  friend bool operator==(const StaircaseTableau&, const StaircaseTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> cell_of_;  // entry -> cell
};

// Text format: one row per line, space-separated entries.
std::string to_text(const StaircaseTableau& t);
StaircaseTableau tableau_from_text(const std::string& text);

// Hook length (arm + leg + 1) of a staircase cell; 1-based, row in
// [1, n-1], col in [1, n-row].
int hook_length(int n, int row, int col);

// Uniformly random staircase SYT by iterated hook walks.
StaircaseTableau sample_syt(int n, Rng& rng);

// Recording tableau of the reversed swap word; a bijection from n-particle
// networks onto staircase SYT.
StaircaseTableau network_to_syt(const SortingNetwork& net);

// Inverse of network_to_syt. The first swap of the result equals
// largest_entry_corner of the input.
SortingNetwork syt_to_network(const StaircaseTableau& t);

// Column of the cell containing the largest entry (always an outer corner).
int largest_entry_corner(const StaircaseTableau& t);

// syt_to_network(sample_syt(n)): exactly uniform over n-particle networks.
SortingNetwork sample_uniform_network(int n, Rng& rng);

}  // namespace sortnet::tableau
