#include "sortnet/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sortnet::tableau {

namespace {

// Fenwick tree over row lengths, for uniform cell selection in a ragged
// shrinking shape.
class RowIndex {
 public:
  explicit RowIndex(const std::vector<int>& lengths)
      : size_(static_cast<int>(lengths.size())), tree_(lengths.size() + 1, 0) {
    for (int i = 1; i <= size_; ++i) {
      tree_[i] += lengths[i - 1];
      const int parent = i + (i & -i);
      if (parent <= size_) tree_[parent] += tree_[i];
    }
    log_ = 1;
    while ((1 << log_) <= size_) ++log_;
  }

  void add(int i, int delta) {
    for (; i <= size_; i += i & -i) tree_[i] += delta;
  }

  // Row r and column offset for the cell with 0-based rank `target` in
  // row-major order.
  std::pair<int, int> locate(long long target) const {
    int pos = 0;
    long long rem = target;
    for (int pw = 1 << log_; pw > 0; pw >>= 1) {
      const int next = pos + pw;
      if (next <= size_ && tree_[next] <= rem) {
        pos = next;
        rem -= tree_[next];
      }
    }
    return {pos + 1, static_cast<int>(rem) + 1};
  }

 private:
  int size_;
  int log_ = 0;
  std::vector<long long> tree_;
};

[[noreturn]] void corrupt(const char* what) {
  throw std::logic_error(std::string("tableau correspondence invariant broken: ") + what);
}

}  // namespace

StaircaseTableau::StaircaseTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  const int n = static_cast<int>(rows_.size()) + 1;
  if (n < 2) throw std::invalid_argument("staircase tableau needs at least one row");
  const int N = static_cast<int>(swap_count(n));
  cell_of_.assign(static_cast<size_t>(N) + 1, {0, 0});
  for (int r = 1; r <= n - 1; ++r) {
    const auto& row = rows_[r - 1];
    if (static_cast<int>(row.size()) != n - r)
      throw std::invalid_argument("rows must have staircase lengths n-1, n-2, ..., 1");
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      const int v = row[c - 1];
      if (v < 1 || v > N) throw std::invalid_argument("entry out of range 1..N");
      if (cell_of_[v].first) throw std::invalid_argument("duplicate entry");
      if (c > 1 && row[c - 2] >= v)
        throw std::invalid_argument("rows must increase strictly");
      if (r > 1 && rows_[r - 2][c - 1] >= v)
        throw std::invalid_argument("columns must increase strictly");
      cell_of_[v] = {r, c};
    }
  }
}

int StaircaseTableau::cells() const { return static_cast<int>(swap_count(n())); }

std::pair<int, int> StaircaseTableau::cell_of(int entry) const {
  if (entry < 1 || entry > cells()) throw std::invalid_argument("entry out of range");
  return cell_of_[entry];
}

std::string to_text(const StaircaseTableau& t) {
  std::ostringstream out;
  for (const auto& row : t.rows()) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

StaircaseTableau tableau_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<int> row;
    int v;
    while (fields >> v) row.push_back(v);
    if (!fields.eof()) throw std::invalid_argument("bad tableau row: " + line);
    rows.push_back(std::move(row));
  }
  return StaircaseTableau(std::move(rows));
}

int hook_length(int n, int row, int col) {
  if (row < 1 || row > n - 1 || col < 1 || col > n - row)
    throw std::invalid_argument("cell outside the staircase shape");
  const int arm = (n - row) - col;
  const int leg = (n - col) - row;
  return arm + leg + 1;
}

StaircaseTableau sample_syt(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("sample_syt needs n >= 2");
  std::vector<std::vector<int>> rows(static_cast<size_t>(n) - 1);
  std::vector<int> row_len(static_cast<size_t>(n), 0);  // 1-based
  std::vector<int> col_len(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n - 1; ++i) {
    rows[i - 1].assign(static_cast<size_t>(n - i), 0);
    row_len[i] = n - i;
    col_len[i] = n - i;
  }
  RowIndex index(std::vector<int>(row_len.begin() + 1, row_len.end()));

  // Place entries largest first: hook-walk from a uniform cell of the
  // current shape to a corner, fill it, shrink the shape.
  long long remaining = swap_count(n);
  for (int entry = static_cast<int>(remaining); entry >= 1; --entry) {
    auto [r, c] = index.locate(
        static_cast<long long>(rng.below(static_cast<std::uint64_t>(remaining))));
    for (;;) {
      const int arm = row_len[r] - c;
      const int leg = col_len[c] - r;
      if (arm + leg == 0) break;
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(arm + leg)));
      if (v < arm)
        c += 1 + v;
      else
        r += 1 + (v - arm);
    }
    rows[r - 1][c - 1] = entry;
    index.add(r, -1);
    --row_len[r];
    --col_len[c];
    --remaining;
  }
  return StaircaseTableau(std::move(rows));
}

StaircaseTableau network_to_syt(const SortingNetwork& net) {
  if (!validate(net)) throw std::invalid_argument("invalid sorting network");
  const int N = net.length();
  std::vector<std::vector<int>> insertion, recording;

  // Coxeter-Knuth insertion of the swap word, last swap first.
  for (int t = 1; t <= N; ++t) {
    int x = net.swaps[static_cast<size_t>(N - t)];
    for (size_t r = 0;; ++r) {
      if (r == insertion.size()) {
        insertion.push_back({x});
        recording.push_back({t});
        break;
      }
      auto& row = insertion[r];
      if (x > row.back()) {
        row.push_back(x);
        recording[r].push_back(t);
        break;
      }
      const auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) corrupt("inserted letter equals the row maximum");
      if (it != row.begin() && *(it - 1) == x) {
        // The row already holds x, x+1: it stays put and x+1 bumps onward.
        if (*it != x + 1) corrupt("x present without x+1 as its successor");
        x = *it;
      } else {
        const int y = *it;
        *it = x;
        x = y;
      }
    }
  }

  // The insertion tableau of any reverse-permutation word is the staircase
  // with entry row + col - 1 everywhere.
  if (static_cast<int>(insertion.size()) != net.n - 1)
    corrupt("insertion tableau is not staircase-shaped");
  for (size_t i = 0; i < insertion.size(); ++i)
    for (size_t j = 0; j < insertion[i].size(); ++j)
      if (insertion[i][j] != static_cast<int>(i + j) + 1)
        corrupt("unexpected insertion tableau");
  return StaircaseTableau(std::move(recording));
}

SortingNetwork syt_to_network(const StaircaseTableau& t) {
  const int n = t.n();
  const int N = t.cells();
  std::vector<std::vector<int>> insertion(static_cast<size_t>(n) - 1);
  for (int i = 0; i < n - 1; ++i) {
    insertion[i].resize(static_cast<size_t>(n - 1 - i));
    std::iota(insertion[i].begin(), insertion[i].end(), i + 1);
  }

  SortingNetwork out;
  out.n = n;
  out.swaps.resize(static_cast<size_t>(N));
  for (int label = N; label >= 1; --label) {
    const auto [r, c] = t.cell_of(label);
    auto& row = insertion[r - 1];
    if (static_cast<int>(row.size()) != c) corrupt("label cell is not an outer corner");
    int z = row.back();
    row.pop_back();
    for (int rr = r - 2; rr >= 0; --rr) {
      auto& above = insertion[rr];
      const auto it = std::lower_bound(above.begin(), above.end(), z);
      if (it != above.end() && *it == z) {
        // Reverse of the stay-put case: the carried letter decrements.
        if (it == above.begin() || *(it - 1) != z - 1)
          corrupt("z present without z-1 before it");
        --z;
      } else {
        if (it == above.begin()) corrupt("no entry below the carried letter");
        const int x = *(it - 1);
        *(it - 1) = z;
        z = x;
      }
    }
    out.swaps[static_cast<size_t>(N - label)] = z;
  }
  if (!validate(out)) corrupt("decoded word is not a sorting network");
  return out;
}

int largest_entry_corner(const StaircaseTableau& t) {
  return t.cell_of(t.cells()).second;
}

SortingNetwork sample_uniform_network(int n, Rng& rng) {
  return syt_to_network(sample_syt(n, rng));
}

}  // namespace sortnet::tableau
