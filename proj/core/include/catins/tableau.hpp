#pragma once

#include <compare>
#include <string>
#include <vector>

#include "catins/partition.hpp"
#include "catins/words.hpp"

namespace catins {

// A (straight-shape) tableau in English notation: rows weakly increase left
// to right, columns strictly increase top to bottom. Immutable after
// construction; the constructor validates.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Schensted row insertion of a whole word: P(w).
Tableau row_insert(const Word& w);
// Row-insert a single value.
Tableau row_insert_one(const Tableau& t, int a);
// Column-insert a single value (bumps the topmost entry >= a in each column).
Tableau column_insert_one(const Tableau& t, int a);

// Row reading word: rows bottom to top, each left to right. Satisfies
// row_insert(rowword(T)) == T.
Word rowword(const Tableau& t);

// True iff t is a standard Young tableau (entries exactly 1..n).
bool is_syt(const Tableau& t);

// All SYT with n cells, deterministically ordered (sorted by rows).
std::vector<Tableau> all_syt(int n);

// Aligned text grid, one row per line.
std::string to_grid(const Tableau& t);

}  // namespace catins
