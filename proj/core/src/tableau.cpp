#include "catins/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catins {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) {
      throw std::invalid_argument("Tableau: empty row");
    }
    if (r + 1 < rows_.size() && rows_[r].size() < rows_[r + 1].size()) {
      throw std::invalid_argument("Tableau: shape not a partition");
    }
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c + 1 < rows_[r].size() && rows_[r][c] > rows_[r][c + 1]) {
        throw std::invalid_argument("Tableau: row not weakly increasing");
      }
      if (r + 1 < rows_.size() && c < rows_[r + 1].size() &&
          rows_[r][c] >= rows_[r + 1][c]) {
        throw std::invalid_argument("Tableau: column not strictly increasing");
      }
    }
  }
}

Partition Tableau::shape() const {
  Partition p;
  p.reserve(rows_.size());
  for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
  return p;
}

int Tableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

Tableau row_insert_one(const Tableau& t, int a) {
  auto rows = t.rows();
  int carry = a;
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return Tableau(std::move(rows));
    }
    std::swap(*it, carry);
  }
  rows.push_back({carry});
  return Tableau(std::move(rows));
}

Tableau row_insert(const Word& w) {
  Tableau t;
  for (int a : w) t = row_insert_one(t, a);
  return t;
}

Tableau column_insert_one(const Tableau& t, int a) {
  auto rows = t.rows();
  int carry = a;
  size_t c = 0;
  while (true) {
    // bump the topmost entry >= carry in column c
    bool bumped = false;
    for (size_t r = 0; r < rows.size() && c < rows[r].size(); ++r) {
      if (rows[r][c] >= carry) {
        std::swap(rows[r][c], carry);
        bumped = true;
        break;
      }
    }
    if (!bumped) {
      // append at the bottom of column c
      size_t height = 0;
      while (height < rows.size() && c < rows[height].size()) ++height;
      if (height == rows.size()) {
        rows.push_back({});
      }
      if (rows[height].size() != c) {
        throw std::logic_error("column_insert_one: broken bumping path");
      }
      rows[height].push_back(carry);
      return Tableau(std::move(rows));
    }
    ++c;
  }
}

Word rowword(const Tableau& t) {
  Word w;
  const auto& rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    w.insert(w.end(), it->begin(), it->end());
  }
  return w;
}

bool is_syt(const Tableau& t) {
  Word w = rowword(t);
  return is_standard_word(w);
}

namespace {

// Grow SYT by placing k+1..n into outer corners.
void grow_syt(std::vector<std::vector<int>>& rows, int k, int n,
              std::vector<Tableau>& out) {
  if (k == n) {
    out.push_back(Tableau(rows));
    return;
  }
  for (size_t r = 0; r <= rows.size(); ++r) {
    bool corner = r == rows.size() || r == 0 ||
                  rows[r].size() < rows[r - 1].size();
    if (!corner) continue;
    if (r == rows.size()) {
      rows.push_back({k + 1});
      grow_syt(rows, k + 1, n, out);
      rows.pop_back();
    } else {
      rows[r].push_back(k + 1);
      grow_syt(rows, k + 1, n, out);
      rows[r].pop_back();
    }
  }
}

}  // namespace

std::vector<Tableau> all_syt(int n) {
  if (n < 0) throw std::invalid_argument("all_syt: negative n");
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows;
  grow_syt(rows, 0, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_grid(const Tableau& t) {
  // column-aligned; width from the widest entry
  size_t width = 1;
  for (const auto& row : t.rows()) {
    for (int a : row) width = std::max(width, std::to_string(a).size());
  }
  std::ostringstream out;
  for (const auto& row : t.rows()) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      std::string s = std::to_string(row[c]);
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace catins
