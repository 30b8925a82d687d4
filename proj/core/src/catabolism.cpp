#include "catins/catabolism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "catins/cocharge.hpp"

namespace catins {

Tableau superstandard(const Partition& lambda) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("superstandard: not a partition");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) {
    rows.emplace_back(lambda[i], static_cast<int>(i));
  }
  return Tableau(std::move(rows));
}

Tableau superstandard_syt(const Partition& lambda) {
  // rowword(Z_lambda) is a valid labeling; its standard word inserts to the
  // SYT whose labeling is Z_lambda.
  Word z = rowword(superstandard(lambda));
  return row_insert(standard_word_from_labeling(z));
}

Tableau h_slice(const Tableau& t, int r) {
  if (r < 0) throw std::invalid_argument("h_slice: negative row index");
  const auto& rows = t.rows();
  size_t split = std::min<size_t>(r, rows.size());
  Word north, south;
  for (size_t ri = split; ri-- > 0;) {
    north.insert(north.end(), rows[ri].begin(), rows[ri].end());
  }
  for (size_t ri = rows.size(); ri-- > split;) {
    south.insert(south.end(), rows[ri].begin(), rows[ri].end());
  }
  north.insert(north.end(), south.begin(), south.end());
  return row_insert(north);
}

Tableau v_slice(const Tableau& t, int c) {
  if (c < 0) throw std::invalid_argument("v_slice: negative column index");
  const auto& rows = t.rows();
  Word east, west;
  for (size_t ri = rows.size(); ri-- > 0;) {
    for (size_t col = c; col < rows[ri].size(); ++col) {
      east.push_back(rows[ri][col]);
    }
  }
  for (size_t ri = rows.size(); ri-- > 0;) {
    for (size_t col = 0; col < std::min<size_t>(c, rows[ri].size()); ++col) {
      west.push_back(rows[ri][col]);
    }
  }
  east.insert(east.end(), west.begin(), west.end());
  return row_insert(east);
}

Tableau cat(const Tableau& t, int m) {
  const auto& rows = t.rows();
  int row1 = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  if (m < 0 || m > row1) {
    throw std::invalid_argument("cat: (m) is not contained in sh(T)");
  }
  // H_1(T - T_(m)): north = remainder of row 1, south = rows 2..
  Word word(rows.empty() ? Word{} : Word(rows[0].begin() + m, rows[0].end()));
  for (size_t ri = rows.size(); ri-- > 1;) {
    word.insert(word.end(), rows[ri].begin(), rows[ri].end());
  }
  return row_insert(word);
}

Tableau ccat(const Tableau& t, int m) {
  const auto& rows = t.rows();
  int row1 = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  if (m < 0 || m > row1) {
    throw std::invalid_argument("ccat: (m) is not contained in sh(T)");
  }
  // V_m(T - T_(m)): east = columns > m of the sliced tableau (this includes
  // all of row 1's remainder), west = rows 2.. restricted to columns <= m.
  Word east, west;
  for (size_t ri = rows.size(); ri-- > 0;) {
    for (size_t col = m; col < rows[ri].size(); ++col) {
      east.push_back(rows[ri][col]);
    }
  }
  for (size_t ri = rows.size(); ri-- > 1;) {
    for (size_t col = 0; col < std::min<size_t>(m, rows[ri].size()); ++col) {
      west.push_back(rows[ri][col]);
    }
  }
  east.insert(east.end(), west.begin(), west.end());
  return row_insert(east);
}

Tableau relabel_standard(const Tableau& t) {
  Word entries = rowword(t);
  Word sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("relabel_standard: repeated entries");
  }
  std::map<int, int> rank;
  for (size_t i = 0; i < sorted.size(); ++i) {
    rank[sorted[i]] = static_cast<int>(i) + 1;
  }
  auto rows = t.rows();
  for (auto& row : rows) {
    for (int& a : row) a = rank[a];
  }
  return Tableau(std::move(rows));
}

namespace {

bool is_catabolizable_rec(const Tableau& t, const Partition& lambda,
                          size_t from, CatMode mode) {
  if (from == lambda.size()) return t.empty();
  int m = lambda[from];
  const auto& rows = t.rows();
  if (rows.empty() || static_cast<int>(rows[0].size()) < m) return false;
  // entries are 1..|t|; the prefix holds the m smallest iff it ends at m
  if (rows[0][m - 1] != m) return false;
  Tableau next = mode == CatMode::Row ? cat(t, m) : ccat(t, m);
  return is_catabolizable_rec(relabel_standard(next), lambda, from + 1, mode);
}

}  // namespace

bool is_catabolizable(const Tableau& t, const Partition& lambda,
                      CatMode mode) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("is_catabolizable: not a partition");
  }
  if (weight(lambda) != t.size()) {
    throw std::invalid_argument("is_catabolizable: weight mismatch");
  }
  return is_catabolizable_rec(relabel_standard(t), lambda, 0, mode);
}

Partition ctype_greedy(const Tableau& t, CatMode mode) {
  if (!is_syt(t)) {
    throw std::invalid_argument("ctype_greedy: not an SYT");
  }
  Partition out;
  Tableau cur = t;
  while (!cur.empty()) {
    const auto& row1 = cur.rows()[0];
    // largest m with T_(m) = Z*_(m), i.e. row 1 starting 1, 2, ..., m
    int m = 0;
    while (m < static_cast<int>(row1.size()) && row1[m] == m + 1) ++m;
    out.push_back(m);
    cur = relabel_standard(mode == CatMode::Row ? cat(cur, m) : ccat(cur, m));
  }
  return out;
}

std::vector<Partition> catabolizable_set(const Tableau& t) {
  std::vector<Partition> out;
  for (const Partition& lambda : partitions_of(t.size())) {
    if (is_catabolizable(t, lambda, CatMode::Row)) out.push_back(lambda);
  }
  return out;
}

}  // namespace catins
