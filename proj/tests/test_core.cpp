#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "catins/partition.hpp"
#include "catins/tableau.hpp"
#include "catins/words.hpp"

using namespace catins;

TEST_CASE("partition basics") {
  CHECK(is_partition({}));
  CHECK(is_partition({3, 2, 2, 1}));
  CHECK_FALSE(is_partition({2, 3}));
  CHECK_FALSE(is_partition({2, 0}));
  CHECK_FALSE(is_partition({-1}));
  CHECK(weight({3, 2, 1}) == 6);
  CHECK(weight({}) == 0);
}

TEST_CASE("partitions_of counts and order") {
  // number of partitions of 0..9
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n <= 9; ++n) {
    auto parts = partitions_of(n);
    CHECK(static_cast<int>(parts.size()) == counts[n]);
    for (const auto& p : parts) {
      CHECK(is_partition(p));
      CHECK(weight(p) == n);
    }
    if (n > 0) {
      CHECK(parts.front() == Partition{n});
      CHECK(parts.back() == Partition(n, 1));
      CHECK(std::is_sorted(parts.begin(), parts.end(),
                           [](const auto& a, const auto& b) { return a > b; }));
    }
  }
}

TEST_CASE("dominance comparisons") {
  CHECK(dominance_compare({3, 1}, {2, 2}) == Dominance::Greater);
  CHECK(dominance_compare({2, 2}, {3, 1}) == Dominance::Less);
  CHECK(dominance_compare({2, 2}, {2, 2}) == Dominance::Equal);
  CHECK(dominance_compare({3, 1, 1, 1}, {2, 2, 2}) == Dominance::Incomparable);
  CHECK(dominates({4}, {1, 1, 1, 1}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK_THROWS_AS((void)dominance_compare({2}, {2, 1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(conjugate({}) == Partition{});
  CHECK(conjugate({3, 2, 1}) == Partition{3, 2, 1});
  CHECK(conjugate({4, 2}) == Partition{2, 2, 1, 1});
  CHECK(conjugate({5}) == Partition(5, 1));
  for (const auto& p : partitions_of(8)) {
    CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("3,2,1,1") == Partition{3, 2, 1, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(format_partition({3, 2, 1, 1}) == "3,2,1,1");
  CHECK_THROWS_WITH_AS((void)parse_partition("3,x,1"),
                       doctest::Contains("x"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_partition("1,2"), std::invalid_argument);
}

TEST_CASE("word parsing and helpers") {
  CHECK(parse_word("1 6 8") == Word{1, 6, 8});
  CHECK(format_word({1, 6, 8}) == "1 6 8");
  CHECK_THROWS_WITH_AS((void)parse_word("1 q 3"), doctest::Contains("q"),
                       std::invalid_argument);
  CHECK(is_standard_word({2, 1, 3}));
  CHECK_FALSE(is_standard_word({1, 1, 2}));
  CHECK_FALSE(is_standard_word({0, 1}));
  CHECK(apply_s({1, 2, 3}, 2) == Word{1, 3, 2});
  CHECK_THROWS_AS((void)apply_s({1, 2}, 2), std::invalid_argument);
}

TEST_CASE("knuth moves") {
  // 2 1 3 <-> 2 3 1 (yxz <-> yzx) but not 1 2 3
  CHECK(knuth_neighbors({2, 1, 3}) == std::vector<Word>{{2, 3, 1}});
  CHECK(knuth_neighbors({1, 3, 2}) == std::vector<Word>{{3, 1, 2}});
  CHECK(knuth_neighbors({1, 2, 3}).empty());
  CHECK(is_knuth_swap({2, 1, 3}, 2));
  CHECK_FALSE(is_knuth_swap({2, 1, 3}, 1));
  for (const Word& w : all_standard_words(5)) {
    Tableau p = row_insert(w);
    for (auto& [u, pos] : knuth_neighbors_with_pos(w)) {
      CHECK(apply_s(w, pos) == u);
      CHECK(row_insert(u) == p);
    }
  }
}

TEST_CASE("all_standard_words") {
  CHECK(all_standard_words(0) == std::vector<Word>{{}});
  auto w3 = all_standard_words(3);
  CHECK(w3.size() == 6);
  CHECK(std::is_sorted(w3.begin(), w3.end()));
  CHECK(all_standard_words(6).size() == 720);
}

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(Tableau({{1, 2}, {3}}));
  CHECK_THROWS_AS(Tableau({{2, 1}}), std::invalid_argument);       // row order
  CHECK_THROWS_AS(Tableau({{1, 2}, {1}}), std::invalid_argument);  // column
  CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), std::invalid_argument);  // shape
}

TEST_CASE("row insertion") {
  CHECK(row_insert({2, 1, 3}) == Tableau({{1, 3}, {2}}));
  CHECK(row_insert({1, 6, 8, 4, 2, 9, 5, 7, 3}) ==
        Tableau({{1, 2, 3, 7}, {4, 5, 9}, {6, 8}}));
  CHECK(row_insert({}) == Tableau());
  CHECK(row_insert_one(Tableau({{1, 3}, {2}}), 2) ==
        Tableau({{1, 2}, {2, 3}}));
}

TEST_CASE("column insertion") {
  // bumps the topmost entry >= a in the current column
  CHECK(column_insert_one(Tableau(), 5) ==
        Tableau(std::vector<std::vector<int>>{{5}}));
  CHECK(column_insert_one(Tableau({{1, 2}}), 2) == Tableau({{1, 2}, {2}}));
  CHECK(column_insert_one(Tableau({{1, 3}, {2}}), 3) ==
        Tableau({{1, 3}, {2}, {3}}));
  // column-inserting a equals P(a . rowword(T)) up to Knuth class
  for (const Word& w : all_standard_words(4)) {
    Tableau t = row_insert(w);
    for (int a = 1; a <= 5; ++a) {
      Word v = rowword(t);
      v.insert(v.begin(), a);
      CHECK(column_insert_one(t, a) == row_insert(v));
    }
  }
}

TEST_CASE("rowword round trip") {
  Tableau t({{1, 2, 3, 7}, {4, 5, 9}, {6, 8}});
  CHECK(rowword(t) == Word{6, 8, 4, 5, 9, 1, 2, 3, 7});
  for (int n = 0; n <= 6; ++n) {
    for (const Tableau& s : all_syt(n)) {
      CHECK(row_insert(rowword(s)) == s);
    }
  }
}

TEST_CASE("syt enumeration") {
  const int counts[] = {1, 1, 2, 4, 10, 26, 76, 232};
  for (int n = 0; n <= 7; ++n) {
    auto ts = all_syt(n);
    CHECK(static_cast<int>(ts.size()) == counts[n]);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    for (const Tableau& t : ts) {
      CHECK(is_syt(t));
      CHECK(t.size() == n);
    }
  }
  CHECK(is_syt(Tableau({{1, 2}, {3}})));
  CHECK_FALSE(is_syt(Tableau({{1, 2}, {2}})));
}

TEST_CASE("grid output") {
  CHECK(to_grid(Tableau({{1, 2}, {3}})) == "1 2\n3\n");
  CHECK(to_grid(Tableau()) == "");
}
