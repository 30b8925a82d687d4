#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "catins/cocharge.hpp"
#include "catins/tableau.hpp"
#include "catins/words.hpp"

using namespace catins;

TEST_CASE("cocharge labeling") {
  CHECK(cocharge_label({1, 6, 8, 4, 2, 9, 5, 7, 3}) ==
        Word{0, 2, 3, 1, 0, 3, 1, 2, 0});
  CHECK(cocharge_label({1, 2, 3}) == Word{0, 0, 0});
  CHECK(cocharge_label({3, 2, 1}) == Word{2, 1, 0});
  CHECK(cocharge_label({2, 1}) == Word{1, 0});
  CHECK(cocharge_label({}) == Word{});
  CHECK_THROWS_AS((void)cocharge_label({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("cocharge statistic") {
  CHECK(cocharge({1, 6, 8, 4, 2, 9, 5, 7, 3}) == 12);
  for (int n = 0; n <= 6; ++n) {
    Word id(n), rev(n);
    std::iota(id.begin(), id.end(), 1);
    std::iota(rev.rbegin(), rev.rend(), 1);
    CHECK(cocharge(id) == 0);
    CHECK(cocharge(rev) == n * (n - 1) / 2);
  }
  for (const Word& w : all_standard_words(5)) {
    int cc = cocharge(w);
    CHECK(cc >= 0);
    CHECK(cc <= 10);
    CHECK(cc == cocharge_of_labeling(cocharge_label(w)));
  }
}

TEST_CASE("valid labelings") {
  CHECK(is_valid_cocharge_labeling({0, 2, 3, 1, 0, 3, 1, 2, 0}));
  CHECK(is_valid_cocharge_labeling({}));
  CHECK(is_valid_cocharge_labeling({0}));
  CHECK(is_valid_cocharge_labeling({1, 0}));
  CHECK_FALSE(is_valid_cocharge_labeling({0, 1}));   // 1 not left of the 0
  CHECK_FALSE(is_valid_cocharge_labeling({0, 2}));   // gap: no 1
  CHECK_FALSE(is_valid_cocharge_labeling({2, 0, 1}));  // the 1 is right of the 0
  CHECK_FALSE(is_valid_cocharge_labeling({1}));      // no 0 at all
  CHECK_FALSE(is_valid_cocharge_labeling({0, -1}));
  // exactly the labelings of standard words are valid
  for (int n = 1; n <= 5; ++n) {
    int valid = 0;
    // enumerate all words over 0..n-1 of length n
    Word z(n, 0);
    while (true) {
      if (is_valid_cocharge_labeling(z)) {
        ++valid;
        CHECK(cocharge_label(standard_word_from_labeling(z)) == z);
      }
      int i = n - 1;
      while (i >= 0 && z[i] == n - 1) z[i--] = 0;
      if (i < 0) break;
      ++z[i];
    }
    CHECK(valid == static_cast<int>(all_standard_words(n).size()));
  }
}

TEST_CASE("unlabeling") {
  CHECK(standard_word_from_labeling({0, 0, 1, 1, 0}) == Word{1, 2, 4, 5, 3});
  CHECK(standard_word_from_labeling({0, 2, 3, 1, 0, 3, 1, 2, 0}) ==
        Word{1, 6, 8, 4, 2, 9, 5, 7, 3});
  for (const Word& w : all_standard_words(6)) {
    CHECK(standard_word_from_labeling(cocharge_label(w)) == w);
  }
  CHECK_THROWS_AS((void)standard_word_from_labeling({0, 1}),
                  std::invalid_argument);
}

TEST_CASE("cocharge-preserving swaps") {
  // |w_i - w_{i+1}| != 1 exactly when the swap keeps cocharge
  for (const Word& w : all_standard_words(6)) {
    for (int i = 1; i < 6; ++i) {
      bool pred = is_cocharge_preserving(w, i);
      CHECK(pred == (std::abs(w[i - 1] - w[i]) != 1));
      CHECK(pred == (cocharge(w) == cocharge(apply_s(w, i))));
    }
  }
}

TEST_CASE("corotation of standard words") {
  Rotation r = corotate_standard({2, 1, 3, 4});  // 4 carries label 1
  CHECK(r.word == Word{4, 2, 1, 3});
  CHECK_FALSE(r.zero);
  Rotation rz = corotate_standard({1, 2, 3});  // 3 carries label 0
  CHECK(rz.word == Word{3, 1, 2});
  CHECK(rz.zero);
  CHECK_THROWS_AS((void)corotate_standard({2, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)corotate_standard({}), std::invalid_argument);
  for (const Word& w : all_standard_words(6)) {
    if (w.back() == 1) continue;
    Rotation rot = corotate_standard(w);
    CHECK(cocharge(rot.word) == cocharge(w) + 1);
    CHECK(rot.zero == (cocharge_label(w).back() == 0));
  }
}

TEST_CASE("corotation of labelings") {
  Rotation r = corotate_labeled({0, 2, 3, 1, 0, 3, 1, 2});
  CHECK(r.word == Word{3, 0, 2, 3, 1, 0, 3, 1});
  CHECK_FALSE(r.zero);
  Rotation rz = corotate_labeled({1, 0});
  CHECK(rz.word == Word{1, 1});
  CHECK(rz.zero);
  // commutes with labeling on standard words
  for (const Word& w : all_standard_words(6)) {
    if (w.back() == 1) continue;
    Rotation a = corotate_standard(w);
    Rotation b = corotate_labeled(cocharge_label(w));
    CHECK(cocharge_label(a.word) == b.word);
    CHECK(a.zero == b.zero);
  }
}

TEST_CASE("labeled tableau") {
  Tableau p({{1, 2, 3, 7}, {4, 5, 9}, {6, 8}});
  CHECK(labeled_tableau(p) == Tableau({{0, 0, 0, 2}, {1, 1, 3}, {2, 3}}));
  for (const Word& w : all_standard_words(5)) {
    CHECK(labeled_tableau(row_insert(w)) == row_insert(cocharge_label(w)));
  }
}
