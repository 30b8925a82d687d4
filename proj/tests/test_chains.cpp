#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "catins/catabolism.hpp"
#include "catins/chains.hpp"
#include "catins/cocharge.hpp"
#include "catins/insertion.hpp"
#include "catins/tableau.hpp"

using namespace catins;

namespace {

Word identity_word(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

const Word kPaperLabels = {0, 2, 3, 1, 0, 3, 1, 2, 0};

}  // namespace

TEST_CASE("extended labeling") {
  CHECK(wtilde(kPaperLabels, 9) == 0);   // k = 0
  CHECK(wtilde(kPaperLabels, 1) == 0);
  CHECK(wtilde(kPaperLabels, 0) == 1);   // z_9 + 1
  CHECK(wtilde(kPaperLabels, -8) == 1);  // z_1 + 1
  CHECK(wtilde(kPaperLabels, -9) == 2);
  CHECK_THROWS_AS((void)wtilde(kPaperLabels, 10), std::invalid_argument);
  CHECK_THROWS_AS((void)wtilde({}, 0), std::invalid_argument);
  // periodicity across a window, for labelings of all small words
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_standard_words(n)) {
      Word z = cocharge_label(w);
      for (long i = n; i > -3L * n; --i) {
        CHECK(wtilde(z, i - n) == wtilde(z, i) + 1);
      }
    }
  }
}

TEST_CASE("residues and affine reflections") {
  CHECK(residue(9, 9) == 0);
  CHECK(residue(0, 9) == 0);
  CHECK(residue(-8, 9) == 1);
  CHECK(residue(2, 9) == 2);
  CHECK(affine_s(3, 3, 9) == 4);
  CHECK(affine_s(4, 3, 9) == 3);
  CHECK(affine_s(3 - 9, 3, 9) == 4 - 9);
  CHECK(affine_s(5, 3, 9) == 5);
  CHECK_THROWS_AS((void)affine_s(1, 0, 9), std::invalid_argument);
  CHECK_THROWS_AS((void)affine_s(1, 9, 9), std::invalid_argument);
}

TEST_CASE("chain predicate") {
  // singleton at value 0
  CHECK(is_chain(kPaperLabels, {1}));   // z_1 = 0
  CHECK(is_chain(kPaperLabels, {9}));
  CHECK_FALSE(is_chain(kPaperLabels, {2}));  // value 2, not 0
  CHECK_FALSE(is_chain(kPaperLabels, {}));
  // values must descend to 0 with distinct residues and increasing indices
  CHECK(is_chain(kPaperLabels, {4, 5}));        // values 1, 0
  CHECK_FALSE(is_chain(kPaperLabels, {5, 4}));  // not increasing
  CHECK_FALSE(is_chain(kPaperLabels, {4 - 9, 4, 5}));  // residue clash
  // identity labeling: shifted index carries value 1
  Word zid = cocharge_label(identity_word(5));
  CHECK(is_chain(zid, {1 - 5, 2}));
  CHECK_FALSE(is_chain(zid, {2 - 5, 2}));  // same residue
}

TEST_CASE("maximum family sizes") {
  // identity: ctype (n), so I_k = n for every k
  for (int n = 1; n <= 6; ++n) {
    Word z = cocharge_label(identity_word(n));
    for (int k = 1; k <= n + 2; ++k) {
      CHECK(max_family_size(z, k) == n);
    }
  }
  // prefix sums of ctype (3,2,1,1,1,1)
  CHECK(max_family_size(kPaperLabels, 1) == 3);
  CHECK(max_family_size(kPaperLabels, 2) == 5);
  CHECK(max_family_size(kPaperLabels, 3) == 6);
  CHECK_THROWS_AS((void)max_family_size(kPaperLabels, 0),
                  std::invalid_argument);
  // superstandard reading words: I_k is the k-th prefix sum of lambda
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      Word z = rowword(superstandard(lambda));
      for (int k = 1; k <= n; ++k) {
        int want = 0;
        for (int i = 0; i < std::min<int>(k, lambda.size()); ++i) {
          want += lambda[i];
        }
        CHECK(max_family_size(z, k) == want);
      }
    }
  }
}

TEST_CASE("witness families are valid and maximal") {
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_standard_words(n)) {
      Word z = cocharge_label(w);
      for (int k = 1; k <= n; ++k) {
        MaxFamilyResult res = max_family(z, k);
        CHECK(res.size == max_family_size(z, k));
        CHECK(res.family.size() == res.size);
        std::set<int> used;
        for (const Chain& c : res.family.chains) {
          CHECK(is_chain(z, c));
          CHECK(static_cast<int>(c.size()) <= k);
          for (long i : c) {
            CHECK(used.insert(residue(i, n)).second);  // disjoint residues
          }
        }
      }
    }
  }
}

TEST_CASE("family sizes match ctype prefix sums") {
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_standard_words(n)) {
      Word z = cocharge_label(w);
      Partition f = algorithm_f(w);
      int prev = 0;
      for (int k = 1; k <= n; ++k) {
        int want = 0;
        for (int i = 0; i < std::min<int>(k, f.size()); ++i) want += f[i];
        int got = max_family_size(z, k);
        CHECK(got == want);
        CHECK(got >= prev);  // monotone in k
        prev = got;
      }
      CHECK(prev == n);
    }
  }
}

TEST_CASE("window completeness") {
  // every chain of length <= k found under a larger bound already lives in
  // the k-window (n - kn, n]
  for (int n = 1; n <= 4; ++n) {
    for (const Word& w : all_standard_words(n)) {
      Word z = cocharge_label(w);
      for (int k = 1; k < n; ++k) {
        for (const Chain& c : all_chains_in_window(z, k + 1)) {
          if (static_cast<int>(c.size()) > k) continue;
          for (long i : c) {
            CHECK(i > static_cast<long>(n) - static_cast<long>(k) * n);
            CHECK(i <= n);
          }
        }
      }
    }
  }
}

TEST_CASE("families with prescribed lengths") {
  // identity: n singletons
  auto fam = family_with_lengths(cocharge_label(identity_word(4)),
                                 Partition(4, 1));
  REQUIRE(fam.has_value());
  CHECK(fam->chains.size() == 4);
  // superstandard reading words: column lengths of lambda
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      Word z = rowword(superstandard(lambda));
      auto f = family_with_lengths(z, conjugate(lambda));
      REQUIRE_MESSAGE(f.has_value(), format_partition(lambda));
      Partition got;
      for (const Chain& c : f->chains) {
        CHECK(is_chain(z, c));
        got.push_back(static_cast<int>(c.size()));
      }
      std::sort(got.rbegin(), got.rend());
      CHECK(got == conjugate(lambda));
    }
  }
  // infeasible request: the labeling 1 0 has only one singleton at value 0
  // inside the 1-bounded window
  CHECK_FALSE(
      family_with_lengths(cocharge_label({2, 1}), {1, 1}).has_value());
  CHECK_THROWS_AS((void)family_with_lengths(kPaperLabels, {1, 2}),
                  std::invalid_argument);
}

TEST_CASE("conjugate ctype lengths always admit a witness") {
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_standard_words(n)) {
      Word z = cocharge_label(w);
      Partition target = conjugate(algorithm_f(w));
      auto fam = family_with_lengths(z, target);
      REQUIRE_MESSAGE(fam.has_value(), format_word(w));
      std::set<int> used;
      Partition got;
      for (const Chain& c : fam->chains) {
        CHECK(is_chain(z, c));
        got.push_back(static_cast<int>(c.size()));
        for (long i : c) CHECK(used.insert(residue(i, n)).second);
      }
      std::sort(got.rbegin(), got.rend());
      CHECK(got == target);
    }
  }
}
