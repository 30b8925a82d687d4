#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catins/catabolism.hpp"
#include "catins/cocharge.hpp"
#include "catins/frobenius.hpp"
#include "catins/tableau.hpp"

using namespace catins;

namespace {

// number of SYT of a shape, by the hook length formula (independent oracle)
long syt_count(const Partition& shape) {
  Partition conj = conjugate(shape);
  long count = 1;
  for (int i = 1; i <= weight(shape); ++i) count *= i;
  for (size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      count /= shape[r] - c + conj[c] - static_cast<int>(r) - 1;
    }
  }
  return count;
}

int garnir_degree(const Partition& lambda) {
  int d = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    d += lambda[i] * static_cast<int>(i);
  }
  return d;
}

}  // namespace

TEST_CASE("single-row table") {
  for (int n = 1; n <= 6; ++n) {
    auto table = frobenius_table({n});
    REQUIRE(table.size() == 1);
    CHECK(table.begin()->first == Partition{n});
    CHECK(table.begin()->second == std::vector<long>{1});
  }
}

TEST_CASE("column case counts every tableau") {
  for (int n = 1; n <= 6; ++n) {
    auto table = frobenius_table(Partition(n, 1));
    long grand = 0;
    for (const auto& [shape, coeffs] : table) {
      long total = 0;
      for (long c : coeffs) total += c;
      CHECK(total == syt_count(shape));
      grand += total;
    }
    // all SYT(n) qualify since everything dominates (1^n)
    long all = 0;
    for (const Partition& mu : partitions_of(n)) all += syt_count(mu);
    CHECK(grand == all);
  }
}

TEST_CASE("regular-representation dimension identity") {
  for (int n = 1; n <= 6; ++n) {
    auto table = frobenius_table(Partition(n, 1));
    long sum = 0;
    for (const auto& [shape, coeffs] : table) {
      long total = 0;
      for (long c : coeffs) total += c;
      sum += total * syt_count(shape);
    }
    long fact = 1;
    for (int i = 1; i <= n; ++i) fact *= i;
    CHECK(sum == fact);
  }
}

TEST_CASE("shape-lambda column starts at the Garnir degree with coefficient 1") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      auto table = frobenius_table(lambda);
      auto it = table.find(lambda);
      REQUIRE(it != table.end());
      int deg = garnir_degree(lambda);
      REQUIRE(static_cast<int>(it->second.size()) > deg);
      CHECK(it->second[deg] == 1);
      for (int d = 0; d < deg; ++d) {
        if (d < static_cast<int>(it->second.size())) {
          CHECK(it->second[d] == 0);
        }
      }
    }
  }
}

TEST_CASE("monotonicity in lambda") {
  // restricting to a dominance-larger lambda can only shrink coefficients
  for (int n = 1; n <= 6; ++n) {
    auto parts = partitions_of(n);
    for (const Partition& lambda : parts) {
      auto big = frobenius_table(lambda);
      for (const Partition& mu : parts) {
        if (!dominates(lambda, mu)) continue;
        auto small = frobenius_table(mu);
        for (const auto& [shape, coeffs] : big) {
          auto it = small.find(shape);
          REQUIRE(it != small.end());
          REQUIRE(it->second.size() >= coeffs.size());
          for (size_t d = 0; d < coeffs.size(); ++d) {
            CHECK(coeffs[d] <= it->second[d]);
          }
        }
      }
    }
  }
}

TEST_CASE("garnir tableau") {
  CHECK(garnir_tableau({4}) == Tableau({{1, 2, 3, 4}}));
  CHECK(garnir_tableau({1, 1, 1}) == Tableau({{1}, {2}, {3}}));
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      Tableau g = garnir_tableau(lambda);
      CHECK(g.shape() == lambda);
      CHECK(cocharge(rowword(g)) == garnir_degree(lambda));
      // no other SYT of this shape attains the degree
      for (const Tableau& t : all_syt(n)) {
        if (t.shape() == lambda && t != g) {
          CHECK(cocharge(rowword(t)) > garnir_degree(lambda));
        }
      }
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS((void)frobenius_table({1, 2}), std::invalid_argument);
}
