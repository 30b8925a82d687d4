#include "catins/frobenius.hpp"

#include <stdexcept>

#include "catins/catabolism.hpp"
#include "catins/cocharge.hpp"

namespace catins {

std::map<Partition, std::vector<long>> frobenius_table(
    const Partition& lambda) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("frobenius_table: not a partition");
  }
  int n = weight(lambda);
  std::map<Partition, std::vector<long>> table;
  for (const Tableau& t : all_syt(n)) {
    if (!dominates(ctype_greedy(t), lambda)) continue;
    int degree = cocharge(rowword(t));
    auto& coeffs = table[t.shape()];
    if (static_cast<int>(coeffs.size()) <= degree) coeffs.resize(degree + 1);
    ++coeffs[degree];
  }
  for (auto& [shape, coeffs] : table) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  return table;
}

Tableau garnir_tableau(const Partition& lambda) {
  return superstandard_syt(lambda);
}

}  // namespace catins
