#pragma once

#include <map>
#include <vector>

#include "catins/partition.hpp"
#include "catins/tableau.hpp"

namespace catins {

// Tabulates sum_{ctype(T) dominates lambda} t^{cocharge(T)} s_{sh(T)} as a
// map from shape to coefficients indexed by t-degree (trailing zeros
// trimmed). Schur symbols stay formal: the shape is just a key.
std::map<Partition, std::vector<long>> frobenius_table(const Partition& lambda);

// The unique minimal-cocharge SYT of shape lambda, at degree
// sum_i lambda_i (i-1); equals superstandard_syt(lambda).
Tableau garnir_tableau(const Partition& lambda);

}  // namespace catins
