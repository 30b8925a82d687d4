#pragma once

#include <optional>
#include <vector>

#include "catins/partition.hpp"
#include "catins/words.hpp"

namespace catins {

// Affine extension of a labeling to indices <= n: wtilde(i) = z_{i+kn} + k
// with k the unique integer putting i+kn in [1, n]. Throws for i > n.
int wtilde(const Word& z, long i);

// Congruence class of an index mod n, in [0, n).
int residue(long i, int n);

// The affine simple reflection: transposes d+kn and d+1+kn for k <= 0.
long affine_s(long i, int d, int n);

// A chain (j_{k'}, ..., j_0): strictly increasing indices whose wtilde values
// descend k', ..., 0 and whose residues are pairwise distinct. Stored in
// index-increasing order, so the first element carries the largest value.
using Chain = std::vector<long>;

bool is_chain(const Word& z, const Chain& j);

// Chains of length <= bound with pairwise disjoint residue sets.
struct ChainFamily {
  std::vector<Chain> chains;
  int bound = 0;
  int size() const;
};

// Exact maximum size I_k of a k-bounded chain family, by exhaustive search
// over the window (n - kn, n]: indices at or below n - kn have wtilde >= k
// and cannot occur in a chain of length <= k.
int max_family_size(const Word& z, int k);

struct MaxFamilyResult {
  int size = 0;
  ChainFamily family;
};

// As max_family_size, plus a deterministic maximizing witness.
MaxFamilyResult max_family(const Word& z, int k);

// A family whose chain lengths are exactly the parts of `lengths`, if one
// exists. Used with lengths = conjugate(ctype(w)).
std::optional<ChainFamily> family_with_lengths(const Word& z,
                                               const Partition& lengths);

// All chains of ztilde supported in the window (n - kn, n]. Exponential;
// intended for desk-scale verification only.
std::vector<Chain> all_chains_in_window(const Word& z, int k);

}  // namespace catins
