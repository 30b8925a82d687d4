#pragma once

#include "catins/tableau.hpp"
#include "catins/words.hpp"

namespace catins {

// Cocharge labeling of a standard word: the 1 is labeled 0; if i is labeled
// k, then i+1 is labeled k when it sits to the right of i and k+1 when it
// sits to the left.
Word cocharge_label(const Word& w);

// Sum of the cocharge labeling of a standard word. Bounded by C(n,2).
int cocharge(const Word& w);

// Sum of labels of a valid cocharge labeling. Throws on invalid labelings.
int cocharge_of_labeling(const Word& z);

// A word with c_0 0's, c_1 1's, ... is a cocharge labeling of some standard
// word iff c_0..c_l > 0 up to some l, zero beyond, and for each i in [l] some
// i occurs to the left of some i-1.
bool is_valid_cocharge_labeling(const Word& z);

// The unique standard word with the given cocharge labeling. Within each
// label class, letters occupy positions left to right.
Word standard_word_from_labeling(const Word& z);

// Condition (iv): |w_i - w_{i+1}| != 1, equivalent to the swap at i keeping
// cocharge (and the labeling content) unchanged.
bool is_cocharge_preserving(const Word& w, int i);

struct Rotation {
  Word word;
  bool zero;  // the moved letter carried label 0
};

// wa -> aw. The moved letter must not be 1. Zero iff a's label in cl(wa) is 0.
Rotation corotate_standard(const Word& w);

// ya -> (a+1)y on labelings; zero iff a == 0.
Rotation corotate_labeled(const Word& z);

// cl(T) := P(cl(rowword(T))). Requires t to be an SYT.
Tableau labeled_tableau(const Tableau& t);

}  // namespace catins
