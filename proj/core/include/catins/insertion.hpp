#pragma once

#include <optional>
#include <vector>

#include "catins/partition.hpp"
#include "catins/words.hpp"

namespace catins {

// State of the catabolism insertion algorithm: a labeled word together with
// the partition accumulated so far.
struct WordPartitionPair {
  Word word;
  Partition nu;
  bool operator==(const WordPartitionPair&) const = default;
};

enum class StepKind { Insertion, Corotation };

struct Step {
  int presented;  // the label taken from the end of the word
  StepKind kind;
  WordPartitionPair result;
};

struct Trace {
  Word initial;              // cocharge labeling the run started from
  std::vector<Step> steps;   // at most n + C(n,2) of them
  Partition output;
};

// One step: with word = ya, insert a into nu if nu + e_{a+1} is a partition,
// otherwise corotate a to the front as a+1. Throws on an empty word.
Step step_f(const WordPartitionPair& p);

// Run from (cocharge_label(w), empty) until the word empties.
Trace run_f(const Word& w);
// Convenience: just the output partition F(w).
Partition algorithm_f(const Word& w);

enum class MoveKind { Knuth, CatabolismTransformation, Corotation };

// An elementary move on the full labeled word x rowword(Z_nu). Knuth and
// catabolism moves swap positions pos, pos+1 (1-based); a corotation moves
// the last label a to the front as a+1 (pos unused, set to 0).
struct ElementaryMove {
  MoveKind kind;
  int pos;
};

// Expansion of one step into elementary moves on the word
// p.word + rowword(Z_nu): the column insertion of a into Z_nu as a sequence
// of Knuth moves; in the corotation case also the catabolism transformations
// pushing a to the end and the final non-zero corotation. Replaying the moves
// lands on result.word + rowword(Z_{result.nu}).
std::vector<ElementaryMove> expand_step(const WordPartitionPair& p);

// Replay helper: apply one elementary move to a full labeled word.
Word apply_move(const Word& z, const ElementaryMove& m);

// |z_i - z_{i+1}| > 1.
bool is_catabolism_transformation(const Word& z, int i);
// Cocharge-preserving swap with z_i > z_{i+1}. z must be a valid labeling.
bool is_ascent(const Word& z, int i);

// Lambda-bounded step: insertion additionally requires nu_{a+1}+1 <=
// lambda_{a+1}. Returns nullopt (REJECT) when a is presented with
// lambda_{a+1} == 0.
std::optional<Step> step_f_lambda(const WordPartitionPair& p,
                                  const Partition& lambda);

// True iff the word empties without a reject; equivalently, iff P(w) is
// lambda-catabolizable. Requires weight(lambda) == |w|.
bool run_algorithm3(const Word& w, const Partition& lambda);

}  // namespace catins
