#pragma once

#include <vector>

#include "catins/partition.hpp"
#include "catins/tableau.hpp"

namespace catins {

// Z_lambda: row i filled with i-1, lambda_i times.
Tableau superstandard(const Partition& lambda);

// Z*_lambda: the unique SYT with labeled_tableau(Z*_lambda) == Z_lambda.
Tableau superstandard_syt(const Partition& lambda);

// Slice between rows r and r+1 (1-based) and reinsert north before south:
// H_r(T) = P(word(north) word(south)).
Tableau h_slice(const Tableau& t, int r);
// Slice between columns c and c+1 and reinsert east before west.
Tableau v_slice(const Tableau& t, int c);

// Cat_m(T) = H_1(T - T_(m)): drop the first m cells of row 1, then slice
// horizontally below row 1. Requires m <= first row length.
Tableau cat(const Tableau& t, int m);
// CCat_m(T) = V_m(T - T_(m)).
Tableau ccat(const Tableau& t, int m);

// Order-isomorphic relabeling of the (distinct) entries to 1..n.
Tableau relabel_standard(const Tableau& t);

enum class CatMode { Row, Column };

// Definitional recursion: T is lambda-catabolizable iff T_(lambda_1) holds
// the lambda_1 smallest entries and the lambda_1-(column) catabolism,
// relabeled to standard content, is lambda-hat-catabolizable.
bool is_catabolizable(const Tableau& t, const Partition& lambda, CatMode mode);

// Greedy catabolism sequence: repeatedly apply Cat_m (CCat_m) with the
// largest m such that T_(m) = Z*_(m). Equals ctype(T).
Partition ctype_greedy(const Tableau& t, CatMode mode = CatMode::Row);

// All lambda |- |t| with is_catabolizable(t, lambda, Row).
std::vector<Partition> catabolizable_set(const Tableau& t);

}  // namespace catins
