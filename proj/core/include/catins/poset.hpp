#pragma once

#include <string>
#include <vector>

#include "catins/tableau.hpp"

namespace catins {

// T ->cc T' induced by a corotation between inserting words. The zero flag is
// shared by every inducing corotation.
struct CocyclageEdge {
  Tableau source;
  Tableau target;
  bool zero;
  bool operator==(const CocyclageEdge&) const = default;
};

// All cocyclage edges on SYT(n), generated from every standard word with last
// letter != 1, deduplicated and sorted. Throws std::logic_error if two
// corotations inducing the same edge disagree on the zero flag (they never
// do).
std::vector<CocyclageEdge> cocyclage_edges(int n);

struct GradedReport {
  bool ok = false;
  std::string details;
};

// Checks that every generating corotation raises tableau cocharge by exactly
// 1, that ranks span [0, C(n,2)] with unique extremes, and that the poset is
// connected.
GradedReport verify_graded(int n);

enum class Overlay { None, Ctype };

// DOT digraph of the cocyclage relation; nodes carry the grid and cocharge,
// zero edges are dashed, the ctype overlay colors nodes by catabolizability.
// Byte-identical across runs.
std::string export_dot(int n, Overlay overlay);

}  // namespace catins
