#pragma once

#include <string>
#include <vector>

namespace catins {

// A partition: weakly decreasing positive parts. Empty is allowed and stands
// for the empty partition.
using Partition = std::vector<int>;

enum class Dominance { Equal, Greater, Less, Incomparable };

bool is_partition(const Partition& p);
int weight(const Partition& p);

// Dominance comparison by prefix sums. Throws std::invalid_argument if the
// weights differ (dominance is only defined within a fixed weight).
Dominance dominance_compare(const Partition& lhs, const Partition& rhs);

// lhs dominates rhs (Greater or Equal).
bool dominates(const Partition& lhs, const Partition& rhs);

// Column lengths. Involution.
Partition conjugate(const Partition& p);

// All partitions of n, in reverse lexicographic order starting from (n).
std::vector<Partition> partitions_of(int n);

// Comma-separated parts, e.g. "3,2,1,1". Throws std::invalid_argument naming
// the offending token on malformed input.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

}  // namespace catins
