#pragma once

#include <string>
#include <vector>

namespace catins {

// A word is a finite sequence of integers. Standard words are permutations of
// 1..n; cocharge labelings are words over the nonnegative integers. Positions
// are 1-based in the public interface, matching the usual convention.
using Word = std::vector<int>;

bool is_standard_word(const Word& w);

// Whitespace-separated integers. Throws std::invalid_argument naming the
// offending token.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// Swap positions i and i+1 (1-based). Throws if i is out of range.
Word apply_s(const Word& w, int i);

// All words reachable from w by one elementary Knuth transformation
// (xzy <-> zxy with x <= y < z, or yxz <-> yzx with x < y <= z, on adjacent
// positions). Every such move is an adjacent swap; the paired form also
// reports the 1-based swap position.
std::vector<Word> knuth_neighbors(const Word& w);
std::vector<std::pair<Word, int>> knuth_neighbors_with_pos(const Word& w);

// Whether swapping positions i, i+1 of w is an elementary Knuth
// transformation.
bool is_knuth_swap(const Word& w, int i);

// All n! standard words of length n, lexicographic.
std::vector<Word> all_standard_words(int n);

}  // namespace catins
