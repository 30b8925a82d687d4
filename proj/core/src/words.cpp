#include "catins/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace catins {

bool is_standard_word(const Word& w) {
  std::vector<bool> seen(w.size(), false);
  for (int a : w) {
    if (a < 1 || a > static_cast<int>(w.size()) || seen[a - 1]) return false;
    seen[a - 1] = true;
  }
  return true;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: not an integer: '" + token +
                                  "'");
    }
    if (pos != token.size()) {
      throw std::invalid_argument("parse_word: not an integer: '" + token +
                                  "'");
    }
    w.push_back(value);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

Word apply_s(const Word& w, int i) {
  if (i < 1 || i + 1 > static_cast<int>(w.size())) {
    throw std::invalid_argument("apply_s: position out of range");
  }
  Word out = w;
  std::swap(out[i - 1], out[i]);
  return out;
}

bool is_knuth_swap(const Word& w, int i) {
  if (i < 1 || i + 1 > static_cast<int>(w.size())) return false;
  int p = i - 1;  // 0-based left position of the swap
  // window (p, p+1, p+2): swap of its first two letters
  if (p + 2 < static_cast<int>(w.size())) {
    int a = w[p], b = w[p + 1], c = w[p + 2];
    if (a <= c && c < b) return true;  // x z y -> z x y
    if (b <= c && c < a) return true;  // z x y -> x z y
  }
  // window (p-1, p, p+1): swap of its last two letters
  if (p >= 1) {
    int a = w[p - 1], b = w[p], c = w[p + 1];
    if (b < a && a <= c) return true;  // y x z -> y z x
    if (c < a && a <= b) return true;  // y z x -> y x z
  }
  return false;
}

std::vector<std::pair<Word, int>> knuth_neighbors_with_pos(const Word& w) {
  std::vector<std::pair<Word, int>> out;
  for (int i = 1; i + 1 <= static_cast<int>(w.size()); ++i) {
    if (is_knuth_swap(w, i)) out.emplace_back(apply_s(w, i), i);
  }
  return out;
}

std::vector<Word> knuth_neighbors(const Word& w) {
  std::vector<Word> out;
  for (auto& [word, pos] : knuth_neighbors_with_pos(w)) {
    out.push_back(std::move(word));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> all_standard_words(int n) {
  if (n < 0) throw std::invalid_argument("all_standard_words: negative n");
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace catins
