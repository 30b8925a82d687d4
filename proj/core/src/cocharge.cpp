#include "catins/cocharge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace catins {

Word cocharge_label(const Word& w) {
  if (!is_standard_word(w)) {
    throw std::invalid_argument("cocharge_label: not a standard word");
  }
  int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 1, 0);  // pos[letter] = 0-based position
  for (int i = 0; i < n; ++i) pos[w[i]] = i;
  Word z(n, 0);
  int label = 0;
  for (int letter = 2; letter <= n; ++letter) {
    if (pos[letter] < pos[letter - 1]) ++label;
    z[pos[letter]] = label;
  }
  return z;
}

int cocharge(const Word& w) {
  Word z = cocharge_label(w);
  return std::accumulate(z.begin(), z.end(), 0);
}

int cocharge_of_labeling(const Word& z) {
  if (!is_valid_cocharge_labeling(z)) {
    throw std::invalid_argument("cocharge_of_labeling: invalid labeling");
  }
  return std::accumulate(z.begin(), z.end(), 0);
}

bool is_valid_cocharge_labeling(const Word& z) {
  if (z.empty()) return true;
  int maxlabel = 0;
  for (int a : z) {
    if (a < 0) return false;
    maxlabel = std::max(maxlabel, a);
  }
  int n = static_cast<int>(z.size());
  std::vector<int> first(maxlabel + 1, n), last(maxlabel + 1, -1);
  for (int i = 0; i < n; ++i) {
    first[z[i]] = std::min(first[z[i]], i);
    last[z[i]] = std::max(last[z[i]], i);
  }
  for (int k = 0; k <= maxlabel; ++k) {
    if (last[k] < 0) return false;  // missing label below the max
  }
  // some k must occur to the left of some k-1
  for (int k = 1; k <= maxlabel; ++k) {
    if (first[k] > last[k - 1]) return false;
  }
  return true;
}

Word standard_word_from_labeling(const Word& z) {
  if (!is_valid_cocharge_labeling(z)) {
    throw std::invalid_argument(
        "standard_word_from_labeling: invalid labeling");
  }
  // Within a label class the letters occupy positions left to right, and the
  // classes take consecutive letter ranges from label 0 upward.
  int n = static_cast<int>(z.size());
  int maxlabel = z.empty() ? -1 : *std::max_element(z.begin(), z.end());
  Word w(n, 0);
  int next = 1;
  for (int k = 0; k <= maxlabel; ++k) {
    for (int i = 0; i < n; ++i) {
      if (z[i] == k) w[i] = next++;
    }
  }
  return w;
}

bool is_cocharge_preserving(const Word& w, int i) {
  if (i < 1 || i + 1 > static_cast<int>(w.size())) {
    throw std::invalid_argument("is_cocharge_preserving: position out of range");
  }
  return std::abs(w[i - 1] - w[i]) != 1;
}

Rotation corotate_standard(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("corotate_standard: empty word");
  }
  if (!is_standard_word(w)) {
    throw std::invalid_argument("corotate_standard: not a standard word");
  }
  int a = w.back();
  if (a == 1) {
    throw std::invalid_argument("corotate_standard: cannot move the letter 1");
  }
  bool zero = cocharge_label(w).back() == 0;
  Word out;
  out.reserve(w.size());
  out.push_back(a);
  out.insert(out.end(), w.begin(), w.end() - 1);
  return {std::move(out), zero};
}

Rotation corotate_labeled(const Word& z) {
  if (z.empty()) {
    throw std::invalid_argument("corotate_labeled: empty word");
  }
  int a = z.back();
  Word out;
  out.reserve(z.size());
  out.push_back(a + 1);
  out.insert(out.end(), z.begin(), z.end() - 1);
  return {std::move(out), a == 0};
}

Tableau labeled_tableau(const Tableau& t) {
  if (!is_syt(t)) {
    throw std::invalid_argument("labeled_tableau: not an SYT");
  }
  return row_insert(cocharge_label(rowword(t)));
}

}  // namespace catins
