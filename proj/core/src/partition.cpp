#include "catins/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace catins {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

int weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

Dominance dominance_compare(const Partition& lhs, const Partition& rhs) {
  if (weight(lhs) != weight(rhs)) {
    throw std::invalid_argument(
        "dominance_compare: partitions of unequal weight");
  }
  bool geq = true, leq = true;
  long a = 0, b = 0;
  size_t len = std::max(lhs.size(), rhs.size());
  for (size_t i = 0; i < len; ++i) {
    a += i < lhs.size() ? lhs[i] : 0;
    b += i < rhs.size() ? rhs[i] : 0;
    if (a < b) geq = false;
    if (a > b) leq = false;
  }
  if (geq && leq) return Dominance::Equal;
  if (geq) return Dominance::Greater;
  if (leq) return Dominance::Less;
  return Dominance::Incomparable;
}

bool dominates(const Partition& lhs, const Partition& rhs) {
  Dominance d = dominance_compare(lhs, rhs);
  return d == Dominance::Greater || d == Dominance::Equal;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  out.reserve(p[0]);
  for (int c = 1; c <= p[0]; ++c) {
    int height = 0;
    for (int part : p) {
      if (part >= c) ++height;
    }
    out.push_back(height);
  }
  return out;
}

namespace {

void partitions_rec(int n, int maxpart, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(n, maxpart); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // allow surrounding whitespace in tokens
    size_t b = token.find_first_not_of(" \t");
    size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw std::invalid_argument("parse_partition: empty token");
    }
    token = token.substr(b, e - b + 1);
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_partition: not an integer: '" +
                                  token + "'");
    }
    if (pos != token.size()) {
      throw std::invalid_argument("parse_partition: not an integer: '" +
                                  token + "'");
    }
    p.push_back(value);
  }
  if (!is_partition(p)) {
    throw std::invalid_argument("parse_partition: parts must be weakly "
                                "decreasing positive integers: '" +
                                text + "'");
  }
  return p;
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i];
  }
  return out.str();
}

}  // namespace catins
