#include "catins/chains.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace catins {

int wtilde(const Word& z, long i) {
  int n = static_cast<int>(z.size());
  if (n == 0) throw std::invalid_argument("wtilde: empty labeling");
  if (i > n) throw std::invalid_argument("wtilde: index above n");
  long k = 0, j = i;
  while (j < 1) {
    j += n;
    ++k;
  }
  return z[j - 1] + static_cast<int>(k);
}

int residue(long i, int n) {
  return static_cast<int>(((i % n) + n) % n);
}

long affine_s(long i, int d, int n) {
  if (d < 1 || d >= n) throw std::invalid_argument("affine_s: d out of range");
  int r = residue(i, n);
  if (r == residue(d, n)) return i + 1;
  if (r == residue(d + 1, n)) return i - 1;
  return i;
}

bool is_chain(const Word& z, const Chain& j) {
  if (j.empty()) return false;
  int n = static_cast<int>(z.size());
  int len = static_cast<int>(j.size());
  std::set<int> residues;
  for (int t = 0; t < len; ++t) {
    if (j[t] > n) return false;
    if (t > 0 && j[t - 1] >= j[t]) return false;
    if (wtilde(z, j[t]) != len - 1 - t) return false;
    if (!residues.insert(residue(j[t], n)).second) return false;
  }
  return true;
}

int ChainFamily::size() const {
  int total = 0;
  for (const Chain& c : chains) total += static_cast<int>(c.size());
  return total;
}

namespace {

struct Candidate {
  long index;
  int value;
  int residue;
};

// Window (n - kn, n], ascending, restricted to values usable in chains of
// length <= k.
std::vector<Candidate> window_candidates(const Word& z, int k) {
  int n = static_cast<int>(z.size());
  std::vector<Candidate> out;
  for (long i = static_cast<long>(n) - static_cast<long>(k) * n + 1; i <= n;
       ++i) {
    int v = wtilde(z, i);
    if (v <= k - 1) out.push_back({i, v, residue(i, n)});
  }
  return out;
}

constexpr int kNeg = -1 << 20;

// DP over candidates in index order. open[v] counts chains whose next needed
// value is v; a chain closes when it takes a 0.
class MaxFamilySearch {
 public:
  MaxFamilySearch(const Word& z, int k)
      : n_(static_cast<int>(z.size())),
        k_(k),
        cands_(window_candidates(z, k)) {}

  int best() { return std::max(0, dp(0, 0, {})); }

  MaxFamilyResult witness() {
    MaxFamilyResult result;
    result.size = best();
    result.family.bound = k_;
    int mask = 0;
    std::array<int8_t, 16> open{};
    // open chains in creation order: indices collected so far + needed value
    std::vector<std::pair<Chain, int>> live;
    for (size_t idx = 0; idx < cands_.size(); ++idx) {
      const Candidate& c = cands_[idx];
      int remaining = dp(static_cast<int>(idx), mask, open);
      bool used = false;
      if (!(mask >> c.residue & 1)) {
        // prefer extending the oldest open chain, then starting a new one
        if (open[c.value] > 0) {
          auto next = open;
          --next[c.value];
          if (c.value > 0) ++next[c.value - 1];
          if (1 + dp(static_cast<int>(idx) + 1, mask | 1 << c.residue, next) ==
              remaining) {
            for (auto& [chain, need] : live) {
              if (need == c.value) {
                chain.push_back(c.index);
                if (c.value == 0) {
                  result.family.chains.push_back(chain);
                  need = -1;  // retired
                } else {
                  --need;
                }
                break;
              }
            }
            std::erase_if(live, [](const auto& p) { return p.second < 0; });
            open = next;
            mask |= 1 << c.residue;
            used = true;
          }
        }
        if (!used) {
          auto next = open;
          if (c.value > 0) ++next[c.value - 1];
          if (1 + dp(static_cast<int>(idx) + 1, mask | 1 << c.residue, next) ==
              remaining) {
            if (c.value == 0) {
              result.family.chains.push_back({c.index});
            } else {
              live.push_back({{c.index}, c.value - 1});
            }
            open = next;
            mask |= 1 << c.residue;
            used = true;
          }
        }
      }
      (void)used;  // otherwise skip
    }
    std::sort(result.family.chains.begin(), result.family.chains.end());
    return result;
  }

 private:
  uint64_t key(int idx, int mask, const std::array<int8_t, 16>& open) const {
    uint64_t h = static_cast<uint64_t>(idx) | static_cast<uint64_t>(mask) << 8;
    for (int v = 0; v + 1 < k_ && v < 12; ++v) {
      h |= static_cast<uint64_t>(open[v] & 0xf) << (20 + 4 * v);
    }
    return h;
  }

  int dp(int idx, int mask, std::array<int8_t, 16> open) {
    if (idx == static_cast<int>(cands_.size())) {
      for (int v = 0; v < k_; ++v) {
        if (open[v] > 0) return kNeg;
      }
      return 0;
    }
    uint64_t h = key(idx, mask, open);
    if (auto it = memo_.find(h); it != memo_.end()) return it->second;
    const Candidate& c = cands_[idx];
    int best = dp(idx + 1, mask, open);  // skip
    if (!(mask >> c.residue & 1)) {
      if (open[c.value] > 0) {
        auto next = open;
        --next[c.value];
        if (c.value > 0) ++next[c.value - 1];
        best = std::max(best, 1 + dp(idx + 1, mask | 1 << c.residue, next));
      }
      {
        auto next = open;
        if (c.value > 0) ++next[c.value - 1];
        best = std::max(best, 1 + dp(idx + 1, mask | 1 << c.residue, next));
      }
    }
    memo_[h] = best;
    return best;
  }

  int n_;
  int k_;
  std::vector<Candidate> cands_;
  std::unordered_map<uint64_t, int> memo_;
};

}  // namespace

int max_family_size(const Word& z, int k) {
  if (k < 1) throw std::invalid_argument("max_family_size: k must be >= 1");
  if (z.empty()) return 0;
  // chains have distinct residues, so length <= n; I_k stabilizes at k = n
  int keff = std::min(k, static_cast<int>(z.size()));
  return MaxFamilySearch(z, keff).best();
}

MaxFamilyResult max_family(const Word& z, int k) {
  if (k < 1) throw std::invalid_argument("max_family: k must be >= 1");
  if (z.empty()) return {};
  int keff = std::min(k, static_cast<int>(z.size()));
  MaxFamilyResult result = MaxFamilySearch(z, keff).witness();
  result.family.bound = k;
  return result;
}

namespace {

// Feasibility search for a family with prescribed chain lengths.
class LengthsSearch {
 public:
  LengthsSearch(const Word& z, const Partition& lengths)
      : n_(static_cast<int>(z.size())),
        k_(lengths.empty() ? 1 : lengths[0]),
        cands_(window_candidates(z, k_)) {
    for (int len : lengths) ++need_start_[len - 1];  // keyed by top value
  }

  std::optional<ChainFamily> find() {
    ChainFamily family;
    family.bound = k_;
    std::vector<std::pair<Chain, int>> live;
    if (search(0, 0, {}, need_start_, live, family)) {
      std::sort(family.chains.begin(), family.chains.end());
      return family;
    }
    return std::nullopt;
  }

 private:
  using Counts = std::array<int8_t, 16>;

  std::array<uint64_t, 2> key(int idx, int mask, const Counts& open,
                              const Counts& starts) const {
    std::array<uint64_t, 2> h{static_cast<uint64_t>(idx) |
                                  static_cast<uint64_t>(mask) << 8,
                              0};
    for (int v = 0; v < 16; ++v) {
      h[1] |= static_cast<uint64_t>(open[v] & 0xf) << (4 * (v % 8));
      if (v >= 8) continue;
      h[0] |= static_cast<uint64_t>(starts[v] & 0xf) << (20 + 4 * v);
    }
    return h;
  }

  bool search(int idx, int mask, Counts open, Counts starts,
              std::vector<std::pair<Chain, int>>& live, ChainFamily& out) {
    if (idx == static_cast<int>(cands_.size())) {
      for (int v = 0; v < k_; ++v) {
        if (open[v] > 0 || starts[v] > 0) return false;
      }
      return true;
    }
    auto h = key(idx, mask, open, starts);
    if (failed_.contains(h)) return false;
    const Candidate& c = cands_[idx];
    if (!(mask >> c.residue & 1)) {
      if (open[c.value] > 0) {
        auto next = open;
        --next[c.value];
        if (c.value > 0) ++next[c.value - 1];
        // extend the oldest open chain that needs this value
        for (size_t li = 0; li < live.size(); ++li) {
          if (live[li].second != c.value) continue;
          live[li].first.push_back(c.index);
          std::pair<Chain, int> closed;
          bool retired = c.value == 0;
          if (retired) {
            closed = live[li];
            out.chains.push_back(live[li].first);
            live.erase(live.begin() + li);
          } else {
            --live[li].second;
          }
          if (search(idx + 1, mask | 1 << c.residue, next, starts, live, out)) {
            return true;
          }
          if (retired) {
            out.chains.pop_back();
            closed.first.pop_back();
            closed.second = 0;
            live.insert(live.begin() + li, closed);
          } else {
            ++live[li].second;
            live[li].first.pop_back();
          }
          break;  // identical counts: trying other live chains is redundant
        }
      }
      if (c.value < 16 && starts[c.value] > 0) {
        auto nstarts = starts;
        --nstarts[c.value];
        auto next = open;
        if (c.value > 0) ++next[c.value - 1];
        bool singleton = c.value == 0;
        if (singleton) {
          out.chains.push_back({c.index});
        } else {
          live.push_back({{c.index}, c.value - 1});
        }
        if (search(idx + 1, mask | 1 << c.residue, next, nstarts, live, out)) {
          return true;
        }
        if (singleton) {
          out.chains.pop_back();
        } else {
          live.pop_back();
        }
      }
    }
    if (search(idx + 1, mask, open, starts, live, out)) return true;
    failed_.insert(h);
    return false;
  }

  int n_;
  int k_;
  std::vector<Candidate> cands_;
  Counts need_start_{};
  std::set<std::array<uint64_t, 2>> failed_;
};

}  // namespace

std::optional<ChainFamily> family_with_lengths(const Word& z,
                                               const Partition& lengths) {
  if (!is_partition(lengths)) {
    throw std::invalid_argument("family_with_lengths: lengths not a partition");
  }
  if (z.empty()) {
    if (lengths.empty()) return ChainFamily{};
    return std::nullopt;
  }
  if (lengths.empty()) return ChainFamily{};
  if (lengths[0] > static_cast<int>(z.size())) return std::nullopt;
  return LengthsSearch(z, lengths).find();
}

namespace {

void extend_chain(const Word& z, const std::vector<Candidate>& cands,
                  size_t from, Chain& cur, int needed, int mask,
                  std::vector<Chain>& out) {
  if (needed < 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < cands.size(); ++i) {
    const Candidate& c = cands[i];
    if (c.value != needed || (mask >> c.residue & 1)) continue;
    cur.push_back(c.index);
    extend_chain(z, cands, i + 1, cur, needed - 1, mask | 1 << c.residue, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Chain> all_chains_in_window(const Word& z, int k) {
  if (z.empty()) return {};
  int keff = std::min(k, static_cast<int>(z.size()));
  auto cands = window_candidates(z, keff);
  std::vector<Chain> out;
  for (size_t i = 0; i < cands.size(); ++i) {
    Chain cur{cands[i].index};
    extend_chain(z, cands, i + 1, cur, cands[i].value - 1,
                 1 << cands[i].residue, out);
  }
  return out;
}

}  // namespace catins
