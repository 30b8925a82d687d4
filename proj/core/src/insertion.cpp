#include "catins/insertion.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "catins/catabolism.hpp"
#include "catins/cocharge.hpp"
#include "catins/tableau.hpp"

namespace catins {

namespace {

// nu + e_{a+1} is a partition iff the (a+1)-th part can grow by one.
bool can_insert(const Partition& nu, int a) {
  if (a == 0) return true;
  int above = a - 1 < static_cast<int>(nu.size()) ? nu[a - 1] : 0;
  int here = a < static_cast<int>(nu.size()) ? nu[a] : 0;
  return above >= here + 1;
}

Partition grown(const Partition& nu, int a) {
  Partition out = nu;
  if (a == static_cast<int>(out.size())) {
    out.push_back(1);
  } else {
    ++out[a];
  }
  return out;
}

int max_steps(size_t n) {
  return static_cast<int>(n + n * (n - 1) / 2);
}

}  // namespace

Step step_f(const WordPartitionPair& p) {
  if (p.word.empty()) {
    throw std::invalid_argument("step_f: empty word");
  }
  int a = p.word.back();
  if (can_insert(p.nu, a)) {
    Word y(p.word.begin(), p.word.end() - 1);
    return {a, StepKind::Insertion, {std::move(y), grown(p.nu, a)}};
  }
  Word next;
  next.reserve(p.word.size());
  next.push_back(a + 1);
  next.insert(next.end(), p.word.begin(), p.word.end() - 1);
  return {a, StepKind::Corotation, {std::move(next), p.nu}};
}

Trace run_f(const Word& w) {
  Trace trace;
  trace.initial = cocharge_label(w);
  WordPartitionPair state{trace.initial, {}};
  int cap = max_steps(w.size());
  while (!state.word.empty()) {
    if (static_cast<int>(trace.steps.size()) >= cap) {
      throw std::logic_error("run_f: step bound n + C(n,2) exceeded");
    }
    Step s = step_f(state);
    state = s.result;
    trace.steps.push_back(std::move(s));
  }
  trace.output = state.nu;
  return trace;
}

Partition algorithm_f(const Word& w) { return run_f(w).output; }

namespace {

// Shortest Knuth-move path between two Knuth-equivalent words; returns the
// 1-based swap positions. BFS over the (small) Knuth class.
std::vector<int> knuth_path(const Word& from, const Word& to) {
  if (from == to) return {};
  std::map<Word, std::pair<Word, int>> parent;
  std::deque<Word> queue{from};
  parent[from] = {from, 0};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (auto& [next, pos] : knuth_neighbors_with_pos(cur)) {
      if (parent.contains(next)) continue;
      parent[next] = {cur, pos};
      if (next == to) {
        std::vector<int> path;
        Word walk = to;
        while (walk != from) {
          auto& [prev, p] = parent[walk];
          path.push_back(p);
          walk = prev;
        }
        return {path.rbegin(), path.rend()};
      }
      queue.push_back(next);
    }
  }
  throw std::logic_error("knuth_path: words are not Knuth equivalent");
}

}  // namespace

std::vector<ElementaryMove> expand_step(const WordPartitionPair& p) {
  if (p.word.empty()) {
    throw std::invalid_argument("expand_step: empty word");
  }
  int a = p.word.back();
  int offset = static_cast<int>(p.word.size()) - 1;  // |y|
  Tableau znu = superstandard(p.nu);
  Tableau t = column_insert_one(znu, a);

  Word tail_from = rowword(znu);
  tail_from.insert(tail_from.begin(), a);
  Word tail_to = rowword(t);

  std::vector<ElementaryMove> moves;
  for (int pos : knuth_path(tail_from, tail_to)) {
    moves.push_back({MoveKind::Knuth, offset + pos});
  }

  if (step_f(p).kind == StepKind::Corotation) {
    // locate the extra cell of T over Z_nu inside rowword(T)
    const auto& trows = t.rows();
    const auto& zrows = znu.rows();
    int extra_row = -1;
    for (size_t r = 0; r < trows.size(); ++r) {
      size_t zlen = r < zrows.size() ? zrows[r].size() : 0;
      if (trows[r].size() != zlen) {
        extra_row = static_cast<int>(r);
        break;
      }
    }
    int pos = 0;  // 1-based position of the extra cell in rowword(T)
    for (size_t r = trows.size(); r-- > static_cast<size_t>(extra_row) + 1;) {
      pos += static_cast<int>(trows[r].size());
    }
    pos += static_cast<int>(trows[extra_row].size());
    // bubble a past everything to its right (all smaller by at least 2)
    int len = static_cast<int>(tail_to.size());
    for (int i = pos; i < len; ++i) {
      moves.push_back({MoveKind::CatabolismTransformation, offset + i});
    }
    moves.push_back({MoveKind::Corotation, 0});
  }
  return moves;
}

Word apply_move(const Word& z, const ElementaryMove& m) {
  switch (m.kind) {
    case MoveKind::Knuth:
    case MoveKind::CatabolismTransformation:
      return apply_s(z, m.pos);
    case MoveKind::Corotation:
      return corotate_labeled(z).word;
  }
  throw std::logic_error("apply_move: unknown move kind");
}

bool is_catabolism_transformation(const Word& z, int i) {
  if (i < 1 || i + 1 > static_cast<int>(z.size())) {
    throw std::invalid_argument(
        "is_catabolism_transformation: position out of range");
  }
  return std::abs(z[i - 1] - z[i]) > 1;
}

bool is_ascent(const Word& z, int i) {
  if (i < 1 || i + 1 > static_cast<int>(z.size())) {
    throw std::invalid_argument("is_ascent: position out of range");
  }
  Word w = standard_word_from_labeling(z);
  return is_cocharge_preserving(w, i) && z[i - 1] > z[i];
}

std::optional<Step> step_f_lambda(const WordPartitionPair& p,
                                  const Partition& lambda) {
  if (p.word.empty()) {
    throw std::invalid_argument("step_f_lambda: empty word");
  }
  int a = p.word.back();
  int bound = a < static_cast<int>(lambda.size()) ? lambda[a] : 0;
  if (bound == 0) return std::nullopt;  // REJECT
  int here = a < static_cast<int>(p.nu.size()) ? p.nu[a] : 0;
  if (can_insert(p.nu, a) && here + 1 <= bound) {
    Word y(p.word.begin(), p.word.end() - 1);
    return Step{a, StepKind::Insertion, {std::move(y), grown(p.nu, a)}};
  }
  Word next;
  next.reserve(p.word.size());
  next.push_back(a + 1);
  next.insert(next.end(), p.word.begin(), p.word.end() - 1);
  return Step{a, StepKind::Corotation, {std::move(next), p.nu}};
}

bool run_algorithm3(const Word& w, const Partition& lambda) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("run_algorithm3: not a partition");
  }
  if (weight(lambda) != static_cast<int>(w.size())) {
    throw std::invalid_argument("run_algorithm3: weight mismatch");
  }
  WordPartitionPair state{cocharge_label(w), {}};
  int steps = 0, cap = max_steps(w.size());
  while (!state.word.empty()) {
    if (steps++ > cap) {
      throw std::logic_error("run_algorithm3: step bound exceeded");
    }
    auto s = step_f_lambda(state, lambda);
    if (!s) return false;
    state = s->result;
  }
  return true;
}

}  // namespace catins
