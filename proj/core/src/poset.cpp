#include "catins/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "catins/catabolism.hpp"
#include "catins/cocharge.hpp"

namespace catins {

std::vector<CocyclageEdge> cocyclage_edges(int n) {
  std::map<std::pair<Tableau, Tableau>, bool> seen;
  for (const Word& u : all_standard_words(n)) {
    if (u.back() == 1) continue;
    Rotation rot = corotate_standard(u);
    auto key = std::make_pair(row_insert(u), row_insert(rot.word));
    auto [it, inserted] = seen.emplace(key, rot.zero);
    if (!inserted && it->second != rot.zero) {
      throw std::logic_error(
          "cocyclage_edges: corotations inducing one edge disagree on the "
          "zero flag");
    }
  }
  std::vector<CocyclageEdge> edges;
  edges.reserve(seen.size());
  for (const auto& [key, zero] : seen) {
    edges.push_back({key.first, key.second, zero});
  }
  return edges;
}

GradedReport verify_graded(int n) {
  GradedReport report;
  std::ostringstream out;
  auto edges = cocyclage_edges(n);
  auto nodes = all_syt(n);
  bool ok = true;

  auto cc = [](const Tableau& t) { return cocharge(rowword(t)); };

  for (const auto& e : edges) {
    int delta = cc(e.target) - cc(e.source);
    if (delta != 1) {
      ok = false;
      out << "edge with cocharge delta " << delta << " from\n"
          << to_grid(e.source);
    }
  }

  int maxrank = n * (n - 1) / 2;
  int mins = 0, maxs = 0;
  for (const auto& t : nodes) {
    int c = cc(t);
    if (c < 0 || c > maxrank) {
      ok = false;
      out << "cocharge " << c << " outside [0, " << maxrank << "]\n";
    }
    if (c == 0) ++mins;
    if (c == maxrank) ++maxs;
  }
  if (mins != 1 || maxs != 1) {
    ok = false;
    out << "expected unique rank extremes, found " << mins << " minima and "
        << maxs << " maxima\n";
  }

  // connectivity of the underlying undirected graph
  if (!nodes.empty()) {
    std::map<Tableau, int> id;
    for (const auto& t : nodes) id.emplace(t, static_cast<int>(id.size()));
    std::vector<int> parent(nodes.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges) {
      parent[find(id[e.source])] = find(id[e.target]);
    }
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) {
      roots.insert(find(static_cast<int>(i)));
    }
    if (roots.size() > 1) {
      ok = false;
      out << "poset has " << roots.size() << " connected components\n";
    }
  }

  report.ok = ok;
  report.details = ok ? "graded by cocharge, rank range [0, " +
                            std::to_string(maxrank) + "]"
                      : out.str();
  return report;
}

namespace {

std::string dot_label(const Tableau& t, int cc) {
  std::ostringstream out;
  for (const auto& row : t.rows()) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << "\\n";
  }
  out << "cc=" << cc;
  return out.str();
}

const char* kPalette[] = {
    "lightblue", "lightyellow", "lightpink",  "lightgreen", "lavender",
    "peachpuff", "lightcyan",   "mistyrose",  "honeydew",   "thistle",
    "wheat",     "aliceblue",   "lemonchiffon", "palegreen", "lightsalmon",
};

}  // namespace

std::string export_dot(int n, Overlay overlay) {
  auto nodes = all_syt(n);
  auto edges = cocyclage_edges(n);

  std::map<Tableau, int> id;
  std::vector<std::pair<int, Tableau>> ordered;  // sort by (cocharge, rows)
  for (const auto& t : nodes) ordered.emplace_back(cocharge(rowword(t)), t);
  std::sort(ordered.begin(), ordered.end());
  for (const auto& [cc, t] : ordered) id.emplace(t, static_cast<int>(id.size()));

  std::map<Partition, int> color;
  if (overlay == Overlay::Ctype) {
    std::set<Partition> ctypes;
    for (const auto& t : nodes) ctypes.insert(ctype_greedy(t));
    for (const auto& c : ctypes) color.emplace(c, static_cast<int>(color.size()));
  }

  std::ostringstream out;
  out << "digraph cocyclage {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& [cc, t] : ordered) {
    out << "  n" << id[t] << " [label=\"" << dot_label(t, cc) << "\"";
    if (overlay == Overlay::Ctype) {
      int c = color[ctype_greedy(t)];
      out << ", style=filled, fillcolor="
          << kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))]
          << ", group=\"" << format_partition(ctype_greedy(t)) << "\"";
    }
    out << "];\n";
  }
  std::vector<std::tuple<int, int, bool>> lines;
  for (const auto& e : edges) {
    lines.emplace_back(id[e.source], id[e.target], e.zero);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b, zero] : lines) {
    out << "  n" << a << " -> n" << b;
    if (zero) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace catins
