// Command-line front end: every operation of the library behind one binary.
// All combinatorics live in catins::*; this file only parses and prints.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "catins/catabolism.hpp"
#include "catins/chains.hpp"
#include "catins/cocharge.hpp"
#include "catins/frobenius.hpp"
#include "catins/insertion.hpp"
#include "catins/partition.hpp"
#include "catins/poset.hpp"
#include "catins/tableau.hpp"
#include "catins/verify.hpp"
#include "catins/words.hpp"

namespace {

using nlohmann::json;
using namespace catins;

// Shared per-subcommand state, filled by CLI11.
struct Args {
  std::string word;
  std::string lambda;
  std::string dot_path;
  std::string overlay;
  int n = 0;
  int k = 1;
  bool labeled = false;
  bool trace = false;
  bool as_json = false;
  bool lengths = false;
  bool column = false;
};

// Resolve the word argument: with --labeled it is a cocharge labeling and is
// unlabeled first.
Word input_word(const Args& a) {
  Word w = parse_word(a.word);
  if (a.labeled) {
    if (!is_valid_cocharge_labeling(w)) {
      throw std::invalid_argument("not a valid cocharge labeling: " + a.word);
    }
    return standard_word_from_labeling(w);
  }
  if (!is_standard_word(w)) {
    throw std::invalid_argument(
        "not a standard word (permutation of 1..n): " + a.word);
  }
  return w;
}

std::string nu_grid_inline(const Partition& nu) {
  if (nu.empty()) return "-";
  std::string out;
  for (size_t r = 0; r < nu.size(); ++r) {
    if (r) out += " / ";
    for (int c = 0; c < nu[r]; ++c) {
      if (c) out += ' ';
      out += std::to_string(static_cast<int>(r));
    }
  }
  return out;
}

json trace_json(const Trace& trace) {
  json steps = json::array();
  int i = 1;
  for (const Step& s : trace.steps) {
    steps.push_back({
        {"step", i++},
        {"presented", s.presented},
        {"kind", s.kind == StepKind::Insertion ? "insertion" : "corotation"},
        {"word", s.result.word},
        {"nu", s.result.nu},
    });
  }
  return steps;
}

void print_trace(const Trace& trace) {
  std::cout << "step  word";
  size_t wwidth = std::max<size_t>(4, 2 * trace.initial.size());
  for (size_t i = 4; i < wwidth; ++i) std::cout << ' ';
  std::cout << "  nu\n";
  auto row = [&](int i, const Word& w, const Partition& nu) {
    std::string ws = format_word(w);
    if (ws.empty()) ws = "-";
    std::cout << i;
    for (size_t j = std::to_string(i).size(); j < 4; ++j) std::cout << ' ';
    std::cout << "  " << ws;
    for (size_t j = ws.size(); j < wwidth; ++j) std::cout << ' ';
    std::cout << "  " << nu_grid_inline(nu) << "\n";
  };
  row(0, trace.initial, {});
  int i = 1;
  for (const Step& s : trace.steps) row(i++, s.result.word, s.result.nu);
}

int run_verify(int nmax) {
  auto outcomes = verify::run_all(nmax);
  bool all_ok = true;
  long total = 0;
  for (const auto& o : outcomes) {
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << o.name << "  (cases "
              << o.cases << ")\n";
    if (!o.ok) {
      std::cout << "      counterexample: " << o.counterexample << "\n";
      all_ok = false;
    }
    total += o.cases;
  }
  std::cout << (all_ok ? "OK" : "FAILED") << ": " << outcomes.size()
            << " checks, " << total << " cases, up to n = " << nmax << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catabolism insertion toolkit"};
  app.require_subcommand(1);
  Args a;

  auto add_word = [&](CLI::App* cmd, bool with_labeled = true) {
    cmd->add_option("word", a.word, "standard word, whitespace-separated")
        ->required();
    if (with_labeled) {
      cmd->add_flag("--labeled", a.labeled,
                    "treat the input as a cocharge labeling");
    }
  };

  auto* c_label = app.add_subcommand("label", "cocharge labeling of a word");
  add_word(c_label, false);

  auto* c_unlabel =
      app.add_subcommand("unlabel", "standard word with a given labeling");
  c_unlabel->add_option("labeling", a.word, "cocharge labeling")->required();

  auto* c_cocharge = app.add_subcommand("cocharge", "cocharge statistic");
  add_word(c_cocharge);

  auto* c_insert =
      app.add_subcommand("insert", "insertion tableau P(w) as a grid");
  add_word(c_insert);

  auto* c_ctype = app.add_subcommand("ctype", "catabolizability of P(w)");
  add_word(c_ctype);
  c_ctype->add_flag("--column", a.column, "use column catabolisms");

  auto* c_f = app.add_subcommand(
      "F", "catabolism insertion of a word; equals ctype of P(w)");
  add_word(c_f);
  c_f->add_flag("--trace", a.trace, "print every intermediate (word, nu)");
  c_f->add_flag("--json", a.as_json, "machine-readable output");

  auto* c_cat3 = app.add_subcommand(
      "cat3", "lambda-bounded insertion: true iff P(w) is lambda-catabolizable");
  add_word(c_cat3);
  c_cat3->add_option("lambda", a.lambda, "partition, comma-separated")
      ->required();

  auto* c_catcheck = app.add_subcommand(
      "catcheck", "definitional lambda-catabolizability of P(w)");
  add_word(c_catcheck);
  c_catcheck->add_option("lambda", a.lambda, "partition, comma-separated")
      ->required();
  c_catcheck->add_flag("--column", a.column, "use column catabolisms");

  auto* c_catset = app.add_subcommand(
      "catset", "all lambda such that P(w) is lambda-catabolizable");
  add_word(c_catset);

  auto* c_greene = app.add_subcommand(
      "greene", "maximum k-bounded chain family of the extended labeling");
  add_word(c_greene);
  c_greene->add_option("--k", a.k, "chain length bound")->default_val(1);
  c_greene->add_flag("--lengths", a.lengths,
                     "find a family with chain lengths conjugate(F(w))");

  auto* c_poset =
      app.add_subcommand("poset", "cocyclage poset on standard tableaux");
  c_poset->add_option("n", a.n, "number of cells")->required();
  c_poset->add_option("--dot", a.dot_path, "write a DOT digraph to this file");
  c_poset->add_option("--overlay", a.overlay,
                      "node coloring for DOT output: ctype");
  c_poset->add_flag("--json", a.as_json, "edge list as JSON");

  auto* c_frob = app.add_subcommand(
      "frobenius", "graded table of shapes weighted by cocharge");
  c_frob->add_option("lambda", a.lambda, "partition, comma-separated")
      ->required();
  c_frob->add_flag("--json", a.as_json, "machine-readable output");

  auto* c_verify =
      app.add_subcommand("verify", "run the full invariant suite");
  c_verify->add_option("--n", a.n, "largest word length to sweep")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_label) {
      std::cout << format_word(cocharge_label(parse_word(a.word))) << "\n";
    } else if (*c_unlabel) {
      Word z = parse_word(a.word);
      if (!is_valid_cocharge_labeling(z)) {
        throw std::invalid_argument("not a valid cocharge labeling: " +
                                    a.word);
      }
      std::cout << format_word(standard_word_from_labeling(z)) << "\n";
    } else if (*c_cocharge) {
      std::cout << cocharge(input_word(a)) << "\n";
    } else if (*c_insert) {
      std::cout << to_grid(row_insert(input_word(a)));
    } else if (*c_ctype) {
      CatMode mode = a.column ? CatMode::Column : CatMode::Row;
      std::cout << format_partition(
                       ctype_greedy(row_insert(input_word(a)), mode))
                << "\n";
    } else if (*c_f) {
      Trace trace = run_f(input_word(a));
      if (a.as_json) {
        json out = {{"input", parse_word(a.word)},
                    {"result", trace.output},
                    {"trace", trace_json(trace)}};
        std::cout << out.dump(2) << "\n";
      } else {
        if (a.trace) print_trace(trace);
        std::cout << format_partition(trace.output) << "\n";
      }
    } else if (*c_cat3) {
      bool ok = run_algorithm3(input_word(a), parse_partition(a.lambda));
      std::cout << (ok ? "true" : "false") << "\n";
    } else if (*c_catcheck) {
      Word w = input_word(a);
      Partition lambda = parse_partition(a.lambda);
      if (weight(lambda) != static_cast<int>(w.size())) {
        throw std::invalid_argument("partition weight differs from |word|: " +
                                    a.lambda);
      }
      CatMode mode = a.column ? CatMode::Column : CatMode::Row;
      bool ok = is_catabolizable(row_insert(w), lambda, mode);
      std::cout << (ok ? "true" : "false") << "\n";
    } else if (*c_catset) {
      for (const Partition& lambda : catabolizable_set(row_insert(input_word(a)))) {
        std::cout << format_partition(lambda) << "\n";
      }
    } else if (*c_greene) {
      Word w = input_word(a);
      Word z = cocharge_label(w);
      int n = static_cast<int>(z.size());
      auto print_family = [&](const ChainFamily& fam) {
        for (const Chain& c : fam.chains) {
          std::cout << "chain:";
          for (long i : c) std::cout << ' ' << i;
          std::cout << "  (residues:";
          for (long i : c) std::cout << ' ' << residue(i, n);
          std::cout << ")\n";
        }
      };
      if (a.lengths) {
        Partition target = conjugate(algorithm_f(w));
        std::cout << "lengths " << format_partition(target) << "\n";
        auto fam = family_with_lengths(z, target);
        if (!fam) {
          std::cout << "none\n";
        } else {
          print_family(*fam);
        }
      } else {
        if (a.k < 1) throw std::invalid_argument("--k must be >= 1");
        MaxFamilyResult res = max_family(z, a.k);
        std::cout << "I_" << a.k << " = " << res.size << "\n";
        print_family(res.family);
      }
    } else if (*c_poset) {
      if (a.n < 0) throw std::invalid_argument("n must be >= 0");
      if (!a.overlay.empty() && a.overlay != "ctype") {
        throw std::invalid_argument("unknown overlay: " + a.overlay);
      }
      if (!a.dot_path.empty()) {
        Overlay ov = a.overlay == "ctype" ? Overlay::Ctype : Overlay::None;
        std::ofstream out(a.dot_path);
        if (!out) {
          throw std::invalid_argument("cannot open for writing: " +
                                      a.dot_path);
        }
        out << export_dot(a.n, ov);
      } else if (a.as_json) {
        json edges = json::array();
        for (const CocyclageEdge& e : cocyclage_edges(a.n)) {
          edges.push_back({{"source", rowword(e.source)},
                           {"target", rowword(e.target)},
                           {"zero", e.zero}});
        }
        json out = {{"input", a.n}, {"result", edges}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (const CocyclageEdge& e : cocyclage_edges(a.n)) {
          std::cout << format_word(rowword(e.source)) << "  ->  "
                    << format_word(rowword(e.target))
                    << (e.zero ? "  [zero]" : "") << "\n";
        }
      }
    } else if (*c_frob) {
      Partition lambda = parse_partition(a.lambda);
      auto table = frobenius_table(lambda);
      if (a.as_json) {
        json rows = json::array();
        for (const auto& [shape, coeffs] : table) {
          rows.push_back({{"shape", shape}, {"coefficients", coeffs}});
        }
        json out = {{"input", lambda}, {"result", rows}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& [shape, coeffs] : table) {
          std::cout << format_partition(shape) << ":";
          for (long c : coeffs) std::cout << ' ' << c;
          std::cout << "\n";
        }
      }
    } else if (*c_verify) {
      if (a.n < 0) throw std::invalid_argument("--n must be >= 0");
      return run_verify(a.n);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
