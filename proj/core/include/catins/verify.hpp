#pragma once

#include <string>
#include <vector>

namespace catins::verify {

struct Outcome {
  std::string name;
  bool ok = false;
  long cases = 0;              // number of instances exercised
  std::string counterexample;  // first failure, empty when ok
};

// Exhaustive verification of the library's defining identities and invariants for all
// sizes up to nmax (each check additionally respects its own design bound).
// Deterministic; single-threaded.
std::vector<Outcome> run_all(int nmax);

}  // namespace catins::verify
