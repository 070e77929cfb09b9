#pragma once

// The golden reproduction suite behind `turaev verify-paper`.

#include <cstdint>
#include <string>
#include <vector>

namespace turaev {

struct SuiteOptions {
  std::int64_t scan_bound = 250;
  int jobs = 1;
  int lemma_n_max = 4;
  int diagram_n_max = 4;
  int sweep_n_max = 20;
  std::int64_t sweep_p_max = 12;
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::int64_t cases = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> failures;  // first few mismatches
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool all_passed() const;
};

/// Check names: alexander-example, hfk-table, width-example, closed-forms,
/// width-formula-sweep, lemmas, state-counts, bounds, conjecture-scan.
SuiteReport run_golden_suite(const SuiteOptions& options);

/// Closed forms for the all-B state count and Turaev genus of the lemma
/// diagram D_{p, pn+r}; p in {4, 5, 6}.
std::int64_t expected_all_b(int p, int n, int r);
std::int64_t expected_diagram_genus(int p, int n, int r);
std::int64_t expected_crossings(int p, int n, int r);

}  // namespace turaev
