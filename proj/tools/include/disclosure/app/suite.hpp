#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disclosure::app {

struct SuiteOptions {
  /// Skip the Zeno depth-12 item and the 25-profile search.
  bool quick = false;
  /// Print the computed exact values under each item.
  bool show_numbers = false;
  /// Run only this item when nonzero.
  int only = 0;
};

struct ItemResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool skipped = false;
  std::string failure;                // first failed check
  std::vector<std::string> numbers;  // exact values computed by the item
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs the acceptance battery, printing one PASS/FAIL/SKIP line per item
/// as it completes.
std::vector<ItemResult> run_suite(const SuiteOptions& options, std::ostream& out);

/// Id of the first failed item, or 0.
int first_failure(const std::vector<ItemResult>& results);

}  // namespace disclosure::app
