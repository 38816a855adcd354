#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepchoose {

struct SweepRow {
  int n = 0;
  int a = 0;
  int b = 0;
  int formula_sep = 0;
  std::optional<int> oracle_sep;  // empty when the budget ran out
  int formula_fsep = 0;
  std::optional<int> oracle_fsep;
  bool match = true;
};

struct SweepSummary {
  int rows = 0;
  /// Rows where both oracle values were obtained.
  int verified = 0;
  int mismatches = 0;
};

struct SweepOptions {
  std::uint64_t budget = 0;  // 0 means the default budget
  unsigned workers = 1;
};

/// One row per cycle length 3..n_max, 1 <= b <= b_max, b <= a <= a_max, sorted by (n,a,b).
std::vector<SweepRow> sweep(int n_max, int a_max, int b_max, const SweepOptions& opts = {});
SweepSummary summarize(const std::vector<SweepRow>& rows);

/// Header n,a,b,formula_sep,oracle_sep,formula_fsep,oracle_fsep,match followed by one line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace sepchoose
