#include "sepchoose/sweep.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "sepchoose/error.hpp"
#include "sepchoose/formulas.hpp"
#include "sepchoose/solver.hpp"

namespace sepchoose {

namespace {

std::optional<int> oracle(const Graph& g, int a, int b, bool free, const SolveOptions& opts) {
  try {
    return compute_sep(g, a, b, free, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::budget_exhausted) return std::nullopt;
    throw;
  }
}

}  // namespace

std::vector<SweepRow> sweep(int n_max, int a_max, int b_max, const SweepOptions& opts) {
  if (n_max < 3 || a_max < 1 || b_max < 1) fail(ErrorCode::invalid_argument, "sweep bounds must be positive with n_max >= 3");
  std::vector<SweepRow> rows;
  for (int n = 3; n <= n_max; ++n)
    for (int a = 1; a <= a_max; ++a)
      for (int b = 1; b <= std::min(a, b_max); ++b) {
        SweepRow r;
        r.n = n;
        r.a = a;
        r.b = b;
        rows.push_back(r);
      }

  SolveOptions so;
  if (opts.budget) so.budget = opts.budget;
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
      auto& r = rows[i];
      Graph g = build_cycle(r.n);
      r.formula_sep = sep_cycle(r.n, r.a, r.b).value;
      r.formula_fsep = fsep_cycle(r.n, r.a, r.b).value;
      r.oracle_sep = oracle(g, r.a, r.b, false, so);
      r.oracle_fsep = oracle(g, r.a, r.b, true, so);
      r.match = (!r.oracle_sep || *r.oracle_sep == r.formula_sep) && (!r.oracle_fsep || *r.oracle_fsep == r.formula_fsep);
    }
  };
  unsigned workers = std::max(1u, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    ++s.rows;
    if (r.oracle_sep && r.oracle_fsep) ++s.verified;
    if (!r.match) ++s.mismatches;
  }
  return s;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("unknown"); };
  out << "n,a,b,formula_sep,oracle_sep,formula_fsep,oracle_fsep,match\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.a << ',' << r.b << ',' << r.formula_sep << ',' << cell(r.oracle_sep) << ',' << r.formula_fsep
        << ',' << cell(r.oracle_fsep) << ',' << (r.match ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace sepchoose
