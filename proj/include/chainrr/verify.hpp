#pragma once

// Grid verification: runs the library's formula, construction, closure, and
// factorization checks over (n, Y) grids and collects a report with one row
// per check and context.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainrr/chain.hpp"
#include "chainrr/closure.hpp"

namespace chainrr {

enum class VerifyScope { Thm5, Thm6, Thm11, Thm12, LemmaEta, Prop2, Lemma7, All };

std::optional<VerifyScope> parse_scope(const std::string& name);
const char* to_string(VerifyScope scope);

struct YFilter {
  enum class Mode { All, Exact, Contains } mode = Mode::All;
  // For Exact: the Y set.  For Contains: required members, where value 0
  // stands for the chain maximum n.
  std::vector<int> values;

  bool admits(int n, const std::vector<int>& y) const;
};

struct VerifyRow {
  std::string check;   // names the statement verified, e.g. "thm5:relrank"
  std::string method;  // formula-vs-search, closure-equality, ...
  int n = 0;
  int m = 0;
  std::vector<int> y;
  std::int64_t formula_value = -1;  // -1 when not applicable
  std::int64_t brute_value = -1;
  std::uint64_t universe_size = 0;
  double millis = 0.0;
  std::string status;  // PASS / FAIL / SKIPPED
  std::string note;
};

struct VerificationReport {
  std::string scope;
  int n_max = 0;
  std::vector<VerifyRow> rows;

  bool all_pass() const;
  std::size_t count(const std::string& status) const;
};

VerificationReport run_verify(VerifyScope scope, int n_max, const YFilter& filter,
                              const Budget& budget = Budget::from_env());

// Fixed-column CSV: n, m, y, check, formula_value, brute_value,
// universe_size, millis, status.
std::string report_to_csv(const VerificationReport& report);

// All nonempty Y subsets of 1..n, ordered by size then lexicographically.
std::vector<std::vector<int>> y_subsets(int n);

}  // namespace chainrr
