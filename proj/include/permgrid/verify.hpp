#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permgrid/tables.hpp"

namespace permgrid {

enum class CheckId {
  recA,
  recI,
  recJ,
  census,
  paths,
  bijection_A,
  bijection_I,
  bijection_J,
  gf_I,
  gf_J,
  unimodal,
  marginal,
  roundtrip,
};

std::string_view to_string(CheckId id);  // "recA", "bijection-I", "gf-J", ...
CheckId parse_check_id(std::string_view text);
const std::vector<CheckId>& all_checks();

struct VerifyOptions {
  TableOptions tables;
  int gf_margin = 0;
  // Size bound for the second family a check covers when it differs from
  // n_max: fixed-point-free sizes for unimodal, involution sizes for
  // roundtrip. n_max when unset.
  std::optional<int> companion_max;
};

struct CheckReport {
  std::string name;
  int n_max = 0;
  bool passed = true;
  // Named tallies, in a fixed order per check.
  std::vector<std::pair<std::string, long long>> counts;
  // First failure found, scanning sizes upward and permutations in
  // lexicographic order.
  std::optional<std::string> counterexample;
  double elapsed_ms = 0;
};

// Runs one exhaustive check over all sizes up to n_max. Throws LimitError
// when n_max exceeds the enumeration cap the check needs and DomainError for
// an n_max below the check's smallest meaningful size.
CheckReport run_check(CheckId id, int n_max, const VerifyOptions& options = {});

// Runs the checks concurrently (up to options.tables.workers at a time) and
// returns the reports in the order given.
std::vector<CheckReport> run_checks(const std::vector<CheckId>& ids, int n_max,
                                    const VerifyOptions& options = {});

}  // namespace permgrid
