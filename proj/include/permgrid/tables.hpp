#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permgrid/bigint.hpp"
#include "permgrid/enumerate.hpp"

namespace permgrid {

enum class StatKind { A, I, J };
enum class TableMethod { brute, recurrence, bijective };

std::string_view to_string(StatKind kind);
std::string_view to_string(TableMethod method);
StatKind parse_stat_kind(std::string_view text);
TableMethod parse_table_method(std::string_view text);

// Largest sizes enumerated exhaustively.
struct EnumerationCaps {
  int all = 9;
  int involutions = 12;
  int ffi = 14;

  int cap_for(PermKind kind) const;
  // Throws LimitError when n is above the cap for `kind`.
  void check(PermKind kind, int n) const;
};

struct TableOptions {
  EnumerationCaps caps;
  int workers = 1;
};

// Exact table of A_{n,i,j} (1 <= i,j <= n), I_{n,k} or J_{n,k} (0 <= k <= n-1).
class StatTable {
 public:
  StatTable(StatKind kind, int n, TableMethod method);

  StatKind kind() const { return kind_; }
  int n() const { return n_; }
  TableMethod method() const { return method_; }

  // A entries; zero outside [1,n]^2.
  BigInt a(int i, int j) const;
  BigInt& a_ref(int i, int j);
  // I/J entries; zero outside [0, n-1].
  BigInt k(int k) const;
  BigInt& k_ref(int k);

  const std::vector<BigInt>& values() const { return values_; }
  BigInt total() const;
  // I/J coefficient sequence (k = 0..n-1).
  std::vector<BigInt> sequence() const;

  // Entries equal regardless of method.
  bool same_entries(const StatTable& other) const;

 private:
  StatKind kind_;
  int n_;
  TableMethod method_;
  std::vector<BigInt> values_;
};

// Requires n >= 1; J requires even n. Brute and bijective methods respect the
// enumeration caps; the recurrence method does not enumerate. The recurrence
// divides each evaluated right-hand side by n (2n for J) and throws
// InvariantError when it is not divisible.
StatTable table(StatKind kind, int n, TableMethod method, const TableOptions& options = {});

// Exact right-hand sides of the three recurrences.
//   A (n >= 2): sum of four terms in A_{n-1}
//   I (n >= 3): five terms in I_{n-1}, I_{n-2}
//   J (n = 2m >= 4): three terms in J_{n-2}
// `prev` is the size-(n-1) table (A, I) or size-(n-2) table (J); `prev2` the
// size-(n-2) table for I.
BigInt recurrence_rhs_A(int n, int i, int j, const StatTable& prev);
BigInt recurrence_rhs_I(int n, int k, const StatTable& prev, const StatTable& prev2);
BigInt recurrence_rhs_J(int n, int k, const StatTable& prev);

struct RecurrenceMismatch {
  int n = 0;
  std::vector<int> index;  // (i, j) for A, (k) for I/J
  BigInt lhs;
  BigInt rhs;
};

struct RecurrenceReport {
  StatKind kind = StatKind::A;
  int n_max = 0;
  long long entries_checked = 0;
  std::vector<RecurrenceMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// n * X_n(brute) == RHS(brute X_{n-1}, X_{n-2}) entrywise for every size from
// the first recurrence size up to n_max.
RecurrenceReport verify_recurrence(StatKind kind, int n_max, const TableOptions& options = {});

// Classical Eulerian numbers <n, d> (d descents) by their own recurrence.
std::vector<BigInt> eulerian_numbers(int n);

struct MarginalReport {
  int n = 0;
  std::vector<BigInt> row_sums;  // sum_j A_{n,i,j}, i = 1..n
  std::vector<BigInt> eulerian;  // <n, i-1>
  bool symmetric = true;
  bool ok() const { return symmetric && row_sums == eulerian; }
};

MarginalReport eulerian_marginal(int n, const TableOptions& options = {});

bool is_unimodal(const std::vector<BigInt>& seq);
// a_i^2 >= a_{i-1} a_{i+1} for every interior i.
bool is_log_concave(const std::vector<BigInt>& seq);

}  // namespace permgrid
