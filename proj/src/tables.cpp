#include "permgrid/tables.hpp"

#include <map>
#include <string>

#include "permgrid/bijections.hpp"
#include "permgrid/error.hpp"
#include "permgrid/grid.hpp"
#include "permgrid/parallel.hpp"

namespace permgrid {

std::string_view to_string(StatKind kind) {
  switch (kind) {
    case StatKind::A: return "A";
    case StatKind::I: return "I";
    case StatKind::J: return "J";
  }
  return "?";
}

std::string_view to_string(TableMethod method) {
  switch (method) {
    case TableMethod::brute: return "brute";
    case TableMethod::recurrence: return "recurrence";
    case TableMethod::bijective: return "bijective";
  }
  return "?";
}

StatKind parse_stat_kind(std::string_view text) {
  if (text == "A" || text == "a") return StatKind::A;
  if (text == "I" || text == "i") return StatKind::I;
  if (text == "J" || text == "j") return StatKind::J;
  throw ParseError("unknown table kind '" + std::string(text) + "' (expected A, I or J)");
}

TableMethod parse_table_method(std::string_view text) {
  if (text == "brute") return TableMethod::brute;
  if (text == "recurrence") return TableMethod::recurrence;
  if (text == "bijective") return TableMethod::bijective;
  throw ParseError("unknown method '" + std::string(text) + "'");
}

int EnumerationCaps::cap_for(PermKind kind) const {
  switch (kind) {
    case PermKind::all: return all;
    case PermKind::involutions: return involutions;
    case PermKind::ffi: return ffi;
  }
  return 0;
}

void EnumerationCaps::check(PermKind kind, int n) const {
  if (n > cap_for(kind)) {
    throw LimitError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                     std::to_string(cap_for(kind)) + " for " + std::string(to_string(kind)) +
                     " permutations");
  }
}

StatTable::StatTable(StatKind kind, int n, TableMethod method)
    : kind_(kind), n_(n), method_(method) {
  if (n < 0) throw DomainError("table size must be non-negative");
  values_.assign(kind == StatKind::A ? std::size_t(n) * n : std::size_t(n), BigInt(0));
}

BigInt StatTable::a(int i, int j) const {
  if (kind_ != StatKind::A || i < 1 || j < 1 || i > n_ || j > n_) return 0;
  return values_[std::size_t(i - 1) * n_ + (j - 1)];
}

BigInt& StatTable::a_ref(int i, int j) {
  if (kind_ != StatKind::A || i < 1 || j < 1 || i > n_ || j > n_) {
    throw DomainError("A index out of range");
  }
  return values_[std::size_t(i - 1) * n_ + (j - 1)];
}

BigInt StatTable::k(int k) const {
  if (kind_ == StatKind::A || k < 0 || k >= n_) return 0;
  return values_[k];
}

BigInt& StatTable::k_ref(int k) {
  if (kind_ == StatKind::A || k < 0 || k >= n_) throw DomainError("k index out of range");
  return values_[k];
}

BigInt StatTable::total() const {
  BigInt t = 0;
  for (const auto& v : values_) t += v;
  return t;
}

std::vector<BigInt> StatTable::sequence() const {
  if (kind_ == StatKind::A) throw DomainError("A tables are two-dimensional");
  return values_;
}

bool StatTable::same_entries(const StatTable& other) const {
  return kind_ == other.kind_ && n_ == other.n_ && values_ == other.values_;
}

namespace {

PermKind enumeration_kind(StatKind kind) {
  switch (kind) {
    case StatKind::A: return PermKind::all;
    case StatKind::I: return PermKind::involutions;
    case StatKind::J: return PermKind::ffi;
  }
  return PermKind::all;
}

void check_size(StatKind kind, int n) {
  if (n < 1) throw DomainError("table size must be >= 1");
  if (kind == StatKind::J && n % 2 != 0) {
    throw DomainError("J tables exist only for even n (fixed-point-free involutions of odd size "
                      "do not exist)");
  }
}

StatTable brute_table(StatKind kind, int n, const TableOptions& options) {
  const PermKind pk = enumeration_kind(kind);
  options.caps.check(pk, n);
  const std::size_t cells = kind == StatKind::A ? std::size_t(n) * n : std::size_t(n);
  auto shard_counts = map_shards(n, options.workers, [&](int shard) {
    std::vector<long long> counts(cells, 0);
    PermutationStream stream(pk, n, shard + 1);
    while (auto pi = stream.next()) {
      const DescentProfile d = descent_profile(*pi);
      if (kind == StatKind::A) {
        ++counts[std::size_t(d.des) * n + d.ides];
      } else {
        ++counts[d.des];
      }
    }
    return counts;
  });
  StatTable t(kind, n, TableMethod::brute);
  std::vector<BigInt> merged(cells, 0);
  for (const auto& counts : shard_counts) {
    for (std::size_t c = 0; c < cells; ++c) merged[c] += counts[c];
  }
  for (std::size_t c = 0; c < cells; ++c) {
    if (kind == StatKind::A) {
      t.a_ref(int(c / n) + 1, int(c % n) + 1) = merged[c];
    } else {
      t.k_ref(int(c)) = merged[c];
    }
  }
  return t;
}

BigInt divide_exact(const BigInt& rhs, long long divisor, const std::string& where) {
  if (rhs % divisor != 0) {
    throw InvariantError("recurrence right-hand side " + rhs.str() + " at " + where +
                         " is not divisible by " + std::to_string(divisor));
  }
  return rhs / divisor;
}

StatTable base_table(StatKind kind, int n, TableMethod method) {
  StatTable t(kind, n, method);
  if (kind == StatKind::A) {
    t.a_ref(1, 1) = 1;  // A_{1,1,1}
  } else if (kind == StatKind::I) {
    if (n == 1) {
      t.k_ref(0) = 1;  // I_{1,0}
    } else {
      t.k_ref(0) = 1;  // I_{2,0}
      t.k_ref(1) = 1;  // I_{2,1}
    }
  } else {
    t.k_ref(0) = 0;  // J_{2,0}
    t.k_ref(1) = 1;  // J_{2,1}
  }
  return t;
}

StatTable recurrence_table(StatKind kind, int n) {
  switch (kind) {
    case StatKind::A: {
      StatTable prev = base_table(kind, 1, TableMethod::recurrence);
      for (int m = 2; m <= n; ++m) {
        StatTable cur(kind, m, TableMethod::recurrence);
        for (int i = 1; i <= m; ++i) {
          for (int j = 1; j <= m; ++j) {
            cur.a_ref(i, j) = divide_exact(recurrence_rhs_A(m, i, j, prev), m,
                                           "A(" + std::to_string(m) + "," + std::to_string(i) +
                                               "," + std::to_string(j) + ")");
          }
        }
        prev = std::move(cur);
      }
      return prev;
    }
    case StatKind::I: {
      if (n <= 2) return base_table(kind, n, TableMethod::recurrence);
      StatTable prev2 = base_table(kind, 1, TableMethod::recurrence);
      StatTable prev = base_table(kind, 2, TableMethod::recurrence);
      for (int m = 3; m <= n; ++m) {
        StatTable cur(kind, m, TableMethod::recurrence);
        for (int k = 0; k < m; ++k) {
          cur.k_ref(k) = divide_exact(recurrence_rhs_I(m, k, prev, prev2), m,
                                      "I(" + std::to_string(m) + "," + std::to_string(k) + ")");
        }
        prev2 = std::move(prev);
        prev = std::move(cur);
      }
      return prev;
    }
    case StatKind::J: {
      StatTable prev = base_table(kind, 2, TableMethod::recurrence);
      for (int m = 4; m <= n; m += 2) {
        StatTable cur(kind, m, TableMethod::recurrence);
        for (int k = 0; k < m; ++k) {
          cur.k_ref(k) = divide_exact(recurrence_rhs_J(m, k, prev), m,
                                      "J(" + std::to_string(m) + "," + std::to_string(k) + ")");
        }
        prev = std::move(cur);
      }
      return prev;
    }
  }
  throw DomainError("unknown kind");
}

// Objects of size m produced by applying the Psi maps to every element built
// from smaller objects. Every (pi, position) must be hit exactly once.
class PositionLedger {
 public:
  explicit PositionLedger(int m) : m_(m) {}

  void add(const PositionedPermutation& image) {
    auto& mask = hits_[image.pi];
    const unsigned long long bit = 1ULL << (image.position - 1);
    if (image.pi.size() != m_ || image.position < 1 || image.position > m_) {
      throw InvariantError("Psi produced (" + image.pi.str() + ", " +
                           std::to_string(image.position) + ") of the wrong size");
    }
    if (mask & bit) {
      throw InvariantError("Psi hit (" + image.pi.str() + ", " + std::to_string(image.position) +
                           ") twice");
    }
    mask |= bit;
  }

  // Sorted objects; throws if some object is missing a position.
  std::vector<Permutation> objects() const {
    const unsigned long long full = m_ >= 64 ? ~0ULL : (1ULL << m_) - 1;
    std::vector<Permutation> out;
    out.reserve(hits_.size());
    for (const auto& [pi, mask] : hits_) {
      if (mask != full) throw InvariantError("Psi missed a position of " + pi.str());
      out.push_back(pi);
    }
    return out;
  }

 private:
  int m_;
  std::map<Permutation, unsigned long long> hits_;
};

StatTable count_objects(StatKind kind, int n, const std::vector<Permutation>& objects) {
  // Each object stands for n pairs (pi, position); count pairs and divide.
  StatTable pairs(kind, n, TableMethod::bijective);
  for (const auto& pi : objects) {
    const DescentProfile d = descent_profile(pi);
    if (kind == StatKind::A) {
      pairs.a_ref(d.des + 1, d.ides + 1) += n;
    } else {
      pairs.k_ref(d.des) += n;
    }
  }
  StatTable t(kind, n, TableMethod::bijective);
  if (kind == StatKind::A) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) t.a_ref(i, j) = divide_exact(pairs.a(i, j), n, "bijective count");
    }
  } else {
    for (int k = 0; k < n; ++k) t.k_ref(k) = divide_exact(pairs.k(k), n, "bijective count");
  }
  return t;
}

StatTable bijective_table(StatKind kind, int n, const TableOptions& options) {
  options.caps.check(enumeration_kind(kind), n);
  switch (kind) {
    case StatKind::A: {
      std::vector<Permutation> level{Permutation::identity(1)};
      for (int m = 2; m <= n; ++m) {
        PositionLedger ledger(m);
        for (const auto& sigma : level) {
          for (int r = 1; r <= m; ++r) {
            for (int s = 1; s <= m; ++s) ledger.add(psi_A(sigma, {r, s}));
          }
        }
        level = ledger.objects();
      }
      return count_objects(kind, n, level);
    }
    case StatKind::I: {
      std::vector<Permutation> older{Permutation::identity(1)};
      std::vector<Permutation> level{Permutation::identity(2), Permutation::decreasing(2)};
      if (n == 1) return count_objects(kind, 1, older);
      for (int m = 3; m <= n; ++m) {
        PositionLedger ledger(m);
        for (const auto& sigma : level) {
          std::array<std::vector<TaggedElement>, 5> sets;
          append_B_elements(sigma, sets);
          for (int f : {0, 1}) {
            for (const auto& e : sets[f]) ledger.add(psi_I(e));
          }
        }
        for (const auto& sigma : older) {
          std::array<std::vector<TaggedElement>, 5> sets;
          append_B_elements(sigma, sets);
          for (int f : {2, 3, 4}) {
            for (const auto& e : sets[f]) ledger.add(psi_I(e));
          }
        }
        older = std::move(level);
        level = ledger.objects();
      }
      return count_objects(kind, n, level);
    }
    case StatKind::J: {
      std::vector<Permutation> level{Permutation::decreasing(2)};
      for (int m = 4; m <= n; m += 2) {
        PositionLedger ledger(m);
        for (const auto& sigma : level) {
          std::array<std::vector<TaggedElement>, 5> sets;
          append_D_elements(sigma, sets);
          for (const auto& set : sets) {
            for (const auto& e : set) ledger.add(psi_J(e));
          }
        }
        level = ledger.objects();
      }
      return count_objects(kind, n, level);
    }
  }
  throw DomainError("unknown kind");
}

}  // namespace

StatTable table(StatKind kind, int n, TableMethod method, const TableOptions& options) {
  check_size(kind, n);
  switch (method) {
    case TableMethod::brute: return brute_table(kind, n, options);
    case TableMethod::recurrence: return recurrence_table(kind, n);
    case TableMethod::bijective: return bijective_table(kind, n, options);
  }
  throw DomainError("unknown method");
}

BigInt recurrence_rhs_A(int n, int i, int j, const StatTable& prev) {
  const long long N = n, a = i, b = j;
  BigInt rhs = 0;
  rhs += BigInt(a * b + N - 1) * prev.a(i, j);
  rhs += BigInt(1 - N + b * (N + 1 - a)) * prev.a(i - 1, j);
  rhs += BigInt(1 - N + a * (N + 1 - b)) * prev.a(i, j - 1);
  rhs += BigInt(N - 1 + (N + 1 - a) * (N + 1 - b)) * prev.a(i - 1, j - 1);
  return rhs;
}

BigInt recurrence_rhs_I(int n, int k, const StatTable& prev, const StatTable& prev2) {
  const long long N = n, K = k;
  BigInt rhs = 0;
  rhs += BigInt(K + 1) * prev.k(k);
  rhs += BigInt(N - K) * prev.k(k - 1);
  rhs += BigInt((K + 1) * (K + 1) + N - 2) * prev2.k(k);
  rhs += BigInt(2 * K * (N - K - 1) - N + 3) * prev2.k(k - 1);
  rhs += BigInt((N - K) * (N - K) + N - 2) * prev2.k(k - 2);
  return rhs;
}

BigInt recurrence_rhs_J(int n, int k, const StatTable& prev) {
  const long long N = n, K = k;  // N = 2m
  BigInt rhs = 0;
  rhs += BigInt(K * (K + 1) + N - 2) * prev.k(k);
  rhs += BigInt(2 * ((K - 1) * (N - K - 1) + 1)) * prev.k(k - 1);
  rhs += BigInt((N - K) * (N - K + 1) + N - 2) * prev.k(k - 2);
  return rhs;
}

RecurrenceReport verify_recurrence(StatKind kind, int n_max, const TableOptions& options) {
  RecurrenceReport report;
  report.kind = kind;
  report.n_max = n_max;
  const int first = kind == StatKind::A ? 2 : kind == StatKind::I ? 3 : 4;
  const int step = kind == StatKind::J ? 2 : 1;
  for (int n = first; n <= n_max; n += step) {
    const StatTable cur = table(kind, n, TableMethod::brute, options);
    const StatTable prev = table(kind, n - step, TableMethod::brute, options);
    if (kind == StatKind::A) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const BigInt lhs = BigInt(n) * cur.a(i, j);
          const BigInt rhs = recurrence_rhs_A(n, i, j, prev);
          ++report.entries_checked;
          if (lhs != rhs) report.mismatches.push_back({n, {i, j}, lhs, rhs});
        }
      }
    } else if (kind == StatKind::I) {
      const StatTable prev2 = table(kind, n - 2, TableMethod::brute, options);
      for (int k = 0; k < n; ++k) {
        const BigInt lhs = BigInt(n) * cur.k(k);
        const BigInt rhs = recurrence_rhs_I(n, k, prev, prev2);
        ++report.entries_checked;
        if (lhs != rhs) report.mismatches.push_back({n, {k}, lhs, rhs});
      }
    } else {
      for (int k = 0; k < n; ++k) {
        const BigInt lhs = BigInt(n) * cur.k(k);
        const BigInt rhs = recurrence_rhs_J(n, k, prev);
        ++report.entries_checked;
        if (lhs != rhs) report.mismatches.push_back({n, {k}, lhs, rhs});
      }
    }
  }
  return report;
}

std::vector<BigInt> eulerian_numbers(int n) {
  if (n < 1) throw DomainError("Eulerian numbers need n >= 1");
  std::vector<BigInt> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(m, 0);
    for (int d = 0; d < m; ++d) {
      if (d < m - 1) next[d] += BigInt(d + 1) * row[d];
      if (d >= 1) next[d] += BigInt(m - d) * row[d - 1];
    }
    row = std::move(next);
  }
  return row;
}

MarginalReport eulerian_marginal(int n, const TableOptions& options) {
  MarginalReport report;
  report.n = n;
  const StatTable a = table(StatKind::A, n, TableMethod::brute, options);
  report.row_sums.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      report.row_sums[i - 1] += a.a(i, j);
      if (a.a(i, j) != a.a(j, i)) report.symmetric = false;
    }
  }
  report.eulerian = eulerian_numbers(n);
  return report;
}

bool is_unimodal(const std::vector<BigInt>& seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  return i >= seq.size();
}

bool is_log_concave(const std::vector<BigInt>& seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
  }
  return true;
}

}  // namespace permgrid
