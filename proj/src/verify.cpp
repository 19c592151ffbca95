#include "permgrid/verify.hpp"

#include <array>
#include <chrono>
#include <map>
#include <sstream>

#include "permgrid/bijections.hpp"
#include "permgrid/error.hpp"
#include "permgrid/parallel.hpp"
#include "permgrid/series.hpp"

namespace permgrid {

namespace {

constexpr std::array<std::pair<CheckId, std::string_view>, 13> kCheckNames{{
    {CheckId::recA, "recA"},
    {CheckId::recI, "recI"},
    {CheckId::recJ, "recJ"},
    {CheckId::census, "census"},
    {CheckId::paths, "paths"},
    {CheckId::bijection_A, "bijection-A"},
    {CheckId::bijection_I, "bijection-I"},
    {CheckId::bijection_J, "bijection-J"},
    {CheckId::gf_I, "gf-I"},
    {CheckId::gf_J, "gf-J"},
    {CheckId::unimodal, "unimodal"},
    {CheckId::marginal, "marginal"},
    {CheckId::roundtrip, "roundtrip"},
}};

// Partial result of one shard. Merging in shard order keeps the earliest
// counterexample, so the outcome does not depend on the worker count.
struct Tally {
  std::vector<std::pair<std::string, long long>> counts;
  std::map<std::vector<long long>, long long> buckets;  // unreported tallies
  std::optional<std::string> counterexample;

  void add(const std::string& key, long long by = 1) {
    for (auto& [name, value] : counts) {
      if (name == key) {
        value += by;
        return;
      }
    }
    counts.emplace_back(key, by);
  }
  void fail(std::string what) {
    if (!counterexample) counterexample = std::move(what);
  }
  void merge(const Tally& other) {
    for (const auto& [name, value] : other.counts) add(name, value);
    for (const auto& [key, value] : other.buckets) buckets[key] += value;
    if (!counterexample) counterexample = other.counterexample;
  }
};

std::string pt_str(GridPoint pt) {
  return "(" + std::to_string(pt.row) + "," + std::to_string(pt.col) + ")";
}

std::string element_str(const TaggedElement& e) {
  std::string s = "(" + e.sigma.str() + ", " + pt_str(e.point);
  if (e.tag) s += "_" + std::to_string(*e.tag);
  return s + ") " + e.label.str();
}

// Applies fn(pi, tally) to every permutation of `kind` for each listed size.
// One shard per (size, first value) pair, merged in that order.
template <class Fn>
Tally over_permutations(PermKind kind, const std::vector<int>& sizes, int workers, Fn fn) {
  std::vector<std::pair<int, int>> shards;
  for (int n : sizes) {
    if (n == 0) {
      shards.emplace_back(0, 0);
      continue;
    }
    for (int first = 1; first <= n; ++first) shards.emplace_back(n, first);
  }
  auto parts = map_shards(static_cast<int>(shards.size()), workers, [&](int s) {
    Tally t;
    const auto [n, first] = shards[s];
    if (n == 0) {
      fn(Permutation{}, t);
      return t;
    }
    PermutationStream stream(kind, n, first);
    while (auto pi = stream.next()) fn(*pi, t);
    return t;
  });
  Tally total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

std::vector<int> size_range(int lo, int hi, int step = 1) {
  std::vector<int> out;
  for (int n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

void require_n_max(int n_max, int minimum, std::string_view check) {
  if (n_max < minimum) {
    throw DomainError(std::string(check) + " needs --n-max >= " + std::to_string(minimum));
  }
}

// ---------------------------------------------------------------------------

Tally check_recurrence(StatKind kind, int n_max, const VerifyOptions& options) {
  const int first = kind == StatKind::A ? 2 : kind == StatKind::I ? 3 : 4;
  require_n_max(n_max, first, "recurrence check");
  Tally t;
  const RecurrenceReport report = verify_recurrence(kind, n_max, options.tables);
  t.add("entries", report.entries_checked);
  if (!report.ok()) {
    const auto& m = report.mismatches.front();
    std::ostringstream os;
    os << "n=" << m.n << " index=(";
    for (std::size_t i = 0; i < m.index.size(); ++i) os << (i ? "," : "") << m.index[i];
    os << "): n*X = " << m.lhs << " but the right side is " << m.rhs;
    t.fail(os.str());
  }
  const int step = kind == StatKind::J ? 2 : 1;
  for (int n = kind == StatKind::J ? 2 : 1; n <= n_max; n += step) {
    const StatTable brute = table(kind, n, TableMethod::brute, options.tables);
    const StatTable rec = table(kind, n, TableMethod::recurrence, options.tables);
    t.add("tables");
    if (!brute.same_entries(rec)) {
      t.fail("recurrence-method table differs from brute force at n=" + std::to_string(n));
    }
  }
  return t;
}

Tally check_census(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 1, "census");
  options.tables.caps.check(PermKind::all, n_max);
  return over_permutations(PermKind::all, size_range(1, n_max), options.tables.workers,
                           [](const Permutation& pi, Tally& t) {
                             const int n = pi.size();
                             const DTypeCensus seen = dtype_census(pi);
                             const DTypeCensus want = census_formula(n, descent_profile(pi));
                             t.add("permutations");
                             if (seen != want) t.fail(pi.str() + ": census differs from the formula");
                             if (seen.total() != (n + 1) * (n + 1)) {
                               t.fail(pi.str() + ": census does not sum to (n+1)^2");
                             }
                           });
}

Tally check_paths(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 1, "paths");
  options.tables.caps.check(PermKind::all, n_max);
  return over_permutations(
      PermKind::all, size_range(1, n_max), options.tables.workers,
      [](const Permutation& pi, Tally& t) {
        const int n = pi.size();
        t.add("permutations");
        PathSet paths;
        try {
          paths = trace_paths(pi);
        } catch (const InvariantError& e) {
          t.fail(pi.str() + ": " + e.what());
          return;
        }
        const DescentProfile prof = descent_profile(pi);
        const PathCounts want{prof.des + 1, n - prof.des, prof.ides + 1, n - prof.ides};
        if (paths.counts() != want) t.fail(pi.str() + ": path counts differ from the statistics");
        if (!paths.partitions_grid()) t.fail(pi.str() + ": paths do not partition the grid");
        for (int r = 1; r <= n + 1; ++r) {
          for (int c = 1; c <= n + 1; ++c) {
            t.add("points");
            if (dtype_via_paths(paths, {r, c}) != dtype(pi, {r, c})) {
              t.fail(pi.str() + ": d-type read from paths differs at " + pt_str({r, c}));
            }
          }
        }
      });
}

Tally check_bijection_A(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 2, "bijection-A");
  options.tables.caps.check(PermKind::all, n_max);
  const int workers = options.tables.workers;
  Tally t;
  for (int n = 2; n <= n_max; ++n) {
    // Theta then Psi on every (pi, k); bucket images by the descent profile of
    // pi and the d-type of the image point.
    t.merge(over_permutations(PermKind::all, {n}, workers, [n](const Permutation& pi, Tally& part) {
      const DescentProfile prof = descent_profile(pi);
      for (int k = 1; k <= n; ++k) {
        part.add("positions");
        const PointedPermutation image = theta_A(pi, k);
        if (psi_A(image.sigma, image.point) != PositionedPermutation{pi, k}) {
          part.fail("psi_A(theta_A(" + pi.str() + ", " + std::to_string(k) + ")) is not the identity");
        }
        const DType d = dtype(image.sigma, image.point);
        ++part.buckets[{n, prof.des + 1, prof.ides + 1, d.p, d.q}];
      }
    }));
    t.merge(over_permutations(PermKind::all, {n - 1}, workers, [n](const Permutation& sigma, Tally& part) {
      for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
          part.add("elements");
          const PositionedPermutation image = psi_A(sigma, {r, c});
          if (theta_A(image.pi, image.position) != PointedPermutation{sigma, {r, c}}) {
            part.fail("theta_A(psi_A(" + sigma.str() + ", " + pt_str({r, c}) + ")) is not the identity");
          }
        }
      }
    }));
    // Each of the four recurrence terms counts exactly the images of its type.
    const StatTable prev = table(StatKind::A, n - 1, TableMethod::brute, options.tables);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int idx = 0; idx < 4; ++idx) {
          const DType d = DType::from_index(idx);
          const int si = i - d.p, sj = j - d.q;
          BigInt want = 0;
          if (si >= 1 && sj >= 1 && si <= n - 1 && sj <= n - 1) {
            want = census_formula(n - 1, {si - 1, sj - 1})[d] * prev.a(si, sj);
          }
          const auto it = t.buckets.find({n, i, j, d.p, d.q});
          const long long seen = it == t.buckets.end() ? 0 : it->second;
          t.add("terms");
          if (BigInt(seen) != want) {
            t.fail("n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                   ") d-type " + d.str() + ": " + std::to_string(seen) + " images, term is " + want.str());
          }
        }
      }
    }
  }
  t.buckets.clear();
  return t;
}

// The five terms of the involution recurrence at (n, k).
std::array<BigInt, 5> involution_terms(int n, int k, const StatTable& prev, const StatTable& prev2) {
  const long long nn = n, kk = k;
  return {BigInt(kk + 1) * prev.k(k), BigInt(nn - kk) * prev.k(k - 1),
          BigInt((kk + 1) * (kk + 1) + nn - 2) * prev2.k(k),
          BigInt(2 * kk * (nn - kk - 1) - nn + 3) * prev2.k(k - 1),
          BigInt((nn - kk) * (nn - kk) + nn - 2) * prev2.k(k - 2)};
}

// The three terms of the fixed-point-free recurrence at size n, k descents.
std::array<BigInt, 3> ffi_terms(int n, int k, const StatTable& prev) {
  const long long nn = n, kk = k;
  return {BigInt(kk * (kk + 1) + nn - 2) * prev.k(k),
          BigInt(2 * ((kk - 1) * (nn - kk - 1) + 1)) * prev.k(k - 1),
          BigInt((nn - kk) * (nn - kk + 1) + nn - 2) * prev.k(k - 2)};
}

// Shared driver for the involution and fixed-point-free bijection checks.
// Forward: Theta then Psi on every (pi, i) of size n. Backward: Psi then Theta
// on every element of every set drawn from the smaller sizes. Both image
// tallies must equal the recurrence terms; bucket key (0|1, n, k, group).
template <class Theta, class Psi, class Append, class Group>
void check_theta_psi(PermKind kind, int n, const std::vector<int>& source_sizes, int workers,
                     Theta theta, Psi psi, Append append, Group group, Tally& t) {
  t.merge(over_permutations(kind, {n}, workers, [&](const Permutation& pi, Tally& part) {
    const int k = descents(pi);
    for (int i = 1; i <= n; ++i) {
      part.add("positions");
      const std::string at = "(" + pi.str() + ", " + std::to_string(i) + ")";
      try {
        const ThetaTrace trace = theta(pi, i);
        if (psi(trace.output) != PositionedPermutation{pi, i}) {
          part.fail("Psi(Theta" + at + ") is not the identity");
        }
        ++part.buckets[{0, n, k, group(trace.output)}];
      } catch (const std::logic_error& e) {  // precondition, domain and invariant errors
        part.fail("Theta" + at + ": " + e.what());
      }
    }
  }));
  t.merge(over_permutations(kind, source_sizes, workers, [&](const Permutation& sigma, Tally& part) {
    std::array<std::vector<TaggedElement>, 5> sets;
    append(sigma, sets);
    for (int f = 1; f <= 5; ++f) {
      for (const TaggedElement& e : sets[f - 1]) {
        // Families 1-2 of the involution case come from size n-1, the rest
        // from size n-2.
        if (e.sigma.size() != n - 1 && e.sigma.size() != n - 2) continue;
        if (kind == PermKind::involutions && (f <= 2) != (e.sigma.size() == n - 1)) continue;
        part.add("elements");
        try {
          const PositionedPermutation image = psi(e);
          const ThetaTrace back = theta(image.pi, image.position);
          if (back.output != e) part.fail("Theta(Psi" + element_str(e) + ") is not the identity");
          ++part.buckets[{1, n, descents(image.pi), group(e)}];
        } catch (const std::logic_error& ex) {
          part.fail("Psi" + element_str(e) + ": " + ex.what());
        }
      }
    }
  }));
}

long long bucket(const Tally& t, std::vector<long long> key) {
  const auto it = t.buckets.find(key);
  return it == t.buckets.end() ? 0 : it->second;
}

Tally check_bijection_I(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 3, "bijection-I");
  options.tables.caps.check(PermKind::involutions, n_max);
  Tally t;
  for (int n = 3; n <= n_max; ++n) {
    check_theta_psi(
        PermKind::involutions, n, {n - 2, n - 1}, options.tables.workers, theta_I, psi_I,
        append_B_elements, [](const TaggedElement& e) { return static_cast<long long>(e.family); }, t);
    const StatTable prev = table(StatKind::I, n - 1, TableMethod::brute, options.tables);
    const StatTable prev2 = table(StatKind::I, n - 2, TableMethod::brute, options.tables);
    for (int k = 0; k < n; ++k) {
      const auto terms = involution_terms(n, k, prev, prev2);
      for (int f = 1; f <= 5; ++f) {
        t.add("terms");
        for (int dir : {0, 1}) {
          const long long seen = bucket(t, {dir, n, k, f});
          if (BigInt(seen) != terms[f - 1]) {
            t.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " family " + std::to_string(f) +
                   ": " + std::to_string(seen) + (dir ? " set elements" : " images") + ", term is " +
                   terms[f - 1].str());
          }
        }
      }
    }
  }
  t.buckets.clear();
  return t;
}

Tally check_bijection_J(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 4, "bijection-J");
  options.tables.caps.check(PermKind::ffi, n_max);
  Tally t;
  // D2/D3 and D4/D5 share a recurrence term.
  auto group = [](const TaggedElement& e) -> long long { return e.family == 1 ? 0 : e.family <= 3 ? 1 : 2; };
  for (int n = 4; n <= n_max; n += 2) {
    check_theta_psi(PermKind::ffi, n, {n - 2}, options.tables.workers, theta_J, psi_J, append_D_elements,
                    group, t);
    const StatTable prev = table(StatKind::J, n - 2, TableMethod::brute, options.tables);
    for (int k = 0; k < n; ++k) {
      const auto terms = ffi_terms(n, k, prev);
      for (int g = 0; g < 3; ++g) {
        t.add("terms");
        for (int dir : {0, 1}) {
          const long long seen = bucket(t, {dir, n, k, g});
          if (BigInt(seen) != terms[g]) {
            t.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " term " + std::to_string(g + 1) +
                   ": " + std::to_string(seen) + (dir ? " set elements" : " images") + ", term is " +
                   terms[g].str());
          }
        }
      }
    }
  }
  t.buckets.clear();
  return t;
}

Tally check_gf(StatKind kind, int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 0, "gf");
  Tally t;
  const GfReport report = gf_check(kind, n_max, options.gf_margin, options.tables);
  t.add("coefficients", report.coefficients_compared);
  t.add("t_order", report.t_order);
  if (!report.ok()) {
    const auto& m = report.mismatches.front();
    std::ostringstream os;
    os << "coefficient of u^" << m.u_pow << " t^" << m.t_pow << ": left " << m.lhs << ", right " << m.rhs;
    t.fail(os.str());
  }
  return t;
}

std::string sequence_str(const std::vector<BigInt>& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + seq[i].str();
  return s + ")";
}

Tally check_unimodal(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 1, "unimodal");
  const int ffi_max = options.companion_max.value_or(n_max);
  options.tables.caps.check(PermKind::involutions, n_max);
  options.tables.caps.check(PermKind::ffi, ffi_max);
  Tally t;
  auto probe = [&](StatKind kind, int n) {
    const auto seq = table(kind, n, TableMethod::brute, options.tables).sequence();
    t.add("sequences");
    if (!is_unimodal(seq)) {
      t.fail(std::string(to_string(kind)) + "_" + std::to_string(n) + " = " + sequence_str(seq) +
             " is not unimodal");
    }
  };
  for (int n = 1; n <= n_max; ++n) probe(StatKind::I, n);
  for (int n = 2; n <= ffi_max; n += 2) probe(StatKind::J, n);
  return t;
}

Tally check_marginal(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 1, "marginal");
  options.tables.caps.check(PermKind::all, n_max);
  Tally t;
  for (int n = 1; n <= n_max; ++n) {
    const MarginalReport report = eulerian_marginal(n, options.tables);
    t.add("sizes");
    if (report.row_sums != report.eulerian) {
      t.fail("n=" + std::to_string(n) + ": row sums " + sequence_str(report.row_sums) +
             " differ from Eulerian numbers " + sequence_str(report.eulerian));
    }
    if (!report.symmetric) t.fail("n=" + std::to_string(n) + ": A table is not symmetric");
  }
  return t;
}

Tally check_roundtrip(int n_max, const VerifyOptions& options) {
  require_n_max(n_max, 1, "roundtrip");
  const int inv_max = options.companion_max.value_or(n_max);
  options.tables.caps.check(PermKind::all, n_max);
  options.tables.caps.check(PermKind::involutions, inv_max);
  const int workers = options.tables.workers;
  Tally t = over_permutations(PermKind::all, size_range(1, n_max), workers, [](const Permutation& pi, Tally& part) {
    const int n = pi.size();
    for (int r = 1; r <= n + 1; ++r) {
      for (int c = 1; c <= n + 1; ++c) {
        part.add("insert");
        if (delete_square(insert_square(pi, {r, c}), {r, c}) != pi) {
          part.fail("delete(insert(" + pi.str() + ", " + pt_str({r, c}) + ")) is not the identity");
        }
      }
    }
  });
  t.merge(over_permutations(PermKind::involutions, size_range(1, inv_max), workers,
                            [](const Permutation& pi, Tally& part) {
                              const int n = pi.size();
                              for (int i = 1; i <= n + 1; ++i) {
                                for (int j = 1; j <= n + 1; ++j) {
                                  if (i == j) continue;
                                  part.add("xi");
                                  if (xi_inv(xi(pi, {i, j}), {i, j}) != pi) {
                                    part.fail("xi_inv(xi(" + pi.str() + ", " + pt_str({i, j}) + "))");
                                  }
                                }
                                part.add("eta");
                                if (eta_inv(eta(pi, i), i) != pi) {
                                  part.fail("eta_inv(eta(" + pi.str() + ", " + std::to_string(i) + "))");
                                }
                                part.add("eta_prime");
                                if (eta_prime_inv(eta_prime(pi, i), i) != pi) {
                                  part.fail("eta_prime_inv(eta_prime(" + pi.str() + ", " + std::to_string(i) + "))");
                                }
                              }
                            }));
  return t;
}

Tally dispatch(CheckId id, int n_max, const VerifyOptions& options) {
  switch (id) {
    case CheckId::recA: return check_recurrence(StatKind::A, n_max, options);
    case CheckId::recI: return check_recurrence(StatKind::I, n_max, options);
    case CheckId::recJ: return check_recurrence(StatKind::J, n_max, options);
    case CheckId::census: return check_census(n_max, options);
    case CheckId::paths: return check_paths(n_max, options);
    case CheckId::bijection_A: return check_bijection_A(n_max, options);
    case CheckId::bijection_I: return check_bijection_I(n_max, options);
    case CheckId::bijection_J: return check_bijection_J(n_max, options);
    case CheckId::gf_I: return check_gf(StatKind::I, n_max, options);
    case CheckId::gf_J: return check_gf(StatKind::J, n_max, options);
    case CheckId::unimodal: return check_unimodal(n_max, options);
    case CheckId::marginal: return check_marginal(n_max, options);
    case CheckId::roundtrip: return check_roundtrip(n_max, options);
  }
  throw DomainError("unknown check");
}

}  // namespace

std::string_view to_string(CheckId id) {
  for (const auto& [cid, name] : kCheckNames) {
    if (cid == id) return name;
  }
  return "?";
}

CheckId parse_check_id(std::string_view text) {
  for (const auto& [cid, name] : kCheckNames) {
    if (name == text) return cid;
  }
  throw ParseError("unknown check '" + std::string(text) + "'");
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& entry : kCheckNames) v.push_back(entry.first);
    return v;
  }();
  return ids;
}

CheckReport run_check(CheckId id, int n_max, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Tally t = dispatch(id, n_max, options);
  CheckReport report;
  report.name = std::string(to_string(id));
  report.n_max = n_max;
  report.counts = std::move(t.counts);
  report.counterexample = std::move(t.counterexample);
  report.passed = !report.counterexample;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CheckReport> run_checks(const std::vector<CheckId>& ids, int n_max, const VerifyOptions& options) {
  if (ids.size() <= 1) {
    std::vector<CheckReport> out;
    for (CheckId id : ids) out.push_back(run_check(id, n_max, options));
    return out;
  }
  // Parallelism goes to the checks; each check then runs single-threaded.
  VerifyOptions inner = options;
  inner.tables.workers = 1;
  return map_shards(static_cast<int>(ids.size()), options.tables.workers,
                    [&](int s) { return run_check(ids[s], n_max, inner); });
}

}  // namespace permgrid
