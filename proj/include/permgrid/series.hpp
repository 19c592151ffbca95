#pragma once

#include <optional>
#include <vector>

#include "permgrid/bigint.hpp"
#include "permgrid/tables.hpp"

namespace permgrid {

// Bivariate power series in u and t with rational coefficients, truncated to
// u-degree <= u_order and t-degree <= t_order. Products drop every term
// outside the window, so the ring operations are exact within it.
class TruncatedSeries {
 public:
  TruncatedSeries(int u_order, int t_order);

  static TruncatedSeries constant(int u_order, int t_order, const BigRational& c);
  static TruncatedSeries monomial(int u_order, int t_order, int u_pow, int t_pow,
                                  const BigRational& c = 1);

  int u_order() const { return u_order_; }
  int t_order() const { return t_order_; }

  const BigRational& coeff(int u_pow, int t_pow) const;
  BigRational& coeff(int u_pow, int t_pow);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // Multiplicative inverse; throws DomainError unless the constant term is
  // non-zero.
  TruncatedSeries reciprocal() const;
  TruncatedSeries pow(unsigned long long e) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_window(const TruncatedSeries& other) const;

  int u_order_;
  int t_order_;
  std::vector<BigRational> c_;  // (u_pow, t_pow) at u_pow * (t_order + 1) + t_pow
};

struct SeriesMismatch {
  int u_pow = 0;
  int t_pow = 0;
  BigRational lhs;
  BigRational rhs;
};

struct GfReport {
  StatKind kind = StatKind::I;
  int u_order = 0;
  int t_order = 0;
  long long coefficients_compared = 0;
  std::vector<SeriesMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// sum_n X_n(t) u^n / (1-t)^{n+1} with X = I (involutions) or J (fixed-point-
// free involutions), X_0 = 1, built from the brute-force polynomials.
TruncatedSeries gf_lhs(StatKind kind, int u_order, int t_order, const TableOptions& options = {});
// sum_r t^r / ((1-u)^{r+1} (1-u^2)^{r(r+1)/2}) for I,
// sum_r t^r / (1-u^2)^{r(r+1)/2} for J, over r <= t_order.
TruncatedSeries gf_rhs(StatKind kind, int u_order, int t_order);

// Compares both sides on the window u^0..u^u_order, t^0..t^(u_order+margin).
// Throws DomainError for a negative order or margin and LimitError when the
// left side would need polynomials beyond the enumeration caps.
GfReport gf_check(StatKind kind, int u_order, int margin = 0, const TableOptions& options = {});

}  // namespace permgrid
