#include "permgrid/series.hpp"

#include <string>

#include "permgrid/error.hpp"

namespace permgrid {

TruncatedSeries::TruncatedSeries(int u_order, int t_order)
    : u_order_(u_order), t_order_(t_order) {
  if (u_order < 0 || t_order < 0) throw DomainError("series orders must be non-negative");
  c_.assign(std::size_t(u_order + 1) * (t_order + 1), BigRational(0));
}

TruncatedSeries TruncatedSeries::constant(int u_order, int t_order, const BigRational& c) {
  return monomial(u_order, t_order, 0, 0, c);
}

TruncatedSeries TruncatedSeries::monomial(int u_order, int t_order, int u_pow, int t_pow,
                                          const BigRational& c) {
  TruncatedSeries s(u_order, t_order);
  if (u_pow <= u_order && t_pow <= t_order) s.coeff(u_pow, t_pow) = c;
  return s;
}

const BigRational& TruncatedSeries::coeff(int u_pow, int t_pow) const {
  return c_.at(std::size_t(u_pow) * (t_order_ + 1) + t_pow);
}

BigRational& TruncatedSeries::coeff(int u_pow, int t_pow) {
  return c_.at(std::size_t(u_pow) * (t_order_ + 1) + t_pow);
}

void TruncatedSeries::require_same_window(const TruncatedSeries& other) const {
  if (u_order_ != other.u_order_ || t_order_ != other.t_order_) {
    throw DomainError("series truncated at different orders");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_window(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_window(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_window(b);
  TruncatedSeries out(a.u_order_, a.t_order_);
  for (int u1 = 0; u1 <= a.u_order_; ++u1) {
    for (int t1 = 0; t1 <= a.t_order_; ++t1) {
      const BigRational& x = a.coeff(u1, t1);
      if (x == 0) continue;
      for (int u2 = 0; u1 + u2 <= a.u_order_; ++u2) {
        for (int t2 = 0; t1 + t2 <= a.t_order_; ++t2) {
          const BigRational& y = b.coeff(u2, t2);
          if (y != 0) out.coeff(u1 + u2, t1 + t2) += x * y;
        }
      }
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const BigRational c0 = coeff(0, 0);
  if (c0 == 0) throw DomainError("series with zero constant term has no reciprocal");
  // Solve (this * r) = 1 coefficient by coefficient in graded order.
  TruncatedSeries r(u_order_, t_order_);
  for (int u = 0; u <= u_order_; ++u) {
    for (int t = 0; t <= t_order_; ++t) {
      BigRational acc = (u == 0 && t == 0) ? BigRational(1) : BigRational(0);
      for (int u1 = 0; u1 <= u; ++u1) {
        for (int t1 = 0; t1 <= t; ++t1) {
          if (u1 == 0 && t1 == 0) continue;
          const BigRational& x = coeff(u1, t1);
          if (x != 0) acc -= x * r.coeff(u - u1, t - t1);
        }
      }
      r.coeff(u, t) = acc / c0;
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned long long e) const {
  TruncatedSeries result = constant(u_order_, t_order_, 1);
  TruncatedSeries base = *this;
  while (e) {
    if (e & 1ULL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

std::vector<BigInt> polynomial_coefficients(StatKind kind, int n, const TableOptions& options) {
  if (n == 0) return {1};
  if (kind == StatKind::J && n % 2 != 0) return {};
  return table(kind, n, TableMethod::brute, options).sequence();
}

}  // namespace

TruncatedSeries gf_lhs(StatKind kind, int u_order, int t_order, const TableOptions& options) {
  if (kind == StatKind::A) throw DomainError("generating-function check is for I or J");
  const TruncatedSeries one_minus_t = TruncatedSeries::constant(u_order, t_order, 1) -
                                      TruncatedSeries::monomial(u_order, t_order, 0, 1);
  const TruncatedSeries inv = one_minus_t.reciprocal();
  TruncatedSeries sum(u_order, t_order);
  TruncatedSeries inv_power = inv;  // 1/(1-t)^{n+1}
  for (int n = 0; n <= u_order; ++n) {
    TruncatedSeries poly(u_order, t_order);
    const auto coeffs = polynomial_coefficients(kind, n, options);
    for (int k = 0; k < static_cast<int>(coeffs.size()) && k <= t_order; ++k) {
      poly.coeff(n, k) = BigRational(coeffs[k]);
    }
    sum += poly * inv_power;
    inv_power = inv_power * inv;
  }
  return sum;
}

TruncatedSeries gf_rhs(StatKind kind, int u_order, int t_order) {
  if (kind == StatKind::A) throw DomainError("generating-function check is for I or J");
  const TruncatedSeries one = TruncatedSeries::constant(u_order, t_order, 1);
  const TruncatedSeries one_minus_u = one - TruncatedSeries::monomial(u_order, t_order, 1, 0);
  const TruncatedSeries one_minus_u2 = one - TruncatedSeries::monomial(u_order, t_order, 2, 0);
  TruncatedSeries sum(u_order, t_order);
  for (int r = 0; r <= t_order; ++r) {
    TruncatedSeries denom = one_minus_u2.pow(static_cast<unsigned long long>(r) * (r + 1) / 2);
    if (kind == StatKind::I) denom = denom * one_minus_u.pow(r + 1);
    sum += TruncatedSeries::monomial(u_order, t_order, 0, r) * denom.reciprocal();
  }
  return sum;
}

GfReport gf_check(StatKind kind, int u_order, int margin, const TableOptions& options) {
  if (u_order < 0) throw DomainError("u-order must be non-negative");
  if (margin < 0) {
    throw DomainError("t truncation margin " + std::to_string(margin) +
                      " is too small: the t window must be at least the u window");
  }
  const PermKind pk = kind == StatKind::I ? PermKind::involutions : PermKind::ffi;
  options.caps.check(pk, kind == StatKind::J && u_order % 2 ? u_order - 1 : u_order);

  GfReport report;
  report.kind = kind;
  report.u_order = u_order;
  report.t_order = u_order + margin;
  const TruncatedSeries lhs = gf_lhs(kind, u_order, report.t_order, options);
  const TruncatedSeries rhs = gf_rhs(kind, u_order, report.t_order);
  for (int u = 0; u <= u_order; ++u) {
    for (int t = 0; t <= report.t_order; ++t) {
      ++report.coefficients_compared;
      if (lhs.coeff(u, t) != rhs.coeff(u, t)) {
        report.mismatches.push_back({u, t, lhs.coeff(u, t), rhs.coeff(u, t)});
      }
    }
  }
  return report;
}

}  // namespace permgrid
