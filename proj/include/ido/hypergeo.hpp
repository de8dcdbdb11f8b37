#ifndef IDO_HYPERGEO_HPP
#define IDO_HYPERGEO_HPP

#include <optional>
#include <stdexcept>

#include "ido/su2model.hpp"

namespace ido {
namespace hypergeo {

/// Parameters of the Gauss series 2F1[a, b, c; x]. The lower parameter must
/// avoid nonpositive integers for the series to make sense.
class F21Params {
 public:
  F21Params(Rational a, Rational b, Rational c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (is_integer(c_) && c_ <= 0)
      throw std::invalid_argument("2F1 lower parameter must not be a nonpositive integer");
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  /// Number of terms when the series terminates: smallest k with a = -k or
  /// b = -k, otherwise nullopt.
  std::optional<long> termination_index() const {
    std::optional<long> k;
    if (is_integer(a_) && a_ <= 0) k = Rational(-a_).get_num().get_si();
    if (is_integer(b_) && b_ <= 0) {
      long kb = Rational(-b_).get_num().get_si();
      if (!k || kb < *k) k = kb;
    }
    return k;
  }

 private:
  Rational a_, b_, c_;
};

/// Series coefficient (a)_k (b)_k / ((c)_k k!).
inline Rational f21_coefficient(const F21Params& p, long k) {
  Rational num = pochhammer(p.a(), std::size_t(k)) * pochhammer(p.b(), std::size_t(k));
  Rational den = pochhammer(p.c(), std::size_t(k)) * pochhammer(Rational(1), std::size_t(k));
  return num / den;
}

/// Exact polynomial 2F1[a, b, c; t^power] when the series terminates,
/// nullopt otherwise. The result is zero-padded to degree max(max_deg, deg).
inline std::optional<su2::PolyVector> f21_truncate(const F21Params& p, int substitute_power,
                                                   int max_deg) {
  if (substitute_power <= 0) throw std::invalid_argument("substitute power must be positive");
  if (max_deg < 0) throw std::invalid_argument("max_deg must be nonnegative");
  auto k = p.termination_index();
  if (!k) return std::nullopt;
  long deg = *k * substitute_power;
  su2::PolyVector out(int(std::max(long(max_deg), deg)));
  for (long j = 0; j <= *k; ++j)
    out.c[std::size_t(j * substitute_power)] = GaussRational(f21_coefficient(p, j));
  return out;
}

/// Euler's operator D[a,b,c;x] = x(1-x) d^2/dx^2 + (c-(a+b+1)x) d/dx - ab
/// applied exactly to a polynomial in x.
inline su2::PolyVector euler_apply(const F21Params& p, const su2::PolyVector& f) {
  int n = f.degree_bound();
  su2::PolyVector out(n);
  Rational abc1 = p.a() + p.b() + 1;
  Rational ab = p.a() * p.b();
  for (int k = 0; k <= n; ++k) {
    const GaussRational& fk = f.c[std::size_t(k)];
    if (fk.is_zero()) continue;
    // x(1-x) k(k-1) x^{k-2} = k(k-1)(x^{k-1} - x^k)
    if (k >= 1) out.c[std::size_t(k - 1)] += GaussRational(Rational(long(k) * (k - 1))) * fk;
    out.c[std::size_t(k)] -= GaussRational(Rational(long(k) * (k - 1))) * fk;
    // (c - (a+b+1)x) k x^{k-1}
    if (k >= 1) out.c[std::size_t(k - 1)] += GaussRational(p.c() * k) * fk;
    out.c[std::size_t(k)] -= GaussRational(abc1 * k) * fk;
    // -ab x^k
    out.c[std::size_t(k)] -= GaussRational(ab) * fk;
  }
  return out;
}

/// T[n;t] = (1-t^4) d^2/dt^2 + 2(n-1) t^3 d/dt - n(n-1) t^2, applied
/// directly. The degree bound grows by two.
inline su2::PolyVector t_operator_apply(int n, const su2::PolyVector& f) {
  int d = f.degree_bound();
  su2::PolyVector out(d + 2);
  for (int k = 0; k <= d; ++k) {
    const GaussRational& fk = f.c[std::size_t(k)];
    if (fk.is_zero()) continue;
    long kk = long(k) * (k - 1);
    if (k >= 2) out.c[std::size_t(k - 2)] += GaussRational(Rational(kk)) * fk;
    long up = -kk + 2 * long(n - 1) * k - long(n) * (n - 1);
    out.c[std::size_t(k + 2)] += GaussRational(Rational(up)) * fk;
  }
  return out;
}

/// 2F1[a, b, c; 1] as the exact finite sum; requires terminating parameters.
inline Rational gauss_at_one(const F21Params& p) {
  auto k = p.termination_index();
  if (!k) throw std::invalid_argument("gauss_at_one requires terminating parameters");
  Rational s = 0;
  for (long j = 0; j <= *k; ++j) s += f21_coefficient(p, j);
  return s;
}

/// First fundamental solution u_n(t) = 2F1[-n/4, -(n-1)/4, 3/4; t^4], when
/// polynomial.
inline std::optional<su2::PolyVector> u_poly(int n) {
  F21Params p(rat(-n, 4), rat(-(n - 1), 4), rat(3, 4));
  return f21_truncate(p, 4, n);
}

/// Second fundamental solution v_n(t) = t 2F1[-(n-1)/4, -(n-2)/4, 5/4; t^4],
/// when polynomial.
inline std::optional<su2::PolyVector> v_poly(int n) {
  F21Params p(rat(-(n - 1), 4), rat(-(n - 2), 4), rat(5, 4));
  auto body = f21_truncate(p, 4, n > 0 ? n - 1 : 0);
  if (!body) return std::nullopt;
  su2::PolyVector out(std::max(n, body->degree_bound() + 1));
  for (int k = 0; k <= body->degree_bound(); ++k) out.c[std::size_t(k + 1)] = body->c[std::size_t(k)];
  return out;
}

}  // namespace hypergeo
}  // namespace ido

#endif
