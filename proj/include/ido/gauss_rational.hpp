#ifndef IDO_GAUSS_RATIONAL_HPP
#define IDO_GAUSS_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include "ido/rational.hpp"

namespace ido {

/// Exact scalar re + im*sqrt(-1) with arbitrary-precision rational parts.
/// The ground field for every computation in this library.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() : re(0), im(0) {}
  GaussRational(long n) : re(n), im(0) {}
  GaussRational(const Rational& r) : re(r), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRational conj() const { return GaussRational(re, -im); }

  /// |z|^2 = z * conj(z), a nonnegative rational.
  Rational norm() const { return re * re + im * im; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return GaussRational(a.re + b.re, a.im + b.im);
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return GaussRational(a.re - b.re, a.im - b.im);
  }
  GaussRational operator-() const { return GaussRational(-re, -im); }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return GaussRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n = b.norm();
    if (n == 0) throw std::domain_error("division by zero GaussRational");
    GaussRational p = a * b.conj();
    return GaussRational(p.re / n, p.im / n);
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline GaussRational grat(long num, long den = 1) { return GaussRational(rat(num, den)); }

/// Display form, e.g. "1", "-i", "1/2 - 3i", "(2/3)i".
inline std::string gauss_pretty(const GaussRational& z) {
  if (z.is_zero()) return "0";
  std::string s;
  if (z.re != 0) s += rational_pretty(z.re);
  if (z.im != 0) {
    if (z.im == 1) {
      s += s.empty() ? "i" : " + i";
    } else if (z.im == -1) {
      s += s.empty() ? "-i" : " - i";
    } else {
      std::string mag = rational_pretty(z.im < 0 ? Rational(-z.im) : z.im);
      std::string coeff = is_integer(z.im) ? mag : "(" + mag + ")";
      if (s.empty())
        s += (z.im < 0 ? "-" : "") + coeff + "i";
      else
        s += (z.im < 0 ? " - " : " + ") + coeff + "i";
    }
  }
  return s;
}

}  // namespace ido

#endif
