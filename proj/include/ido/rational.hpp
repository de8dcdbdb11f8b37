#ifndef IDO_RATIONAL_HPP
#define IDO_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ido {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Largest integer <= q.
inline Integer floor_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws on
/// malformed input, naming the offending token.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational token");
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  bool saw_digit = false;
  bool saw_slash = false;
  for (; pos < s.size(); ++pos) {
    if (s[pos] >= '0' && s[pos] <= '9') {
      saw_digit = true;
    } else if (s[pos] == '/' && !saw_slash && saw_digit) {
      saw_slash = true;
      saw_digit = false;
    } else {
      throw std::invalid_argument("malformed rational token '" + s + "'");
    }
  }
  if (!saw_digit) throw std::invalid_argument("malformed rational token '" + s + "'");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational token '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Canonical wire form: always "p/q" with q > 0 and gcd(p, q) = 1.
inline std::string rational_wire(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Display form: "p" for integers, "p/q" otherwise.
inline std::string rational_pretty(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1).
inline Rational pochhammer(const Rational& a, unsigned long k) {
  Rational r = 1;
  Rational f = a;
  for (unsigned long j = 0; j < k; ++j) {
    r *= f;
    f += 1;
  }
  return r;
}

}  // namespace ido

#endif
