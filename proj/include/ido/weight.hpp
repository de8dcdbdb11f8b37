#ifndef IDO_WEIGHT_HPP
#define IDO_WEIGHT_HPP

#include <stdexcept>
#include <string>

#include "ido/rational.hpp"

namespace ido {

/// The three positive restricted roots of the A2 system.
enum class PosRoot { alpha, beta, alpha_beta };

inline constexpr const char* pos_root_name(PosRoot r) {
  switch (r) {
    case PosRoot::alpha: return "alpha";
    case PosRoot::beta: return "beta";
    default: return "alpha+beta";
  }
}

/// Element of the dual of the split Cartan, in coordinates over the simple
/// roots {alpha, beta}.
struct Weight {
  Rational c_alpha;
  Rational c_beta;

  Weight() : c_alpha(0), c_beta(0) {}
  Weight(Rational a, Rational b) : c_alpha(std::move(a)), c_beta(std::move(b)) {}

  friend Weight operator+(const Weight& x, const Weight& y) {
    return Weight(x.c_alpha + y.c_alpha, x.c_beta + y.c_beta);
  }
  friend Weight operator-(const Weight& x, const Weight& y) {
    return Weight(x.c_alpha - y.c_alpha, x.c_beta - y.c_beta);
  }
  Weight operator-() const { return Weight(-c_alpha, -c_beta); }
  friend Weight operator*(const Rational& s, const Weight& w) {
    return Weight(s * w.c_alpha, s * w.c_beta);
  }
  friend bool operator==(const Weight& x, const Weight& y) {
    return x.c_alpha == y.c_alpha && x.c_beta == y.c_beta;
  }
  friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
  friend bool operator<(const Weight& x, const Weight& y) {
    int c = cmp(x.c_alpha, y.c_alpha);
    if (c != 0) return c < 0;
    return cmp(x.c_beta, y.c_beta) < 0;
  }

  bool is_zero() const { return c_alpha == 0 && c_beta == 0; }
};

inline Weight alpha_root() { return Weight(rat(1), rat(0)); }
inline Weight beta_root() { return Weight(rat(0), rat(1)); }
inline Weight root(PosRoot r) {
  switch (r) {
    case PosRoot::alpha: return alpha_root();
    case PosRoot::beta: return beta_root();
    default: return Weight(rat(1), rat(1));
  }
}

/// rho = alpha + beta.
inline Weight rho() { return Weight(rat(1), rat(1)); }
/// rho/2, the second case-study parameter.
inline Weight rho_half() { return Weight(rat(1, 2), rat(1, 2)); }

/// <w, gamma^vee> from the A2 Cartan matrix: <alpha,alpha^vee> = 2,
/// <alpha,beta^vee> = -1.
inline Rational pair_coroot(const Weight& w, PosRoot gamma) {
  switch (gamma) {
    case PosRoot::alpha: return 2 * w.c_alpha - w.c_beta;
    case PosRoot::beta: return 2 * w.c_beta - w.c_alpha;
    default: return w.c_alpha + w.c_beta;
  }
}

/// s_gamma(w) = w - <w, gamma^vee> gamma.
inline Weight reflect(const Weight& w, PosRoot gamma) {
  return w - pair_coroot(w, gamma) * root(gamma);
}

inline std::string weight_pretty(const Weight& w) {
  return "(" + rational_pretty(w.c_alpha) + ", " + rational_pretty(w.c_beta) + ")";
}

/// Parses "a,b" with rational entries, or the aliases "-rho" and "-rho/2".
inline Weight parse_weight(const std::string& s) {
  if (s == "-rho") return -rho();
  if (s == "-rho/2") return -rho_half();
  if (s == "rho") return rho();
  if (s == "rho/2") return rho_half();
  std::size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("weight '" + s + "' is not 'a,b' nor a known alias");
  return Weight(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
}

}  // namespace ido

#endif
