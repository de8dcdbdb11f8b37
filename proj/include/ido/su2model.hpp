#ifndef IDO_SU2MODEL_HPP
#define IDO_SU2MODEL_HPP

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ido/qmchar.hpp"
#include "ido/uea.hpp"

namespace ido {
namespace su2 {

/// Polynomial of degree <= n over the Gaussian rationals; coefficient of t^k
/// at index k, always stored with full length n+1.
struct PolyVector {
  std::vector<GaussRational> c;

  PolyVector() = default;
  explicit PolyVector(int degree_bound) : c(std::size_t(degree_bound) + 1) {}

  int degree_bound() const { return int(c.size()) - 1; }
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.c == b.c; }
};

/// Exact matrix of an operator on the monomial basis {1, t, ..., t^n}.
struct PolyOpMatrix {
  Mat m;
  int n = 0;
};

inline PolyVector apply(const PolyOpMatrix& op, const PolyVector& p) {
  if (p.degree_bound() != op.n) throw std::invalid_argument("degree bound mismatch");
  PolyVector out(op.n);
  out.c = op.m.apply(p.c);
  return out;
}

/// Generator matrices of the derived representation on Pol_n[t]:
/// E+ acts by -d/dt, E- by -nt + t^2 d/dt, E0 by the diagonal n - 2k.
inline Mat dpi_generator(int gen, int n) {
  Mat m(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    switch (gen) {
      case 0:
        if (k >= 1) m(k - 1, k) = grat(-k);
        break;
      case 1:
        if (k + 1 <= n) m(k + 1, k) = grat(k - n);
        break;
      default:
        m(k, k) = grat(n - 2 * k);
        break;
    }
  }
  return m;
}

/// Matrix of dpi_n(u) for u over the sl(2) generators {E+, E-, E0}; letters
/// compose right-to-left as operators, i.e. as a left-to-right matrix
/// product.
inline PolyOpMatrix dpi_matrix(const UeaElement& u, int n) {
  Mat acc(n + 1, n + 1);
  for (const auto& [m, c] : u.terms()) {
    Mat prod = Mat::identity(n + 1);
    for (std::uint8_t letter : m.idx) {
      if (letter > 2) throw std::invalid_argument("dpi_matrix expects sl(2) letters");
      prod = prod * dpi_generator(letter, n);
    }
    acc = acc + c * prod;
  }
  return PolyOpMatrix{acc, n};
}

/// Exact kernel basis in reduced echelon form (leading coefficient 1, zeros
/// above the pivots).
inline std::vector<PolyVector> sol_space(const UeaElement& u_flat, int n) {
  PolyOpMatrix op = dpi_matrix(u_flat, n);
  std::vector<PolyVector> out;
  for (auto& v : kernel_basis(op.m)) {
    PolyVector p(n);
    p.c = std::move(v);
    out.push_back(std::move(p));
  }
  return out;
}

/// Kernel of the stacked system.
inline std::vector<PolyVector> common_sol(const std::vector<UeaElement>& u_flats, int n) {
  if (u_flats.empty()) throw std::invalid_argument("common_sol of an empty system");
  Mat stacked(int(u_flats.size()) * (n + 1), n + 1);
  int row = 0;
  for (const auto& u : u_flats) {
    PolyOpMatrix op = dpi_matrix(u, n);
    for (int r = 0; r <= n; ++r, ++row)
      for (int c = 0; c <= n; ++c) stacked(row, c) = op.m(r, c);
  }
  std::vector<PolyVector> out;
  for (auto& v : kernel_basis(stacked)) {
    PolyVector p(n);
    p.c = std::move(v);
    out.push_back(std::move(p));
  }
  return out;
}

inline GaussRational gauss_pow(const GaussRational& z, int e) {
  GaussRational r(1);
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

/// Matrix of pi_n(g) on the monomial basis: with (a b; c d) the INVERSE of
/// g's 2x2 matrix, t^k maps to (at+b)^k (ct+d)^{n-k}, expanded exactly by the
/// binomial theorem.
inline PolyOpMatrix compute_group_action_matrix(qmchar::Q8Element g, int n) {
  Mat ginv = inverse(qmchar::q8_mat2()[std::size_t(g.id)]);
  const GaussRational a = ginv(0, 0), b = ginv(0, 1), c = ginv(1, 0), d = ginv(1, 1);
  Mat m(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<GaussRational> top(std::size_t(k) + 1);  // (a t + b)^k
    for (int p = 0; p <= k; ++p)
      top[std::size_t(p)] =
          GaussRational(Rational(binomial(k, p))) * gauss_pow(a, p) * gauss_pow(b, k - p);
    std::vector<GaussRational> bot(std::size_t(n - k) + 1);  // (c t + d)^{n-k}
    for (int q = 0; q <= n - k; ++q)
      bot[std::size_t(q)] =
          GaussRational(Rational(binomial(n - k, q))) * gauss_pow(c, q) * gauss_pow(d, n - k - q);
    for (int p = 0; p <= k; ++p) {
      if (top[std::size_t(p)].is_zero()) continue;
      for (int q = 0; q <= n - k; ++q) {
        if (bot[std::size_t(q)].is_zero()) continue;
        m(p + q, k) += top[std::size_t(p)] * bot[std::size_t(q)];
      }
    }
  }
  return PolyOpMatrix{m, n};
}

/// Memoized front end: the sweeps query the same (g, n) pairs for every
/// operator. Guarded by a mutex so concurrent sweeps stay safe.
inline PolyOpMatrix group_action_matrix(qmchar::Q8Element g, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PolyOpMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(g.id, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_group_action_matrix(g, n)).first;
  return it->second;
}

inline std::string poly_pretty(const PolyVector& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= p.degree_bound(); ++k) {
    const GaussRational& c = p.c[std::size_t(k)];
    if (c.is_zero()) continue;
    GaussRational cc = c;
    bool negative = (cc.im == 0 && cc.re < 0) || (cc.re == 0 && cc.im < 0);
    if (!s.empty()) {
      s += negative ? " - " : " + ";
      if (negative) cc = -cc;
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) {
      s += gauss_pretty(cc);
    } else if (cc == GaussRational(1)) {
      s += mono;
    } else if (cc == GaussRational(-1)) {
      s += "-" + mono;
    } else {
      std::string cs = gauss_pretty(cc);
      if (cc.im != 0 && cc.re != 0) cs = "(" + cs + ")";
      s += cs + " " + mono;
    }
  }
  return s;
}

}  // namespace su2
}  // namespace ido

#endif
