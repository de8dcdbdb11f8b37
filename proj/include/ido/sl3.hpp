#ifndef IDO_SL3_HPP
#define IDO_SL3_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ido/matrix.hpp"
#include "ido/weight.hpp"

namespace ido {

/// Trace-free 3x3 matrix over the Gaussian rationals: the concrete model of
/// the complexified Lie algebra sl(3).
struct GElement {
  Mat m;

  GElement() : m(3, 3) {}
  explicit GElement(Mat mat) : m(std::move(mat)) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("GElement must be 3x3");
    if (!m.trace().is_zero()) throw std::invalid_argument("GElement must be trace-free");
  }

  friend GElement operator+(const GElement& a, const GElement& b) { return GElement(a.m + b.m); }
  friend GElement operator-(const GElement& a, const GElement& b) { return GElement(a.m - b.m); }
  friend GElement operator*(const GaussRational& s, const GElement& a) {
    return GElement(s * a.m);
  }
  friend bool operator==(const GElement& a, const GElement& b) { return a.m == b.m; }
  bool is_zero() const { return m.is_zero(); }
};

/// [a, b] = ab - ba.
inline GElement commutator(const GElement& a, const GElement& b) {
  return GElement(a.m * b.m - b.m * a.m);
}

/// Cartan involution theta(U) = -U^t of the split real form.
inline GElement cartan_theta(const GElement& a) {
  return GElement(GaussRational(-1) * a.m.transpose());
}

namespace sl3 {

inline Mat unit(int r, int c) {
  Mat m(3, 3);
  m(r, c) = GaussRational(1);
  return m;
}

// Root vectors of -alpha, -beta, -(alpha+beta).
inline GElement X() { return GElement(unit(1, 0)); }
inline GElement Y() { return GElement(unit(2, 1)); }
inline GElement Z() { return GElement(unit(2, 0)); }

inline GElement Halpha() { return GElement(unit(0, 0) - unit(1, 1)); }
inline GElement Hbeta() { return GElement(unit(1, 1) - unit(2, 2)); }

inline GElement E12() { return GElement(unit(0, 1)); }
inline GElement E23() { return GElement(unit(1, 2)); }
inline GElement E13() { return GElement(unit(0, 2)); }

// so(3) basis.
inline GElement B1() { return GElement(unit(2, 0) - unit(0, 2)); }
inline GElement B2() { return GElement(unit(2, 1) - unit(1, 2)); }
inline GElement B3() { return GElement(unit(1, 0) - unit(0, 1)); }

// sl(2)-triple inside the complexified so(3).
inline GElement Zplus() { return GElement(B2().m - GaussRational::i() * B3().m); }
inline GElement Zminus() {
  return GElement(GaussRational(-1) * (B2().m + GaussRational::i() * B3().m));
}
inline GElement Zzero() { return commutator(Zplus(), Zminus()); }

inline std::vector<GaussRational> flat_coords(const GElement& g) {
  std::vector<GaussRational> v;
  v.reserve(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) v.push_back(g.m(r, c));
  return v;
}

}  // namespace sl3

/// An ordered basis of a Lie subalgebra together with its structure
/// constants. Brackets of basis pairs must stay inside the span; this is
/// validated (exactly) on construction.
struct BracketTable {
  std::vector<std::string> names;
  std::vector<GElement> elems;                                // empty for abstract tables
  std::vector<Weight> weights;                                // restricted a*-weights
  std::vector<std::vector<std::vector<GaussRational>>> br;    // br[i][j] = coords of [e_i, e_j]

  int size() const { return int(names.size()); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[std::size_t(i)] == name) return i;
    throw std::invalid_argument("unknown basis element '" + name + "'");
  }

  /// Exact coordinates of g in this basis; throws if g lies outside the span.
  std::vector<GaussRational> coords(const GElement& g) const {
    std::vector<std::vector<GaussRational>> cols;
    cols.reserve(elems.size());
    for (const auto& e : elems) cols.push_back(sl3::flat_coords(e));
    auto sol = solve_in_span(cols, sl3::flat_coords(g));
    if (!sol) throw std::invalid_argument("element outside the span of the basis");
    return *sol;
  }
};

/// Builds a table from concrete matrices; checks linear independence and
/// closure under brackets.
inline BracketTable make_table(std::vector<std::string> names, std::vector<GElement> elems,
                               std::vector<Weight> weights) {
  BracketTable t;
  t.names = std::move(names);
  t.elems = std::move(elems);
  t.weights = std::move(weights);
  int n = t.size();
  if (int(t.elems.size()) != n || int(t.weights.size()) != n)
    throw std::invalid_argument("basis table size mismatch");
  t.br.assign(std::size_t(n), std::vector<std::vector<GaussRational>>(std::size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.br[std::size_t(i)][std::size_t(j)] =
          t.coords(commutator(t.elems[std::size_t(i)], t.elems[std::size_t(j)]));
  return t;
}

/// {X, Y, Z, Halpha, Hbeta, E12, E23, E13}: nbar < Cartan < n, the order used
/// for highest-weight module reductions.
inline const BracketTable& standard_table() {
  static const BracketTable t = make_table(
      {"X", "Y", "Z", "Ha", "Hb", "E12", "E23", "E13"},
      {sl3::X(), sl3::Y(), sl3::Z(), sl3::Halpha(), sl3::Hbeta(), sl3::E12(), sl3::E23(),
       sl3::E13()},
      {-alpha_root(), -beta_root(), -root(PosRoot::alpha_beta), Weight(), Weight(), alpha_root(),
       beta_root(), root(PosRoot::alpha_beta)});
  return t;
}

/// {X, Y, Z}: the opposite nilradical, a Heisenberg algebra.
inline const BracketTable& nbar_table() {
  static const BracketTable t =
      make_table({"X", "Y", "Z"}, {sl3::X(), sl3::Y(), sl3::Z()},
                 {-alpha_root(), -beta_root(), -root(PosRoot::alpha_beta)});
  return t;
}

/// {B1, B2, B3, Halpha, Hbeta, E12, E23, E13}: k < Cartan < n, the order used
/// for flattening into the maximal compact subalgebra.
inline const BracketTable& iwasawa_table() {
  static const BracketTable t = make_table(
      {"B1", "B2", "B3", "Ha", "Hb", "E12", "E23", "E13"},
      {sl3::B1(), sl3::B2(), sl3::B3(), sl3::Halpha(), sl3::Hbeta(), sl3::E12(), sl3::E23(),
       sl3::E13()},
      {Weight(), Weight(), Weight(), Weight(), Weight(), alpha_root(), beta_root(),
       root(PosRoot::alpha_beta)});
  return t;
}

/// {Z+, Z-, Z0} inside complexified so(3), with [Z+,Z-] = Z0, [Z0,Z±] = ±2Z±.
inline const BracketTable& kz_table() {
  static const BracketTable t = make_table({"Z+", "Z-", "Z0"},
                                           {sl3::Zplus(), sl3::Zminus(), sl3::Zzero()},
                                           {Weight(), Weight(), Weight()});
  return t;
}

/// Abstract sl(2) with generators {E+, E-, E0}; mirrors kz_table through the
/// relabeling Z_j -> E_j.
inline const BracketTable& sl2_table() {
  static const BracketTable t = [] {
    BracketTable s;
    s.names = {"E+", "E-", "E0"};
    s.weights = {Weight(), Weight(), Weight()};
    auto c = [](long p, long m, long z) {
      return std::vector<GaussRational>{grat(p), grat(m), grat(z)};
    };
    s.br = {{c(0, 0, 0), c(0, 0, 1), c(-2, 0, 0)},
            {c(0, 0, -1), c(0, 0, 0), c(0, 2, 0)},
            {c(2, 0, 0), c(0, -2, 0), c(0, 0, 0)}};
    return s;
  }();
  return t;
}

}  // namespace ido

#endif
