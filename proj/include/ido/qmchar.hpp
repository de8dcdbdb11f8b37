#ifndef IDO_QMCHAR_HPP
#define IDO_QMCHAR_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ido/uea.hpp"

namespace ido {
namespace qmchar {

/// The eight elements of the quaternion model of the compact Cartan
/// centralizer: indices 0..3 are m~_0..m~_3, indices 4..7 their negatives.
struct Q8Element {
  int id = 0;
};

inline constexpr int q8_negate(int id) { return id < 4 ? id + 4 : id - 4; }

inline const std::array<Mat, 8>& q8_mat2() {
  static const std::array<Mat, 8> mats = [] {
    std::array<Mat, 8> m;
    const GaussRational i = GaussRational::i();
    Mat m0 = Mat::identity(2);
    Mat m1(2, 2), m2(2, 2), m3(2, 2);
    m1(0, 0) = i;
    m1(1, 1) = -i;
    m2(0, 1) = GaussRational(1);
    m2(1, 0) = GaussRational(-1);
    m3(0, 1) = i;
    m3(1, 0) = i;
    m[0] = m0;
    m[1] = m1;
    m[2] = m2;
    m[3] = m3;
    for (int j = 0; j < 4; ++j) m[std::size_t(j + 4)] = GaussRational(-1) * m[std::size_t(j)];
    return m;
  }();
  return mats;
}

/// Images in SO(3) under the covering map; sign is forgotten.
inline const std::array<Mat, 8>& q8_mat3() {
  static const std::array<Mat, 8> mats = [] {
    auto diag = [](long a, long b, long c) {
      Mat m(3, 3);
      m(0, 0) = grat(a);
      m(1, 1) = grat(b);
      m(2, 2) = grat(c);
      return m;
    };
    std::array<Mat, 8> m;
    m[0] = diag(1, 1, 1);
    m[1] = diag(-1, 1, -1);
    m[2] = diag(1, -1, -1);
    m[3] = diag(-1, -1, 1);
    for (int j = 0; j < 4; ++j) m[std::size_t(j + 4)] = m[std::size_t(j)];
    return m;
  }();
  return mats;
}

inline const std::array<std::array<int, 8>, 8>& q8_mult_table() {
  static const std::array<std::array<int, 8>, 8> table = [] {
    std::array<std::array<int, 8>, 8> t{};
    const auto& m = q8_mat2();
    for (int g = 0; g < 8; ++g)
      for (int h = 0; h < 8; ++h) {
        Mat p = m[std::size_t(g)] * m[std::size_t(h)];
        int found = -1;
        for (int k = 0; k < 8; ++k)
          if (p == m[std::size_t(k)]) {
            found = k;
            break;
          }
        if (found < 0) throw std::logic_error("Q8 is not closed under multiplication");
        t[std::size_t(g)][std::size_t(h)] = found;
      }
    return t;
  }();
  return table;
}

inline Q8Element q8_mul(Q8Element g, Q8Element h) {
  return Q8Element{q8_mult_table()[std::size_t(g.id)][std::size_t(h.id)]};
}

inline std::string q8_name(Q8Element g) {
  static const char* names[8] = {"m0", "m1", "m2", "m3", "-m0", "-m1", "-m2", "-m3"};
  return names[g.id];
}

enum class MIrrepLabel { pp, pm, mp, mm, H };

inline const std::array<MIrrepLabel, 5>& all_irreps() {
  static const std::array<MIrrepLabel, 5> a = {MIrrepLabel::pp, MIrrepLabel::pm, MIrrepLabel::mp,
                                               MIrrepLabel::mm, MIrrepLabel::H};
  return a;
}

inline std::string irrep_token(MIrrepLabel l) {
  switch (l) {
    case MIrrepLabel::pp: return "++";
    case MIrrepLabel::pm: return "+-";
    case MIrrepLabel::mp: return "-+";
    case MIrrepLabel::mm: return "--";
    default: return "H";
  }
}

inline std::string irrep_pretty(MIrrepLabel l) {
  switch (l) {
    case MIrrepLabel::pp: return "(+,+)";
    case MIrrepLabel::pm: return "(+,-)";
    case MIrrepLabel::mp: return "(-,+)";
    case MIrrepLabel::mm: return "(-,-)";
    default: return "H";
  }
}

inline MIrrepLabel parse_irrep(const std::string& s) {
  for (MIrrepLabel l : all_irreps())
    if (s == irrep_token(l) || s == irrep_pretty(l)) return l;
  throw std::invalid_argument("unknown irreducible '" + s + "' (valid: ++, +-, -+, --, H)");
}

/// Character table of the five irreducibles, columns indexed by Q8Element id.
/// The sign characters take the same value at g and -g; H is genuine.
struct CharacterTable {
  std::array<std::array<GaussRational, 8>, 5> chi;
  std::array<int, 5> dim;
};

inline CharacterTable build_char_table() {
  CharacterTable t;
  auto signs = [](long a1, long a2, long a3) {
    std::array<GaussRational, 8> row;
    long v[4] = {1, a1, a2, a3};
    for (int j = 0; j < 4; ++j) {
      row[std::size_t(j)] = grat(v[j]);
      row[std::size_t(j + 4)] = grat(v[j]);
    }
    return row;
  };
  t.chi[0] = signs(1, 1, 1);     // (+,+)
  t.chi[1] = signs(-1, -1, 1);   // (+,-)
  t.chi[2] = signs(-1, 1, -1);   // (-,+)
  t.chi[3] = signs(1, -1, -1);   // (-,-)
  std::array<GaussRational, 8> h{};
  h[0] = grat(2);
  h[4] = grat(-2);
  t.chi[4] = h;
  t.dim = {1, 1, 1, 1, 2};
  return t;
}

inline const CharacterTable& char_table() {
  static const CharacterTable t = build_char_table();
  return t;
}

inline const GaussRational& character_value(MIrrepLabel l, Q8Element g,
                                            const CharacterTable& table = char_table()) {
  return table.chi[std::size_t(int(l))][std::size_t(g.id)];
}

/// Character of the adjoint action on a one-dimensional weight line in
/// U(nbar). Conjugates the line by each m_j, extended multiplicatively to
/// monomials, and matches the resulting signs against the table. Throws when
/// the line is not Ad-stable or the action is not by +-1.
inline MIrrepLabel ad_character(const UeaElement& line,
                                const CharacterTable& table = char_table()) {
  if (line.is_zero()) throw std::invalid_argument("ad_character of the zero line");
  const BracketTable& nbar = nbar_table();
  Weight w = monomial_weight(line.terms().begin()->first, nbar);
  for (const auto& [m, c] : line.terms())
    if (!(monomial_weight(m, nbar) == w))
      throw std::invalid_argument("input is not a single weight line");

  std::array<GaussRational, 4> sign;
  sign[0] = GaussRational(1);
  for (int j = 1; j < 4; ++j) {
    const Mat& m3 = q8_mat3()[std::size_t(j)];
    Mat m3_inv = inverse(m3);
    std::vector<UeaElement> letter_image(3);
    for (int l = 0; l < 3; ++l) {
      GElement conj(m3 * nbar.elems[std::size_t(l)].m * m3_inv);
      auto coords = nbar.coords(conj);  // throws if not Ad-stable
      UeaElement img;
      for (int k = 0; k < 3; ++k)
        if (!coords[std::size_t(k)].is_zero()) img.add(Monomial({std::uint8_t(k)}), coords[std::size_t(k)]);
      letter_image[std::size_t(l)] = std::move(img);
    }
    UeaElement transformed;
    for (const auto& [m, c] : line.terms()) {
      UeaElement acc = UeaElement::one();
      for (std::uint8_t letter : m.idx) acc = multiply(acc, letter_image[letter], nbar);
      transformed = transformed + c * acc;
    }
    if (transformed == line)
      sign[std::size_t(j)] = GaussRational(1);
    else if (transformed == GaussRational(-1) * line)
      sign[std::size_t(j)] = GaussRational(-1);
    else
      throw std::invalid_argument("adjoint action on the line is not by +-1");
  }

  for (MIrrepLabel l : all_irreps()) {
    if (table.dim[std::size_t(int(l))] != 1) continue;
    bool match = true;
    for (int j = 0; j < 4; ++j)
      if (!(character_value(l, Q8Element{j}, table) == sign[std::size_t(j)])) {
        match = false;
        break;
      }
    if (match) return l;
  }
  throw std::invalid_argument("sign pattern matches no character in the table");
}

/// Decomposes a finite-dimensional representation given by exact action
/// matrices over the full 8-element group. Multiplicities come from
/// character orthogonality and must be nonnegative integers that exhaust the
/// dimension.
inline std::map<MIrrepLabel, int> decompose_mrep(const std::array<Mat, 8>& actions,
                                                 const CharacterTable& table = char_table()) {
  int d = actions[0].rows();
  for (const Mat& a : actions)
    if (a.rows() != d || a.cols() != d)
      throw std::invalid_argument("action matrices must be square of equal size");
  std::map<MIrrepLabel, int> out;
  if (d == 0) return out;
  const auto& mult = q8_mult_table();
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h)
      if (!(actions[std::size_t(g)] * actions[std::size_t(h)] ==
            actions[std::size_t(mult[std::size_t(g)][std::size_t(h)])]))
        throw std::invalid_argument("matrices do not realize the Q8 multiplication table");

  int total = 0;
  for (MIrrepLabel l : all_irreps()) {
    GaussRational s;
    for (int g = 0; g < 8; ++g)
      s += actions[std::size_t(g)].trace() * character_value(l, Q8Element{g}, table).conj();
    s = s / GaussRational(Rational(8));
    if (!s.is_real() || !is_integer(s.re) || s.re < 0)
      throw std::invalid_argument("non-integral multiplicity: input is not a Q8 representation");
    int m = int(s.re.get_num().get_si());
    if (m > 0) out[l] = m;
    total += m * table.dim[std::size_t(int(l))];
  }
  if (total != d)
    throw std::invalid_argument("multiplicities do not exhaust the dimension");
  return out;
}

inline int hom_multiplicity(const std::map<MIrrepLabel, int>& rep, MIrrepLabel sigma) {
  auto it = rep.find(sigma);
  return it == rep.end() ? 0 : it->second;
}

}  // namespace qmchar
}  // namespace ido

#endif
