#ifndef IDO_UEA_HPP
#define IDO_UEA_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ido/sl3.hpp"

namespace ido {

/// Word over basis indices. In normal form the indices are nondecreasing with
/// respect to the active total order.
struct Monomial {
  std::vector<std::uint8_t> idx;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint8_t> v) : idx(std::move(v)) {}

  int degree() const { return int(idx.size()); }
  bool empty() const { return idx.empty(); }

  friend bool operator<(const Monomial& a, const Monomial& b) { return a.idx < b.idx; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.idx == b.idx; }

  Monomial concat(const Monomial& o) const {
    Monomial m = *this;
    m.idx.insert(m.idx.end(), o.idx.begin(), o.idx.end());
    return m;
  }
};

/// Finite linear combination of monomials with GaussRational coefficients.
/// Zero coefficients are never stored; an ordered map keeps every iteration
/// deterministic.
class UeaElement {
 public:
  using Terms = std::map<Monomial, GaussRational>;

  UeaElement() = default;

  static UeaElement zero() { return UeaElement(); }
  static UeaElement one() {
    UeaElement u;
    u.add(Monomial(), GaussRational(1));
    return u;
  }
  static UeaElement generator(int index, GaussRational coeff = GaussRational(1)) {
    UeaElement u;
    u.add(Monomial({std::uint8_t(index)}), std::move(coeff));
    return u;
  }
  static UeaElement word(std::vector<std::uint8_t> letters,
                         GaussRational coeff = GaussRational(1)) {
    UeaElement u;
    u.add(Monomial(std::move(letters)), std::move(coeff));
    return u;
  }

  void add(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return int(terms_.size()); }

  /// Largest word length over the stored monomials (0 for scalars).
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  friend UeaElement operator+(const UeaElement& a, const UeaElement& b) {
    UeaElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
  }
  friend UeaElement operator-(const UeaElement& a, const UeaElement& b) {
    UeaElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, -c);
    return r;
  }
  friend UeaElement operator*(const GaussRational& s, const UeaElement& a) {
    UeaElement r;
    for (const auto& [m, c] : a.terms_) r.add(m, s * c);
    return r;
  }
  friend bool operator==(const UeaElement& a, const UeaElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const UeaElement& a, const UeaElement& b) { return !(a == b); }

 private:
  Terms terms_;
};

inline std::vector<int> identity_order(const BracketTable& t) {
  std::vector<int> rank(std::size_t(t.size()));
  std::iota(rank.begin(), rank.end(), 0);
  return rank;
}

/// PBW normal ordering: rewrites every word so its letters are nondecreasing
/// in the given order, using ab = ba + [a,b]. Each swap's correction term is
/// strictly shorter, so the rewriting terminates.
inline UeaElement pbw_normalize(const UeaElement::Terms& words, const BracketTable& table,
                                const std::vector<int>& rank) {
  if (int(rank.size()) != table.size())
    throw std::invalid_argument("order must rank every basis element");
  UeaElement out;
  std::vector<std::pair<Monomial, GaussRational>> work(words.begin(), words.end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    int inv = -1;
    for (int p = 0; p + 1 < m.degree(); ++p)
      if (rank[m.idx[std::size_t(p)]] > rank[m.idx[std::size_t(p) + 1]]) {
        inv = p;
        break;
      }
    if (inv < 0) {
      out.add(m, c);
      continue;
    }
    int a = m.idx[std::size_t(inv)];
    int b = m.idx[std::size_t(inv) + 1];
    Monomial swapped = m;
    std::swap(swapped.idx[std::size_t(inv)], swapped.idx[std::size_t(inv) + 1]);
    work.emplace_back(std::move(swapped), c);
    const auto& coords = table.br[std::size_t(a)][std::size_t(b)];
    for (int k = 0; k < table.size(); ++k) {
      if (coords[std::size_t(k)].is_zero()) continue;
      Monomial shorter;
      shorter.idx.reserve(std::size_t(m.degree()) - 1);
      shorter.idx.insert(shorter.idx.end(), m.idx.begin(), m.idx.begin() + inv);
      shorter.idx.push_back(std::uint8_t(k));
      shorter.idx.insert(shorter.idx.end(), m.idx.begin() + inv + 2, m.idx.end());
      work.emplace_back(std::move(shorter), c * coords[std::size_t(k)]);
    }
  }
  return out;
}

inline UeaElement pbw_normalize(const UeaElement& u, const BracketTable& table) {
  return pbw_normalize(u.terms(), table, identity_order(table));
}

/// Product in the enveloping algebra, returned in normal form.
inline UeaElement multiply(const UeaElement& a, const UeaElement& b, const BracketTable& table,
                           const std::vector<int>& rank) {
  UeaElement::Terms words;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma.concat(mb);
      auto it = words.find(m);
      GaussRational c = ca * cb;
      if (it == words.end())
        words.emplace(std::move(m), std::move(c));
      else
        it->second += c;
    }
  return pbw_normalize(words, table, rank);
}

inline UeaElement multiply(const UeaElement& a, const UeaElement& b, const BracketTable& table) {
  return multiply(a, b, table, identity_order(table));
}

/// Sum of the restricted weights of the letters.
inline Weight monomial_weight(const Monomial& m, const BracketTable& table) {
  Weight w;
  for (std::uint8_t i : m.idx) w = w + table.weights[i];
  return w;
}

/// Classification of basis letters for highest-weight module reductions.
enum class LetterKind { free_letter, cartan, annihilates };

/// Image of a normal-form element in the module induced from the character
/// `cartan_value`: trailing annihilating letters kill the term, Cartan
/// letters next to the vacuum evaluate to scalars, and the surviving free
/// prefix is re-indexed into `sub`.
inline UeaElement induced_reduce(const UeaElement& normal, const BracketTable& table,
                                 const std::vector<LetterKind>& kind,
                                 const std::vector<Rational>& cartan_value,
                                 const std::vector<int>& sub_index) {
  UeaElement out;
  for (const auto& [m, c] : normal.terms()) {
    GaussRational coeff = c;
    Monomial prefix;
    bool dead = false;
    int stage = 0;  // 0 = free prefix, 1 = cartan block, 2 = tail
    for (std::uint8_t letter : m.idx) {
      LetterKind k = kind[letter];
      if (k == LetterKind::free_letter) {
        if (stage != 0) throw std::logic_error("monomial not in induced normal form");
        prefix.idx.push_back(std::uint8_t(sub_index[letter]));
      } else if (k == LetterKind::cartan) {
        if (stage > 1) throw std::logic_error("monomial not in induced normal form");
        stage = 1;
        coeff *= GaussRational(cartan_value[letter]);
      } else {
        stage = 2;
        dead = true;
        break;
      }
    }
    if (!dead) out.add(prefix, coeff);
  }
  return out;
}

/// Rewrites an element over `src` as an element over `dst` (same ambient
/// algebra), normal-ordered in dst's canonical order.
inline UeaElement convert_basis(const UeaElement& u, const BracketTable& src,
                                const BracketTable& dst) {
  std::vector<UeaElement> letter_image(std::size_t(src.size()));
  for (int i = 0; i < src.size(); ++i) {
    auto coords = dst.coords(src.elems[std::size_t(i)]);
    UeaElement e;
    for (int j = 0; j < dst.size(); ++j)
      if (!coords[std::size_t(j)].is_zero())
        e.add(Monomial({std::uint8_t(j)}), coords[std::size_t(j)]);
    letter_image[std::size_t(i)] = std::move(e);
  }
  UeaElement out;
  for (const auto& [m, c] : u.terms()) {
    UeaElement acc = UeaElement::one();
    for (std::uint8_t letter : m.idx) acc = multiply(acc, letter_image[letter], dst);
    out = out + c * acc;
  }
  return out;
}

/// Exponents (i, j, k) of a normal monomial over a 3-letter basis.
inline std::array<int, 3> exponent_triple(const Monomial& m) {
  std::array<int, 3> e{0, 0, 0};
  for (std::uint8_t i : m.idx) {
    if (i > 2) throw std::invalid_argument("exponent_triple expects a 3-letter basis");
    ++e[i];
  }
  return e;
}

inline std::string monomial_pretty(const Monomial& m, const BracketTable& table) {
  if (m.empty()) return "1";
  std::string s;
  std::size_t p = 0;
  while (p < m.idx.size()) {
    std::size_t q = p;
    while (q < m.idx.size() && m.idx[q] == m.idx[p]) ++q;
    if (!s.empty()) s += " ";
    s += table.names[m.idx[p]];
    if (q - p > 1) s += "^" + std::to_string(q - p);
    p = q;
  }
  return s;
}

inline std::string uea_pretty(const UeaElement& u, const BracketTable& table) {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : u.terms()) {
    std::string coeff;
    bool suppress_one = !m.empty();
    GaussRational cc = c;
    bool negative = (cc.im == 0 && cc.re < 0) || (cc.re == 0 && cc.im < 0);
    if (!s.empty()) {
      s += negative ? " - " : " + ";
      if (negative) cc = -cc;
    } else if (negative && suppress_one && cc == GaussRational(-1)) {
      s += "-";
      cc = -cc;
    }
    if (!(suppress_one && cc == GaussRational(1))) {
      std::string cs = gauss_pretty(cc);
      if (suppress_one && (cc.im != 0 && cc.re != 0)) cs = "(" + cs + ")";
      coeff = cs + (suppress_one ? " " : "");
    }
    s += coeff + (m.empty() ? "" : monomial_pretty(m, table));
  }
  return s;
}

}  // namespace ido

#endif
