#ifndef IDO_KFLAT_HPP
#define IDO_KFLAT_HPP

#include <vector>

#include "ido/uea.hpp"

namespace ido {
namespace kflat {

/// Element of U(k) over the ordered sl(2)-triple {Z+, Z-, Z0} of the
/// complexified maximal compact subalgebra.
struct KElement {
  UeaElement element;

  friend bool operator==(const KElement& a, const KElement& b) {
    return a.element == b.element;
  }
};

/// Sub-table {B1, B2, B3} of the Iwasawa basis, used as an intermediate
/// carrier before the sl(2)-triple relabeling.
inline const BracketTable& kb_table() {
  static const BracketTable t = make_table(
      {"B1", "B2", "B3"}, {sl3::B1(), sl3::B2(), sl3::B3()}, {Weight(), Weight(), Weight()});
  return t;
}

/// The unique u-flat in U(k) with u-flat (x) 1 = u (x) 1 in the module
/// induced from the character -(lambda_ps + rho) of the minimal parabolic:
/// normal-order u in the k < Cartan < n order, evaluate Cartan letters at the
/// character, kill terms ending in n. The split form makes the conjugation
/// tau act trivially on the result.
inline KElement flatten(const UeaElement& u_nbar, const Weight& lambda_ps) {
  const BracketTable& iw = iwasawa_table();
  UeaElement over_iw = convert_basis(u_nbar, nbar_table(), iw);

  Weight mu = -(lambda_ps + rho());
  std::vector<Rational> cartan_value(8);
  cartan_value[3] = pair_coroot(mu, PosRoot::alpha);
  cartan_value[4] = pair_coroot(mu, PosRoot::beta);
  using K = LetterKind;
  std::vector<K> kinds = {K::free_letter, K::free_letter, K::free_letter, K::cartan,
                          K::cartan,      K::annihilates, K::annihilates, K::annihilates};
  std::vector<int> sub_index = {0, 1, 2, -1, -1, -1, -1, -1};
  UeaElement over_b = induced_reduce(over_iw, iw, kinds, cartan_value, sub_index);

  return KElement{convert_basis(over_b, kb_table(), kz_table())};
}

/// Relabels Z_j -> E_j; structure constants match, so monomials carry over
/// unchanged.
inline UeaElement to_sl2(const KElement& k) { return k.element; }

}  // namespace kflat
}  // namespace ido

#endif
