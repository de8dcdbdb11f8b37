#ifndef IDO_SELFTEST_HPP
#define IDO_SELFTEST_HPP

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ido/hypergeo.hpp"
#include "ido/pipeline.hpp"

namespace ido {
namespace selftest {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

struct Failure : std::runtime_error {
  explicit Failure(const std::string& m) : std::runtime_error(m) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

inline UeaElement nf(std::vector<std::uint8_t> word, const BracketTable& t = nbar_table()) {
  return pbw_normalize(UeaElement::word(std::move(word)), t);
}

inline UeaElement xcy_normal_form() { return nf({0, 1}) + nf({1, 0}); }

/// Matrix on Pol_n of a differential operator sum_i c_i t^{p_i} (d/dt)^{m_i},
/// built with headroom rows; throws if the operator leaves Pol_n.
struct OdeTerm {
  GaussRational coeff;
  int t_power = 0;
  int d_order = 0;
};

inline Mat ode_operator_matrix(int n, const std::vector<OdeTerm>& terms) {
  int headroom = n + 1;
  for (const auto& t : terms) headroom = std::max(headroom, n + 1 + t.t_power);
  Mat big(headroom, n + 1);
  for (const auto& t : terms)
    for (int k = 0; k <= n; ++k) {
      if (k < t.d_order) continue;
      Rational fall = 1;
      for (int j = 0; j < t.d_order; ++j) fall *= (k - j);
      big(k - t.d_order + t.t_power, k) += t.coeff * GaussRational(fall);
    }
  Mat out(n + 1, n + 1);
  for (int r = 0; r < headroom; ++r)
    for (int c = 0; c <= n; ++c) {
      if (r <= n) {
        out(r, c) = big(r, c);
      } else if (!big(r, c).is_zero()) {
        throw Failure("ODE operator leaves Pol_n");
      }
    }
  return out;
}

/// Expands u-flat back into the full algebra and reduces it in the
/// nbar < Cartan < n normal form of the module induced from -(lambda+rho).
/// This is the independent re-expansion route for the flattening.
inline UeaElement reexpand_flat(const kflat::KElement& flat, const Weight& lambda_ps) {
  const BracketTable& full = standard_table();
  UeaElement over_full = convert_basis(flat.element, kz_table(), full);
  Weight mu = -(lambda_ps + rho());
  std::vector<Rational> cartan_value(8);
  cartan_value[3] = pair_coroot(mu, PosRoot::alpha);
  cartan_value[4] = pair_coroot(mu, PosRoot::beta);
  std::vector<int> sub_index = {0, 1, 2, -1, -1, -1, -1, -1};
  return induced_reduce(over_full, full, verma::standard_kinds(), cartan_value, sub_index);
}

inline bool same_span(const std::vector<su2::PolyVector>& a,
                      const std::vector<su2::PolyVector>& b, int n) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto echelon = [&](const std::vector<su2::PolyVector>& v) {
    Mat m(int(v.size()), n + 1);
    for (int r = 0; r < int(v.size()); ++r)
      for (int c = 0; c <= n; ++c) m(r, c) = v[std::size_t(r)].c[std::size_t(c)];
    rref(m);
    return m;
  };
  return echelon(a) == echelon(b);
}

}  // namespace detail

/// Every named check of the golden and property suites. The character table
/// is injectable so a corrupted fixture can serve as a negative control.
inline std::vector<CheckResult> run_all(const qmchar::CharacterTable& table = qmchar::char_table()) {
  using namespace detail;
  namespace hg = hypergeo;
  namespace pl = pipeline;
  namespace qc = qmchar;

  std::vector<std::pair<std::string, std::function<void()>>> checks;
  auto add = [&](std::string name, std::function<void()> fn) {
    checks.emplace_back(std::move(name), std::move(fn));
  };

  const BracketTable& nbar = nbar_table();
  const BracketTable& full = standard_table();

  // ---- algebra core goldens -------------------------------------------
  add("commutator-x-y", [] {
    require(commutator(sl3::X(), sl3::Y()) == GaussRational(-1) * sl3::Z(), "[X,Y] != -Z");
    require(commutator(sl3::E12(), sl3::X()) == sl3::Halpha(), "[E12,X] != Ha");
    require(commutator(sl3::X(), sl3::X()).is_zero(), "[X,X] != 0");
  });
  add("theta-definition", [] {
    require(cartan_theta(sl3::X()) == GaussRational(-1) * sl3::E12(), "theta(X) != -E12");
    require(cartan_theta(sl3::B3()) == sl3::B3(), "theta fixes k");
    require(cartan_theta(sl3::Halpha()) == GaussRational(-1) * sl3::Halpha(), "theta on a");
  });
  add("pbw-golden-words", [&] {
    require(nf({1, 0}) == nf({0, 1}) + UeaElement::generator(2), "YX != XY + Z");
    require(nf({0, 1, 1, 0}) - nf({1, 0, 0, 1}) == UeaElement::zero(), "XY2X != YX2Y");
    require(nf({0, 0}) == UeaElement::word({0, 0}), "X.X != X^2");
  });
  add("monomial-weight", [&] {
    require(monomial_weight(Monomial({0}), nbar) == -alpha_root(), "wt(X) != -alpha");
    require(monomial_weight(Monomial({0, 1, 1, 0}), nbar) == Rational(-2) * rho(),
            "wt(XY^2X) != -2rho");
    require(monomial_weight(Monomial(), nbar) == Weight(), "wt(1) != 0");
  });
  add("jacobi-identity", [&] {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) {
          const GElement &a = full.elems[std::size_t(i)], &b = full.elems[std::size_t(j)],
                         &c = full.elems[std::size_t(k)];
          GElement s = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                       commutator(commutator(c, a), b);
          require(s.is_zero(), "Jacobi identity fails");
        }
  });
  add("theta-bracket-preservation", [&] {
    for (int i = 0; i < 8; ++i) {
      GElement t = cartan_theta(cartan_theta(full.elems[std::size_t(i)]));
      require(t == full.elems[std::size_t(i)], "theta not an involution");
      for (int j = 0; j < 8; ++j)
        require(cartan_theta(commutator(full.elems[std::size_t(i)], full.elems[std::size_t(j)])) ==
                    commutator(cartan_theta(full.elems[std::size_t(i)]),
                               cartan_theta(full.elems[std::size_t(j)])),
                "theta does not preserve brackets");
    }
  });
  add("pbw-confluence", [&] {
    std::mt19937 rng(12345);
    std::vector<int> reversed = {7, 6, 5, 4, 3, 2, 1, 0};
    std::vector<int> shuffled = {3, 0, 6, 1, 7, 2, 5, 4};
    for (int trial = 0; trial < 200; ++trial) {
      int len = 1 + int(rng() % 6);
      std::vector<std::uint8_t> word;
      for (int p = 0; p < len; ++p) word.push_back(std::uint8_t(rng() % 8));
      UeaElement::Terms w;
      w.emplace(Monomial(word), GaussRational(1));
      UeaElement direct = pbw_normalize(w, full, identity_order(full));
      for (const auto& order : {reversed, shuffled}) {
        UeaElement other = pbw_normalize(w, full, order);
        UeaElement back = pbw_normalize(other.terms(), full, identity_order(full));
        require(back == direct, "normal forms disagree across orders");
      }
    }
  });
  add("pbw-associativity", [&] {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
      auto rand_word = [&] {
        int len = 1 + int(rng() % 3);
        std::vector<std::uint8_t> word;
        for (int p = 0; p < len; ++p) word.push_back(std::uint8_t(rng() % 8));
        return UeaElement::word(std::move(word), grat(long(rng() % 5) - 2, 1 + long(rng() % 2)));
      };
      UeaElement a = rand_word(), b = rand_word(), c = rand_word();
      require(multiply(multiply(a, b, full), c, full) == multiply(a, multiply(b, c, full), full),
              "multiplication not associative");
    }
  });
  add("weight-additivity", [&] {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint8_t> u, v;
      for (int p = 0; p < int(rng() % 4); ++p) u.push_back(std::uint8_t(rng() % 8));
      for (int p = 0; p < int(rng() % 4); ++p) v.push_back(std::uint8_t(rng() % 8));
      Monomial mu(u), mv(v);
      require(monomial_weight(mu.concat(mv), full) ==
                  monomial_weight(mu, full) + monomial_weight(mv, full),
              "monomial weight not additive");
    }
  });

  // ---- Verma goldens ----------------------------------------------------
  add("verma-action-goldens", [&] {
    verma::VermaVector x_rho{UeaElement::generator(0), rho()};
    require(verma_act(UeaElement::generator(full.index_of("E12")), x_rho).element.is_zero(),
            "E12 . X (x) 1 must vanish in M(rho)");
    require(verma_act(UeaElement::generator(full.index_of("E23")), x_rho).element.is_zero(),
            "E23 . X (x) 1 must vanish in M(rho)");
    Weight lam(rat(2), rat(1));
    verma::VermaVector x_lam{UeaElement::generator(0), lam};
    UeaElement got = verma_act(UeaElement::generator(full.index_of("E12")), x_lam).element;
    UeaElement expect = (GaussRational(pair_coroot(lam, PosRoot::alpha) - 1)) * UeaElement::one();
    require(got == expect, "E12 . X (x) 1 must evaluate <lambda,av>-1");
  });
  add("singular-vector-goldens", [&] {
    auto svs = verma::singular_vectors(rho(), beta_root());
    require(svs.size() == 1 && svs[0].element == UeaElement::generator(0),
            "singular vector at (rho, beta) must be X");
    svs = verma::singular_vectors(rho_half(), -rho_half());
    require(svs.size() == 1 && svs[0].element == xcy_normal_form(),
            "singular vector at (rho/2, -rho/2) must be 2XY + Z");
    svs = verma::singular_vectors(rho(), -rho());
    require(svs.size() == 1 && svs[0].element == nf({0, 1, 1, 0}),
            "singular vector at (rho, -rho) must be the normal form of XY^2X");
  });
  add("linkage-goldens", [&] {
    require(verma::linked(rho(), -rho()).has_value(), "rho must be linked to -rho");
    auto self = verma::linked(rho_half(), rho_half());
    require(self.has_value() && self->steps.empty(), "lambda links to itself by t = 0");
    auto half = verma::linked(rho_half(), -rho_half());
    require(half.has_value(), "rho/2 links to -rho/2 through s_{alpha+beta}");
  });
  add("classify-goldens", [&] {
    std::vector<Weight> expect = {Weight(rat(-1), rat(-1)), Weight(rat(-1), rat(0)),
                                  Weight(rat(0), rat(-1)), Weight(rat(0), rat(1)),
                                  Weight(rat(1), rat(0))};
    require(verma::classify_targets(rho()) == expect, "classification at rho");
    std::vector<Weight> half = {-rho_half()};
    require(verma::classify_targets(rho_half()) == half, "classification at rho/2");
    require(verma::classify_targets(Weight(rat(1, 3), rat(1, 5))).empty(),
            "generic parameter must classify empty");
  });
  add("singular-annihilation-recheck", [&] {
    // Drops up to 6 cover every pair of integral weights with |coeffs| <= 3.
    for (long i = -3; i <= 3; ++i)
      for (long j = -3; j <= 3; ++j)
        for (long a = 0; a <= 6; ++a)
          for (long b = 0; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            Weight lam(rat(i), rat(j));
            Weight nu = lam - Weight(rat(a), rat(b));
            auto svs = verma::singular_vectors(lam, nu);
            require(svs.size() <= 1, "Hom-space dimension exceeds 1");
            for (const auto& v : svs) {
              require(!v.element.is_zero(), "returned singular vector is zero");
              require(
                  verma_act(UeaElement::generator(full.index_of("E12")), v).element.is_zero() &&
                      verma_act(UeaElement::generator(full.index_of("E23")), v).element.is_zero(),
                  "solver output fails the annihilation recheck");
            }
          }
  });
  add("linkage-soundness", [&] {
    for (long i = -3; i <= 3; ++i)
      for (long j = -3; j <= 3; ++j)
        for (long k = -3; k <= 3; ++k)
          for (long l = -3; l <= 3; ++l) {
            Weight lam(rat(i), rat(j)), nu(rat(k), rat(l));
            if (lam == nu) continue;
            if (verma::linked(lam, nu))
              require(!verma::singular_vectors(lam, nu).empty(),
                      "linked pair without singular vector");
          }
  });
  add("composition-closure", [&] {
    auto y2 = verma::singular_vectors(beta_root(), -beta_root());
    require(y2.size() == 1 && y2[0].element == UeaElement::word({1, 1}),
            "singular vector at (beta, -beta) must be Y^2");
    UeaElement y2x = multiply(y2[0].element, UeaElement::generator(0), nbar);
    require(verma::normalize_singular(y2x) ==
                verma::singular_vectors(rho(), -beta_root())[0].element,
            "composite Y^2 . X must match the direct search");
    UeaElement xy2x =
        multiply(multiply(UeaElement::generator(0), y2[0].element, nbar),
                 UeaElement::generator(0), nbar);
    require(verma::normalize_singular(xy2x) ==
                verma::singular_vectors(rho(), -rho())[0].element,
            "composite X . Y^2 . X must match the direct search");
  });

  // ---- quaternion model --------------------------------------------------
  add("q8-structure", [&] {
    const auto& mult = qc::q8_mult_table();
    for (int j = 1; j < 4; ++j)
      require(mult[std::size_t(j)][std::size_t(j)] == 4, "m_j^2 != -m_0");
    require(mult[1][2] == 3, "m_1 m_2 != m_3");
    for (int g = 0; g < 8; ++g)
      for (int h = 0; h < 8; ++h) {
        int p = mult[std::size_t(g)][std::size_t(h)];
        require(qc::q8_mat3()[std::size_t(g)] * qc::q8_mat3()[std::size_t(h)] ==
                    qc::q8_mat3()[std::size_t(p)],
                "covering map is not a homomorphism");
      }
  });
  add("chartable-values", [&] {
    long expect[4][4] = {{1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}};
    for (int row = 0; row < 4; ++row)
      for (int j = 0; j < 4; ++j) {
        GaussRational v = qc::character_value(qc::all_irreps()[std::size_t(row)],
                                              qc::Q8Element{j}, table);
        require(v == grat(expect[row][j]), "sign character deviates from the table");
        GaussRational vneg = qc::character_value(qc::all_irreps()[std::size_t(row)],
                                                 qc::Q8Element{j + 4}, table);
        require(v == vneg, "sign characters must agree at g and -g");
      }
    require(qc::character_value(qc::MIrrepLabel::H, qc::Q8Element{0}, table) == grat(2) &&
                qc::character_value(qc::MIrrepLabel::H, qc::Q8Element{4}, table) == grat(-2),
            "H must take +-2 at +-identity");
    for (int j = 1; j < 4; ++j)
      require(qc::character_value(qc::MIrrepLabel::H, qc::Q8Element{j}, table).is_zero() &&
              qc::character_value(qc::MIrrepLabel::H, qc::Q8Element{j + 4}, table).is_zero(),
              "H must vanish off +-identity");
  });
  add("char-orthogonality", [&] {
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        GaussRational s;
        for (int g = 0; g < 8; ++g)
          s += qc::character_value(qc::all_irreps()[std::size_t(a)], qc::Q8Element{g}, table) *
               qc::character_value(qc::all_irreps()[std::size_t(b)], qc::Q8Element{g}, table)
                   .conj();
        require(s == grat(a == b ? 8 : 0), "rows are not orthonormal");
      }
    int reps[5] = {0, 4, 1, 2, 3};
    int class_size[5] = {1, 1, 2, 2, 2};
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        GaussRational s;
        for (int r = 0; r < 5; ++r)
          s += qc::character_value(qc::all_irreps()[std::size_t(r)], qc::Q8Element{reps[x]},
                                   table) *
               qc::character_value(qc::all_irreps()[std::size_t(r)], qc::Q8Element{reps[y]}, table)
                   .conj();
        require(s == grat(x == y ? 8 / class_size[x] : 0), "columns are not orthogonal");
      }
    int dim2 = 0;
    for (int d : table.dim) dim2 += d * d;
    require(dim2 == 8, "sum of squared dimensions must be 8");
  });
  add("ad-character-goldens", [&] {
    require(qc::ad_character(UeaElement::generator(0), table) == qc::MIrrepLabel::pm,
            "character of X");
    require(qc::ad_character(xcy_normal_form(), table) == qc::MIrrepLabel::mm,
            "character of 2XY + Z");
    require(qc::ad_character(nf({0, 1, 1, 0}), table) == qc::MIrrepLabel::pp,
            "character of XY^2X");
    require(qc::ad_character(UeaElement::generator(1), table) == qc::MIrrepLabel::mp,
            "character of Y");
  });
  add("ad-character-product-rule", [&] {
    std::vector<UeaElement> lines = {UeaElement::generator(0), UeaElement::generator(1),
                                     UeaElement::generator(2), xcy_normal_form(),
                                     nf({0, 1, 1, 0})};
    for (const auto& line : lines) {
      qc::MIrrepLabel l = qc::ad_character(line, table);
      GaussRational v1 = qc::character_value(l, qc::Q8Element{1}, table);
      GaussRational v2 = qc::character_value(l, qc::Q8Element{2}, table);
      GaussRational v3 = qc::character_value(l, qc::Q8Element{3}, table);
      require(v3 == v1 * v2, "value at m_3 must be the product of m_1 and m_2 values");
    }
  });
  add("omega-compatibility", [&] {
    Mat ep(2, 2), em(2, 2), e0(2, 2);
    ep(0, 1) = GaussRational(1);
    em(1, 0) = GaussRational(1);
    e0(0, 0) = GaussRational(1);
    e0(1, 1) = GaussRational(-1);
    const Mat sl2m[3] = {ep, em, e0};
    const BracketTable& kz = kz_table();
    for (int j = 0; j < 4; ++j) {
      Mat m3 = qc::q8_mat3()[std::size_t(j)];
      Mat m3i = inverse(m3);
      Mat m2 = qc::q8_mat2()[std::size_t(j)];
      Mat m2i = inverse(m2);
      for (int k = 0; k < 3; ++k) {
        GElement conj(m3 * kz.elems[std::size_t(k)].m * m3i);
        auto coords = kz.coords(conj);
        Mat lhs(2, 2);
        for (int l = 0; l < 3; ++l) lhs = lhs + coords[std::size_t(l)] * sl2m[l];
        Mat rhs = m2 * sl2m[k] * m2i;
        require(lhs == rhs, "Omega_C does not intertwine the adjoint actions");
      }
    }
  });
  add("decompose-goldens", [&] {
    auto xcy_flat = kflat::to_sl2(kflat::flatten(xcy_normal_form(), -rho_half()));
    auto sol5 = su2::sol_space(xcy_flat, 5);
    require(sol5.size() == 2, "Sol_{XcY}(5) must be 2-dimensional");
    auto rep5 = qc::decompose_mrep(pl::restricted_action(sol5, 5), table);
    std::map<qc::MIrrepLabel, int> expect5 = {{qc::MIrrepLabel::H, 1}};
    require(rep5 == expect5, "Sol_{XcY}(5) must be H");

    auto x_flat = kflat::to_sl2(kflat::flatten(UeaElement::generator(0), -rho()));
    auto sol2 = su2::sol_space(x_flat, 2);
    require(sol2.size() == 1, "Sol_X(2) must be one-dimensional");
    auto rep2 = qc::decompose_mrep(pl::restricted_action(sol2, 2), table);
    std::map<qc::MIrrepLabel, int> expect2 = {{qc::MIrrepLabel::pm, 1}};
    require(rep2 == expect2, "Sol_X(2) must be (+,-)");

    std::array<Mat, 8> trivial;
    for (auto& m : trivial) m = Mat::identity(1);
    std::map<qc::MIrrepLabel, int> expect_triv = {{qc::MIrrepLabel::pp, 1}};
    require(qc::decompose_mrep(trivial, table) == expect_triv,
            "trivial representation must be (+,+)");
  });
  add("hom-multiplicity", [&] {
    std::map<qc::MIrrepLabel, int> rep = {{qc::MIrrepLabel::pm, 1}};
    require(qc::hom_multiplicity(rep, qc::MIrrepLabel::pm) == 1, "count of (+,-)");
    std::map<qc::MIrrepLabel, int> reph = {{qc::MIrrepLabel::H, 1}};
    require(qc::hom_multiplicity(reph, qc::MIrrepLabel::pp) == 0, "H contains no (+,+)");
    require(qc::hom_multiplicity({}, qc::MIrrepLabel::mm) == 0, "empty multiset");
  });

  // ---- flattening ---------------------------------------------------------
  add("flatten-goldens", [&] {
    GaussRational half_i(Rational(0), rat(1, 2));
    UeaElement xflat;
    xflat.add(Monomial({0}), half_i);
    xflat.add(Monomial({1}), half_i);
    require(kflat::flatten(UeaElement::generator(0), -rho()).element == xflat,
            "X-flat must be (i/2)(Z+ + Z-)");
    UeaElement yflat;
    yflat.add(Monomial({0}), grat(1, 2));
    yflat.add(Monomial({1}), grat(-1, 2));
    require(kflat::flatten(UeaElement::generator(1), -rho()).element == yflat,
            "Y-flat must be (1/2)(Z+ - Z-)");
    UeaElement xcyflat;
    xcyflat.add(Monomial({0, 0}), half_i);
    xcyflat.add(Monomial({1, 1}), -half_i);
    require(kflat::flatten(xcy_normal_form(), -rho_half()).element == xcyflat,
            "XcY-flat must be (i/2)(Z+^2 - Z-^2)");
  });
  add("to-sl2-relabeling", [&] {
    kflat::KElement k;
    k.element.add(Monomial({0, 1}), grat(1));
    require(kflat::to_sl2(k) == k.element, "relabeling must preserve monomials");
    const auto& kz = kz_table();
    const auto& s2 = sl2_table();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        require(kz.br[std::size_t(i)][std::size_t(j)] == s2.br[std::size_t(i)][std::size_t(j)],
                "structure constants must match across the relabeling");
  });
  add("flatten-reexpansion-oracle", [&] {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
      int len = 1 + int(rng() % 4);
      std::vector<std::uint8_t> word;
      for (int p = 0; p < len; ++p) word.push_back(std::uint8_t(rng() % 3));
      Weight lam(grat(long(rng() % 7) - 3, 1 + long(rng() % 3)).re,
                 grat(long(rng() % 7) - 3, 1 + long(rng() % 3)).re);
      UeaElement u = nf(word);
      kflat::KElement flat = kflat::flatten(u, lam);
      require(reexpand_flat(flat, lam) == u, "u-flat does not re-expand to u");
    }
  });
  add("flatten-degree1-lambda-independence", [&] {
    kflat::KElement x0 = kflat::flatten(UeaElement::generator(0), Weight(rat(2), rat(-5)));
    kflat::KElement y0 = kflat::flatten(UeaElement::generator(1), Weight(rat(2), rat(-5)));
    for (long i = -2; i <= 2; ++i)
      for (long j = -2; j <= 2; ++j) {
        Weight lam(rat(i, 2), rat(j, 3));
        require(kflat::flatten(UeaElement::generator(0), lam) == x0,
                "X-flat must not depend on lambda");
        require(kflat::flatten(UeaElement::generator(1), lam) == y0,
                "Y-flat must not depend on lambda");
      }
  });
  add("flatten-product-identity", [&] {
    const auto& kz = kz_table();
    kflat::KElement xf = kflat::flatten(UeaElement::generator(0), -rho_half());
    kflat::KElement yf = kflat::flatten(UeaElement::generator(1), -rho_half());
    UeaElement anti = multiply(xf.element, yf.element, kz) + multiply(yf.element, xf.element, kz);
    require(anti == kflat::flatten(xcy_normal_form(), -rho_half()).element,
            "(XcY)-flat must equal the anticommutator of the flats at -rho/2");
  });

  // ---- polynomial model ----------------------------------------------------
  add("dpi-goldens", [&] {
    Mat eplus1 = su2::dpi_matrix(UeaElement::generator(0), 1).m;
    Mat expect1(2, 2);
    expect1(0, 1) = grat(-1);
    require(eplus1 == expect1, "dpi_1(E+) must send t to -1");

    auto x_flat = kflat::to_sl2(kflat::flatten(UeaElement::generator(0), -rho()));
    Mat got = su2::dpi_matrix(x_flat, 2).m;
    GaussRational mhi(Rational(0), rat(-1, 2));  // -i/2
    // -(i/2)((1 - t^2) d/dt + 2t)
    Mat expect = ode_operator_matrix(
        2, {OdeTerm{mhi, 0, 1}, OdeTerm{-mhi, 2, 1}, OdeTerm{mhi * grat(2), 1, 0}});
    require(got == expect, "dpi_2(X-flat) deviates from the closed form");

    Mat e0 = su2::dpi_matrix(UeaElement::generator(2), 2).m;
    Mat d(3, 3);
    d(0, 0) = grat(2);
    d(2, 2) = grat(-2);
    require(e0 == d, "dpi_2(E0) must be diag(2, 0, -2)");
  });
  add("sl2-commutation-relations", [&] {
    for (int n = 0; n <= 20; ++n) {
      Mat p = su2::dpi_generator(0, n), m = su2::dpi_generator(1, n),
          z = su2::dpi_generator(2, n);
      require(p * m - m * p == z, "[E+,E-] != E0");
      require(z * p - p * z == grat(2) * p, "[E0,E+] != 2E+");
      require(z * m - m * z == grat(-2) * m, "[E0,E-] != -2E-");
    }
  });
  add("group-action-goldens", [&] {
    Mat m1 = su2::group_action_matrix(qc::Q8Element{1}, 2).m;
    Mat e1(3, 3);
    e1(0, 0) = grat(-1);
    e1(1, 1) = grat(1);
    e1(2, 2) = grat(-1);
    require(m1 == e1, "pi_2(m_1) deviates from the closed form");
    Mat m2 = su2::group_action_matrix(qc::Q8Element{2}, 2).m;
    Mat e2(3, 3);
    e2(2, 0) = grat(1);
    e2(1, 1) = grat(-1);
    e2(0, 2) = grat(1);
    require(m2 == e2, "pi_2(m_2) deviates from the closed form");
    Mat mneg = su2::group_action_matrix(qc::Q8Element{4}, 3).m;
    require(mneg == GaussRational(-1) * Mat::identity(4), "pi_3(-m_0) must be -id");
  });
  add("pin-multiplicativity", [&] {
    const auto& mult = qc::q8_mult_table();
    for (int n = 0; n <= 20; ++n) {
      std::array<Mat, 8> pin;
      for (int g = 0; g < 8; ++g) pin[std::size_t(g)] = su2::group_action_matrix(qc::Q8Element{g}, n).m;
      for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 8; ++h)
          require(pin[std::size_t(g)] * pin[std::size_t(h)] ==
                      pin[std::size_t(mult[std::size_t(g)][std::size_t(h)])],
                  "pi_n is not multiplicative");
    }
  });
  add("sol-space-goldens", [&] {
    auto x_flat = kflat::to_sl2(kflat::flatten(UeaElement::generator(0), -rho()));
    auto sol2 = su2::sol_space(x_flat, 2);
    su2::PolyVector one_minus_t2(2);
    one_minus_t2.c[0] = grat(1);
    one_minus_t2.c[2] = grat(-1);
    require(sol2.size() == 1 && sol2[0] == one_minus_t2, "Sol_X(2) must be {1 - t^2}");
    require(su2::sol_space(x_flat, 3).empty(), "Sol_X(3) must vanish");

    auto xcy_flat = kflat::to_sl2(kflat::flatten(xcy_normal_form(), -rho_half()));
    auto sol4 = su2::sol_space(xcy_flat, 4);
    su2::PolyVector one_plus_t4(4);
    one_plus_t4.c[0] = grat(1);
    one_plus_t4.c[4] = grat(1);
    require(sol4.size() == 1 && sol4[0] == one_plus_t4, "Sol_{XcY}(4) must be {1 + t^4}");

    auto y_flat = kflat::to_sl2(kflat::flatten(UeaElement::generator(1), -rho()));
    auto common0 = su2::common_sol({x_flat, y_flat}, 0);
    require(common0.size() == 1 && common0[0].c[0] == grat(1), "Sol_{X,Y}(0) must be {1}");
    require(su2::common_sol({x_flat, y_flat}, 2).empty(), "Sol_{X,Y}(2) must vanish");
    require(su2::common_sol({x_flat}, 7) == su2::sol_space(x_flat, 7),
            "singleton system must match sol_space");
  });
  add("kernel-annihilation", [&] {
    for (const Weight& lam : {-rho(), -rho_half()})
      for (const auto& rec : pl::build_operators(lam)) {
        UeaElement flat = kflat::to_sl2(rec.u_flat);
        for (int n = 0; n <= 40; ++n) {
          su2::PolyOpMatrix op = su2::dpi_matrix(flat, n);
          for (const auto& v : su2::sol_space(flat, n))
            require(su2::apply(op, v).is_zero(), "kernel vector not annihilated");
        }
      }
  });
  add("sol-equivariance", [&] {
    for (const Weight& lam : {-rho(), -rho_half()})
      for (const auto& rec : pl::build_operators(lam)) {
        UeaElement flat = kflat::to_sl2(rec.u_flat);
        for (int n = 0; n <= 40; ++n) {
          auto sol = su2::sol_space(flat, n);
          if (!sol.empty()) pl::restricted_action(sol, n);  // throws if not invariant
        }
      }
  });
  add("containments-rho", [&] {
    auto ops = pl::build_operators(-rho());
    auto flat_of = [&](const std::string& label) {
      for (const auto& r : ops)
        if (r.label == label) return kflat::to_sl2(r.u_flat);
      throw Failure("missing operator " + label);
    };
    UeaElement x = flat_of("X"), y = flat_of("Y"), y2x = flat_of("Y2X"), x2y = flat_of("X2Y"),
               xy2x = flat_of("XY2X");
    for (int n = 0; n <= 40; ++n) {
      for (const auto& v : su2::sol_space(x, n)) {
        require(su2::apply(su2::dpi_matrix(y2x, n), v).is_zero(), "Sol_X not inside Sol_{Y2X}");
        require(su2::apply(su2::dpi_matrix(xy2x, n), v).is_zero(), "Sol_X not inside Sol_{XY2X}");
      }
      for (const auto& v : su2::sol_space(y, n)) {
        require(su2::apply(su2::dpi_matrix(x2y, n), v).is_zero(), "Sol_Y not inside Sol_{X2Y}");
        require(su2::apply(su2::dpi_matrix(xy2x, n), v).is_zero(), "Sol_Y not inside Sol_{XY2X}");
      }
    }
  });

  // ---- hypergeometric appendix ---------------------------------------------
  add("f21-truncation-goldens", [&] {
    auto u4 = hg::f21_truncate(hg::F21Params(rat(-1), rat(-3, 4), rat(3, 4)), 4, 4);
    su2::PolyVector expect(4);
    expect.c[0] = grat(1);
    expect.c[4] = grat(1);
    require(u4 && *u4 == expect, "u_4 must truncate to 1 + t^4");
    auto u0 = hg::f21_truncate(hg::F21Params(rat(0), rat(1, 4), rat(3, 4)), 4, 0);
    require(u0 && u0->c[0] == grat(1) && u0->degree_bound() == 0, "u_0 must be 1");
    require(!hg::u_poly(3) && !hg::v_poly(3), "neither u_3 nor v_3 is a polynomial");
  });
  add("euler-goldens", [&] {
    hg::F21Params p(rat(-1), rat(-3, 4), rat(3, 4));
    su2::PolyVector f(1);
    f.c[0] = grat(1);
    f.c[1] = grat(1);  // 1 + x
    require(hg::euler_apply(p, f).is_zero(), "D[-1,-3/4,3/4] must annihilate 1 + x");
    hg::F21Params p0(rat(0), rat(5, 7), rat(1, 2));
    su2::PolyVector c0(0);
    c0.c[0] = grat(3);
    require(hg::euler_apply(p0, c0).is_zero(), "D[0,b,c] must annihilate constants");
    for (int n = 0; n <= 40; ++n) {
      hg::F21Params pn(rat(-n, 4), rat(-(n - 1), 4), rat(3, 4));
      auto trunc = hg::f21_truncate(pn, 1, 0);
      if (trunc) require(hg::euler_apply(pn, *trunc).is_zero(), "D must annihilate 2F1");
    }
  });
  add("t-operator-goldens", [&] {
    auto u4 = hg::u_poly(4);
    require(u4 && hg::t_operator_apply(4, *u4).is_zero(), "T[4] must annihilate 1 + t^4");
    auto v5 = hg::v_poly(5);
    require(v5 && hg::t_operator_apply(5, *v5).is_zero(), "T[5] must annihilate v_5");
    su2::PolyVector z(3);
    require(hg::t_operator_apply(7, z).is_zero(), "T[n] 0 = 0");
  });
  add("t-substitution-identity", [&] {
    // 16 t^2 D[-n/4, -(n-1)/4, 3/4; x] under x = t^4, applied monomial-wise
    // with d/dx = (1/4) t^{-3} d/dt.
    for (int n = 0; n <= 40; ++n) {
      Rational a = rat(-n, 4), b = rat(-(n - 1), 4), c = rat(3, 4);
      for (int k = 0; k <= 40; ++k) {
        // 16 t^2 D t^k = [k(k-4) + 4ck] t^{k-2}
        //             + [-k(k-4) - 4(a+b+1)k - 16ab] t^{k+2}
        Rational coeff_low = Rational(k) * Rational(k - 4) + 4 * c * Rational(k);
        Rational coeff_high =
            -(Rational(k) * Rational(k - 4)) - 4 * (a + b + 1) * Rational(k) - 16 * a * b;
        su2::PolyVector mono(k);
        mono.c[std::size_t(k)] = grat(1);
        su2::PolyVector got = hg::t_operator_apply(n, mono);
        su2::PolyVector expect(k + 2);
        if (k >= 2) expect.c[std::size_t(k - 2)] = GaussRational(coeff_low);
        else require(coeff_low == 0, "negative powers must cancel");
        expect.c[std::size_t(k + 2)] = GaussRational(coeff_high);
        require(got == expect, "T[n;t] deviates from 16 t^2 D under x = t^4");
      }
    }
  });
  add("gauss-at-one-goldens", [&] {
    require(hg::gauss_at_one(hg::F21Params(rat(-1), rat(-3, 4), rat(3, 4))) == rat(2),
            "2F1[-1,-3/4,3/4;1] must be 2");
    require(hg::gauss_at_one(hg::F21Params(rat(0), rat(9, 5), rat(1, 3))) == rat(1),
            "2F1[0,b,c;1] must be 1");
    require(hg::gauss_at_one(hg::F21Params(rat(-2), rat(-7, 4), rat(3, 4))) != 0,
            "u_8(1) must be nonzero");
  });
  add("gauss-telescoped-ratio", [&] {
    // Terminating case of the classical evaluation at 1:
    // 2F1[-k, b, c; 1] = (c-b)_k / (c)_k.
    for (long k = 0; k <= 25; ++k) {
      Rational b = rat(1, 4) - Rational(k);  // b = -k + 1/4
      Rational c = rat(3, 4);
      Rational sum = hg::gauss_at_one(hg::F21Params(Rational(-k), b, c));
      Rational ratio = pochhammer(c - b, std::size_t(k)) / pochhammer(c, std::size_t(k));
      require(sum == ratio, "finite sum deviates from the telescoped ratio");
      require(sum != 0, "u_{4k}(1) must be nonzero");
    }
  });
  add("fundamental-pair-span", [&] {
    auto xcy_flat = kflat::to_sl2(kflat::flatten(xcy_normal_form(), -rho_half()));
    for (int n = 0; n <= 40; ++n) {
      std::vector<su2::PolyVector> members;
      auto pad = [&](const su2::PolyVector& p) {
        su2::PolyVector q(n);
        for (int k = 0; k <= p.degree_bound() && k <= n; ++k) q.c[std::size_t(k)] = p.c[std::size_t(k)];
        return q;
      };
      if (auto u = hg::u_poly(n)) members.push_back(pad(*u));
      if (auto v = hg::v_poly(n)) members.push_back(pad(*v));
      int expected_dim[4] = {1, 2, 1, 0};
      require(int(members.size()) == expected_dim[n % 4], "polynomial member count mod 4");
      auto sol = su2::sol_space(xcy_flat, n);
      require(same_span(members, sol, n), "fundamental pair must span Sol_{XcY}(n)");
    }
  });

  // ---- pipeline ------------------------------------------------------------
  add("build-operators-goldens", [&] {
    auto ops = pl::build_operators(-rho());
    require(ops.size() == 5, "five operators at -rho");
    std::map<std::string, std::pair<UeaElement, qc::MIrrepLabel>> by_label;
    for (const auto& r : ops) by_label[r.label] = {r.u_bar, r.chi};
    require(by_label.count("X") && by_label["X"].first == UeaElement::generator(0) &&
                by_label["X"].second == qc::MIrrepLabel::pm,
            "operator X");
    require(by_label.count("Y") && by_label["Y"].first == UeaElement::generator(1) &&
                by_label["Y"].second == qc::MIrrepLabel::mp,
            "operator Y");
    require(by_label.count("Y2X") && by_label["Y2X"].first == nf({1, 1, 0}) &&
                by_label["Y2X"].second == qc::MIrrepLabel::pm,
            "operator Y2X");
    require(by_label.count("X2Y") && by_label["X2Y"].first == nf({0, 0, 1}) &&
                by_label["X2Y"].second == qc::MIrrepLabel::mp,
            "operator X2Y");
    require(by_label.count("XY2X") && by_label["XY2X"].first == nf({0, 1, 1, 0}) &&
                by_label["XY2X"].second == qc::MIrrepLabel::pp,
            "operator XY2X");

    auto ops_half = pl::build_operators(-rho_half());
    require(ops_half.size() == 1 && ops_half[0].label == "XcY" &&
                ops_half[0].u_bar == xcy_normal_form() &&
                ops_half[0].chi == qc::MIrrepLabel::mm,
            "single operator XcY at -rho/2");
    require(pl::build_operators(Weight(rat(-1, 3), rat(-1, 5))).empty(),
            "generic parameter must build no operators");
  });
  add("ktype-table-goldens", [&] {
    auto ops = pl::build_operators(-rho());
    const pl::OperatorRecord* x = nullptr;
    for (const auto& r : ops)
      if (r.label == "X") x = &r;
    require(x != nullptr, "operator X present");
    auto tab = pl::ktype_table({x->u_flat}, "X", -rho(), qc::MIrrepLabel::pp, 12);
    for (const auto& row : tab.rows)
      require(row.multiplicity == (row.n % 4 == 0 ? 1 : 0),
              "Sol_X (+,+) rows must sit at n = 0 mod 4");

    auto half_ops = pl::build_operators(-rho_half());
    auto tab_h = pl::ktype_table({half_ops[0].u_flat}, "XcY", -rho_half(), qc::MIrrepLabel::H, 13);
    for (const auto& row : tab_h.rows)
      require(row.multiplicity == (row.n % 4 == 1 ? 1 : 0),
              "Sol_XcY H rows must sit at n = 1 mod 4");

    const pl::OperatorRecord* y = nullptr;
    for (const auto& r : ops)
      if (r.label == "Y") y = &r;
    auto tab_xy =
        pl::ktype_table({x->u_flat, y->u_flat}, "X,Y", -rho(), qc::MIrrepLabel::pp, 12);
    for (const auto& row : tab_xy.rows)
      require(row.multiplicity == (row.n == 0 ? 1 : 0), "common system lives at n = 0 only");
  });
  add("ktype-totality", [&] {
    auto half_ops = pl::build_operators(-rho_half());
    auto tab = pl::ktype_table({half_ops[0].u_flat}, "XcY", -rho_half(), qc::MIrrepLabel::pp, 24);
    for (const auto& row : tab.rows) {
      int total = 0;
      for (const auto& [l, m] : row.m_rep)
        total += m * qc::char_table().dim[std::size_t(int(l))];
      require(total == int(row.kernel_basis.size()), "multiplicities must exhaust the kernel");
    }
  });
  add("genuineness-parity", [&] {
    auto half_ops = pl::build_operators(-rho_half());
    auto tab = pl::ktype_table({half_ops[0].u_flat}, "XcY", -rho_half(), qc::MIrrepLabel::pp, 40);
    for (const auto& row : tab.rows)
      for (const auto& [l, m] : row.m_rep) {
        if (row.n % 2 == 1)
          require(l == qc::MIrrepLabel::H, "odd rows must be genuine");
        else
          require(l != qc::MIrrepLabel::H, "even rows must be non-genuine");
      }
  });
  add("missing-family", [&] {
    auto half_ops = pl::build_operators(-rho_half());
    UeaElement flat = kflat::to_sl2(half_ops[0].u_flat);
    for (int n = 3; n <= 59; n += 4)
      require(su2::sol_space(flat, n).empty(), "n = 3 mod 4 rows must be empty at -rho/2");
  });
  add("infer-pattern-goldens", [&] {
    auto ops = pl::build_operators(-rho());
    const pl::OperatorRecord* x = nullptr;
    for (const auto& r : ops)
      if (r.label == "X") x = &r;
    auto tab = pl::ktype_table({x->u_flat}, "X", -rho(), qc::MIrrepLabel::pp, 20);
    auto pat = pl::infer_pattern(tab);
    require(!pat.low_confidence && !pat.irregular && pat.fits.size() == 1 &&
                pat.fits[0].residue == 0 && pat.fits[0].multiplicity == 1,
            "pattern of Sol_X (+,+)");
    auto half_ops = pl::build_operators(-rho_half());
    auto tab_mp =
        pl::ktype_table({half_ops[0].u_flat}, "XcY", -rho_half(), qc::MIrrepLabel::mp, 20);
    auto pat_mp = pl::infer_pattern(tab_mp);
    require(pat_mp.fits.empty() && !pat_mp.irregular, "(-,+) must give the empty pattern");
    pl::KTypeTable small;
    small.operator_label = "X";
    small.sigma = qc::MIrrepLabel::pp;
    small.n_max = 8;
    for (int n = 0; n <= 8; ++n) small.rows.push_back(pl::KTypeRow{n, 0, {}, {}});
    auto pat_small = pl::infer_pattern(small);
    require(pat_small.irregular && pat_small.low_confidence,
            "short sweeps must be flagged low-confidence");
  });

  std::vector<CheckResult> results;
  for (auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    try {
      fn();
      r.ok = true;
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

/// Table-1 fixture with one sign flipped; the suite must notice.
inline qmchar::CharacterTable corrupted_char_table() {
  qmchar::CharacterTable t = qmchar::build_char_table();
  t.chi[1][3] = grat(-1);  // (+,-) at m_3 should be +1
  t.chi[1][7] = grat(-1);
  return t;
}

}  // namespace selftest
}  // namespace ido

#endif
