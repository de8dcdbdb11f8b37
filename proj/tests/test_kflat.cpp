#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ido/kflat.hpp"
#include "ido/selftest.hpp"

using namespace ido;
using namespace ido::kflat;

namespace {

UeaElement nf(std::vector<std::uint8_t> word) {
  return pbw_normalize(UeaElement::word(std::move(word)), nbar_table());
}

}  // namespace

TEST_CASE("k-triple bracket relations in the matrix model") {
  CHECK(commutator(sl3::Zplus(), sl3::Zminus()) == sl3::Zzero());
  CHECK(commutator(sl3::Zzero(), sl3::Zplus()) == GaussRational(rat(2)) * sl3::Zplus());
  CHECK(commutator(sl3::Zzero(), sl3::Zminus()) == GaussRational(rat(-2)) * sl3::Zminus());
}

TEST_CASE("flattening goldens") {
  GaussRational half_i(Rational(0), rat(1, 2));
  UeaElement xflat;
  xflat.add(Monomial({0}), half_i);
  xflat.add(Monomial({1}), half_i);
  CHECK(flatten(UeaElement::generator(0), -rho()).element == xflat);

  UeaElement yflat;
  yflat.add(Monomial({0}), grat(1, 2));
  yflat.add(Monomial({1}), grat(-1, 2));
  CHECK(flatten(UeaElement::generator(1), -rho()).element == yflat);

  UeaElement xcyflat;
  xcyflat.add(Monomial({0, 0}), half_i);
  xcyflat.add(Monomial({1, 1}), -half_i);
  CHECK(flatten(nf({0, 1}) + nf({1, 0}), -rho_half()).element == xcyflat);
}

TEST_CASE("re-expansion oracle on random words") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    int len = 1 + int(rng() % 4);
    std::vector<std::uint8_t> word;
    for (int p = 0; p < len; ++p) word.push_back(std::uint8_t(rng() % 3));
    Weight lam(rat(long(rng() % 7) - 3, 1 + long(rng() % 3)),
               rat(long(rng() % 7) - 3, 1 + long(rng() % 3)));
    UeaElement u = nf(word);
    KElement flat = flatten(u, lam);
    REQUIRE(selftest::detail::reexpand_flat(flat, lam) == u);
  }
}

TEST_CASE("degree-one flattenings do not depend on the parameter") {
  KElement x0 = flatten(UeaElement::generator(0), Weight(rat(2), rat(-5)));
  KElement y0 = flatten(UeaElement::generator(1), Weight(rat(2), rat(-5)));
  for (long i = -2; i <= 2; ++i)
    for (long j = -2; j <= 2; ++j) {
      Weight lam(rat(i, 2), rat(j, 3));
      CHECK(flatten(UeaElement::generator(0), lam) == x0);
      CHECK(flatten(UeaElement::generator(1), lam) == y0);
    }
}

TEST_CASE("degree-two flattening sees the parameter through the character") {
  // X^2 flattens to B3^2 + mu(Halpha) with mu = -(lambda + rho), so two
  // parameters differ by a scalar.
  UeaElement xsq = UeaElement::word({0, 0});
  Weight lam1(rat(0), rat(0)), lam2(rat(3), rat(-2));
  UeaElement d = flatten(xsq, lam1).element - flatten(xsq, lam2).element;
  Weight mu1 = -(lam1 + rho()), mu2 = -(lam2 + rho());
  UeaElement expect =
      GaussRational(pair_coroot(mu1, PosRoot::alpha) - pair_coroot(mu2, PosRoot::alpha)) *
      UeaElement::one();
  CHECK(d == expect);
}

TEST_CASE("anticommutator identity at -rho/2") {
  const auto& kz = kz_table();
  KElement xf = flatten(UeaElement::generator(0), -rho_half());
  KElement yf = flatten(UeaElement::generator(1), -rho_half());
  UeaElement anti = multiply(xf.element, yf.element, kz) + multiply(yf.element, xf.element, kz);
  CHECK(anti == flatten(nf({0, 1}) + nf({1, 0}), -rho_half()).element);
}

TEST_CASE("sl(2) relabeling preserves structure") {
  KElement k;
  k.element.add(Monomial({0, 1}), grat(1));
  k.element.add(Monomial({2}), grat(-2, 3));
  CHECK(to_sl2(k) == k.element);
  const auto& kz = kz_table();
  const auto& s2 = sl2_table();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(kz.br[i][j] == s2.br[i][j]);
}

TEST_CASE("flattening output involves only k letters") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    int len = 1 + int(rng() % 4);
    std::vector<std::uint8_t> word;
    for (int p = 0; p < len; ++p) word.push_back(std::uint8_t(rng() % 3));
    KElement flat = flatten(nf(word), Weight(rat(1, 2), rat(-3)));
    for (const auto& [m, c] : flat.element.terms())
      for (auto idx : m.idx) REQUIRE(idx < 3);
  }
}
