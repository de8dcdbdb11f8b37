#include <catch2/catch_amalgamated.hpp>

#include "ido/hypergeo.hpp"
#include "ido/kflat.hpp"
#include "test_util.hpp"

using namespace ido;
using namespace ido::hypergeo;

namespace {

UeaElement xcy_flat() {
  UeaElement xy = pbw_normalize(UeaElement::word({0, 1}), nbar_table());
  UeaElement yx = pbw_normalize(UeaElement::word({1, 0}), nbar_table());
  return kflat::to_sl2(kflat::flatten(xy + yx, -rho_half()));
}

su2::PolyVector pad(const su2::PolyVector& p, int n) {
  su2::PolyVector q(n);
  for (int k = 0; k <= p.degree_bound() && k <= n; ++k) q.c[k] = p.c[k];
  return q;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(F21Params(rat(1), rat(1), rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(F21Params(rat(1), rat(1), rat(-2)), std::invalid_argument);
  CHECK_NOTHROW(F21Params(rat(-1), rat(-3, 4), rat(3, 4)));
  CHECK_NOTHROW(F21Params(rat(1), rat(1), rat(1)));  // c = 1 is fine
}

TEST_CASE("truncation goldens") {
  auto u4 = f21_truncate(F21Params(rat(-1), rat(-3, 4), rat(3, 4)), 4, 4);
  REQUIRE(u4.has_value());
  su2::PolyVector expect(4);
  expect.c[0] = grat(1);
  expect.c[4] = grat(1);
  CHECK(*u4 == expect);

  auto u0 = f21_truncate(F21Params(rat(0), rat(1, 4), rat(3, 4)), 4, 0);
  REQUIRE(u0.has_value());
  CHECK(u0->c[0] == grat(1));
  CHECK(u0->degree_bound() == 0);

  CHECK_FALSE(f21_truncate(F21Params(rat(-3, 4), rat(-1, 2), rat(3, 4)), 4, 12).has_value());
}

TEST_CASE("polynomial status of the fundamental pair follows the mod-4 split") {
  for (int n = 0; n <= 40; ++n) {
    bool u_is_poly = u_poly(n).has_value();
    bool v_is_poly = v_poly(n).has_value();
    switch (n % 4) {
      case 0:
        CHECK(u_is_poly);
        CHECK_FALSE(v_is_poly);
        break;
      case 1:
        CHECK(u_is_poly);
        CHECK(v_is_poly);
        break;
      case 2:
        CHECK_FALSE(u_is_poly);
        CHECK(v_is_poly);
        break;
      default:
        CHECK_FALSE(u_is_poly);
        CHECK_FALSE(v_is_poly);
        break;
    }
    if (u_is_poly) CHECK(u_poly(n)->degree_bound() <= std::max(n, 0));
  }
}

TEST_CASE("Euler operator annihilates terminating series") {
  F21Params p(rat(-1), rat(-3, 4), rat(3, 4));
  su2::PolyVector one_plus_x(1);
  one_plus_x.c[0] = grat(1);
  one_plus_x.c[1] = grat(1);
  CHECK(euler_apply(p, one_plus_x).is_zero());

  F21Params p0(rat(0), rat(5, 7), rat(1, 2));
  su2::PolyVector c0(0);
  c0.c[0] = grat(3);
  CHECK(euler_apply(p0, c0).is_zero());

  for (int n = 0; n <= 40; ++n) {
    F21Params pu(rat(-n, 4), rat(-(n - 1), 4), rat(3, 4));
    if (auto f = f21_truncate(pu, 1, 0)) REQUIRE(euler_apply(pu, *f).is_zero());
    F21Params pv(rat(-(n - 1), 4), rat(-(n - 2), 4), rat(5, 4));
    if (auto f = f21_truncate(pv, 1, 0)) REQUIRE(euler_apply(pv, *f).is_zero());
  }
}

TEST_CASE("T operator goldens") {
  auto u4 = u_poly(4);
  REQUIRE(u4.has_value());
  CHECK(t_operator_apply(4, *u4).is_zero());
  auto v5 = v_poly(5);
  REQUIRE(v5.has_value());
  CHECK(t_operator_apply(5, *v5).is_zero());
  CHECK(t_operator_apply(9, su2::PolyVector(6)).is_zero());
}

TEST_CASE("T[n;t] equals 16 t^2 D under x = t^4") {
  // Monomials cover all residues mod 4; linearity covers the rest, spot-
  // checked with the fundamental pair.
  for (int n = 0; n <= 40; ++n) {
    Rational a = rat(-n, 4), b = rat(-(n - 1), 4), c = rat(3, 4);
    for (int k = 0; k <= 40; ++k) {
      su2::PolyVector mono(std::max(k, 1));
      mono.c[k] = grat(1);
      auto lhs = t_operator_apply(n, mono);
      auto rhs = testutil::substituted_euler_poly(a, b, c, mono);
      REQUIRE(testutil::laurent_equals_poly(rhs, lhs));
    }
    if (auto u = u_poly(n)) {
      auto lhs = t_operator_apply(n, *u);
      auto rhs = testutil::substituted_euler_poly(a, b, c, *u);
      REQUIRE(testutil::laurent_equals_poly(rhs, lhs));
    }
    if (auto v = v_poly(n)) {
      auto lhs = t_operator_apply(n, *v);
      auto rhs = testutil::substituted_euler_poly(a, b, c, *v);
      REQUIRE(testutil::laurent_equals_poly(rhs, lhs));
    }
  }
}

TEST_CASE("evaluation at one") {
  CHECK(gauss_at_one(F21Params(rat(-1), rat(-3, 4), rat(3, 4))) == rat(2));
  CHECK(gauss_at_one(F21Params(rat(0), rat(9, 5), rat(1, 3))) == rat(1));
  CHECK(gauss_at_one(F21Params(rat(-2), rat(-7, 4), rat(3, 4))) != 0);
  CHECK_THROWS_AS(gauss_at_one(F21Params(rat(1, 2), rat(1, 3), rat(3, 4))),
                  std::invalid_argument);
}

TEST_CASE("finite sum equals the telescoped gamma ratio") {
  // For terminating a = -k the classical evaluation collapses to
  // (c-b)_k / (c)_k; both sides are exact rationals.
  for (long k = 0; k <= 25; ++k) {
    Rational b = rat(1, 4) - Rational(k);
    Rational c = rat(3, 4);
    Rational sum = gauss_at_one(F21Params(Rational(-k), b, c));
    Rational ratio = pochhammer(c - b, k) / pochhammer(c, k);
    REQUIRE(sum == ratio);
    REQUIRE(sum != 0);
  }
}

TEST_CASE("fundamental pair spans the kernel for n <= 40") {
  UeaElement flat = xcy_flat();
  int expected_dim[4] = {1, 2, 1, 0};
  for (int n = 0; n <= 40; ++n) {
    std::vector<su2::PolyVector> members;
    if (auto u = u_poly(n)) members.push_back(pad(*u, n));
    if (auto v = v_poly(n)) members.push_back(pad(*v, n));
    REQUIRE(int(members.size()) == expected_dim[n % 4]);
    auto sol = su2::sol_space(flat, n);
    REQUIRE(sol.size() == members.size());
    // Compare reduced echelon forms of the two spanning sets.
    auto echelon = [&](const std::vector<su2::PolyVector>& v) {
      Mat m(int(v.size()), n + 1);
      for (int r = 0; r < int(v.size()); ++r)
        for (int col = 0; col <= n; ++col) m(r, col) = v[r].c[col];
      rref(m);
      return m;
    };
    if (!members.empty()) REQUIRE(echelon(members) == echelon(sol));
  }
}
