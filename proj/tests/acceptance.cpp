// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, exit code = number of failed criteria.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ido/hypergeo.hpp"
#include "ido/report.hpp"
#include "ido/selftest.hpp"
#include "test_util.hpp"

using namespace ido;
using qmchar::MIrrepLabel;

namespace {

struct Criterion {
  std::string description;
  std::function<void()> run;
};

struct Failure : std::runtime_error {
  explicit Failure(const std::string& m) : std::runtime_error(m) {}
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

UeaElement nf(std::vector<std::uint8_t> word) {
  return pbw_normalize(UeaElement::word(std::move(word)), nbar_table());
}

const pipeline::OperatorRecord& find_op(const std::vector<pipeline::OperatorRecord>& ops,
                                        const std::string& label) {
  for (const auto& r : ops)
    if (r.label == label) return r;
  throw Failure("operator not found: " + label);
}

std::string run_cli(const std::string& args, int expected_exit) {
  std::string cmd = std::string(IDO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Failure("cannot spawn CLI");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (exit_code != expected_exit)
    throw Failure("CLI exit " + std::to_string(exit_code) + " for: " + args);
  return out;
}

// Shared sweeps (each kernel and its Q8 decomposition computed once).
struct Sweeps {
  std::vector<pipeline::OperatorRecord> ops_rho, ops_half;
  pipeline::KTypeTable x, y, xy, xcy;  // rows carry full M-decompositions
};

const Sweeps& sweeps() {
  static const Sweeps s = [] {
    Sweeps out;
    out.ops_rho = pipeline::build_operators(-rho());
    out.ops_half = pipeline::build_operators(-rho_half());
    const auto& x = find_op(out.ops_rho, "X");
    const auto& y = find_op(out.ops_rho, "Y");
    out.x = pipeline::ktype_table({x.u_flat}, "X", -rho(), MIrrepLabel::pp, 60);
    out.y = pipeline::ktype_table({y.u_flat}, "Y", -rho(), MIrrepLabel::pp, 60);
    out.xy = pipeline::ktype_table({x.u_flat, y.u_flat}, "X,Y", -rho(), MIrrepLabel::pp, 60);
    out.xcy = pipeline::ktype_table({out.ops_half[0].u_flat}, "XcY", -rho_half(),
                                    MIrrepLabel::pp, 60);
    return out;
  }();
  return s;
}

void criterion_1_classification_rho() {
  const auto& ops = sweeps().ops_rho;
  require(ops.size() == 5, "expected five operators");
  std::map<std::string, std::pair<UeaElement, MIrrepLabel>> expect = {
      {"X", {UeaElement::generator(0), MIrrepLabel::pm}},
      {"Y", {UeaElement::generator(1), MIrrepLabel::mp}},
      {"Y2X", {nf({1, 1, 0}), MIrrepLabel::pm}},
      {"X2Y", {nf({0, 0, 1}), MIrrepLabel::mp}},
      {"XY2X", {nf({0, 1, 1, 0}), MIrrepLabel::pp}}};
  for (const auto& [label, want] : expect) {
    const auto& rec = find_op(ops, label);
    require(rec.u_bar == want.first, label + ": wrong normal form");
    require(rec.chi == want.second, label + ": wrong character");
  }
}

void criterion_2_classification_rho_half() {
  const auto& ops = sweeps().ops_half;
  require(ops.size() == 1, "expected exactly one operator");
  require(ops[0].u_bar == nf({0, 1}) + nf({1, 0}), "wrong normal form of XY + YX");
  require(ops[0].chi == MIrrepLabel::mm, "wrong character");
}

void criterion_3_flattening() {
  GaussRational half_i(Rational(0), rat(1, 2));
  UeaElement xflat, yflat, xcyflat;
  xflat.add(Monomial({0}), half_i);
  xflat.add(Monomial({1}), half_i);
  yflat.add(Monomial({0}), grat(1, 2));
  yflat.add(Monomial({1}), grat(-1, 2));
  xcyflat.add(Monomial({0, 0}), half_i);
  xcyflat.add(Monomial({1, 1}), -half_i);
  require(kflat::flatten(UeaElement::generator(0), -rho()).element == xflat,
          "X-flat != (i/2)(Z+ + Z-)");
  require(kflat::flatten(UeaElement::generator(1), -rho()).element == yflat,
          "Y-flat != (1/2)(Z+ - Z-)");
  require(kflat::flatten(nf({0, 1}) + nf({1, 0}), -rho_half()).element == xcyflat,
          "(XcY)-flat != (i/2)(Z+^2 - Z-^2)");

  std::mt19937 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    int len = 1 + int(rng() % 4);
    std::vector<std::uint8_t> word;
    for (int p = 0; p < len; ++p) word.push_back(std::uint8_t(rng() % 3));
    Weight lam(rat(long(rng() % 7) - 3, 1 + long(rng() % 3)),
               rat(long(rng() % 7) - 3, 1 + long(rng() % 3)));
    UeaElement u = nf(word);
    require(selftest::detail::reexpand_flat(kflat::flatten(u, lam), lam) == u,
            "re-expansion oracle found a mismatch");
  }
}

void criterion_4_operator_matrices() {
  using testutil::OdeTerm;
  GaussRational half_i = grat(1, 2) * GaussRational::i();
  UeaElement xf = kflat::to_sl2(find_op(sweeps().ops_rho, "X").u_flat);
  UeaElement yf = kflat::to_sl2(find_op(sweeps().ops_rho, "Y").u_flat);
  UeaElement cf = kflat::to_sl2(sweeps().ops_half[0].u_flat);
  for (int n = 0; n <= 20; ++n) {
    Mat x_expect = testutil::ode_matrix(
        n, {OdeTerm{-half_i, 0, 1}, OdeTerm{half_i, 2, 1}, OdeTerm{-half_i * grat(n), 1, 0}});
    require(su2::dpi_matrix(xf, n).m == x_expect, "dpi_n(X-flat) mismatch at n=" +
                                                      std::to_string(n));
    Mat y_expect = testutil::ode_matrix(n, {OdeTerm{grat(-1, 2), 0, 1},
                                            OdeTerm{grat(-1, 2), 2, 1},
                                            OdeTerm{grat(n, 2), 1, 0}});
    require(su2::dpi_matrix(yf, n).m == y_expect, "dpi_n(Y-flat) mismatch at n=" +
                                                      std::to_string(n));
    Mat c_expect = testutil::ode_matrix(
        n, {OdeTerm{half_i, 0, 2}, OdeTerm{-half_i, 4, 2},
            OdeTerm{half_i * grat(2 * (n - 1)), 3, 1},
            OdeTerm{-half_i * grat(long(n) * (n - 1)), 2, 0}});
    require(su2::dpi_matrix(cf, n).m == c_expect, "dpi_n((XcY)-flat) mismatch at n=" +
                                                      std::to_string(n));
  }
}

void criterion_5_kernels_mod_4() {
  const auto& s = sweeps();
  for (int n = 0; n <= 60; ++n) {
    const auto& solx = s.x.rows[std::size_t(n)].kernel_basis;
    const auto& soly = s.y.rows[std::size_t(n)].kernel_basis;
    if (n % 2 == 0) {
      require(solx.size() == 1 && solx[0] == testutil::binomial_pow(n, -1),
              "Sol_X basis mismatch at n=" + std::to_string(n));
      require(soly.size() == 1 && soly[0] == testutil::binomial_pow(n, 1),
              "Sol_Y basis mismatch at n=" + std::to_string(n));
    } else {
      require(solx.empty() && soly.empty(), "odd-n kernel must vanish");
    }
    int expected_dim[4] = {1, 2, 1, 0};
    require(int(s.xcy.rows[std::size_t(n)].kernel_basis.size()) == expected_dim[n % 4],
            "Sol_XcY dimension mismatch at n=" + std::to_string(n));
    require(s.xy.rows[std::size_t(n)].kernel_basis.size() == (n == 0 ? 1u : 0u),
            "common kernel must live at n = 0 only");
  }
}

void criterion_6_m_structure() {
  const auto& s = sweeps();
  using Rep = std::map<MIrrepLabel, int>;
  for (int n = 0; n <= 60; ++n) {
    const Rep& rx = s.x.rows[std::size_t(n)].m_rep;
    const Rep& ry = s.y.rows[std::size_t(n)].m_rep;
    if (n % 4 == 0) {
      require(rx == Rep{{MIrrepLabel::pp, 1}}, "Sol_X(n) must be (+,+) at n=0 mod 4");
      require(ry == Rep{{MIrrepLabel::pp, 1}}, "Sol_Y(n) must be (+,+) at n=0 mod 4");
    } else if (n % 4 == 2) {
      require(rx == Rep{{MIrrepLabel::pm, 1}}, "Sol_X(n) must be (+,-) at n=2 mod 4");
      require(ry == Rep{{MIrrepLabel::mp, 1}}, "Sol_Y(n) must be (-,+) at n=2 mod 4");
    } else {
      require(rx.empty() && ry.empty(), "odd rows must be empty");
    }
    const Rep& rc = s.xcy.rows[std::size_t(n)].m_rep;
    switch (n % 4) {
      case 0: require(rc == Rep{{MIrrepLabel::pp, 1}}, "Sol_XcY =~ (+,+)"); break;
      case 1: require(rc == Rep{{MIrrepLabel::H, 1}}, "Sol_XcY =~ H"); break;
      case 2: require(rc == Rep{{MIrrepLabel::mm, 1}}, "Sol_XcY =~ (-,-)"); break;
      default: require(rc.empty(), "Sol_XcY must vanish at n=3 mod 4"); break;
    }
    const Rep& rxy = s.xy.rows[std::size_t(n)].m_rep;
    require(rxy == (n == 0 ? Rep{{MIrrepLabel::pp, 1}} : Rep{}),
            "common solution must be (+,+) at n=0 only");
  }
}

void criterion_7_ktype_theorems() {
  const auto& s = sweeps();
  auto residue_of = [](const pipeline::KTypeTable& t, MIrrepLabel sigma) {
    // -1 encodes the all-zero table; -2 an irregular one.
    int residue = -1;
    for (const auto& row : t.rows) {
      int mult = qmchar::hom_multiplicity(row.m_rep, sigma);
      if (mult == 0) continue;
      if (mult != 1) return -2;
      if (residue == -1)
        residue = row.n % 4;
      else if (residue != row.n % 4)
        return -2;
    }
    return residue;
  };
  auto check_exact = [&](const pipeline::KTypeTable& t, MIrrepLabel sigma, int residue) {
    for (const auto& row : t.rows) {
      int mult = qmchar::hom_multiplicity(row.m_rep, sigma);
      int want = (residue >= 0 && row.n % 4 == residue) ? 1 : 0;
      require(mult == want, t.operator_label + ": wrong multiplicity at n=" +
                                std::to_string(row.n));
    }
  };

  // First-order operators: nonzero exactly at {4l} for (+,+) and {4l+2} for
  // the order-two twist; all other sigma give the all-zero table.
  check_exact(s.x, MIrrepLabel::pp, 0);
  check_exact(s.x, MIrrepLabel::pm, 2);
  for (MIrrepLabel sigma : {MIrrepLabel::mp, MIrrepLabel::mm, MIrrepLabel::H})
    check_exact(s.x, sigma, -1);
  check_exact(s.y, MIrrepLabel::pp, 0);
  check_exact(s.y, MIrrepLabel::mp, 2);
  for (MIrrepLabel sigma : {MIrrepLabel::pm, MIrrepLabel::mm, MIrrepLabel::H})
    check_exact(s.y, sigma, -1);

  // Common system: only (+,+) at n = 0.
  for (const auto& row : s.xy.rows)
    for (MIrrepLabel sigma : qmchar::all_irreps()) {
      int want = (sigma == MIrrepLabel::pp && row.n == 0) ? 1 : 0;
      require(qmchar::hom_multiplicity(row.m_rep, sigma) == want, "common system row");
    }

  // Second-order operator: {4l} for (+,+), {4l+1} for H, {4l+2} for (-,-).
  check_exact(s.xcy, MIrrepLabel::pp, 0);
  check_exact(s.xcy, MIrrepLabel::H, 1);
  check_exact(s.xcy, MIrrepLabel::mm, 2);
  for (MIrrepLabel sigma : {MIrrepLabel::pm, MIrrepLabel::mp})
    check_exact(s.xcy, sigma, -1);

  require(residue_of(s.x, MIrrepLabel::pp) == 0, "sanity: residue extractor");
}

void criterion_8_hypergeometric() {
  namespace hg = hypergeo;
  for (int n = 0; n <= 40; ++n) {
    bool u_is_poly = hg::u_poly(n).has_value();
    bool v_is_poly = hg::v_poly(n).has_value();
    bool expect_u = (n % 4 == 0 || n % 4 == 1);
    bool expect_v = (n % 4 == 1 || n % 4 == 2);
    require(u_is_poly == expect_u && v_is_poly == expect_v,
            "polynomial status mismatch at n=" + std::to_string(n));
    hg::F21Params pu(rat(-n, 4), rat(-(n - 1), 4), rat(3, 4));
    if (auto f = hg::f21_truncate(pu, 1, 0))
      require(hg::euler_apply(pu, *f).is_zero(), "D must annihilate u_n");
    hg::F21Params pv(rat(-(n - 1), 4), rat(-(n - 2), 4), rat(5, 4));
    if (auto f = hg::f21_truncate(pv, 1, 0))
      require(hg::euler_apply(pv, *f).is_zero(), "D must annihilate v_n");

    Rational a = rat(-n, 4), b = rat(-(n - 1), 4), c = rat(3, 4);
    for (int k = 0; k <= 40; ++k) {
      su2::PolyVector mono(std::max(k, 1));
      mono.c[std::size_t(k)] = grat(1);
      require(testutil::laurent_equals_poly(testutil::substituted_euler_poly(a, b, c, mono),
                                            hg::t_operator_apply(n, mono)),
              "T[n;t] != 16 t^2 D under x = t^4");
    }
  }
  for (long k = 0; k <= 25; ++k) {
    Rational b = rat(1, 4) - Rational(k);
    Rational c = rat(3, 4);
    Rational sum = hg::gauss_at_one(hg::F21Params(Rational(-k), b, c));
    require(sum == pochhammer(c - b, std::size_t(k)) / pochhammer(c, std::size_t(k)),
            "finite sum != telescoped gamma ratio at k=" + std::to_string(k));
    require(sum != 0, "u_{4k}(1) must be nonzero");
  }
}

void criterion_9_property_suites() {
  const std::vector<std::string> wanted = {
      "pbw-confluence",      "jacobi-identity",  "char-orthogonality",
      "pin-multiplicativity", "sl2-commutation-relations", "kernel-annihilation",
      "sol-equivariance",    "containments-rho"};
  auto results = selftest::run_all();
  for (const std::string& name : wanted) {
    bool found = false;
    for (const auto& r : results)
      if (r.name == name) {
        found = true;
        require(r.ok, name + " failed: " + r.detail);
      }
    require(found, "missing property check " + name);
  }
}

void criterion_10_determinism() {
  std::string self1 = run_cli("selftest", 0);
  std::string self2 = run_cli("selftest", 0);
  require(!self1.empty() && self1 == self2, "selftest output must be byte-identical");

  std::string kt1 = run_cli("ktypes --lambda -rho/2 --u XcY --sigma H --nmax 21 --format json", 0);
  std::string kt2 = run_cli("ktypes --lambda -rho/2 --u XcY --sigma H --nmax 21 --format json", 0);
  require(!kt1.empty() && kt1 == kt2, "ktypes JSON output must be byte-identical");

  std::string md1 = run_cli("ktypes --lambda -rho --u X,Y --sigma ++ --nmax 20", 0);
  std::string md2 = run_cli("ktypes --lambda -rho --u X,Y --sigma ++ --nmax 20", 0);
  require(!md1.empty() && md1 == md2, "ktypes markdown output must be byte-identical");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"classification at -rho: five singular vectors with their characters",
       criterion_1_classification_rho},
      {"classification at -rho/2: the anticommutator with character (-,-)",
       criterion_2_classification_rho_half},
      {"flattening goldens and the 100-case re-expansion oracle", criterion_3_flattening},
      {"operator matrices match the closed forms for n <= 20", criterion_4_operator_matrices},
      {"kernel dimensions and bases mod 4 for n <= 60", criterion_5_kernels_mod_4},
      {"M-representations of the kernels for n <= 60", criterion_6_m_structure},
      {"K-type theorems: multiplicities on the stated residue classes for n <= 60",
       criterion_7_ktype_theorems},
      {"hypergeometric appendix: truncation, annihilation, substitution, value at 1",
       criterion_8_hypergeometric},
      {"property suites pass exactly", criterion_9_property_suites},
      {"byte-identical output across repeated runs", criterion_10_determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].run();
      std::cout << "PASS criterion " << (i + 1) << ": " << criteria[i].description << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL criterion " << (i + 1) << ": " << criteria[i].description << " ("
                << e.what() << ")\n";
    }
  }
  std::cout << "acceptance: " << (criteria.size() - std::size_t(failed)) << " passed, " << failed
            << " failed\n";
  return failed;
}
