#ifndef IDO_VERMA_HPP
#define IDO_VERMA_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ido/uea.hpp"

namespace ido {
namespace verma {

/// element (x) 1_{lambda - rho} inside the Verma module M(lambda) of highest
/// weight lambda - rho. The element lives in U(nbar), basis {X, Y, Z}.
struct VermaVector {
  UeaElement element;
  Weight hw_param;
};

inline std::vector<LetterKind> standard_kinds() {
  using K = LetterKind;
  return {K::free_letter, K::free_letter, K::free_letter, K::cartan,
          K::cartan,      K::annihilates, K::annihilates, K::annihilates};
}

/// U(g)-action on M(lambda): normal-order in the nbar < Cartan < n order,
/// evaluate Cartan letters at lambda - rho, and kill terms ending in n.
inline VermaVector verma_act(const UeaElement& u, const VermaVector& v) {
  const BracketTable& full = standard_table();
  UeaElement product = multiply(u, v.element, full);
  Weight mu = v.hw_param - rho();
  std::vector<Rational> cartan_value(8);
  cartan_value[3] = pair_coroot(mu, PosRoot::alpha);
  cartan_value[4] = pair_coroot(mu, PosRoot::beta);
  std::vector<int> sub_index = {0, 1, 2, -1, -1, -1, -1, -1};
  UeaElement reduced =
      induced_reduce(product, full, standard_kinds(), cartan_value, sub_index);
  return VermaVector{reduced, v.hw_param};
}

/// Scales a kernel vector to coprime (Gaussian-)integer coefficients with the
/// lexicographically-leading monomial positive. Reproduces the classical
/// normal forms X Y^2 + 2 Y Z, X^2 Y^2 + 2 X Y Z, 2 X Y + Z.
inline UeaElement normalize_singular(const UeaElement& u) {
  if (u.is_zero()) return u;
  Integer den_lcm = 1;
  for (const auto& [m, c] : u.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.im.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& [m, c] : u.terms()) {
    Integer re_num = c.re.get_num() * (den_lcm / c.re.get_den());
    Integer im_num = c.im.get_num() * (den_lcm / c.im.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), re_num.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), im_num.get_mpz_t());
  }
  GaussRational scale = GaussRational(Rational(den_lcm) / Rational(num_gcd));

  const Monomial* lead = nullptr;
  std::array<int, 3> lead_exp{-1, -1, -1};
  for (const auto& [m, c] : u.terms()) {
    auto e = exponent_triple(m);
    if (lead == nullptr || lead_exp < e) {
      lead = &m;
      lead_exp = e;
    }
  }
  GaussRational lc = u.terms().at(*lead) * scale;
  bool negative = lc.re != 0 ? lc.re < 0 : lc.im < 0;
  if (negative) scale = -scale;
  return scale * u;
}

/// Basis of singular vectors of weight nu - lambda in M(lambda): solutions of
/// the annihilation conditions under E12 and E23, found by enumerating the
/// ordered monomials X^i Y^j Z^k of the target weight and solving the exact
/// linear system.
inline std::vector<VermaVector> singular_vectors(const Weight& lambda, const Weight& nu) {
  Weight drop = lambda - nu;  // = a alpha + b beta, a,b >= 0 required
  if (!is_integer(drop.c_alpha) || !is_integer(drop.c_beta)) return {};
  if (drop.c_alpha < 0 || drop.c_beta < 0) return {};
  long a = drop.c_alpha.get_num().get_si();
  long b = drop.c_beta.get_num().get_si();

  std::vector<Monomial> candidates;
  for (long k = 0; k <= std::min(a, b); ++k) {
    Monomial m;
    for (long i = 0; i < a - k; ++i) m.idx.push_back(0);
    for (long j = 0; j < b - k; ++j) m.idx.push_back(1);
    for (long l = 0; l < k; ++l) m.idx.push_back(2);
    candidates.push_back(std::move(m));
  }

  const int e12 = standard_table().index_of("E12");
  const int e23 = standard_table().index_of("E23");
  // One constraint row per (generator, result monomial): the two
  // annihilation conditions are stacked, never merged.
  std::vector<std::array<UeaElement, 2>> images(candidates.size());
  std::map<std::pair<int, Monomial>, int> row_index;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    UeaElement basis_vec;
    basis_vec.add(candidates[c], GaussRational(1));
    for (int gen = 0; gen < 2; ++gen) {
      UeaElement img = verma_act(UeaElement::generator(gen == 0 ? e12 : e23),
                                 VermaVector{basis_vec, lambda})
                           .element;
      for (const auto& [rm, rc] : img.terms()) row_index.emplace(std::make_pair(gen, rm), 0);
      images[c][std::size_t(gen)] = std::move(img);
    }
  }
  int next_row = 0;
  for (auto& [key, idx] : row_index) idx = next_row++;

  Mat system(next_row, int(candidates.size()));
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (int gen = 0; gen < 2; ++gen)
      for (const auto& [rm, rc] : images[c][std::size_t(gen)].terms())
        system(row_index.at(std::make_pair(gen, rm)), int(c)) = rc;

  std::vector<VermaVector> out;
  if (next_row == 0) {
    // No constraints: every candidate is singular (only happens for u = 1).
    for (const Monomial& m : candidates) {
      UeaElement u;
      u.add(m, GaussRational(1));
      out.push_back(VermaVector{normalize_singular(u), lambda});
    }
    return out;
  }
  for (const auto& vec : kernel_basis(system)) {
    UeaElement u;
    for (std::size_t c = 0; c < candidates.size(); ++c) u.add(candidates[c], vec[c]);
    out.push_back(VermaVector{normalize_singular(u), lambda});
  }
  return out;
}

/// A witnessing chain of positive-root reflections with nonnegative integral
/// pairings at every step.
struct LinkageChain {
  Weight start;
  std::vector<PosRoot> steps;
  std::vector<Weight> intermediates;
};

/// Breadth-first search for a chain linking lambda to nu. Chains longer than
/// `cap` cannot reach new weights on A2 (the Weyl group has order 6).
inline std::optional<LinkageChain> linked(const Weight& lambda, const Weight& nu, int cap = 6) {
  if (lambda == nu) return LinkageChain{lambda, {}, {}};
  struct Parent {
    Weight from;
    PosRoot step;
  };
  std::map<Weight, Parent> parent;
  std::map<Weight, int> depth;
  std::deque<Weight> queue;
  depth[lambda] = 0;
  queue.push_back(lambda);
  const std::array<PosRoot, 3> roots = {PosRoot::alpha, PosRoot::beta, PosRoot::alpha_beta};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    if (depth[w] >= cap) continue;
    for (PosRoot g : roots) {
      Rational p = pair_coroot(w, g);
      if (!is_integer(p) || p < 0) continue;
      Weight next = reflect(w, g);
      if (depth.count(next)) continue;
      depth[next] = depth[w] + 1;
      parent[next] = Parent{w, g};
      if (next == nu) {
        LinkageChain chain;
        chain.start = lambda;
        Weight cur = nu;
        while (cur != lambda) {
          const Parent& pr = parent.at(cur);
          chain.steps.push_back(pr.step);
          chain.intermediates.push_back(cur);
          cur = pr.from;
        }
        std::reverse(chain.steps.begin(), chain.steps.end());
        std::reverse(chain.intermediates.begin(), chain.intermediates.end());
        return chain;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

/// All nu != lambda carrying a nonzero singular vector of weight nu - lambda
/// in M(lambda): union of the bounded linkage candidates and a direct sweep.
/// 2-dimensional twists on the source never contribute, so only the trivial
/// source character is searched.
inline std::vector<Weight> classify_targets(const Weight& lambda) {
  Rational pa = pair_coroot(lambda, PosRoot::alpha);
  Rational pb = pair_coroot(lambda, PosRoot::beta);
  Rational bound = 1;
  if (abs(pa) > bound) bound = abs(pa);
  if (abs(pb) > bound) bound = abs(pb);
  bound = 2 * bound + 2;
  long limit = floor_int(bound).get_si();

  std::set<Weight> candidates;
  for (long a = 0; a <= limit; ++a)
    for (long b = 0; b <= limit; ++b) {
      if (a == 0 && b == 0) continue;
      candidates.insert(lambda - Weight(rat(a), rat(b)));
    }
  // Linkage candidates: every weight reachable by a BGG chain.
  std::map<Weight, int> depth;
  std::deque<Weight> queue;
  depth[lambda] = 0;
  queue.push_back(lambda);
  const std::array<PosRoot, 3> roots = {PosRoot::alpha, PosRoot::beta, PosRoot::alpha_beta};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    if (depth[w] >= 6) continue;
    for (PosRoot g : roots) {
      Rational p = pair_coroot(w, g);
      if (!is_integer(p) || p < 0) continue;
      Weight next = reflect(w, g);
      if (depth.count(next)) continue;
      depth[next] = depth[w] + 1;
      queue.push_back(next);
      if (next != lambda) candidates.insert(next);
    }
  }

  std::vector<Weight> out;
  for (const Weight& nu : candidates)
    if (!singular_vectors(lambda, nu).empty()) out.push_back(nu);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace verma
}  // namespace ido

#endif
