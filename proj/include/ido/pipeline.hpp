#ifndef IDO_PIPELINE_HPP
#define IDO_PIPELINE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ido/kflat.hpp"
#include "ido/su2model.hpp"
#include "ido/verma.hpp"

namespace ido {
namespace pipeline {

/// One intertwining differential operator, carried on the algebraic side:
/// the verified singular vector, its adjoint character, and its flattening.
/// The function-space realization R(u_bar) is recorded as documentation only.
struct OperatorRecord {
  Weight nu_target;
  UeaElement u_bar;          // normal form in U(nbar)
  qmchar::MIrrepLabel chi = qmchar::MIrrepLabel::pp;
  kflat::KElement u_flat;
  int order = 0;
  std::string label;
  std::string realization;
};

/// Well-known normal forms get the classical labels; single monomials are
/// named by their exponents; anything else falls back to a positional name.
inline std::string operator_label(const UeaElement& u_bar, int fallback_index) {
  const BracketTable& nbar = nbar_table();
  auto nf = [&](std::vector<std::uint8_t> word) {
    return pbw_normalize(UeaElement::word(std::move(word)), nbar);
  };
  static const std::vector<std::pair<UeaElement, std::string>> known = {
      {nf({0}), "X"},          {nf({1}), "Y"},
      {nf({1, 1, 0}), "Y2X"},  {nf({0, 0, 1}), "X2Y"},
      {nf({0, 1, 1, 0}), "XY2X"},
      {nf({0, 1}) + nf({1, 0}), "XcY"}};
  for (const auto& [form, name] : known)
    if (verma::normalize_singular(form) == u_bar) return name;
  if (u_bar.term_count() == 1) {
    const auto& [m, c] = *u_bar.terms().begin();
    if (c == GaussRational(1)) {
      auto e = exponent_triple(m);
      const char* names[3] = {"X", "Y", "Z"};
      std::string s;
      for (int i = 0; i < 3; ++i) {
        if (e[std::size_t(i)] == 0) continue;
        s += names[i];
        if (e[std::size_t(i)] > 1) s += std::to_string(e[std::size_t(i)]);
      }
      if (!s.empty()) return s;
    }
  }
  return "op" + std::to_string(fallback_index);
}

/// Steps H1-H3 plus the flattening, for the principal-series parameter
/// lambda_ps (Verma label -lambda_ps). Sorted by (order, nu).
inline std::vector<OperatorRecord> build_operators(const Weight& lambda_ps) {
  Weight lambda_verma = -lambda_ps;
  std::vector<OperatorRecord> records;
  for (const Weight& nu : verma::classify_targets(lambda_verma)) {
    auto vecs = verma::singular_vectors(lambda_verma, nu);
    if (vecs.empty()) continue;
    for (const auto& v : vecs) {
      OperatorRecord rec;
      rec.nu_target = nu;
      rec.u_bar = v.element;
      rec.chi = qmchar::ad_character(v.element);
      rec.u_flat = kflat::flatten(v.element, lambda_ps);
      rec.order = v.element.degree();
      records.push_back(std::move(rec));
    }
  }
  std::sort(records.begin(), records.end(), [](const OperatorRecord& a, const OperatorRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.nu_target < b.nu_target;
  });
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].label = operator_label(records[i].u_bar, int(i));
    records[i].realization = "R(" + uea_pretty(records[i].u_bar, nbar_table()) + ")";
  }
  return records;
}

/// Exact matrices of the group action restricted to the span of an echelon
/// kernel basis. Throws if the span is not invariant.
inline std::array<Mat, 8> restricted_action(const std::vector<su2::PolyVector>& basis, int n) {
  int d = int(basis.size());
  std::vector<int> pivot(std::size_t(d), -1);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k <= n; ++k)
      if (!basis[std::size_t(i)].c[std::size_t(k)].is_zero()) {
        pivot[std::size_t(i)] = k;
        break;
      }
    if (pivot[std::size_t(i)] < 0) throw std::invalid_argument("zero kernel basis vector");
  }
  std::array<Mat, 8> out;
  for (int g = 0; g < 8; ++g) {
    su2::PolyOpMatrix action = su2::group_action_matrix(qmchar::Q8Element{g}, n);
    Mat r(d, d);
    for (int i = 0; i < d; ++i) {
      su2::PolyVector image = su2::apply(action, basis[std::size_t(i)]);
      // Echelon basis: coordinates can be read off at the pivot positions.
      std::vector<GaussRational> coords(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) coords[std::size_t(j)] = image.c[std::size_t(pivot[std::size_t(j)])];
      su2::PolyVector recon(n);
      for (int j = 0; j < d; ++j)
        for (int k = 0; k <= n; ++k)
          recon.c[std::size_t(k)] += coords[std::size_t(j)] * basis[std::size_t(j)].c[std::size_t(k)];
      if (!(recon == image))
        throw std::invalid_argument("kernel is not invariant under the group action");
      for (int j = 0; j < d; ++j) r(j, i) = coords[std::size_t(j)];
    }
    out[std::size_t(g)] = std::move(r);
  }
  return out;
}

struct KTypeRow {
  int n = 0;
  int multiplicity = 0;
  std::vector<su2::PolyVector> kernel_basis;
  std::map<qmchar::MIrrepLabel, int> m_rep;
};

struct KTypeTable {
  std::string operator_label;
  qmchar::MIrrepLabel sigma = qmchar::MIrrepLabel::pp;
  int n_max = 0;
  std::vector<KTypeRow> rows;
};

/// K-type data for the (common) solution space of the given flattenings:
/// for every n, the exact kernel, its Q8 decomposition, and the multiplicity
/// of sigma.
inline KTypeTable ktype_table(const std::vector<kflat::KElement>& u_flats,
                              const std::string& label, const Weight& /*lambda_ps*/,
                              qmchar::MIrrepLabel sigma, int n_max) {
  if (u_flats.empty()) throw std::invalid_argument("ktype_table needs at least one operator");
  std::vector<UeaElement> sl2;
  sl2.reserve(u_flats.size());
  for (const auto& k : u_flats) sl2.push_back(kflat::to_sl2(k));

  KTypeTable table;
  table.operator_label = label;
  table.sigma = sigma;
  table.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) {
    KTypeRow row;
    row.n = n;
    row.kernel_basis = sl2.size() == 1 ? su2::sol_space(sl2[0], n) : su2::common_sol(sl2, n);
    if (!row.kernel_basis.empty()) {
      row.m_rep = qmchar::decompose_mrep(restricted_action(row.kernel_basis, n));
      row.multiplicity = qmchar::hom_multiplicity(row.m_rep, sigma);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

struct PatternFit {
  int residue = 0;
  int multiplicity = 0;
};

/// Condensed mod-4 reading of a K-type table. Patterns are only ever
/// *verified up to n_max*; they are never claims beyond the sweep.
struct PatternSummary {
  std::string operator_label;
  qmchar::MIrrepLabel sigma = qmchar::MIrrepLabel::pp;
  int verified_up_to = 0;
  bool low_confidence = false;
  bool irregular = false;
  std::vector<PatternFit> fits;     // residues with constant nonzero multiplicity
  std::vector<int> violating_rows;  // rows breaking an otherwise-constant residue
};

inline PatternSummary infer_pattern(const KTypeTable& table) {
  PatternSummary s;
  s.operator_label = table.operator_label;
  s.sigma = table.sigma;
  s.verified_up_to = table.n_max;
  if (table.n_max < 16) {
    s.low_confidence = true;
    s.irregular = true;
    return s;
  }
  for (int r = 0; r < 4; ++r) {
    std::map<int, int> count_by_mult;
    for (const auto& row : table.rows)
      if (row.n % 4 == r) ++count_by_mult[row.multiplicity];
    if (count_by_mult.empty()) continue;
    if (count_by_mult.size() == 1) {
      int mult = count_by_mult.begin()->first;
      if (mult > 0) s.fits.push_back(PatternFit{r, mult});
      continue;
    }
    s.irregular = true;
    int majority = count_by_mult.begin()->first;
    for (const auto& [mult, cnt] : count_by_mult)
      if (cnt > count_by_mult.at(majority)) majority = mult;
    for (const auto& row : table.rows)
      if (row.n % 4 == r && row.multiplicity != majority) s.violating_rows.push_back(row.n);
  }
  return s;
}

}  // namespace pipeline
}  // namespace ido

#endif
