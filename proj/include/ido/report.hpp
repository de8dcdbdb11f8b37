#ifndef IDO_REPORT_HPP
#define IDO_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "ido/pipeline.hpp"

namespace ido {
namespace report {

inline constexpr const char* kToolName = "ido";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Everything a single CLI invocation computed. Serialization is lossless:
/// rationals go over the wire as "p/q" strings.
struct ReportDocument {
  Weight lambda_ps;
  int n_max = 0;
  std::string version = kToolVersion;
  std::vector<pipeline::OperatorRecord> operators;
  std::vector<pipeline::KTypeTable> tables;
  std::vector<pipeline::PatternSummary> patterns;
};

// ---------------------------------------------------------------------------
// JSON encoding

inline Json gauss_to_json(const GaussRational& z) {
  return Json{{"re", rational_wire(z.re)}, {"im", rational_wire(z.im)}};
}

inline GaussRational gauss_from_json(const Json& j) {
  return GaussRational(parse_rational(j.at("re").get<std::string>()),
                       parse_rational(j.at("im").get<std::string>()));
}

inline Json weight_to_json(const Weight& w) {
  return Json{{"alpha", rational_wire(w.c_alpha)}, {"beta", rational_wire(w.c_beta)}};
}

inline Weight weight_from_json(const Json& j) {
  return Weight(parse_rational(j.at("alpha").get<std::string>()),
                parse_rational(j.at("beta").get<std::string>()));
}

inline Json uea_to_json(const UeaElement& u, const BracketTable& table) {
  Json terms = Json::array();
  for (const auto& [m, c] : u.terms()) {
    Json letters = Json::array();
    for (std::uint8_t i : m.idx) letters.push_back(table.names[i]);
    terms.push_back(Json{{"monomial", letters}, {"coeff", gauss_to_json(c)}});
  }
  return terms;
}

inline UeaElement uea_from_json(const Json& j, const BracketTable& table) {
  UeaElement u;
  for (const auto& term : j) {
    Monomial m;
    for (const auto& name : term.at("monomial"))
      m.idx.push_back(std::uint8_t(table.index_of(name.get<std::string>())));
    u.add(m, gauss_from_json(term.at("coeff")));
  }
  return u;
}

inline Json poly_to_json(const su2::PolyVector& p) {
  Json a = Json::array();
  for (const auto& c : p.c) a.push_back(gauss_to_json(c));
  return a;
}

inline su2::PolyVector poly_from_json(const Json& j) {
  su2::PolyVector p;
  for (const auto& c : j) p.c.push_back(gauss_from_json(c));
  return p;
}

inline Json mrep_to_json(const std::map<qmchar::MIrrepLabel, int>& rep) {
  Json o = Json::object();
  for (qmchar::MIrrepLabel l : qmchar::all_irreps()) {
    auto it = rep.find(l);
    if (it != rep.end()) o[qmchar::irrep_token(l)] = it->second;
  }
  return o;
}

inline std::map<qmchar::MIrrepLabel, int> mrep_from_json(const Json& j) {
  std::map<qmchar::MIrrepLabel, int> rep;
  for (auto it = j.begin(); it != j.end(); ++it)
    rep[qmchar::parse_irrep(it.key())] = it.value().get<int>();
  return rep;
}

inline Json operator_to_json(const pipeline::OperatorRecord& r) {
  return Json{{"label", r.label},
              {"nu_target", weight_to_json(r.nu_target)},
              {"order", r.order},
              {"chi", qmchar::irrep_token(r.chi)},
              {"u_bar", uea_to_json(r.u_bar, nbar_table())},
              {"u_flat", uea_to_json(r.u_flat.element, kz_table())},
              {"realization", r.realization}};
}

inline pipeline::OperatorRecord operator_from_json(const Json& j) {
  pipeline::OperatorRecord r;
  r.label = j.at("label").get<std::string>();
  r.nu_target = weight_from_json(j.at("nu_target"));
  r.order = j.at("order").get<int>();
  r.chi = qmchar::parse_irrep(j.at("chi").get<std::string>());
  r.u_bar = uea_from_json(j.at("u_bar"), nbar_table());
  r.u_flat.element = uea_from_json(j.at("u_flat"), kz_table());
  r.realization = j.at("realization").get<std::string>();
  return r;
}

inline Json table_to_json(const pipeline::KTypeTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json basis = Json::array();
    for (const auto& p : row.kernel_basis) basis.push_back(poly_to_json(p));
    rows.push_back(Json{{"n", row.n},
                        {"dim", int(row.kernel_basis.size())},
                        {"multiplicity", row.multiplicity},
                        {"m_rep", mrep_to_json(row.m_rep)},
                        {"kernel_basis", basis}});
  }
  return Json{{"operator", t.operator_label},
              {"sigma", qmchar::irrep_token(t.sigma)},
              {"n_max", t.n_max},
              {"rows", rows}};
}

inline pipeline::KTypeTable table_from_json(const Json& j) {
  pipeline::KTypeTable t;
  t.operator_label = j.at("operator").get<std::string>();
  t.sigma = qmchar::parse_irrep(j.at("sigma").get<std::string>());
  t.n_max = j.at("n_max").get<int>();
  for (const auto& row : j.at("rows")) {
    pipeline::KTypeRow r;
    r.n = row.at("n").get<int>();
    r.multiplicity = row.at("multiplicity").get<int>();
    r.m_rep = mrep_from_json(row.at("m_rep"));
    for (const auto& p : row.at("kernel_basis")) r.kernel_basis.push_back(poly_from_json(p));
    t.rows.push_back(std::move(r));
  }
  return t;
}

inline Json pattern_to_json(const pipeline::PatternSummary& s) {
  Json fits = Json::array();
  for (const auto& f : s.fits)
    fits.push_back(Json{{"residue", f.residue}, {"multiplicity", f.multiplicity}});
  return Json{{"operator", s.operator_label},
              {"sigma", qmchar::irrep_token(s.sigma)},
              {"verified_up_to", s.verified_up_to},
              {"low_confidence", s.low_confidence},
              {"irregular", s.irregular},
              {"fits", fits},
              {"violating_rows", s.violating_rows}};
}

inline pipeline::PatternSummary pattern_from_json(const Json& j) {
  pipeline::PatternSummary s;
  s.operator_label = j.at("operator").get<std::string>();
  s.sigma = qmchar::parse_irrep(j.at("sigma").get<std::string>());
  s.verified_up_to = j.at("verified_up_to").get<int>();
  s.low_confidence = j.at("low_confidence").get<bool>();
  s.irregular = j.at("irregular").get<bool>();
  for (const auto& f : j.at("fits"))
    s.fits.push_back(pipeline::PatternFit{f.at("residue").get<int>(),
                                          f.at("multiplicity").get<int>()});
  for (const auto& v : j.at("violating_rows")) s.violating_rows.push_back(v.get<int>());
  return s;
}

inline Json to_json(const ReportDocument& doc) {
  Json ops = Json::array();
  for (const auto& r : doc.operators) ops.push_back(operator_to_json(r));
  Json tables = Json::array();
  for (const auto& t : doc.tables) tables.push_back(table_to_json(t));
  Json patterns = Json::array();
  for (const auto& p : doc.patterns) patterns.push_back(pattern_to_json(p));
  return Json{{"metadata", Json{{"tool", kToolName},
                                {"version", doc.version},
                                {"lambda_ps", weight_to_json(doc.lambda_ps)},
                                {"n_max", doc.n_max}}},
              {"operators", ops},
              {"tables", tables},
              {"patterns", patterns}};
}

inline ReportDocument from_json(const Json& j) {
  ReportDocument doc;
  doc.version = j.at("metadata").at("version").get<std::string>();
  doc.lambda_ps = weight_from_json(j.at("metadata").at("lambda_ps"));
  doc.n_max = j.at("metadata").at("n_max").get<int>();
  for (const auto& r : j.at("operators")) doc.operators.push_back(operator_from_json(r));
  for (const auto& t : j.at("tables")) doc.tables.push_back(table_from_json(t));
  for (const auto& p : j.at("patterns")) doc.patterns.push_back(pattern_from_json(p));
  return doc;
}

// ---------------------------------------------------------------------------
// Markdown rendering

inline std::string mrep_pretty(const std::map<qmchar::MIrrepLabel, int>& rep) {
  if (rep.empty()) return "0";
  std::string s;
  for (qmchar::MIrrepLabel l : qmchar::all_irreps()) {
    auto it = rep.find(l);
    if (it == rep.end()) continue;
    if (!s.empty()) s += " + ";
    if (it->second > 1) s += std::to_string(it->second) + " ";
    s += qmchar::irrep_pretty(l);
  }
  return s;
}

inline std::string pattern_pretty(const pipeline::PatternSummary& s) {
  std::string out;
  if (s.low_confidence) return "irregular (low confidence: n_max < 16)";
  if (s.fits.empty() && !s.irregular)
    return "no nonzero multiplicities [verified <= " + std::to_string(s.verified_up_to) + "]";
  for (const auto& f : s.fits) {
    if (!out.empty()) out += "; ";
    out += "n = " + std::to_string(f.residue) + " (mod 4), multiplicity " +
           std::to_string(f.multiplicity);
  }
  if (s.irregular) {
    if (!out.empty()) out += "; ";
    out += "irregular rows at n =";
    for (int n : s.violating_rows) out += " " + std::to_string(n);
  }
  return out + " [verified <= " + std::to_string(s.verified_up_to) + "]";
}

inline std::string to_markdown(const ReportDocument& doc) {
  std::string md;
  md += "# " + std::string(kToolName) + " report\n\n";
  md += "- tool: " + std::string(kToolName) + " " + doc.version + "\n";
  md += "- lambda_ps: " + weight_pretty(doc.lambda_ps) + "\n";
  md += "- n_max: " + std::to_string(doc.n_max) + "\n";

  md += "\n## Operators\n\n";
  if (doc.operators.empty()) {
    md += "No intertwining differential operators at this parameter.\n";
  } else {
    md += "| label | order | nu | chi | u_bar | u_flat |\n";
    md += "|-------|-------|----|-----|-------|--------|\n";
    for (const auto& r : doc.operators)
      md += "| " + r.label + " | " + std::to_string(r.order) + " | " +
            weight_pretty(r.nu_target) + " | " + qmchar::irrep_pretty(r.chi) + " | " +
            uea_pretty(r.u_bar, nbar_table()) + " | " +
            uea_pretty(r.u_flat.element, kz_table()) + " |\n";
  }

  for (std::size_t ti = 0; ti < doc.tables.size(); ++ti) {
    const auto& t = doc.tables[ti];
    md += "\n## K-types: " + t.operator_label + ", sigma = " + qmchar::irrep_pretty(t.sigma) +
          "\n\n";
    md += "| n | dim Sol | M-rep | mult | kernel basis |\n";
    md += "|---|---------|-------|------|--------------|\n";
    for (const auto& row : t.rows) {
      std::string basis;
      for (std::size_t i = 0; i < row.kernel_basis.size(); ++i) {
        if (i) basis += ", ";
        basis += su2::poly_pretty(row.kernel_basis[i]);
      }
      if (basis.empty()) basis = "-";
      md += "| " + std::to_string(row.n) + " | " + std::to_string(row.kernel_basis.size()) +
            " | " + mrep_pretty(row.m_rep) + " | " + std::to_string(row.multiplicity) + " | " +
            basis + " |\n";
    }
    if (ti < doc.patterns.size())
      md += "\nPattern: " + pattern_pretty(doc.patterns[ti]) + "\n";
  }
  return md;
}

}  // namespace report
}  // namespace ido

#endif
