// Command-line front end: classification of intertwining differential
// operators, K-type tables of their solution spaces, and the self-test suite.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ido/report.hpp"
#include "ido/selftest.hpp"

namespace {

using namespace ido;

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
  f << bytes;
}

std::string render(const report::ReportDocument& doc, const std::string& format) {
  if (format == "json") return report::to_json(doc).dump(2) + "\n";
  return report::to_markdown(doc);
}

std::vector<std::string> split_selector(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.empty()) parts.push_back(s);
  return parts;
}

int run_classify(const std::string& lambda_str, const std::string& format,
                 const std::string& out_path) {
  Weight lambda_ps = parse_weight(lambda_str);
  report::ReportDocument doc;
  doc.lambda_ps = lambda_ps;
  doc.n_max = 0;
  doc.operators = pipeline::build_operators(lambda_ps);
  emit(render(doc, format), out_path);
  return 0;
}

int run_ktypes(const std::string& lambda_str, const std::string& selector,
               const std::string& sigma_str, int n_max, const std::string& format,
               const std::string& out_path) {
  Weight lambda_ps = parse_weight(lambda_str);
  qmchar::MIrrepLabel sigma = qmchar::parse_irrep(sigma_str);
  auto operators = pipeline::build_operators(lambda_ps);

  std::vector<kflat::KElement> flats;
  for (const std::string& label : split_selector(selector)) {
    const pipeline::OperatorRecord* found = nullptr;
    for (const auto& r : operators)
      if (r.label == label) {
        found = &r;
        break;
      }
    if (!found) {
      std::string valid;
      for (const auto& r : operators) valid += (valid.empty() ? "" : ", ") + r.label;
      if (valid.empty()) valid = "(none at this parameter)";
      throw std::invalid_argument("unknown operator '" + label + "'; valid labels: " + valid);
    }
    flats.push_back(found->u_flat);
  }

  report::ReportDocument doc;
  doc.lambda_ps = lambda_ps;
  doc.n_max = n_max;
  doc.operators = operators;
  doc.tables.push_back(pipeline::ktype_table(flats, selector, lambda_ps, sigma, n_max));
  doc.patterns.push_back(pipeline::infer_pattern(doc.tables.back()));
  emit(render(doc, format), out_path);
  return 0;
}

int run_selftest(bool corrupt) {
  const qmchar::CharacterTable table =
      corrupt ? selftest::corrupted_char_table() : qmchar::char_table();
  auto results = selftest::run_all(table);
  int failed = 0;
  for (const auto& r : results) {
    if (r.ok) {
      std::cout << "ok " << r.name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << "selftest: " << (results.size() - std::size_t(failed)) << " passed, " << failed
            << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of intertwining differential operators on the double cover "
               "of SL(3,R) and K-type decompositions of their solution spaces"};
  app.require_subcommand(1);

  std::string lambda_str, selector, sigma_str = "++";
  std::string format = "md", out_path;
  int n_max = 60;
  bool corrupt = false;

  CLI::App* classify = app.add_subcommand("classify", "Classify operators at a parameter");
  classify->add_option("--lambda", lambda_str, "Principal-series parameter 'a,b', -rho, -rho/2")
      ->required();
  classify->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
  classify->add_option("--out", out_path, "Write the report to a file");

  CLI::App* ktypes = app.add_subcommand("ktypes", "K-type table of a solution space");
  ktypes->add_option("--lambda", lambda_str, "Principal-series parameter 'a,b', -rho, -rho/2")
      ->required();
  ktypes->add_option("--u", selector, "Operator label, or comma-separated labels for a system")
      ->required();
  ktypes->add_option("--sigma", sigma_str, "Irreducible: ++, +-, -+, --, H")->required();
  ktypes->add_option("--nmax", n_max, "Sweep bound (default 60)")->check(CLI::NonNegativeNumber);
  ktypes->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
  ktypes->add_option("--out", out_path, "Write the report to a file");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the golden and property suites");
  selftest_cmd->add_flag("--corrupt-chartable", corrupt,
                         "Negative control: corrupt the character table fixture");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify)) return run_classify(lambda_str, format, out_path);
    if (app.got_subcommand(ktypes))
      return run_ktypes(lambda_str, selector, sigma_str, n_max, format, out_path);
    return run_selftest(corrupt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
