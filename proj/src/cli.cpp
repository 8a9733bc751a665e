#include "g2/cli.hpp"

#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "g2/form_parser.hpp"
#include "g2/g2_structure.hpp"
#include "g2/homogeneous.hpp"
#include "g2/obstruction.hpp"

namespace g2 {

namespace {

std::string str(const Rational& q) { return to_string(q); }

Check make_check(std::string name, bool ok, std::string value, std::string counterexample = "") {
  return {std::move(name), ok, std::move(value), ok ? "" : std::move(counterexample)};
}

void add_P(Report& r) {
  const Poly p = obstruction_polynomial(XiDictionary::equivariant);
  for (const auto& [m, c] : p.terms()) r.add_value("P.monomial." + to_string(m), str(c));
  const auto d = decompose_cubic(p);
  const auto& names = invariant_cubic_names();
  for (int k = 0; k < 6; ++k) r.add_value("P.invariant." + names[k], str(d.coefficients[k]));
  r.add_value("P.invariant_remainder", to_string(d.remainder));
  const auto ratio = uniform_ratio(p, reference_polynomial());
  r.add_value("P.ratio_to_display", ratio ? str(*ratio) : "none");
  r.add_value("P.dictionary", to_string(XiDictionary::equivariant));
  r.add_value("P.polynomial", to_string(p));
}

void add_pairing(Report& r) {
  const Poly p = obstruction_polynomial(XiDictionary::equivariant);
  const Poly d = i_det_polynomial();
  const Sym3InnerProduct ip;
  r.add_value("pairing", str(ip(p, d)));
  r.add_value("pairing.i_det_norm_squared", str(ip(d, d)));
  r.add_value("pairing.sym3_scale", str(ip.scale()));
  r.add_value("pairing.tabulated_gram", str(tabulated_gram_pairing(p, d)));
  r.add_value("i_det.polynomial", to_string(d));
}

void add_calibration(Report& r) {
  const auto computed = computed_norms();
  const auto& names = invariant_cubic_names();
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = norm_table_pairs()[k];
    const std::string key = "calibration.<" + names[i] + "," + names[j] + ">";
    r.add_value(key + ".computed", str(computed[k]));
    r.add_value(key + ".tabulated", str(tabulated_norms()[k]));
  }
}

std::string vector_literal(const Vector7<Rational>& x) { return to_string(one_form(x)); }

}  // namespace

Report identities_report() { return report_from_checks("verify identities", verify_algebraic_identities()); }

Report nearly_g2_report() { return report_from_checks("verify nearly-g2", verify_nearly_g2()); }

Report decompose_report(int degree, const std::string& literal) {
  const Form<Rational> f = parse_form(literal, degree);
  const Form<Rational> phi = standard_phi();
  Report r{"decompose", ReportStatus::value, {}};
  r.add_value("input", to_string(f));
  if (degree == 2) {
    const auto s = project_two_form(f);
    r.add_value("beta7", to_string(s.beta7));
    r.add_value("beta14", to_string(s.beta14));
    const Form<Rational> residual = f - s.beta7 - s.beta14;
    r.add_check(make_check("reconstruction.residual", residual.is_zero(), to_string(residual)));
    const Form<Rational> e7 = hodge_star_identity(wedge(phi, s.beta7), kG2Orientation) - Rational(2) * s.beta7;
    const Form<Rational> e14 = hodge_star_identity(wedge(phi, s.beta14), kG2Orientation) + s.beta14;
    r.add_check(make_check("beta7.eigenvalue_2", e7.is_zero(), to_string(e7)));
    r.add_check(make_check("beta14.eigenvalue_minus_1", e14.is_zero(), to_string(e14)));
  } else if (degree == 3) {
    const auto s = project_three_form(f);
    r.add_value("f", str(s.f));
    r.add_value("X", vector_literal(s.X));
    r.add_value("sigma27", to_string(s.sigma27));
    r.add_value("component.omega1", to_string(omega1_component(s)));
    r.add_value("component.omega7", to_string(omega7_component(s)));
    const Form<Rational> residual = f - omega1_component(s) - omega7_component(s) - s.sigma27;
    r.add_check(make_check("reconstruction.residual", residual.is_zero(), to_string(residual)));
    r.add_check(make_check("sigma27.in_omega3_27", in_omega3_27(s.sigma27), in_omega3_27(s.sigma27) ? "true" : "false",
                           to_string(s.sigma27)));
  } else {
    throw std::invalid_argument("decompose: degree must be 2 or 3");
  }
  r.finalize();
  return r;
}

Report obstruction_report(ObstructionStage stage) {
  Report r{"obstruction", ReportStatus::value, {}};
  if (stage == ObstructionStage::P || stage == ObstructionStage::all) add_P(r);
  if (stage == ObstructionStage::pairing || stage == ObstructionStage::all) add_pairing(r);
  if (stage == ObstructionStage::all) add_calibration(r);
  r.finalize();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact G2 structure and nearly G2 deformation checks", args.empty() ? "g2tool" : args[0]};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write the report to a file");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* identities = verify->add_subcommand("identities", "Contraction and form identities");
  auto* nearly = verify->add_subcommand("nearly-g2", "d phi = 4 psi on the homogeneous model");
  identities->fallthrough();
  nearly->fallthrough();

  int degree = 0;
  std::string literal;
  auto* decompose = app.add_subcommand("decompose", "Split a 2- or 3-form into G2 summands");
  decompose->add_option("--degree", degree)->required()->check(CLI::IsMember({2, 3}));
  decompose->add_option("--form", literal)->required();
  decompose->fallthrough();

  std::string stage_name = "all";
  auto* obstruction = app.add_subcommand("obstruction", "Cubic obstruction polynomial and pairing");
  obstruction->add_option("--stage", stage_name)->check(CLI::IsMember({"P", "pairing", "all"}));
  obstruction->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Report report;
  try {
    if (*identities) {
      report = identities_report();
    } else if (*nearly) {
      report = nearly_g2_report();
    } else if (*decompose) {
      report = decompose_report(degree, literal);
    } else {
      static const std::map<std::string, ObstructionStage> stages{
          {"P", ObstructionStage::P}, {"pairing", ObstructionStage::pairing}, {"all", ObstructionStage::all}};
      report = obstruction_report(stages.at(stage_name));
    }
  } catch (const FormParseError& e) {
    err << "error: " << e.what() << '\n' << "  " << literal << '\n'
        << "  " << std::string(e.offset(), ' ') << "^ offset " << e.offset() << '\n';
    return 2;
  }

  const std::string rendered = format == "json" ? to_json(report) + "\n" : to_text(report);
  if (out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return 2;
    }
    file << rendered;
  }
  return report.status == ReportStatus::fail ? 1 : 0;
}

}  // namespace g2
