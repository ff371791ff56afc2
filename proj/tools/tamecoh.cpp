// tamecoh: classify tamely ramified extensions of a local field from the
// command line.
//
// Exit codes: 0 success, 2 invalid input, 3 I/O failure, 4 oracle mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tamecoh/checks.hpp"
#include "tamecoh/error.hpp"
#include "tamecoh/l3.hpp"
#include "tamecoh/mass.hpp"
#include "tamecoh/report.hpp"
#include "tamecoh/tame.hpp"

namespace {

using tamecoh::Nat;

constexpr int kExitInput = 2;
constexpr int kExitIo = 3;
constexpr int kExitOracle = 4;

int exit_code(tamecoh::ErrorKind kind) {
  switch (kind) {
    case tamecoh::ErrorKind::InvalidInput:
      return kExitInput;
    case tamecoh::ErrorKind::Io:
      return kExitIo;
    case tamecoh::ErrorKind::OracleMismatch:
      return kExitOracle;
  }
  return kExitInput;
}

tamecoh::Rational parse_rational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return tamecoh::Rational(cpp_int(text));
    const cpp_int num(text.substr(0, slash));
    const cpp_int den(text.substr(slash + 1));
    if (den == 0) throw tamecoh::InputError("zero denominator in " + text);
    return tamecoh::Rational(num, den);
  } catch (const std::runtime_error&) {
    throw tamecoh::InputError("not an exact rational: " + text);
  }
}

struct Options {
  bool no_banner = false;
  std::string format;  // empty selects the command's default
  Nat q = 0, e = 0, f = 0, l = 0, m = 0, n = 0, a = 0;
  Nat q_max = 0, e_max = 0, f_max = 0;
  std::string out_path;
  std::string wild_axiom;
  bool include_abelian = false;
};

void emit(const Options& opt, const std::string& body) {
  if (opt.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw tamecoh::IoError("cannot open " + opt.out_path + " for writing");
  file << body;
  if (!file.flush()) throw tamecoh::IoError("failed writing " + opt.out_path);
}

// Text output carries a version header unless --no-banner is given.
void emit_text(const Options& opt, const std::string& body) {
  if (opt.format == "csv") throw tamecoh::InputError("csv output is only available for classify and sweep");
  if (opt.no_banner) return emit(opt, body);
  emit(opt, std::string("# tamecoh ") + TAMECOH_VERSION + "\n" + body);
}

int cmd_classify(const Options& opt) {
  const auto shape = tamecoh::TameShape::make(tamecoh::LocalField::make(opt.q), opt.e, opt.f);
  const auto report = tamecoh::classify(shape);
  if (opt.format == "json") {
    emit(opt, tamecoh::to_json(report));
  } else if (opt.format == "csv") {
    std::ostringstream out;
    tamecoh::write_atlas_csv(out, {report});
    emit(opt, out.str());
  } else {
    emit_text(opt, tamecoh::to_text(report));
  }
  return 0;
}

int cmd_sweep(const Options& opt) {
  if (opt.q_max < 2 || opt.e_max < 1 || opt.f_max < 1) {
    throw tamecoh::InputError("sweep bounds must be positive (q-max >= 2)");
  }
  std::ostringstream out;
  tamecoh::write_atlas_csv(out, tamecoh::atlas(opt.q_max, opt.e_max, opt.f_max));
  emit(opt, out.str());
  return 0;
}

int cmd_mass(const Options& opt) {
  const auto field = tamecoh::LocalField::make(opt.q);
  const auto report = tamecoh::tame_mass(field, opt.e);
  std::optional<tamecoh::Rational> axiom;
  if (!opt.wild_axiom.empty()) axiom = parse_rational(opt.wild_axiom);
  if (opt.format == "json") {
    emit(opt, tamecoh::to_json(report, axiom));
  } else {
    emit_text(opt, tamecoh::to_text(report, axiom));
  }
  return 0;
}

int cmd_l3(const Options& opt) {
  const auto report =
      tamecoh::classify_l3(tamecoh::LocalField::make(opt.q), opt.l, opt.include_abelian);
  if (opt.format == "json") {
    emit(opt, tamecoh::to_json(report));
  } else {
    emit_text(opt, tamecoh::to_text(report));
  }
  return 0;
}

int cmd_cohomology(const Options& opt) {
  const auto action = tamecoh::CyclicAction::make(opt.m, opt.n, opt.a);
  if (opt.format == "json") {
    emit(opt, tamecoh::cohomology_json(action));
  } else {
    emit_text(opt, tamecoh::cohomology_text(action));
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  const tamecoh::GridBounds grid{opt.q_max, opt.e_max, opt.f_max};
  bool all_ok = true;
  std::ostringstream out;
  for (const auto& result : tamecoh::run_all_checks(grid)) {
    all_ok = all_ok && result.ok();
    out << (result.ok() ? "ok    " : "FAIL  ") << result.name << ": " << result.cases
        << " cases, " << result.mismatches << " mismatches";
    if (!result.ok()) out << " (first: " << result.first_mismatch << ")";
    out << "\n";
  }
  if (opt.format == "json") throw tamecoh::InputError("oracle output is text only");
  emit_text(opt, out.str());
  return all_ok ? 0 : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tamely ramified extensions of local fields and their cohomology"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--no-banner", opt.no_banner, "Suppress the version header");

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    cmd->add_option("--out", opt.out_path, "Write output to PATH instead of stdout");
    cmd->add_flag("--no-banner", opt.no_banner, "Suppress the version header");
  };

  auto* classify = app.add_subcommand("classify", "Extension classes with given e and f, with invariants");
  classify->add_option("--q", opt.q, "Residue field cardinality")->required();
  classify->add_option("--e", opt.e, "Ramification index")->required();
  classify->add_option("--f", opt.f, "Residual degree")->required();
  add_format(classify);

  auto* sweep = app.add_subcommand("sweep", "Write the CSV extension atlas");
  sweep->add_option("--q-max", opt.q_max)->required();
  sweep->add_option("--e-max", opt.e_max)->required();
  sweep->add_option("--f-max", opt.f_max)->required();
  add_format(sweep);

  auto* mass = app.add_subcommand("mass", "Tame mass formula in degree e");
  mass->add_option("--q", opt.q)->required();
  mass->add_option("--e", opt.e)->required();
  mass->add_option("--wild-axiom", opt.wild_axiom,
                   "Inner degree-p mass (exact rational) for the degree e*p reduction");
  add_format(mass);

  auto* l3 = app.add_subcommand("l3", "Galoisian extensions of degree l^3");
  l3->add_option("--q", opt.q)->required();
  l3->add_option("--l", opt.l)->required();
  l3->add_flag("--include-abelian", opt.include_abelian, "Also count the abelian shapes");
  add_format(l3);

  auto* cohomology = app.add_subcommand("cohomology", "H^1 and H^2 of Z/n acting on Z/m");
  cohomology->add_option("--m", opt.m)->required();
  cohomology->add_option("--n", opt.n)->required();
  cohomology->add_option("--a", opt.a)->required();
  add_format(cohomology);

  auto* oracle = app.add_subcommand("oracle", "Run the cross-check suites");
  oracle->add_option("--q-max", opt.q_max, "Largest q in the grid")->default_val(49);
  oracle->add_option("--e-max", opt.e_max, "Largest e in the grid")->default_val(36);
  oracle->add_option("--f-max", opt.f_max, "Largest f in the grid")->default_val(6);
  add_format(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*classify) return cmd_classify(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*mass) return cmd_mass(opt);
    if (*l3) return cmd_l3(opt);
    if (*cohomology) return cmd_cohomology(opt);
    if (*oracle) return cmd_oracle(opt);
  } catch (const tamecoh::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code(err.kind());
  }
  return kExitInput;
}
