#include "csdp/cli.hpp"

#include <string>

#include "CLI11.hpp"
#include "csdp/instances.hpp"
#include "csdp/io.hpp"
#include "csdp/jets.hpp"
#include "csdp/simulate.hpp"
#include "csdp/verify.hpp"

namespace csdp {

namespace {

struct VerifyArgs {
  std::string instance = "glmat";
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
};

struct SimulateArgs {
  std::string config;
  std::string output;
};

struct JetArgs {
  std::string left;
  std::string right;
  bool oracle = false;
};

void print_report(const Report& r, std::ostream& out) {
  for (const auto& c : r.checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " max_violation=" << format_double(c.max_violation)
        << " tolerance=" << format_double(c.tolerance) << '\n';
  out << "overall: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  Report r;
  if (a.instance == "glmat")
    r = run_structure_suite(GlMatInstance(a.n), a.seed, a.samples);
  else if (a.instance == "glt12")
    r = run_structure_suite(GlT12Instance(a.n, false), a.seed, a.samples);
  else if (a.instance == "glt12_sym")
    r = run_structure_suite(GlT12Instance(a.n, true), a.seed, a.samples);
  else
    r = run_structure_suite(NonCommutingT12Instance(a.n), a.seed, a.samples);
  out << "instance=" << a.instance << " n=" << a.n << " seed=" << a.seed << " samples=" << a.samples << '\n';
  print_report(r, out);
  return r.passed() ? 0 : 1;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  SimulationConfig cfg = parse_config(read_file(a.config));
  if (!a.output.empty()) cfg.output = a.output;
  if (cfg.output.empty()) {
    err << "error: no output path (set \"output\" in the config or pass --output)\n";
    return 2;
  }
  try {
    const SimulationResult r = run_simulation(cfg);
    write_file_atomic(cfg.output, r.csv);
    out << summary_line(r) << '\n';
  } catch (const SingularTrajectory& e) {
    err << "error: " << e.what() << " (|det| = " << format_double(e.determinant()) << ")\n";
    return 3;
  }
  return 0;
}

int cmd_jet_compose(const JetArgs& a, std::ostream& out) {
  const Jet2 left = jet_from_json(read_file(a.left));
  const Jet2 right = jet_from_json(read_file(a.right));
  if (left.n() != right.n()) throw DimensionMismatch("jet-compose: left and right jets have different dimensions");
  const Jet2 composed = jet_compose(left, right);
  std::string doc = jet_to_json(composed);
  if (a.oracle) {
    const Jet2 oracle = polymap_jet(polymap_compose_truncate(jet_polymap(left), jet_polymap(right)));
    doc.pop_back();
    doc += ", \"oracle_deviation\": " + format_double(distance(composed, oracle)) + "}";
  }
  out << doc << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centered semi-direct products: structure checks, Euler-Poincare simulation, 2-jet composition",
               "csdp"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the randomized structure suite for one instance");
  verify->add_option("--instance", va.instance, "glmat, glt12, glt12_sym or broken")
      ->check(CLI::IsMember({"glmat", "glt12", "glt12_sym", "broken"}))
      ->capture_default_str();
  verify->add_option("--n", va.n, "Dimension")
      ->check(CLI::Range(std::size_t{1}, max_verify_dimension()))
      ->capture_default_str();
  verify->add_option("--seed", va.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", va.samples, "Random draws per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Integrate an Euler-Poincare flow and write a trajectory CSV");
  simulate->add_option("--config", sa.config, "JSON config file")->required();
  simulate->add_option("--output", sa.output, "Override the CSV path from the config");

  JetArgs ja;
  auto* jets = app.add_subcommand("jet-compose", "Compose two 2-jets given as JSON files");
  jets->add_option("--left", ja.left, "Outer jet (applied last)")->required();
  jets->add_option("--right", ja.right, "Inner jet (applied first)")->required();
  jets->add_flag("--oracle", ja.oracle, "Also compose as truncated polynomials and report the deviation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*simulate) return cmd_simulate(sa, out, err);
    if (*jets) return cmd_jet_compose(ja, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace csdp
