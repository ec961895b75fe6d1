// psa: batch front end for the fiber parametric-amplifier toolkit.
//
// Usage: psa coeffs|scan|phasor|oracle-check <scenario-file> [--out <path>] [--format csv|kv]
// Exit codes: 0 ok, 2 scenario parse error, 3 validation error, 4 numerical-check failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "psa/commands.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_validation = 3;
constexpr int exit_numerical = 4;

struct CommonArgs {
  std::string scenario_path;
  std::string out_path;
  std::string format;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("scenario", args.scenario_path, "scenario file")->required();
  cmd->add_option("--out", args.out_path, "write output to this path instead of stdout");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"csv", "kv"}));
}

int run(const CommonArgs& args, psa::OutputFormat default_format,
        const std::function<bool(const psa::Scenario&, std::ostream&, psa::OutputFormat)>& body) {
  try {
    const psa::Scenario scenario = psa::parse_scenario_file(args.scenario_path);
    psa::OutputFormat format = default_format;
    if (args.format == "csv") format = psa::OutputFormat::csv;
    if (args.format == "kv") format = psa::OutputFormat::kv;

    bool ok;
    if (args.out_path.empty()) {
      ok = body(scenario, std::cout, format);
    } else {
      std::ofstream out(args.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open output file: " << args.out_path << '\n';
        return exit_validation;
      }
      ok = body(scenario, out, format);
    }
    return ok ? exit_ok : exit_numerical;
  } catch (const psa::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const psa::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return exit_validation;
  } catch (const psa::UnknownScanVariable& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return exit_validation;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return exit_numerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-sensitive fiber parametric amplifier toolkit"};
  app.require_subcommand(1);

  CommonArgs coeffs_args, scan_args, phasor_args, oracle_args;
  add_common(app.add_subcommand("coeffs", "propagator pair, decomposition and gain extrema"),
             coeffs_args);
  add_common(app.add_subcommand("scan", "parameter sweep to CSV"), scan_args);
  add_common(app.add_subcommand("phasor", "stage-by-stage phase-space trace"), phasor_args);
  add_common(app.add_subcommand("oracle-check",
                                "closed form vs full nonlinear integration"),
             oracle_args);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("coeffs")) {
    return run(coeffs_args, psa::OutputFormat::kv,
               [](const psa::Scenario& sc, std::ostream& out, psa::OutputFormat fmt) {
                 psa::cmd_coeffs(sc, out, fmt);
                 return true;
               });
  }
  if (app.got_subcommand("scan")) {
    return run(scan_args, psa::OutputFormat::csv,
               [](const psa::Scenario& sc, std::ostream& out, psa::OutputFormat fmt) {
                 psa::cmd_scan(sc, out, fmt);
                 return true;
               });
  }
  if (app.got_subcommand("phasor")) {
    return run(phasor_args, psa::OutputFormat::kv,
               [](const psa::Scenario& sc, std::ostream& out, psa::OutputFormat fmt) {
                 psa::cmd_phasor(sc, out, fmt);
                 return true;
               });
  }
  return run(oracle_args, psa::OutputFormat::kv,
             [](const psa::Scenario& sc, std::ostream& out, psa::OutputFormat fmt) {
               return psa::cmd_oracle_check(sc, out, fmt);
             });
}
