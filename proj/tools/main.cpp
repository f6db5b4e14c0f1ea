#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using ptchain::cli::Command;
using ptchain::cli::Format;
using ptchain::cli::RunConfig;

void add_chain_options(CLI::App& sub, RunConfig& cfg, double& gamma, double& gamma_min, double& gamma_max) {
  sub.add_option("--n", cfg.n_sites, "number of sites N")->required();
  sub.add_option("--gamma", gamma, "potential strength");
  sub.add_option("--gamma-min", gamma_min, "start of the gamma grid");
  sub.add_option("--gamma-max", gamma_max, "end of the gamma grid");
  sub.add_option("--steps", cfg.steps, "grid points (>= 2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the PT-symmetric tight-binding chain"};
  app.require_subcommand(1);

  RunConfig cfg;
  double gamma = 0.0;
  double gamma_min = 0.0;
  double gamma_max = 0.0;
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};

  app.add_option("--j", cfg.hopping, "hopping J (energy unit)")->capture_default_str();
  app.add_option("--tol", cfg.tol, "root and phase tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", cfg.out, "output file (default stdout)");

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"spectrum", "Bethe spectrum at one gamma", Command::Spectrum},
      {"sweep", "spectra over a gamma grid", Command::Sweep},
      {"phase", "phase classification and real-root count", Command::Phase},
      {"metric", "gauged real metric operator", Command::Metric},
      {"hermitian", "couplings of the equivalent Hermitian Hamiltonian", Command::Hermitian},
  };
  std::map<CLI::App*, Command> commands;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_chain_options(*sub, cfg, gamma, gamma_min, gamma_max);
    commands[sub] = s.command;
  }
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--n-max", cfg.n_max, "largest chain checked")->capture_default_str();
  commands[verify] = Command::Verify;

  // Global options are accepted after the subcommand as well.
  for (auto& [sub, command] : commands) {
    (void)command;
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ptchain::cli::kExitBadArgs;
  }

  for (auto& [sub, command] : commands) {
    if (!sub->parsed()) continue;
    cfg.command = command;
    if (command != Command::Verify) {
      if (sub->count("--gamma")) cfg.gamma = gamma;
      if (sub->count("--gamma-min")) cfg.gamma_min = gamma_min;
      if (sub->count("--gamma-max")) cfg.gamma_max = gamma_max;
    }
  }
  return ptchain::cli::run(cfg, std::cout, std::cerr);
}
