#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steersim/app/commands.hpp"
#include "steersim/errors.hpp"

using namespace steersim::app;

int main(int argc, char** argv) {
  CLI::App app{"Witness dynamics of a three-qubit Werner state under non-Markovian damping "
               "and Unruh noise"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<double> m;
  std::string mr = "optimal";
  std::vector<std::string> axes;
  std::string objective = "gmn";
  std::string scale = "pauli";

  app.add_option("--v", cfg.v, "Werner mixing parameter V in [0, 1]");
  app.add_option("--lambda-ratio", cfg.lambda_ratio, "reservoir width lambda/gamma0 (> 0)");
  app.add_option("--tau", cfg.tau, "dimensionless time gamma0 t (>= 0)");
  app.add_option("--accel-ratio", cfg.accel_ratio, "acceleration a/omega (>= 0)");
  app.add_option("--m", m, "weak measurement strength in [0, 1); enables the recovery protocol");
  app.add_option("--mr", mr, "reversal strength: a number in [0, 1), 'optimal' or 'paper'");
  app.add_option("--axis", axes, "sweep axis NAME:LO:HI:STEPS (repeatable, first is outermost)");
  app.add_option("--out", cfg.out, "output CSV path (default: stdout)");
  app.add_flag("--svg", cfg.svg, "also write an SVG plot next to --out");
  app.add_option("--objective", objective, "reversal optimization objective: gmn or gms");
  app.add_option("--gms-scale", scale, "GMS observables: pauli or spin-half");
  app.add_option("--threads", cfg.threads, "worker threads (default: all cores)");

  const auto sub = [&](const char* name, const char* help, Command cmd) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&cfg, cmd] { cfg.command = cmd; });
    return s;
  };
  sub("eval", "evaluate both witnesses at one parameter point", Command::eval);
  sub("sweep", "evaluate a nested grid given by --axis", Command::sweep);
  sub("thresholds", "Werner-state boundaries in V, printed formulas vs direct witnesses",
      Command::thresholds);
  auto* figure = sub("figure", "emit the data behind a figure", Command::figure);
  figure->add_option("id", cfg.figure, "figure id")->required();
  sub("recover", "compare reversal strengths at one parameter point", Command::recover);
  sub("verify", "run the closed-form and property checks", Command::verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Style style{colour_enabled()};
  try {
    cfg.m = m;
    cfg.mr = parse_mr(mr);
    if (!m && cfg.mr.kind == MrChoice::Kind::fixed && cfg.command != Command::sweep &&
        cfg.command != Command::figure) {
      throw UsageError("--mr", "a fixed reversal strength needs --m");
    }
    for (const auto& a : axes) cfg.axes.push_back(parse_axis(a));
    if (!cfg.axes.empty() && cfg.command != Command::sweep && cfg.command != Command::figure) {
      throw UsageError("--axis", "only sweep and figure take axes");
    }
    cfg.objective = parse_objective(objective);
    cfg.gms_scale = parse_gms_scale(scale);

    switch (cfg.command) {
      case Command::eval: return cmd_eval(cfg, std::cout, style);
      case Command::sweep: return cmd_sweep(cfg, std::cout, style);
      case Command::thresholds: return cmd_thresholds(cfg, std::cout, style);
      case Command::figure: return cmd_figure(cfg, std::cout, style);
      case Command::recover: return cmd_recover(cfg, std::cout, style);
      case Command::verify: return cmd_verify(cfg, std::cout, style);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const steersim::DomainError& e) {
    std::cerr << "error: " << as_usage_error(e, "--" + e.parameter()).what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
