#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "steersim/app/config.hpp"
#include "steersim/app/svg_plot.hpp"
#include "steersim/app/sweep_table.hpp"

namespace steersim::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// Colour only when writing to a terminal and NO_COLOR is unset or empty.
bool colour_enabled();

struct Style {
  bool colour = false;
  std::string pass() const;
  std::string fail() const;
  std::string soft() const;
};

// Root of a monotone-crossing function on [lo, hi] by bisection; f(lo) and
// f(hi) must have opposite signs (ContractError otherwise).
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

inline constexpr double kThresholdTol = 1e-8;

// Werner-state boundaries in V at t = 0 without acceleration.
struct Thresholds {
  double gms_paper;             // printed GMS expression reaches 1
  double gmn_paper;             // printed GMN expression reaches 1
  double gms_direct_pauli;      // direct witness, Pauli observables
  double gms_direct_spin_half;  // direct witness, spin-1/2 observables
  double gmn_direct;            // optimized Svetlichny value reaches 1
};
Thresholds compute_thresholds();

// Each returns a process exit code; reports go to `os`. UsageError and
// DomainError propagate to the caller.
int cmd_eval(const RunConfig& cfg, std::ostream& os, const Style& style = {});
int cmd_thresholds(const RunConfig& cfg, std::ostream& os, const Style& style = {});
int cmd_recover(const RunConfig& cfg, std::ostream& os, const Style& style = {});
int cmd_verify(const RunConfig& cfg, std::ostream& os, const Style& style = {});

// Nested sweep over cfg.axes (first axis outermost).
SweepTable run_sweep(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg, std::ostream& os, const Style& style = {});

struct FigureData {
  SweepTable table;
  PlotSpec plot;
};

const std::vector<std::string>& figure_ids();

// Throws UsageError("figure") for an unknown id.
FigureData build_figure(const std::string& id, const RunConfig& cfg);
int cmd_figure(const RunConfig& cfg, std::ostream& os, const Style& style = {});

}  // namespace steersim::app
