#include "steersim/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steersim/errors.hpp"

namespace steersim::pipeline {

using channels::amplitude_damping;
using channels::apply_selective;
using channels::apply_tp;
using channels::pt_coherence;
using channels::unruh_channel;
using channels::unruh_chi;
using qmat::ComplexMatrix;
using qmat::DensityMatrix;

namespace {

DensityMatrix damp_all(DensityMatrix rho, const channels::KrausChannel& damping) {
  for (int q = 1; q <= 3; ++q) rho = apply_tp(rho, damping, q);
  return rho;
}

}  // namespace

ScenarioParams with_tau(const ScenarioParams& p, double tau) {
  ScenarioParams out = p;
  out.reservoir = channels::ReservoirParams(p.reservoir.lambda_ratio(), tau);
  return out;
}

ScenarioParams with_accel(const ScenarioParams& p, double accel_ratio) {
  ScenarioParams out = p;
  out.unruh = channels::UnruhParams(accel_ratio);
  return out;
}

ScenarioParams with_mr(const ScenarioParams& p, double mr) {
  if (!p.recovery) throw ContractError("scenario has no recovery strengths");
  ScenarioParams out = p;
  out.recovery = channels::RecoveryStrengths(p.recovery->m(), mr);
  return out;
}

DensityMatrix evolve_baseline_at(states::WernerParam v, double pt, double chi) {
  DensityMatrix rho = damp_all(states::werner(v), amplitude_damping(pt));
  return apply_tp(rho, unruh_channel(chi), 3);
}

RecoveryOutcome evolve_recovery_at(states::WernerParam v, double pt, double chi,
                                   const channels::RecoveryStrengths& rs) {
  const ComplexMatrix wm = channels::wm_operator(rs.m());
  const ComplexMatrix wmr = channels::wmr_operator(rs.mr());

  auto weak = apply_selective(states::werner(v), {wm, wm, wm});
  DensityMatrix rho = damp_all(std::move(weak.state), amplitude_damping(pt));
  auto reversal = apply_selective(rho, {wmr, wmr, ComplexMatrix::identity(2)});
  rho = apply_tp(reversal.state, unruh_channel(chi), 3);
  return {std::move(rho), weak.probability * reversal.probability};
}

DensityMatrix evolve_baseline(const ScenarioParams& p) {
  if (p.recovery) throw ContractError("evolve_baseline called with recovery strengths");
  return evolve_baseline_at(p.v, pt_coherence(p.reservoir), unruh_chi(p.unruh));
}

RecoveryOutcome evolve_recovery(const ScenarioParams& p) {
  if (!p.recovery) throw ContractError("evolve_recovery needs recovery strengths");
  return evolve_recovery_at(p.v, pt_coherence(p.reservoir), unruh_chi(p.unruh), *p.recovery);
}

DensityMatrix evolve(const ScenarioParams& p) {
  return p.recovery ? evolve_recovery(p).state : evolve_baseline(p);
}

double witness_at(witness::Witness w, const ScenarioParams& p, witness::SpinScale scale) {
  return witness::witness_value(w, evolve(p), scale);
}

double optimal_wmr_numeric(const ScenarioParams& p, Objective objective,
                           witness::SpinScale scale) {
  if (!p.recovery) throw ContractError("optimal_wmr_numeric needs a WM strength");

  // Scored so that larger is better for both objectives.
  const auto score = [&](double mr) {
    const DensityMatrix rho = evolve_recovery(with_mr(p, mr)).state;
    return objective == Objective::gmn ? witness::gmn(rho).value
                                       : -witness::gms(rho, scale).total;
  };

  const double step = kWmrUpper / (kWmrScanPoints - 1);
  int best_k = 0;
  double best = score(0.0);
  for (int k = 1; k < kWmrScanPoints; ++k) {
    const double v = score(k * step);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }

  double lo = std::max(0, best_k - 1) * step;
  double hi = std::min(kWmrScanPoints - 1, best_k + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = score(x1);
  double f2 = score(x2);
  while (hi - lo > kWmrTol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = score(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = score(x2);
    }
  }
  const double mid = 0.5 * (lo + hi);
  // The bracket scan point can beat the interior when the optimum sits on
  // the domain edge.
  const double edge = best_k * step;
  return score(mid) >= best ? mid : edge;
}

SensitivityResult sensitivity(witness::Witness w, Parameter parameter, const ScenarioParams& p,
                              witness::SpinScale scale) {
  const double x = parameter == Parameter::tau ? p.reservoir.tau() : p.unruh.accel_ratio();
  const auto f = [&](double value) {
    const ScenarioParams q =
        parameter == Parameter::tau ? with_tau(p, value) : with_accel(p, value);
    return witness_at(w, q, scale);
  };
  const double h = kFiniteDiffStep;
  const double magnitude = x - h < 0.0 ? std::abs(f(x + h) - f(x)) / h
                                       : std::abs(f(x + h) - f(x - h)) / (2.0 * h);
  return {w, parameter, p, magnitude};
}

std::vector<TauInterval> violation_intervals(witness::Witness w, const ScenarioParams& p,
                                             double tau_lo, double tau_hi, int samples,
                                             witness::SpinScale scale) {
  if (samples < 2) throw ContractError("violation_intervals needs at least 2 samples");
  if (!(tau_lo < tau_hi)) throw ContractError("violation_intervals needs tau_lo < tau_hi");

  const auto violated = [&](double tau) {
    return witness::is_violated(w, witness_at(w, with_tau(p, tau), scale));
  };
  // Boundary between a and b where violated(a) != violated(b).
  const auto refine = [&](double a, double b) {
    const bool at_a = violated(a);
    for (int i = 0; i < kMaxBisections && b - a > kIntervalTol; ++i) {
      const double mid = 0.5 * (a + b);
      (violated(mid) == at_a ? a : b) = mid;
    }
    return 0.5 * (a + b);
  };

  std::vector<TauInterval> out;
  const double step = (tau_hi - tau_lo) / (samples - 1);
  double prev_tau = tau_lo;
  bool prev = violated(tau_lo);
  double open = tau_lo;
  for (int k = 1; k < samples; ++k) {
    const double tau = k == samples - 1 ? tau_hi : tau_lo + k * step;
    const bool now = violated(tau);
    if (now != prev) {
      const double edge = refine(prev_tau, tau);
      if (now) {
        open = edge;
      } else {
        out.push_back({open, edge});
      }
    }
    prev = now;
    prev_tau = tau;
  }
  if (prev) out.push_back({open, tau_hi});
  return out;
}

}  // namespace steersim::pipeline
