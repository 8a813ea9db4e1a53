#pragma once

// Composition of the channels into the two scenarios studied here:
//   baseline: werner(V) -> damping(P_t) on qubits 1,2,3 -> Unruh(chi) on qubit 3
//   recovery: werner(V) -> WM(m) on 1,2,3 -> damping on 1,2,3
//             -> WMR(mr) on 1,2 -> Unruh on 3
// plus reversal-strength optimization, finite-difference sensitivities and
// violation-interval scans over gamma0 t.

#include <optional>
#include <vector>

#include "steersim/channels.hpp"
#include "steersim/qmat.hpp"
#include "steersim/states.hpp"
#include "steersim/witnesses.hpp"

namespace steersim::pipeline {

struct ScenarioParams {
  states::WernerParam v;
  channels::ReservoirParams reservoir;
  channels::UnruhParams unruh;
  std::optional<channels::RecoveryStrengths> recovery;  // empty => baseline
};

qmat::DensityMatrix evolve_baseline(const ScenarioParams& p);

struct RecoveryOutcome {
  qmat::DensityMatrix state;
  double probability;  // product of the WM and WMR post-selection probabilities
};
RecoveryOutcome evolve_recovery(const ScenarioParams& p);

// The same compositions with the damping coherence factor P_t and the Unruh
// angle chi given directly.
qmat::DensityMatrix evolve_baseline_at(states::WernerParam v, double pt, double chi);
RecoveryOutcome evolve_recovery_at(states::WernerParam v, double pt, double chi,
                                   const channels::RecoveryStrengths& rs);

// Baseline or recovery state depending on p.recovery.
qmat::DensityMatrix evolve(const ScenarioParams& p);

double witness_at(witness::Witness w, const ScenarioParams& p,
                  witness::SpinScale scale = witness::SpinScale::pauli);

enum class Objective { gmn, gms };

inline constexpr int kWmrScanPoints = 101;
inline constexpr double kWmrTol = 1e-8;
inline constexpr double kWmrUpper = 1.0 - 1e-9;

// Reversal strength in [0, 1) that maximizes the GMN value (or minimizes the
// GMS total) of the recovery state. Uses p.recovery->m(); p.recovery->mr() is
// ignored. Throws ContractError if p.recovery is empty.
double optimal_wmr_numeric(const ScenarioParams& p, Objective objective = Objective::gmn,
                           witness::SpinScale scale = witness::SpinScale::pauli);

enum class Parameter { tau, accel_ratio };

inline constexpr double kFiniteDiffStep = 1e-5;

struct SensitivityResult {
  witness::Witness witness;
  Parameter parameter;
  ScenarioParams point;
  double magnitude;
};

SensitivityResult sensitivity(witness::Witness w, Parameter parameter, const ScenarioParams& p,
                              witness::SpinScale scale = witness::SpinScale::pauli);

struct TauInterval {
  double lo;
  double hi;
};

inline constexpr int kDefaultIntervalSamples = 2001;
inline constexpr int kMaxBisections = 60;
inline constexpr double kIntervalTol = 1e-8;

// Maximal disjoint gamma0 t intervals inside [tau_lo, tau_hi] on which the
// witness is violated. Interior endpoints are refined by bisection.
std::vector<TauInterval> violation_intervals(witness::Witness w, const ScenarioParams& p,
                                             double tau_lo, double tau_hi,
                                             int samples = kDefaultIntervalSamples,
                                             witness::SpinScale scale = witness::SpinScale::pauli);

// Copies of p with one coordinate replaced.
ScenarioParams with_tau(const ScenarioParams& p, double tau);
ScenarioParams with_accel(const ScenarioParams& p, double accel_ratio);
ScenarioParams with_mr(const ScenarioParams& p, double mr);

}  // namespace steersim::pipeline
