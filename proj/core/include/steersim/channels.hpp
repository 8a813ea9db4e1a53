#pragma once

// Single-qubit maps of the decoherence model and their action on the
// three-qubit state: the lossy-cavity amplitude damping reservoir, the Unruh
// channel seen by an accelerated observer, and the weak measurement (WM) /
// weak measurement reversal (WMR) filters used for recovery.

#include <array>
#include <vector>

#include "steersim/qmat.hpp"

namespace steersim::channels {

inline constexpr double kCompletenessTol = 1e-12;
inline constexpr double kMinSuccessProbability = 1e-14;

// Reservoir in units of the decay rate gamma0: lambda_ratio = lambda/gamma0
// (> 0), tau = gamma0 * t (>= 0).
class ReservoirParams {
 public:
  ReservoirParams(double lambda_ratio, double tau);
  double lambda_ratio() const noexcept { return lambda_ratio_; }
  double tau() const noexcept { return tau_; }

 private:
  double lambda_ratio_;
  double tau_;
};

// accel_ratio = a/omega, acceleration over the Dirac mode frequency (>= 0).
class UnruhParams {
 public:
  explicit UnruhParams(double accel_ratio);
  double accel_ratio() const noexcept { return accel_ratio_; }

 private:
  double accel_ratio_;
};

// Equal WM strength m on all qubits and WMR strength mr on qubits 1 and 2.
class RecoveryStrengths {
 public:
  RecoveryStrengths(double m, double mr);
  double m() const noexcept { return m_; }
  double mr() const noexcept { return mr_; }

 private:
  double m_;
  double mr_;
};

class KrausChannel {
 public:
  enum class Kind { trace_preserving, selective };

  // Validates the operators at construction: all 2x2, and sum K^dag K equal to
  // I (trace-preserving) or bounded by I (selective). Throws ContractError.
  KrausChannel(std::vector<qmat::ComplexMatrix> ops, Kind kind);

  static KrausChannel identity();

  const std::vector<qmat::ComplexMatrix>& ops() const noexcept { return ops_; }
  Kind kind() const noexcept { return kind_; }

  // sum_i K_i^dag K_i
  qmat::ComplexMatrix completeness() const;

  // sum_i K_i rho K_i^dag for a single-qubit operator rho.
  qmat::ComplexMatrix apply(const qmat::ComplexMatrix& rho) const;

 private:
  std::vector<qmat::ComplexMatrix> ops_;
  Kind kind_;
};

// Excited-state survival P_t of the lossy-cavity reservoir. Non-Markovian
// (lambda < 2 gamma0) trigonometric form, hyperbolic continuation above 2,
// and the confluent limit exp(-lambda t)(1 + lambda t / 2)^2 at exactly 2.
double pt_coherence(const ReservoirParams& rp);

KrausChannel amplitude_damping(double pt);

// Mixing angle chi in [0, pi/4] with cos(chi) = (exp(-2 pi / (a/omega)) + 1)^(-1/2).
double unruh_chi(const UnruhParams& up);

KrausChannel unruh_channel(double chi);

// diag(1, sqrt(1 - m))
qmat::ComplexMatrix wm_operator(double m);
// diag(sqrt(1 - mr), 1)
qmat::ComplexMatrix wmr_operator(double mr);

// Applies a trace-preserving channel to one qubit (1, 2 or 3).
qmat::DensityMatrix apply_tp(const qmat::DensityMatrix& rho, const KrausChannel& ch,
                             int qubit);

struct SelectiveOutcome {
  qmat::DensityMatrix state;
  double probability;
};

// rho -> M rho M^dag / Tr(M rho M^dag) with M = f1 (x) f2 (x) f3. Each factor
// must satisfy f^dag f <= I. Throws ZeroProbabilityError when the success
// probability is at most kMinSuccessProbability.
SelectiveOutcome apply_selective(const qmat::DensityMatrix& rho,
                                 const std::array<qmat::ComplexMatrix, 3>& factors);

}  // namespace steersim::channels
