#pragma once

// Closed-form expressions for the Werner-type GHZ state under the
// reservoir + Unruh decoherence model, transcribed literally (one expression
// per printed line, no simplification). These serve as oracles for the
// Kraus-channel pipeline; any mismatch is reported, never patched here.

#include "steersim/channels.hpp"
#include "steersim/qmat.hpp"
#include "steersim/states.hpp"

namespace steersim::analytic {

// Populated only on the diagonal and the |000><111| coherence (0-based
// (0,7) and (7,0)); every other entry is zero.
struct ClosedFormState {
  qmat::ComplexMatrix elements{qmat::kSystemDim};

  double diagonal_sum() const;
  // 1-based accessor matching the rho_11 .. rho_88 naming.
  qmat::Complex rho(int row, int col) const {
    return elements(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
  }
};

// Evolved state after amplitude damping on all three qubits followed by the
// Unruh channel on qubit 3. pt in [0, 1], chi in [0, pi/4].
ClosedFormState evolved_elements(states::WernerParam v, double pt, double chi);

// sqrt(2) (1 - V) P_t^{3/2} cos(chi)
double gmn_closed_form(states::WernerParam v, double pt, double chi);

// Shared normalization of the recovered state.
double recovery_theta(states::WernerParam v, double pt, const channels::RecoveryStrengths& rs);

// State after WM -> damping -> WMR (qubits 1, 2) -> Unruh, as printed.
// Throws ZeroProbabilityError when Theta <= 1e-14.
ClosedFormState recovered_elements(states::WernerParam v, double pt, double chi,
                                   const channels::RecoveryStrengths& rs);

// Printed optimal reversal strength. The formula can leave the reals (negative
// radicand) or [0, 1); such results are flagged via `valid`, not clamped.
struct PaperOptimalWmr {
  double value;     // NaN unless the radicand is positive
  double radicand;  // raw argument of the square root
  bool valid;       // radicand > 0 and value in [0, 1)
};
PaperOptimalWmr optimal_wmr_paper(states::WernerParam v, double pt, double m);

// Werner-state witness values as quoted: GMS 3/16 + 9V/4, GMN sqrt(2)(1 - V).
struct WernerPaperValues {
  double gms;
  double gmn;
};
WernerPaperValues werner_paper_inequalities(states::WernerParam v);

}  // namespace steersim::analytic
