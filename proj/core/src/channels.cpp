#include "steersim/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steersim/errors.hpp"

namespace steersim::channels {

using qmat::Complex;
using qmat::ComplexMatrix;
using qmat::DensityMatrix;

ReservoirParams::ReservoirParams(double lambda_ratio, double tau)
    : lambda_ratio_(lambda_ratio), tau_(tau) {
  if (!(lambda_ratio > 0.0) || !std::isfinite(lambda_ratio)) {
    throw DomainError("lambda-ratio", "must be finite and > 0");
  }
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError("tau", "must be finite and >= 0");
  }
}

UnruhParams::UnruhParams(double accel_ratio) : accel_ratio_(accel_ratio) {
  if (!(accel_ratio >= 0.0) || std::isnan(accel_ratio)) {
    throw DomainError("accel-ratio", "must be >= 0");
  }
}

RecoveryStrengths::RecoveryStrengths(double m, double mr) : m_(m), mr_(mr) {
  if (!(m >= 0.0 && m < 1.0)) throw DomainError("m", "must lie in [0, 1)");
  if (!(mr >= 0.0 && mr < 1.0)) throw DomainError("mr", "must lie in [0, 1)");
}

namespace {

bool bounded_by_identity(const ComplexMatrix& sum) {
  const ComplexMatrix slack = ComplexMatrix::identity(sum.dim()) - sum;
  return qmat::hermitian_eigenvalues(slack).front() >= -kCompletenessTol;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, Kind kind)
    : ops_(std::move(ops)), kind_(kind) {
  if (ops_.empty()) throw ContractError("Kraus channel needs at least one operator");
  for (const ComplexMatrix& k : ops_) {
    if (k.dim() != 2) throw DimensionError("Kraus operators must be 2x2");
  }
  const ComplexMatrix sum = completeness();
  if (kind_ == Kind::trace_preserving) {
    if (qmat::max_abs_diff(sum, ComplexMatrix::identity(2)) > kCompletenessTol) {
      throw ContractError("Kraus operators are not trace preserving");
    }
  } else if (!bounded_by_identity(sum)) {
    throw ContractError("selective Kraus operators exceed the identity");
  }
}

KrausChannel KrausChannel::identity() {
  return KrausChannel({ComplexMatrix::identity(2)}, Kind::trace_preserving);
}

ComplexMatrix KrausChannel::completeness() const {
  ComplexMatrix sum(2);
  for (const ComplexMatrix& k : ops_) sum += k.adjoint() * k;
  return sum;
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
  if (rho.dim() != 2) throw DimensionError("KrausChannel::apply expects a 2x2 operator");
  ComplexMatrix out(2);
  for (const ComplexMatrix& k : ops_) out += k * rho * k.adjoint();
  return out;
}

double pt_coherence(const ReservoirParams& rp) {
  const double lambda = rp.lambda_ratio();
  const double t = rp.tau();
  if (lambda < 2.0) {
    const double delta = std::sqrt(lambda * (2.0 - lambda));
    const double amp = std::cos(delta * t / 2.0) + lambda / delta * std::sin(delta * t / 2.0);
    return std::exp(-lambda * t) * amp * amp;
  }
  if (lambda > 2.0) {
    // exp(-lambda t)[cosh(dt/2) + (lambda/d) sinh(dt/2)]^2 with the growing
    // exponential factored out; d < lambda keeps the prefactor bounded.
    const double d = std::sqrt(lambda * (lambda - 2.0));
    const double decay = std::exp(-d * t);
    const double amp = 0.5 * (1.0 + decay) + lambda / d * 0.5 * (1.0 - decay);
    return std::exp((d - lambda) * t) * amp * amp;
  }
  const double amp = 1.0 + lambda * t / 2.0;
  return std::exp(-lambda * t) * amp * amp;
}

KrausChannel amplitude_damping(double pt) {
  if (!(pt >= 0.0 && pt <= 1.0)) throw DomainError("pt", "must lie in [0, 1]");
  ComplexMatrix k0 = ComplexMatrix::diagonal({1.0, std::sqrt(pt)});
  ComplexMatrix k1(2);
  k1(0, 1) = std::sqrt(1.0 - pt);
  return KrausChannel({std::move(k0), std::move(k1)}, KrausChannel::Kind::trace_preserving);
}

double unruh_chi(const UnruhParams& up) {
  const double x = up.accel_ratio();
  if (x == 0.0) return 0.0;
  // tan(chi) = exp(-pi / x) follows from cos^2 = 1/(1+q), sin^2 = q/(1+q)
  // with q = exp(-2 pi / x); atan avoids acos cancellation near chi = 0.
  return std::atan(std::exp(-std::numbers::pi / x));
}

KrausChannel unruh_channel(double chi) {
  if (!(chi >= 0.0 && chi <= std::numbers::pi / 4.0 + 1e-15)) {
    throw DomainError("chi", "must lie in [0, pi/4]");
  }
  ComplexMatrix k0 = ComplexMatrix::diagonal({std::cos(chi), 1.0});
  ComplexMatrix k1(2);
  k1(1, 0) = std::sin(chi);
  return KrausChannel({std::move(k0), std::move(k1)}, KrausChannel::Kind::trace_preserving);
}

ComplexMatrix wm_operator(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw DomainError("m", "must lie in [0, 1)");
  return ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - m)});
}

ComplexMatrix wmr_operator(double mr) {
  if (!(mr >= 0.0 && mr < 1.0)) throw DomainError("mr", "must lie in [0, 1)");
  return ComplexMatrix::diagonal({std::sqrt(1.0 - mr), 1.0});
}

DensityMatrix apply_tp(const DensityMatrix& rho, const KrausChannel& ch, int qubit) {
  if (ch.kind() != KrausChannel::Kind::trace_preserving) {
    throw ContractError("apply_tp requires a trace-preserving channel");
  }
  ComplexMatrix out(qmat::kSystemDim);
  for (const ComplexMatrix& k : ch.ops()) {
    const ComplexMatrix full = qmat::embed_single(k, qubit);
    out += full * rho.matrix() * full.adjoint();
  }
  return qmat::check_density(std::move(out));
}

SelectiveOutcome apply_selective(const DensityMatrix& rho,
                                 const std::array<ComplexMatrix, 3>& factors) {
  for (const ComplexMatrix& f : factors) {
    if (f.dim() != 2) throw DimensionError("selective factors must be 2x2");
    if (!bounded_by_identity(f.adjoint() * f)) {
      throw ContractError("selective factor violates M^dag M <= I");
    }
  }
  const ComplexMatrix full = qmat::tensor(factors[0], factors[1], factors[2]);
  ComplexMatrix out = full * rho.matrix() * full.adjoint();
  const double probability = out.trace().real();
  if (!(probability > kMinSuccessProbability)) {
    throw ZeroProbabilityError("post-selection success probability " +
                               std::to_string(probability) + " is zero");
  }
  out *= 1.0 / probability;
  return {qmat::check_density(std::move(out)), probability};
}

}  // namespace steersim::channels
