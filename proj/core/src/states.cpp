#include "steersim/states.hpp"

#include <cmath>

#include "steersim/errors.hpp"

namespace steersim::states {

WernerParam::WernerParam(double v) : v_(v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("v", "must lie in [0, 1]");
}

namespace {

qmat::ComplexMatrix ghz_projector() {
  qmat::ComplexMatrix out(qmat::kSystemDim);
  out(0, 0) = out(0, 7) = out(7, 0) = out(7, 7) = 0.5;
  return out;
}

}  // namespace

qmat::DensityMatrix ghz() { return qmat::check_density(ghz_projector()); }

qmat::DensityMatrix werner(WernerParam v) {
  const double weight = v.value();
  qmat::ComplexMatrix mixed = qmat::ComplexMatrix::identity(qmat::kSystemDim);
  mixed *= weight / 8.0;
  qmat::ComplexMatrix pure = ghz_projector();
  pure *= 1.0 - weight;
  return qmat::check_density(pure + mixed);
}

}  // namespace steersim::states
