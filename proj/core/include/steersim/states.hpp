#pragma once

#include "steersim/qmat.hpp"

namespace steersim::states {

// Mixing weight V of the Werner-type family, 0 <= V <= 1.
class WernerParam {
 public:
  explicit WernerParam(double v);
  double value() const noexcept { return v_; }

 private:
  double v_;
};

// Projector onto (|000> + |111>)/sqrt(2).
qmat::DensityMatrix ghz();

// (1 - V)|GHZ><GHZ| + (V/8) I_8, built densely.
qmat::DensityMatrix werner(WernerParam v);

}  // namespace steersim::states
