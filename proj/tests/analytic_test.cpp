#include "steersim/analytic.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "steersim/errors.hpp"
#include "test_support.hpp"

namespace steersim::analytic {
namespace {

using channels::RecoveryStrengths;
using states::WernerParam;

constexpr double kQuarterPi = std::numbers::pi / 4.0;

TEST(EvolvedElements, NoDecayReproducesWerner) {
  for (double v = 0.0; v <= 1.0; v += 0.1) {
    const ClosedFormState s = evolved_elements(WernerParam(v), 1.0, 0.0);
    EXPECT_NEAR(s.rho(1, 1).real(), (4.0 - 3.0 * v) / 8.0, 1e-15);
    EXPECT_NEAR(s.rho(1, 8).real(), (1.0 - v) / 2.0, 1e-15);
    EXPECT_LE(qmat::max_abs_diff(s.elements, testing::oracle_werner(v)), 1e-15);
  }
}

TEST(EvolvedElements, FullDecayLeavesOnlyUnruhMixing) {
  for (double v : {0.0, 0.4, 1.0}) {
    for (double chi : {0.0, 0.3, kQuarterPi}) {
      const ClosedFormState s = evolved_elements(WernerParam(v), 0.0, chi);
      EXPECT_NEAR(s.rho(1, 1).real(), std::cos(chi) * std::cos(chi), 1e-15);
      EXPECT_NEAR(s.rho(2, 2).real(), std::sin(chi) * std::sin(chi), 1e-15);
      for (int i = 3; i <= 8; ++i) EXPECT_NEAR(std::abs(s.rho(i, i)), 0.0, 1e-15);
      EXPECT_EQ(s.rho(1, 8), 0.0);
    }
  }
}

TEST(EvolvedElements, MatchesIndexKrausOracle) {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      for (int k = 0; k < 10; ++k) {
        const double v = i / 9.0;
        const double pt = j / 9.0;
        const double chi = k / 9.0 * kQuarterPi;
        const ClosedFormState s = evolved_elements(WernerParam(v), pt, chi);
        worst = std::max(worst, qmat::max_abs_diff(s.elements, testing::oracle_baseline(v, pt, chi)));
      }
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(EvolvedElements, TraceAndHermiticity) {
  for (double v = 0.0; v <= 1.0; v += 0.125) {
    for (double pt = 0.0; pt <= 1.0; pt += 0.125) {
      for (double chi = 0.0; chi <= kQuarterPi; chi += 0.1) {
        const ClosedFormState s = evolved_elements(WernerParam(v), pt, chi);
        EXPECT_NEAR(s.diagonal_sum(), 1.0, 1e-10);
        EXPECT_EQ(s.rho(1, 8), std::conj(s.rho(8, 1)));
        for (int d = 1; d <= 8; ++d) EXPECT_GE(s.rho(d, d).real(), -1e-10);
      }
    }
  }
}

TEST(EvolvedElements, DomainErrors) {
  EXPECT_THROW(evolved_elements(WernerParam(0.0), 1.5, 0.0), DomainError);
  EXPECT_THROW(evolved_elements(WernerParam(0.0), 0.5, 1.0), DomainError);
}

TEST(GmnClosedForm, ReferencePoints) {
  EXPECT_NEAR(gmn_closed_form(WernerParam(0.0), 1.0, 0.0), std::numbers::sqrt2, 1e-15);
  EXPECT_EQ(gmn_closed_form(WernerParam(1.0), 0.6, 0.3), 0.0);
  EXPECT_NEAR(gmn_closed_form(WernerParam(0.0), 1.0, kQuarterPi), 1.0, 1e-15);
}

TEST(GmnClosedForm, TwiceRootTwoCoherence) {
  for (double v = 0.0; v <= 1.0; v += 0.2) {
    for (double pt = 0.0; pt <= 1.0; pt += 0.2) {
      for (double chi = 0.0; chi <= kQuarterPi; chi += 0.2) {
        const double coherence = evolved_elements(WernerParam(v), pt, chi).rho(1, 8).real();
        EXPECT_NEAR(gmn_closed_form(WernerParam(v), pt, chi),
                    2.0 * std::numbers::sqrt2 * coherence, 1e-12);
      }
    }
  }
}

// All printed recovered elements agree with the Kraus oracle except
// rho^w_88, whose printed expression carries the opposite overall sign.
TEST(RecoveredElements, MatchesIndexKrausOracleExceptRho88Sign) {
  for (double v : {0.0, 0.3, 1.0}) {
    for (double pt : {0.1, 0.5, 1.0}) {
      for (double chi : {0.0, 0.4, kQuarterPi}) {
        for (double m : {0.0, 0.5, 0.9}) {
          for (double mr : {0.0, 0.3, 0.8}) {
            const ClosedFormState s =
                recovered_elements(WernerParam(v), pt, chi, RecoveryStrengths(m, mr));
            const qmat::ComplexMatrix ref = testing::oracle_recovery(v, pt, chi, m, mr);
            for (std::size_t r = 0; r < 8; ++r) {
              for (std::size_t c = 0; c < 8; ++c) {
                if (r == 7 && c == 7) continue;
                EXPECT_NEAR(std::abs(s.elements(r, c) - ref(r, c)), 0.0, 1e-10) << r << c;
              }
            }
            EXPECT_NEAR(s.rho(8, 8).real(), -ref(7, 7).real(), 1e-10);
          }
        }
      }
    }
  }
}

TEST(RecoveredElements, NoMeasurementLimit) {
  for (double v : {0.0, 0.5, 1.0}) {
    for (double pt : {0.0, 0.3, 1.0}) {
      for (double chi : {0.0, 0.5}) {
        const ClosedFormState rec =
            recovered_elements(WernerParam(v), pt, chi, RecoveryStrengths(0.0, 0.0));
        const ClosedFormState evo = evolved_elements(WernerParam(v), pt, chi);
        for (int d = 1; d <= 7; ++d) EXPECT_NEAR(rec.rho(d, d).real(), evo.rho(d, d).real(), 1e-12);
        EXPECT_NEAR(rec.rho(1, 8).real(), evo.rho(1, 8).real(), 1e-12);
        EXPECT_NEAR(rec.rho(8, 8).real(), -evo.rho(8, 8).real(), 1e-12);
        // Diagonal normalizes once rho^w_88 is counted with the pipeline's sign.
        EXPECT_NEAR(rec.diagonal_sum() - 2.0 * rec.rho(8, 8).real(), 1.0, 1e-10);
      }
    }
  }
}

TEST(RecoveredElements, ThetaIsEightTimesSuccessWeight) {
  EXPECT_NEAR(recovery_theta(WernerParam(0.3), 1.0, RecoveryStrengths(0.0, 0.0)), 8.0, 1e-14);
}

TEST(RecoveredElements, ZeroProbability) {
  // P_t = 0 and mr -> 1 removes everything but the |000> weight of the WMR.
  EXPECT_THROW(recovered_elements(WernerParam(0.0), 0.0, 0.0, RecoveryStrengths(0.0, 1.0 - 1e-9)),
               ZeroProbabilityError);
}

TEST(OptimalWmrPaper, NegativeRadicandIsFlagged) {
  const PaperOptimalWmr r = optimal_wmr_paper(WernerParam(0.0), 1.0, 0.0);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(std::isnan(r.value));
  EXPECT_NEAR(r.radicand, -16.0, 1e-12);
}

TEST(OptimalWmrPaper, PositiveRadicandEvaluates) {
  const PaperOptimalWmr r = optimal_wmr_paper(WernerParam(0.2), 0.5, 0.5);
  EXPECT_GT(r.radicand, 0.0);
  EXPECT_TRUE(std::isfinite(r.value));
}

TEST(WernerPaperInequalities, Thresholds) {
  EXPECT_NEAR(werner_paper_inequalities(WernerParam(13.0 / 36.0)).gms, 1.0, 1e-15);
  EXPECT_NEAR(werner_paper_inequalities(WernerParam((2.0 - std::numbers::sqrt2) / 2.0)).gmn, 1.0,
              1e-15);
  const WernerPaperValues origin = werner_paper_inequalities(WernerParam(0.0));
  EXPECT_EQ(origin.gms, 0.1875);
  EXPECT_NEAR(origin.gmn, std::numbers::sqrt2, 1e-15);
}

}  // namespace
}  // namespace steersim::analytic
