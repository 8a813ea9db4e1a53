#include "steersim/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "steersim/errors.hpp"

namespace steersim::analytic {
namespace {

void check_pt_chi(double pt, double chi) {
  if (!(pt >= 0.0 && pt <= 1.0)) throw DomainError("pt", "must lie in [0, 1]");
  if (!(chi >= 0.0 && chi <= std::numbers::pi / 4.0 + 1e-15)) {
    throw DomainError("chi", "must lie in [0, pi/4]");
  }
}

void check_m(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw DomainError("m", "must lie in [0, 1)");
}

}  // namespace

double ClosedFormState::diagonal_sum() const { return elements.trace().real(); }

ClosedFormState evolved_elements(states::WernerParam vp, double pt, double chi) {
  check_pt_chi(pt, chi);
  const double V = vp.value();
  const double P = pt;
  const double c2 = std::cos(chi) * std::cos(chi);
  const double s2 = std::sin(chi) * std::sin(chi);
  const double cos2chi = std::cos(2.0 * chi);

  ClosedFormState out;
  auto& e = out.elements;
  // rho_11(t)
  e(0, 0) = 1.0 / 8.0 * (P - 2.0) * (P * (4.0 + (-4.0 + 3.0 * V) * P) - 4.0) * c2;
  // rho_22(t)
  e(1, 1) = 1.0 / 8.0 *
            (P * (4.0 + P * (4.0 * V - 8.0 + 4.0 * P - 3.0 * V * P)) +
             (P - 2.0) * (P * (4.0 + (3.0 * V - 4.0) * P) - 4.0) * s2);
  // rho_33(t)
  e(2, 2) = 1.0 / 8.0 * P * (4.0 + P * (4.0 * V - 8.0 + 4.0 * P - 3.0 * V * P)) * c2;
  // rho_44(t)
  e(3, 3) = 1.0 / 16.0 * P *
            (4.0 + (3.0 * V - 4.0) * P * P +
             (P * (8.0 - 4.0 * P + V * (3.0 * P - 4.0)) - 4.0) * cos2chi);
  // rho_55(t)
  e(4, 4) = 1.0 / 8.0 * P * (4.0 + P * (4.0 * V - 8.0 + 4.0 * P - 3.0 * V * P)) * c2;
  // rho_66(t)
  e(5, 5) = 1.0 / 16.0 * P *
            (4.0 + (3.0 * V - 4.0) * P * P +
             (P * (8.0 - 4.0 * P + V * (3.0 * P - 4.0)) - 4.0) * cos2chi);
  // rho_77(t)
  e(6, 6) = 1.0 / 8.0 * P * P * (4.0 - 4.0 * P + V * (3.0 * P - 2.0)) * c2;
  // rho_88(t)
  e(7, 7) = 1.0 / 8.0 * P * P *
            ((4.0 - 3.0 * V) * P + (4.0 - 4.0 * P + V * (3.0 * P - 2.0)) * s2);
  // rho_18(t) = rho_81(t)
  e(0, 7) = 1.0 / 2.0 * (1.0 - V) * std::pow(P, 1.5) * std::cos(chi);
  e(7, 0) = e(0, 7);
  return out;
}

double gmn_closed_form(states::WernerParam vp, double pt, double chi) {
  check_pt_chi(pt, chi);
  return std::numbers::sqrt2 * (1.0 - vp.value()) * std::pow(pt, 1.5) * std::cos(chi);
}

double recovery_theta(states::WernerParam vp, double pt,
                      const channels::RecoveryStrengths& rs) {
  if (!(pt >= 0.0 && pt <= 1.0)) throw DomainError("pt", "must lie in [0, 1]");
  const double V = vp.value();
  const double P = pt;
  const double m = rs.m();
  const double mr = rs.mr();
  return (m - 2.0) * (m * (4.0 + (3.0 * V - 4.0) * m) - 4.0) * (mr - 1.0) * (mr - 1.0) +
         (m - 1.0) * (m - 1.0) * (4.0 - 4.0 * m + V * (3.0 * m - 2.0)) * mr * mr * P * P -
         2.0 * (m - 1.0) * (m * (8.0 - 4.0 * m + V * (3.0 * m - 4.0)) - 4.0) * (mr - 1.0) * mr * P;
}

ClosedFormState recovered_elements(states::WernerParam vp, double pt, double chi,
                                   const channels::RecoveryStrengths& rs) {
  check_pt_chi(pt, chi);
  const double V = vp.value();
  const double P = pt;
  const double m = rs.m();
  const double mr = rs.mr();
  const double c2 = std::cos(chi) * std::cos(chi);
  const double s2 = std::sin(chi) * std::sin(chi);

  const double theta = recovery_theta(vp, pt, rs);
  if (!(theta > 1e-14)) throw ZeroProbabilityError("recovery normalization Theta vanishes");

  ClosedFormState out;
  auto& e = out.elements;
  // rho^w_11(t)
  e(0, 0) = (4.0 - 3.0 * V + 3.0 * V * (m - 1.0) * (P - 1.0) +
             3.0 * V * std::pow(1.0 - m, 2) * std::pow(P - 1.0, 2) -
             (3.0 * V - 4.0) * std::pow(m - 1.0, 3) * std::pow(P - 1.0, 3)) *
            c2 * std::pow(1.0 - mr, 2) / theta;
  // rho^w_22(t)
  e(1, 1) = std::pow(mr - 1.0, 2) * (1.0 - m) *
                (V + 2.0 * V * (m - 1.0) * (P - 1.0) -
                 (3.0 * V - 4.0) * std::pow(m - 1.0, 2) * std::pow(P - 1.0, 2)) *
                P / theta +
            std::pow(mr - 1.0, 2) *
                (4.0 - 3.0 * V + 3.0 * V * (m - 1.0) * (P - 1.0) +
                 3.0 * V * std::pow(m - 1.0, 2) * std::pow(P - 1.0, 2) -
                 (3.0 * V - 4.0) * std::pow(m - 1.0, 3) * std::pow(P - 1.0, 3)) *
                s2 / theta;
  // rho^w_33(t); the printed lowercase "p" is read as P_t
  e(2, 2) = (1.0 - m) * (1.0 - mr) *
            (V + 2.0 * V * (m - 1.0) * (P - 1.0) -
             (3.0 * V - 4.0) * std::pow(m - 1.0, 2) * std::pow(P - 1.0, 2)) *
            P * c2 / theta;
  // rho^w_44(t)
  e(3, 3) = (1.0 - mr) * P * std::pow(1.0 - m, 2) * P *
                (4.0 * (m - 1.0) * (P - 1.0) + V * (3.0 * P - 2.0 - 3.0 * m * (P - 1.0))) /
                theta +
            (1.0 - mr) * P * (1.0 - m) *
                (V + 2.0 * V * (m - 1.0) * (P - 1.0) -
                 (3.0 * V - 4.0) * std::pow(1.0 - m, 2) * std::pow(1.0 - P, 2)) *
                s2 / theta;
  // rho^w_55(t)
  e(4, 4) = (1.0 - m) * (1.0 - mr) *
            (V + 2.0 * V * (m - 1.0) * (P - 1.0) -
             (3.0 * V - 4.0) * std::pow(1.0 - m, 2) * std::pow(1.0 - P, 2)) *
            P * c2 / theta;
  // rho^w_66(t)
  e(5, 5) = (1.0 - mr) * P * std::pow(1.0 - m, 2) * P *
                (4.0 * (m - 1.0) * (P - 1.0) + V * (3.0 * P - 2.0 - 3.0 * m * (P - 1.0))) /
                theta +
            (1.0 - mr) * P * (1.0 - m) *
                (V + 2.0 * V * (m - 1.0) * (P - 1.0) -
                 (3.0 * V - 4.0) * std::pow(1.0 - m, 2) * std::pow(1.0 - P, 2)) *
                s2 / theta;
  // rho^w_77(t)
  e(6, 6) = std::pow(1.0 - m, 2) * P * P *
            (4.0 * (1.0 - m) * (1.0 - P) + V * (3.0 * m * (1.0 - P) + 3.0 * P - 2.0)) * c2 /
            theta;
  // rho^w_88(t)
  e(7, 7) = std::pow(1.0 - m, 2) * P * P *
            ((3.0 * V - 4.0) * (1.0 - m) * P * c2 + (2.0 * V - 4.0 + 4.0 * m - 3.0 * V * m) * s2) /
            theta;
  // rho^w_18(t) = rho^w_81(t)
  e(0, 7) = 4.0 * (V - 1.0) * std::pow(1.0 - m, 1.5) * (mr - 1.0) * std::pow(P, 1.5) *
            std::cos(chi) / theta;
  e(7, 0) = e(0, 7);
  return out;
}

PaperOptimalWmr optimal_wmr_paper(states::WernerParam vp, double pt, double m) {
  if (!(pt >= 0.0 && pt <= 1.0)) throw DomainError("pt", "must lie in [0, 1]");
  check_m(m);
  const double V = vp.value();
  const double P = pt;
  const double xi = 2.0 * (m - 1.0) * (m * (8.0 - 4.0 * m + V * (3.0 * m - 4.0)) - 4.0) * P +
                    std::pow(1.0 - m, 2) * (4.0 - 4.0 * m + V * (3.0 * m - 2.0)) * P * P;
  const double numerator = std::pow(1.0 - m, 2) * (4.0 - 4.0 * m + V * (3.0 * m - 2.0)) * P * P;
  const double radicand =
      numerator * ((m - 2.0) * (m * (4.0 + (3.0 * V - 4.0) * m) - 4.0) - xi);

  PaperOptimalWmr out{std::numeric_limits<double>::quiet_NaN(), radicand, false};
  if (radicand > 0.0) {
    out.value = 1.0 - numerator / std::sqrt(radicand);
    out.valid = std::isfinite(out.value) && out.value >= 0.0 && out.value < 1.0;
  }
  return out;
}

WernerPaperValues werner_paper_inequalities(states::WernerParam vp) {
  const double V = vp.value();
  return {3.0 / 16.0 + 9.0 / 4.0 * V, std::numbers::sqrt2 * (1.0 - V)};
}

}  // namespace steersim::analytic
