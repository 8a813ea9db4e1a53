#include "steersim/witnesses.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace steersim::witness {
namespace {

using qmat::ComplexMatrix;
using qmat::DensityMatrix;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct VariancePair {
  ComplexMatrix difference;  // Z_a - Z_b
  ComplexMatrix sum;         // X_a + Y_b Y_c
};

std::array<VariancePair, 3> build_gms_operators(double s) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix x = qmat::pauli_x() * s;
  const ComplexMatrix y = qmat::pauli_y() * s;
  const ComplexMatrix z = qmat::pauli_z() * s;
  return {{
      {qmat::tensor(z, id, id) - qmat::tensor(id, z, id),
       qmat::tensor(x, id, id) + qmat::tensor(id, y, y)},
      {qmat::tensor(id, z, id) - qmat::tensor(id, id, z),
       qmat::tensor(id, x, id) + qmat::tensor(y, id, y)},
      {qmat::tensor(id, id, z) - qmat::tensor(z, id, id),
       qmat::tensor(id, id, x) + qmat::tensor(y, y, id)},
  }};
}

const std::array<VariancePair, 3>& gms_operators(SpinScale scale) {
  static const std::array<VariancePair, 3> pauli = build_gms_operators(1.0);
  static const std::array<VariancePair, 3> spin_half = build_gms_operators(0.5);
  return scale == SpinScale::pauli ? pauli : spin_half;
}

double variance(const DensityMatrix& rho, const ComplexMatrix& op) {
  const double mean = qmat::expval(rho, op);
  return qmat::expval(rho, op * op) - mean * mean;
}

// Coefficients (on sigma_x, sigma_y) of the unprimed and primed measurement
// for a site rotated by theta.
struct SitePair {
  std::array<double, 2> plain;
  std::array<double, 2> primed;
};

SitePair rotated(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{-s, c}, {c, s}};
}

double contract(const Correlations& t, const std::array<double, 2>& a,
                const std::array<double, 2>& b, const std::array<double, 2>& c) {
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) sum += a[i] * b[j] * c[k] * t[i][j][k];
    }
  }
  return sum;
}

double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// argmax over theta of |alpha cos(theta) + beta sin(theta)|, choosing the
// branch where the signed value is positive.
double best_angle(double alpha, double beta) {
  if (alpha == 0.0 && beta == 0.0) return 0.0;
  return wrap_angle(std::atan2(beta, alpha));
}

}  // namespace

GmsResult gms(const DensityMatrix& rho, SpinScale scale) {
  const auto& ops = gms_operators(scale);
  GmsResult out;
  double* terms[3] = {&out.s1, &out.s2, &out.s3};
  for (int i = 0; i < 3; ++i) {
    *terms[i] = variance(rho, ops[i].difference) + variance(rho, ops[i].sum);
  }
  out.total = out.s1 + out.s2 + out.s3;
  out.violated = is_violated(Witness::gms, out.total);
  return out;
}

ComplexMatrix svetlichny_operator(double theta_b, double theta_c) {
  const ComplexMatrix sx = qmat::pauli_x();
  const ComplexMatrix sy = qmat::pauli_y();
  const auto site = [&](double th) {
    return std::pair{std::cos(th) * sy - std::sin(th) * sx,
                     std::cos(th) * sx + std::sin(th) * sy};
  };
  const ComplexMatrix& a = sy;
  const ComplexMatrix& ap = sx;
  const auto [b, bp] = site(theta_b);
  const auto [c, cp] = site(theta_c);
  const auto t = [&](const ComplexMatrix& p, const ComplexMatrix& q, const ComplexMatrix& r) {
    return qmat::tensor(p, q, r);
  };
  ComplexMatrix s = t(a, b, c) + t(a, b, cp) + t(a, bp, c) + t(ap, b, c);
  s -= t(ap, bp, c);
  s -= t(ap, b, cp);
  s -= t(a, bp, cp);
  s -= t(ap, bp, cp);
  return s;
}

Correlations xy_correlations(const DensityMatrix& rho) {
  static const std::vector<ComplexMatrix> products = [] {
    const std::array<ComplexMatrix, 2> paulis = {qmat::pauli_x(), qmat::pauli_y()};
    std::vector<ComplexMatrix> ops;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) ops.push_back(qmat::tensor(paulis[i], paulis[j], paulis[k]));
      }
    }
    return ops;
  }();
  Correlations out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out[i][j][k] = qmat::trace_product(rho.matrix(), products[4 * i + 2 * j + k]).real();
      }
    }
  }
  return out;
}

double svetlichny_trace(const Correlations& corr, double theta_b, double theta_c) {
  constexpr std::array<double, 2> a{0.0, 1.0};   // sigma_y
  constexpr std::array<double, 2> ap{1.0, 0.0};  // sigma_x
  const SitePair b = rotated(theta_b);
  const SitePair c = rotated(theta_c);
  const auto e = [&](const auto& p, const auto& q, const auto& r) {
    return contract(corr, p, q, r);
  };
  return e(a, b.plain, c.plain) + e(a, b.plain, c.primed) + e(a, b.primed, c.plain) +
         e(ap, b.plain, c.plain) - e(ap, b.primed, c.plain) - e(ap, b.plain, c.primed) -
         e(a, b.primed, c.primed) - e(ap, b.primed, c.primed);
}

double svetlichny_value(const DensityMatrix& rho, double theta_b, double theta_c) {
  return std::abs(svetlichny_trace(xy_correlations(rho), theta_b, theta_c));
}

GmnResult gmn(const DensityMatrix& rho) {
  const Correlations corr = xy_correlations(rho);

  // The trace is bilinear in (cos tb, sin tb) and (cos tc, sin tc) with a
  // 2x2 coefficient matrix M read off at 0 and pi/2.
  constexpr double kQuarter = std::numbers::pi / 2.0;
  const double m00 = svetlichny_trace(corr, 0.0, 0.0);
  const double m01 = svetlichny_trace(corr, 0.0, kQuarter);
  const double m10 = svetlichny_trace(corr, kQuarter, 0.0);
  const double m11 = svetlichny_trace(corr, kQuarter, kQuarter);

  static const auto grid = [] {
    std::array<std::pair<double, double>, kGmnGridSize> g{};
    for (int i = 0; i < kGmnGridSize; ++i) {
      const double t = kTwoPi * i / kGmnGridSize;
      g[i] = {std::cos(t), std::sin(t)};
    }
    return g;
  }();

  double best = -1.0;
  double tb = 0.0;
  double tc = 0.0;
  for (int i = 0; i < kGmnGridSize; ++i) {
    const auto [cb, sb] = grid[i];
    const double row0 = cb * m00 + sb * m10;
    const double row1 = cb * m01 + sb * m11;
    for (int j = 0; j < kGmnGridSize; ++j) {
      const double v = std::abs(row0 * grid[j].first + row1 * grid[j].second);
      if (v > best) {
        best = v;
        tb = kTwoPi * i / kGmnGridSize;
        tc = kTwoPi * j / kGmnGridSize;
      }
    }
  }
  best = std::abs(svetlichny_trace(corr, tb, tc));

  // Maximum modulus is reached along the top right singular vector of M,
  // i.e. the principal eigenvector of M^T M.
  const double p = m00 * m00 + m10 * m10;
  const double s = m01 * m01 + m11 * m11;
  const double r = m00 * m01 + m10 * m11;
  const double c = 0.5 * std::atan2(2.0 * r, p - s);
  const double b = best_angle(m00 * std::cos(c) + m01 * std::sin(c),
                              m10 * std::cos(c) + m11 * std::sin(c));
  const double exact = std::abs(svetlichny_trace(corr, b, c));
  if (exact >= best) {
    best = exact;
    tb = b;
    tc = c;
  }

  GmnResult out;
  out.value = best / 4.0;
  out.theta_b = wrap_angle(tb);
  out.theta_c = wrap_angle(tc);
  out.violated = is_violated(Witness::gmn, out.value);
  return out;
}

double witness_value(Witness w, const DensityMatrix& rho, SpinScale scale) {
  return w == Witness::gms ? gms(rho, scale).total : gmn(rho).value;
}

bool is_violated(Witness w, double value) {
  return w == Witness::gms ? value < 1.0 - kFlagTol : value > 1.0 + kFlagTol;
}

}  // namespace steersim::witness
