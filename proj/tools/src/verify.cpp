#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "steersim/analytic.hpp"
#include "steersim/app/commands.hpp"
#include "steersim/app/parallel.hpp"
#include "steersim/errors.hpp"

namespace steersim::app {
namespace {

using states::WernerParam;

std::string sci(double x) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(2) << x;
  return ss.str();
}

std::string fix(double x, int prec = 6) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(prec) << x;
  return ss.str();
}

std::vector<double> grid(double lo, double hi, int n) { return Axis{"", lo, hi, n}.values(); }

struct Check {
  std::string name;
  bool hard = true;
  bool ok = true;
  std::string detail;
  std::vector<std::string> table;  // extra lines printed under soft findings
};

Check kraus_completeness() {
  double worst = 0.0;
  const auto defect = [](const channels::KrausChannel& ch) {
    return qmat::max_abs_diff(ch.completeness(), qmat::ComplexMatrix::identity(2));
  };
  for (double pt : grid(0.0, 1.0, 21)) worst = std::max(worst, defect(channels::amplitude_damping(pt)));
  for (double chi : grid(0.0, std::numbers::pi / 4.0, 21)) {
    worst = std::max(worst, defect(channels::unruh_channel(chi)));
  }
  return {"kraus completeness", true, worst <= channels::kCompletenessTol,
          "max deviation " + sci(worst) + " (tol " + sci(channels::kCompletenessTol) + ")", {}};
}

// 10x10x10 grid in (V, gamma0 t in [0, 10] at lambda/gamma0 = 0.01, a/omega in [0, 5]).
std::pair<Check, Check> baseline_grid(unsigned threads) {
  const auto vs = grid(0.0, 1.0, 10);
  const auto taus = grid(0.0, 10.0, 10);
  const auto accels = grid(0.0, 5.0, 10);
  const auto devs = parallel_map(1000, threads, [&](std::size_t i) {
    const WernerParam v(vs[i / 100]);
    const double pt = channels::pt_coherence(channels::ReservoirParams(0.01, taus[(i / 10) % 10]));
    const double chi = channels::unruh_chi(channels::UnruhParams(accels[i % 10]));
    const auto rho = pipeline::evolve_baseline_at(v, pt, chi);
    const double elem = qmat::max_abs_diff(rho.matrix(), analytic::evolved_elements(v, pt, chi).elements);
    const double gmn = std::abs(witness::gmn(rho).value - analytic::gmn_closed_form(v, pt, chi));
    return std::pair{elem, gmn};
  });
  double elem = 0.0;
  double gmn = 0.0;
  for (const auto& [e, g] : devs) {
    elem = std::max(elem, e);
    gmn = std::max(gmn, g);
  }
  return {{"evolved state vs printed elements", true, elem < 1e-10,
           "max deviation " + sci(elem) + " over 1000 points (tol 1e-10)", {}},
          {"GMN optimizer vs printed closed form", true, gmn < 1e-6,
           "max deviation " + sci(gmn) + " over 1000 points (tol 1e-06)", {}}};
}

// 6^5 grid in (V, P_t, chi, m, m_r).
std::pair<Check, Check> recovery_grid(unsigned threads) {
  const auto unit = grid(0.0, 1.0, 6);
  const auto chis = grid(0.0, std::numbers::pi / 4.0, 6);
  const auto strengths = grid(0.0, 0.9, 6);
  struct Dev {
    double other = 0.0;
    double rho88 = 0.0;
    double rho88_flipped = 0.0;
  };
  const auto devs = parallel_map(7776, threads, [&](std::size_t i) {
    const WernerParam v(unit[i / 1296]);
    const double pt = unit[(i / 216) % 6];
    const double chi = chis[(i / 36) % 6];
    const channels::RecoveryStrengths rs(strengths[(i / 6) % 6], strengths[i % 6]);
    const auto rho = pipeline::evolve_recovery_at(v, pt, chi, rs).state;
    const auto closed = analytic::recovered_elements(v, pt, chi, rs);
    Dev d;
    for (std::size_t r = 0; r < 8; ++r) {
      for (std::size_t c = 0; c < 8; ++c) {
        if (r == 7 && c == 7) continue;
        d.other = std::max(d.other, std::abs(rho(r, c) - closed.elements(r, c)));
      }
    }
    d.rho88 = std::abs(rho(7, 7) - closed.rho(8, 8));
    d.rho88_flipped = std::abs(rho(7, 7) + closed.rho(8, 8));
    return d;
  });
  Dev worst;
  for (const auto& d : devs) {
    worst.other = std::max(worst.other, d.other);
    worst.rho88 = std::max(worst.rho88, d.rho88);
    worst.rho88_flipped = std::max(worst.rho88_flipped, d.rho88_flipped);
  }
  const bool flip = worst.rho88 > 1e-10 && worst.rho88_flipped < 1e-10;
  return {{"recovered state vs printed elements (all but (8,8))", true, worst.other < 1e-10,
           "max deviation " + sci(worst.other) + " over 7776 points (tol 1e-10)", {}},
          {"recovered element (8,8)", false, worst.rho88 < 1e-10,
           "max |pipeline - printed| " + sci(worst.rho88) + ", max |pipeline + printed| " +
               sci(worst.rho88_flipped) +
               (flip ? "; printed element has the opposite sign" : ""),
           {}}};
}

std::pair<Check, Check> hierarchy(unsigned threads, std::size_t samples) {
  const auto flags = parallel_map(samples, threads, [&](std::size_t i) {
    std::mt19937_64 rng(0x5eed + i);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    constexpr std::array<double, 3> lambdas = {0.001, 0.01, 0.1};
    pipeline::ScenarioParams p{WernerParam(u(rng)),
                               channels::ReservoirParams(lambdas[i % 3], 10.0 * u(rng)),
                               channels::UnruhParams(5.0 * u(rng)), std::nullopt};
    if (i % 2 == 1) p.recovery = channels::RecoveryStrengths(0.95 * u(rng), 0.95 * u(rng));
    const auto rho = pipeline::evolve(p);
    const bool gmn = witness::gmn(rho).violated;
    return std::pair{gmn && !witness::gms(rho, witness::SpinScale::spin_half).violated,
                     gmn && !witness::gms(rho, witness::SpinScale::pauli).violated};
  });
  std::size_t spin_half = 0;
  std::size_t pauli = 0;
  for (const auto& [s, p] : flags) {
    spin_half += s ? 1 : 0;
    pauli += p ? 1 : 0;
  }
  const std::string n = std::to_string(samples);
  return {{"hierarchy GMN => GMS (spin-half observables)", true, spin_half == 0,
           std::to_string(spin_half) + " counterexamples in " + n + " samples", {}},
          {"hierarchy GMN => GMS (pauli observables)", false, pauli == 0,
           std::to_string(pauli) + " counterexamples in " + n + " samples", {}}};
}

Check werner_gms_expression() {
  double pauli = 0.0;
  double spin_half = 0.0;
  for (double v : grid(0.0, 1.0, 101)) {
    const WernerParam wv(v);
    const double printed = analytic::werner_paper_inequalities(wv).gms;
    const auto rho = states::werner(wv);
    pauli = std::max(pauli, std::abs(witness::gms(rho, witness::SpinScale::pauli).total - printed));
    spin_half = std::max(spin_half,
                         std::abs(witness::gms(rho, witness::SpinScale::spin_half).total - printed));
  }
  return {"printed Werner GMS expression vs direct witness", false, pauli < 1e-10,
          "max deviation " + sci(pauli) + " with pauli observables, " + sci(spin_half) +
              " with spin-half observables",
          {}};
}

Check printed_optimal_wmr(unsigned threads) {
  struct Row {
    double v, tau, m, radicand, printed, numeric, gmn_printed, gmn_numeric;
    bool valid;
  };
  const auto vs = std::vector<double>{0.0, 0.25, 0.5, 0.75};
  const auto taus = std::vector<double>{1.0, 3.0, 6.0, 10.0, 20.0};
  const auto ms = std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9};
  const std::size_t n = vs.size() * taus.size() * ms.size();
  const auto rows = parallel_map(n, threads, [&](std::size_t i) {
    Row r{};
    r.v = vs[i / (taus.size() * ms.size())];
    r.tau = taus[(i / ms.size()) % taus.size()];
    r.m = ms[i % ms.size()];
    pipeline::ScenarioParams p{WernerParam(r.v), channels::ReservoirParams(0.01, r.tau),
                               channels::UnruhParams(2.0), channels::RecoveryStrengths(r.m, 0.0)};
    const auto printed =
        analytic::optimal_wmr_paper(p.v, channels::pt_coherence(p.reservoir), r.m);
    r.radicand = printed.radicand;
    r.valid = printed.valid;
    r.printed = printed.value;
    r.numeric = pipeline::optimal_wmr_numeric(p);
    r.gmn_numeric = pipeline::witness_at(witness::Witness::gmn, pipeline::with_mr(p, r.numeric));
    r.gmn_printed = r.valid ? pipeline::witness_at(witness::Witness::gmn, pipeline::with_mr(p, r.printed))
                            : std::nan("");
    return r;
  });

  Check c{"printed optimal reversal strength vs numeric optimum", false, true, "", {}};
  std::size_t invalid = 0;
  std::size_t worse = 0;
  double worst_gap = 0.0;
  c.table.push_back("      V    g0t      m    radicand     printed     numeric  GMN(printed)  GMN(numeric)");
  for (const auto& r : rows) {
    const bool suboptimal = r.valid && r.gmn_printed < r.gmn_numeric - 1e-6;
    if (!r.valid) ++invalid;
    if (suboptimal) {
      ++worse;
      worst_gap = std::max(worst_gap, r.gmn_numeric - r.gmn_printed);
    }
    if (!r.valid || suboptimal) {
      std::ostringstream line;
      line << std::setw(7) << fix(r.v, 2) << std::setw(7) << fix(r.tau, 1) << std::setw(7)
           << fix(r.m, 2) << std::setw(12) << fix(r.radicand, 4) << std::setw(12)
           << (r.valid ? fix(r.printed, 6) : std::string("invalid")) << std::setw(12)
           << fix(r.numeric, 6) << std::setw(14)
           << (r.valid ? fix(r.gmn_printed, 6) : std::string("-")) << std::setw(14)
           << fix(r.gmn_numeric, 6);
      c.table.push_back(line.str());
    }
  }
  c.ok = invalid == 0 && worse == 0;
  c.detail = std::to_string(invalid) + " of " + std::to_string(n) +
             " points have no valid printed value, " + std::to_string(worse) +
             " valid points fall short of the numeric optimum (worst GMN gap " + fix(worst_gap) +
             ")";
  if (c.ok) c.table.clear();
  return c;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& os, const Style& style) {
  std::vector<Check> checks;
  checks.push_back(kraus_completeness());
  auto [evolved, gmn] = baseline_grid(cfg.threads);
  checks.push_back(evolved);
  checks.push_back(gmn);
  auto [recovered, rho88] = recovery_grid(cfg.threads);
  checks.push_back(recovered);
  checks.push_back(rho88);
  auto [hier_spin, hier_pauli] = hierarchy(cfg.threads, 2000);
  checks.push_back(hier_spin);
  checks.push_back(hier_pauli);
  checks.push_back(werner_gms_expression());
  checks.push_back(printed_optimal_wmr(cfg.threads));

  bool hard_failed = false;
  for (const auto& c : checks) {
    std::string tag;
    if (c.ok) {
      tag = style.pass();
    } else if (c.hard) {
      tag = style.fail();
      hard_failed = true;
    } else {
      tag = style.soft();
    }
    os << tag << "  " << c.name << ": " << c.detail << '\n';
    constexpr std::size_t kMaxTableRows = 15;
    if (!c.ok && !c.table.empty()) {
      const std::size_t shown = std::min(c.table.size(), kMaxTableRows + 1);
      for (std::size_t i = 0; i < shown; ++i) os << "        " << c.table[i] << '\n';
      if (c.table.size() > shown) {
        os << "        ... " << c.table.size() - shown << " more rows\n";
      }
    }
  }
  os << (hard_failed ? "hard checks failed\n" : "all hard checks passed\n");
  return hard_failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace steersim::app
