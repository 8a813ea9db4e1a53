#include "steersim/app/commands.hpp"

#include <unistd.h>

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "steersim/analytic.hpp"
#include "steersim/app/parallel.hpp"
#include "steersim/errors.hpp"
#include "steersim/states.hpp"

namespace steersim::app {

bool colour_enabled() {
  const char* no_colour = std::getenv("NO_COLOR");
  if (no_colour != nullptr && *no_colour != '\0') return false;
  return ::isatty(STDOUT_FILENO) != 0;
}

std::string Style::pass() const { return colour ? "\033[32mPASS\033[0m" : "PASS"; }
std::string Style::fail() const { return colour ? "\033[31mFAIL\033[0m" : "FAIL"; }
std::string Style::soft() const { return colour ? "\033[33mSOFT\033[0m" : "SOFT"; }

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw ContractError("bisect_root: no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Thresholds compute_thresholds() {
  using states::WernerParam;
  const auto werner = [](double v) { return states::werner(WernerParam(v)); };
  const double tol = kThresholdTol / 4.0;
  Thresholds t{};
  t.gms_paper = bisect_root(
      [](double v) { return analytic::werner_paper_inequalities(WernerParam(v)).gms - 1.0; }, 0.0,
      1.0, tol);
  t.gmn_paper = bisect_root(
      [](double v) { return analytic::werner_paper_inequalities(WernerParam(v)).gmn - 1.0; }, 0.0,
      1.0, tol);
  t.gms_direct_pauli = bisect_root(
      [&](double v) { return witness::gms(werner(v), witness::SpinScale::pauli).total - 1.0; },
      0.0, 1.0, tol);
  t.gms_direct_spin_half = bisect_root(
      [&](double v) { return witness::gms(werner(v), witness::SpinScale::spin_half).total - 1.0; },
      0.0, 1.0, tol);
  t.gmn_direct = bisect_root([&](double v) { return witness::gmn(werner(v)).value - 1.0; }, 0.0,
                             1.0, tol);
  return t;
}

namespace {

std::string fixed(double x, int prec = 10) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(prec) << x;
  return ss.str();
}

std::string sci(double x) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(2) << x;
  return ss.str();
}

const char* scale_name(witness::SpinScale s) {
  return s == witness::SpinScale::pauli ? "pauli" : "spin-half";
}

std::string flag(bool violated) { return violated ? "violated" : "not violated"; }

// Domain errors from core name the parameter; the CLI flag has the same name.
// Values that came from a sweep axis are reported against --axis instead.
[[noreturn]] void rethrow_domain(const DomainError& e, const std::vector<Axis>& axes) {
  for (const auto& a : axes) {
    if (a.name == e.parameter()) throw as_usage_error(e, "--axis");
  }
  throw as_usage_error(e, "--" + e.parameter());
}

void print_point(std::ostream& os, const Point& p) {
  os << "point        v=" << format_number(p.v) << " lambda-ratio=" << format_number(p.lambda_ratio)
     << " tau=" << format_number(p.tau) << " accel-ratio=" << format_number(p.accel_ratio);
  if (p.m) os << " m=" << format_number(*p.m);
  os << '\n';
}

void print_witnesses(std::ostream& os, const PointResult& r, witness::SpinScale scale) {
  os << "GMS          S1=" << fixed(r.gms.s1) << " S2=" << fixed(r.gms.s2) << " S3=" << fixed(r.gms.s3)
     << " total=" << fixed(r.gms.total) << "  " << flag(r.gms.violated) << " (" << scale_name(scale)
     << ")\n"
     << "GMN          value=" << fixed(r.gmn.value) << " theta_b=" << fixed(r.gmn.theta_b, 6)
     << " theta_c=" << fixed(r.gmn.theta_c, 6) << "  " << flag(r.gmn.violated) << '\n';
}

}  // namespace

int cmd_eval(const RunConfig& cfg, std::ostream& os, const Style&) {
  const Evaluator ev{cfg.objective, cfg.gms_scale};
  const Point p = base_point(cfg);
  const auto [sp, r] = [&] {
    try {
      return std::pair{ev.scenario(p), ev.evaluate(p)};
    } catch (const DomainError& e) {
      rethrow_domain(e, {});
    }
  }();
  const double pt = channels::pt_coherence(sp.reservoir);
  const double chi = channels::unruh_chi(sp.unruh);

  print_point(os, p);
  os << "P_t          " << fixed(pt, 12) << '\n' << "chi          " << fixed(chi, 12) << '\n';
  if (sp.recovery) {
    os << "mr           " << fixed(r.mr, 10) << '\n'
       << "probability  " << fixed(r.probability, 10) << '\n';
  }
  print_witnesses(os, r, cfg.gms_scale);

  if (sp.recovery) {
    const auto closed = analytic::recovered_elements(sp.v, pt, chi, *sp.recovery);
    const auto rho = pipeline::evolve_recovery(sp).state;
    double worst = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        if (i == 7 && j == 7) continue;
        worst = std::max(worst, std::abs(rho(i, j) - closed.elements(i, j)));
      }
    }
    os << "closed form  max |rho - printed| (excluding rho88) = " << sci(worst) << '\n'
       << "             rho88 pipeline=" << fixed(rho(7, 7).real(), 12)
       << " printed=" << fixed(closed.rho(8, 8).real(), 12) << '\n';
  } else {
    const auto closed = analytic::evolved_elements(sp.v, pt, chi);
    const auto rho = pipeline::evolve_baseline(sp);
    os << "closed form  max |rho - printed| = "
       << sci(qmat::max_abs_diff(rho.matrix(), closed.elements))
       << "  |GMN - printed| = " << sci(std::abs(r.gmn.value - analytic::gmn_closed_form(sp.v, pt, chi)))
       << '\n';
  }
  return kExitOk;
}

int cmd_thresholds(const RunConfig&, std::ostream& os, const Style&) {
  const Thresholds t = compute_thresholds();
  os << "Werner-state boundaries in V (t = 0, no acceleration), bisection to "
     << sci(kThresholdTol) << "\n\n"
     << "witness           printed formula   direct witness    difference\n";
  const auto row = [&](const char* name, double paper, double direct) {
    os << std::left << std::setw(18) << name << fixed(paper) << "      " << fixed(direct)
       << "      " << sci(std::abs(paper - direct)) << '\n';
  };
  row("GMS (spin-half)", t.gms_paper, t.gms_direct_spin_half);
  row("GMS (pauli)", t.gms_paper, t.gms_direct_pauli);
  row("GMN", t.gmn_paper, t.gmn_direct);
  os << "\nreference: 13/36 = " << fixed(13.0 / 36.0) << ", (2 - sqrt 2)/2 = "
     << fixed((2.0 - std::sqrt(2.0)) / 2.0) << '\n';
  return kExitOk;
}

int cmd_recover(const RunConfig& cfg, std::ostream& os, const Style&) {
  if (!cfg.m) throw UsageError("--m", "recover needs a measurement strength");
  const Evaluator ev{cfg.objective, cfg.gms_scale};
  Point p = base_point(cfg);
  print_point(os, p);

  const auto show = [&](const std::string& label, const Point& q) {
    os << "\n[" << label << "]\n";
    const PointResult r = ev.evaluate(q);
    if (q.m) {
      os << "mr           " << fixed(r.mr) << '\n'
         << "probability  " << fixed(r.probability) << '\n';
    }
    print_witnesses(os, r, cfg.gms_scale);
  };

  try {
    Point base = p;
    base.m.reset();
    show("no measurement", base);

    p.mr = {MrChoice::Kind::optimal, 0.0};
    show(std::string("numeric optimum (objective ") +
             (cfg.objective == pipeline::Objective::gmn ? "gmn" : "gms") + ")",
         p);

    const auto sp = ev.scenario(base);
    const auto printed = analytic::optimal_wmr_paper(
        sp.v, channels::pt_coherence(sp.reservoir), *cfg.m);
    if (printed.valid) {
      p.mr = {MrChoice::Kind::paper, 0.0};
      show("printed optimum", p);
    } else {
      os << "\n[printed optimum]\nnot a valid strength here (radicand " << fixed(printed.radicand)
         << ")\n";
    }
    if (cfg.mr.kind == MrChoice::Kind::fixed) {
      p.mr = cfg.mr;
      show("requested mr", p);
    }
  } catch (const DomainError& e) {
    rethrow_domain(e, {});
  }
  return kExitOk;
}

SweepTable run_sweep(const RunConfig& cfg) {
  if (cfg.axes.empty()) throw UsageError("--axis", "sweep needs at least one axis");
  for (std::size_t i = 0; i < cfg.axes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (cfg.axes[i].name == cfg.axes[j].name) {
        throw UsageError("--axis", "axis '" + cfg.axes[i].name + "' given twice");
      }
    }
  }

  const Point base = base_point(cfg);
  bool recovery = base.m.has_value();
  for (const auto& a : cfg.axes) recovery = recovery || a.name == "m" || a.name == "mr";
  if (recovery && !base.m) {
    bool has_m = false;
    for (const auto& a : cfg.axes) has_m = has_m || a.name == "m";
    if (!has_m) throw UsageError("--axis", "an mr axis needs --m or an m axis");
  }

  std::vector<std::vector<double>> grids;
  std::size_t total = 1;
  for (const auto& a : cfg.axes) {
    grids.push_back(a.values());
    total *= grids.back().size();
  }
  const auto coords = [&](std::size_t index) {
    std::vector<double> c(grids.size());
    for (std::size_t k = grids.size(); k-- > 0;) {
      c[k] = grids[k][index % grids[k].size()];
      index /= grids[k].size();
    }
    return c;
  };

  const Evaluator ev{cfg.objective, cfg.gms_scale};
  std::vector<PointResult> results;
  try {
    results = parallel_map(total, cfg.threads, [&](std::size_t i) {
      Point p = base;
      const auto c = coords(i);
      for (std::size_t k = 0; k < c.size(); ++k) p.set(cfg.axes[k].name, c[k]);
      return ev.evaluate(p);
    });
  } catch (const DomainError& e) {
    rethrow_domain(e, cfg.axes);
  }

  std::vector<std::string> names;
  for (const auto& a : cfg.axes) names.push_back(a.name);
  for (const char* n : {"gms_s1", "gms_s2", "gms_s3", "gms_total", "gmn", "theta_b", "theta_c"}) {
    names.emplace_back(n);
  }
  if (recovery) {
    names.emplace_back("mr_used");
    names.emplace_back("probability");
  }
  SweepTable table(names, cfg.axes.size());
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<double> row = coords(i);
    const auto& r = results[i];
    row.insert(row.end(), {r.gms.s1, r.gms.s2, r.gms.s3, r.gms.total, r.gmn.value,
                           r.gmn.theta_b, r.gmn.theta_c});
    if (recovery) row.insert(row.end(), {r.mr, r.probability});
    table.add_row(row);
  }
  return table;
}

namespace {

std::string svg_path(const std::string& csv_path) {
  const std::string ext = ".csv";
  if (csv_path.size() > ext.size() &&
      csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0) {
    return csv_path.substr(0, csv_path.size() - ext.size()) + ".svg";
  }
  return csv_path + ".svg";
}

void emit(const RunConfig& cfg, const SweepTable& table, const PlotSpec& plot, std::ostream& os) {
  if (cfg.out.empty()) {
    if (cfg.svg) throw UsageError("--svg", "needs --out to name the output files");
    write_csv(os, table);
    return;
  }
  std::ofstream csv(cfg.out);
  if (!csv) throw UsageError("--out", "cannot open " + cfg.out);
  write_csv(csv, table);
  os << "wrote " << cfg.out << " (" << table.row_count() << " rows)\n";
  if (cfg.svg) {
    const std::string path = svg_path(cfg.out);
    std::ofstream svg(path);
    if (!svg) throw UsageError("--out", "cannot open " + path);
    write_svg(svg, plot);
    os << "wrote " << path << '\n';
  }
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, std::ostream& os, const Style&) {
  const SweepTable table = run_sweep(cfg);
  PlotSpec plot;
  const auto& x_name = cfg.axes.front().name;
  plot.title = "sweep over " + x_name;
  plot.x_label = x_name;
  plot.y_label = "witness value";
  plot.reference_y = 1.0;
  if (cfg.axes.size() == 1) {
    plot.series.push_back({"GMS total", table.column(0), table.column("gms_total")});
    plot.series.push_back({"GMN", table.column(0), table.column("gmn")});
  } else {
    // Only the first slice of the outer axes is plotted.
    const std::size_t n = static_cast<std::size_t>(cfg.axes.back().steps);
    const auto& inner = table.column(cfg.axes.size() - 1);
    const auto slice = [&](const std::vector<double>& c) {
      return std::vector<double>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
    };
    plot.x_label = cfg.axes.back().name;
    plot.title = "sweep over " + cfg.axes.back().name + " (first slice)";
    plot.series.push_back({"GMS total", slice(inner), slice(table.column("gms_total"))});
    plot.series.push_back({"GMN", slice(inner), slice(table.column("gmn"))});
  }
  emit(cfg, table, plot, os);
  return kExitOk;
}

int cmd_figure(const RunConfig& cfg, std::ostream& os, const Style&) {
  const FigureData fig = build_figure(cfg.figure, cfg);
  emit(cfg, fig.table, fig.plot, os);
  return kExitOk;
}

}  // namespace steersim::app
