#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>

#include "steersim/analytic.hpp"
#include "steersim/app/commands.hpp"
#include "steersim/app/parallel.hpp"
#include "steersim/errors.hpp"

namespace steersim::app {
namespace {

enum class Quantity { gms, gmn };

enum class Shape { werner, lines, surface, sensitivity };

struct FigureSpec {
  std::string title;
  Shape shape = Shape::lines;
  Point fixed;
  Axis x;                     // lines: abscissa; surface: inner axis
  std::optional<Axis> outer;  // surface only
  std::string family_axis;    // lines only; empty => single curve per quantity
  std::vector<double> family;
  std::vector<Quantity> quantities;
};

Point point(double v, double lambda_ratio, double tau, double accel_ratio) {
  Point p;
  p.v = v;
  p.lambda_ratio = lambda_ratio;
  p.tau = tau;
  p.accel_ratio = accel_ratio;
  return p;
}

const std::vector<double> kStateFamily = {0.0, 0.1, 0.2, 0.3};
const std::vector<double> kStrengthFamily = {0.0, 0.3, 0.6, 0.9};

const std::map<std::string, FigureSpec>& specs() {
  static const std::map<std::string, FigureSpec> table = [] {
    std::map<std::string, FigureSpec> t;
    using Q = Quantity;

    // "Two quantum-measure (GMS and GMN inequalities) as function of the state
    // parameters V when they initially share a tripartite Werner-type state."
    t["1"] = {"Werner state at t = 0", Shape::werner, point(0, 0.01, 0, 0),
              {"v", 0.0, 1.0, 101}, {}, "", {}, {}};

    // "as function of gamma0 t in terms of different value lambda/gamma0 for
    // V=0, a/omega=2. (a) lambda/gamma0=0.01, (b) lambda/gamma0=0.001."
    t["2a"] = {"V = 0, a/w = 2, lambda/g0 = 0.01", Shape::lines, point(0, 0.01, 0, 2),
               {"tau", 0.0, 100.0, 501}, {}, "", {}, {Q::gms, Q::gmn}};
    t["2b"] = {"V = 0, a/w = 2, lambda/g0 = 0.001", Shape::lines, point(0, 0.001, 0, 2),
               {"tau", 0.0, 400.0, 801}, {}, "", {}, {Q::gms, Q::gmn}};

    // "(a1), (b1) GMS-inequality and GMN-inequality as function of gamma0 t in
    // terms of different state parameter V for lambda/gamma0 = 0.01,
    // a/omega = 2". V values are not listed in the caption.
    t["3a1"] = {"GMS, lambda/g0 = 0.01, a/w = 2", Shape::lines, point(0, 0.01, 0, 2),
                {"tau", 0.0, 100.0, 501}, {}, "v", kStateFamily, {Q::gms}};
    t["3b1"] = {"GMN, lambda/g0 = 0.01, a/w = 2", Shape::lines, point(0, 0.01, 0, 2),
                {"tau", 0.0, 100.0, 501}, {}, "v", kStateFamily, {Q::gmn}};

    // "(a2), (b2) GMS-inequality and GMN-inequality as function of a/omega in
    // terms of different state parameter V for lambda/gamma0 = 0.01,
    // gamma0 t = 2".
    t["3a2"] = {"GMS, lambda/g0 = 0.01, g0 t = 2", Shape::lines, point(0, 0.01, 2, 0),
                {"accel-ratio", 0.0, 10.0, 201}, {}, "v", kStateFamily, {Q::gms}};
    t["3b2"] = {"GMN, lambda/g0 = 0.01, g0 t = 2", Shape::lines, point(0, 0.01, 2, 0),
                {"accel-ratio", 0.0, 10.0, 201}, {}, "v", kStateFamily, {Q::gmn}};

    // "The absolute value of first-order partial derivative of GMS-inequality
    // (GMN-inequality) with the different parameters ..., when a/omega=0 or
    // gamma0 t=0." V and lambda/gamma0 are not given; V = 0, 0.01 assumed.
    t["4a"] = {"|dGMS| with the other parameter at 0", Shape::sensitivity,
               point(0, 0.01, 0, 0), {"x", 0.0, 10.0, 201}, {}, "", {}, {Q::gms}};
    t["4b"] = {"|dGMN| with the other parameter at 0", Shape::sensitivity,
               point(0, 0.01, 0, 0), {"x", 0.0, 10.0, 201}, {}, "", {}, {Q::gmn}};

    // "(a) The GMS-inequality as functions of the state parameter V and
    // gamma0 t for lambda/gamma0=0.01, a/omega=1. (b) The GMN-inequality ..."
    t["5a"] = {"GMS, lambda/g0 = 0.01, a/w = 1", Shape::surface, point(0, 0.01, 0, 1),
               {"tau", 0.0, 100.0, 201}, Axis{"v", 0.0, 1.0, 11}, "", {}, {Q::gms}};
    t["5b"] = {"GMN, lambda/g0 = 0.01, a/w = 1", Shape::surface, point(0, 0.01, 0, 1),
               {"tau", 0.0, 100.0, 201}, Axis{"v", 0.0, 1.0, 11}, "", {}, {Q::gmn}};

    // "(1), (2) GMS-inequality and GMN-inequality as function of gamma0 t in
    // terms of different WM strength m for lambda/gamma0 = 0.01, a/omega = 2,
    // V = 0".
    t["7"] = {"V = 0, lambda/g0 = 0.01, a/w = 2", Shape::lines, point(0, 0.01, 0, 2),
              {"tau", 0.0, 100.0, 201}, {}, "m", kStrengthFamily, {Q::gms, Q::gmn}};

    // "(a), (b) GMS-inequality and GMN-inequality as function of a/omega in
    // terms of different WM strength m for lambda/gamma0 = 0.01,
    // gamma0 t = 6, V = 0".
    t["8a"] = {"GMS, V = 0, lambda/g0 = 0.01, g0 t = 6", Shape::lines, point(0, 0.01, 6, 0),
               {"accel-ratio", 0.0, 20.0, 101}, {}, "m", kStrengthFamily, {Q::gms}};
    t["8b"] = {"GMN, V = 0, lambda/g0 = 0.01, g0 t = 6", Shape::lines, point(0, 0.01, 6, 0),
               {"accel-ratio", 0.0, 20.0, 101}, {}, "m", kStrengthFamily, {Q::gmn}};

    // "(a1), (b1) The GMS-inequality and GMN-inequality as functions of the WM
    // strength m and a/omega for lambda/gamma0 = 0.01, V = 0, gamma0 t = 6".
    t["9a1"] = {"GMS, V = 0, lambda/g0 = 0.01, g0 t = 6", Shape::surface, point(0, 0.01, 6, 0),
                {"accel-ratio", 0.0, 20.0, 51}, Axis{"m", 0.0, 0.95, 20}, "", {}, {Q::gms}};
    t["9b1"] = {"GMN, V = 0, lambda/g0 = 0.01, g0 t = 6", Shape::surface, point(0, 0.01, 6, 0),
                {"accel-ratio", 0.0, 20.0, 51}, Axis{"m", 0.0, 0.95, 20}, "", {}, {Q::gmn}};

    // "(a2), (b2) The GMS-inequality and GMN-inequality as functions of the WM
    // strength m and gamma0 t for lambda/gamma0 = 0.01, V = 0, a/omega = 2".
    t["9a2"] = {"GMS, V = 0, lambda/g0 = 0.01, a/w = 2", Shape::surface, point(0, 0.01, 0, 2),
                {"tau", 0.0, 100.0, 101}, Axis{"m", 0.0, 0.95, 20}, "", {}, {Q::gms}};
    t["9b2"] = {"GMN, V = 0, lambda/g0 = 0.01, a/w = 2", Shape::surface, point(0, 0.01, 0, 2),
                {"tau", 0.0, 100.0, 101}, Axis{"m", 0.0, 0.95, 20}, "", {}, {Q::gmn}};
    return t;
  }();
  return table;
}

const char* quantity_name(Quantity q) { return q == Quantity::gms ? "gms_total" : "gmn"; }

double pick(Quantity q, const PointResult& r) {
  return q == Quantity::gms ? r.gms.total : r.gmn.value;
}

// m = 0 means no measurement at all: the baseline scenario.
void set_coordinate(Point& p, const std::string& name, double value, const MrChoice& mr) {
  if (name == "m") {
    if (value == 0.0) {
      p.m.reset();
    } else {
      p.m = value;
      p.mr = mr;
    }
    return;
  }
  p.set(name, value);
}

void apply_overrides(FigureSpec& spec, const std::string& id, const std::vector<Axis>& axes) {
  for (const auto& a : axes) {
    if (a.name == spec.x.name) {
      spec.x.lo = a.lo;
      spec.x.hi = a.hi;
      spec.x.steps = a.steps;
    } else if (spec.outer && a.name == spec.outer->name) {
      spec.outer = a;
    } else if (!spec.family_axis.empty() && a.name == spec.family_axis) {
      spec.family = a.values();
    } else {
      throw UsageError("--axis", "figure " + id + " has no axis '" + a.name + "'");
    }
  }
}

std::string label(const std::string& axis, double value) {
  return axis + "=" + format_number(value);
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"1",  "2a", "2b", "3a1", "3a2", "3b1",
                                               "3b2", "4a", "4b", "5a",  "5b",  "7",
                                               "8a", "8b", "9a1", "9a2", "9b1", "9b2"};
  return ids;
}

FigureData build_figure(const std::string& id, const RunConfig& cfg) {
  const auto it = specs().find(id);
  if (it == specs().end()) throw UsageError("figure", "unknown figure id '" + id + "'");
  FigureSpec spec = it->second;
  // "x" in the sensitivity figures stands for whichever parameter is varied.
  std::vector<Axis> axes = cfg.axes;
  if (spec.shape == Shape::sensitivity) {
    for (auto& a : axes) {
      if (a.name == "tau" || a.name == "accel-ratio") a.name = "x";
    }
  }
  apply_overrides(spec, id, axes);

  const Evaluator ev{cfg.objective, cfg.gms_scale};
  const std::vector<double> xs = spec.x.values();
  FigureData out;
  out.plot.title = "Figure " + id + ": " + spec.title;
  out.plot.x_label = spec.x.name;
  out.plot.y_label = "witness value";
  out.plot.reference_y = 1.0;

  switch (spec.shape) {
    case Shape::werner: {
      const auto rows = parallel_map(xs.size(), cfg.threads, [&](std::size_t i) {
        Point p = spec.fixed;
        p.v = xs[i];
        const auto printed = analytic::werner_paper_inequalities(states::WernerParam(xs[i]));
        const PointResult r = ev.evaluate(p);
        return std::vector<double>{xs[i], printed.gms, printed.gmn, r.gms.total, r.gmn.value};
      });
      out.table = SweepTable({"v", "gms_paper", "gmn_paper", "gms_total", "gmn"}, 1);
      for (const auto& r : rows) out.table.add_row(r);
      out.plot.series = {{"GMS (printed)", xs, out.table.column("gms_paper")},
                         {"GMN (printed)", xs, out.table.column("gmn_paper")},
                         {"GMS (direct)", xs, out.table.column("gms_total")},
                         {"GMN (direct)", xs, out.table.column("gmn")}};
      break;
    }

    case Shape::sensitivity: {
      const witness::Witness w =
          spec.quantities.front() == Quantity::gms ? witness::Witness::gms : witness::Witness::gmn;
      const auto rows = parallel_map(xs.size(), cfg.threads, [&](std::size_t i) {
        Point at_tau = spec.fixed;
        at_tau.tau = xs[i];
        Point at_accel = spec.fixed;
        at_accel.accel_ratio = xs[i];
        const double d_tau =
            pipeline::sensitivity(w, pipeline::Parameter::tau, ev.scenario(at_tau), cfg.gms_scale)
                .magnitude;
        const double d_accel = pipeline::sensitivity(w, pipeline::Parameter::accel_ratio,
                                                     ev.scenario(at_accel), cfg.gms_scale)
                                   .magnitude;
        return std::vector<double>{xs[i], d_tau, d_accel};
      });
      out.table = SweepTable({"x", "d_tau_at_accel0", "d_accel_at_tau0"}, 1);
      for (const auto& r : rows) out.table.add_row(r);
      out.plot.y_label = "|derivative|";
      out.plot.reference_y.reset();
      out.plot.series = {{"d/d(g0 t), a/w = 0", xs, out.table.column(1)},
                         {"d/d(a/w), g0 t = 0", xs, out.table.column(2)}};
      break;
    }

    case Shape::lines: {
      const std::vector<double> family =
          spec.family_axis.empty() ? std::vector<double>{0.0} : spec.family;
      const std::size_t n = xs.size() * family.size();
      const auto results = parallel_map(n, cfg.threads, [&](std::size_t i) {
        Point p = spec.fixed;
        if (!spec.family_axis.empty()) {
          set_coordinate(p, spec.family_axis, family[i / xs.size()], cfg.mr);
        }
        set_coordinate(p, spec.x.name, xs[i % xs.size()], cfg.mr);
        return ev.evaluate(p);
      });

      std::vector<std::string> names = {spec.x.name};
      for (Quantity q : spec.quantities) {
        for (double f : family) {
          names.push_back(spec.family_axis.empty()
                              ? std::string(quantity_name(q))
                              : std::string(quantity_name(q)) + "_" + label(spec.family_axis, f));
        }
      }
      out.table = SweepTable(names, 1);
      for (std::size_t xi = 0; xi < xs.size(); ++xi) {
        std::vector<double> row = {xs[xi]};
        for (Quantity q : spec.quantities) {
          for (std::size_t fi = 0; fi < family.size(); ++fi) {
            row.push_back(pick(q, results[fi * xs.size() + xi]));
          }
        }
        out.table.add_row(row);
      }
      for (std::size_t c = 1; c < names.size(); ++c) {
        out.plot.series.push_back({names[c], xs, out.table.column(c)});
      }
      break;
    }

    case Shape::surface: {
      const std::vector<double> outer = spec.outer->values();
      const std::size_t n = outer.size() * xs.size();
      const Quantity q = spec.quantities.front();
      const auto results = parallel_map(n, cfg.threads, [&](std::size_t i) {
        Point p = spec.fixed;
        set_coordinate(p, spec.outer->name, outer[i / xs.size()], cfg.mr);
        set_coordinate(p, spec.x.name, xs[i % xs.size()], cfg.mr);
        return pick(q, ev.evaluate(p));
      });
      out.table = SweepTable({spec.outer->name, spec.x.name, quantity_name(q)}, 2);
      for (std::size_t i = 0; i < n; ++i) {
        out.table.add_row({outer[i / xs.size()], xs[i % xs.size()], results[i]});
      }
      // A handful of slices keeps the legend readable.
      const std::size_t stride = std::max<std::size_t>(1, (outer.size() + 5) / 6);
      for (std::size_t o = 0; o < outer.size(); o += stride) {
        const auto first = results.begin() + static_cast<std::ptrdiff_t>(o * xs.size());
        out.plot.series.push_back({label(spec.outer->name, outer[o]), xs,
                                   std::vector<double>(first, first + static_cast<std::ptrdiff_t>(xs.size()))});
      }
      break;
    }
  }
  return out;
}

}  // namespace steersim::app
