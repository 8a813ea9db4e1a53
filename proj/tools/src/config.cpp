#include "steersim/app/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "steersim/analytic.hpp"
#include "steersim/errors.hpp"

namespace steersim::app {
namespace {

std::optional<double> to_double(const std::string& s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(x)) {
    return std::nullopt;
  }
  return x;
}

}  // namespace

std::vector<double> Axis::values() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == steps - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  return out;
}

UsageError as_usage_error(const DomainError& e, const std::string& flag) {
  std::string msg = e.what();
  const std::string prefix = e.parameter() + ": ";
  if (msg.compare(0, prefix.size(), prefix) == 0) msg.erase(0, prefix.size());
  if (flag == "--axis") msg = e.parameter() + " " + msg;
  return UsageError(flag, msg);
}

Axis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream ss(spec);
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 4) throw UsageError("--axis", "expected NAME:LO:HI:STEPS, got '" + spec + "'");

  Axis axis;
  axis.name = parts[0];
  if (std::find(kAxisNames.begin(), kAxisNames.end(), axis.name) == kAxisNames.end()) {
    throw UsageError("--axis", "unknown axis '" + axis.name + "'");
  }
  const auto lo = to_double(parts[1]);
  const auto hi = to_double(parts[2]);
  if (!lo || !hi) throw UsageError("--axis", "bad bound in '" + spec + "'");
  int steps = 0;
  const auto res = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), steps);
  if (res.ec != std::errc() || res.ptr != parts[3].data() + parts[3].size()) {
    throw UsageError("--axis", "bad step count in '" + spec + "'");
  }
  if (steps < 2) throw UsageError("--axis", "steps must be at least 2");
  if (!(*lo < *hi)) throw UsageError("--axis", "lo must be below hi");
  axis.lo = *lo;
  axis.hi = *hi;
  axis.steps = steps;
  return axis;
}

MrChoice parse_mr(const std::string& text) {
  if (text == "optimal") return {MrChoice::Kind::optimal, 0.0};
  if (text == "paper") return {MrChoice::Kind::paper, 0.0};
  const auto x = to_double(text);
  if (!x) throw UsageError("--mr", "expected a number, 'optimal' or 'paper'");
  return {MrChoice::Kind::fixed, *x};
}

witness::SpinScale parse_gms_scale(const std::string& text) {
  if (text == "pauli") return witness::SpinScale::pauli;
  if (text == "spin-half") return witness::SpinScale::spin_half;
  throw UsageError("--gms-scale", "expected 'pauli' or 'spin-half'");
}

pipeline::Objective parse_objective(const std::string& text) {
  if (text == "gmn") return pipeline::Objective::gmn;
  if (text == "gms") return pipeline::Objective::gms;
  throw UsageError("--objective", "expected 'gmn' or 'gms'");
}

void Point::set(const std::string& name, double value) {
  if (name == "v") {
    v = value;
  } else if (name == "lambda-ratio") {
    lambda_ratio = value;
  } else if (name == "tau") {
    tau = value;
  } else if (name == "accel-ratio") {
    accel_ratio = value;
  } else if (name == "m") {
    m = value;
  } else if (name == "mr") {
    mr = {MrChoice::Kind::fixed, value};
  } else {
    throw ContractError("Point::set: unknown coordinate " + name);
  }
}

Point base_point(const RunConfig& cfg) {
  Point p;
  p.v = cfg.v;
  p.lambda_ratio = cfg.lambda_ratio;
  p.tau = cfg.tau;
  p.accel_ratio = cfg.accel_ratio;
  p.m = cfg.m;
  p.mr = cfg.mr;
  return p;
}

pipeline::ScenarioParams Evaluator::scenario(const Point& p) const {
  pipeline::ScenarioParams sp{states::WernerParam(p.v),
                              channels::ReservoirParams(p.lambda_ratio, p.tau),
                              channels::UnruhParams(p.accel_ratio), std::nullopt};
  if (!p.m) return sp;

  switch (p.mr.kind) {
    case MrChoice::Kind::fixed:
      sp.recovery = channels::RecoveryStrengths(*p.m, p.mr.value);
      break;
    case MrChoice::Kind::optimal:
      sp.recovery = channels::RecoveryStrengths(*p.m, 0.0);
      sp.recovery = channels::RecoveryStrengths(
          *p.m, pipeline::optimal_wmr_numeric(sp, objective, gms_scale));
      break;
    case MrChoice::Kind::paper: {
      const auto printed =
          analytic::optimal_wmr_paper(sp.v, channels::pt_coherence(sp.reservoir), *p.m);
      if (!printed.valid) {
        throw DomainError("mr", "printed optimal reversal strength is not in [0, 1) here");
      }
      sp.recovery = channels::RecoveryStrengths(*p.m, printed.value);
      break;
    }
  }
  return sp;
}

PointResult Evaluator::evaluate(const Point& p) const {
  const auto sp = scenario(p);
  PointResult r;
  if (sp.recovery) {
    const auto out = pipeline::evolve_recovery(sp);
    r.gms = witness::gms(out.state, gms_scale);
    r.gmn = witness::gmn(out.state);
    r.mr = sp.recovery->mr();
    r.probability = out.probability;
  } else {
    const auto rho = pipeline::evolve_baseline(sp);
    r.gms = witness::gms(rho, gms_scale);
    r.gmn = witness::gmn(rho);
  }
  return r;
}

}  // namespace steersim::app
