#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "steersim/errors.hpp"
#include "steersim/pipeline.hpp"
#include "steersim/witnesses.hpp"

namespace steersim::app {

// Bad command-line input; flag() is the offending option ("--axis", "--v", ...).
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string flag, const std::string& what)
      : std::runtime_error(flag + ": " + what), flag_(std::move(flag)) {}
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

// Re-labels a core domain error against a command-line flag.
UsageError as_usage_error(const DomainError& e, const std::string& flag);

enum class Command { eval, sweep, thresholds, figure, recover, verify };

// Sweepable coordinates; names double as CSV column names.
inline const std::vector<std::string> kAxisNames = {"v", "lambda-ratio", "tau", "accel-ratio",
                                                    "m", "mr"};

struct Axis {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;

  // steps evenly spaced values, both ends included.
  std::vector<double> values() const;
};

// "NAME:LO:HI:STEPS". Throws UsageError("--axis") on a malformed spec, an
// unknown name, steps < 2 or lo >= hi.
Axis parse_axis(const std::string& spec);

struct MrChoice {
  enum class Kind { fixed, optimal, paper };
  Kind kind = Kind::optimal;
  double value = 0.0;
};

// "optimal", "paper" or a number. Throws UsageError("--mr").
MrChoice parse_mr(const std::string& text);

witness::SpinScale parse_gms_scale(const std::string& text);
pipeline::Objective parse_objective(const std::string& text);

struct RunConfig {
  Command command = Command::eval;
  double v = 0.0;
  double lambda_ratio = 0.01;
  double tau = 0.0;
  double accel_ratio = 0.0;
  std::optional<double> m;  // set => recovery scenario
  MrChoice mr;
  std::vector<Axis> axes;
  std::string figure;
  std::string out;  // empty => stdout
  bool svg = false;
  pipeline::Objective objective = pipeline::Objective::gmn;
  witness::SpinScale gms_scale = witness::SpinScale::pauli;
  unsigned threads = 0;  // 0 => hardware concurrency
};

// One parameter point before m_r is resolved.
struct Point {
  double v = 0.0;
  double lambda_ratio = 0.01;
  double tau = 0.0;
  double accel_ratio = 0.0;
  std::optional<double> m;
  MrChoice mr;

  // Sets the coordinate called `name` (one of kAxisNames). Setting "mr"
  // fixes it; setting "m" turns the point into a recovery point.
  void set(const std::string& name, double value);
};

Point base_point(const RunConfig& cfg);

struct PointResult {
  witness::GmsResult gms;
  witness::GmnResult gmn;
  double mr = 0.0;           // resolved reversal strength (NaN when unresolvable)
  double probability = 1.0;  // post-selection success probability
};

struct Evaluator {
  pipeline::Objective objective = pipeline::Objective::gmn;
  witness::SpinScale gms_scale = witness::SpinScale::pauli;

  // Validated scenario with m_r resolved. Throws DomainError for bad values,
  // and DomainError("mr") when the printed optimum is not a valid strength.
  pipeline::ScenarioParams scenario(const Point& p) const;
  PointResult evaluate(const Point& p) const;
};

}  // namespace steersim::app
