#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "steersim/analytic.hpp"
#include "steersim/app/commands.hpp"
#include "steersim/app/config.hpp"
#include "steersim/app/parallel.hpp"
#include "steersim/app/svg_plot.hpp"
#include "steersim/app/sweep_table.hpp"

namespace steersim::app {
namespace {

std::string csv_of(const SweepTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

// Small ranges keep every figure cheap to build in tests.
std::vector<Axis> small_axes(const std::string& id) {
  if (id == "1") return {{"v", 0.0, 1.0, 5}};
  if (id == "4a" || id == "4b") return {{"tau", 0.0, 2.0, 3}};
  std::vector<Axis> axes;
  const char* x = (id == "3a2" || id == "3b2" || id == "8a" || id == "8b" || id == "9a1" ||
                   id == "9b1")
                      ? "accel-ratio"
                      : "tau";
  axes.push_back({x, 0.0, 4.0, 3});
  if (id[0] == '3') axes.push_back({"v", 0.0, 0.2, 2});
  if (id[0] == '5') axes.push_back({"v", 0.0, 1.0, 2});
  if (id[0] == '7' || id[0] == '8' || id[0] == '9') axes.push_back({"m", 0.0, 0.6, 2});
  return axes;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(STEERSIM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(FormatNumber, ShortestRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::ldexp(mant(rng), expo(rng));
    EXPECT_EQ(std::stod(format_number(x)), x);
  }
  EXPECT_EQ(format_number(0.1875), "0.1875");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(SweepTableCsv, RoundTripIsExact) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  SweepTable t({"tau", "accel-ratio", "gmn", "gms_total"}, 2);
  for (int i = 0; i < 50; ++i) t.add_row({u(rng), u(rng) * 1e-12, u(rng), u(rng) * 1e250});
  t.add_row({0.0, -0.0, std::nan(""), std::numeric_limits<double>::infinity()});

  const std::string first = csv_of(t);
  std::istringstream is(first);
  const SweepTable back = read_csv(is, 2);
  EXPECT_EQ(csv_of(back), first);
  EXPECT_EQ(back.names(), t.names());
  EXPECT_EQ(back.parameter_count(), 2U);
  for (std::size_t c = 0; c < t.column_count(); ++c) {
    for (std::size_t r = 0; r + 1 < t.row_count(); ++r) EXPECT_EQ(back.at(r, c), t.at(r, c));
  }
}

TEST(SweepTableCsv, Format) {
  SweepTable t({"v", "gmn"}, 1);
  t.add_row({0.5, 1.25});
  EXPECT_EQ(csv_of(t), "v,gmn\n0.5,1.25\n");
}

TEST(SweepTableCsv, RejectsRaggedRows) {
  SweepTable t({"a", "b"}, 1);
  EXPECT_THROW(t.add_row({1.0}), ContractError);
  std::istringstream is("a,b\n1,2\n3\n");
  EXPECT_THROW(read_csv(is), ContractError);
  std::istringstream bad("a\nx1\n");
  EXPECT_THROW(read_csv(bad), ContractError);
}

TEST(ParseAxis, Valid) {
  const Axis a = parse_axis("tau:0:10:11");
  EXPECT_EQ(a.name, "tau");
  EXPECT_EQ(a.steps, 11);
  const auto v = a.values();
  ASSERT_EQ(v.size(), 11U);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 10.0);
  EXPECT_DOUBLE_EQ(v[3], 3.0);
}

TEST(ParseAxis, Invalid) {
  for (const char* spec : {"tau:0:10", "speed:0:1:3", "tau:1:0:3", "tau:0:1:1", "tau:a:1:3",
                           "tau:0:1:3.5", "tau:0:inf:3"}) {
    try {
      parse_axis(spec);
      ADD_FAILURE() << spec;
    } catch (const UsageError& e) {
      EXPECT_EQ(e.flag(), "--axis") << spec;
    }
  }
}

TEST(ParseOptions, ReversalAndScales) {
  EXPECT_EQ(parse_mr("optimal").kind, MrChoice::Kind::optimal);
  EXPECT_EQ(parse_mr("paper").kind, MrChoice::Kind::paper);
  const MrChoice fixed = parse_mr("0.25");
  EXPECT_EQ(fixed.kind, MrChoice::Kind::fixed);
  EXPECT_EQ(fixed.value, 0.25);
  EXPECT_THROW(parse_mr("best"), UsageError);
  EXPECT_EQ(parse_gms_scale("spin-half"), witness::SpinScale::spin_half);
  EXPECT_THROW(parse_gms_scale("spin"), UsageError);
  EXPECT_EQ(parse_objective("gms"), pipeline::Objective::gms);
  EXPECT_THROW(parse_objective("both"), UsageError);
}

TEST(ParallelMap, OrderIndependentOfThreads) {
  const auto f = [](std::size_t i) { return std::sin(static_cast<double>(i)) * 1e3; };
  const auto one = parallel_map(1000, 1, f);
  for (unsigned t : {2U, 3U, 8U}) EXPECT_EQ(parallel_map(1000, t, f), one);
  EXPECT_TRUE(parallel_map(0, 4, f).empty());
}

TEST(ParallelMap, RethrowsLowestIndexError) {
  const auto f = [](std::size_t i) -> int {
    if (i % 7 == 3) throw std::runtime_error(std::to_string(i));
    return static_cast<int>(i);
  };
  for (unsigned t : {1U, 4U}) {
    try {
      parallel_map(100, t, f);
      ADD_FAILURE();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "3");
    }
  }
}

TEST(Evaluate, InitialGhzPoint) {
  const PointResult r = Evaluator{}.evaluate(Point{});
  EXPECT_NEAR(r.gmn.value, std::numbers::sqrt2, 1e-12);
  EXPECT_TRUE(r.gmn.violated);
}

TEST(Evaluate, MaximallyMixed) {
  Point p;
  p.v = 1.0;
  const PointResult r = Evaluator{}.evaluate(p);
  EXPECT_NEAR(r.gmn.value, 0.0, 1e-15);
  EXPECT_FALSE(r.gms.violated);
}

TEST(Evaluate, ClosedFormPoint) {
  Point p;
  p.tau = 2.0;
  p.accel_ratio = 2.0;
  const PointResult r = Evaluator{}.evaluate(p);
  const double closed = analytic::gmn_closed_form(
      states::WernerParam(0.0), channels::pt_coherence(channels::ReservoirParams(0.01, 2.0)),
      channels::unruh_chi(channels::UnruhParams(2.0)));
  EXPECT_LT(std::abs(r.gmn.value - closed), 1e-6);
}

TEST(Evaluate, ClosedFormReversalNeedsValidValue) {
  Point p;
  p.tau = 1.0;
  p.m = 0.1;
  p.mr = {MrChoice::Kind::paper, 0.0};
  try {
    Evaluator{}.evaluate(p);
    ADD_FAILURE();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.parameter(), "mr");
  }
}

TEST(Sweep, NestingOrderAndColumns) {
  RunConfig cfg;
  cfg.axes = {parse_axis("tau:0:4:3"), parse_axis("accel-ratio:0:2:2")};
  cfg.threads = 2;
  const SweepTable t = run_sweep(cfg);
  ASSERT_EQ(t.row_count(), 6U);
  EXPECT_EQ(t.parameter_count(), 2U);
  EXPECT_EQ(t.names()[0], "tau");
  EXPECT_EQ(t.names()[2], "gms_s1");
  EXPECT_EQ(t.column("tau"), (std::vector<double>{0, 0, 2, 2, 4, 4}));
  EXPECT_EQ(t.column("accel-ratio"), (std::vector<double>{0, 2, 0, 2, 0, 2}));
}

TEST(Sweep, RecoveryColumnsAndThreadInvariance) {
  RunConfig cfg;
  cfg.tau = 6.0;
  cfg.accel_ratio = 2.0;
  cfg.axes = {parse_axis("m:0.1:0.9:5")};
  cfg.threads = 1;
  const std::string one = csv_of(run_sweep(cfg));
  cfg.threads = 4;
  const SweepTable t = run_sweep(cfg);
  EXPECT_EQ(csv_of(t), one);
  EXPECT_NO_THROW(t.column("mr_used"));
  EXPECT_NO_THROW(t.column("probability"));
}

TEST(Sweep, DomainErrorsPointAtAxis) {
  RunConfig cfg;
  cfg.axes = {parse_axis("v:0:2:3")};
  try {
    run_sweep(cfg);
    ADD_FAILURE();
  } catch (const UsageError& e) {
    EXPECT_EQ(e.flag(), "--axis");
  }
  cfg.axes = {parse_axis("mr:0:0.5:3")};
  EXPECT_THROW(run_sweep(cfg), UsageError);
  cfg.axes = {parse_axis("tau:0:1:2"), parse_axis("tau:0:2:2")};
  EXPECT_THROW(run_sweep(cfg), UsageError);
}

TEST(Thresholds, PrintedAndDirect) {
  const Thresholds t = compute_thresholds();
  EXPECT_NEAR(t.gms_paper, 13.0 / 36.0, 1e-8);
  EXPECT_NEAR(t.gmn_paper, (2.0 - std::numbers::sqrt2) / 2.0, 1e-8);
  EXPECT_NEAR(t.gmn_direct, t.gmn_paper, 1e-6);
  EXPECT_NEAR(t.gms_direct_spin_half, 13.0 / 36.0, 1e-8);
  EXPECT_NEAR(t.gms_direct_pauli, 1.0 / 12.0, 1e-8);
}

TEST(BisectRoot, RequiresSignChange) {
  EXPECT_NEAR(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12),
              std::numbers::sqrt2, 1e-11);
  EXPECT_THROW(bisect_root([](double x) { return x + 1.0; }, 0.0, 1.0, 1e-9), ContractError);
}

TEST(Figure, EveryIdBuilds) {
  for (const auto& id : figure_ids()) {
    RunConfig cfg;
    cfg.axes = small_axes(id);
    const FigureData fig = build_figure(id, cfg);
    EXPECT_GT(fig.table.row_count(), 0U) << id;
    EXPECT_FALSE(fig.plot.series.empty()) << id;
  }
}

TEST(Figure, UnknownIdAndAxis) {
  EXPECT_THROW(build_figure("6", RunConfig{}), UsageError);
  RunConfig cfg;
  cfg.axes = {parse_axis("m:0:1:2")};
  EXPECT_THROW(build_figure("2a", cfg), UsageError);
}

TEST(Figure, WernerIntercepts) {
  const FigureData fig = build_figure("1", RunConfig{});
  EXPECT_EQ(fig.table.at(0, 0), 0.0);
  EXPECT_NEAR(fig.table.column("gms_paper")[0], 0.1875, 1e-15);
  EXPECT_NEAR(fig.table.column("gmn")[0], std::numbers::sqrt2, 1e-12);
}

TEST(Figure, NarrowSpectrumRevives) {
  const FigureData fig = build_figure("2b", RunConfig{});
  const auto& gmn = fig.table.column("gmn");
  std::size_t i = 0;
  while (i < gmn.size() && gmn[i] > 1.0) ++i;
  ASSERT_LT(i, gmn.size());
  bool revived = false;
  for (; i < gmn.size(); ++i) revived = revived || gmn[i] > 1.0;
  EXPECT_TRUE(revived);
}

TEST(Figure, SuddenDeathInAccelerationForEveryStrength) {
  RunConfig cfg;
  cfg.axes = {parse_axis("accel-ratio:0:20:21")};
  const FigureData fig = build_figure("8b", cfg);
  for (std::size_t c = 1; c < fig.table.column_count(); ++c) {
    const auto& col = fig.table.column(c);
    EXPECT_GT(col.front(), 1.0) << fig.table.names()[c];
    EXPECT_LT(col.back(), 1.0) << fig.table.names()[c];
  }
}

TEST(Figure, DeterministicAcrossThreads) {
  RunConfig cfg;
  cfg.threads = 1;
  const std::string one = csv_of(build_figure("3a1", cfg).table);
  cfg.threads = 5;
  EXPECT_EQ(csv_of(build_figure("3a1", cfg).table), one);
  EXPECT_EQ(csv_of(build_figure("3a1", cfg).table), one);
}

TEST(Svg, Structure) {
  PlotSpec plot;
  plot.title = "a < b & c";
  plot.series = {{"one", {0, 1, 2}, {0, 1, 4}},
                 {"two", {0, 1, 2}, {1, std::nan(""), 3}}};
  plot.reference_y = 1.0;
  std::ostringstream os;
  write_svg(os, plot);
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("<?xml", 0), 0U);
  EXPECT_NE(s.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(s.find("a &lt; b &amp; c"), std::string::npos);
  std::size_t polylines = 0;
  for (auto p = s.find("<polyline"); p != std::string::npos; p = s.find("<polyline", p + 1)) {
    ++polylines;
  }
  EXPECT_EQ(polylines, 3U);  // the NaN splits the second series
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}

TEST(Reports, EvalAndVerify) {
  std::ostringstream os;
  EXPECT_EQ(cmd_eval(RunConfig{}, os), kExitOk);
  EXPECT_NE(os.str().find("value=1.4142135624"), std::string::npos);

  std::ostringstream vs;
  EXPECT_EQ(cmd_verify(RunConfig{}, vs), kExitOk);
  EXPECT_EQ(vs.str().find("FAIL"), std::string::npos);
  EXPECT_NE(vs.str().find("SOFT"), std::string::npos);
  EXPECT_EQ(vs.str().find('\033'), std::string::npos);
}

TEST(Reports, ColourRespectsNoColor) {
  ::setenv("NO_COLOR", "1", 1);
  EXPECT_FALSE(colour_enabled());
  ::unsetenv("NO_COLOR");
  EXPECT_EQ(Style{}.pass(), "PASS");
  EXPECT_NE(Style{true}.fail().find('\033'), std::string::npos);
}

TEST(ExitCodes, Binary) {
  EXPECT_EQ(run_cli("eval"), 0);
  EXPECT_EQ(run_cli("eval --v 2"), 2);
  EXPECT_EQ(run_cli("eval --tau -1"), 2);
  EXPECT_EQ(run_cli("eval --mr 0.3"), 2);
  EXPECT_EQ(run_cli("sweep"), 2);
  EXPECT_EQ(run_cli("figure 6"), 2);
  EXPECT_EQ(run_cli("figure 1 --svg"), 2);
  EXPECT_EQ(run_cli("nonsense"), 2);
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli("thresholds"), 0);
}

}  // namespace
}  // namespace steersim::app
