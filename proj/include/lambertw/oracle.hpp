#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "lambertw/branch.hpp"
#include "lambertw/errors.hpp"

namespace lambertw {

/// Independent reference evaluator: solves y e^y = x by bracketed bisection
/// on the branch's monotone interval (branch 0: [-1, 710], branch -1:
/// [-746, -1]) to a bracket width of 1e-13, then polishes with Halley steps
/// until the step is <= 2 ulps. Internals run in long double. Shares no code
/// with the initial approximations.
///
/// Requires x > -1/e + 1e-12 (and x < 0 on branch -1); the bracket endpoints
/// come from where y e^y over/underflows in double.
double reference_w(Branch branch, double x);

/// Number of correct decimal places: -log10|approx - reference|, capped at 17
/// when the difference is 0 or below 1e-17 (sub-ulp at unit scale is noise).
double delta(double approx, double reference) noexcept;

/// One accuracy-sweep row.
struct AccuracySample {
  double x = 0;
  double approx = 0;
  double reference = 0;
  double delta = 0;
  bool valid = false;  // false when the evaluator or oracle failed at x
};

/// Evaluators the sweeps (and the CLI) can point at.
enum class Evaluator {
  bp5,
  bp9,
  q01,
  q02,
  qm1,
  asym5,
  logrec9,
  exprec,
  piecewise,
  piecewise_fritsch1,
  piecewise_halley1,
  piecewise_halley2,
  full,
};

std::optional<Evaluator> parse_evaluator(std::string_view name) noexcept;
std::string_view evaluator_name(Evaluator evaluator) noexcept;

/// Evaluates the named approximant / pipeline at x (throws like the
/// underlying operations).
double evaluate(Evaluator evaluator, Branch branch, double x);

struct GridSpec {
  enum class Scale { linear, log };
  Scale scale = Scale::linear;
  double lo = 0;
  double hi = 0;
  int n = 1000;  // default per-interval resolution, figure scale
};

/// n points from lo to hi inclusive, evenly spaced on a linear or log scale.
/// Log grids require endpoints of one sign and run geometrically in |x|.
std::vector<double> make_grid(const GridSpec& grid);

/// Evaluates the evaluator against reference_w over the grid, in grid order.
/// Per-point domain failures become invalid samples with NaN fields; the
/// sweep itself always succeeds.
std::vector<AccuracySample> sweep(Branch branch, Evaluator evaluator, const GridSpec& grid);

enum class StepMethod { halley, fritsch };

/// One-step convergence-order measurement at x (branch 0): perturbs the root
/// by 1e-2, 1e-3, 1e-4, applies one step, and least-squares fits the error
/// exponent. Runs in long double so the fourth-order Fritsch error at the
/// smallest perturbation (~1e-17) is still resolvable.
struct ConvergenceOrderReport {
  std::array<double, 3> perturbations{};
  std::array<double, 3> errors{};
  double exponent = 0;
};

ConvergenceOrderReport convergence_order(StepMethod method, double x);

}  // namespace lambertw
