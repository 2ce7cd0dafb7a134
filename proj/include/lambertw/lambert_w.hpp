#pragma once

#include <span>

#include "lambertw/branch.hpp"
#include "lambertw/errors.hpp"

namespace lambertw {

struct EvalResult {
  double value = 0;
  /// False exactly in the guard bands (branch-point band, the branch-0 zero
  /// band, and W_{-1}(0) = -inf), where the series / fit value is returned
  /// without a refinement step.
  bool refined = false;
};

/// Approximant assigned to one interval of the piecewise map.
enum class Approximant {
  branch_point_order9,
  rational_q0_1,
  rational_q0_2,
  asymptotic_order5,
  rational_qm1,
  log_recursion_order9,
};

/// Ordered breakpoints and the approximant used on each interval; intervals
/// tile the branch domain with no gap or overlap.
struct PiecewiseRegionMap {
  Branch branch;
  std::span<const double> breakpoints;
  std::span<const Approximant> approximants;  // breakpoints.size() + 1 entries
};

const PiecewiseRegionMap& region_map(Branch branch) noexcept;

/// Piecewise initial approximation, accurate to at least ~5 decimal places
/// over most of the definition range (see the accuracy sweeps). Selects the
/// approximant from the region map:
///   branch  0:  B^[9] | Q0^[1] | Q0^[2] | A^[5]
///   branch -1:  B^[9] | Q-1    | R^[9]
double initial_approximation(Branch branch, double x);

/// Lambert W in double precision: the inverse of y -> y e^y.
///
/// Evaluates the piecewise initial approximation and applies one Fritsch
/// step, which delivers values accurate to the double resolution away from
/// the guard bands. Inside [-1/e, -1/e + 1e-5) the order-5 branch-point
/// series is returned unrefined; on branch 0, |x| <= 1e-6 returns the
/// rational fit unrefined (already at machine accuracy there).
///
/// Domain: x >= -1/e on branch 0, -1/e <= x <= 0 on branch -1, where
/// W_{-1}(0) = -inf. Inputs up to 4 ulps below -1/e are clamped to -1/e
/// (callers computing -exp(-1) must not see spurious errors); anything
/// further below throws DomainError, as does x > 0 on branch -1.
EvalResult lambert_w(Branch branch, double x);

}  // namespace lambertw
