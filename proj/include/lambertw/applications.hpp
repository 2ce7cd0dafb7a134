#pragma once

#include <utility>

#include "lambertw/branch.hpp"
#include "lambertw/errors.hpp"

namespace lambertw {

/// Moyal function M(x) = exp(-(x + exp(-x))/2), unimodal with peak
/// M(0) = e^{-1/2}. Total on the reals.
double moyal(double x);

/// Peak value e^{-1/2} = M(0).
inline const double k_moyal_peak = std::exp(-0.5);

/// The two preimages of a Moyal value: plus maps through W_0 (the x > 0 side
/// of the peak), minus through W_{-1} (the x < 0 side). The side naming is a
/// library convention fixed by round-trip tests, not an external one.
enum class MoyalSide { plus, minus };

/// Inverse Moyal: W_{0,-1}(-y^2) - 2 ln y for 0 < y <= e^{-1/2}
/// (one ulp of slack above the peak). Throws DomainError otherwise.
double moyal_inverse(double y, MoyalSide side);

/// Three-parameter Gaisser-Hillas profile parameters (depths in g/cm^2
/// semantics). Requires xmax > x0 and lambda > 0.
struct GaisserHillasParams {
  GaisserHillasParams(double x0, double xmax, double lambda);

  double x0;
  double xmax;
  double lambda;

  /// Rescaled maximum (xmax - x0)/lambda, always > 0.
  double reduced_xmax() const { return (xmax - x0) / lambda; }
};

/// One-parameter reduced profile g(x; x_max) = (x/x_max)^{x_max} e^{x_max-x},
/// normalized to g(x_max; x_max) = 1. Requires x > 0 and x_max > 0.
double gh_reduced(double x, double x_max);

/// Both solutions of g(x; x_max) = a for 0 < a <= 1, as (left, right) with
/// left <= x_max <= right (equality iff a = 1). Branch 0 gives the left side
/// of the maximum, branch -1 the right. a^{1/x_max} is computed as
/// exp(ln(a)/x_max) to keep the W argument accurate near -1/e.
std::pair<double, double> gh_reduced_inverse(double a, double x_max);

/// Full profile G(X; X0, Xmax, lambda); equals the reduced profile at the
/// rescaled arguments x = (X-X0)/lambda, x_max = (Xmax-X0)/lambda.
/// Requires X > X0.
double gh_full(double depth, const GaisserHillasParams& params);

/// Both depths with G(X) = a, un-rescaled from gh_reduced_inverse.
std::pair<double, double> gh_full_inverse(double a, const GaisserHillasParams& params);

}  // namespace lambertw
