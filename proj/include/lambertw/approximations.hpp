#pragma once

#include <array>
#include <span>

#include "lambertw/branch.hpp"
#include "lambertw/errors.hpp"

namespace lambertw {

/// Coefficients b_0..b_9 of the branch-point series
///   W(x) ~ sum_i b_i p^i,  p = +-sqrt(2(1+ex)).
const std::array<double, 10>& branch_point_coefficients() noexcept;

/// Branch-point expansion B^[order] evaluated in Horner form, with
/// p = +sqrt(2(1+ex)) on branch 0 and p = -sqrt(2(1+ex)) on branch -1.
/// order must be in [1, 9]. Throws DomainError when the radicand is negative
/// (x below the branch point).
double branch_point_expansion(Branch branch, double x, int order);

/// Arguments of the asymptotic series: a = ln(-+x), b = ln(-+ln(-+x)).
struct AsymptoticArgs {
  double a = 0;
  double b = 0;
};

AsymptoticArgs asymptotic_args(Branch branch, double x);

/// Asymptotic expansion A(a, b) to the requested order (0..5), factored in
/// nested powers of 1/a. Branch 0 requires x >= e, branch -1 requires
/// -1/e <= x < 0.
double asymptotic_expansion(Branch branch, double x, int order);

/// The fitted rational approximations. q0_1 and q0_2 are the production fits
/// for branch 0 ([-0.31, 0.3] and [0.3, 7]), qm1 the branch -1 fit on
/// [-0.3, -0.05]. q0_alt0 and q0_alt2 are lower-order alternates (q0_alt2 is
/// usable on [-0.31, 0.5]).
enum class RationalFit {
  q0_1,
  q0_2,
  q0_alt0,
  q0_alt2,
  qm1,
};

struct RationalFitCoefficients {
  RationalFit id;
  std::span<const double> numerator;    // constant term first
  std::span<const double> denominator;  // constant term first
  bool leading_factor_x;                // value is x * N(x)/D(x) when set
};

const RationalFitCoefficients& rational_fit_coefficients(RationalFit id) noexcept;

/// Evaluates the fit in Horner form. Total on the reals: callers outside the
/// fit's validity window just get the rational function's value. Region
/// policy lives in the core's piecewise map, not here.
double rational_fit(RationalFit id, double x) noexcept;

/// Unrolled continued logarithm R^[depth]: depth 0 is ln(+-x), depth n is
/// ln(+-x) - ln(+-previous). Converges for branch 0 when x > e and for
/// branch -1 near 0^-. Throws DomainError when the first logarithm's
/// argument is not positive.
double log_recursion(Branch branch, double x, int depth);

/// Fixed-point recursion x / exp(x / exp(...)) for the -1/e < x < e part of
/// branch 0. depth 0 returns x. Verification machinery, not a production
/// approximant.
double exp_recursion(double x, int depth = 30);

}  // namespace lambertw
