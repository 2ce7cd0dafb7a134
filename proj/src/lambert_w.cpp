#include "lambertw/lambert_w.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "lambertw/approximations.hpp"
#include "lambertw/detail/format.hpp"
#include "lambertw/iterations.hpp"

namespace lambertw {

namespace {

constexpr std::array<double, 3> k_breakpoints_w0{
    -0.32358170806015724, 0.14546954290661823, 8.706658967856612};
constexpr std::array<Approximant, 4> k_approximants_w0{
    Approximant::branch_point_order9, Approximant::rational_q0_1,
    Approximant::rational_q0_2, Approximant::asymptotic_order5};

constexpr std::array<double, 2> k_breakpoints_wm1{
    -0.30298541769, -0.051012917658221676};
constexpr std::array<Approximant, 3> k_approximants_wm1{
    Approximant::branch_point_order9, Approximant::rational_qm1,
    Approximant::log_recursion_order9};

// Domain validation shared by lambert_w and initial_approximation. -1/e is
// itself a rounded constant, so inputs up to 4 ulps below it are clamped
// rather than rejected.
double validate_and_clamp(Branch branch, double x) {
  if (branch == Branch::minus_one && x > 0)
    throw DomainError("lambert_w: branch -1 is defined on [-1/e, 0], got x = " +
                      detail::format_double(x));
  if (x < -k_inv_e) {
    const double slack = 4 * (k_inv_e - std::nextafter(k_inv_e, 0.0));
    if (x >= -k_inv_e - slack) return -k_inv_e;
    throw DomainError("lambert_w: x = " + detail::format_double(x) +
                      " is below the branch point -1/e");
  }
  return x;
}

}  // namespace

const PiecewiseRegionMap& region_map(Branch branch) noexcept {
  static const PiecewiseRegionMap w0{Branch::principal, k_breakpoints_w0, k_approximants_w0};
  static const PiecewiseRegionMap wm1{Branch::minus_one, k_breakpoints_wm1, k_approximants_wm1};
  return branch == Branch::principal ? w0 : wm1;
}

double initial_approximation(Branch branch, double x) {
  x = validate_and_clamp(branch, x);
  if (branch == Branch::minus_one && x == 0)
    return -std::numeric_limits<double>::infinity();

  const PiecewiseRegionMap& map = region_map(branch);
  const auto region = static_cast<std::size_t>(
      std::upper_bound(map.breakpoints.begin(), map.breakpoints.end(), x) -
      map.breakpoints.begin());
  switch (map.approximants[region]) {
    case Approximant::branch_point_order9:
      return branch_point_expansion(branch, x, 9);
    case Approximant::rational_q0_1:
      return rational_fit(RationalFit::q0_1, x);
    case Approximant::rational_q0_2:
      return rational_fit(RationalFit::q0_2, x);
    case Approximant::asymptotic_order5:
      return asymptotic_expansion(branch, x, 5);
    case Approximant::rational_qm1:
      return rational_fit(RationalFit::qm1, x);
    case Approximant::log_recursion_order9:
    default:
      return log_recursion(branch, x, 9);
  }
}

EvalResult lambert_w(Branch branch, double x) {
  if (std::isnan(x)) return {x, false};
  if (branch == Branch::principal && std::isinf(x) && x > 0) return {x, false};
  x = validate_and_clamp(branch, x);

  // Branch-point band: Fritsch's eps denominator degrades here, and the
  // order-5 series is already well past every accuracy target.
  if (x < -k_inv_e + k_branch_point_guard)
    return {branch_point_expansion(branch, x, 5), false};
  if (branch == Branch::minus_one && x == 0)
    return {-std::numeric_limits<double>::infinity(), false};
  if (branch == Branch::principal && std::fabs(x) <= k_zero_guard)
    return {initial_approximation(branch, x), false};

  const double w0 = initial_approximation(branch, x);
  // Deep in the branch -1 tail (|x| below ~1.6e-305) the quotient x/w0 goes
  // subnormal and Fritsch's logarithm loses digits; the recursion has long
  // converged to machine accuracy there, so hand it back unrefined.
  if (!(x / w0 >= std::numeric_limits<double>::min())) return {w0, false};
  return {fritsch_step(x, w0).next, true};
}

}  // namespace lambertw
