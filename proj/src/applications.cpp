#include "lambertw/applications.hpp"

#include <cmath>

#include "lambertw/detail/format.hpp"
#include "lambertw/lambert_w.hpp"

namespace lambertw {

double moyal(double x) { return std::exp(-0.5 * (x + std::exp(-x))); }

double moyal_inverse(double y, MoyalSide side) {
  if (!(y > 0))
    throw DomainError("moyal_inverse: y must be positive, got y = " + detail::format_double(y));
  if (y > k_moyal_peak && y > std::nextafter(k_moyal_peak, 1.0))
    throw DomainError("moyal_inverse: y = " + detail::format_double(y) +
                      " exceeds the peak value e^{-1/2}");
  // -y^2 >= -1/e up to a few ulps; lambert_w clamps the rounding spill.
  const Branch branch = side == MoyalSide::plus ? Branch::principal : Branch::minus_one;
  return lambert_w(branch, -(y * y)).value - 2 * std::log(y);
}

GaisserHillasParams::GaisserHillasParams(double x0_, double xmax_, double lambda_)
    : x0(x0_), xmax(xmax_), lambda(lambda_) {
  if (!(xmax > x0) || !(lambda > 0))
    throw DomainError("GaisserHillasParams: require xmax > x0 and lambda > 0");
}

double gh_reduced(double x, double x_max) {
  if (!(x > 0) || !(x_max > 0))
    throw DomainError("gh_reduced: requires x > 0 and x_max > 0, got x = " +
                      detail::format_double(x) + ", x_max = " + detail::format_double(x_max));
  // (x/x_max)^x_max e^{x_max - x} with one exp; exactly 1 at x = x_max.
  return std::exp(x_max * std::log(x / x_max) + (x_max - x));
}

std::pair<double, double> gh_reduced_inverse(double a, double x_max) {
  if (!(a > 0) || !(a <= 1))
    throw DomainError("gh_reduced_inverse: requires 0 < a <= 1, got a = " +
                      detail::format_double(a));
  if (!(x_max > 0))
    throw DomainError("gh_reduced_inverse: requires x_max > 0, got x_max = " +
                      detail::format_double(x_max));
  // a^{1/x_max} as exp(ln(a)/x_max); the result never rounds below -1/e.
  const double w_arg = -std::exp(std::log(a) / x_max) * k_inv_e;
  const double left = -x_max * lambert_w(Branch::principal, w_arg).value;
  const double right = -x_max * lambert_w(Branch::minus_one, w_arg).value;
  return {left, right};
}

double gh_full(double depth, const GaisserHillasParams& params) {
  if (!(depth > params.x0))
    throw DomainError("gh_full: requires X > X0, got X = " + detail::format_double(depth));
  return gh_reduced((depth - params.x0) / params.lambda, params.reduced_xmax());
}

std::pair<double, double> gh_full_inverse(double a, const GaisserHillasParams& params) {
  const auto [left, right] = gh_reduced_inverse(a, params.reduced_xmax());
  return {params.x0 + params.lambda * left, params.x0 + params.lambda * right};
}

}  // namespace lambertw
