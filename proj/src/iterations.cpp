#include "lambertw/iterations.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "lambertw/detail/format.hpp"

namespace lambertw {

/* Halley step for f(W) = W e^W - x:
 *   W' = W + t/(t s - u),  t = W e^W - x, s = (W+2)/(2(W+1)), u = (W+1) e^W,
 * refactored so exp is evaluated once.
 */
HalleyStepResult halley_step(double x, double w) {
  if (w == -1.0)
    throw SingularStep("halley_step: terms are singular at w = -1");
  const double ew = std::exp(w);
  const double wew = w * ew;
  const double wewx = wew - x;
  const double w1 = w + 1;
  const HalleyTerms terms{wewx, (w + 2) / (2 * w1), w1 * ew};
  return {w - wewx / (ew * w1 - (w + 2) * wewx / (2 * w1)), terms};
}

/* Fritsch step:
 *   W' = W (1 + eps)
 *   z = ln(x/W) - W
 *   q = 2 (1+W) (1 + W + 2z/3)
 *   eps = z/(1+W) * (q - z)/(q - 2z)
 */
FritschStepResult fritsch_step(double x, double w) {
  if (w == 0.0 || !(x / w > 0))
    throw SingularStep("fritsch_step: requires w != 0 and x/w > 0 (x = " +
                       detail::format_double(x) + ", w = " + detail::format_double(w) + ")");
  const double z = std::log(x / w) - w;
  const double w1 = w + 1;
  const double q = 2 * w1 * (w1 + (2 / 3.) * z);
  if (q - 2 * z == 0.0)
    throw DegenerateStep("fritsch_step: update denominator q - 2z vanished at w = " +
                         detail::format_double(w));
  const double eps = z / w1 * (q - z) / (q - 2 * z);
  return {w * (1 + eps), {z, q, eps}};
}

IterateResult iterate(StepFunction step, double x, double w0, IterationConfig config) {
  if (!(config.tolerance > 0) || config.max_iterations < 1)
    throw std::invalid_argument("iterate: tolerance must be > 0 and max_iterations >= 1");
  double w = w0;
  for (int i = 1; i <= config.max_iterations; ++i) {
    const double next = step(x, w);
    if (std::fabs(next - w) <= config.tolerance) return {next, i, true};
    w = next;
  }
  std::cerr << "lambertw: iterate: convergence not reached.\n";
  return {w, config.max_iterations, false};
}

double iterate_fixed(StepFunction step, double x, double w0, int n) {
  if (n < 0) throw std::invalid_argument("iterate_fixed: n must be >= 0");
  double w = w0;
  for (int i = 0; i < n; ++i) w = step(x, w);
  return w;
}

}  // namespace lambertw
