#include "lambertw/oracle.hpp"

#include <cmath>
#include <limits>

#include "lambertw/approximations.hpp"
#include "lambertw/detail/format.hpp"
#include "lambertw/iterations.hpp"
#include "lambertw/lambert_w.hpp"

namespace lambertw {

namespace {

// All oracle arithmetic runs in long double (x86 80-bit here), so the
// reference carries ~3 extra decimal digits over the code under test.

long double residual(long double y, long double x) { return y * std::exp(y) - x; }

// Halley polish; stops when the step is within 2 double ulps of w.
long double polish(long double w, long double x) {
  const long double eps2 = 2.0L * std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 20; ++i) {
    const long double ew = std::exp(w);
    const long double t = w * ew - x;
    const long double w1 = w + 1.0L;
    const long double dw = t / (ew * w1 - (w + 2.0L) * t / (2.0L * w1));
    w -= dw;
    if (dw == 0.0L || std::fabs(dw) <= eps2 * std::fabs(w)) break;
  }
  return w;
}

long double reference_root(Branch branch, double x) {
  if (!(x >= -k_inv_e + 1e-12))
    throw DomainError("reference_w: requires x >= -1/e + 1e-12, got x = " +
                      detail::format_double(x));
  if (branch == Branch::minus_one && !(x < 0))
    throw DomainError("reference_w: branch -1 requires x < 0, got x = " +
                      detail::format_double(x));

  // Bracket endpoints from the double over/underflow limits of y e^y.
  long double lo = branch == Branch::principal ? -1.0L : -746.0L;
  long double hi = branch == Branch::principal ? 710.0L : -1.0L;
  long double flo = residual(lo, x);
  if ((flo < 0) == (residual(hi, x) < 0))
    throw DomainError("reference_w: root not bracketed for x = " + detail::format_double(x));
  for (int i = 0; i < 200 && hi - lo > 1e-13L; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double fmid = residual(mid, x);
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return polish(0.5L * (lo + hi), x);
}

}  // namespace

double reference_w(Branch branch, double x) {
  return static_cast<double>(reference_root(branch, x));
}

double delta(double approx, double reference) noexcept {
  const double diff = std::fabs(approx - reference);
  if (diff <= 1e-17) return 17.0;
  return -std::log10(diff);
}

namespace {

struct EvaluatorName {
  Evaluator id;
  std::string_view name;
};

constexpr EvaluatorName k_evaluator_names[]{
    {Evaluator::bp5, "bp5"},
    {Evaluator::bp9, "bp9"},
    {Evaluator::q01, "q01"},
    {Evaluator::q02, "q02"},
    {Evaluator::qm1, "qm1"},
    {Evaluator::asym5, "asym5"},
    {Evaluator::logrec9, "logrec9"},
    {Evaluator::exprec, "exprec"},
    {Evaluator::piecewise, "piecewise"},
    {Evaluator::piecewise_fritsch1, "piecewise+fritsch1"},
    {Evaluator::piecewise_halley1, "piecewise+halley1"},
    {Evaluator::piecewise_halley2, "piecewise+halley2"},
    {Evaluator::full, "full"},
};

}  // namespace

std::optional<Evaluator> parse_evaluator(std::string_view name) noexcept {
  for (const auto& entry : k_evaluator_names)
    if (entry.name == name) return entry.id;
  return std::nullopt;
}

std::string_view evaluator_name(Evaluator evaluator) noexcept {
  for (const auto& entry : k_evaluator_names)
    if (entry.id == evaluator) return entry.name;
  return "?";
}

double evaluate(Evaluator evaluator, Branch branch, double x) {
  switch (evaluator) {
    case Evaluator::bp5:
      return branch_point_expansion(branch, x, 5);
    case Evaluator::bp9:
      return branch_point_expansion(branch, x, 9);
    case Evaluator::q01:
      return rational_fit(RationalFit::q0_1, x);
    case Evaluator::q02:
      return rational_fit(RationalFit::q0_2, x);
    case Evaluator::qm1:
      return rational_fit(RationalFit::qm1, x);
    case Evaluator::asym5:
      return asymptotic_expansion(branch, x, 5);
    case Evaluator::logrec9:
      return log_recursion(branch, x, 9);
    case Evaluator::exprec:
      return exp_recursion(x);
    case Evaluator::piecewise:
      return initial_approximation(branch, x);
    case Evaluator::piecewise_fritsch1:
      return fritsch_step(x, initial_approximation(branch, x)).next;
    case Evaluator::piecewise_halley1:
      return iterate_fixed(halley_update, x, initial_approximation(branch, x), 1);
    case Evaluator::piecewise_halley2:
      return iterate_fixed(halley_update, x, initial_approximation(branch, x), 2);
    case Evaluator::full:
    default:
      return lambert_w(branch, x).value;
  }
}

std::vector<double> make_grid(const GridSpec& grid) {
  if (grid.n < 2 || !(grid.lo < grid.hi))
    throw std::invalid_argument("make_grid: need n >= 2 and lo < hi");
  std::vector<double> xs(static_cast<std::size_t>(grid.n));
  const double span = static_cast<double>(grid.n - 1);
  if (grid.scale == GridSpec::Scale::linear) {
    for (int i = 0; i < grid.n; ++i)
      xs[static_cast<std::size_t>(i)] = grid.lo + (grid.hi - grid.lo) * (i / span);
  } else {
    if (grid.lo == 0 || grid.hi == 0 || (grid.lo > 0) != (grid.hi > 0))
      throw std::invalid_argument("make_grid: log grid endpoints must share one sign");
    const double sign = grid.lo > 0 ? 1.0 : -1.0;
    const double llo = std::log(std::fabs(grid.lo));
    const double lhi = std::log(std::fabs(grid.hi));
    for (int i = 0; i < grid.n; ++i)
      xs[static_cast<std::size_t>(i)] = sign * std::exp(llo + (lhi - llo) * (i / span));
  }
  xs.front() = grid.lo;
  xs.back() = grid.hi;
  return xs;
}

std::vector<AccuracySample> sweep(Branch branch, Evaluator evaluator, const GridSpec& grid) {
  const std::vector<double> xs = make_grid(grid);
  std::vector<AccuracySample> samples;
  samples.reserve(xs.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const double x : xs) {
    AccuracySample s{x, nan, nan, nan, false};
    try {
      s.reference = reference_w(branch, x);
      s.approx = evaluate(evaluator, branch, x);
      if (std::isfinite(s.approx) && std::isfinite(s.reference)) {
        s.delta = delta(s.approx, s.reference);
        s.valid = true;
      }
    } catch (const DomainError&) {
    } catch (const IterationError&) {
    }
    samples.push_back(s);
  }
  return samples;
}

namespace {

long double halley_step_ld(long double x, long double w) {
  const long double ew = std::exp(w);
  const long double t = w * ew - x;
  const long double w1 = w + 1.0L;
  return w - t / (ew * w1 - (w + 2.0L) * t / (2.0L * w1));
}

long double fritsch_step_ld(long double x, long double w) {
  const long double z = std::log(x / w) - w;
  const long double w1 = w + 1.0L;
  const long double q = 2.0L * w1 * (w1 + (2.0L / 3.0L) * z);
  return w * (1.0L + z / w1 * (q - z) / (q - 2.0L * z));
}

}  // namespace

ConvergenceOrderReport convergence_order(StepMethod method, double x) {
  const long double root = reference_root(Branch::principal, x);
  ConvergenceOrderReport report;
  report.perturbations = {1e-2, 1e-3, 1e-4};
  for (std::size_t i = 0; i < report.perturbations.size(); ++i) {
    const long double w0 = root + static_cast<long double>(report.perturbations[i]);
    const long double w1 =
        method == StepMethod::halley ? halley_step_ld(x, w0) : fritsch_step_ld(x, w0);
    report.errors[i] = static_cast<double>(std::fabs(w1 - root));
  }
  // least-squares slope of log(error) against log(perturbation)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(report.perturbations.size());
  for (std::size_t i = 0; i < report.perturbations.size(); ++i) {
    const double lx = std::log(report.perturbations[i]);
    const double ly = std::log(report.errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  report.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return report;
}

}  // namespace lambertw
