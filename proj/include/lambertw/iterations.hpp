#pragma once

#include "lambertw/errors.hpp"

namespace lambertw {

/// Intermediate quantities of one Halley step:
///   t = w e^w - x, s = (w+2)/(2(w+1)), u = (w+1) e^w.
/// At a true root t = 0; s and u are finite whenever w != -1.
struct HalleyTerms {
  double t = 0;
  double s = 0;
  double u = 0;
};

struct HalleyStepResult {
  double next = 0;
  HalleyTerms terms;
};

/// One step of Halley's iteration, W_{n+1} = W_n + t/(t s - u), written with a
/// single exp evaluation. Third-order convergence. Throws SingularStep at
/// w = -1 exactly.
HalleyStepResult halley_step(double x, double w);

/// Intermediate quantities of one Fritsch step:
///   z = ln(x/w) - w, q = 2(1+w)(1+w+2z/3), eps = z/(1+w) * (q-z)/(q-2z).
/// At a true root z = 0 and eps = 0.
struct FritschTerms {
  double z = 0;
  double q = 0;
  double eps = 0;
};

struct FritschStepResult {
  double next = 0;
  FritschTerms terms;
};

/// One step of Fritsch's iteration, W_{n+1} = W_n (1 + eps). Fourth-order
/// convergence. Requires w != 0 and x/w > 0 (SingularStep otherwise);
/// q - 2z == 0 raises DegenerateStep.
FritschStepResult fritsch_step(double x, double w);

inline double halley_update(double x, double w) { return halley_step(x, w).next; }
inline double fritsch_update(double x, double w) { return fritsch_step(x, w).next; }

/// Step functions are first-class values for the iteration drivers.
using StepFunction = double (*)(double x, double w);

struct IterationConfig {
  double tolerance = 1e-6;  // absolute step tolerance
  int max_iterations = 100;
};

struct IterateResult {
  double value = 0;
  int steps = 0;
  bool converged = false;
};

/// Applies step until |W_{n+1} - W_n| <= tolerance or max_iterations is
/// reached. Non-convergence warns on stderr and still returns the last
/// iterate; callers can inspect the converged flag.
IterateResult iterate(StepFunction step, double x, double w0, IterationConfig config = {});

/// Applies exactly n steps; n = 0 returns w0 unchanged.
double iterate_fixed(StepFunction step, double x, double w0, int n);

}  // namespace lambertw
