#pragma once

// Test-side reference roots for y e^y = x, independent of every library code
// path: pure long double bisection, no series, no polish. Slow and simple on
// purpose — correctness rests only on monotonicity and sign changes.

#include <cmath>

namespace testref {

inline long double bisect_w(long double x, long double lo, long double hi) {
  long double flo = lo * std::exp(lo) - x;
  for (int i = 0; i < 90; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    const long double fmid = mid * std::exp(mid) - x;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

inline double w0(double x) { return static_cast<double>(bisect_w(x, -1.0L, 710.0L)); }
inline double wm1(double x) { return static_cast<double>(bisect_w(x, -746.0L, -1.0L)); }

}  // namespace testref
