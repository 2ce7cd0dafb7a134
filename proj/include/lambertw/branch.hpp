#pragma once

#include <cmath>
#include <stdexcept>

namespace lambertw {

/// The two real branches of the Lambert W function.
///
/// W_0 (principal) takes real values on [-1/e, inf), W_{-1} on [-1/e, 0].
/// The branches meet at the branch point (-1/e, -1).
enum class Branch : int {
  principal = 0,
  minus_one = -1,
};

constexpr int branch_index(Branch branch) noexcept {
  return static_cast<int>(branch);
}

/// Sign constant 2*branch + 1: +1 for W_0, -1 for W_{-1}.
/// One code path serves both branches in the expansions and recursions.
constexpr double branch_sign(Branch branch) noexcept {
  return branch == Branch::principal ? 1.0 : -1.0;
}

inline Branch branch_from_index(int index) {
  if (index == 0) return Branch::principal;
  if (index == -1) return Branch::minus_one;
  throw std::invalid_argument("lambertw: branch index must be 0 or -1, got " +
                              std::to_string(index));
}

/// 1/e evaluated once in double precision and shared by all modules, so the
/// branch-point arithmetic is consistent across approximants.
inline const double k_inv_e = std::exp(-1.0);

/// Inputs in [-1/e, -1/e + k_branch_point_guard) get the order-5 branch-point
/// series with no iteration step.
inline constexpr double k_branch_point_guard = 1e-5;

/// On branch 0, |x| <= k_zero_guard returns the rational fit unrefined;
/// Fritsch's ln(x/w) is indeterminate as w -> 0.
inline constexpr double k_zero_guard = 1e-6;

}  // namespace lambertw
