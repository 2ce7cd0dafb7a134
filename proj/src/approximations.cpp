#include "lambertw/approximations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lambertw/detail/format.hpp"

namespace lambertw {

namespace {

// b_i of the branch-point series; the inverse function 2(e W^{-1}(y-1) + 1)
// has the Taylor series y^2 + 2/3 y^3 + 1/4 y^4 + 1/15 y^5 + ..., and these
// are the coefficients of its inverse in p = sqrt(z).
constexpr std::array<double, 10> k_branch_point_coeffs{
    -1.0,
    1.0,
    -1.0 / 3,
    11.0 / 72,
    -43.0 / 540,
    769.0 / 17280,
    -221.0 / 8505,
    680863.0 / 43545600,
    -1963.0 / 204120,
    226287557.0 / 37623398400.0,
};

double horner(std::span<const double> coeffs, double x) noexcept {
  double acc = coeffs.back();
  for (auto i = coeffs.size() - 1; i-- > 0;) acc = coeffs[i] + x * acc;
  return acc;
}

// Rational fit tables. q0_1 / q0_2 / qm1 carry the production piecewise
// regions; the alt variants are lower-order spares.
constexpr std::array<double, 5> k_q0_1_num{
    1.0, 5.931375839364438, 11.392205505329132, 7.338883399111118, 0.6534490169919599};
constexpr std::array<double, 5> k_q0_1_den{
    1.0, 6.931373689597704, 16.82349461388016, 16.43072324143226, 5.115235195211697};

constexpr std::array<double, 5> k_q0_2_num{
    1.0, 2.4450530707265568, 1.3436642259582265, 0.14844005539759195, 0.0008047501729129999};
constexpr std::array<double, 5> k_q0_2_den{
    1.0, 3.4447089864860025, 3.2924898573719523, 0.9164600188031222, 0.05306864044833221};

constexpr std::array<double, 3> k_q0_alt0_num{60.0, 114.0, 17.0};
constexpr std::array<double, 3> k_q0_alt0_den{60.0, 174.0, 101.0};

constexpr std::array<double, 4> k_q0_alt2_num{
    1.0, 4.790423028527326, 6.695945075293267, 2.4243096805908033};
constexpr std::array<double, 5> k_q0_alt2_den{
    1.0, 5.790432723810737, 10.986445930034288, 7.391303898769326, 1.1414723648617864};

constexpr std::array<double, 3> k_qm1_num{
    -7.814176723907436, 253.88810188892484, 657.9493176902304};
constexpr std::array<double, 6> k_qm1_den{
    1.0,          -60.43958713690808, 99.98567083107612,
    682.6073999909428, 962.1784396969866,  1477.9341280760887};

constexpr std::array<RationalFitCoefficients, 5> k_fits{{
    {RationalFit::q0_1, k_q0_1_num, k_q0_1_den, true},
    {RationalFit::q0_2, k_q0_2_num, k_q0_2_den, true},
    {RationalFit::q0_alt0, k_q0_alt0_num, k_q0_alt0_den, true},
    {RationalFit::q0_alt2, k_q0_alt2_num, k_q0_alt2_den, true},
    {RationalFit::qm1, k_qm1_num, k_qm1_den, false},
}};

}  // namespace

const std::array<double, 10>& branch_point_coefficients() noexcept {
  return k_branch_point_coeffs;
}

double branch_point_expansion(Branch branch, double x, int order) {
  if (order < 1 || order > 9)
    throw std::invalid_argument("branch_point_expansion: order must be in [1, 9]");
  // 2(1+ex) written as 2e(x + 1/e): exactly zero at the rounded branch point
  // and free of the 1 + ex cancellation next to it.
  const double radicand = 2.0 * std::numbers::e * (x + k_inv_e);
  if (radicand < 0)
    throw DomainError("branch_point_expansion: x = " + detail::format_double(x) +
                      " is below the branch point -1/e");
  const double p = branch_sign(branch) * std::sqrt(radicand);
  double acc = k_branch_point_coeffs[static_cast<std::size_t>(order)];
  for (int i = order; i-- > 0;) acc = k_branch_point_coeffs[static_cast<std::size_t>(i)] + p * acc;
  return acc;
}

AsymptoticArgs asymptotic_args(Branch branch, double x) {
  if (branch == Branch::principal) {
    if (!(x >= std::numbers::e))
      throw DomainError("asymptotic_expansion: branch 0 requires x >= e, got x = " +
                        detail::format_double(x));
  } else {
    if (!(x >= -k_inv_e) || !(x < 0))
      throw DomainError("asymptotic_expansion: branch -1 requires -1/e <= x < 0, got x = " +
                        detail::format_double(x));
  }
  const double s = branch_sign(branch);
  const double a = std::log(s * x);
  const double b = std::log(s * a);
  return {a, b};
}

double asymptotic_expansion(Branch branch, double x, int order) {
  if (order < 0 || order > 5)
    throw std::invalid_argument("asymptotic_expansion: order must be in [0, 5]");
  const auto [a, b] = asymptotic_args(branch, x);
  if (order == 0) return a - b;
  if (order == 1) return a - b + b / a;
  const double ia = 1 / a;
  switch (order) {
    case 2:
      return a - b + b / a * (1 + ia * 0.5 * (-2 + b));
    case 3:
      return a - b + b / a *
          (1 + ia *
            (0.5 * (-2 + b) + ia *
               1 / 6. * (6 + b * (-9 + b * 2))));
    case 4:
      return a - b + b / a *
          (1 + ia *
            (0.5 * (-2 + b) + ia *
              (1 / 6. * (6 + b * (-9 + b * 2)) + ia *
                 1 / 12. * (-12 + b * (36 + b * (-22 + b * 3))))));
    default:
      return a - b + b / a *
          (1 + ia *
            (0.5 * (-2 + b) + ia *
              (1 / 6. * (6 + b * (-9 + b * 2)) + ia *
                (1 / 12. * (-12 + b * (36 + b * (-22 + b * 3))) + ia *
                   1 / 60. * (60 + b * (-300 + b * (350 + b * (-125 + b * 12))))))));
  }
}

const RationalFitCoefficients& rational_fit_coefficients(RationalFit id) noexcept {
  return k_fits[static_cast<std::size_t>(id)];
}

double rational_fit(RationalFit id, double x) noexcept {
  const auto& fit = rational_fit_coefficients(id);
  const double num = horner(fit.numerator, x);
  const double den = horner(fit.denominator, x);
  return fit.leading_factor_x ? x * num / den : num / den;
}

double log_recursion(Branch branch, double x, int depth) {
  if (depth < 0) throw std::invalid_argument("log_recursion: depth must be >= 0");
  const double s = branch_sign(branch);
  if (!(s * x > 0))
    throw DomainError("log_recursion: first logarithm argument is not positive at x = " +
                      detail::format_double(x));
  const double log_sx = std::log(s * x);
  double r = log_sx;
  for (int i = 0; i < depth; ++i) r = log_sx - std::log(s * r);
  return r;
}

double exp_recursion(double x, int depth) {
  if (depth < 0) throw std::invalid_argument("exp_recursion: depth must be >= 0");
  double r = x;
  for (int i = 0; i < depth; ++i) r = x / std::exp(r);
  return r;
}

}  // namespace lambertw
