// Command-line front end: point evaluation, accuracy sweeps as CSV,
// convergence-order reports, and the Moyal / Gaisser-Hillas inverses.
//
// Exit codes: 0 success, 1 usage error, 2 domain error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lambertw/applications.hpp"
#include "lambertw/detail/format.hpp"
#include "lambertw/lambert_w.hpp"
#include "lambertw/oracle.hpp"

namespace {

using lambertw::detail::format_double;

lambertw::Branch parse_branch(int index) { return lambertw::branch_from_index(index); }

void write_csv(const std::vector<lambertw::AccuracySample>& samples, std::ostream& os) {
  os << "x,approx,reference,delta\n";
  for (const auto& s : samples)
    os << format_double(s.x) << ',' << format_double(s.approx) << ','
       << format_double(s.reference) << ',' << format_double(s.delta) << '\n';
}

struct SweepOptions {
  int branch = 0;
  std::string evaluator = "full";
  std::string grid = "linear";
  double lo = 0;
  double hi = 0;
  int n = 1000;
  std::string output;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double-precision Lambert W evaluator and accuracy bench"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate W at a point");
  int eval_branch = 0;
  double eval_x = 0;
  bool nan_on_domain_error = false;
  eval->add_option("--branch", eval_branch, "Branch, 0 or -1")->capture_default_str();
  eval->add_option("x", eval_x, "Argument")->required();
  eval->add_flag("--nan-on-domain-error", nan_on_domain_error,
                 "Print nan instead of failing on domain errors");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Accuracy sweep against the reference, as CSV");
  SweepOptions sw;
  sweep_cmd->add_option("--branch", sw.branch, "Branch, 0 or -1")->capture_default_str();
  sweep_cmd->add_option("--evaluator", sw.evaluator, "Evaluator id")->capture_default_str();
  sweep_cmd->add_option("--grid", sw.grid, "linear|log")->capture_default_str();
  sweep_cmd->add_option("--lo", sw.lo, "Grid lower endpoint")->required();
  sweep_cmd->add_option("--hi", sw.hi, "Grid upper endpoint")->required();
  sweep_cmd->add_option("--n", sw.n, "Grid size")->capture_default_str();
  sweep_cmd->add_option("--output", sw.output, "Output path (default: stdout)");

  // order
  auto* order = app.add_subcommand("order", "One-step convergence-order report");
  std::string order_method = "fritsch";
  double order_x = 1.0;
  order->add_option("--method", order_method, "halley|fritsch")->capture_default_str();
  order->add_option("--x", order_x, "Evaluation point (branch 0)")->capture_default_str();

  // moyal
  auto* moyal_cmd = app.add_subcommand("moyal", "Moyal function M(x)");
  double moyal_x = 0;
  moyal_cmd->add_option("x", moyal_x, "Argument")->required();

  // moyal-inverse
  auto* moyal_inv = app.add_subcommand("moyal-inverse", "Both Moyal preimages of y");
  double moyal_y = 0;
  bool moyal_verify = false;
  moyal_inv->add_option("--y", moyal_y, "Moyal value in (0, e^{-1/2}]")->required();
  moyal_inv->add_flag("--verify", moyal_verify, "Also print the re-evaluated forward values");

  // gh
  auto* gh = app.add_subcommand("gh", "Gaisser-Hillas profile value");
  double gh_x = 0, gh_xmax = 0;
  std::optional<double> gh_x0, gh_lambda;
  gh->add_option("x", gh_x, "Depth")->required();
  gh->add_option("--xmax", gh_xmax, "Shower maximum")->required();
  gh->add_option("--x0", gh_x0, "Depth offset (full profile)");
  gh->add_option("--lambda", gh_lambda, "Interaction length (full profile)");

  // gh-inverse
  auto* gh_inv = app.add_subcommand("gh-inverse", "Both Gaisser-Hillas depths with value a");
  double ghi_a = 0, ghi_xmax = 0;
  std::optional<double> ghi_x0, ghi_lambda;
  bool ghi_verify = false;
  gh_inv->add_option("--a", ghi_a, "Profile value in (0, 1]")->required();
  gh_inv->add_option("--xmax", ghi_xmax, "Shower maximum")->required();
  gh_inv->add_option("--x0", ghi_x0, "Depth offset (full profile)");
  gh_inv->add_option("--lambda", ghi_lambda, "Interaction length (full profile)");
  gh_inv->add_flag("--verify", ghi_verify, "Also print the re-evaluated forward values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*eval) {
      lambertw::Branch branch;
      try {
        branch = parse_branch(eval_branch);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 1;
      }
      try {
        std::cout << format_double(lambertw::lambert_w(branch, eval_x).value) << '\n';
      } catch (const lambertw::DomainError& e) {
        if (!nan_on_domain_error) throw;
        std::cout << "nan\n";
      }
    } else if (*sweep_cmd) {
      lambertw::Branch branch;
      lambertw::GridSpec grid;
      try {
        branch = parse_branch(sw.branch);
        if (sw.grid == "linear")
          grid.scale = lambertw::GridSpec::Scale::linear;
        else if (sw.grid == "log")
          grid.scale = lambertw::GridSpec::Scale::log;
        else
          throw std::invalid_argument("sweep: --grid must be linear or log");
        grid.lo = sw.lo;
        grid.hi = sw.hi;
        grid.n = sw.n;
        const auto evaluator = lambertw::parse_evaluator(sw.evaluator);
        if (!evaluator)
          throw std::invalid_argument("sweep: unknown evaluator '" + sw.evaluator + "'");
        const auto samples = lambertw::sweep(branch, *evaluator, grid);
        if (sw.output.empty()) {
          write_csv(samples, std::cout);
        } else {
          std::ofstream out(sw.output, std::ios::binary);
          if (!out) throw std::runtime_error("sweep: cannot open " + sw.output);
          write_csv(samples, out);
        }
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 1;
      }
    } else if (*order) {
      lambertw::StepMethod method;
      if (order_method == "halley")
        method = lambertw::StepMethod::halley;
      else if (order_method == "fritsch")
        method = lambertw::StepMethod::fritsch;
      else {
        std::cerr << "order: --method must be halley or fritsch\n";
        return 1;
      }
      const auto report = lambertw::convergence_order(method, order_x);
      std::cout << "perturbation,error\n";
      for (std::size_t i = 0; i < report.perturbations.size(); ++i)
        std::cout << format_double(report.perturbations[i]) << ','
                  << format_double(report.errors[i]) << '\n';
      std::cout << "exponent," << format_double(report.exponent) << '\n';
    } else if (*moyal_cmd) {
      std::cout << format_double(lambertw::moyal(moyal_x)) << '\n';
    } else if (*moyal_inv) {
      const double plus = lambertw::moyal_inverse(moyal_y, lambertw::MoyalSide::plus);
      const double minus = lambertw::moyal_inverse(moyal_y, lambertw::MoyalSide::minus);
      std::cout << format_double(plus) << ' ' << format_double(minus) << '\n';
      if (moyal_verify)
        std::cout << format_double(lambertw::moyal(plus)) << ' '
                  << format_double(lambertw::moyal(minus)) << '\n';
    } else if (*gh) {
      if (gh_x0.has_value() != gh_lambda.has_value()) {
        std::cerr << "gh: --x0 and --lambda must be given together\n";
        return 1;
      }
      if (gh_x0) {
        const lambertw::GaisserHillasParams params{*gh_x0, gh_xmax, *gh_lambda};
        std::cout << format_double(lambertw::gh_full(gh_x, params)) << '\n';
      } else {
        std::cout << format_double(lambertw::gh_reduced(gh_x, gh_xmax)) << '\n';
      }
    } else if (*gh_inv) {
      if (ghi_x0.has_value() != ghi_lambda.has_value()) {
        std::cerr << "gh-inverse: --x0 and --lambda must be given together\n";
        return 1;
      }
      std::pair<double, double> roots;
      if (ghi_x0) {
        const lambertw::GaisserHillasParams params{*ghi_x0, ghi_xmax, *ghi_lambda};
        roots = lambertw::gh_full_inverse(ghi_a, params);
        std::cout << format_double(roots.first) << ' ' << format_double(roots.second) << '\n';
        if (ghi_verify)
          std::cout << format_double(lambertw::gh_full(roots.first, params)) << ' '
                    << format_double(lambertw::gh_full(roots.second, params)) << '\n';
      } else {
        roots = lambertw::gh_reduced_inverse(ghi_a, ghi_xmax);
        std::cout << format_double(roots.first) << ' ' << format_double(roots.second) << '\n';
        if (ghi_verify)
          std::cout << format_double(lambertw::gh_reduced(roots.first, ghi_xmax)) << ' '
                    << format_double(lambertw::gh_reduced(roots.second, ghi_xmax)) << '\n';
      }
    }
  } catch (const lambertw::DomainError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
