#include "spherefp/riesz.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spherefp/errors.hpp"

namespace spherefp::riesz {

namespace {

void check_exponent(double s) {
  if (s < -1.0 || s == 0.0)
    throw std::invalid_argument("riesz: exponent must satisfy s >= -1, s != 0");
}

}  // namespace

double riesz_energy(const Configuration& config, double s) {
  check_exponent(s);
  const Eigen::MatrixXd g = config.gram();
  const int n = config.size();
  const double sign = s > 0.0 ? 1.0 : -1.0;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r2 = 2.0 * (1.0 - g(i, j));
      if (r2 <= 0.0) {
        if (s > 0.0)
          throw NumericalError("riesz_energy: coincident points " + std::to_string(i) + " and " +
                               std::to_string(j) + " give infinite energy");
        continue;  // s < 0: coincident pair contributes 0
      }
      sum += sign * std::pow(r2, -0.5 * s);
    }
  }
  return sum;
}

frames::BoundReport sum_distance_bound(const Configuration& config) {
  if (config.dim() != 3)
    throw std::invalid_argument("sum_distance_bound: only d = 3 is supported");
  const double n = config.size();
  const double value = riesz_energy(config, -1.0);
  const double bound = -2.0 * n * n / 3.0;
  return frames::make_lower_bound_report(value, bound);
}

double regularized_energy(const Configuration& config, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("regularized_energy: delta must be > 0");
  if (config.dim() != 3)
    throw std::invalid_argument("regularized_energy: only d = 3 is supported");
  const Eigen::MatrixXd g = config.gram();
  const int n = config.size();
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sum += 1.0 / std::sqrt(2.0 * (1.0 + delta - g(i, j)));
  return 0.5 * (sum - n / std::sqrt(2.0 * delta));
}

double energy_series(const Configuration& config, double delta, int l_max) {
  if (!(delta > 0.0)) throw std::invalid_argument("energy_series: delta must be > 0");
  if (l_max < 0) throw std::invalid_argument("energy_series: l_max must be >= 0");
  const Eigen::MatrixXd g = config.gram();
  const int n = config.size();

  // running elementwise powers of the Gram matrix give FP_l per term
  std::vector<double> powers(static_cast<std::size_t>(n) * n, 1.0);
  const double* gd = g.data();

  double coeff = 1.0;  // (-1)^l binom(-1/2, l) = (2l-1)!!/(2l)!!, ratio recurrence
  double inv_dp1 = 1.0 / (delta + 1.0);
  double geom = std::sqrt(inv_dp1);
  double sum = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    if (l > 0) {
      coeff *= (2.0 * l - 1.0) / (2.0 * l);
      for (std::size_t idx = 0; idx < powers.size(); ++idx) powers[idx] *= gd[idx];
      geom *= inv_dp1;
    }
    double fp = 0.0;
    for (double v : powers) fp += v;
    sum += coeff * fp * geom;
  }
  return sum / (2.0 * std::sqrt(2.0)) - n / (2.0 * std::sqrt(2.0 * delta));
}

double calibrated_bound(double n, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("calibrated_bound: delta must be > 0");
  if (n < 1.0) throw std::invalid_argument("calibrated_bound: n must be >= 1");
  return 0.25 * n *
         (2.0 * n / std::sqrt(delta + std::sqrt(delta * (delta + 2.0)) + 1.0) -
          std::sqrt(2.0 / delta));
}

double delta_star(double n) {
  if (n < 2.0) throw std::invalid_argument("delta_star: n must be >= 2");
  return 4.0 / (4.0 * n - std::sqrt(8.0 * n + 1.0) - 1.0);
}

double asymptotic_bound(double n) {
  if (n < 1.0) throw std::invalid_argument("asymptotic_bound: n must be >= 1");
  return 0.5 * n * n - std::pow(n, 1.5) / std::sqrt(2.0) + n / 8.0 +
         std::sqrt(n) / (16.0 * std::sqrt(2.0)) + 1.0 / 64.0;
}

}  // namespace spherefp::riesz
