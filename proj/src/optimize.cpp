#include "spherefp/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "spherefp/errors.hpp"
#include "spherefp/riesz.hpp"

namespace spherefp::optimize {

namespace {

// Energy and full Euclidean gradient of the pair sum, assembled from the
// Gram matrix so the inner work is dense matrix products. Returns +inf
// energy on coincident points when s > 0.
double energy_and_gradient(const Eigen::MatrixXd& p, double s, Eigen::MatrixXd* grad) {
  const int n = static_cast<int>(p.rows());
  const double sign = s > 0.0 ? 1.0 : -1.0;
  const Eigen::MatrixXd gram = p * p.transpose();

  Eigen::MatrixXd w;  // pair weights -s sign(s) r^{-s-2}, zero diagonal
  if (grad) w.setZero(n, n);
  double energy = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r2 = 2.0 * (1.0 - gram(i, j));
      if (r2 <= 0.0) {
        if (s > 0.0) return std::numeric_limits<double>::infinity();
        continue;
      }
      double vr, wr;
      if (s == 1.0) {
        const double inv_r = 1.0 / std::sqrt(r2);
        vr = inv_r;
        wr = inv_r / r2;
      } else {
        vr = std::pow(r2, -0.5 * s);
        wr = std::pow(r2, -0.5 * (s + 2.0));
      }
      energy += sign * vr;
      if (grad) w(i, j) = w(j, i) = -s * sign * wr;
    }
  }
  if (grad) {
    // d/dP_i [sign(s) r_ij^-s] = -s sign(s) r^{-s-2} (P_i - P_j)
    const Eigen::VectorXd rowsum = w.rowwise().sum();
    grad->noalias() = rowsum.asDiagonal() * p;
    grad->noalias() -= w * p;
  }
  return energy;
}

void project_tangent(const Eigen::MatrixXd& p, Eigen::MatrixXd& g) {
  for (Eigen::Index i = 0; i < p.rows(); ++i) g.row(i) -= g.row(i).dot(p.row(i)) * p.row(i);
}

double max_row_norm(const Eigen::MatrixXd& g) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) m = std::max(m, g.row(i).norm());
  return m;
}

Eigen::MatrixXd retract(const Eigen::MatrixXd& p, const Eigen::MatrixXd& step) {
  Eigen::MatrixXd q = p - step;
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    const double n = q.row(i).norm();
    if (!(n > 0.0)) return Eigen::MatrixXd();  // signals a failed step
    q.row(i) /= n;
  }
  return q;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Eigen::MatrixXd energy_gradient(const Configuration& config, double s) {
  if (s < -1.0 || s == 0.0)
    throw std::invalid_argument("energy_gradient: exponent must satisfy s >= -1, s != 0");
  Eigen::MatrixXd grad;
  const double e = energy_and_gradient(config.points(), s, &grad);
  if (!std::isfinite(e))
    throw NumericalError("energy_gradient: coincident points give an infinite gradient");
  project_tangent(config.points(), grad);
  return grad;
}

MinimizationResult local_minimize(const Configuration& config, const MinimizeOptions& opts) {
  if (opts.max_iters < 1) throw std::invalid_argument("local_minimize: max_iters must be >= 1");
  const double tol = opts.grad_tol > 0.0 ? opts.grad_tol : 1e-10 * config.size();
  if (!(tol > 0.0)) throw std::invalid_argument("local_minimize: grad_tol must be > 0");

  Eigen::MatrixXd p = config.points();
  Eigen::MatrixXd grad;
  double energy = energy_and_gradient(p, opts.s, &grad);
  if (!std::isfinite(energy))
    throw NumericalError("local_minimize: starting configuration has coincident points");
  project_tangent(p, grad);

  double step = opts.initial_step;
  int iters = 0;
  bool converged = false;
  std::string message = "max iterations reached";
  double gnorm = max_row_norm(grad);
  std::vector<double> trace;
  if (opts.record_trace) trace.push_back(energy);

  while (iters < opts.max_iters) {
    if (gnorm <= tol) {
      converged = true;
      message = "gradient tolerance reached";
      break;
    }
    ++iters;

    const double g2 = grad.squaredNorm();
    // Once the Armijo decrease falls below the energy's rounding floor,
    // demanding it stalls the iteration; a plain non-increase is then the
    // strongest certifiable condition.
    const double noise = 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(energy));
    double trial = step;
    Eigen::MatrixXd p_new;
    double e_new = std::numeric_limits<double>::infinity();
    bool accepted = false;
    for (int bt = 0; bt < opts.max_backtracks; ++bt) {
      p_new = retract(p, trial * grad);
      if (p_new.size() != 0) {
        e_new = energy_and_gradient(p_new, opts.s, nullptr);
        const double decrease = opts.sufficient_decrease * trial * g2;
        if (std::isfinite(e_new) &&
            (e_new <= energy - decrease || (decrease <= noise && e_new <= energy + noise))) {
          accepted = true;
          break;
        }
      }
      trial *= opts.backtrack_factor;
    }
    if (!accepted) {
      message = "line search failed";
      break;
    }

    Eigen::MatrixXd grad_new;
    const double e_check = energy_and_gradient(p_new, opts.s, &grad_new);
    project_tangent(p_new, grad_new);

    // Barzilai-Borwein trial step for the next iteration, clamped.
    const Eigen::MatrixXd s_vec = p_new - p;
    const Eigen::MatrixXd y_vec = grad_new - grad;
    const double sy = (s_vec.array() * y_vec.array()).sum();
    const double ss = s_vec.squaredNorm();
    step = (sy > 1e-30) ? std::clamp(ss / sy, 1e-12, 1e3) : trial;

    p = std::move(p_new);
    grad = std::move(grad_new);
    energy = e_check;
    gnorm = max_row_norm(grad);
    if (opts.record_trace) trace.push_back(energy);
  }

  MinimizationResult res{Configuration(p), 0.0, iters, gnorm, converged, message, std::move(trace)};
  res.energy = riesz::riesz_energy(res.config, opts.s);
  return res;
}

std::vector<MinimizationResult> ensemble(const Configuration& seed_config, int count, double sigma,
                                         std::uint64_t seed, const MinimizeOptions& opts,
                                         int threads) {
  if (count < 1) throw std::invalid_argument("ensemble: count must be >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("ensemble: sigma must be > 0");

  std::vector<MinimizationResult> results;
  results.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    results.push_back(MinimizationResult{seed_config, 0.0, 0, 0.0, false, "pending"});

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int nthreads = std::max(1, std::min(threads > 0 ? threads : hw, count));

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      const std::uint64_t member_seed = splitmix64(seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
      try {
        const Configuration start = perturb(seed_config, sigma, member_seed);
        results[static_cast<std::size_t>(i)] = local_minimize(start, opts);
      } catch (const std::exception& e) {
        results[static_cast<std::size_t>(i)] =
            MinimizationResult{seed_config, std::numeric_limits<double>::infinity(),
                               0, 0.0, false, e.what()};
      }
    }
  };

  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<int> order(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return results[static_cast<std::size_t>(a)].energy < results[static_cast<std::size_t>(b)].energy;
  });
  std::vector<MinimizationResult> sorted;
  sorted.reserve(results.size());
  for (int idx : order) sorted.push_back(std::move(results[static_cast<std::size_t>(idx)]));
  return sorted;
}

}  // namespace spherefp::optimize
