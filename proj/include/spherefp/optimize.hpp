#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spherefp/config.hpp"

namespace spherefp::optimize {

struct MinimizeOptions {
  double s = 1.0;            // Riesz exponent
  int max_iters = 200000;
  double grad_tol = -1.0;    // max tangent-gradient norm; < 0 means 1e-10 * N
  double initial_step = 1e-2;
  double backtrack_factor = 0.5;
  double sufficient_decrease = 1e-4;  // Armijo constant
  int max_backtracks = 60;
  bool record_trace = false;  // keep the per-iteration energy sequence
};

struct MinimizationResult {
  Configuration config;
  double energy = 0.0;
  int iterations = 0;
  double final_grad_norm = 0.0;
  bool converged = false;
  std::string message;
  std::vector<double> energy_trace;  // accepted energies, when recorded
};

/// Euclidean gradient of the pair-sum Riesz energy, projected onto the
/// tangent space at each point (row i is orthogonal to P_i). N x d.
Eigen::MatrixXd energy_gradient(const Configuration& config, double s);

/// Projected gradient descent with backtracking line search and
/// renormalization retraction; spectral (Barzilai-Borwein) trial steps,
/// monotone by the Armijo test. Energy is non-increasing across accepted
/// steps up to the floating-point resolution of the energy itself (a few
/// ulps), which is where the sufficient-decrease test necessarily ends.
MinimizationResult local_minimize(const Configuration& config, const MinimizeOptions& opts = {});

/// `count` independent perturb -> minimize runs from `seed_config`, each
/// deterministic from a per-member seed derived from `seed`; results sorted
/// by energy ascending (ties by member index). threads <= 0 means all cores.
std::vector<MinimizationResult> ensemble(const Configuration& seed_config, int count, double sigma,
                                         std::uint64_t seed, const MinimizeOptions& opts = {},
                                         int threads = 0);

}  // namespace spherefp::optimize
