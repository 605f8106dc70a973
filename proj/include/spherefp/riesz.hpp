#pragma once

#include "spherefp/config.hpp"
#include "spherefp/frames.hpp"

namespace spherefp::riesz {

/// Pair-sum Riesz energy sum_{i<j} sign(s) / r_ij^s with
/// r_ij = sqrt(2 (1 - P_i . P_j)), for s >= -1, s != 0.
double riesz_energy(const Configuration& config, double s);

/// E(-1) against its lower bound -2 N^2 / 3 (d = 3).
frames::BoundReport sum_distance_bound(const Configuration& config);

/// Diagonal-regularized Coulomb energy, delta > 0, d = 3:
/// (1/2) [ sum_{i,j} 1 / r_ij(delta) - N / sqrt(2 delta) ] with
/// r_ij(delta) = sqrt(2 (1 + delta - P_i . P_j)).
double regularized_energy(const Configuration& config, double delta);

/// Partial frame-potential series for the regularized energy, truncated at
/// l_max. Terms are nonnegative, so partial sums increase monotonically.
double energy_series(const Configuration& config, double delta, int l_max);

/// Closed-form energy with every frame-potential bound saturated:
/// (n/4) (2n / sqrt(delta + sqrt(delta (delta + 2)) + 1) - sqrt(2/delta)).
double calibrated_bound(double n, double delta);

/// Maximizer of calibrated_bound in delta: 4 / (4n - sqrt(8n + 1) - 1), n >= 2.
double delta_star(double n);

/// Five-term large-n expansion of calibrated_bound(n, delta_star(n)):
/// n^2/2 - n^{3/2}/sqrt(2) + n/8 + sqrt(n)/(16 sqrt(2)) + 1/64.
/// (The n^{3/2} coefficient here is the analytic bound's; numerical Thomson
/// energies favor a smaller one.)
double asymptotic_bound(double n);

}  // namespace spherefp::riesz
