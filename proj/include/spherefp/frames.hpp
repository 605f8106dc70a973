#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "spherefp/config.hpp"

namespace spherefp::frames {

/// A computed functional together with its theoretical bound.
/// For lower bounds residual = value - bound, for upper bounds
/// residual = bound - value; either way the theorem asserts residual >= 0
/// up to rounding.
struct BoundReport {
  double value = 0.0;
  double bound = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool saturated = false;
};

/// Default saturation tolerance: 1e-9 * max(1, |bound|).
double default_bound_tolerance(double bound);

BoundReport make_lower_bound_report(double value, double bound, double tolerance = -1.0);
BoundReport make_upper_bound_report(double value, double bound, double tolerance = -1.0);

/// sum_{i,j} (P_i . P_j)^l over all ordered pairs, diagonal included.
double frame_potential(const Configuration& config, int l);

/// Scalar weights: sum_{i,j} f_i f_j (P_i . P_j)^l.
/// Vector weights: sum_{i,j} (f_i . f_j) (P_i . P_j)^l.
double weighted_frame_potential(const Configuration& config, const Weights& w, int l);

/// The uniform-distribution value coeff(l, d) * weight_total, a lower bound
/// for the matching (weighted) frame potential. weight_total is N^2 for
/// unit weights, (sum f_i)^2 for scalars, sum_ij f_i . f_j for vectors.
double fp_lower_bound(int l, int d, double weight_total);

/// Frame potential of `config` under `w` against its lower bound. Scalar
/// weights must be nonnegative here (the bound statement assumes it).
BoundReport fp_bound_report(const Configuration& config, const Weights& w, int l);

/// Discrete harmonic coefficients C_{l,m} = sum_i f_i Y*_{l,m}(Omega_i)
/// for d = 3; vector weights give one coefficient vector per (l, m).
class HarmonicCoefficients {
 public:
  HarmonicCoefficients(int l_max, int width);

  int l_max() const { return l_max_; }
  /// Number of weight components (1 for scalar weights).
  int width() const { return width_; }

  std::complex<double> at(int l, int m) const;
  Eigen::VectorXcd vec_at(int l, int m) const;
  double squared_norm(int l, int m) const;

  std::complex<double>& entry(int l, int m, int component);

 private:
  int l_max_;
  int width_;
  std::vector<Eigen::MatrixXcd> c_;  // c_[l] is (2l+1) x width, row index m + l
};

HarmonicCoefficients harmonic_coefficients(const Configuration& config, const Weights& w,
                                           int l_max);

/// Spectral route for d = 3: sum_{k<=l} sum_j Gamma_{l,k} |C_{k,j}|^2.
double frame_potential_spectral(const Configuration& config, int l);

/// sum over all ordered triples (i,j,k) of [(P_i x P_j) . P_k]^l, d = 3,
/// even l >= 2 (the sum vanishes identically for odd l).
double antisymmetric_fp(const Configuration& config, int l);

/// Antisymmetric frame potential of the uniform distribution with total
/// weight n: 2 sqrt(pi) n^3 Gamma(l/2 + 1) / ((l-1)(l+1)^2 Gamma(l/2 - 1/2)).
double afp_uniform(int l, double n);

/// Closed harmonic form of the l = 2 antisymmetric frame potential in the
/// C_{2,m} coefficients; equals antisymmetric_fp(config, 2).
double afp2_spectral(const Configuration& config);

/// antisymmetric_fp(config, 2) against its upper bound 2 N^3 / 9.
BoundReport afp_upper_bound_report(const Configuration& config);

}  // namespace spherefp::frames
