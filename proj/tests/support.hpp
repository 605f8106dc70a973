#pragma once

#include <Eigen/Dense>
#include <random>

#include "spherefp/config.hpp"

namespace testsupport {

// Haar-random rotation: QR of a Gaussian matrix, sign-fixed, det forced to +1.
inline Eigen::MatrixXd random_rotation(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

inline spherefp::Configuration rotated(const spherefp::Configuration& c,
                                       const Eigen::MatrixXd& rot) {
  return spherefp::Configuration(c.points() * rot.transpose());
}

}  // namespace testsupport
