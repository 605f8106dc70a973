#include "spherefp/frames.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spherefp/errors.hpp"
#include "spherefp/specfun.hpp"

namespace spherefp::frames {

namespace {

constexpr double kPi = 3.14159265358979323846;

double int_pow(double x, int n) {
  double r = 1.0;
  double b = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

void require_d3(const Configuration& config, const char* what) {
  if (config.dim() != 3)
    throw std::invalid_argument(std::string(what) + ": only d = 3 is supported");
}

// theta in [0, pi], phi in [0, 2 pi) of a unit vector.
void to_angles(const Eigen::RowVectorXd& p, double& theta, double& phi) {
  theta = std::acos(std::clamp(p(2), -1.0, 1.0));
  phi = std::atan2(p(1), p(0));
  if (phi < 0.0) phi += 2.0 * kPi;
}

}  // namespace

double default_bound_tolerance(double bound) { return 1e-9 * std::max(1.0, std::abs(bound)); }

BoundReport make_lower_bound_report(double value, double bound, double tolerance) {
  BoundReport r;
  r.value = value;
  r.bound = bound;
  r.residual = value - bound;
  r.tolerance = tolerance >= 0.0 ? tolerance : default_bound_tolerance(bound);
  r.saturated = std::abs(r.residual) <= r.tolerance;
  return r;
}

BoundReport make_upper_bound_report(double value, double bound, double tolerance) {
  BoundReport r;
  r.value = value;
  r.bound = bound;
  r.residual = bound - value;
  r.tolerance = tolerance >= 0.0 ? tolerance : default_bound_tolerance(bound);
  r.saturated = std::abs(r.residual) <= r.tolerance;
  return r;
}

double frame_potential(const Configuration& config, int l) {
  if (l < 0) throw std::invalid_argument("frame_potential: l must be >= 0");
  const Eigen::MatrixXd g = config.gram();
  const int n = config.size();
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sum += int_pow(g(i, j), l);
  return sum;
}

double weighted_frame_potential(const Configuration& config, const Weights& w, int l) {
  if (l < 0) throw std::invalid_argument("weighted_frame_potential: l must be >= 0");
  if (w.size() != config.size())
    throw std::invalid_argument("weighted_frame_potential: weights length does not match");
  const Eigen::MatrixXd g = config.gram();
  const int n = config.size();
  double sum = 0.0;
  if (w.kind == Weights::Kind::Scalar) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum += w.scalars(i) * w.scalars(j) * int_pow(g(i, j), l);
  } else {
    const Eigen::MatrixXd wg = w.vectors * w.vectors.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum += wg(i, j) * int_pow(g(i, j), l);
  }
  return sum;
}

double fp_lower_bound(int l, int d, double weight_total) {
  return specfun::uniform_fp_coeff(l, d) * weight_total;
}

BoundReport fp_bound_report(const Configuration& config, const Weights& w, int l) {
  if (w.kind == Weights::Kind::Scalar && (w.scalars.array() < 0.0).any())
    throw std::invalid_argument("fp_bound_report: scalar weights must be nonnegative");
  const double value = weighted_frame_potential(config, w, l);
  const double bound = fp_lower_bound(l, config.dim(), w.pair_total());
  return make_lower_bound_report(value, bound);
}

HarmonicCoefficients::HarmonicCoefficients(int l_max, int width) : l_max_(l_max), width_(width) {
  if (l_max < 0 || width < 1)
    throw std::invalid_argument("HarmonicCoefficients: need l_max >= 0, width >= 1");
  c_.reserve(static_cast<std::size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) c_.emplace_back(Eigen::MatrixXcd::Zero(2 * l + 1, width));
}

std::complex<double> HarmonicCoefficients::at(int l, int m) const {
  if (width_ != 1)
    throw std::invalid_argument("HarmonicCoefficients::at: vector-valued coefficients");
  return vec_at(l, m)(0);
}

Eigen::VectorXcd HarmonicCoefficients::vec_at(int l, int m) const {
  if (l < 0 || l > l_max_ || std::abs(m) > l)
    throw std::invalid_argument("HarmonicCoefficients: index out of range");
  return c_[static_cast<std::size_t>(l)].row(m + l);
}

double HarmonicCoefficients::squared_norm(int l, int m) const {
  if (l < 0 || l > l_max_ || std::abs(m) > l)
    throw std::invalid_argument("HarmonicCoefficients: index out of range");
  return c_[static_cast<std::size_t>(l)].row(m + l).squaredNorm();
}

std::complex<double>& HarmonicCoefficients::entry(int l, int m, int component) {
  return c_[static_cast<std::size_t>(l)](m + l, component);
}

HarmonicCoefficients harmonic_coefficients(const Configuration& config, const Weights& w,
                                           int l_max) {
  require_d3(config, "harmonic_coefficients");
  if (w.size() != config.size())
    throw std::invalid_argument("harmonic_coefficients: weights length does not match");
  const int width = w.kind == Weights::Kind::Scalar ? 1 : static_cast<int>(w.vectors.cols());
  HarmonicCoefficients out(l_max, width);
  for (int i = 0; i < config.size(); ++i) {
    double theta = 0.0, phi = 0.0;
    to_angles(config.point(i), theta, phi);
    for (int l = 0; l <= l_max; ++l) {
      for (int m = -l; m <= l; ++m) {
        const std::complex<double> ystar = std::conj(specfun::sph_harm(l, m, theta, phi));
        if (w.kind == Weights::Kind::Scalar) {
          out.entry(l, m, 0) += w.scalars(i) * ystar;
        } else {
          for (int c = 0; c < width; ++c) out.entry(l, m, c) += w.vectors(i, c) * ystar;
        }
      }
    }
  }
  return out;
}

double frame_potential_spectral(const Configuration& config, int l) {
  require_d3(config, "frame_potential_spectral");
  if (l < 0) throw std::invalid_argument("frame_potential_spectral: l must be >= 0");
  const HarmonicCoefficients c =
      harmonic_coefficients(config, Weights::unit(config.size()), l);
  double sum = 0.0;
  for (int k = 0; k <= l; ++k) {
    const double gamma = specfun::gamma_lk(l, k);
    if (gamma == 0.0) continue;
    for (int j = -k; j <= k; ++j) sum += gamma * c.squared_norm(k, j);
  }
  return sum;
}

double antisymmetric_fp(const Configuration& config, int l) {
  require_d3(config, "antisymmetric_fp");
  if (l < 2 || l % 2 != 0)
    throw std::invalid_argument("antisymmetric_fp: l must be even and >= 2");
  const Eigen::MatrixXd& p = config.points();
  const int n = config.size();
  // Even powers make the summand invariant under permutations of (i,j,k),
  // and triples with a repeated index vanish, so the full ordered sum is
  // 6x the strictly increasing one.
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d pi = p.row(i);
    for (int j = i + 1; j < n; ++j) {
      const Eigen::Vector3d cij = pi.cross(Eigen::Vector3d(p.row(j)));
      for (int k = j + 1; k < n; ++k) {
        const double t = cij.dot(Eigen::Vector3d(p.row(k)));
        sum += int_pow(t, l);
      }
    }
  }
  return 6.0 * sum;
}

double afp_uniform(int l, double n) {
  if (l < 2 || l % 2 != 0) throw std::invalid_argument("afp_uniform: l must be even and >= 2");
  return 2.0 * std::sqrt(kPi) * n * n * n * std::tgamma(0.5 * l + 1.0) /
         ((l - 1.0) * (l + 1.0) * (l + 1.0) * std::tgamma(0.5 * l - 0.5));
}

double afp2_spectral(const Configuration& config) {
  require_d3(config, "afp2_spectral");
  const double n = config.size();
  const HarmonicCoefficients c =
      harmonic_coefficients(config, Weights::unit(config.size()), 2);
  const double c20 = c.at(2, 0).real();  // real for real weights
  const std::complex<double> c21 = c.at(2, 1);
  const std::complex<double> c22 = c.at(2, 2);
  const double a21 = std::norm(c21);
  const double a22 = std::norm(c22);
  const double cross =
      2.0 * (std::conj(c22) * c21 * c21).real();  // C*22 C21^2 + C22 C*21^2
  return 2.0 * n * n * n / 9.0 - (8.0 / 15.0) * kPi * n * (c20 * c20 + 2.0 * a21 + 2.0 * a22) +
         (16.0 * std::pow(kPi, 1.5) / (45.0 * std::sqrt(5.0))) *
             (6.0 * (a21 - 2.0 * a22) * c20 + 3.0 * std::sqrt(6.0) * cross +
              2.0 * c20 * c20 * c20);
}

BoundReport afp_upper_bound_report(const Configuration& config) {
  const double n = config.size();
  const double value = antisymmetric_fp(config, 2);
  const double bound = 2.0 * n * n * n / 9.0;
  return make_upper_bound_report(value, bound);
}

}  // namespace spherefp::frames
