#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <string_view>

namespace spherefp {

/// An ordered set of N unit vectors in R^d, d >= 2. Immutable once built;
/// construction renormalizes every row (zero rows are rejected).
class Configuration {
 public:
  /// `points` holds one point per row. Rows are renormalized in place.
  explicit Configuration(Eigen::MatrixXd points);

  int dim() const { return static_cast<int>(points_.cols()); }
  int size() const { return static_cast<int>(points_.rows()); }

  const Eigen::MatrixXd& points() const { return points_; }
  Eigen::RowVectorXd point(int i) const { return points_.row(i); }

  /// N x N matrix of pairwise dot products, entries clamped to [-1, 1].
  Eigen::MatrixXd gram() const;

 private:
  Eigen::MatrixXd points_;
};

/// Scalar or vector quantities attached to the points of a Configuration.
struct Weights {
  enum class Kind { Scalar, Vector };

  Kind kind = Kind::Scalar;
  Eigen::VectorXd scalars;  // used when kind == Scalar
  Eigen::MatrixXd vectors;  // N x m, used when kind == Vector

  static Weights unit(int n);
  static Weights scalar(Eigen::VectorXd f);
  static Weights vector(Eigen::MatrixXd f);

  int size() const;

  /// Sum of the scalar weights (scalar kind only).
  double total() const;

  /// The squared-total that enters the lower bounds: (sum f_i)^2 for
  /// scalar weights, sum_ij f_i . f_j = |sum_i f_i|^2 for vector weights.
  double pair_total() const;
};

/// n i.i.d. points from the rotation-invariant measure on S^{d-1}
/// (normalized standard-normal vectors). Deterministic for a fixed seed.
Configuration sample_uniform(int n, int d, std::uint64_t seed);

/// Adds an independent N(0, sigma^2) displacement to every coordinate and
/// renormalizes. sigma = 0 returns the input unchanged.
Configuration perturb(const Configuration& config, double sigma, std::uint64_t seed);

/// Text format: one point per line, d whitespace-separated decimal fields,
/// '#' starts a comment line; d is inferred from the first data line.
/// Rows must satisfy | |p| - 1 | <= 1e-6 and are renormalized on load.
Configuration load_configuration(std::string_view text);
std::string save_configuration(const Configuration& config);

Configuration load_configuration_file(const std::string& path);
void save_configuration_file(const Configuration& config, const std::string& path);

/// Weights file: one scalar (or m fields) per line, same order and count as
/// the configuration it annotates; '#' comments allowed.
Weights load_weights(std::string_view text, int expected_size);
Weights load_weights_file(const std::string& path, int expected_size);

}  // namespace spherefp
