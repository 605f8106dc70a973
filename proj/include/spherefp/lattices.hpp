#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace spherefp::lattices {

enum class LatticeType { Hexagonal, Cubic };

struct LatticeDescriptor {
  LatticeType type = LatticeType::Hexagonal;
  double spacing = 1.0;
};

/// Lattice points inside a ball of radius r (closed, up to rounding slack),
/// recentred so the window center is the origin; a point at the center
/// itself is discarded.
struct WindowSample {
  int dim = 2;
  Eigen::MatrixXd points;  // one point per row, all nonzero
  double radius = 0.0;
  LatticeDescriptor source;
  Eigen::VectorXd center;  // original window center (before recentring)

  int size() const { return static_cast<int>(points.rows()); }
};

/// Triangular (hexagonal) lattice with nearest-neighbor distance `spacing`,
/// basis (1, 0) and (1/2, sqrt(3)/2).
WindowSample hexagonal_window(double r, double spacing, const Eigen::Vector2d& center);

/// Simple cubic lattice with the given spacing.
WindowSample cubic_window(double r, double spacing, const Eigen::Vector3d& center);

WindowSample lattice_window(const LatticeDescriptor& lattice, double r,
                            const Eigen::VectorXd& center);

/// Weighted window frame potential
/// FP = sum_ij (|P_i|/r)^gamma (|P_j|/r)^gamma ((P_i . P_j)/(|P_i||P_j|))^l.
double window_fp(const WindowSample& ws, double gamma, int l);

/// Normalized residual against the dimension-matched lower bound:
/// (1/N^2) [ FP - coeff(l, dim) (sum_i (|P_i|/r)^gamma)^2 ] >= 0.
double window_delta(const WindowSample& ws, double gamma, int l);

struct ScanEntry {
  Eigen::VectorXd center;
  double delta = 0.0;
  bool ok = false;
  std::string message;
};

struct ScanStats {
  double min = 0.0, max = 0.0, mean = 0.0, stddev = 0.0;
  std::vector<ScanEntry> entries;
};

/// Delta_l^(r,gamma) at each center; failed centers are flagged, not fatal.
ScanStats window_scan(const LatticeDescriptor& lattice, double r, double gamma, int l,
                      const std::vector<Eigen::VectorXd>& centers);

}  // namespace spherefp::lattices
