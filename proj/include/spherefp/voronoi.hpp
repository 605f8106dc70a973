#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "spherefp/config.hpp"

namespace spherefp::voronoi {

/// Triangle of the convex hull, vertex indices counterclockwise seen from
/// outside.
struct HullFace {
  int a = 0, b = 0, c = 0;
};

/// Incremental 3D convex hull of unit points. Near-zero orientation tests
/// are re-evaluated in extended precision; genuinely degenerate inputs
/// (coplanar set, cocircular quadruples, duplicates) raise DegeneracyError.
std::vector<HullFace> convex_hull(const Eigen::MatrixXd& points, double degeneracy_tol = 1e-12);

struct VoronoiOptions {
  double degeneracy_tol = 1e-12;
  /// Project the vertex centroid radially onto the sphere before taking the
  /// strain difference (makes the strain of a regular cell exactly zero).
  /// The unprojected variant is kept for comparison.
  bool project_centroid = true;
};

struct VoronoiCell {
  std::vector<Eigen::Vector3d> vertices;  // ordered CCW seen from outside
  int sides = 0;
  int charge = 0;                // 6 - sides
  Eigen::Vector3d strain_vector = Eigen::Vector3d::Zero();
  double strain = 0.0;           // |strain_vector|
  double radial_gap = 0.0;       // 1 - |vertex centroid| before projection
  double area = 0.0;             // spherical area
  double energy = 0.0;           // cell share of the Coulomb energy
};

class VoronoiDiagram {
 public:
  VoronoiDiagram(Configuration generators, std::vector<VoronoiCell> cells)
      : generators_(std::move(generators)), cells_(std::move(cells)) {}

  const Configuration& generators() const { return generators_; }
  const std::vector<VoronoiCell>& cells() const { return cells_; }
  const VoronoiCell& cell(int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(cells_.size()); }

  int total_charge() const;
  double total_area() const;

 private:
  Configuration generators_;
  std::vector<VoronoiCell> cells_;
};

/// Spherical Voronoi diagram of N >= 4 points in general position on S^2,
/// built as the dual of the convex hull (the spherical Delaunay
/// triangulation); Voronoi vertices are hull-triangle circumcenters
/// projected to the sphere.
VoronoiDiagram spherical_voronoi(const Configuration& config, const VoronoiOptions& opts = {});

/// U_i = (1/2) sum_{j != i} 1/r_ij; sums to riesz_energy(config, 1).
std::vector<double> cell_energies(const Configuration& config);

/// 0 for hexagonal cells, 1 otherwise.
Weights defect_weights(const VoronoiDiagram& diagram);

/// Scalar strains |S_i| as weights.
Weights strain_scalar_weights(const VoronoiDiagram& diagram);

/// Strain vectors S_i as R^3 vector weights.
Weights strain_vector_weights(const VoronoiDiagram& diagram);

/// Cell energies U_i as weights.
Weights energy_weights(const VoronoiDiagram& diagram);

/// JSON export: generators plus per-cell vertex loop, side count, charge,
/// strain scalar/vector, radial gap, area, energy.
std::string to_json(const VoronoiDiagram& diagram);

}  // namespace spherefp::voronoi
