#pragma once

#include <string>
#include <vector>

#include "spherefp/config.hpp"
#include "spherefp/frames.hpp"
#include "spherefp/optimize.hpp"

namespace spherefp::pipeline {

/// Per-configuration weighted frame potentials of the Voronoi strain and
/// cell-energy fields, each against its lower bound.
struct ConfigReport {
  int index = 0;
  double energy = 0.0;
  bool converged = false;

  double strain_total = 0.0;  // sum |S_i|
  frames::BoundReport strain_fp;

  double energy_total = 0.0;  // sum U_i = E
  frames::BoundReport energy_fp;

  double strain_vec_pair_total = 0.0;  // sum_ij S_i . S_j
  frames::BoundReport strain_vec_fp;

  int defect_count = 0;  // non-hexagonal cells
  frames::BoundReport defect_fp;
};

/// Voronoi strain/energy analysis of one configuration at frame order l.
ConfigReport analyze_configuration(const Configuration& config, int l = 2);

/// Analysis of a whole minimization ensemble; entries that failed to
/// minimize are skipped (they carry no configuration worth analyzing).
std::vector<ConfigReport> analyze_ensemble(const std::vector<optimize::MinimizationResult>& runs,
                                           int l = 2);

/// CSV table, one row per configuration, 17-digit columns.
std::string reports_to_csv(const std::vector<ConfigReport>& reports);

}  // namespace spherefp::pipeline
