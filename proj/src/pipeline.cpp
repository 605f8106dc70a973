#include "spherefp/pipeline.hpp"

#include <cmath>

#include "spherefp/format.hpp"
#include "spherefp/riesz.hpp"
#include "spherefp/voronoi.hpp"

namespace spherefp::pipeline {

ConfigReport analyze_configuration(const Configuration& config, int l) {
  ConfigReport r;
  r.energy = riesz::riesz_energy(config, 1.0);
  r.converged = true;

  const voronoi::VoronoiDiagram diagram = voronoi::spherical_voronoi(config);
  const int d = config.dim();

  const Weights strain_s = voronoi::strain_scalar_weights(diagram);
  r.strain_total = strain_s.total();
  r.strain_fp = frames::make_lower_bound_report(
      frames::weighted_frame_potential(config, strain_s, l),
      frames::fp_lower_bound(l, d, strain_s.pair_total()));

  const Weights energy_w = voronoi::energy_weights(diagram);
  r.energy_total = energy_w.total();
  r.energy_fp = frames::make_lower_bound_report(
      frames::weighted_frame_potential(config, energy_w, l),
      frames::fp_lower_bound(l, d, energy_w.pair_total()));

  const Weights strain_v = voronoi::strain_vector_weights(diagram);
  r.strain_vec_pair_total = strain_v.pair_total();
  r.strain_vec_fp = frames::make_lower_bound_report(
      frames::weighted_frame_potential(config, strain_v, l),
      frames::fp_lower_bound(l, d, strain_v.pair_total()));

  const Weights defects = voronoi::defect_weights(diagram);
  r.defect_count = static_cast<int>(std::lround(defects.total()));
  r.defect_fp = frames::make_lower_bound_report(
      frames::weighted_frame_potential(config, defects, l),
      frames::fp_lower_bound(l, d, defects.pair_total()));

  return r;
}

std::vector<ConfigReport> analyze_ensemble(const std::vector<optimize::MinimizationResult>& runs,
                                           int l) {
  std::vector<ConfigReport> out;
  out.reserve(runs.size());
  int index = 0;
  for (const auto& run : runs) {
    if (!std::isfinite(run.energy)) {
      ++index;
      continue;
    }
    ConfigReport r = analyze_configuration(run.config, l);
    r.index = index++;
    r.energy = run.energy;
    r.converged = run.converged;
    out.push_back(std::move(r));
  }
  return out;
}

std::string reports_to_csv(const std::vector<ConfigReport>& reports) {
  std::string csv =
      "index,energy,converged,"
      "strain_total,fp_strain,bound_strain,residual_strain,"
      "energy_total,fp_energy,bound_energy,residual_energy,"
      "strain_vec_pair_total,fp_strain_vec,bound_strain_vec,residual_strain_vec,"
      "defect_count,fp_defect,bound_defect,residual_defect\n";
  for (const auto& r : reports) {
    csv += std::to_string(r.index) + ',' + g17(r.energy) + ',' + (r.converged ? "1" : "0") + ',';
    csv += g17(r.strain_total) + ',' + g17(r.strain_fp.value) + ',' + g17(r.strain_fp.bound) +
           ',' + g17(r.strain_fp.residual) + ',';
    csv += g17(r.energy_total) + ',' + g17(r.energy_fp.value) + ',' + g17(r.energy_fp.bound) +
           ',' + g17(r.energy_fp.residual) + ',';
    csv += g17(r.strain_vec_pair_total) + ',' + g17(r.strain_vec_fp.value) + ',' +
           g17(r.strain_vec_fp.bound) + ',' + g17(r.strain_vec_fp.residual) + ',';
    csv += std::to_string(r.defect_count) + ',' + g17(r.defect_fp.value) + ',' +
           g17(r.defect_fp.bound) + ',' + g17(r.defect_fp.residual) + '\n';
  }
  return csv;
}

}  // namespace spherefp::pipeline
