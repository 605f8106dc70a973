#include "spherefp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "spherefp/config.hpp"
#include "spherefp/errors.hpp"
#include "spherefp/format.hpp"
#include "spherefp/frames.hpp"
#include "spherefp/lattices.hpp"
#include "spherefp/optimize.hpp"
#include "spherefp/pipeline.hpp"
#include "spherefp/riesz.hpp"
#include "spherefp/specfun.hpp"
#include "spherefp/version.hpp"
#include "spherefp/voronoi.hpp"

namespace spherefp::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 12345;

struct Manifest {
  std::string subcommand;
  json params = json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void write_for(const std::string& out_path) {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json m;
    m["subcommand"] = subcommand;
    m["parameters"] = params;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    m["version"] = kVersion;
    m["wall_time_seconds"] = wall;
    std::ofstream f(out_path + ".manifest.json");
    f << m.dump(2) << '\n';
  }
};

void emit(const std::string& text, const std::string& out_path, Manifest& manifest) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError("cannot write output file: " + out_path);
  f << text;
  manifest.outputs.push_back(out_path);
  manifest.write_for(out_path);
}

std::string bool_str(bool b) { return b ? "1" : "0"; }

Eigen::VectorXd parse_center(const std::string& text, int expected_dim) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--center", "not a number: " + tok);
    }
  }
  if (static_cast<int>(vals.size()) != expected_dim)
    throw CLI::ValidationError("--center", "expected " + std::to_string(expected_dim) +
                                                " comma-separated coordinates");
  Eigen::VectorXd v(expected_dim);
  for (int i = 0; i < expected_dim; ++i) v(i) = vals[static_cast<std::size_t>(i)];
  return v;
}

json report_json(const frames::BoundReport& r) {
  return json{{"value", r.value},
              {"bound", r.bound},
              {"residual", r.residual},
              {"saturated", r.saturated},
              {"tolerance", r.tolerance}};
}

// ---- fp ------------------------------------------------------------------

int cmd_fp(const std::string& input, const std::string& weights_path,
           const std::vector<int>& ells, const std::string& out, const std::string& format,
           Manifest& manifest) {
  const Configuration config = load_configuration_file(input);
  manifest.inputs.push_back(input);
  Weights w = Weights::unit(config.size());
  std::string kind = "unit";
  if (!weights_path.empty()) {
    w = load_weights_file(weights_path, config.size());
    manifest.inputs.push_back(weights_path);
    kind = w.kind == Weights::Kind::Scalar ? "scalar" : "vector";
  }

  if (format == "json") {
    json rows = json::array();
    for (int l : ells) {
      json row = report_json(frames::fp_bound_report(config, w, l));
      row["ell"] = l;
      row["weights"] = kind;
      rows.push_back(std::move(row));
    }
    emit(rows.dump(2) + "\n", out, manifest);
  } else {
    std::string csv = "ell,weights,value,bound,residual,saturated\n";
    for (int l : ells) {
      const auto r = frames::fp_bound_report(config, w, l);
      csv += std::to_string(l) + ',' + kind + ',' + g17(r.value) + ',' + g17(r.bound) + ',' +
             g17(r.residual) + ',' + bool_str(r.saturated) + '\n';
    }
    emit(csv, out, manifest);
  }
  return 0;
}

// ---- afp -----------------------------------------------------------------

int cmd_afp(const std::string& input, const std::vector<int>& ells, const std::string& out,
            const std::string& format, Manifest& manifest) {
  const Configuration config = load_configuration_file(input);
  manifest.inputs.push_back(input);
  const double n = config.size();

  if (format == "json") {
    json rows = json::array();
    for (int l : ells) {
      json row;
      row["ell"] = l;
      row["value"] = frames::antisymmetric_fp(config, l);
      row["afp_uniform"] = frames::afp_uniform(l, n);
      if (l == 2) {
        row["bound_report"] = report_json(frames::afp_upper_bound_report(config));
        row["spectral"] = frames::afp2_spectral(config);
      }
      rows.push_back(std::move(row));
    }
    emit(rows.dump(2) + "\n", out, manifest);
  } else {
    std::string csv = "ell,value,afp_uniform,bound,residual,saturated,spectral\n";
    for (int l : ells) {
      const double value = frames::antisymmetric_fp(config, l);
      csv += std::to_string(l) + ',' + g17(value) + ',' + g17(frames::afp_uniform(l, n)) + ',';
      if (l == 2) {
        const auto r = frames::afp_upper_bound_report(config);
        csv += g17(r.bound) + ',' + g17(r.residual) + ',' + bool_str(r.saturated) + ',' +
               g17(frames::afp2_spectral(config));
      } else {
        csv += ",,,";
      }
      csv += '\n';
    }
    emit(csv, out, manifest);
  }
  return 0;
}

// ---- coeffs ---------------------------------------------------------------

int cmd_coeffs(const std::vector<int>& ells, int dim, bool with_kappa, const std::string& out,
               const std::string& format, Manifest& manifest) {
  if (format == "json") {
    json root;
    json jb = json::array();
    for (int l : ells) {
      const auto pe = specfun::power_expansion(l, dim);
      json row{{"ell", l}, {"dim", dim}, {"B", pe.B},
               {"uniform_fp_coeff", specfun::uniform_fp_coeff(l, dim)}};
      jb.push_back(std::move(row));
    }
    root["power_expansions"] = std::move(jb);
    if (dim == 3) {
      json jg = json::array();
      for (int l : ells)
        for (int k = 0; k <= l; ++k)
          jg.push_back(json{{"ell", l}, {"k", k}, {"value", specfun::gamma_lk(l, k)}});
      root["gamma"] = std::move(jg);
    }
    if (with_kappa) {
      json jk = json::array();
      for (const auto& [key, value] : specfun::kappa_table().entries())
        jk.push_back(json{{"indices", key}, {"value", value}});
      root["kappa"] = std::move(jk);
    }
    emit(root.dump(2) + "\n", out, manifest);
  } else {
    std::string csv = "quantity,dim,ell,k,key,value\n";
    for (int l : ells) {
      const auto pe = specfun::power_expansion(l, dim);
      for (std::size_t k = 0; k < pe.B.size(); ++k)
        csv += "B," + std::to_string(dim) + ',' + std::to_string(l) + ',' + std::to_string(k) +
               ",," + g17(pe.B[k]) + '\n';
      csv += "uniform_fp_coeff," + std::to_string(dim) + ',' + std::to_string(l) + ",,," +
             g17(specfun::uniform_fp_coeff(l, dim)) + '\n';
      if (dim == 3)
        for (int k = 0; k <= l; ++k)
          csv += "gamma,3," + std::to_string(l) + ',' + std::to_string(k) + ",," +
                 g17(specfun::gamma_lk(l, k)) + '\n';
    }
    if (with_kappa) {
      for (const auto& [key, value] : specfun::kappa_table().entries()) {
        std::string ks;
        for (std::size_t i = 0; i < key.size(); ++i)
          ks += (i ? " " : "") + std::to_string(key[i]);
        csv += "kappa,3,,," + ks + ',' + g17(value) + '\n';
      }
    }
    emit(csv, out, manifest);
  }
  return 0;
}

// ---- riesz -----------------------------------------------------------------

int cmd_riesz(const std::string& input, double s, double delta, int lmax, const std::string& out,
              const std::string& format, Manifest& manifest) {
  const Configuration config = load_configuration_file(input);
  manifest.inputs.push_back(input);
  const double n = config.size();

  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("n", n);
  rows.emplace_back("s", s);
  rows.emplace_back("energy", riesz::riesz_energy(config, s));
  if (config.dim() == 3) {
    rows.emplace_back("delta", delta);
    rows.emplace_back("regularized_energy", riesz::regularized_energy(config, delta));
    rows.emplace_back("series_lmax", lmax);
    rows.emplace_back("energy_series", riesz::energy_series(config, delta, lmax));
    rows.emplace_back("calibrated_bound", riesz::calibrated_bound(n, delta));
    if (n >= 2) {
      const double ds = riesz::delta_star(n);
      rows.emplace_back("delta_star", ds);
      rows.emplace_back("calibrated_bound_star", riesz::calibrated_bound(n, ds));
    }
    rows.emplace_back("asymptotic_bound", riesz::asymptotic_bound(n));
    const auto sd = riesz::sum_distance_bound(config);
    rows.emplace_back("sum_distance_energy", sd.value);
    rows.emplace_back("sum_distance_bound", sd.bound);
    rows.emplace_back("sum_distance_residual", sd.residual);
  }

  if (format == "json") {
    json obj;
    for (const auto& [k, v] : rows) obj[k] = v;
    emit(obj.dump(2) + "\n", out, manifest);
  } else {
    std::string csv = "quantity,value\n";
    for (const auto& [k, v] : rows) csv += k + ',' + g17(v) + '\n';
    emit(csv, out, manifest);
  }
  return 0;
}

// ---- minimize / ensemble ----------------------------------------------------

optimize::MinimizeOptions make_opts(double s, int max_iters, double grad_tol) {
  optimize::MinimizeOptions opts;
  opts.s = s;
  opts.max_iters = max_iters;
  opts.grad_tol = grad_tol;
  return opts;
}

int cmd_minimize(const std::string& input, int n, int dim, std::uint64_t seed, double s,
                 int max_iters, double grad_tol, const std::string& out,
                 const std::string& format, Manifest& manifest) {
  std::optional<Configuration> start;
  if (!input.empty()) {
    start = load_configuration_file(input);
    manifest.inputs.push_back(input);
  } else {
    start = sample_uniform(n, dim, seed);
  }
  const auto res = optimize::local_minimize(*start, make_opts(s, max_iters, grad_tol));

  if (!out.empty()) {
    save_configuration_file(res.config, out);
    manifest.outputs.push_back(out);
  }
  json summary{{"energy", res.energy},
               {"iterations", res.iterations},
               {"final_grad_norm", res.final_grad_norm},
               {"converged", res.converged},
               {"message", res.message},
               {"n", res.config.size()},
               {"dim", res.config.dim()}};
  if (format == "json") {
    std::cout << summary.dump(2) << '\n';
  } else {
    std::cout << "energy,iterations,final_grad_norm,converged\n"
              << g17(res.energy) << ',' << res.iterations << ',' << g17(res.final_grad_norm)
              << ',' << bool_str(res.converged) << '\n';
  }
  if (!out.empty()) manifest.write_for(out);
  return 0;
}

int cmd_ensemble(const std::string& input, int count, double sigma, std::uint64_t seed, double s,
                 int max_iters, double grad_tol, int threads, bool analyze,
                 const std::string& out, Manifest& manifest) {
  const Configuration seed_config = load_configuration_file(input);
  manifest.inputs.push_back(input);
  const auto runs =
      optimize::ensemble(seed_config, count, sigma, seed, make_opts(s, max_iters, grad_tol),
                         threads);

  std::string csv = "rank,energy,iterations,final_grad_norm,converged\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    csv += std::to_string(i) + ',' + g17(runs[i].energy) + ',' +
           std::to_string(runs[i].iterations) + ',' + g17(runs[i].final_grad_norm) + ',' +
           bool_str(runs[i].converged) + '\n';
  }
  emit(csv, out, manifest);

  if (!out.empty()) {
    const fs::path stem = fs::path(out).parent_path() / fs::path(out).stem();
    const fs::path cfg_dir = stem.string() + "_configs";
    fs::create_directories(cfg_dir);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "member_%04zu.txt", i);
      save_configuration_file(runs[i].config, (cfg_dir / name).string());
    }
    manifest.outputs.push_back(cfg_dir.string());

    if (analyze) {
      const auto reports = pipeline::analyze_ensemble(runs);
      const std::string analysis_path = stem.string() + "_analysis.csv";
      std::ofstream f(analysis_path);
      f << pipeline::reports_to_csv(reports);
      manifest.outputs.push_back(analysis_path);
    }
    manifest.write_for(out);
  } else if (analyze) {
    const auto reports = pipeline::analyze_ensemble(runs);
    std::cout << pipeline::reports_to_csv(reports);
  }
  return 0;
}

// ---- voronoi ----------------------------------------------------------------

int cmd_voronoi(const std::string& input, const std::vector<int>& fp_ells, bool unprojected,
                const std::string& out, Manifest& manifest) {
  const Configuration config = load_configuration_file(input);
  manifest.inputs.push_back(input);
  voronoi::VoronoiOptions opts;
  opts.project_centroid = !unprojected;
  const auto diagram = voronoi::spherical_voronoi(config, opts);
  emit(voronoi::to_json(diagram) + "\n", out, manifest);

  if (!fp_ells.empty()) {
    std::vector<pipeline::ConfigReport> reports;
    for (int l : fp_ells) {
      auto r = pipeline::analyze_configuration(config, l);
      r.index = l;  // row key is the frame order here
      reports.push_back(std::move(r));
    }
    const std::string csv = pipeline::reports_to_csv(reports);
    if (out.empty()) {
      std::cout << csv;
    } else {
      const fs::path stem = fs::path(out).parent_path() / fs::path(out).stem();
      const std::string path = stem.string() + "_fp.csv";
      std::ofstream f(path);
      f << csv;
      manifest.outputs.push_back(path);
      manifest.write_for(out);
    }
  }
  return 0;
}

// ---- window -----------------------------------------------------------------

int cmd_window(const std::string& lattice_name, double radius, double spacing,
               const std::vector<double>& gammas, const std::vector<int>& ells,
               const std::string& center_text, int scan_random, std::uint64_t seed,
               const std::string& out, const std::string& format, Manifest& manifest) {
  lattices::LatticeDescriptor lattice;
  lattice.spacing = spacing;
  lattice.type = lattice_name == "cubic" ? lattices::LatticeType::Cubic
                                         : lattices::LatticeType::Hexagonal;
  const int dim = lattice.type == lattices::LatticeType::Cubic ? 3 : 2;

  Eigen::VectorXd center;
  if (!center_text.empty()) {
    center = parse_center(center_text, dim);
  } else if (lattice.type == lattices::LatticeType::Cubic) {
    center = 0.5 * spacing * Eigen::Vector3d::Ones();  // unit-cell center
  } else {
    center = Eigen::Vector2d::Zero();  // lattice point
  }

  if (scan_random > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Eigen::VectorXd> centers;
    for (int i = 0; i < scan_random; ++i) {
      Eigen::VectorXd c = center;
      for (int k = 0; k < dim; ++k) c(k) += spacing * unif(rng);
      centers.push_back(std::move(c));
    }
    const int l = ells.empty() ? 2 : ells.front();
    const double gamma = gammas.empty() ? 0.0 : gammas.front();
    const auto stats = lattices::window_scan(lattice, radius, gamma, l, centers);
    std::string csv;
    for (int k = 0; k < dim; ++k) csv += (k ? "," : "") + std::string(1, char('x' + k));
    csv += ",delta,ok\n";
    for (const auto& e : stats.entries) {
      for (int k = 0; k < dim; ++k) csv += (k ? "," : "") + g17(e.center(k));
      csv += ',' + g17(e.delta) + ',' + bool_str(e.ok) + '\n';
    }
    csv += "# min " + g17(stats.min) + " max " + g17(stats.max) + " mean " + g17(stats.mean) +
           " stddev " + g17(stats.stddev) + '\n';
    emit(csv, out, manifest);
    return 0;
  }

  if (format == "json") {
    json rows = json::array();
    for (double gamma : gammas) {
      for (int l : ells) {
        const auto ws = lattices::lattice_window(lattice, radius, center);
        rows.push_back(json{{"lattice", lattice_name},
                            {"radius", radius},
                            {"spacing", spacing},
                            {"gamma", gamma},
                            {"ell", l},
                            {"n", ws.size()},
                            {"fp", lattices::window_fp(ws, gamma, l)},
                            {"delta", lattices::window_delta(ws, gamma, l)}});
      }
    }
    emit(rows.dump(2) + "\n", out, manifest);
  } else {
    std::string csv = "lattice,radius,spacing,gamma,ell,n,fp,delta\n";
    const auto ws = lattices::lattice_window(lattice, radius, center);
    for (double gamma : gammas) {
      for (int l : ells) {
        csv += lattice_name + ',' + g17(radius) + ',' + g17(spacing) + ',' + g17(gamma) + ',' +
               std::to_string(l) + ',' + std::to_string(ws.size()) + ',' +
               g17(lattices::window_fp(ws, gamma, l)) + ',' +
               g17(lattices::window_delta(ws, gamma, l)) + '\n';
      }
    }
    emit(csv, out, manifest);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"frame potentials, bounds, and uniformity diagnostics for sphere configurations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string input, weights_path, out, format = "csv", center_text, lattice_name = "hexagonal";
  std::vector<int> ells;
  std::vector<double> gammas;
  int dim = 3, count = 10, max_iters = 200000, threads = 0, n_points = 0, scan_random = 0;
  double gamma = 0.0, radius = 4.0, spacing = 1.0, sigma = 0.05, s_exp = 1.0, grad_tol = -1.0,
         delta = 0.1;
  int lmax = 200;
  std::uint64_t seed = kDefaultSeed;
  bool analyze = false, with_kappa = false, unprojected = false;
  (void)gamma;

  Manifest manifest;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "output file (stdout if omitted)");
    sub->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* fp = app.add_subcommand("fp", "frame potentials and lower bounds");
  fp->add_option("--input", input, "point file")->required();
  fp->add_option("--weights", weights_path, "optional weights file");
  fp->add_option("--ell", ells, "frame order (repeatable)");
  add_common(fp);

  auto* afp = app.add_subcommand("afp", "antisymmetric frame potentials and the upper bound");
  afp->add_option("--input", input, "point file")->required();
  afp->add_option("--ell", ells, "even frame order (repeatable)");
  add_common(afp);

  auto* coeffs = app.add_subcommand("coeffs", "kernel expansion coefficients and bound constants");
  coeffs->add_option("--ell", ells, "degree (repeatable)");
  coeffs->add_option("--dim", dim, "ambient dimension")->check(CLI::Range(2, 64));
  coeffs->add_flag("--kappa", with_kappa, "include the triple-product coefficient table");
  add_common(coeffs);

  auto* rz = app.add_subcommand("riesz", "Riesz energies and analytic lower bounds");
  rz->add_option("--input", input, "point file")->required();
  rz->add_option("--s", s_exp, "Riesz exponent (s >= -1, s != 0)");
  rz->add_option("--delta", delta, "regularization parameter");
  rz->add_option("--lmax", lmax, "series truncation order");
  add_common(rz);

  auto* mi = app.add_subcommand("minimize", "local Riesz-energy minimization on the sphere");
  mi->add_option("--input", input, "starting point file (omit to sample)");
  mi->add_option("--n", n_points, "number of points for a sampled start");
  mi->add_option("--dim", dim, "dimension for a sampled start");
  mi->add_option("--seed", seed, "RNG seed");
  mi->add_option("--s", s_exp, "Riesz exponent");
  mi->add_option("--max-iters", max_iters, "iteration cap");
  mi->add_option("--grad-tol", grad_tol, "projected-gradient tolerance (default 1e-10 N)");
  add_common(mi);

  auto* en = app.add_subcommand("ensemble", "perturb-and-reminimize ensembles");
  en->add_option("--input", input, "seed configuration")->required();
  en->add_option("--count", count, "ensemble size");
  en->add_option("--sigma", sigma, "perturbation scale");
  en->add_option("--seed", seed, "RNG seed");
  en->add_option("--s", s_exp, "Riesz exponent");
  en->add_option("--max-iters", max_iters, "iteration cap");
  en->add_option("--grad-tol", grad_tol, "projected-gradient tolerance");
  en->add_option("--threads", threads, "parallel workers (0 = all cores)");
  en->add_flag("--analyze", analyze, "emit the Voronoi strain/energy frame-potential table");
  add_common(en);

  auto* vo = app.add_subcommand("voronoi", "spherical Voronoi diagram with strain and charges");
  vo->add_option("--input", input, "point file")->required();
  vo->add_option("--fp-ell", ells, "also report weighted frame potentials at these orders");
  vo->add_flag("--unprojected", unprojected, "use the unprojected centroid strain variant");
  add_common(vo);

  auto* wi = app.add_subcommand("window", "lattice observation-window uniformity diagnostics");
  wi->add_option("--lattice", lattice_name, "hexagonal|cubic")
      ->check(CLI::IsMember({"hexagonal", "cubic"}));
  wi->add_option("--radius", radius, "window radius");
  wi->add_option("--spacing", spacing, "lattice spacing");
  wi->add_option("--gamma", gammas, "radial weight exponent (repeatable)");
  wi->add_option("--ell", ells, "frame order (repeatable)");
  wi->add_option("--center", center_text, "window center, comma-separated coordinates");
  wi->add_option("--scan-random", scan_random, "scan this many random centers in one unit cell");
  wi->add_option("--seed", seed, "RNG seed for the scan");
  add_common(wi);

  std::vector<const char*> cargv(argv, argv + argc);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  manifest.params["argv"] = std::vector<std::string>(argv + 1, argv + argc);
  manifest.params["seed"] = seed;

  try {
    if (fp->parsed()) {
      if (ells.empty()) ells = {2};
      manifest.subcommand = "fp";
      return cmd_fp(input, weights_path, ells, out, format, manifest);
    }
    if (afp->parsed()) {
      if (ells.empty()) ells = {2};
      manifest.subcommand = "afp";
      return cmd_afp(input, ells, out, format, manifest);
    }
    if (coeffs->parsed()) {
      if (ells.empty()) ells = {0, 1, 2, 3, 4, 5, 6, 7, 8};
      manifest.subcommand = "coeffs";
      return cmd_coeffs(ells, dim, with_kappa, out, format, manifest);
    }
    if (rz->parsed()) {
      manifest.subcommand = "riesz";
      return cmd_riesz(input, s_exp, delta, lmax, out, format, manifest);
    }
    if (mi->parsed()) {
      if (input.empty() && n_points <= 0)
        throw std::invalid_argument("minimize: need --input or --n");
      manifest.subcommand = "minimize";
      return cmd_minimize(input, n_points, dim, seed, s_exp, max_iters, grad_tol, out, format,
                          manifest);
    }
    if (en->parsed()) {
      manifest.subcommand = "ensemble";
      return cmd_ensemble(input, count, sigma, seed, s_exp, max_iters, grad_tol, threads,
                          analyze, out, manifest);
    }
    if (vo->parsed()) {
      manifest.subcommand = "voronoi";
      return cmd_voronoi(input, ells, unprojected, out, manifest);
    }
    if (wi->parsed()) {
      if (ells.empty()) ells = {1, 2, 3, 4, 5, 6};
      if (gammas.empty()) gammas = {0.0, 0.5, 1.0, 2.0};
      manifest.subcommand = "window";
      return cmd_window(lattice_name, radius, spacing, gammas, ells, center_text, scan_random,
                        seed, out, format, manifest);
    }
  } catch (const DegeneracyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("spherefp");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace spherefp::cli
