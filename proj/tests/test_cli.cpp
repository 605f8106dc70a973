#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spherefp/cli.hpp"
#include "spherefp/config.hpp"
#include "spherefp/platonic.hpp"

using namespace spherefp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("spherefp_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) row.push_back(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fp subcommand reports the tetrahedron saturation") {
  TempDir tmp;
  save_configuration_file(tetrahedron(), tmp.file("tet.txt"));
  const std::string out = tmp.file("fp.csv");
  CHECK(cli::run({"fp", "--input", tmp.file("tet.txt"), "--ell", "2", "--out", out}) == 0);

  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 2);  // header + one row
  CHECK(rows[0][0] == "ell");
  CHECK(std::stod(rows[1][2]) == doctest::Approx(16.0 / 3.0).epsilon(1e-12));
  CHECK(std::stod(rows[1][3]) == doctest::Approx(16.0 / 3.0).epsilon(1e-12));
  CHECK(rows[1][5] == "1");  // saturated

  // the manifest sits next to the output
  CHECK(fs::exists(out + ".manifest.json"));
  const auto manifest = nlohmann::json::parse(std::ifstream(out + ".manifest.json"));
  CHECK(manifest["subcommand"] == "fp");
  CHECK(manifest["outputs"].size() == 1);
}

TEST_CASE("afp subcommand reports the octahedron saturation") {
  TempDir tmp;
  save_configuration_file(octahedron(), tmp.file("oct.txt"));
  const std::string out = tmp.file("afp.csv");
  CHECK(cli::run({"afp", "--input", tmp.file("oct.txt"), "--out", out}) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][1]) == doctest::Approx(48.0).epsilon(1e-12));  // value
  CHECK(std::stod(rows[1][3]) == doctest::Approx(48.0).epsilon(1e-12));  // bound
  CHECK(rows[1][5] == "1");                                              // saturated
  CHECK(std::stod(rows[1][6]) == doctest::Approx(48.0).epsilon(1e-8));   // spectral
}

TEST_CASE("window subcommand shows hexagonal saturation") {
  TempDir tmp;
  const std::string out = tmp.file("window.csv");
  CHECK(cli::run({"window", "--lattice", "hexagonal", "--radius", "4", "--spacing", "1",
                  "--gamma", "1", "--ell", "2", "--out", out}) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(std::stod(rows[1][7])) <= 1e-10);  // delta
}

TEST_CASE("coeffs subcommand emits tables") {
  TempDir tmp;
  const std::string out = tmp.file("coeffs.json");
  CHECK(cli::run({"coeffs", "--ell", "2", "--dim", "3", "--kappa", "--format", "json", "--out",
                  out}) == 0);
  const auto parsed = nlohmann::json::parse(std::ifstream(out));
  CHECK(parsed["power_expansions"][0]["uniform_fp_coeff"].get<double>() ==
        doctest::Approx(1.0 / 3.0));
  CHECK(parsed["kappa"].size() == 35);
}

TEST_CASE("riesz subcommand") {
  TempDir tmp;
  save_configuration_file(octahedron(), tmp.file("oct.txt"));
  const std::string out = tmp.file("riesz.csv");
  CHECK(cli::run({"riesz", "--input", tmp.file("oct.txt"), "--delta", "0.1", "--out", out}) == 0);
  const auto rows = read_csv(out);
  double energy = 0.0, regularized = 0.0, calibrated = 0.0;
  for (const auto& row : rows) {
    if (row[0] == "energy") energy = std::stod(row[1]);
    if (row[0] == "regularized_energy") regularized = std::stod(row[1]);
    if (row[0] == "calibrated_bound") calibrated = std::stod(row[1]);
  }
  CHECK(energy == doctest::Approx(12.0 / std::sqrt(2.0) + 1.5).epsilon(1e-12));
  CHECK(energy > regularized);
  CHECK(regularized > calibrated);
}

TEST_CASE("minimize and ensemble round trip") {
  TempDir tmp;
  const std::string min_out = tmp.file("min4.txt");
  CHECK(cli::run({"minimize", "--n", "4", "--seed", "9", "--out", min_out}) == 0);
  const Configuration minimized = load_configuration_file(min_out);
  CHECK(minimized.size() == 4);

  const std::string ledger = tmp.file("ens.csv");
  CHECK(cli::run({"ensemble", "--input", min_out, "--count", "3", "--sigma", "0.01", "--seed",
                  "4", "--analyze", "--out", ledger}) == 0);
  const auto rows = read_csv(ledger);
  REQUIRE(rows.size() == 4);
  // sorted ascending by energy
  CHECK(std::stod(rows[1][1]) <= std::stod(rows[2][1]));
  CHECK(std::stod(rows[2][1]) <= std::stod(rows[3][1]));

  CHECK(fs::exists(tmp.file("ens_analysis.csv")));
  CHECK(fs::exists(tmp.file("ens_configs/member_0000.txt")));
  const auto analysis = read_csv(tmp.file("ens_analysis.csv"));
  REQUIRE(analysis.size() == 4);
  // residual columns stay nonnegative
  const auto& header = analysis[0];
  for (std::size_t col = 0; col < header.size(); ++col) {
    if (header[col].rfind("residual_", 0) != 0) continue;
    for (std::size_t r = 1; r < analysis.size(); ++r)
      CHECK(std::stod(analysis[r][col]) >= -1e-9);
  }
}

TEST_CASE("voronoi subcommand exports json") {
  TempDir tmp;
  save_configuration_file(icosahedron(), tmp.file("ico.txt"));
  const std::string out = tmp.file("voro.json");
  CHECK(cli::run({"voronoi", "--input", tmp.file("ico.txt"), "--out", out}) == 0);
  const auto parsed = nlohmann::json::parse(std::ifstream(out));
  CHECK(parsed["total_charge"] == 12);
  CHECK(parsed["cells"].size() == 12);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  CHECK(cli::run({"no-such-command"}) == 2);
  CHECK(cli::run({"fp"}) == 2);  // missing --input
  CHECK(cli::run({"fp", "--input", tmp.file("missing.txt")}) == 2);

  // degenerate voronoi input: cube has cocircular quadruples
  save_configuration_file(cube(), tmp.file("cube.txt"));
  CHECK(cli::run({"voronoi", "--input", tmp.file("cube.txt")}) == 3);

  // malformed point file
  std::ofstream bad(tmp.file("bad.txt"));
  bad << "1 0 0\n0 0 0\n";
  bad.close();
  CHECK(cli::run({"fp", "--input", tmp.file("bad.txt")}) == 2);
}

}  // TEST_SUITE
