#include "spherefp/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "spherefp/errors.hpp"

namespace spherefp {

namespace {

// One RNG stream per sampling call; mt19937_64 keeps runs reproducible for a
// fixed seed.
std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double parse_field(const std::string& tok, int line_no) {
  double v = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("line " + std::to_string(line_no) + ": non-numeric field '" + tok + "'");
  if (!std::isfinite(v))
    throw ParseError("line " + std::to_string(line_no) + ": non-finite field '" + tok + "'");
  return v;
}

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Configuration::Configuration(Eigen::MatrixXd points) : points_(std::move(points)) {
  if (points_.rows() < 1) throw std::invalid_argument("Configuration: need at least one point");
  if (points_.cols() < 2) throw std::invalid_argument("Configuration: dimension must be >= 2");
  for (Eigen::Index i = 0; i < points_.rows(); ++i) {
    const double n = points_.row(i).norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::invalid_argument("Configuration: point " + std::to_string(i) +
                                  " has zero or non-finite norm");
    points_.row(i) /= n;
  }
}

Eigen::MatrixXd Configuration::gram() const {
  Eigen::MatrixXd g = points_ * points_.transpose();
  return g.cwiseMax(-1.0).cwiseMin(1.0);
}

Weights Weights::unit(int n) {
  Weights w;
  w.kind = Kind::Scalar;
  w.scalars = Eigen::VectorXd::Ones(n);
  return w;
}

Weights Weights::scalar(Eigen::VectorXd f) {
  Weights w;
  w.kind = Kind::Scalar;
  w.scalars = std::move(f);
  return w;
}

Weights Weights::vector(Eigen::MatrixXd f) {
  Weights w;
  w.kind = Kind::Vector;
  w.vectors = std::move(f);
  return w;
}

int Weights::size() const {
  return kind == Kind::Scalar ? static_cast<int>(scalars.size())
                              : static_cast<int>(vectors.rows());
}

double Weights::total() const {
  if (kind != Kind::Scalar) throw std::invalid_argument("Weights::total: scalar weights only");
  return scalars.sum();
}

double Weights::pair_total() const {
  if (kind == Kind::Scalar) {
    const double s = scalars.sum();
    return s * s;
  }
  return vectors.colwise().sum().squaredNorm();
}

Configuration sample_uniform(int n, int d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_uniform: n must be >= 1");
  if (d < 2) throw std::invalid_argument("sample_uniform: d must be >= 2");
  auto rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd pts(n, d);
  for (int i = 0; i < n; ++i) {
    double norm2 = 0.0;
    do {
      for (int j = 0; j < d; ++j) pts(i, j) = normal(rng);
      norm2 = pts.row(i).squaredNorm();
    } while (norm2 < 1e-300);
  }
  return Configuration(std::move(pts));
}

Configuration perturb(const Configuration& config, double sigma, std::uint64_t seed) {
  if (sigma < 0.0) throw std::invalid_argument("perturb: sigma must be >= 0");
  if (sigma == 0.0) return config;
  auto rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, sigma);
  Eigen::MatrixXd pts = config.points();
  for (Eigen::Index i = 0; i < pts.rows(); ++i)
    for (Eigen::Index j = 0; j < pts.cols(); ++j) pts(i, j) += normal(rng);
  return Configuration(std::move(pts));
}

Configuration load_configuration(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  int dim = -1;
  while (std::getline(stream, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto fields = split_fields(line);
    if (dim < 0) {
      dim = static_cast<int>(fields.size());
      if (dim < 2)
        throw ParseError("line " + std::to_string(line_no) +
                         ": points need at least 2 coordinates");
    } else if (static_cast<int>(fields.size()) != dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                       " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> row(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) row[j] = parse_field(fields[j], line_no);
    double norm2 = 0.0;
    for (double v : row) norm2 += v * v;
    const double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > 1e-6)
      throw ParseError("line " + std::to_string(line_no) + ": point norm " + std::to_string(norm) +
                       " deviates from 1 by more than 1e-6");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no data lines in configuration text");
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < dim; ++j) pts(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  return Configuration(std::move(pts));
}

std::string save_configuration(const Configuration& config) {
  std::string out;
  char buf[32];
  for (int i = 0; i < config.size(); ++i) {
    for (int j = 0; j < config.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", config.points()(i, j));
      if (j) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Configuration load_configuration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open configuration file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_configuration(ss.str());
}

void save_configuration_file(const Configuration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write configuration file: " + path);
  out << save_configuration(config);
}

Weights load_weights(std::string_view text, int expected_size) {
  std::istringstream stream{std::string(text)};
  std::string line;
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  int width = -1;
  while (std::getline(stream, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto fields = split_fields(line);
    if (width < 0) {
      width = static_cast<int>(fields.size());
      if (width < 1) throw ParseError("line " + std::to_string(line_no) + ": empty weight row");
    } else if (static_cast<int>(fields.size()) != width) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                       " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> row(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) row[j] = parse_field(fields[j], line_no);
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != expected_size)
    throw ParseError("weights count " + std::to_string(rows.size()) +
                     " does not match configuration size " + std::to_string(expected_size));
  if (width == 1) {
    Eigen::VectorXd f(expected_size);
    for (int i = 0; i < expected_size; ++i) f(i) = rows[static_cast<std::size_t>(i)][0];
    return Weights::scalar(std::move(f));
  }
  Eigen::MatrixXd f(expected_size, width);
  for (int i = 0; i < expected_size; ++i)
    for (int j = 0; j < width; ++j) f(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return Weights::vector(std::move(f));
}

Weights load_weights_file(const std::string& path, int expected_size) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weights file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_weights(ss.str(), expected_size);
}

}  // namespace spherefp
