#include "spherefp/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spherefp/specfun.hpp"

namespace spherefp::lattices {

namespace {

// Closed-ball membership with a relative slack that keeps symmetric lattice
// shells intact: distinct shell radii are separated by O(spacing), far above
// the slack.
bool inside(double dist2, double r) { return dist2 <= r * r * (1.0 + 1e-9); }

double int_pow(double x, int n) {
  double v = 1.0, b = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) v *= b;
    b *= b;
  }
  return v;
}

WindowSample finish(std::vector<Eigen::VectorXd> kept, int dim, double r,
                    const LatticeDescriptor& src, const Eigen::VectorXd& center) {
  WindowSample ws;
  ws.dim = dim;
  ws.radius = r;
  ws.source = src;
  ws.center = center;
  ws.points.resize(static_cast<Eigen::Index>(kept.size()), dim);
  for (std::size_t i = 0; i < kept.size(); ++i) ws.points.row(static_cast<Eigen::Index>(i)) = kept[i];
  return ws;
}

}  // namespace

WindowSample hexagonal_window(double r, double spacing, const Eigen::Vector2d& center) {
  if (!(r > 0.0) || !(spacing > 0.0))
    throw std::invalid_argument("hexagonal_window: need r > 0 and spacing > 0");
  const Eigen::Vector2d a1(spacing, 0.0);
  const Eigen::Vector2d a2(0.5 * spacing, 0.5 * std::sqrt(3.0) * spacing);
  // |i a1 + j a2| >= spacing * max(|i|, |j|) / sqrt(2); invert for the range.
  const double reach = r + center.norm();
  const int range = static_cast<int>(std::ceil(std::sqrt(2.0) * reach / spacing)) + 2;
  std::vector<Eigen::VectorXd> kept;
  for (int i = -range; i <= range; ++i) {
    for (int j = -range; j <= range; ++j) {
      const Eigen::Vector2d q = i * a1 + j * a2 - center;
      const double d2 = q.squaredNorm();
      if (!inside(d2, r)) continue;
      if (d2 <= 1e-18 * spacing * spacing) continue;  // center point discarded
      kept.push_back(q);
    }
  }
  return finish(std::move(kept), 2, r, LatticeDescriptor{LatticeType::Hexagonal, spacing}, center);
}

WindowSample cubic_window(double r, double spacing, const Eigen::Vector3d& center) {
  if (!(r > 0.0) || !(spacing > 0.0))
    throw std::invalid_argument("cubic_window: need r > 0 and spacing > 0");
  const double reach = r + center.norm();
  const int range = static_cast<int>(std::ceil(reach / spacing)) + 2;
  std::vector<Eigen::VectorXd> kept;
  for (int i = -range; i <= range; ++i) {
    for (int j = -range; j <= range; ++j) {
      for (int k = -range; k <= range; ++k) {
        const Eigen::Vector3d q = spacing * Eigen::Vector3d(i, j, k) - center;
        const double d2 = q.squaredNorm();
        if (!inside(d2, r)) continue;
        if (d2 <= 1e-18 * spacing * spacing) continue;
        kept.push_back(q);
      }
    }
  }
  return finish(std::move(kept), 3, r, LatticeDescriptor{LatticeType::Cubic, spacing}, center);
}

WindowSample lattice_window(const LatticeDescriptor& lattice, double r,
                            const Eigen::VectorXd& center) {
  if (lattice.type == LatticeType::Hexagonal) {
    if (center.size() != 2)
      throw std::invalid_argument("lattice_window: hexagonal lattice needs a 2D center");
    return hexagonal_window(r, lattice.spacing, Eigen::Vector2d(center));
  }
  if (center.size() != 3)
    throw std::invalid_argument("lattice_window: cubic lattice needs a 3D center");
  return cubic_window(r, lattice.spacing, Eigen::Vector3d(center));
}

double window_fp(const WindowSample& ws, double gamma, int l) {
  if (gamma < 0.0) throw std::invalid_argument("window_fp: gamma must be >= 0");
  if (l < 0) throw std::invalid_argument("window_fp: l must be >= 0");
  const int n = ws.size();
  Eigen::VectorXd w(n);
  Eigen::MatrixXd u = ws.points;
  for (int i = 0; i < n; ++i) {
    const double len = u.row(i).norm();
    if (!(len > 0.0)) throw std::invalid_argument("window_fp: zero-length point");
    w(i) = std::pow(len / ws.radius, gamma);
    u.row(i) /= len;
  }
  const Eigen::MatrixXd g = (u * u.transpose()).cwiseMax(-1.0).cwiseMin(1.0);
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sum += w(i) * w(j) * int_pow(g(i, j), l);
  return sum;
}

double window_delta(const WindowSample& ws, double gamma, int l) {
  const int n = ws.size();
  if (n == 0) throw std::invalid_argument("window_delta: empty window");
  double wsum = 0.0;
  for (int i = 0; i < n; ++i)
    wsum += std::pow(ws.points.row(i).norm() / ws.radius, gamma);
  const double coeff = specfun::uniform_fp_coeff(l, ws.dim);
  return (window_fp(ws, gamma, l) - coeff * wsum * wsum) / (static_cast<double>(n) * n);
}

ScanStats window_scan(const LatticeDescriptor& lattice, double r, double gamma, int l,
                      const std::vector<Eigen::VectorXd>& centers) {
  if (centers.empty()) throw std::invalid_argument("window_scan: need at least one center");
  ScanStats stats;
  stats.entries.resize(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    ScanEntry& e = stats.entries[i];
    e.center = centers[i];
    try {
      const WindowSample ws = lattice_window(lattice, r, centers[i]);
      e.delta = window_delta(ws, gamma, l);
      e.ok = true;
    } catch (const std::exception& ex) {
      e.ok = false;
      e.message = ex.what();
    }
  }

  double sum = 0.0, sum2 = 0.0;
  int count = 0;
  stats.min = std::numeric_limits<double>::infinity();
  stats.max = -std::numeric_limits<double>::infinity();
  for (const auto& e : stats.entries) {
    if (!e.ok) continue;
    ++count;
    sum += e.delta;
    sum2 += e.delta * e.delta;
    stats.min = std::min(stats.min, e.delta);
    stats.max = std::max(stats.max, e.delta);
  }
  if (count > 0) {
    stats.mean = sum / count;
    const double var = std::max(0.0, sum2 / count - stats.mean * stats.mean);
    stats.stddev = std::sqrt(var);
  } else {
    stats.min = stats.max = stats.mean = stats.stddev = 0.0;
  }
  return stats;
}

}  // namespace spherefp::lattices
