#include "spherefp/voronoi.hpp"

#include <json.hpp>

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "spherefp/errors.hpp"

namespace spherefp::voronoi {

namespace {

// Signed volume test: positive when p is on the outer side of the CCW
// triangle (a, b, c). Re-evaluated in extended precision near zero; the
// double path is exact enough away from it.
double orient(const Eigen::MatrixXd& pts, int a, int b, int c, int p) {
  const Eigen::Vector3d va = pts.row(a), vb = pts.row(b), vc = pts.row(c), vp = pts.row(p);
  const double det = (vb - va).cross(vc - va).dot(vp - va);
  if (std::abs(det) > 1e-10) return det;

  long double m[3][3];
  for (int k = 0; k < 3; ++k) {
    m[0][k] = static_cast<long double>(pts(b, k)) - static_cast<long double>(pts(a, k));
    m[1][k] = static_cast<long double>(pts(c, k)) - static_cast<long double>(pts(a, k));
    m[2][k] = static_cast<long double>(pts(p, k)) - static_cast<long double>(pts(a, k));
  }
  const long double d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return static_cast<double>(d);
}

std::string point_list(std::initializer_list<int> ids) {
  std::string s;
  for (int id : ids) {
    if (!s.empty()) s += ", ";
    s += std::to_string(id);
  }
  return s;
}

}  // namespace

std::vector<HullFace> convex_hull(const Eigen::MatrixXd& pts, double tol) {
  const int n = static_cast<int>(pts.rows());
  if (n < 4) throw std::invalid_argument("convex_hull: need at least 4 points");

  // Initial tetrahedron: spread out the first four affinely independent points.
  int i1 = -1;
  double best = -1.0;
  for (int i = 1; i < n; ++i) {
    const double d = (pts.row(i) - pts.row(0)).squaredNorm();
    if (d > best) best = d, i1 = i;
  }
  if (best <= tol) throw DegeneracyError("convex_hull: all points coincide");

  int i2 = -1;
  best = -1.0;
  for (int i = 1; i < n; ++i) {
    if (i == i1) continue;
    const Eigen::Vector3d u = pts.row(i1) - pts.row(0);
    const Eigen::Vector3d v = pts.row(i) - pts.row(0);
    const double a = u.cross(v).squaredNorm();
    if (a > best) best = a, i2 = i;
  }
  if (i2 < 0 || best <= tol * tol) throw DegeneracyError("convex_hull: points are collinear");

  int i3 = -1;
  best = 0.0;
  for (int i = 1; i < n; ++i) {
    if (i == i1 || i == i2) continue;
    const double o = std::abs(orient(pts, 0, i1, i2, i));
    if (o > best) best = o, i3 = i;
  }
  if (i3 < 0 || best <= tol) throw DegeneracyError("convex_hull: points are coplanar");

  int t0 = 0, t1 = i1, t2 = i2, t3 = i3;
  if (orient(pts, t0, t1, t2, t3) < 0) std::swap(t1, t2);

  struct Face {
    int a, b, c;
    bool alive = true;
  };
  std::vector<Face> faces = {{t0, t2, t1}, {t0, t1, t3}, {t1, t2, t3}, {t2, t0, t3}};

  std::vector<bool> inserted(static_cast<std::size_t>(n), false);
  inserted[static_cast<std::size_t>(t0)] = inserted[static_cast<std::size_t>(t1)] = true;
  inserted[static_cast<std::size_t>(t2)] = inserted[static_cast<std::size_t>(t3)] = true;

  for (int p = 0; p < n; ++p) {
    if (inserted[static_cast<std::size_t>(p)]) continue;
    inserted[static_cast<std::size_t>(p)] = true;

    std::vector<char> visible(faces.size(), 0);
    double max_orient = -std::numeric_limits<double>::infinity();
    bool any_visible = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].alive) continue;
      const double o = orient(pts, faces[f].a, faces[f].b, faces[f].c, p);
      max_orient = std::max(max_orient, o);
      if (o > tol) {
        visible[f] = 1;
        any_visible = true;
      }
    }
    if (!any_visible) {
      if (max_orient > -tol)
        throw DegeneracyError(
            "convex_hull: point " + std::to_string(p) +
            " is cocircular with a hull face (four points on a common circle)");
      throw DegeneracyError("convex_hull: point " + std::to_string(p) +
                            " lies inside the hull (duplicate point?)");
    }

    // Directed edge -> alive face owning it.
    std::map<std::pair<int, int>, std::size_t> edge_face;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].alive) continue;
      edge_face[{faces[f].a, faces[f].b}] = f;
      edge_face[{faces[f].b, faces[f].c}] = f;
      edge_face[{faces[f].c, faces[f].a}] = f;
    }

    std::vector<std::pair<int, int>> horizon;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].alive || !visible[f]) continue;
      const int vv[3] = {faces[f].a, faces[f].b, faces[f].c};
      for (int e = 0; e < 3; ++e) {
        const int u = vv[e], w = vv[(e + 1) % 3];
        const auto it = edge_face.find({w, u});
        if (it == edge_face.end())
          throw NumericalError("convex_hull: broken face adjacency");
        if (!visible[it->second]) horizon.emplace_back(u, w);
      }
    }
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (visible[f]) faces[f].alive = false;
    for (const auto& [u, w] : horizon) faces.push_back(Face{u, w, p});
  }

  std::vector<HullFace> out;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& f : faces) {
    if (!f.alive) continue;
    out.push_back(HullFace{f.a, f.b, f.c});
    used[static_cast<std::size_t>(f.a)] = used[static_cast<std::size_t>(f.b)] =
        used[static_cast<std::size_t>(f.c)] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!used[static_cast<std::size_t>(i)])
      throw DegeneracyError("convex_hull: point " + std::to_string(i) +
                            " is not a hull vertex (degenerate configuration)");
  return out;
}

namespace {

double signed_solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                          const Eigen::Vector3d& c) {
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

int VoronoiDiagram::total_charge() const {
  int q = 0;
  for (const auto& c : cells_) q += c.charge;
  return q;
}

double VoronoiDiagram::total_area() const {
  double a = 0.0;
  for (const auto& c : cells_) a += c.area;
  return a;
}

VoronoiDiagram spherical_voronoi(const Configuration& config, const VoronoiOptions& opts) {
  if (config.dim() != 3)
    throw std::invalid_argument("spherical_voronoi: only d = 3 is supported");
  if (config.size() < 4)
    throw std::invalid_argument("spherical_voronoi: need at least 4 points");

  const Eigen::MatrixXd& pts = config.points();
  const auto faces = convex_hull(pts, opts.degeneracy_tol);

  // The radial projection of the hull onto the sphere is the Delaunay
  // triangulation only when the origin is interior.
  std::vector<Eigen::Vector3d> centers(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Eigen::Vector3d a = pts.row(faces[f].a), b = pts.row(faces[f].b),
                          c = pts.row(faces[f].c);
    Eigen::Vector3d nrm = (b - a).cross(c - a);
    const double len = nrm.norm();
    if (len <= opts.degeneracy_tol)
      throw DegeneracyError("spherical_voronoi: degenerate hull face (" +
                            point_list({faces[f].a, faces[f].b, faces[f].c}) + ")");
    nrm /= len;
    if (nrm.dot(a) <= opts.degeneracy_tol)
      throw DegeneracyError(
          "spherical_voronoi: points do not enclose the origin; the hull dual is not the "
          "spherical Delaunay triangulation");
    centers[f] = nrm;
  }

  // Directed edge -> face, for walking the fan around each generator.
  std::map<std::pair<int, int>, std::size_t> edge_face;
  std::vector<std::size_t> seed_face(static_cast<std::size_t>(config.size()),
                                     std::numeric_limits<std::size_t>::max());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const int vv[3] = {faces[f].a, faces[f].b, faces[f].c};
    for (int e = 0; e < 3; ++e) {
      edge_face[{vv[e], vv[(e + 1) % 3]}] = f;
      seed_face[static_cast<std::size_t>(vv[e])] = f;
    }
  }

  const auto energies = cell_energies(config);

  std::vector<VoronoiCell> cells(static_cast<std::size_t>(config.size()));
  for (int i = 0; i < config.size(); ++i) {
    VoronoiCell& cell = cells[static_cast<std::size_t>(i)];
    const std::size_t f0 = seed_face[static_cast<std::size_t>(i)];
    if (f0 == std::numeric_limits<std::size_t>::max())
      throw DegeneracyError("spherical_voronoi: generator " + std::to_string(i) +
                            " has no incident Delaunay triangle");

    std::size_t f = f0;
    do {
      cell.vertices.push_back(centers[f]);
      // Rotate the face so the generator comes first; step across (i, v).
      int u, v;
      if (faces[f].a == i) {
        u = faces[f].b;
        v = faces[f].c;
      } else if (faces[f].b == i) {
        u = faces[f].c;
        v = faces[f].a;
      } else {
        u = faces[f].a;
        v = faces[f].b;
      }
      (void)u;
      const auto it = edge_face.find({i, v});
      if (it == edge_face.end())
        throw NumericalError("spherical_voronoi: broken Delaunay adjacency");
      f = it->second;
      if (cell.vertices.size() > faces.size())
        throw NumericalError("spherical_voronoi: cell walk did not close");
    } while (f != f0);

    // Coincident consecutive circumcenters mean four cocircular generators.
    for (std::size_t k = 0; k < cell.vertices.size(); ++k) {
      const auto& p = cell.vertices[k];
      const auto& q = cell.vertices[(k + 1) % cell.vertices.size()];
      if ((p - q).norm() <= opts.degeneracy_tol)
        throw DegeneracyError("spherical_voronoi: coincident Voronoi vertices around generator " +
                              std::to_string(i) + " (cocircular points)");
    }

    cell.sides = static_cast<int>(cell.vertices.size());
    cell.charge = 6 - cell.sides;

    double area = 0.0;
    for (std::size_t k = 1; k + 1 < cell.vertices.size(); ++k)
      area += signed_solid_angle(cell.vertices[0], cell.vertices[k], cell.vertices[k + 1]);
    cell.area = area;

    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (const auto& v : cell.vertices) centroid += v;
    centroid /= static_cast<double>(cell.vertices.size());
    const double clen = centroid.norm();
    if (clen <= opts.degeneracy_tol)
      throw DegeneracyError("spherical_voronoi: vanishing cell centroid at generator " +
                            std::to_string(i));
    cell.radial_gap = 1.0 - clen;
    const Eigen::Vector3d gen = pts.row(i);
    cell.strain_vector = opts.project_centroid ? (gen - centroid / clen).eval()
                                               : (gen - centroid).eval();
    cell.strain = cell.strain_vector.norm();
    cell.energy = energies[static_cast<std::size_t>(i)];
  }

  return VoronoiDiagram(config, std::move(cells));
}

std::vector<double> cell_energies(const Configuration& config) {
  const Eigen::MatrixXd g = config.gram();
  const int n = config.size();
  std::vector<double> u(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r2 = 2.0 * (1.0 - g(i, j));
      if (r2 <= 0.0)
        throw NumericalError("cell_energies: coincident points " + std::to_string(i) + " and " +
                             std::to_string(j));
      const double half = 0.5 / std::sqrt(r2);
      u[static_cast<std::size_t>(i)] += half;
      u[static_cast<std::size_t>(j)] += half;
    }
  }
  return u;
}

Weights defect_weights(const VoronoiDiagram& diagram) {
  Eigen::VectorXd f(diagram.size());
  for (int i = 0; i < diagram.size(); ++i) f(i) = diagram.cell(i).sides == 6 ? 0.0 : 1.0;
  return Weights::scalar(std::move(f));
}

Weights strain_scalar_weights(const VoronoiDiagram& diagram) {
  Eigen::VectorXd f(diagram.size());
  for (int i = 0; i < diagram.size(); ++i) f(i) = diagram.cell(i).strain;
  return Weights::scalar(std::move(f));
}

Weights strain_vector_weights(const VoronoiDiagram& diagram) {
  Eigen::MatrixXd f(diagram.size(), 3);
  for (int i = 0; i < diagram.size(); ++i) f.row(i) = diagram.cell(i).strain_vector;
  return Weights::vector(std::move(f));
}

Weights energy_weights(const VoronoiDiagram& diagram) {
  Eigen::VectorXd f(diagram.size());
  for (int i = 0; i < diagram.size(); ++i) f(i) = diagram.cell(i).energy;
  return Weights::scalar(std::move(f));
}

std::string to_json(const VoronoiDiagram& diagram) {
  nlohmann::json root;
  root["n"] = diagram.size();
  root["total_charge"] = diagram.total_charge();
  root["total_area"] = diagram.total_area();
  auto& cells = root["cells"] = nlohmann::json::array();
  for (int i = 0; i < diagram.size(); ++i) {
    const auto& c = diagram.cell(i);
    nlohmann::json jc;
    jc["generator"] = {diagram.generators().points()(i, 0), diagram.generators().points()(i, 1),
                       diagram.generators().points()(i, 2)};
    auto& verts = jc["vertices"] = nlohmann::json::array();
    for (const auto& v : c.vertices) verts.push_back({v.x(), v.y(), v.z()});
    jc["sides"] = c.sides;
    jc["charge"] = c.charge;
    jc["strain"] = c.strain;
    jc["strain_vector"] = {c.strain_vector.x(), c.strain_vector.y(), c.strain_vector.z()};
    jc["radial_gap"] = c.radial_gap;
    jc["area"] = c.area;
    jc["energy"] = c.energy;
    cells.push_back(std::move(jc));
  }
  return root.dump(2);
}

}  // namespace spherefp::voronoi
