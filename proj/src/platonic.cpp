#include "spherefp/platonic.hpp"

#include <cmath>

namespace spherefp {

Configuration tetrahedron() {
  Eigen::MatrixXd p(4, 3);
  p << 1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1, 1;
  return Configuration(std::move(p));
}

Configuration cube() {
  Eigen::MatrixXd p(8, 3);
  int r = 0;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) p.row(r++) << sx, sy, sz;
  return Configuration(std::move(p));
}

Configuration octahedron() {
  Eigen::MatrixXd p(6, 3);
  p << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
  return Configuration(std::move(p));
}

Configuration icosahedron() {
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  Eigen::MatrixXd p(12, 3);
  int r = 0;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      p.row(r++) << 0, s1, s2 * g;
      p.row(r++) << s1, s2 * g, 0;
      p.row(r++) << s2 * g, 0, s1;
    }
  return Configuration(std::move(p));
}

}  // namespace spherefp
