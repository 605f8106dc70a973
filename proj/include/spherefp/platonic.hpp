#pragma once

#include "spherefp/config.hpp"

namespace spherefp {

Configuration tetrahedron();
Configuration cube();
Configuration octahedron();
Configuration icosahedron();

}  // namespace spherefp
