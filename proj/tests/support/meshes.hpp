#pragma once

#include <string>

#include "inspath/mesh.hpp"

namespace testsupport {

// 12-triangle unit cube, total surface area 6.
std::string unit_cube_stl_ascii();
std::string unit_cube_stl_binary();
std::string unit_cube_obj();

std::string single_triangle_stl();

// Subdivided icosahedron projected to the unit sphere: 20 * 4^levels faces.
inspath::Mesh icosphere(int levels);

}  // namespace testsupport
