// Parsers for the CLI's Young-function and mesh spec strings:
//   "power:p=2", "powerlog:p=2,kappa=1", "exp",
//   "scale:lambda=2,inner=power:p=2" (inner= must come last),
//   "circle:n=12", "torus:m=8", "sphere:oct", "sphere:icosa",
//   "ball2:h=0.2", "interval:n=8", or a path to a mesh JSON file.

#pragma once

#include <string>

#include "orliczlab/mesh.hpp"
#include "orliczlab/young.hpp"

namespace orliczlab {

/// Throws std::invalid_argument with a usage message for unknown specs.
YoungFunction parse_young_spec(const std::string& spec);

Mesh parse_mesh_spec(const std::string& spec);

/// Comma-separated doubles.
Eigen::VectorXd parse_csv_values(const std::string& text);

}  // namespace orliczlab
