#pragma once

#include <string>

#include "nctoric/fan.hpp"
#include "nctoric/polytope.hpp"

namespace nctoric {

/// Static SVG renderings of 2D objects on a fixed 400x400 viewport. Floating
/// point is used for drawing only; the exact data is embedded as a comment.
/// Error WrongDimension unless the input is 2-dimensional.
std::string polytope_svg(const SimplePolytope& p);
std::string fan_svg(const Fan& f);

}  // namespace nctoric
