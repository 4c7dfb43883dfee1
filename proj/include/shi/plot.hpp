#pragma once

// SVG pictures of the planar Shi arrangements: shi-a and shi-c at n = 2 drawn
// in the (x1, x2) plane, shi-a at n = 3 drawn in the plane x1 + x2 + x3 = 0.

#include <string>

#include "shi/geometry.hpp"

namespace shi {

bool plot_supported(ArrangementFamily family, int n);

/// Hyperplanes as lines, regions as shaded cells labeled by partition and
/// sequence. Throws ValidationError for unsupported (family, n).
std::string plot_svg(ArrangementFamily family, int n);

}  // namespace shi
