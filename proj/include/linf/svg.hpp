#pragma once

#include "linf/plane.hpp"

#include <string>

namespace linf {

/// Draws a section polygon in an orthonormal (Euclidean) frame of its
/// plane, with vertex labels and d-infinity edge lengths. Display only:
/// coordinates are rounded to 6 decimals and nothing is fed back into the
/// exact computations. Output is byte-for-byte deterministic.
std::string render_section_svg(const Plane& plane, const SectionPolygon& polygon);

}  // namespace linf
