#pragma once

#include <string>

#include "algknot/hyperbolicity.hpp"
#include "algknot/knotdiag.hpp"

namespace algknot {

// Plane diagram of the projection: curve with under-strand gaps, crossing
// sign labels, solitary nodes marked. Deterministic output, no timestamps.
std::string svg_projection(const DoublePointAnalysis& a);

// Grayscale raster of the hyperbolicity region under the curve diagram
// (chart 0 of the raster).
std::string svg_hyp_overlay(const HypRegion& r, const PlaneProjection& P);

// Schematic picture of the lifted diagram: both sheets of the double cover
// drawn by orthographic projection of the sphere lift.
std::string svg_lifted(const ProjDiagram& d, const PlaneProjection& P);

}  // namespace algknot
