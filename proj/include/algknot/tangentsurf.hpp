#pragma once

#include <cstdint>
#include <optional>

#include "algknot/hyperbolicity.hpp"

namespace algknot {

struct TangentFamily {
    std::vector<RP1Param> params;
    std::vector<ProjLine3> lines;
};

// tangent lines at n parameters spread over the whole parameter circle
// (t = infinity included)
TangentFamily sample_tangents(const SpaceCurve& K, int n);

struct DisjointnessReport {
    bool disjoint = true;
    int pairs_checked = 0;
    std::optional<std::pair<RP1Param, RP1Param>> first_violation;
};

// exact pairwise Pluecker meet test over all sampled tangent pairs
DisjointnessReport check_tangent_disjointness(const SpaceCurve& K, int n);

enum class RegionLabel { U1, U2, OnTangentSurface };

struct ViewpointClass {
    RegionLabel label;
    int crossings = 0;
    int solitaries = 0;
    int imaginary = 0;
    bool used_hyp_refinement = false;
};

// Census classification of a viewpoint for a maximally writhed curve: U1
// centers see only real-branch crossings, U2 centers exactly one solitary
// node, tangent-surface points a cuspidal projection. With refine_with_hyp
// the hyperbolicity raster is computed as consistency data for the solitary
// branch (a solitary census with an interior region is flagged ambiguous).
ViewpointClass classify_viewpoint(const SpaceCurve& K, const ProjPoint3& p,
                                  bool refine_with_hyp = true, int raster_resolution = 64);

struct WindingClasses {
    int a = 0;  // real intersections of a generic plane through L1
    int b = 0;  // same through L2
    PlaneP3 plane1, plane2;
};

// Transversal real-intersection counts of plane pencils through the two
// hyperbolic lines; (d, d-2) for maximally writhed curves.
WindingClasses winding_classes(const SpaceCurve& K, const ProjLine3& L1, const ProjLine3& L2);

}  // namespace algknot
