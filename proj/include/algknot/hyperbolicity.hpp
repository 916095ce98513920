#pragma once

#include <cstdint>
#include <optional>

#include "algknot/projection.hpp"
#include "algknot/writhe.hpp"

namespace algknot {

struct HypCertificate {
    ProjPoint2 point;
    BinForm P, Q;  // pullbacks of two independent lines through the point
    bool verdict = false;
    // when false: a concrete bad pencil member P + lambda Q (or a generator)
    std::optional<Rat> violating_lambda;
    bool violating_generator_P = false;
    bool violating_generator_Q = false;
};

// Hyperbolicity of the plane curve with respect to q: every real line
// through q meets the curve in deg-many real points with multiplicity.
// Intersections at q itself (the pencil's base locus) count as real points
// whatever their parameters, so the shared factor of the two pullbacks is
// removed before the interlacing test.
HypCertificate is_hyperbolic_point(const PlaneProjection& P, const ProjPoint2& q);

struct LineHypResult {
    bool hyperbolic = false;
    ProjPoint3 via_point;  // the point of RL the test projected from
    HypCertificate cert;
};

// Hyperbolicity of the space curve with respect to a real line, decided by
// projecting from a rational point of the line.
LineHypResult is_hyperbolic_line(const SpaceCurve& K, const ProjLine3& L);

enum class HypRegionKind {
    Empty,         // no flagged cells and no solitary node to carry the region
    Concentrated,  // flagged cells confined to one small block or to the
                   // neighbourhood of a solitary node (possibly zero cells)
    Interior,      // a flagged cell with all four neighbours flagged
    Thin,          // flagged cells with neither interior nor concentration
};

struct HypRegion {
    int resolution = 0;
    // chart c covers { x_c = 1, |others| <= 1 }; row-major v * res + u
    std::array<std::vector<std::uint8_t>, 3> flags;
    HypRegionKind kind = HypRegionKind::Empty;
    int flagged_count = 0;
    int exact_fallbacks = 0;  // cells the interval filter could not decide
    int solitary_nodes = 0;

    bool flag(int chart, int u, int v) const {
        return flags[static_cast<size_t>(chart)][static_cast<size_t>(v * resolution + u)] != 0;
    }
};

// Rasterized hyperbolicity verdicts over the three standard charts of RP^2.
// Every cell verdict is exact (interval filter with exact fallback).
HypRegion hyp_region(const PlaneProjection& P, int resolution);

struct HypLinePair {
    ProjLine3 L1, L2;
    Rat l1_pencil_resultant;  // nonzero: certifies L1 meets the curve nowhere
    UniPoly l2_common;        // the negative-discriminant quadratic of the conj pair
    ProjPoint3 l1_via, l2_via;
    ProjPoint2 q1;            // interior hyperbolic point defining L1
};

// The two certified hyperbolic lines: L1 disjoint from K, L2 crossing K
// transversally at a conjugate pair. Requires a maximally writhed curve.
HypLinePair find_hyperbolic_lines(const SpaceCurve& K, std::uint64_t seed = 0, int budget = 64);

// exact single-point verdict shared with the raster
bool hyp_point_verdict(const PlaneProjection& P, const ProjPoint2& q);

// Three non-collinear exactly certified hyperbolic points; by convexity of
// the hyperbolicity region their triangle lies inside it, witnessing a
// nonempty interior even when the region is smaller than raster cells.
// Searches dyadic offsets around the crossing images.
std::optional<std::array<ProjPoint2, 3>> hyp_interior_witness(const PlaneProjection& P,
                                                              const DoublePointAnalysis& a);

}  // namespace algknot
