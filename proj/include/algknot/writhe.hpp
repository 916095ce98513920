#pragma once

#include <cstdint>

#include "algknot/projection.hpp"

namespace algknot {

inline int max_writhe(int d) { return (d - 1) * (d - 2) / 2; }

struct WritheReport {
    int w = 0;
    int crossing_contribution = 0;
    int solitary_contribution = 0;
    ProjPoint3 center;  // the (possibly perturbed) center actually used
    int census_crossings = 0;
    int census_solitary = 0;
    int census_imaginary = 0;
    int attempts = 1;
    int degree = 0;

    bool maximal() const { return w == max_writhe(degree); }
    bool maximal_up_to_mirror() const { return w == max_writhe(degree) || -w == max_writhe(degree); }
};

// Sum of crossing signs plus solitary signs of the projection from p;
// retries with dyadic perturbations of p while the projection is non-generic.
WritheReport encomplexed_writhe(const SpaceCurve& K, const ProjPoint3& p, int retry_budget = 64);

struct IndexValue {
    ProjPoint2 x;
    Rat i;  // half-integer: 2*i is an integer
};

// Index of a point off the real image curve: half the winding of the lifted
// curve around a lift of x on the orientation double cover. Throws
// PointOnCurve when x lies on the real point set of C_p.
IndexValue index_i(const PlaneProjection& P, const ProjPoint2& x);

struct Eq2Breakdown {
    bool holds = false;
    int w = 0;
    Rat i_sum;              // i(q') + i(q'') after orientation normalization
    int orientation_sign = 1;
    int sigma_sum = 0;
    ProjPoint2 q1, q2;
    Rat i_q1, i_q2;         // normalized
    ProjPoint3 off_center;  // independent generic center used for w
    int scale_exponent = 0; // offsets used 2^-k
};

// Verifies w(K) = i(q') + i(q'') + sum of singular contributions for the
// projection from the on-curve point gamma(t); w is computed independently
// from a generic off-curve center.
Eq2Breakdown eq2_check(const SpaceCurve& K, const RP1Param& on_curve_param,
                       std::uint64_t seed = 0);

// deterministic generic-center supply shared by several modules
ProjPoint3 random_center(const SpaceCurve& K, std::uint64_t seed, int attempt);

}  // namespace algknot
