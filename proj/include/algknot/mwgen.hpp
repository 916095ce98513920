#pragma once

#include <cstdint>

#include "algknot/writhe.hpp"

namespace algknot {

// (1 : t : t^2 : t^3)
SpaceCurve twisted_cubic_curve();

// Degree-d rational curve on the quadric y0 y3 = y1 y2: coordinates
// (a c : a e : c : e) with a = t - a_root and c, e monic of degree d-1 with
// strictly interlacing roots. Such curves are candidates only: maximal writhe
// is always established a posteriori.
SpaceCurve quadric_specimen(int d, const Rat& a_root, const std::vector<Rat>& c_roots,
                            const std::vector<Rat>& e_roots);

struct MwReport {
    int degree = 0;
    bool smooth = false;
    bool torsion_definite = false;  // numerator has no real zero
    int torsion_sign = 0;           // constant sign when definite
    int w = 0;
    int centers_checked = 0;
    bool writhe_constant = false;
    bool census_ok = false;  // every center matched the maximal-writhe census
    bool is_mw = false;             // |w| = N_d and all checks passed
    bool mirror_of_maximal = false; // w = -N_d

    bool mw_positive() const { return is_mw && !mirror_of_maximal; }
};

// Full verification: smoothness, torsion positivity, writhe constancy over
// many random centers, and the double-point census at every center.
MwReport verify_mw(const SpaceCurve& K, int centers = 20, std::uint64_t seed = 1);

// Search for a verified specimen with w = +N_d (candidates drawn from the
// quadric family; mirrored when the candidate lands on w = -N_d).
SpaceCurve mw_specimen(int d, std::uint64_t seed = 0, int budget = 64);

// The shipped corpus recipe for 3 <= d <= 6: the twisted cubic, or the
// quadric specimen with even roots against odd roots and a = t + 2. These are
// the curves whose stored verification reports live in corpus/.
SpaceCurve corpus_specimen(int d);

}  // namespace algknot
