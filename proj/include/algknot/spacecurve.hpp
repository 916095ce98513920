#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "algknot/algebraic.hpp"
#include "algknot/poly.hpp"
#include "algknot/projgeom.hpp"

namespace algknot {

// A point of the parameter circle: finite rational t or the point at infinity.
struct RP1Param {
    bool at_infinity = false;
    Rat t;

    static RP1Param infinity() { return RP1Param{true, Rat(0)}; }
    static RP1Param finite(const Rat& v) { return RP1Param{false, v}; }
    std::string to_string() const { return at_infinity ? "inf" : t.to_string(); }
};

// Rational space curve of degree d given by four coordinate polynomials.
// Invariants: gcd(y0..y3) = 1 (no base points) and max degree equals d, so
// the map extends to t = infinity with the leading coefficient vector.
class SpaceCurve {
  public:
    SpaceCurve(std::array<UniPoly, 4> coords);

    int degree() const { return d_; }
    const std::array<UniPoly, 4>& coords() const { return y_; }
    const UniPoly& coord(int i) const { return y_[static_cast<size_t>(i)]; }

    ProjPoint3 eval(const Rat& t) const;
    ProjPoint3 eval_infinity() const;
    ProjPoint3 eval_param(const RP1Param& p) const;

    std::array<UniPoly, 4> derivative() const;
    // the parameter flip s = 1/t: coordinates s^d y(1/s)
    SpaceCurve flipped() const;
    // parameter change t -> (a t + b) / (c t + d), ad - bc != 0: the same
    // curve traced along a different RP^1 coordinate
    SpaceCurve moebius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

    // exact rational/infinite parameter of p when one exists
    std::optional<RP1Param> parameter_of(const ProjPoint3& p) const;
    // p lies on the complex curve (real points of smooth curves always have
    // real parameters; singular curves may not)
    bool contains(const ProjPoint3& p) const;

    std::string to_string() const;

  private:
    std::array<UniPoly, 4> y_;
    int d_;
};

struct SmoothnessCertificate {
    bool immersed = false;
    bool injective = false;
    // auxiliary projection center used by the injectivity elimination
    ProjPoint3 witness_center;
    // the elimination polynomial whose roots were all excluded (or 1)
    UniPoly exclusion_poly;
    bool ok() const { return immersed && injective; }
};

struct TorsionProfile {
    // torsion-sign numerator in the given chart and in the flipped parameter
    UniPoly numerator;       // det[h.gamma, ...]'s 4x4 derivative matrix, chart rows applied
    UniPoly numerator_flip;  // same for the parameter chart s = 1/t
    struct SignInterval {
        // open parameter interval (lo, hi) with constant sign; the whole-line
        // interval uses the flags below
        bool lo_unbounded = false, hi_unbounded = false;
        Rat lo, hi;
        int sign = 0;
    };
    std::vector<SignInterval> sign_intervals;  // over the finite chart, merged
    std::vector<RootInterval> zero_params;     // certified isolated zero-torsion parameters
    int sign_at_infinity = 0;                  // sign at the parameter t = infinity
    bool everywhere_positive = false;
};

// Exact smoothness certification: immersion via the coordinate Wronskians on
// both parameter charts, injectivity over C via elimination on the
// divided-difference system of an auxiliary generic projection.
// Throws NotImmersed / SelfIntersecting with parameter isolation attached.
SmoothnessCertificate check_smooth(const SpaceCurve& K);

// Tangent line at a parameter (Pluecker), including t = infinity.
ProjLine3 tangent_line(const SpaceCurve& K, const RP1Param& t);
ProjLine3 tangent_line(const SpaceCurve& K, const Rat& t);

// Exact sign profile of det(r', r'', r''') over the parameter circle in the
// given chart. Torsion positivity holds iff everywhere_positive.
TorsionProfile torsion_profile(const SpaceCurve& K, const AffineChart3& chart);

// the 4x4 determinant polynomial det[c, c', c'', c'''] for the chart-composed
// coordinates; exposed for tests
UniPoly torsion_numerator(const SpaceCurve& K, const AffineChart3& chart);

// mirror image: negate the last coordinate (an orientation-reversing change)
SpaceCurve mirror(const SpaceCurve& K);

}  // namespace algknot
