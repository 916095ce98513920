#pragma once

#include <optional>
#include <vector>

#include "algknot/dpsolve.hpp"
#include "algknot/projgeom.hpp"
#include "algknot/spacecurve.hpp"

namespace algknot {

// Plane projection C_p of a space curve from a real center. Degree drops by
// one when the center lies on the curve (the common parametrization factor is
// cancelled exactly, extending the map by continuity).
class PlaneProjection {
  public:
    static PlaneProjection project(const SpaceCurve& K, const ProjPoint3& p);

    const ProjPoint3& center() const { return center_; }
    const SpaceCurve& curve() const { return curve_; }
    int degree() const { return degree_; }
    bool center_on_curve() const { return center_on_curve_; }
    const std::array<UniPoly, 3>& coords() const { return xyz_; }
    const std::array<std::array<Rat, 4>, 3>& rows() const { return rows_; }

    ProjPoint2 image_at(const Rat& t) const;
    ProjPoint2 image_at_infinity() const;
    ProjPoint2 image_at(const RP1Param& t) const;

    // x lies on the real point set of C_p (including solitary nodes)
    bool image_contains(const ProjPoint2& x) const;

  private:
    PlaneProjection() = default;
    ProjPoint3 center_;
    SpaceCurve curve_{std::array<UniPoly, 4>{UniPoly::variable(), UniPoly::constant(Rat(1)),
                                             UniPoly(), UniPoly()}};
    std::array<std::array<Rat, 4>, 3> rows_{};
    std::array<UniPoly, 3> xyz_;
    int degree_ = 0;
    bool center_on_curve_ = false;
};

struct GenericityReport {
    bool has_cusp = false;
    bool has_tangential_pair = false;
    bool has_triple_point = false;
    bool base_point_on_curve = false;
    bool clean() const {
        return !(has_cusp || has_tangential_pair || has_triple_point || base_point_on_curve);
    }
};

struct DoublePoint {
    enum class Kind { crossing, solitary, imaginary_pair };
    Kind kind = Kind::imaginary_pair;
    int sign = 0;  // crossing/solitary: +-1; imaginary pairs contribute 0

    // real double points: the defining root of the eliminant and rational
    // enclosures of the symmetric coordinates e = s+t, f = st
    std::optional<RealAlg> x;
    Rat e_lo, e_hi, f_lo, f_hi;

    // crossings only: the two real parameters, under first
    std::optional<RealAlg> param_under, param_over;

    std::array<double, 3> image_approx{0, 0, 0};

    bool is_crossing() const { return kind == Kind::crossing; }
    bool is_solitary() const { return kind == Kind::solitary; }
};

struct DoublePointAnalysis {
    std::vector<DoublePoint> points;  // real points sorted by x; imaginary entries last
    GenericityReport report;
    DPSolution sys;
    AffineChart3 chart;   // the chart used for all sign computations
    PlaneP3 chart_plane;  // its infinity plane (contains the center)
    // the projection actually analyzed; a Moebius reparametrization of the
    // input when a double point sat at the infinite parameter. All parameter
    // data (sys, params) refers to this object.
    std::optional<PlaneProjection> proj;

    int crossing_count() const;
    int solitary_count() const;
    int imaginary_count() const;
    int sign_sum() const;
};

// Complete classification of the double points of C_p over the complex
// numbers, with crossing and solitary signs. Throws NonGenericDetail when the
// projection is not generic (cusp, tangency, triple point, elimination
// degeneracy); callers retry with a perturbed center. With
// allow_shared_parameters, ordinary multiple points are classified pairwise
// instead of refused (the report keeps has_triple_point set); projections of
// quadric curves from their own points need this.
DoublePointAnalysis double_points(const PlaneProjection& P, bool allow_shared_parameters = false);

// Standalone sign computations (recomputed from scratch; primarily for the
// chart-independence tests). `which` indexes analysis.points.
int crossing_sign(const PlaneProjection& P, const DoublePointAnalysis& a, size_t which);
int solitary_sign(const PlaneProjection& P, const DoublePointAnalysis& a, size_t which);

// Same computations against an explicitly chosen infinity plane through the
// center; throws ChartFailure if the plane meets the double point fibers.
int crossing_sign_in_chart(const PlaneProjection& P, const DPSolution& sys, RealAlg x,
                           const PlaneP3& h);
int solitary_sign_in_chart(const PlaneProjection& P, const DPSolution& sys, RealAlg x,
                           const PlaneP3& h);

}  // namespace algknot
