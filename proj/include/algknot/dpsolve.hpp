#pragma once

#include <vector>

#include "algknot/algebraic.hpp"
#include "algknot/bipoly.hpp"
#include "algknot/errors.hpp"

namespace algknot {

struct GenericityFlags {
    bool has_cusp = false;
    bool has_tangential_pair = false;
    bool has_triple_point = false;
    bool base_point_on_curve = false;
    bool elimination_collision = false;  // no shear separated the solutions

    bool clean() const {
        return !(has_cusp || has_tangential_pair || has_triple_point || base_point_on_curve ||
                 elimination_collision);
    }
    std::string describe() const;
};

// NonGenericProjection carrying the diagnosis.
struct NonGenericDetail : NonGenericProjection {
    GenericityFlags flags;
    NonGenericDetail(const std::string& w, GenericityFlags f)
        : NonGenericProjection(w), flags(f) {}
};

// Solved divided-difference system of a plane parametrization (X : Y : Z) of
// degree m, in the sheared coordinate x = e + lambda f with (e, f) = (s+t, st).
// Every complex double point corresponds to exactly one root of G; on roots
// of G the second symmetric coordinate is f = -v/u and e = x - lambda f.
struct DPSolution {
    Rat lambda;
    UniPoly G;         // squarefree, degree == expected
    UniPoly u, v;      // gcd(u, G) = 1
    UniPoly disc_num;  // Delta(x) = (x u + lambda v)^2 + 4 v u; sign(disc) = sign(Delta)
    UniPoly psi;       // squarefree parameter polynomial: roots = double point parameters
    int expected = 0;  // (m-1)(m-2)/2
    // distinct double points sharing a parameter (an ordinary multiple point
    // of the plane curve, e.g. projections of quadric curves from their own
    // points); only produced with allow_shared_params
    bool shared_parameters = false;

    std::vector<RealAlg> real_roots;  // ascending roots of G (the real double points)
    int complex_root_count = 0;       // deg G - #real: non-real double points

    // e and f of a root, as shrinking rational intervals
    void ef_intervals(RealAlg& x, Rat& elo, Rat& ehi, Rat& flo, Rat& fhi) const;

    // Res_x(factor, u z^2 - (x u + lambda v) z - v): the polynomial whose
    // roots are the parameters of the double points selected by `factor | G`
    UniPoly param_poly(const UniPoly& factor) const;
};

// Solve the system { dd(X,Y) = dd(X,Z) = dd(Y,Z) = 0 }. Throws
// NonGenericDetail when the structure is not that of a nodal curve with all
// double points visible in the affine parameter chart. With
// allow_shared_params, ordinary multiple points (distinct double points
// sharing parameters) are solved rather than refused.
DPSolution solve_dd_system(const UniPoly& X, const UniPoly& Y, const UniPoly& Z, int m,
                           bool allow_shared_params = false);

// interval evaluation helper: range of p over [lo, hi]
void interval_eval(const UniPoly& p, const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi);

}  // namespace algknot
