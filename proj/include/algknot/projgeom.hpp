#pragma once

#include <array>
#include <string>

#include "algknot/rat.hpp"

namespace algknot {

// Exact projective geometry in RP^2 / RP^3. All representatives are
// canonicalized so the first nonzero coordinate equals 1; equality tests are
// exact, never epsilon-based.

struct ProjPoint3 {
    std::array<Rat, 4> x{};

    ProjPoint3() = default;
    ProjPoint3(Rat a, Rat b, Rat c, Rat d);
    void canonicalize();
    bool is_zero() const;
    friend bool operator==(const ProjPoint3& a, const ProjPoint3& b) { return a.x == b.x; }
    std::string to_string() const;
};

// Plane covector: { y : a0 y0 + a1 y1 + a2 y2 + a3 y3 = 0 }
struct PlaneP3 {
    std::array<Rat, 4> a{};

    PlaneP3() = default;
    PlaneP3(Rat a0, Rat a1, Rat a2, Rat a3);
    void canonicalize();
    bool is_zero() const;
    Rat eval(const ProjPoint3& p) const;
    friend bool operator==(const PlaneP3& u, const PlaneP3& v) { return u.a == v.a; }
};

// Pluecker coordinates ordered (p01, p02, p03, p12, p13, p23).
struct ProjLine3 {
    std::array<Rat, 6> pl{};

    void canonicalize();
    bool is_zero() const;
    // p01 p23 - p02 p13 + p03 p12, identically zero for honest lines
    Rat quadric_residual() const;
    friend bool operator==(const ProjLine3& a, const ProjLine3& b) { return a.pl == b.pl; }
    std::string to_string() const;
};

struct ProjPoint2 {
    std::array<Rat, 3> x{};

    ProjPoint2() = default;
    ProjPoint2(Rat a, Rat b, Rat c);
    void canonicalize();
    bool is_zero() const;
    friend bool operator==(const ProjPoint2& a, const ProjPoint2& b) { return a.x == b.x; }
    std::string to_string() const;
};

struct ProjLine2 {
    std::array<Rat, 3> a{};

    ProjLine2() = default;
    ProjLine2(Rat a0, Rat a1, Rat a2);
    void canonicalize();
    bool is_zero() const;
    Rat eval(const ProjPoint2& p) const;
};

// Affine chart of RP^3: row 0 is the plane at infinity, rows 1..3 the affine
// coordinate forms. orientation() = sign of det(rows), +1 for positively
// oriented charts.
struct AffineChart3 {
    std::array<std::array<Rat, 4>, 4> m{};

    static AffineChart3 standard();
    // complete the given infinity plane to a positively oriented chart
    static AffineChart3 from_infinity_plane(const PlaneP3& h);

    PlaneP3 infinity_plane() const;
    int orientation() const;
    Rat det() const;
};

// --- operations -------------------------------------------------------------

ProjLine3 join(const ProjPoint3& p, const ProjPoint3& q);          // DegeneratePosition if p == q
PlaneP3 plane_through(const ProjLine3& l, const ProjPoint3& p);    // DegeneratePosition if p on l
ProjPoint3 meet(const ProjLine3& l, const PlaneP3& h);             // DegeneratePosition if l in h
PlaneP3 plane_through_points(const ProjPoint3& a, const ProjPoint3& b, const ProjPoint3& c);
ProjLine3 line_from_planes(const PlaneP3& a, const PlaneP3& b);

// two distinct points spanning the line, deterministic
std::pair<ProjPoint3, ProjPoint3> line_span(const ProjLine3& l);

bool point_on_line(const ProjPoint3& p, const ProjLine3& l);
bool line_in_plane(const ProjLine3& l, const PlaneP3& h);

// Pluecker pairing; zero iff the lines meet (or coincide).
Rat line_pairing(const ProjLine3& a, const ProjLine3& b);

ProjLine2 join2(const ProjPoint2& p, const ProjPoint2& q);
ProjPoint2 meet2(const ProjLine2& a, const ProjLine2& b);

// Three independent linear forms vanishing at p, as the rows of a 3x4 matrix;
// the projection away from p is x -> (r0 x : r1 x : r2 x). The rows are chosen
// by a fixed pivot rule so results are reproducible.
std::array<std::array<Rat, 4>, 3> projection_map(const ProjPoint3& p);

ProjPoint2 apply_projection(const std::array<std::array<Rat, 4>, 3>& m, const ProjPoint3& p);

// The fiber line of the projection from `center` over image point q.
ProjLine3 fiber_line(const ProjPoint3& center, const std::array<std::array<Rat, 4>, 3>& m,
                     const ProjPoint2& q);

Rat det4(const std::array<std::array<Rat, 4>, 4>& m);
Rat det3(const std::array<std::array<Rat, 3>, 3>& m);

}  // namespace algknot
