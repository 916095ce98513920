#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algknot/errors.hpp"
#include "algknot/projgeom.hpp"
#include "algknot/rng.hpp"

using namespace algknot;

namespace {

ProjPoint3 pt(long a, long b, long c, long d) {
    return ProjPoint3(Rat(a), Rat(b), Rat(c), Rat(d));
}

ProjPoint3 random_point(Rng& rng) {
    while (true) {
        long a = rng.range(-9, 9), b = rng.range(-9, 9), c = rng.range(-9, 9),
             d = rng.range(-9, 9);
        if (a || b || c || d) return pt(a, b, c, d);
    }
}

}  // namespace

TEST_CASE("join of basis points has unit Pluecker vector") {
    ProjLine3 l = join(pt(1, 0, 0, 0), pt(0, 1, 0, 0));
    CHECK(l.pl[0] == Rat(1));
    for (int k = 1; k < 6; ++k) CHECK(l.pl[static_cast<size_t>(k)] == Rat(0));
}

TEST_CASE("meet of the z-axis with the plane y3 = 0") {
    ProjLine3 zaxis = join(pt(1, 0, 0, 0), pt(0, 0, 0, 1));
    ProjPoint3 m = meet(zaxis, PlaneP3(Rat(0), Rat(0), Rat(0), Rat(1)));
    CHECK(m == pt(1, 0, 0, 0));
}

TEST_CASE("join of coincident points is degenerate") {
    CHECK_THROWS_AS(join(pt(1, 1, 1, 1), pt(2, 2, 2, 2)), DegeneratePosition);
}

TEST_CASE("projection_map spec examples") {
    auto m1 = projection_map(pt(0, 0, 0, 1));
    CHECK(m1[0] == std::array<Rat, 4>{Rat(1), Rat(0), Rat(0), Rat(0)});
    CHECK(m1[1] == std::array<Rat, 4>{Rat(0), Rat(1), Rat(0), Rat(0)});
    CHECK(m1[2] == std::array<Rat, 4>{Rat(0), Rat(0), Rat(1), Rat(0)});
    auto m2 = projection_map(pt(1, 0, 0, 0));
    CHECK(m2[0] == std::array<Rat, 4>{Rat(0), Rat(1), Rat(0), Rat(0)});
    CHECK(m2[1] == std::array<Rat, 4>{Rat(0), Rat(0), Rat(1), Rat(0)});
    CHECK(m2[2] == std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("projection_map rows vanish at p and have rank 3") {
    Rng rng(23);
    for (int it = 0; it < 40; ++it) {
        ProjPoint3 p = random_point(rng);
        auto m = projection_map(p);
        for (const auto& row : m) {
            Rat s(0);
            for (int j = 0; j < 4; ++j) s += row[static_cast<size_t>(j)] * p.x[static_cast<size_t>(j)];
            CHECK(s == Rat(0));
        }
        // rank 3: rows plus p itself span, so the 4x4 with p appended is invertible
        std::array<std::array<Rat, 4>, 4> full{m[0], m[1], m[2], p.x};
        CHECK(det4(full) != Rat(0));
    }
}

TEST_CASE("pluecker quadric relation and incidence roundtrips") {
    Rng rng(29);
    for (int it = 0; it < 40; ++it) {
        ProjPoint3 a = random_point(rng), b = random_point(rng), c = random_point(rng);
        if (a == b) continue;
        ProjLine3 l = join(a, b);
        CHECK(l.quadric_residual() == Rat(0));
        CHECK(point_on_line(a, l));
        CHECK(point_on_line(b, l));
        auto [s0, s1] = line_span(l);
        CHECK(join(s0, s1) == l);
        if (!point_on_line(c, l)) {
            PlaneP3 h = plane_through(l, c);
            CHECK(h.eval(a) == Rat(0));
            CHECK(h.eval(b) == Rat(0));
            CHECK(h.eval(c) == Rat(0));
            CHECK(line_in_plane(l, h));
            ProjPoint3 d = random_point(rng);
            if (!point_on_line(d, l)) {
                PlaneP3 h2 = plane_through(l, d);
                if (!(h2 == h)) CHECK(line_from_planes(h, h2) == l);
            }
        }
    }
}

TEST_CASE("line pairing vanishes exactly for meeting lines") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        ProjPoint3 a = random_point(rng), b = random_point(rng), c = random_point(rng),
                   d = random_point(rng);
        if (a == b || c == d) continue;
        ProjLine3 l1 = join(a, b);
        // concurrent lines share the point a
        if (!(a == c)) {
            ProjLine3 l2 = join(a, c);
            CHECK(line_pairing(l1, l2) == Rat(0));
        }
        std::array<std::array<Rat, 4>, 4> m{a.x, b.x, c.x, d.x};
        Rat coplanar = det4(m);
        ProjLine3 l3 = join(c, d);
        CHECK((line_pairing(l1, l3) == Rat(0)) == (coplanar == Rat(0)));
    }
}

TEST_CASE("fiber line passes through center and hits the image point") {
    Rng rng(37);
    for (int it = 0; it < 30; ++it) {
        ProjPoint3 center = random_point(rng);
        ProjPoint3 other = random_point(rng);
        if (center == other) continue;
        auto m = projection_map(center);
        ProjPoint2 q = apply_projection(m, other);
        ProjLine3 fib = fiber_line(center, m, q);
        CHECK(point_on_line(center, fib));
        CHECK(point_on_line(other, fib));
    }
}

TEST_CASE("charts: orientation and transition compatibility") {
    AffineChart3 std_chart = AffineChart3::standard();
    CHECK(std_chart.orientation() == 1);
    Rng rng(41);
    for (int it = 0; it < 30; ++it) {
        long h0 = rng.range(-5, 5), h1 = rng.range(-5, 5), h2 = rng.range(-5, 5),
             h3 = rng.range(-5, 5);
        if (!(h0 || h1 || h2 || h3)) continue;
        AffineChart3 c = AffineChart3::from_infinity_plane(PlaneP3(Rat(h0), Rat(h1), Rat(h2), Rat(h3)));
        CHECK(c.orientation() == 1);
    }
}

TEST_CASE("plane through three points contains them") {
    PlaneP3 h = plane_through_points(pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0));
    CHECK(h.eval(pt(1, 0, 0, 0)) == Rat(0));
    CHECK(h == PlaneP3(Rat(0), Rat(0), Rat(0), Rat(1)));
}
