#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "algknot/errors.hpp"
#include "algknot/rng.hpp"
#include "algknot/writhe.hpp"

using namespace algknot;

namespace {

UniPoly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.push_back(Rat(v));
    return UniPoly(std::move(c));
}

SpaceCurve twisted_cubic() {
    return SpaceCurve({P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1})});
}

ProjPoint3 pt(long a, long b, long c, long d) {
    return ProjPoint3(Rat(a), Rat(b), Rat(c), Rat(d));
}

// numeric winding oracle on the double cover: total azimuth turns of both
// antipodal lifts around the lift of x
double winding_oracle(const PlaneProjection& proj, const ProjPoint2& x) {
    double xv[3] = {x.x[0].to_double(), x.x[1].to_double(), x.x[2].to_double()};
    double nx = std::sqrt(xv[0] * xv[0] + xv[1] * xv[1] + xv[2] * xv[2]);
    for (double& v : xv) v /= nx;
    // orthonormal frame (e1, e2, xhat), right handed
    double a[3] = {1, 0, 0};
    if (std::fabs(xv[0]) > 0.8) a[0] = 0, a[1] = 1;
    double e1[3] = {a[1] * xv[2] - a[2] * xv[1], a[2] * xv[0] - a[0] * xv[2],
                    a[0] * xv[1] - a[1] * xv[0]};
    double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (double& v : e1) v /= n1;
    double e2[3] = {xv[1] * e1[2] - xv[2] * e1[1], xv[2] * e1[0] - xv[0] * e1[2],
                    xv[0] * e1[1] - xv[1] * e1[0]};
    auto gamma = [&](double t, double out[3]) {
        for (size_t i = 0; i < 3; ++i) out[i] = 0;
        for (size_t i = 0; i < 3; ++i) {
            const auto& c = proj.coords()[i];
            double acc = 0;
            for (int k = c.degree(); k >= 0; --k) acc = acc * t + c.coeff(k).to_double();
            out[i] = acc;
        }
    };
    double total = 0;
    for (int lift = 0; lift < 2; ++lift) {
        double sgn = lift == 0 ? 1.0 : -1.0;
        double prev_phi = 0;
        bool first = true;
        const int N = 20000;
        for (int k = 0; k <= N; ++k) {
            // chord substitution covering RP1 once
            double u = -M_PI / 2 + M_PI * static_cast<double>(k) / N;
            double t = std::tan(u);
            double g[3];
            if (k == 0 || k == N) {
                // endpoint at infinity: use the leading coefficients
                for (size_t i = 0; i < 3; ++i)
                    g[i] = proj.coords()[i].coeff(proj.degree()).to_double();
                // approach from -inf flips by parity
                if (k == 0 && proj.degree() % 2 == 1)
                    for (double& v : g) v = -v;
            } else {
                gamma(t, g);
            }
            for (double& v : g) v *= sgn;
            double c1 = g[0] * e1[0] + g[1] * e1[1] + g[2] * e1[2];
            double c2 = g[0] * e2[0] + g[1] * e2[1] + g[2] * e2[2];
            double phi = std::atan2(c2, c1);
            if (!first) {
                double d = phi - prev_phi;
                while (d > M_PI) d -= 2 * M_PI;
                while (d < -M_PI) d += 2 * M_PI;
                total += d;
            }
            prev_phi = phi;
            first = false;
        }
    }
    return total / (2 * M_PI);
}

}  // namespace

TEST_CASE("writhe of the twisted cubic is 1 from several random centers") {
    SpaceCurve k = twisted_cubic();
    for (int i = 0; i < 6; ++i) {
        auto rep = encomplexed_writhe(k, random_center(k, 100 + i, 0));
        CHECK(rep.w == 1);
        CHECK(rep.w == rep.crossing_contribution + rep.solitary_contribution);
        CHECK(rep.maximal());
    }
}

TEST_CASE("writhe of the mirror cubic is -1") {
    SpaceCurve m = mirror(twisted_cubic());
    for (int i = 0; i < 3; ++i) {
        auto rep = encomplexed_writhe(m, random_center(m, 200 + i, 0));
        CHECK(rep.w == -1);
    }
}

TEST_CASE("index of conic: inside 1, outside 0") {
    SpaceCurve k = twisted_cubic();
    auto proj = PlaneProjection::project(k, pt(1, 0, 0, 0));  // image (1 : t : t^2)
    auto inside = index_i(proj, ProjPoint2(Rat(1), Rat(0), Rat(1)));
    CHECK(inside.i == Rat(1));
    auto outside = index_i(proj, ProjPoint2(Rat(1), Rat(0), Rat(-1)));
    CHECK(outside.i == Rat(0));
    CHECK_THROWS_AS(index_i(proj, ProjPoint2(Rat(1), Rat(1), Rat(1))), PointOnCurve);
}

TEST_CASE("index matches the polygonal winding oracle on conics") {
    SpaceCurve k = twisted_cubic();
    auto proj = PlaneProjection::project(k, pt(1, 0, 0, 0));
    Rng rng(61);
    int tested = 0;
    for (int it = 0; it < 30 && tested < 8; ++it) {
        ProjPoint2 x(Rat(rng.range(-4, 4)), Rat(rng.range(-4, 4)), Rat(rng.range(-4, 4)));
        if (x.is_zero()) continue;
        Rat iv;
        try {
            iv = index_i(proj, x).i;
        } catch (const Error&) {
            continue;
        }
        double oracle = winding_oracle(proj, x) / 2.0;
        CHECK(std::fabs(iv.to_double() - oracle) < 0.01);
        ++tested;
    }
    CHECK(tested >= 6);
}

TEST_CASE("index is locally constant") {
    SpaceCurve k = twisted_cubic();
    auto proj = PlaneProjection::project(k, pt(1, 0, 0, 0));
    ProjPoint2 x(Rat(1), Rat(1, 5), Rat(1));
    Rat base = index_i(proj, x).i;
    const long eps = 1000;
    for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy) {
            ProjPoint2 xp(Rat(1), Rat(1, 5) + Rat(dx, eps), Rat(1) + Rat(dy, eps));
            CHECK(index_i(proj, xp).i == base);
        }
}

TEST_CASE("eq2 for the twisted cubic from an on-curve center") {
    SpaceCurve k = twisted_cubic();
    auto br = eq2_check(k, RP1Param::finite(Rat(0)), 7);
    CHECK(br.holds);
    CHECK(br.w == 1);
    CHECK(br.i_sum == Rat(1));  // d - 2
    CHECK(br.sigma_sum == 0);
    auto br2 = eq2_check(k, RP1Param::finite(Rat(1)), 8);
    CHECK(br2.holds);
    auto br3 = eq2_check(k, RP1Param::infinity(), 9);
    CHECK(br3.holds);
}

TEST_CASE("projection invariance of the writhe for a random smooth quartic") {
    Rng rng(67);
    int curves_done = 0;
    for (int it = 0; it < 30 && curves_done < 2; ++it) {
        std::array<UniPoly, 4> y;
        for (size_t i = 0; i < 4; ++i) {
            std::vector<Rat> c(5);
            for (auto& cc : c) cc = Rat(rng.range(-5, 5));
            y[i] = UniPoly(std::move(c));
        }
        try {
            SpaceCurve k(y);
            if (k.degree() != 4) continue;
            check_smooth(k);
            int w0 = 0;
            bool have = false;
            for (int c = 0; c < 6; ++c) {
                auto rep = encomplexed_writhe(k, random_center(k, 5000 + 31 * it + c, 0), 16);
                if (!have) {
                    w0 = rep.w;
                    have = true;
                } else {
                    CHECK(rep.w == w0);
                }
            }
            ++curves_done;
        } catch (const Error&) {
            continue;
        }
    }
    CHECK(curves_done == 2);
}
