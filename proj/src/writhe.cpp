#include "algknot/writhe.hpp"

#include <sstream>

#include "algknot/errors.hpp"
#include "algknot/rng.hpp"

namespace algknot {

namespace {

UniPoly compose3(const std::array<Rat, 3>& covector, const std::array<UniPoly, 3>& xyz) {
    UniPoly acc;
    for (size_t j = 0; j < 3; ++j) acc += xyz[j].scaled(covector[j]);
    return acc;
}

std::array<Rat, 3> cross3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

ProjPoint3 random_center(const SpaceCurve& K, std::uint64_t seed, int attempt) {
    Rng rng(seed * 0x9e3779b9ULL + static_cast<std::uint64_t>(attempt) + 1);
    for (int tries = 0; tries < 200; ++tries) {
        Rat a(rng.range(-40, 40), 1 + static_cast<long>(rng.below(8)));
        Rat b(rng.range(-40, 40), 1 + static_cast<long>(rng.below(8)));
        Rat c(rng.range(-40, 40), 1 + static_cast<long>(rng.below(8)));
        Rat d(rng.range(-40, 40), 1 + static_cast<long>(rng.below(8)));
        if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) continue;
        ProjPoint3 p(a, b, c, d);
        if (!K.contains(p)) return p;
    }
    throw SearchFailed("random center generation exhausted");
}

WritheReport encomplexed_writhe(const SpaceCurve& K, const ProjPoint3& p, int retry_budget) {
    ProjPoint3 center = p;
    for (int attempt = 0;; ++attempt) {
        try {
            if (K.contains(center)) throw NonGenericProjection("center on the curve");
            PlaneProjection proj = PlaneProjection::project(K, center);
            DoublePointAnalysis a = double_points(proj);
            WritheReport rep;
            rep.degree = K.degree();
            rep.center = center;
            rep.attempts = attempt + 1;
            for (const auto& dp : a.points) {
                if (dp.is_crossing()) {
                    rep.crossing_contribution += dp.sign;
                    ++rep.census_crossings;
                } else if (dp.is_solitary()) {
                    rep.solitary_contribution += dp.sign;
                    ++rep.census_solitary;
                } else {
                    ++rep.census_imaginary;
                }
            }
            rep.w = rep.crossing_contribution + rep.solitary_contribution;
            return rep;
        } catch (const NonGenericProjection&) {
            if (attempt >= retry_budget) throw;
        } catch (const ChartFailure&) {
            if (attempt >= retry_budget) throw;
        }
        // dyadic perturbation of the requested center
        Rng rng(0xC0FFEEULL + static_cast<std::uint64_t>(attempt));
        std::array<Rat, 4> q = center.x;
        Rat scale(1, 1 << std::min(attempt / 4 + 3, 24));
        for (auto& c : q) c += Rat(rng.range(-9, 9)) * scale;
        bool nz = false;
        for (auto& c : q) nz = nz || !c.is_zero();
        if (!nz) q[0] = Rat(1);
        center = ProjPoint3(q[0], q[1], q[2], q[3]);
    }
}

IndexValue index_i(const PlaneProjection& P, const ProjPoint2& x) {
    if (P.image_contains(x)) throw PointOnCurve("index point lies on the curve");
    const auto& xyz = P.coords();
    const int m = P.degree();

    // covectors vanishing at x, by the usual pivot rule
    size_t pivot = 0;
    while (pivot < 3 && x.x[pivot].is_zero()) ++pivot;
    std::array<std::array<Rat, 3>, 2> w{};
    size_t r = 0;
    for (size_t j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        w[r][j] = Rat(1);
        w[r][pivot] = -x.x[j];
        ++r;
    }
    static const std::array<std::array<long, 2>, 12> combos = {{{1, 0},
                                                                {0, 1},
                                                                {1, 1},
                                                                {1, -1},
                                                                {1, 2},
                                                                {2, 1},
                                                                {1, -2},
                                                                {3, 1},
                                                                {2, -3},
                                                                {1, 4},
                                                                {5, 2},
                                                                {3, -4}}};
    for (const auto& co : combos) {
        std::array<Rat, 3> n{};
        for (size_t j = 0; j < 3; ++j) n[j] = w[0][j] * Rat(co[0]) + w[1][j] * Rat(co[1]);
        if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) continue;
        UniPoly ng = compose3(n, xyz);
        if (ng.is_zero() || ng.degree() != m) continue;             // crossing at t = inf
        if (poly_gcd(ng, ng.derivative()).degree() > 0) continue;   // tangential or repeated
        std::array<Rat, 3> u0 = cross3(n, x.x);
        UniPoly u0g = compose3(u0, xyz);
        UniPoly ngd = ng.derivative();
        int total = 0;
        bool ok = true;
        for (auto& tau : RealAlg::roots_of(ng)) {
            int shalf = tau.sign_of(u0g);
            int sdir = tau.sign_of(ngd);
            if (shalf == 0 || sdir == 0) {
                ok = false;
                break;
            }
            total += shalf * sdir;
        }
        if (!ok) continue;
        IndexValue out;
        out.x = x;
        out.i = Rat(total, 2);
        return out;
    }
    throw ChartFailure("no admissible half-plane for the index computation");
}

namespace {

struct OffsetPoints {
    ProjPoint2 q1, q2;
    int scale_exponent;
};

// q' and q'' close to q on different sides, certified by an exact
// one-crossing count of the connecting segment
OffsetPoints offset_pair(const PlaneProjection& P, const Rat& t_on) {
    const auto& xyz = P.coords();
    ProjPoint2 q = P.image_at(t_on);
    size_t pivot = 0;
    for (size_t j = 1; j < 3; ++j)
        if (q.x[j].abs() > q.x[pivot].abs()) pivot = j;
    // affine coordinates: the two non-pivot ratios
    std::array<size_t, 2> idx{};
    size_t rr = 0;
    for (size_t j = 0; j < 3; ++j)
        if (j != pivot) idx[rr++] = j;
    // tangent of the image at t_on in this chart (quotient rule)
    auto aff_deriv = [&](size_t j) {
        UniPoly num = xyz[j].derivative() * xyz[pivot] - xyz[j] * xyz[pivot].derivative();
        return num.eval(t_on) / (xyz[pivot].eval(t_on) * xyz[pivot].eval(t_on));
    };
    Rat tau0 = aff_deriv(idx[0]), tau1 = aff_deriv(idx[1]);
    if (tau0.is_zero() && tau1.is_zero())
        throw NonGenericProjection("image of the on-curve center is singular");
    std::array<Rat, 2> qa{q.x[idx[0]] / q.x[pivot], q.x[idx[1]] / q.x[pivot]};

    for (int tilt = 0; tilt <= 4; ++tilt) {
        // normal direction, slightly tilted when the straight normal is degenerate
        Rat tilt_f(tilt, 8);
        std::array<Rat, 2> dir{-tau1 + tau0 * tilt_f, tau0 + tau1 * tilt_f};
        if (dir[0].is_zero() && dir[1].is_zero()) continue;
        for (int k = 3; k <= 40; ++k) {
            Rat delta(1, 1);
            for (int j = 0; j < k; ++j) delta *= Rat(1, 2);
            auto mk = [&](int sgn) {
                std::array<Rat, 3> c{};
                c[pivot] = Rat(1);
                c[idx[0]] = qa[0] + dir[0] * delta * Rat(sgn);
                c[idx[1]] = qa[1] + dir[1] * delta * Rat(sgn);
                return ProjPoint2(c[0], c[1], c[2]);
            };
            ProjPoint2 q1 = mk(1), q2 = mk(-1);
            if (P.image_contains(q1) || P.image_contains(q2)) continue;
            // the segment q1 q2 must cross the curve exactly once
            ProjLine2 L = join2(q1, q2);
            UniPoly lg = compose3(L.a, xyz);
            if (lg.is_zero() || lg.degree() != P.degree()) continue;  // hits the infinity image
            // position along the segment: lambda(pt) = (pt - q) . dir scaled;
            // strictly between means |lambda| < delta |dir|^2
            Rat dd = dir[0] * dir[0] + dir[1] * dir[1];
            int between = 0;
            bool bad = false;
            for (auto& zeta : RealAlg::roots_of(lg)) {
                // numerator of (pt_aff - q_aff) . dir over the pivot coordinate
                UniPoly num;
                for (size_t jj = 0; jj < 2; ++jj)
                    num += (xyz[idx[jj]] - xyz[pivot].scaled(qa[jj])).scaled(dir[jj]);
                int spiv = zeta.sign_of(xyz[pivot]);
                if (spiv == 0) {
                    bad = true;
                    break;
                }
                // lambda - delta dd < 0 < lambda + delta dd ?
                UniPoly upper = num - xyz[pivot].scaled(delta * dd);
                UniPoly lower = num + xyz[pivot].scaled(delta * dd);
                int s_up = zeta.sign_of(upper) * spiv;
                int s_lo = zeta.sign_of(lower) * spiv;
                if (s_up == 0 || s_lo == 0) {
                    bad = true;
                    break;
                }
                if (s_up < 0 && s_lo > 0) ++between;
            }
            if (bad || between != 1) continue;
            return OffsetPoints{q1, q2, k};
        }
    }
    throw SearchFailed("offset pair construction failed");
}

}  // namespace

Eq2Breakdown eq2_check(const SpaceCurve& K, const RP1Param& on_curve_param, std::uint64_t seed) {
    if (on_curve_param.at_infinity) {
        // same configuration in the flipped parameter chart
        return eq2_check(K.flipped(), RP1Param::finite(Rat(0)), seed);
    }
    const Rat& t_on = on_curve_param.t;
    ProjPoint3 p = K.eval(t_on);
    PlaneProjection proj = PlaneProjection::project(K, p);
    if (!proj.center_on_curve()) throw Error("eq2_check: center unexpectedly off the curve");

    // projections from on-curve points can carry ordinary multiple points
    // (every secant ruling through the center collapses); their singular
    // contribution is the sum of the pairwise crossing signs
    DoublePointAnalysis a = double_points(proj, true);
    int sigma = a.sign_sum();

    OffsetPoints off = offset_pair(proj, t_on);
    IndexValue i1 = index_i(proj, off.q1);
    IndexValue i2 = index_i(proj, off.q2);

    // independent writhe from a generic off-curve center
    WritheReport wrep;
    bool got = false;
    for (int attempt = 0; attempt < 32 && !got; ++attempt) {
        try {
            wrep = encomplexed_writhe(K, random_center(K, seed, attempt), 8);
            got = true;
        } catch (const Error&) {
        }
    }
    if (!got) throw SearchFailed("no generic off-curve center for the independent writhe");

    Eq2Breakdown out;
    out.w = wrep.w;
    out.off_center = wrep.center;
    out.sigma_sum = sigma;
    out.q1 = off.q1;
    out.q2 = off.q2;
    out.scale_exponent = off.scale_exponent;
    Rat S = i1.i + i2.i;
    // the index orientation follows the parametrization; normalize to the
    // complex orientation by making the boundary pair sum nonnegative
    out.orientation_sign = (S.sign() < 0) ? -1 : 1;
    out.i_q1 = i1.i * Rat(out.orientation_sign);
    out.i_q2 = i2.i * Rat(out.orientation_sign);
    out.i_sum = S * Rat(out.orientation_sign);
    out.holds = (Rat(out.w) == out.i_sum + Rat(sigma));
    return out;
}

}  // namespace algknot
