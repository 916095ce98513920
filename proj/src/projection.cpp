#include "algknot/projection.hpp"

#include <algorithm>
#include <sstream>

#include "algknot/errors.hpp"

namespace algknot {

namespace {

// Calibration of the two sign conventions against the acceptance pins
// (projection invariance of the writhe and w(twisted cubic) = +1). The raw
// determinant convention pairs positive torsion with negative crossings, so
// both signs are negated to match the torsion-positivity pairing.
constexpr int kCrossingSignFlip = -1;
constexpr int kSolitarySignFlip = -1;

UniPoly compose_row(const std::array<Rat, 4>& row, const SpaceCurve& K) {
    UniPoly acc;
    for (size_t j = 0; j < 4; ++j) acc += K.coord(static_cast<int>(j)).scaled(row[j]);
    return acc;
}

UniPoly compose_row3(const std::array<Rat, 3>& row, const std::array<UniPoly, 3>& xyz) {
    UniPoly acc;
    for (size_t j = 0; j < 3; ++j) acc += xyz[j].scaled(row[j]);
    return acc;
}

}  // namespace

// --- projection --------------------------------------------------------------

PlaneProjection PlaneProjection::project(const SpaceCurve& K, const ProjPoint3& p) {
    PlaneProjection out;
    out.center_ = p;
    out.curve_ = K;
    out.rows_ = projection_map(p);
    for (size_t r = 0; r < 3; ++r) out.xyz_[r] = compose_row(out.rows_[r], K);
    UniPoly g = poly_gcd(poly_gcd(out.xyz_[0], out.xyz_[1]), out.xyz_[2]);
    if (g.degree() > 0) {
        for (auto& c : out.xyz_) {
            c = UniPoly::div_exact(c, g);
        }
    }
    bool any = false;
    for (const auto& c : out.xyz_) any = any || !c.is_zero();
    if (!any) throw DegenerateParametrization("projection collapses the curve");
    out.degree_ = 0;
    for (const auto& c : out.xyz_) out.degree_ = std::max(out.degree_, c.degree());
    out.center_on_curve_ = K.contains(p);
    int expect = K.degree() - (out.center_on_curve_ ? 1 : 0);
    if (out.degree_ != expect)
        throw NonGenericProjection("projection degree " + std::to_string(out.degree_) +
                                   " does not match expected " + std::to_string(expect));
    return out;
}

ProjPoint2 PlaneProjection::image_at(const Rat& t) const {
    return ProjPoint2(xyz_[0].eval(t), xyz_[1].eval(t), xyz_[2].eval(t));
}

ProjPoint2 PlaneProjection::image_at_infinity() const {
    return ProjPoint2(xyz_[0].coeff(degree_), xyz_[1].coeff(degree_), xyz_[2].coeff(degree_));
}

ProjPoint2 PlaneProjection::image_at(const RP1Param& t) const {
    return t.at_infinity ? image_at_infinity() : image_at(t.t);
}

bool PlaneProjection::image_contains(const ProjPoint2& x) const {
    // pull back two independent lines through x; a common root means some
    // (possibly complex) parameter maps to x
    size_t pivot = 0;
    while (pivot < 3 && x.x[pivot].is_zero()) ++pivot;
    UniPoly g;
    bool first = true;
    for (size_t j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        std::array<Rat, 3> row{};
        row[j] = Rat(1);
        row[pivot] = -x.x[j];
        UniPoly comp = compose_row3(row, xyz_);
        g = first ? comp : poly_gcd(g, comp);
        first = false;
    }
    if (g.is_zero()) return true;  // curve degenerate through x
    if (g.degree() > 0) return true;
    // the forms can also vanish simultaneously at t = infinity
    ProjPoint2 at_inf = image_at_infinity();
    return at_inf == x;
}

// --- sign machinery -----------------------------------------------------------

namespace {

struct Z0Ring {
    // arithmetic in (Q[x]/(G))[z0] with z0^2 = e z0 - f
    UniPoly G, e_elem, f_elem;

    struct C {
        UniPoly re, im;  // re + im * z0
    };

    C mul_z0(const C& a) const {
        // (re + im z0) z0 = -im f + (re + im e) z0
        return C{mod_reduce(-(a.im * f_elem), G), mod_reduce(a.re + a.im * e_elem, G)};
    }
    C add_const(const C& a, const Rat& c) const {
        C out = a;
        out.re += UniPoly::constant(c);
        return out;
    }
    C eval_poly(const UniPoly& p) const {
        C acc{UniPoly(), UniPoly()};
        for (int k = p.degree(); k >= 0; --k) acc = add_const(mul_z0(acc), p.coeff(k));
        return acc;
    }
    UniPoly norm(const C& a) const {
        // a conj(a) = re^2 + re im e + im^2 f
        return mod_reduce(a.re * a.re + a.re * a.im * e_elem + a.im * a.im * f_elem, G);
    }
};

Z0Ring make_z0_ring(const DPSolution& sys) {
    Z0Ring ring;
    ring.G = sys.G;
    auto uinv = mod_inv(sys.u, sys.G);
    if (!uinv) throw Error("u not invertible mod G (screened earlier)");
    ring.f_elem = mod_reduce(-(sys.v * *uinv), sys.G);
    ring.e_elem = mod_reduce(UniPoly::variable() - ring.f_elem.scaled(sys.lambda), sys.G);
    return ring;
}

struct SignContext {
    bool valid = false;
    AffineChart3 chart;
    PlaneP3 h;
    std::array<Rat, 3> u_dir{};
    UniPoly hh;
    std::array<UniPoly, 3> n;
    // cleared symmetric images: value * u^udeg on roots of G
    UniPoly cross_val;
    int cross_udeg = 0;
    UniPoly hh_val;
    int hh_udeg = 0;
    size_t fiber_index = 0;
    UniPoly w_val;
    int w_udeg = 0;
};

int sign_cleared(RealAlg& x, const UniPoly& val, int udeg, const UniPoly& u) {
    int s = x.sign_of(val);
    if (udeg % 2 != 0) {
        int su = x.sign_of(u);
        s *= su;
    }
    return s;
}

std::vector<PlaneP3> chart_plane_candidates(const std::array<std::array<Rat, 4>, 3>& rows) {
    static const std::array<std::array<long, 3>, 14> combos = {{{1, 0, 0},
                                                                {0, 1, 0},
                                                                {0, 0, 1},
                                                                {1, 1, 0},
                                                                {1, -1, 0},
                                                                {1, 0, 1},
                                                                {1, 0, -1},
                                                                {0, 1, 1},
                                                                {0, 1, -1},
                                                                {1, 1, 1},
                                                                {1, 2, 3},
                                                                {3, -1, 2},
                                                                {2, -3, 5},
                                                                {5, 7, -11}}};
    std::vector<PlaneP3> out;
    for (const auto& c : combos) {
        std::array<Rat, 4> a{};
        for (size_t j = 0; j < 4; ++j)
            a[j] = rows[0][j] * Rat(c[0]) + rows[1][j] * Rat(c[1]) + rows[2][j] * Rat(c[2]);
        PlaneP3 h;
        h.a = a;
        if (h.is_zero()) continue;
        h.canonicalize();
        out.push_back(h);
    }
    return out;
}

// a chart whose infinity plane contains the center and misses every double
// point fiber: h.gamma must be coprime to the parameter polynomial
SignContext make_sign_context(const PlaneProjection& P, const DPSolution& sys,
                              const PlaneP3& h_choice, bool have_choice) {
    SignContext ctx;
    const SpaceCurve& K = P.curve();
    std::vector<PlaneP3> cands =
        have_choice ? std::vector<PlaneP3>{h_choice} : chart_plane_candidates(P.rows());
    for (const auto& h : cands) {
        UniPoly hh = compose_row(h.a, K);
        if (hh.is_zero()) continue;
        if (sys.psi.degree() > 0 && poly_gcd(hh, sys.psi).degree() > 0) continue;
        AffineChart3 chart = AffineChart3::from_infinity_plane(h);
        std::array<Rat, 3> u_dir{};
        bool nonzero = false;
        for (size_t i = 0; i < 3; ++i) {
            Rat s(0);
            for (size_t j = 0; j < 4; ++j) s += chart.m[i + 1][j] * P.center().x[j];
            u_dir[i] = s;
            nonzero = nonzero || !s.is_zero();
        }
        if (!nonzero) continue;
        ctx.valid = true;
        ctx.chart = chart;
        ctx.h = h;
        ctx.u_dir = u_dir;
        ctx.hh = hh;
        for (size_t i = 0; i < 3; ++i) ctx.n[i] = compose_row(chart.m[i + 1], K);
        return ctx;
    }
    if (have_choice) throw ChartFailure("chart plane meets a double point fiber");
    throw ChartFailure("no admissible chart plane found");
}

void build_crossing_polys(SignContext& ctx, const DPSolution& sys) {
    // det[gamma_aff(t)-gamma_aff(s), gamma_aff'(s), gamma_aff'(t)] has the sign
    // of det M * h(s) h(t) where M's columns clear all denominators
    std::array<BiPoly, 3> c1, c2, c3;
    for (size_t i = 0; i < 3; ++i) {
        c1[i] = st_product(ctx.hh, ctx.n[i]) - st_product(ctx.n[i], ctx.hh);
        UniPoly num = ctx.n[i].derivative() * ctx.hh - ctx.n[i] * ctx.hh.derivative();
        c2[i] = BiPoly::of_x(num);
        c3[i] = BiPoly::of_y(num);
    }
    BiPoly detM = c1[0] * (c2[1] * c3[2] - c2[2] * c3[1]) -
                  c1[1] * (c2[0] * c3[2] - c2[2] * c3[0]) +
                  c1[2] * (c2[0] * c3[1] - c2[1] * c3[0]);
    BiPoly total = detM * st_product(ctx.hh, ctx.hh);
    BiPoly sym = shear_x(symmetrize_st(total), sys.lambda);
    ctx.cross_val = eval_y_fraction_cleared(sym, sys.u, sys.v, sys.G);
    ctx.cross_udeg = sym.deg_y();

    BiPoly hhsym = shear_x(symmetrize_st(st_product(ctx.hh, ctx.hh)), sys.lambda);
    ctx.hh_val = eval_y_fraction_cleared(hhsym, sys.u, sys.v, sys.G);
    ctx.hh_udeg = hhsym.deg_y();

    ctx.fiber_index = 0;
    while (ctx.fiber_index < 3 && ctx.u_dir[ctx.fiber_index].is_zero()) ++ctx.fiber_index;
    BiPoly W = antisymmetric_cofactor_st(c1[ctx.fiber_index]);
    BiPoly Wsh = shear_x(W, sys.lambda);
    ctx.w_val = eval_y_fraction_cleared(Wsh, sys.u, sys.v, sys.G);
    ctx.w_udeg = Wsh.deg_y();
}

// locate the two real parameters of a crossing among the roots of psi
std::pair<RealAlg, RealAlg> match_crossing_params(const DPSolution& sys, RealAlg& x,
                                                  std::vector<RealAlg>& psi_roots) {
    for (int iter = 0; iter < 300; ++iter) {
        Rat elo, ehi, flo, fhi;
        sys.ef_intervals(x, elo, ehi, flo, fhi);
        std::vector<std::pair<size_t, size_t>> cands;
        for (size_t i = 0; i < psi_roots.size() && cands.size() < 2; ++i) {
            for (size_t j = i + 1; j < psi_roots.size() && cands.size() < 2; ++j) {
                Rat slo = psi_roots[i].lo() + psi_roots[j].lo();
                Rat shi = psi_roots[i].hi() + psi_roots[j].hi();
                if (shi < elo || slo > ehi) continue;
                Rat p1 = psi_roots[i].lo() * psi_roots[j].lo();
                Rat p2 = psi_roots[i].lo() * psi_roots[j].hi();
                Rat p3 = psi_roots[i].hi() * psi_roots[j].lo();
                Rat p4 = psi_roots[i].hi() * psi_roots[j].hi();
                Rat plo = std::min(std::min(p1, p2), std::min(p3, p4));
                Rat phi = std::max(std::max(p1, p2), std::max(p3, p4));
                if (phi < flo || plo > fhi) continue;
                cands.emplace_back(i, j);
            }
        }
        if (cands.size() == 1) return {psi_roots[cands[0].first], psi_roots[cands[0].second]};
        x.refine();
        for (auto& r : psi_roots) r.refine();
    }
    throw NonGenericProjection("crossing parameter matching did not converge");
}

int crossing_sign_from_ctx(SignContext& ctx, const DPSolution& sys, RealAlg& x) {
    int s = sign_cleared(x, ctx.cross_val, ctx.cross_udeg, sys.u);
    if (s == 0) throw ChartFailure("degenerate crossing determinant");
    return kCrossingSignFlip * s;
}

int solitary_sign_from_ctx(SignContext& ctx, const DPSolution& sys, const Z0Ring& ring,
                           RealAlg& x) {
    // The symmetric reduction of the crossing determinant is a polynomial
    // identity in (s, t), so its value at the conjugate parameter pair
    // computes det[gamma(conj z0) - gamma(z0), gamma'(z0), gamma'(conj z0)]
    //   = -4 det[Im gamma_aff(z0), Re gamma_aff'(z0), Im gamma_aff'(z0)]
    // up to the positive factor |h(z0)|^8. The solitary sign is this
    // encomplexed continuation of the crossing sign.
    if (x.sign_of(ring.norm(ring.eval_poly(ctx.hh))) == 0)
        throw ChartFailure("chart plane passes through the solitary node fiber");
    int s = sign_cleared(x, ctx.cross_val, ctx.cross_udeg, sys.u);
    if (s == 0) throw ChartFailure("degenerate solitary determinant");
    return kSolitarySignFlip * s;
}

}  // namespace

// --- double point classification ----------------------------------------------

int DoublePointAnalysis::crossing_count() const {
    int n = 0;
    for (const auto& d : points) n += d.is_crossing();
    return n;
}
int DoublePointAnalysis::solitary_count() const {
    int n = 0;
    for (const auto& d : points) n += d.is_solitary();
    return n;
}
int DoublePointAnalysis::imaginary_count() const {
    int n = 0;
    for (const auto& d : points) n += (d.kind == DoublePoint::Kind::imaginary_pair);
    return n;
}
int DoublePointAnalysis::sign_sum() const {
    int n = 0;
    for (const auto& d : points) n += d.sign;
    return n;
}

namespace {

DoublePointAnalysis double_points_impl(const PlaneProjection& P, bool allow_shared) {
    DoublePointAnalysis out;
    out.proj = P;
    out.sys = solve_dd_system(P.coords()[0], P.coords()[1], P.coords()[2], P.degree(), allow_shared);
    out.report.has_triple_point = out.sys.shared_parameters;
    if (out.sys.expected == 0) {
        out.chart = AffineChart3::standard();
        return out;
    }
    SignContext ctx = make_sign_context(P, out.sys, PlaneP3(), false);
    build_crossing_polys(ctx, out.sys);
    out.chart = ctx.chart;
    out.chart_plane = ctx.h;

    std::vector<RealAlg> psi_roots = RealAlg::roots_of(out.sys.psi);
    std::optional<Z0Ring> ring;

    for (RealAlg& x0 : out.sys.real_roots) {
        DoublePoint dp;
        dp.x = x0;
        int disc = x0.sign_of(out.sys.disc_num);
        if (disc == 0) throw NonGenericProjection("cusp-like double point survived screening");
        RealAlg xr = x0;
        out.sys.ef_intervals(xr, dp.e_lo, dp.e_hi, dp.f_lo, dp.f_hi);
        if (disc > 0) {
            dp.kind = DoublePoint::Kind::crossing;
            auto [s0, t0] = match_crossing_params(out.sys, x0, psi_roots);
            dp.sign = crossing_sign_from_ctx(ctx, out.sys, x0);
            // fiber comparison: kappa > 0 puts the larger parameter over
            int sw = sign_cleared(x0, ctx.w_val, ctx.w_udeg, out.sys.u);
            int shh = sign_cleared(x0, ctx.hh_val, ctx.hh_udeg, out.sys.u);
            if (sw == 0 || shh == 0) throw ChartFailure("fiber comparison degenerate");
            int kappa = -sw * shh * ctx.u_dir[ctx.fiber_index].sign();
            if (kappa > 0) {
                dp.param_under = s0;
                dp.param_over = t0;
            } else {
                dp.param_under = t0;
                dp.param_over = s0;
            }
            Rat mid = s0.mid();
            auto img = P.image_at(mid);
            for (size_t i = 0; i < 3; ++i) dp.image_approx[i] = img.x[i].to_double();
        } else {
            dp.kind = DoublePoint::Kind::solitary;
            if (!ring) ring = make_z0_ring(out.sys);
            dp.sign = solitary_sign_from_ctx(ctx, out.sys, *ring, x0);
            // real image of the conjugate parameter pair
            std::array<Z0Ring::C, 3> vals;
            for (size_t i = 0; i < 3; ++i) vals[i] = ring->eval_poly(P.coords()[i]);
            size_t anchor = 0;
            while (anchor < 3 && x0.sign_of(ring->norm(vals[anchor])) == 0) ++anchor;
            if (anchor == 3) throw Error("solitary image has no nonzero coordinate");
            // Re(A_i conj(A_a)) = re_i re_a + (re_i im_a + im_i re_a) sigma + im_i im_a f,
            // with sigma = e/2 and z0 conj(z0) = f; a real representative of the image
            double approx[3];
            for (size_t i = 0; i < 3; ++i) {
                UniPoly re = mod_reduce(
                    vals[i].re * vals[anchor].re +
                        (vals[i].re * vals[anchor].im + vals[i].im * vals[anchor].re) *
                            ring->e_elem.scaled(Rat(1, 2)) +
                        vals[i].im * vals[anchor].im * ring->f_elem,
                    ring->G);
                approx[i] = re.is_zero() ? 0.0 : re.eval(x0.mid()).to_double();
            }
            double norm = std::max({std::abs(approx[0]), std::abs(approx[1]), std::abs(approx[2])});
            for (size_t i = 0; i < 3; ++i)
                dp.image_approx[i] = norm > 0 ? approx[i] / norm : approx[i];
        }
        out.points.push_back(std::move(dp));
    }
    for (int k = 0; k < out.sys.complex_root_count; ++k) {
        DoublePoint dp;
        dp.kind = DoublePoint::Kind::imaginary_pair;
        out.points.push_back(std::move(dp));
    }
    return out;
}

}  // namespace

DoublePointAnalysis double_points(const PlaneProjection& P, bool allow_shared_parameters) {
    // Double points sitting at the infinite parameter are a chart artifact;
    // retry the identical geometric projection along rotated RP^1 coordinates
    // before declaring the projection non-generic.
    static const std::array<std::array<Rat, 4>, 6> maps = {{
        {Rat(1), Rat(0), Rat(0), Rat(1)},
        {Rat(1), Rat(1), Rat(-1), Rat(1)},
        {Rat(0), Rat(1), Rat(-1), Rat(0)},
        {Rat(1), Rat(-1), Rat(1), Rat(1)},
        {Rat(2), Rat(1), Rat(1), Rat(1)},
        {Rat(1), Rat(2), Rat(-1), Rat(3)},
    }};
    GenericityFlags accum;
    for (size_t k = 0; k < maps.size(); ++k) {
        try {
            if (k == 0) return double_points_impl(P, allow_shared_parameters);
            SpaceCurve moved = P.curve().moebius(maps[k][0], maps[k][1], maps[k][2], maps[k][3]);
            return double_points_impl(PlaneProjection::project(moved, P.center()), allow_shared_parameters);
        } catch (const NonGenericDetail& e) {
            accum.has_cusp = accum.has_cusp || e.flags.has_cusp;
            accum.has_tangential_pair = accum.has_tangential_pair || e.flags.has_tangential_pair;
            accum.has_triple_point = accum.has_triple_point || e.flags.has_triple_point;
            accum.base_point_on_curve = accum.base_point_on_curve || e.flags.base_point_on_curve;
            accum.elimination_collision = accum.elimination_collision || e.flags.elimination_collision;
        } catch (const NonGenericProjection&) {
            accum.elimination_collision = true;
        }
    }
    throw NonGenericDetail(accum.describe(), accum);
}

int crossing_sign(const PlaneProjection& P, const DoublePointAnalysis& a, size_t which) {
    (void)P;
    if (which >= a.points.size() || !a.points[which].is_crossing())
        throw Error("crossing_sign: index is not a crossing");
    return a.points[which].sign;
}

int solitary_sign(const PlaneProjection& P, const DoublePointAnalysis& a, size_t which) {
    if (which >= a.points.size() || !a.points[which].is_solitary())
        throw Error("solitary_sign: index is not a solitary point");
    (void)P;
    return a.points[which].sign;
}

int crossing_sign_in_chart(const PlaneProjection& P, const DPSolution& sys, RealAlg x,
                           const PlaneP3& h) {
    if (!h.eval(P.center()).is_zero()) throw ChartFailure("chart plane must contain the center");
    SignContext ctx = make_sign_context(P, sys, h, true);
    build_crossing_polys(ctx, sys);
    return crossing_sign_from_ctx(ctx, sys, x);
}

int solitary_sign_in_chart(const PlaneProjection& P, const DPSolution& sys, RealAlg x,
                           const PlaneP3& h) {
    if (!h.eval(P.center()).is_zero()) throw ChartFailure("chart plane must contain the center");
    SignContext ctx = make_sign_context(P, sys, h, true);
    build_crossing_polys(ctx, sys);
    Z0Ring ring = make_z0_ring(sys);
    return solitary_sign_from_ctx(ctx, sys, ring, x);
}

}  // namespace algknot
