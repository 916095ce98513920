#include "algknot/spacecurve.hpp"

#include <algorithm>
#include <sstream>

#include "algknot/dpsolve.hpp"
#include "algknot/errors.hpp"

namespace algknot {

namespace {

UniPoly gcd_all(const std::array<UniPoly, 4>& ys) {
    UniPoly g;
    for (const auto& y : ys) g = poly_gcd(g, y);
    return g;
}

// simplest rational in the open interval (lo, hi) by a Stern-Brocot descent
Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (lo < Rat(0) && hi > Rat(0)) return Rat(0);
    if (lo >= Rat(0)) {
        // walk for nonnegative bounds
        BigInt a(0), b(1), c(1), d(0);  // lo side a/b, hi side c/d mediants
        while (true) {
            BigInt am = a + c, bm = b + d;
            Rat med = Rat(am, bm);
            if (med <= lo)
                a = am, b = bm;
            else if (med >= hi)
                c = am, d = bm;
            else
                return med;
        }
    }
    Rat m = simplest_rational_between(-hi, -lo);
    return -m;
}

}  // namespace

SpaceCurve::SpaceCurve(std::array<UniPoly, 4> coords) : y_(std::move(coords)) {
    bool any = false;
    for (const auto& y : y_) any = any || !y.is_zero();
    if (!any) throw Error("space curve with all coordinates zero");
    UniPoly g = gcd_all(y_);
    if (g.degree() > 0)
        for (auto& y : y_) y = UniPoly::div_exact(y, g);
    d_ = 0;
    for (const auto& y : y_) d_ = std::max(d_, y.degree());
    if (d_ < 1) throw Error("space curve must be nonconstant");
}

ProjPoint3 SpaceCurve::eval(const Rat& t) const {
    return ProjPoint3(y_[0].eval(t), y_[1].eval(t), y_[2].eval(t), y_[3].eval(t));
}

ProjPoint3 SpaceCurve::eval_infinity() const {
    return ProjPoint3(y_[0].coeff(d_), y_[1].coeff(d_), y_[2].coeff(d_), y_[3].coeff(d_));
}

ProjPoint3 SpaceCurve::eval_param(const RP1Param& p) const {
    return p.at_infinity ? eval_infinity() : eval(p.t);
}

std::array<UniPoly, 4> SpaceCurve::derivative() const {
    return {y_[0].derivative(), y_[1].derivative(), y_[2].derivative(), y_[3].derivative()};
}

SpaceCurve SpaceCurve::flipped() const {
    std::array<UniPoly, 4> f;
    for (size_t i = 0; i < 4; ++i) f[i] = y_[i].reversed(d_);
    return SpaceCurve(std::move(f));
}

SpaceCurve SpaceCurve::moebius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    if ((a * d - b * c).is_zero()) throw Error("moebius map must be invertible");
    UniPoly num = UniPoly::linear(b, a);
    UniPoly den = UniPoly::linear(d, c);
    std::array<UniPoly, 4> out;
    for (size_t i = 0; i < 4; ++i) {
        // (ct+d)^deg * y((at+b)/(ct+d)) via Horner
        UniPoly acc;
        for (int k = d_; k >= 0; --k) {
            acc = acc * num;
            UniPoly dpow = UniPoly::constant(Rat(1));
            for (int j = 0; j < d_ - k; ++j) dpow = dpow * den;
            acc += dpow.scaled(y_[i].coeff(k));
        }
        out[i] = acc;
    }
    return SpaceCurve(std::move(out));
}

namespace {

// gcd of the cross polynomials y_i p_j - y_j p_i; nonconstant iff p lies on
// the complex curve
UniPoly membership_poly(const std::array<UniPoly, 4>& y, const ProjPoint3& p) {
    UniPoly g;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
            UniPoly c = y[i].scaled(p.x[j]) - y[j].scaled(p.x[i]);
            g = poly_gcd(g, c);
            if (!g.is_zero() && g.degree() == 0) return g;
        }
    return g;
}

}  // namespace

bool SpaceCurve::contains(const ProjPoint3& p) const {
    if (eval_infinity() == p) return true;
    UniPoly g = membership_poly(y_, p);
    if (g.is_zero()) throw Error("degenerate curve in membership test");
    return g.degree() > 0;
}

std::optional<RP1Param> SpaceCurve::parameter_of(const ProjPoint3& p) const {
    if (eval_infinity() == p) return RP1Param::infinity();
    UniPoly g = membership_poly(y_, p);
    if (g.is_zero()) throw Error("degenerate curve in parameter_of");
    if (g.degree() == 0) return std::nullopt;
    // rational roots of g: refine each isolated root and test the simplest
    // rational candidate; a rational root a/q has q dividing the leading
    // coefficient, giving a denominator bound
    IntPoly ig = IntPoly::from(squarefree_part(g));
    BigInt qbound = abs(ig.c.back());
    for (auto root : RealAlg::roots_of(g)) {
        for (int iter = 0; iter < 256; ++iter) {
            if (root.is_exact()) return RP1Param::finite(root.lo());
            Rat cand = simplest_rational_between(root.lo(), root.hi());
            if (ig.sign_at(cand) == 0 && root.compare(cand) == 0)
                return RP1Param::finite(cand);
            if (cand.den() > qbound) break;  // no rational root in this interval
            root.refine();
        }
    }
    return std::nullopt;
}

std::string SpaceCurve::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < 4; ++i) {
        if (i) os << " : ";
        os << y_[i].to_string();
    }
    os << ")";
    return os.str();
}

SpaceCurve mirror(const SpaceCurve& K) {
    std::array<UniPoly, 4> y = K.coords();
    y[3] = -y[3];
    return SpaceCurve(std::move(y));
}

// --- tangents ----------------------------------------------------------------

namespace {

std::array<UniPoly, 6> wronskian_minors(const SpaceCurve& K) {
    auto d = K.derivative();
    const auto& y = K.coords();
    std::array<UniPoly, 6> w;
    int idx = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            w[static_cast<size_t>(idx++)] = y[static_cast<size_t>(i)] * d[static_cast<size_t>(j)] -
                                            y[static_cast<size_t>(j)] * d[static_cast<size_t>(i)];
        }
    return w;
}

}  // namespace

ProjLine3 tangent_line(const SpaceCurve& K, const Rat& t) {
    auto w = wronskian_minors(K);
    ProjLine3 l;
    for (size_t k = 0; k < 6; ++k) l.pl[k] = w[k].eval(t);
    if (l.is_zero()) throw NotImmersed("derivative parallel to position at t = " + t.to_string());
    l.canonicalize();
    return l;
}

ProjLine3 tangent_line(const SpaceCurve& K, const RP1Param& t) {
    if (!t.at_infinity) return tangent_line(K, t.t);
    auto w = wronskian_minors(K.flipped());
    ProjLine3 l;
    for (size_t k = 0; k < 6; ++k) l.pl[k] = w[k].eval(Rat(0));
    if (l.is_zero()) throw NotImmersed("derivative parallel to position at t = inf");
    l.canonicalize();
    return l;
}

// --- smoothness ---------------------------------------------------------------

namespace {

// immersion over C: the six Wronskians have no common root (either chart)
void check_immersed(const SpaceCurve& K) {
    auto check_chart = [](const SpaceCurve& C, bool flipped_chart) {
        auto w = wronskian_minors(C);
        UniPoly g;
        for (const auto& p : w) g = poly_gcd(g, p);
        if (g.is_zero()) throw NotImmersed("all coordinate Wronskians vanish identically");
        if (flipped_chart) {
            // only the new parameter s = 0 (t = infinity) matters here
            if (g.eval(Rat(0)).is_zero()) throw NotImmersed("cusp at t = inf");
            return;
        }
        if (g.degree() > 0) {
            std::ostringstream os;
            os << "derivative vanishes projectively; parameter isolation:";
            auto iso = isolate_real_roots(BinForm::of(g));
            for (const auto& iv : iso.intervals)
                os << " (" << iv.lo.to_string() << ", " << iv.hi.to_string() << "]";
            if (iso.intervals.empty()) os << " complex parameters only";
            throw NotImmersed(os.str());
        }
    };
    check_chart(K, false);
    check_chart(K.flipped(), true);
}

const std::array<std::array<Rat, 4>, 7> kAuxCenters = {{
    {Rat(1), Rat(2), Rat(3), Rat(5)},
    {Rat(1), Rat(-1), Rat(2), Rat(-3)},
    {Rat(2), Rat(5), Rat(-1), Rat(7)},
    {Rat(3), Rat(1), Rat(4), Rat(1)},
    {Rat(1), Rat(7), Rat(11), Rat(-2)},
    {Rat(5), Rat(-3), Rat(2), Rat(9)},
    {Rat(1), Rat(0), Rat(1), Rat(8)},
}};

// injectivity over C for pairs visible in the affine parameter chart
// (pairs involving t = infinity are covered by running this on the flip)
bool injective_affine(const SpaceCurve& K, ProjPoint3& used_center, UniPoly& exclusion) {
    const auto& y = K.coords();
    for (const auto& cc : kAuxCenters) {
        ProjPoint3 center(cc[0], cc[1], cc[2], cc[3]);
        if (K.contains(center)) continue;
        auto rows = projection_map(center);
        std::array<UniPoly, 3> proj;
        for (size_t r = 0; r < 3; ++r) {
            UniPoly acc;
            for (size_t j = 0; j < 4; ++j) acc += y[j].scaled(rows[r][j]);
            proj[r] = acc;
        }
        int m = std::max({proj[0].degree(), proj[1].degree(), proj[2].degree()});
        if (m != K.degree()) continue;  // center effectively on the curve at infinity
        UniPoly pg = poly_gcd(poly_gcd(proj[0], proj[1]), proj[2]);
        if (pg.degree() > 0) continue;
        DPSolution sol;
        try {
            sol = solve_dd_system(proj[0], proj[1], proj[2], m);
        } catch (const NonGenericProjection&) {
            continue;
        }
        if (sol.expected == 0) {
            used_center = center;
            exclusion = UniPoly::constant(Rat(1));
            return true;
        }
        // a genuine curve double point also kills the minors against a 4th form;
        // complete the projection rows with a form independent of them
        UniPoly r4;
        {
            // rows of projection_map have a pivot column zeroed; the pivot
            // coordinate itself completes the basis
            size_t pivot = 0;
            while (pivot < 4 && center.x[pivot].is_zero()) ++pivot;
            r4 = y[pivot];
        }
        UniPoly common = sol.G;
        for (size_t r = 0; r < 3 && common.degree() > 0; ++r) {
            BiPoly dd = divided_difference_ef(proj[r], r4);
            BiPoly sheared = shear_x(dd, sol.lambda);
            UniPoly val = eval_y_fraction_cleared(sheared, sol.u, sol.v, sol.G);
            common = val.is_zero() ? common : poly_gcd(common, val);
        }
        used_center = center;
        exclusion = common;
        if (common.degree() == 0) return true;
        // double point certified: isolate the offending parameters
        std::ostringstream os;
        os << "double point in P^3;";
        UniPoly params = sol.param_poly(common);
        auto iso = params.degree() > 0 ? isolate_real_roots(BinForm::of(squarefree_part(params)))
                                       : RootIsolation{};
        if (iso.intervals.empty()) {
            os << " complex parameter pair";
        } else {
            os << " parameters in";
            for (const auto& iv : iso.intervals)
                os << " (" << iv.lo.to_string() << ", " << iv.hi.to_string() << "]";
        }
        throw SelfIntersecting(os.str());
    }
    return false;
}

}  // namespace

SmoothnessCertificate check_smooth(const SpaceCurve& K) {
    check_immersed(K);
    SmoothnessCertificate cert;
    cert.immersed = true;
    if (!injective_affine(K, cert.witness_center, cert.exclusion_poly))
        throw SelfIntersecting("no auxiliary projection separated the parametrization");
    ProjPoint3 flip_center;
    UniPoly flip_excl;
    if (!injective_affine(K.flipped(), flip_center, flip_excl))
        throw SelfIntersecting("no auxiliary projection separated the flipped parametrization");
    cert.injective = true;
    return cert;
}

// --- torsion ------------------------------------------------------------------

UniPoly torsion_numerator(const SpaceCurve& K, const AffineChart3& chart) {
    const auto& y = K.coords();
    std::array<std::array<UniPoly, 4>, 4> col;  // col[k] = k-th derivative of chart . gamma
    for (size_t i = 0; i < 4; ++i) {
        UniPoly acc;
        for (size_t j = 0; j < 4; ++j) acc += y[j].scaled(chart.m[i][j]);
        col[0][i] = acc;
    }
    for (size_t k = 1; k < 4; ++k)
        for (size_t i = 0; i < 4; ++i) col[k][i] = col[k - 1][i].derivative();
    // det of the 4x4 with entries col[k][i] (columns = derivative order)
    UniPoly det;
    std::array<size_t, 4> perm{0, 1, 2, 3};
    // Laplace over permutations is fine at this size
    int signs[24];
    std::array<std::array<size_t, 4>, 24> perms;
    int np = 0;
    std::sort(perm.begin(), perm.end());
    do {
        perms[static_cast<size_t>(np)] = perm;
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        signs[np] = (inv % 2 == 0) ? 1 : -1;
        ++np;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int p = 0; p < np; ++p) {
        UniPoly term = UniPoly::constant(Rat(signs[p]));
        for (size_t k = 0; k < 4; ++k) term = term * col[k][perms[static_cast<size_t>(p)][k]];
        det += term;
    }
    return det;
}

TorsionProfile torsion_profile(const SpaceCurve& K, const AffineChart3& chart) {
    if (chart.orientation() <= 0) throw Error("torsion_profile requires a positively oriented chart");
    TorsionProfile out;
    out.numerator = torsion_numerator(K, chart);
    out.numerator_flip = torsion_numerator(K.flipped(), chart);
    if (out.numerator.is_zero()) throw Error("degenerate curve: torsion numerator vanishes");

    // chart transversality: h . gamma must be squarefree (and at infinity)
    UniPoly h_comp;
    for (size_t j = 0; j < 4; ++j) h_comp += K.coord(static_cast<int>(j)).scaled(chart.m[0][j]);
    if (h_comp.is_zero()) throw ChartHitsCurveTangentially("curve lies in the chart's infinity plane");
    if (poly_gcd(h_comp, h_comp.derivative()).degree() > 0)
        throw ChartHitsCurveTangentially("chart infinity plane tangent to the curve");

    // sign data
    auto zero_iso = [&]() {
        if (out.numerator.degree() == 0) return RootIsolation{};
        return isolate_real_roots(BinForm::of(out.numerator));
    }();
    out.zero_params = zero_iso.intervals;

    // boundaries: roots of the numerator and of the chart plane composition
    std::vector<Rat> cuts;
    for (const auto& iv : zero_iso.intervals) {
        cuts.push_back(iv.lo);
        cuts.push_back(iv.hi);
    }
    if (h_comp.degree() > 0)
        for (const auto& iv : isolate_real_roots(BinForm::of(h_comp)).intervals) {
            cuts.push_back(iv.lo);
            cuts.push_back(iv.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    IntPoly in = IntPoly::from(out.numerator);
    auto sign_at = [&](const Rat& r) { return in.sign_at(r); };
    TorsionProfile::SignInterval cur;
    cur.lo_unbounded = true;
    Rat sample = cuts.empty() ? Rat(0) : cuts.front() - Rat(1);
    cur.sign = sign_at(sample);
    for (size_t i = 0; i < cuts.size(); ++i) {
        Rat next_sample = (i + 1 < cuts.size()) ? (cuts[i] + cuts[i + 1]) * Rat(1, 2) : cuts[i] + Rat(1);
        int s = sign_at(next_sample);
        if (s != cur.sign) {
            cur.hi = cuts[i];
            cur.hi_unbounded = false;
            out.sign_intervals.push_back(cur);
            cur = TorsionProfile::SignInterval{};
            cur.lo = cuts[i];
            cur.sign = s;
        }
    }
    cur.hi_unbounded = true;
    out.sign_intervals.push_back(cur);

    out.sign_at_infinity = IntPoly::from(out.numerator_flip).sign_at(Rat(0));
    out.everywhere_positive = zero_iso.intervals.empty() &&
                              out.sign_intervals.size() == 1 &&
                              out.sign_intervals[0].sign > 0 && out.sign_at_infinity > 0;
    return out;
}

}  // namespace algknot
