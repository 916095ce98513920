#include "algknot/dpsolve.hpp"

#include <sstream>

namespace algknot {

std::string GenericityFlags::describe() const {
    std::ostringstream os;
    os << "non-generic projection:";
    if (has_cusp) os << " cusp";
    if (has_tangential_pair) os << " tangential-pair";
    if (has_triple_point) os << " triple-point";
    if (base_point_on_curve) os << " base-point";
    if (elimination_collision) os << " elimination-collision";
    if (clean()) os << " (structure mismatch)";
    return os.str();
}

void interval_eval(const UniPoly& p, const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) {
    // Horner with interval coefficients; [lo, hi] must be ordered
    Rat alo(0), ahi(0);
    for (int k = p.degree(); k >= 0; --k) {
        // [alo, ahi] * [lo, hi]
        Rat c1 = alo * lo, c2 = alo * hi, c3 = ahi * lo, c4 = ahi * hi;
        Rat mn = std::min(std::min(c1, c2), std::min(c3, c4));
        Rat mx = std::max(std::max(c1, c2), std::max(c3, c4));
        alo = mn + p.coeff(k);
        ahi = mx + p.coeff(k);
    }
    out_lo = alo;
    out_hi = ahi;
}

void DPSolution::ef_intervals(RealAlg& x, Rat& elo, Rat& ehi, Rat& flo, Rat& fhi) const {
    while (true) {
        Rat ulo, uhi, vlo, vhi;
        interval_eval(u, x.lo(), x.hi(), ulo, uhi);
        interval_eval(v, x.lo(), x.hi(), vlo, vhi);
        if (ulo.sign() * uhi.sign() > 0) {
            // f = -v / u
            Rat c1 = -vlo / ulo, c2 = -vlo / uhi, c3 = -vhi / ulo, c4 = -vhi / uhi;
            flo = std::min(std::min(c1, c2), std::min(c3, c4));
            fhi = std::max(std::max(c1, c2), std::max(c3, c4));
            // e = x - lambda f
            Rat a = x.lo() - lambda * flo, b = x.lo() - lambda * fhi;
            Rat c = x.hi() - lambda * flo, d = x.hi() - lambda * fhi;
            elo = std::min(std::min(a, b), std::min(c, d));
            ehi = std::max(std::max(a, b), std::max(c, d));
            return;
        }
        x.refine();
    }
}

UniPoly DPSolution::param_poly(const UniPoly& factor) const {
    BiPoly Gx = BiPoly::of_y(factor);  // Y = x
    int du = u.degree(), dv = v.degree();
    int dmax = std::max(du + 1, dv + 1);
    std::vector<UniPoly> rows(static_cast<size_t>(dmax));
    for (int k = 0; k < dmax; ++k) {
        // coeff of x^k: u_k z^2 - (u_{k-1} + lambda v_k) z - v_k
        Rat uk = u.coeff(k), ukm1 = (k >= 1) ? u.coeff(k - 1) : Rat(0), vk = v.coeff(k);
        std::vector<Rat> zc{-vk, -(ukm1 + lambda * vk), uk};
        rows[static_cast<size_t>(k)] = UniPoly(std::move(zc));
    }
    return resultant_y(Gx, BiPoly(std::move(rows)));
}

namespace {

const Rat kShearCandidates[] = {Rat(0),  Rat(1),     Rat(-1),    Rat(2),
                                Rat(-2), Rat(1, 2),  Rat(-1, 2), Rat(3),
                                Rat(-3), Rat(1, 3),  Rat(-1, 3), Rat(5, 2)};

}  // namespace

DPSolution solve_dd_system(const UniPoly& X, const UniPoly& Y, const UniPoly& Z, int m,
                           bool allow_shared_params) {
    GenericityFlags flags;
    if (m < 1) throw Error("solve_dd_system: degree must be positive");
    const int expected = (m - 1) * (m - 2) / 2;

    BiPoly a = divided_difference_ef(X, Y);
    BiPoly b = divided_difference_ef(X, Z);
    BiPoly c = divided_difference_ef(Y, Z);

    DPSolution best;
    if (expected == 0) {
        // conics and lines have no double points; still report a trivial frame
        best.lambda = Rat(0);
        best.G = UniPoly::constant(Rat(1));
        best.u = UniPoly::constant(Rat(1));
        best.v = UniPoly();
        best.disc_num = UniPoly();
        best.psi = UniPoly::constant(Rat(1));
        best.expected = 0;
        return best;
    }
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw NonGenericDetail("degenerate coordinate minors", flags);

    int seen_count = -1;
    for (const Rat& lambda : kShearCandidates) {
        BiPoly as = shear_x(a, lambda);
        BiPoly bs = shear_x(b, lambda);
        BiPoly cs = shear_x(c, lambda);
        if (as.deg_y() < 1 || bs.deg_y() < 1 || cs.deg_y() < 1) continue;

        auto sab = subresultants01(as, bs);
        auto sac = subresultants01(as, cs);
        if (sab.res.is_zero() || sac.res.is_zero())
            throw NonGenericDetail("shared component in the double-point system", flags);

        UniPoly G = squarefree_part(poly_gcd(sab.res, sac.res));
        if (G.degree() == 0) {
            if (expected != 0) continue;  // lost everything: bad shear
        }
        // specialization validity: leading Y-coefficients and u must not
        // vanish on roots of G
        if (poly_gcd(G, as.leading_y()).degree() > 0) continue;
        if (poly_gcd(G, bs.leading_y()).degree() > 0) continue;
        if (poly_gcd(G, cs.leading_y()).degree() > 0) continue;
        if (poly_gcd(G, sab.s1_lin).degree() > 0) continue;
        if (poly_gcd(G, sac.s1_lin).degree() > 0) continue;

        // both eliminations must agree on f over every root of G
        UniPoly cross = sab.s1_const * sac.s1_lin - sac.s1_const * sab.s1_lin;
        if (!cross.is_zero()) {
            UniPoly Gf = poly_gcd(G, cross);
            G = Gf.degree() > 0 ? squarefree_part(Gf) : UniPoly::constant(Rat(1));
        }
        seen_count = std::max(seen_count, G.degree());
        if (G.degree() != expected) continue;

        const UniPoly& u = sab.s1_lin;
        const UniPoly& v = sab.s1_const;

        // confirm the third equation vanishes on all roots (paranoid: the
        // cross filter already forces it)
        UniPoly cval = eval_y_fraction_cleared(cs, u, v, G);
        if (!cval.is_zero() && poly_gcd(G, cval).degree() != G.degree())
            continue;

        // cusp screen: disc = 0 at a system solution
        UniPoly xu_lv = UniPoly::variable() * u + v.scaled(lambda);
        UniPoly delta = xu_lv * xu_lv + v * u.scaled(Rat(4));
        if (poly_gcd(G, delta).degree() > 0) {
            flags.has_cusp = true;
            throw NonGenericDetail(flags.describe(), flags);
        }

        DPSolution out;
        out.lambda = lambda;
        out.G = G;
        out.u = u;
        out.v = v;
        out.disc_num = delta;
        out.expected = expected;

        // parameter polynomial Psi(z) = Res_x(G, u z^2 - (x u + lambda v) z - v)
        UniPoly psi_raw = out.param_poly(G);
        if (psi_raw.is_zero()) continue;
        UniPoly psi = squarefree_part(psi_raw);
        if (psi_raw.degree() != 2 * expected) continue;
        // a repeated parameter across two double points means an ordinary
        // multiple point; psi_raw drops degree under squarefree
        if (psi.degree() != psi_raw.degree()) {
            if (!allow_shared_params) {
                flags.has_triple_point = true;
                throw NonGenericDetail(flags.describe(), flags);
            }
            out.shared_parameters = true;
        }
        out.psi = psi;
        out.real_roots = RealAlg::roots_of(G);
        out.complex_root_count = G.degree() - static_cast<int>(out.real_roots.size());
        return out;
    }

    // no shear worked: repeated elimination coordinates or genuinely
    // non-nodal structure (a tangential double point collapses the count)
    if (seen_count >= 0 && seen_count < expected) flags.has_tangential_pair = true;
    else flags.elimination_collision = true;
    throw NonGenericDetail(flags.describe(), flags);
}

}  // namespace algknot
