#include "algknot/hyperbolicity.hpp"

#include <atomic>
#include <thread>

#include "algknot/errors.hpp"
#include "algknot/interval.hpp"
#include "algknot/rng.hpp"

namespace algknot {

namespace {

// pullbacks of the two pivot-rule lines through q, as degree-m forms
std::pair<BinForm, BinForm> pencil_pullbacks(const PlaneProjection& P, const ProjPoint2& q) {
    const auto& xyz = P.coords();
    size_t pivot = 0;
    while (pivot < 3 && q.x[pivot].is_zero()) ++pivot;
    std::array<UniPoly, 2> comp;
    size_t r = 0;
    for (size_t j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        comp[r] = xyz[j] - xyz[pivot].scaled(q.x[j]);
        ++r;
    }
    return {BinForm(comp[0], P.degree()), BinForm(comp[1], P.degree())};
}

int member_real_mult(const BinForm& F) {
    int total = F.infinity_mult();
    if (F.affine().degree() > 0)
        for (const auto& [fac, mult] : squarefree_decomposition(F.affine()))
            total += mult * SturmChain(fac).count_all();
    return total;
}

}  // namespace

bool hyp_point_verdict(const PlaneProjection& P, const ProjPoint2& q) {
    auto [A, B] = pencil_pullbacks(P, q);
    if (A.is_zero() && B.is_zero()) return true;  // the whole curve maps to q
    if (A.is_zero() || B.is_zero()) {
        const BinForm& other = A.is_zero() ? B : A;
        return pencil_totally_real(other, other, false);
    }
    return pencil_totally_real(A, B, false);
}

HypCertificate is_hyperbolic_point(const PlaneProjection& P, const ProjPoint2& q) {
    HypCertificate cert;
    cert.point = q;
    auto [A, B] = pencil_pullbacks(P, q);
    cert.P = A;
    cert.Q = B;
    cert.verdict = hyp_point_verdict(P, q);
    if (!cert.verdict) {
        const int m = P.degree();
        if (!A.is_zero() && member_real_mult(A) != m) {
            cert.violating_generator_P = true;
        } else if (!B.is_zero() && member_real_mult(B) != m) {
            cert.violating_generator_Q = true;
        } else {
            for (int num = -64; num <= 64 && !cert.violating_lambda; ++num) {
                Rat lam(num, 8);
                BinForm member(A.affine() + B.affine().scaled(lam), m);
                if (member.is_zero()) continue;
                if (member_real_mult(member) != m) cert.violating_lambda = lam;
            }
        }
    }
    return cert;
}

LineHypResult is_hyperbolic_line(const SpaceCurve& K, const ProjLine3& L) {
    auto [a, b] = line_span(L);
    // a rational point of RL off the curve
    std::optional<ProjPoint3> via;
    for (int k = 0; k < 32 && !via; ++k) {
        ProjPoint3 cand = a;
        if (k == 1) cand = b;
        if (k >= 2) {
            std::array<Rat, 4> c{};
            Rat w1(k - 1), w2(1);
            for (size_t j = 0; j < 4; ++j) c[j] = a.x[j] * w1 + b.x[j] * w2;
            cand = ProjPoint3(c[0], c[1], c[2], c[3]);
        }
        if (!K.contains(cand)) via = cand;
    }
    if (!via) throw Error("no rational point of the line lies off the curve");
    PlaneProjection proj = PlaneProjection::project(K, *via);
    // image of the line = image of any other of its points
    ProjPoint3 other = (*via == a) ? b : a;
    ProjPoint2 q = apply_projection(proj.rows(), other);
    LineHypResult out;
    out.via_point = *via;
    out.cert = is_hyperbolic_point(proj, q);
    out.hyperbolic = out.cert.verdict;
    return out;
}

// --- raster -------------------------------------------------------------------

HypRegion hyp_region(const PlaneProjection& P, int resolution) {
    if (resolution < 2) throw Error("hyp_region resolution too small");
    HypRegion out;
    out.resolution = resolution;
    const int m = P.degree();

    // interval images of the coordinate polynomials
    std::array<DIPoly, 3> di;
    for (size_t i = 0; i < 3; ++i) {
        const auto& c = P.coords()[i].coeffs();
        di[i].resize(static_cast<size_t>(m) + 1, DI::exact(0));
        for (size_t k = 0; k < c.size(); ++k) di[i][k] = DI::from_rat(c[k]);
    }

    std::atomic<int> flagged{0}, fallbacks{0};
    for (int chart = 0; chart < 3; ++chart)
        out.flags[static_cast<size_t>(chart)].assign(
            static_cast<size_t>(resolution) * static_cast<size_t>(resolution), 0);

    auto cell_coord = [&](int idx) { return Rat(2 * idx - resolution, resolution); };

    auto run_rows = [&](int chart, int v0, int v1) {
        size_t piv = static_cast<size_t>(chart);
        size_t j1 = (piv + 1) % 3, j2 = (piv + 2) % 3;
        if (j1 > j2) std::swap(j1, j2);
        for (int v = v0; v < v1; ++v) {
            Rat vy = cell_coord(v);
            DI vyi = DI::from_rat(vy);
            for (int u = 0; u < resolution; ++u) {
                Rat ux = cell_coord(u);
                DI uxi = DI::from_rat(ux);
                // pencil generators (x_{j1} - u x_piv, x_{j2} - v x_piv)
                DIPoly p1(static_cast<size_t>(m) + 1), p2(static_cast<size_t>(m) + 1);
                for (size_t k = 0; k <= static_cast<size_t>(m); ++k) {
                    p1[k] = di[j1][k] - uxi * di[piv][k];
                    p2[k] = di[j2][k] - vyi * di[piv][k];
                }
                Tri t = hyp_pencil_filter(p1, p2, m);
                bool val;
                if (t == Tri::Unknown) {
                    fallbacks.fetch_add(1, std::memory_order_relaxed);
                    std::array<Rat, 3> q{};
                    q[piv] = Rat(1);
                    q[j1] = ux;
                    q[j2] = vy;
                    val = hyp_point_verdict(P, ProjPoint2(q[0], q[1], q[2]));
                } else {
                    val = (t == Tri::True);
                }
                if (val) {
                    out.flags[static_cast<size_t>(chart)]
                             [static_cast<size_t>(v) * static_cast<size_t>(resolution) +
                              static_cast<size_t>(u)] = 1;
                    flagged.fetch_add(1, std::memory_order_relaxed);
                }
            }
        }
    };

    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    for (int chart = 0; chart < 3; ++chart) {
        std::vector<std::thread> pool;
        int chunk = (resolution + static_cast<int>(nthreads) - 1) / static_cast<int>(nthreads);
        for (unsigned th = 0; th < nthreads; ++th) {
            int v0 = static_cast<int>(th) * chunk;
            int v1 = std::min(resolution, v0 + chunk);
            if (v0 >= v1) break;
            pool.emplace_back(run_rows, chart, v0, v1);
        }
        for (auto& th : pool) th.join();
    }
    out.flagged_count = flagged.load();
    out.exact_fallbacks = fallbacks.load();

    // solitary node locations, when the projection is generic
    std::vector<std::array<double, 3>> nodes;
    try {
        auto a = double_points(P);
        for (const auto& dp : a.points)
            if (dp.is_solitary()) nodes.push_back(dp.image_approx);
    } catch (const NonGenericProjection&) {
    }
    out.solitary_nodes = static_cast<int>(nodes.size());

    // trichotomy
    bool interior = false;
    for (int chart = 0; chart < 3 && !interior; ++chart)
        for (int v = 1; v + 1 < resolution && !interior; ++v)
            for (int u = 1; u + 1 < resolution && !interior; ++u)
                if (out.flag(chart, u, v) && out.flag(chart, u - 1, v) && out.flag(chart, u + 1, v) &&
                    out.flag(chart, u, v - 1) && out.flag(chart, u, v + 1))
                    interior = true;
    auto near_some_node = [&](int chart, int u, int v) {
        double cu = (2.0 * u) / resolution - 1.0;
        double cv = (2.0 * v) / resolution - 1.0;
        double cell = 2.0 / resolution;
        for (const auto& nd : nodes) {
            double piv = nd[static_cast<size_t>(chart)];
            if (std::fabs(piv) < 1e-12) continue;
            size_t j1 = (static_cast<size_t>(chart) + 1) % 3, j2 = (static_cast<size_t>(chart) + 2) % 3;
            if (j1 > j2) std::swap(j1, j2);
            double nu = nd[j1] / piv, nv = nd[j2] / piv;
            if (std::fabs(nu - cu) <= 1.6 * cell && std::fabs(nv - cv) <= 1.6 * cell) return true;
        }
        return false;
    };
    bool all_near_node = !nodes.empty();
    // flagged cells may also all sit inside one 3x3 block of a single chart
    // (a cusp carries a one-point region without any solitary node)
    int block_chart = -1, umin = 0, umax = 0, vmin = 0, vmax = 0;
    bool one_block = true, seen_any = false;
    for (int chart = 0; chart < 3; ++chart)
        for (int v = 0; v < resolution; ++v)
            for (int u = 0; u < resolution; ++u) {
                if (!out.flag(chart, u, v)) continue;
                if (!seen_any) {
                    seen_any = true;
                    block_chart = chart;
                    umin = umax = u;
                    vmin = vmax = v;
                } else if (chart != block_chart) {
                    one_block = false;
                } else {
                    umin = std::min(umin, u);
                    umax = std::max(umax, u);
                    vmin = std::min(vmin, v);
                    vmax = std::max(vmax, v);
                }
                if (all_near_node && !near_some_node(chart, u, v)) all_near_node = false;
            }
    one_block = seen_any && one_block && (umax - umin <= 2) && (vmax - vmin <= 2);

    if (interior)
        out.kind = HypRegionKind::Interior;
    else if ((out.flagged_count > 0 && (all_near_node || one_block)) ||
             (out.flagged_count == 0 && !nodes.empty()))
        out.kind = HypRegionKind::Concentrated;
    else if (out.flagged_count == 0)
        out.kind = HypRegionKind::Empty;
    else
        out.kind = HypRegionKind::Thin;
    return out;
}

std::optional<std::array<ProjPoint2, 3>> hyp_interior_witness(const PlaneProjection& P,
                                                              const DoublePointAnalysis& a) {
    if (!a.proj) return std::nullopt;
    const PlaneProjection& Q = *a.proj;
    // anchors: the crossing images evaluated exactly at refined parameters,
    // each with the wedge directions spanned by the two branch tangents
    struct Anchor {
        size_t pivot;
        Rat ax, ay;                         // affine coordinates in the pivot chart
        std::vector<std::array<Rat, 2>> dirs;
    };
    auto to_dir = [](double x, double y) {
        double n = std::hypot(x, y);
        if (!(n > 0) || !std::isfinite(n)) return std::array<Rat, 2>{Rat(0), Rat(0)};
        long sx = std::lround(x / n * 1048576.0), sy = std::lround(y / n * 1048576.0);
        return std::array<Rat, 2>{Rat(sx, 1048576), Rat(sy, 1048576)};
    };
    std::vector<Anchor> anchors;
    for (const auto& dp : a.points) {
        if (!dp.is_crossing()) continue;
        RealAlg pu = *dp.param_under, po = *dp.param_over;
        pu.refine_below_width(Rat(1, BigInt(1) << 48));
        Rat t1 = pu.mid();
        std::array<Rat, 3> img{Q.coords()[0].eval(t1), Q.coords()[1].eval(t1),
                               Q.coords()[2].eval(t1)};
        size_t pivot = 0;
        for (size_t j = 1; j < 3; ++j)
            if (img[j].abs() > img[pivot].abs()) pivot = j;
        if (img[pivot].is_zero()) continue;
        size_t j1 = (pivot + 1) % 3, j2 = (pivot + 2) % 3;
        if (j1 > j2) std::swap(j1, j2);
        Anchor anc;
        anc.pivot = pivot;
        anc.ax = img[j1] / img[pivot];
        anc.ay = img[j2] / img[pivot];
        // branch tangents in this chart at both parameters (approximate
        // directions suffice: the offsets are verified exactly)
        auto tangent = [&](RealAlg par) {
            par.refine_below_width(Rat(1, BigInt(1) << 48));
            Rat t = par.mid();
            Rat piv = Q.coords()[pivot].eval(t);
            if (piv.is_zero()) return std::array<Rat, 2>{Rat(0), Rat(0)};
            auto dcoord = [&](size_t j) {
                return (Q.coords()[j].derivative().eval(t) * piv -
                        Q.coords()[j].eval(t) * Q.coords()[pivot].derivative().eval(t)) /
                       (piv * piv);
            };
            return to_dir(dcoord(j1).to_double(), dcoord(j2).to_double());
        };
        auto v1 = tangent(pu), v2 = tangent(po);
        for (int s1 = -1; s1 <= 1; s1 += 2)
            for (int s2 = -1; s2 <= 1; s2 += 2)
                anc.dirs.push_back({v1[0] * Rat(s1) + v2[0] * Rat(s2),
                                    v1[1] * Rat(s1) + v2[1] * Rat(s2)});
        static const int coord_dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                             {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        for (const auto& dd : coord_dirs)
            anc.dirs.push_back({Rat(dd[0]), Rat(dd[1])});
        anchors.push_back(std::move(anc));
    }
    if (anchors.empty()) return std::nullopt;

    std::vector<ProjPoint2> hits;
    auto collinear = [](const ProjPoint2& u, const ProjPoint2& v, const ProjPoint2& w) {
        std::array<std::array<Rat, 3>, 3> m{u.x, v.x, w.x};
        return det3(m).is_zero();
    };
    auto try_point = [&](const Anchor& anc, const Rat& x,
                         const Rat& y) -> std::optional<std::array<ProjPoint2, 3>> {
        std::array<Rat, 3> c{};
        c[anc.pivot] = Rat(1);
        size_t j1 = (anc.pivot + 1) % 3, j2 = (anc.pivot + 2) % 3;
        if (j1 > j2) std::swap(j1, j2);
        c[j1] = x;
        c[j2] = y;
        ProjPoint2 q(c[0], c[1], c[2]);
        for (const auto& h : hits)
            if (h == q) return std::nullopt;
        if (!hyp_point_verdict(P, q)) return std::nullopt;
        if (P.image_contains(q)) return std::nullopt;
        hits.push_back(q);
        for (size_t i = 0; i < hits.size(); ++i)
            for (size_t j = i + 1; j < hits.size(); ++j)
                for (size_t k = j + 1; k < hits.size(); ++k)
                    if (!collinear(hits[i], hits[j], hits[k]))
                        return std::array<ProjPoint2, 3>{hits[i], hits[j], hits[k]};
        return std::nullopt;
    };
    for (int scale = 4; scale <= 40; scale += 2) {
        Rat step(1, BigInt(1) << scale);
        for (const auto& anc : anchors)
            for (const auto& dd : anc.dirs) {
                if (dd[0].is_zero() && dd[1].is_zero()) continue;
                if (auto w = try_point(anc, anc.ax + dd[0] * step, anc.ay + dd[1] * step)) return w;
            }
    }
    return std::nullopt;
}

// --- the two hyperbolic lines ---------------------------------------------------

HypLinePair find_hyperbolic_lines(const SpaceCurve& K, std::uint64_t seed, int budget) {
    const int d = K.degree();
    {
        WritheReport rep = encomplexed_writhe(K, random_center(K, seed + 17, 0), 16);
        if (rep.w != max_writhe(d) && rep.w != -max_writhe(d))
            throw NotMW("writhe " + std::to_string(rep.w) + " is not maximal for degree " +
                        std::to_string(d));
    }

    HypLinePair out;
    bool have_l2 = false, have_l1 = false;
    int attempts = 0;

    // L2: a real secant through a conjugate pair gamma(t0 +- i tau); as tau
    // shrinks it approaches the tangent line, which is hyperbolic, and the
    // exact test certifies each candidate
    static const Rat t0s[] = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(2), Rat(-1, 2), Rat(-2), Rat(3)};
    for (const Rat& t0 : t0s) {
        if (have_l2 || attempts >= budget) break;
        for (int kk = 2; kk <= 8 && !have_l2 && attempts < budget; ++kk) {
            ++attempts;
            Rat tau(1, 1 << kk);
            // gamma(t0 + i tau) via complex rational arithmetic
            std::array<Rat, 4> re{}, im{};
            for (size_t i = 0; i < 4; ++i) {
                Rat ar(0), ai(0);
                const UniPoly& y = K.coord(static_cast<int>(i));
                for (int k = y.degree(); k >= 0; --k) {
                    Rat nr = ar * t0 - ai * tau + y.coeff(k);
                    Rat ni = ar * tau + ai * t0;
                    ar = nr;
                    ai = ni;
                }
                re[i] = ar;
                im[i] = ai;
            }
            // Pluecker of the real line through A and conj(A): (A_i conj(A_j)
            // - A_j conj(A_i)) / (2i) = im_j re_i - im_i re_j
            ProjLine3 L;
            auto pl = [&](size_t i, size_t j) { return re[i] * im[j] - re[j] * im[i]; };
            L.pl = {pl(0, 1), pl(0, 2), pl(0, 3), pl(1, 2), pl(1, 3), pl(2, 3)};
            if (L.is_zero()) continue;
            L.canonicalize();
            if (!L.quadric_residual().is_zero()) continue;
            // the line must meet K exactly at the pair: the pencil of planes
            // through L pulls back with gcd equal to the minimal quadratic
            UniPoly quad(std::vector<Rat>{t0 * t0 + tau * tau, -(t0 + t0), Rat(1)});
            PlaneP3 h1, h2;
            try {
                // two planes through L via two off-line points
                ProjPoint3 e0(Rat(1), Rat(0), Rat(0), Rat(0));
                ProjPoint3 e1(Rat(0), Rat(1), Rat(0), Rat(0));
                ProjPoint3 e2(Rat(0), Rat(0), Rat(1), Rat(0));
                ProjPoint3 picks[3] = {e0, e1, e2};
                int got = 0;
                for (const auto& e : picks) {
                    if (point_on_line(e, L)) continue;
                    PlaneP3 h = plane_through(L, e);
                    if (got == 0)
                        h1 = h;
                    else if (!(h == h1)) {
                        h2 = h;
                        ++got;
                        break;
                    }
                    ++got;
                }
                if (got < 2) continue;
            } catch (const DegeneratePosition&) {
                continue;
            }
            UniPoly c1, c2;
            for (size_t j = 0; j < 4; ++j) {
                c1 += K.coord(static_cast<int>(j)).scaled(h1.a[j]);
                c2 += K.coord(static_cast<int>(j)).scaled(h2.a[j]);
            }
            UniPoly g = poly_gcd(c1, c2);
            if (!(g == quad.monic())) continue;  // tangency or extra meetings
            if (point_on_line(K.eval_infinity(), L)) continue;
            try {
                auto res = is_hyperbolic_line(K, L);
                if (!res.hyperbolic) continue;
                out.L2 = L;
                out.l2_common = g;
                out.l2_via = res.via_point;
                have_l2 = true;
            } catch (const Error&) {
                continue;
            }
        }
    }
    if (!have_l2) throw SearchFailed("no hyperbolic conjugate-secant line found within budget");

    // L1: project from a tangent-side perturbed point whose census has no
    // solitary node, pick a certified interior hyperbolic image point, and
    // take its fiber line
    for (const Rat& t0 : t0s) {
        if (have_l1 || attempts >= budget) break;
        ProjPoint3 base;
        ProjLine3 tp;
        std::array<std::array<Rat, 4>, 4> frame{};
        try {
            tp = tangent_line(K, t0);
            ProjPoint3 at = K.eval(t0);
            auto [sa, sb] = line_span(tp);
            base = (sa == at) ? sb : sa;
            // osculating plane at t0
            std::array<Rat, 4> g0, g1, g2;
            auto der = K.derivative();
            std::array<UniPoly, 4> dd2;
            for (size_t i = 0; i < 4; ++i) dd2[i] = der[i].derivative();
            for (size_t i = 0; i < 4; ++i) {
                g0[i] = K.coord(static_cast<int>(i)).eval(t0);
                g1[i] = der[i].eval(t0);
                g2[i] = dd2[i].eval(t0);
            }
            frame[0] = g0;
            frame[1] = g1;
            frame[2] = g2;
        } catch (const Error&) {
            continue;
        }
        // direction off the osculating plane: a basis vector maximizing the
        // independence determinant
        for (int bi = 0; bi < 4 && !have_l1 && attempts < budget; ++bi) {
            std::array<Rat, 4> r{};
            r[static_cast<size_t>(bi)] = Rat(1);
            frame[3] = r;
            if (det4(frame).is_zero()) continue;
            for (int kk = 2; kk <= 7 && !have_l1 && attempts < budget; ++kk) {
                for (int side = -1; side <= 1 && !have_l1; side += 2) {
                    ++attempts;
                    Rat eps = Rat(side, 1 << kk);
                    std::array<Rat, 4> c{};
                    for (size_t j = 0; j < 4; ++j) c[j] = base.x[j] + r[j] * eps;
                    ProjPoint3 cand(c[0], c[1], c[2], c[3]);
                    if (K.contains(cand)) continue;
                    try {
                        PlaneProjection proj = PlaneProjection::project(K, cand);
                        auto a = double_points(proj);
                        if (a.solitary_count() != 0) continue;  // the node side
                        // low-resolution raster to locate an interior point
                        HypRegion reg = hyp_region(proj, 48);
                        if (reg.kind != HypRegionKind::Interior) continue;
                        // first interior cell center
                        for (int chart = 0; chart < 3 && !have_l1; ++chart)
                            for (int v = 1; v + 1 < reg.resolution && !have_l1; ++v)
                                for (int u = 1; u + 1 < reg.resolution && !have_l1; ++u) {
                                    if (!(reg.flag(chart, u, v) && reg.flag(chart, u - 1, v) &&
                                          reg.flag(chart, u + 1, v) && reg.flag(chart, u, v - 1) &&
                                          reg.flag(chart, u, v + 1)))
                                        continue;
                                    std::array<Rat, 3> q{};
                                    q[static_cast<size_t>(chart)] = Rat(1);
                                    size_t j1 = (static_cast<size_t>(chart) + 1) % 3,
                                           j2 = (static_cast<size_t>(chart) + 2) % 3;
                                    if (j1 > j2) std::swap(j1, j2);
                                    q[j1] = Rat(2 * u - reg.resolution, reg.resolution);
                                    q[j2] = Rat(2 * v - reg.resolution, reg.resolution);
                                    ProjPoint2 qq(q[0], q[1], q[2]);
                                    auto [A, B] = pencil_pullbacks(proj, qq);
                                    if (A.is_zero() || B.is_zero()) continue;
                                    Rat rres = resultant(A.affine(), B.affine());
                                    if (rres.is_zero()) continue;  // q on the image curve
                                    if (A.infinity_mult() > 0 && B.infinity_mult() > 0) continue;
                                    if (!hyp_point_verdict(proj, qq)) continue;
                                    ProjLine3 L1 = fiber_line(cand, proj.rows(), qq);
                                    auto res2 = is_hyperbolic_line(K, L1);
                                    if (!res2.hyperbolic) continue;
                                    out.L1 = L1;
                                    out.q1 = qq;
                                    out.l1_pencil_resultant = rres;
                                    out.l1_via = cand;
                                    have_l1 = true;
                                }
                    } catch (const Error&) {
                        continue;
                    }
                }
            }
        }
    }
    if (!have_l1) throw SearchFailed("no disjoint hyperbolic line found within budget");
    return out;
}

}  // namespace algknot
