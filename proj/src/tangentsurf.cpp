#include "algknot/tangentsurf.hpp"

#include "algknot/errors.hpp"

namespace algknot {

TangentFamily sample_tangents(const SpaceCurve& K, int n) {
    if (n < 2) throw Error("sample_tangents needs at least two parameters");
    TangentFamily fam;
    fam.params.push_back(RP1Param::infinity());
    // n-1 finite parameters spread over halves
    for (int k = 0; static_cast<int>(fam.params.size()) < n; ++k) {
        Rat t(2 * k - (n - 2), 2);
        fam.params.push_back(RP1Param::finite(t));
    }
    for (const auto& p : fam.params) fam.lines.push_back(tangent_line(K, p));
    return fam;
}

DisjointnessReport check_tangent_disjointness(const SpaceCurve& K, int n) {
    TangentFamily fam = sample_tangents(K, n);
    DisjointnessReport rep;
    for (size_t i = 0; i < fam.lines.size(); ++i)
        for (size_t j = i + 1; j < fam.lines.size(); ++j) {
            ++rep.pairs_checked;
            if (line_pairing(fam.lines[i], fam.lines[j]).is_zero()) {
                rep.disjoint = false;
                if (!rep.first_violation)
                    rep.first_violation = std::make_pair(fam.params[i], fam.params[j]);
            }
        }
    return rep;
}

ViewpointClass classify_viewpoint(const SpaceCurve& K, const ProjPoint3& p,
                                  bool refine_with_hyp, int raster_resolution) {
    if (K.contains(p)) throw Error("classify_viewpoint requires a point off the curve");
    PlaneProjection proj = PlaneProjection::project(K, p);
    DoublePointAnalysis a;
    try {
        a = double_points(proj);
    } catch (const NonGenericDetail& e) {
        if (e.flags.has_cusp) return ViewpointClass{RegionLabel::OnTangentSurface, 0, 0, 0, false};
        throw;
    }
    ViewpointClass out{RegionLabel::U1, a.crossing_count(), a.solitary_count(),
                       a.imaginary_count(), false};
    const int nd = max_writhe(K.degree());
    if (out.solitaries == 0 && out.crossings == nd && out.imaginary == 0) {
        out.label = RegionLabel::U1;
        return out;
    }
    if (out.solitaries == 1 && out.crossings == nd - 1 && out.imaginary == 0) {
        out.label = RegionLabel::U2;
        if (refine_with_hyp) {
            // consistency data: U2 viewpoints carry a node-concentrated
            // hyperbolicity region
            HypRegion reg = hyp_region(proj, raster_resolution);
            out.used_hyp_refinement = true;
            if (reg.kind == HypRegionKind::Interior)
                throw AmbiguousCensus("solitary census with an interior hyperbolicity region");
        }
        return out;
    }
    throw AmbiguousCensus("census (" + std::to_string(out.crossings) + " crossings, " +
                          std::to_string(out.solitaries) + " solitary, " +
                          std::to_string(out.imaginary) +
                          " imaginary) matches neither region of a maximally writhed curve");
}

namespace {

int plane_real_intersections(const SpaceCurve& K, const ProjLine3& L, PlaneP3& used_plane) {
    auto [a, b] = line_span(L);
    static const std::array<std::array<long, 4>, 8> extras = {{{1, 0, 0, 0},
                                                               {0, 1, 0, 0},
                                                               {0, 0, 1, 0},
                                                               {0, 0, 0, 1},
                                                               {1, 1, 0, 0},
                                                               {1, -1, 1, 0},
                                                               {1, 2, -1, 3},
                                                               {2, -1, 1, 1}}};
    for (const auto& e : extras) {
        ProjPoint3 r;
        try {
            r = ProjPoint3(Rat(e[0]), Rat(e[1]), Rat(e[2]), Rat(e[3]));
            if (point_on_line(r, L)) continue;
            PlaneP3 h = plane_through(L, r);
            UniPoly comp;
            for (size_t j = 0; j < 4; ++j) comp += K.coord(static_cast<int>(j)).scaled(h.a[j]);
            if (comp.is_zero()) continue;
            int inf_mult = K.degree() - comp.degree();
            if (inf_mult > 1) continue;  // tangent at t = infinity
            if (poly_gcd(comp, comp.derivative()).degree() > 0)
                continue;  // non-transverse plane: retry within the pencil
            int count = SturmChain(comp).count_all() + inf_mult;
            used_plane = h;
            return count;
        } catch (const DegeneratePosition&) {
            continue;
        }
    }
    throw NonTransversePlane("no transversal plane found in the pencil");
}

}  // namespace

WindingClasses winding_classes(const SpaceCurve& K, const ProjLine3& L1, const ProjLine3& L2) {
    WindingClasses out;
    out.a = plane_real_intersections(K, L1, out.plane1);
    out.b = plane_real_intersections(K, L2, out.plane2);
    return out;
}

}  // namespace algknot
