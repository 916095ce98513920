#include "algknot/json_io.hpp"

#include "algknot/errors.hpp"

namespace algknot {

namespace {

Json poly_to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

UniPoly poly_from_json(const Json& j) {
    std::vector<Rat> c;
    for (const auto& v : j) c.push_back(Rat::from_string(v.get<std::string>()));
    return UniPoly(std::move(c));
}

const char* kind_name(DoublePoint::Kind k) {
    switch (k) {
        case DoublePoint::Kind::crossing: return "crossing";
        case DoublePoint::Kind::solitary: return "solitary";
        default: return "imaginary_pair";
    }
}

}  // namespace

Json curve_to_json(const SpaceCurve& K) {
    Json j;
    j["schema"] = 1;
    j["degree"] = K.degree();
    Json coeffs = Json::array();
    for (int i = 0; i < 4; ++i) coeffs.push_back(poly_to_json(K.coord(i)));
    j["coeffs"] = coeffs;
    return j;
}

SpaceCurve curve_from_json(const Json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].size() != 4)
        throw Error("curve json needs a 4-element coeffs array");
    std::array<UniPoly, 4> y;
    for (size_t i = 0; i < 4; ++i) y[i] = poly_from_json(j["coeffs"][i]);
    SpaceCurve k(std::move(y));
    if (j.contains("degree") && j["degree"].get<int>() != k.degree())
        throw Error("curve json degree field disagrees with the coefficients");
    return k;
}

Json point3_to_json(const ProjPoint3& p) {
    Json arr = Json::array();
    for (const Rat& c : p.x) arr.push_back(c.to_string());
    return arr;
}

ProjPoint3 point3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error("point json must be a 4-array");
    std::array<Rat, 4> c;
    for (size_t i = 0; i < 4; ++i) c[i] = Rat::from_string(j[i].get<std::string>());
    return ProjPoint3(c[0], c[1], c[2], c[3]);
}

Json point2_to_json(const ProjPoint2& p) {
    Json arr = Json::array();
    for (const Rat& c : p.x) arr.push_back(c.to_string());
    return arr;
}

ProjPoint2 point2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw Error("plane point json must be a 3-array");
    std::array<Rat, 3> c;
    for (size_t i = 0; i < 3; ++i) c[i] = Rat::from_string(j[i].get<std::string>());
    return ProjPoint2(c[0], c[1], c[2]);
}

Json line3_to_json(const ProjLine3& l) {
    Json arr = Json::array();
    for (const Rat& c : l.pl) arr.push_back(c.to_string());
    return arr;
}

Json writhe_report_to_json(const WritheReport& r) {
    Json j;
    j["schema"] = 1;
    j["w"] = r.w;
    j["crossing_contribution"] = r.crossing_contribution;
    j["solitary_contribution"] = r.solitary_contribution;
    j["center"] = point3_to_json(r.center);
    j["census"] = Json{{"crossing", r.census_crossings},
                       {"solitary", r.census_solitary},
                       {"imaginary_pair", r.census_imaginary}};
    j["degree"] = r.degree;
    j["max_writhe"] = max_writhe(r.degree);
    j["attempts"] = r.attempts;
    return j;
}

Json double_points_to_json(const DoublePointAnalysis& a) {
    Json j;
    j["schema"] = 1;
    j["expected"] = a.sys.expected;
    Json pts = Json::array();
    for (const auto& dp : a.points) {
        Json p;
        p["kind"] = kind_name(dp.kind);
        if (dp.kind != DoublePoint::Kind::imaginary_pair) {
            p["sign"] = dp.sign;
            p["e_interval"] = Json::array({dp.e_lo.to_string(), dp.e_hi.to_string()});
            p["f_interval"] = Json::array({dp.f_lo.to_string(), dp.f_hi.to_string()});
            p["image_approx"] =
                Json::array({dp.image_approx[0], dp.image_approx[1], dp.image_approx[2]});
        }
        if (dp.is_crossing()) {
            auto iv = [](const RealAlg& r) {
                return Json::array({r.lo().to_string(), r.hi().to_string()});
            };
            p["under_param"] = iv(*dp.param_under);
            p["over_param"] = iv(*dp.param_over);
        }
        pts.push_back(p);
    }
    j["double_points"] = pts;
    j["census"] = Json{{"crossing", a.crossing_count()},
                       {"solitary", a.solitary_count()},
                       {"imaginary_pair", a.imaginary_count()}};
    return j;
}

Json smoothness_to_json(const SmoothnessCertificate& c) {
    Json j;
    j["immersed"] = c.immersed;
    j["injective"] = c.injective;
    j["witness_center"] = point3_to_json(c.witness_center);
    return j;
}

Json torsion_to_json(const TorsionProfile& t) {
    Json j;
    j["everywhere_positive"] = t.everywhere_positive;
    j["sign_at_infinity"] = t.sign_at_infinity;
    Json ivs = Json::array();
    for (const auto& iv : t.sign_intervals) {
        Json e;
        e["lo"] = iv.lo_unbounded ? Json(nullptr) : Json(iv.lo.to_string());
        e["hi"] = iv.hi_unbounded ? Json(nullptr) : Json(iv.hi.to_string());
        e["sign"] = iv.sign;
        ivs.push_back(e);
    }
    j["sign_intervals"] = ivs;
    Json zs = Json::array();
    for (const auto& z : t.zero_params)
        zs.push_back(Json::array({z.lo.to_string(), z.hi.to_string()}));
    j["zero_parameters"] = zs;
    return j;
}

Json hyp_region_to_json(const HypRegion& r, bool include_flags) {
    Json j;
    j["schema"] = 1;
    j["resolution"] = r.resolution;
    const char* kinds[] = {"empty", "concentrated", "interior", "thin"};
    j["kind"] = kinds[static_cast<int>(r.kind)];
    j["flagged_cells"] = r.flagged_count;
    j["solitary_nodes"] = r.solitary_nodes;
    j["exact_fallbacks"] = r.exact_fallbacks;
    if (include_flags) {
        Json charts = Json::array();
        for (int chart = 0; chart < 3; ++chart) {
            Json rows = Json::array();
            for (int v = 0; v < r.resolution; ++v) {
                std::string row(static_cast<size_t>(r.resolution), '0');
                for (int u = 0; u < r.resolution; ++u)
                    if (r.flag(chart, u, v)) row[static_cast<size_t>(u)] = '1';
                rows.push_back(row);
            }
            charts.push_back(rows);
        }
        j["flags"] = charts;
    }
    return j;
}

Json viewpoint_to_json(const ViewpointClass& v) {
    Json j;
    j["schema"] = 1;
    const char* labels[] = {"U1", "U2", "ON_T"};
    j["label"] = labels[static_cast<int>(v.label)];
    j["census"] = Json{{"crossing", v.crossings},
                       {"solitary", v.solitaries},
                       {"imaginary_pair", v.imaginary}};
    j["hyp_refined"] = v.used_hyp_refinement;
    return j;
}

Json laurent_to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (auto& [te, c] : p.terms()) {
        Json t;
        t["coeff"] = c;
        t["twice_exponent"] = te;
        terms.push_back(t);
    }
    Json j;
    j["terms"] = terms;
    j["display"] = p.to_string();
    return j;
}

Json identification_to_json(const TorusIdentification& t) {
    Json j;
    j["schema"] = 1;
    j["verdict"] = t.consistent ? "CONSISTENT" : "INCONSISTENT";
    j["torus_type"] = Json::array({t.p, t.q});
    j["mirrored"] = t.mirrored;
    j["lift_crossings"] = t.lift_crossings;
    j["lift_components"] = t.lift_components;
    j["jones_checked"] = t.jones_checked;
    if (t.jones_checked) {
        j["jones_lift"] = laurent_to_json(t.jones_lift);
        j["jones_reference"] = laurent_to_json(t.jones_reference);
    }
    j["alexander_checked"] = t.alexander_checked;
    if (t.alexander_checked) {
        j["alexander_lift"] = laurent_to_json(t.alexander_lift);
        j["alexander_reference"] = laurent_to_json(t.alexander_reference);
        j["alexander_closed_form"] = laurent_to_json(t.alexander_closed);
    }
    j["center"] = point3_to_json(t.center_used);
    j["note"] = t.note;
    return j;
}

Json mw_report_to_json(const MwReport& r) {
    Json j;
    j["schema"] = 1;
    j["degree"] = r.degree;
    j["max_writhe"] = max_writhe(r.degree);
    j["smooth"] = r.smooth;
    j["torsion_definite"] = r.torsion_definite;
    j["torsion_sign"] = r.torsion_sign;
    j["w"] = r.w;
    j["centers_checked"] = r.centers_checked;
    j["writhe_constant"] = r.writhe_constant;
    j["census_ok"] = r.census_ok;
    j["is_mw"] = r.is_mw;
    j["mirror_of_maximal"] = r.mirror_of_maximal;
    return j;
}

Json proj_diagram_to_json(const ProjDiagram& d) {
    Json j;
    j["schema"] = 1;
    j["gauss_code"] = d.gauss_code();
    j["signs"] = d.signs;
    j["antipodal"] = d.antipodal;
    j["solitary_count"] = d.solitary_count;
    j["curve_degree"] = d.curve_degree;
    j["center"] = point3_to_json(d.center);
    return j;
}

Json diagram_to_json(const Diagram& d) {
    Json j;
    j["schema"] = 1;
    j["crossings"] = d.crossings();
    j["components"] = d.components();
    j["writhe"] = d.writhe();
    // PD tuples follow the counterclockwise convention starting at under-in
    Json pd = Json::array();
    for (auto& tup : d.pd_code()) pd.push_back(Json::array({tup[0], tup[1], tup[2], tup[3]}));
    j["pd"] = pd;
    Json signs = Json::array();
    for (int c = 0; c < d.crossings(); ++c) signs.push_back(d.sign(c));
    j["signs"] = signs;
    return j;
}

}  // namespace algknot
