#pragma once

#include <json.hpp>

#include "algknot/hyperbolicity.hpp"
#include "algknot/knotdiag.hpp"
#include "algknot/mwgen.hpp"
#include "algknot/tangentsurf.hpp"

namespace algknot {

using Json = nlohmann::ordered_json;

// curve schema: {"schema":1, "degree": d, "coeffs": [[...], [...], [...], [...]]}
// with rational strings in ascending powers
Json curve_to_json(const SpaceCurve& K);
SpaceCurve curve_from_json(const Json& j);

Json point3_to_json(const ProjPoint3& p);
ProjPoint3 point3_from_json(const Json& j);
Json point2_to_json(const ProjPoint2& p);
ProjPoint2 point2_from_json(const Json& j);
Json line3_to_json(const ProjLine3& l);

Json writhe_report_to_json(const WritheReport& r);
Json double_points_to_json(const DoublePointAnalysis& a);
Json smoothness_to_json(const SmoothnessCertificate& c);
Json torsion_to_json(const TorsionProfile& t);
Json hyp_region_to_json(const HypRegion& r, bool include_flags = false);
Json viewpoint_to_json(const ViewpointClass& v);
Json identification_to_json(const TorusIdentification& t);
Json mw_report_to_json(const MwReport& r);
Json proj_diagram_to_json(const ProjDiagram& d);
Json diagram_to_json(const Diagram& d);
Json laurent_to_json(const LaurentPoly& p);

}  // namespace algknot
