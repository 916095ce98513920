#include "algknot/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace algknot {

namespace {

constexpr int kSize = 640;
constexpr int kSamples = 2400;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Mapper {
    double cx, cy, scale;
    double X(double x) const { return kSize / 2.0 + (x - cx) * scale; }
    double Y(double y) const { return kSize / 2.0 - (y - cy) * scale; }
};

void eval3(const PlaneProjection& P, double t, double out[3]) {
    for (size_t i = 0; i < 3; ++i) {
        const auto& c = P.coords()[i];
        double acc = 0;
        for (int k = c.degree(); k >= 0; --k) acc = acc * t + c.coeff(k).to_double();
        out[i] = acc;
    }
}

// affine chart 0 coordinates (x1/x0, x2/x0); returns false when near infinity
bool chart0(const double g[3], double& x, double& y) {
    if (std::fabs(g[0]) < 1e-9 * (std::fabs(g[1]) + std::fabs(g[2]) + 1e-30)) return false;
    x = g[1] / g[0];
    y = g[2] / g[0];
    return std::isfinite(x) && std::isfinite(y) && std::fabs(x) < 1e4 && std::fabs(y) < 1e4;
}

double sample_t(int k) {
    double u = -M_PI / 2 + M_PI * (k + 0.5) / kSamples;
    return std::tan(u);
}

Mapper fit_mapper(const PlaneProjection& P) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (int k = 0; k < kSamples; ++k) {
        double g[3], x, y;
        eval3(P, sample_t(k), g);
        if (!chart0(g, x, y)) continue;
        if (std::fabs(x) > 50 || std::fabs(y) > 50) continue;
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmin > xmax) {
        xmin = ymin = -1;
        xmax = ymax = 1;
    }
    Mapper m;
    m.cx = (xmin + xmax) / 2;
    m.cy = (ymin + ymax) / 2;
    double span = std::max({xmax - xmin, ymax - ymin, 1e-3});
    m.scale = (kSize - 80) / span;
    return m;
}

void polyline_runs(std::ostringstream& os, const PlaneProjection& P, const Mapper& m,
                   const std::vector<std::pair<double, double>>& gaps, const char* stroke) {
    bool open = false;
    auto gap_contains = [&](double t) {
        for (auto& [lo, hi] : gaps)
            if (t > lo && t < hi) return true;
        return false;
    };
    for (int k = 0; k < kSamples; ++k) {
        double t = sample_t(k);
        double g[3], x, y;
        bool ok = chart0((eval3(P, t, g), g), x, y) && !gap_contains(t);
        double px = m.X(x), py = m.Y(y);
        bool visible = ok && px > -50 && px < kSize + 50 && py > -50 && py < kSize + 50;
        if (visible) {
            if (!open) {
                os << "<polyline fill=\"none\" stroke=\"" << stroke
                   << "\" stroke-width=\"1.6\" points=\"";
                open = true;
            }
            os << fmt(px) << "," << fmt(py) << " ";
        } else if (open) {
            os << "\"/>\n";
            open = false;
        }
    }
    if (open) os << "\"/>\n";
}

std::string svg_head() {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return os.str();
}

}  // namespace

std::string svg_projection(const DoublePointAnalysis& a) {
    const PlaneProjection& P = a.proj ? *a.proj : throw Error("analysis without projection");
    Mapper m = fit_mapper(P);
    std::ostringstream os;
    os << svg_head();
    // under-strand gaps around each crossing's under parameter
    std::vector<std::pair<double, double>> gaps;
    for (const auto& dp : a.points) {
        if (!dp.is_crossing()) continue;
        double tu = dp.param_under->mid().to_double();
        double span = 0.04 * (1.0 + std::fabs(tu));
        gaps.emplace_back(tu - span, tu + span);
    }
    polyline_runs(os, P, m, gaps, "black");
    for (const auto& dp : a.points) {
        double g[3] = {dp.image_approx[0], dp.image_approx[1], dp.image_approx[2]};
        double x, y;
        if (!chart0(g, x, y)) continue;
        if (dp.is_crossing()) {
            os << "<text x=\"" << fmt(m.X(x) + 6) << "\" y=\"" << fmt(m.Y(y) - 6)
               << "\" font-size=\"14\">" << (dp.sign > 0 ? "+" : "-") << "</text>\n";
        } else if (dp.is_solitary()) {
            os << "<circle cx=\"" << fmt(m.X(x)) << "\" cy=\"" << fmt(m.Y(y))
               << "\" r=\"3.5\" fill=\"none\" stroke=\"black\"/>\n"
               << "<text x=\"" << fmt(m.X(x) + 6) << "\" y=\"" << fmt(m.Y(y) - 6)
               << "\" font-size=\"14\">" << (dp.sign > 0 ? "+" : "-") << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_hyp_overlay(const HypRegion& r, const PlaneProjection& P) {
    std::ostringstream os;
    os << svg_head();
    // chart 0 covers [-1,1]^2; draw flagged cells in gray
    double cell = static_cast<double>(kSize) / r.resolution;
    for (int v = 0; v < r.resolution; ++v)
        for (int u = 0; u < r.resolution; ++u) {
            if (!r.flag(0, u, v)) continue;
            os << "<rect x=\"" << fmt(u * cell) << "\" y=\"" << fmt(kSize - (v + 1) * cell)
               << "\" width=\"" << fmt(cell) << "\" height=\"" << fmt(cell)
               << "\" fill=\"#999999\"/>\n";
        }
    // curve in the same chart
    Mapper m;
    m.cx = 0;
    m.cy = 0;
    m.scale = kSize / 2.0;
    polyline_runs(os, P, m, {}, "black");
    os << "</svg>\n";
    return os.str();
}

std::string svg_lifted(const ProjDiagram& d, const PlaneProjection& P) {
    Mapper m;
    m.cx = 0;
    m.cy = 0;
    m.scale = kSize / 2.4;
    std::ostringstream os;
    os << svg_head();
    (void)d;
    for (int sheet = 0; sheet < 2; ++sheet) {
        // draw the sheet: orthographic (x, y) of the +-normalized lift
        bool open = false;
        for (int k = 0; k < kSamples; ++k) {
            double t = sample_t(k);
            double g[3];
            const auto& xyz = P.coords();
            for (size_t i = 0; i < 3; ++i) {
                double acc = 0;
                for (int kk = xyz[i].degree(); kk >= 0; --kk)
                    acc = acc * t + xyz[i].coeff(kk).to_double();
                g[i] = acc;
            }
            double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
            if (!(n > 0) || !std::isfinite(n)) {
                if (open) {
                    os << "\"/>\n";
                    open = false;
                }
                continue;
            }
            double s = sheet == 0 ? 1.0 : -1.0;
            double px = m.X(s * g[0] / n), py = m.Y(s * g[1] / n);
            if (!open) {
                os << "<polyline fill=\"none\" stroke=\"" << (sheet ? "#555555" : "black")
                   << "\" stroke-width=\"1.4\" points=\"";
                open = true;
            }
            os << fmt(px) << "," << fmt(py) << " ";
        }
        if (open) os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace algknot
