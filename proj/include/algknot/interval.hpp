#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "algknot/rat.hpp"

namespace algknot {

// Outward-rounded double interval. Every operation widens the result by one
// ulp per bound, so any sign decided by an interval is a proof; undecidable
// signs fall back to exact arithmetic at the call site.
struct DI {
    double lo = 0, hi = 0;

    static DI exact(double v) { return DI{v, v}; }
    static DI from_rat(const Rat& r) {
        double v = r.to_double();
        if (std::isfinite(v) && Rat::from_mpq(mpq_class(v)) == r) return exact(v);
        return DI{std::nextafter(v, -std::numeric_limits<double>::infinity()),
                  std::nextafter(v, std::numeric_limits<double>::infinity())};
    }

    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }

    static double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
    static double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

    bool is_exact() const { return lo == hi; }

    DI operator-() const { return DI{-hi, -lo}; }
    friend DI operator+(const DI& a, const DI& b) {
        if (a.is_exact() && b.is_exact()) {
            double v = a.lo + b.lo;
            double r = v - a.lo;  // two-sum residual
            double err = (a.lo - (v - r)) + (b.lo - r);
            if (err == 0 && std::isfinite(v)) return exact(v);
            return DI{down(v), up(v)};
        }
        return DI{down(a.lo + b.lo), up(a.hi + b.hi)};
    }
    friend DI operator-(const DI& a, const DI& b) { return a + (-b); }
    friend DI operator*(const DI& a, const DI& b) {
        if ((a.lo == 0 && a.hi == 0) || (b.lo == 0 && b.hi == 0)) return exact(0);
        if (a.is_exact() && b.is_exact()) {
            double v = a.lo * b.lo;
            double err = std::fma(a.lo, b.lo, -v);
            if (err == 0 && std::isfinite(v)) return exact(v);
            return DI{down(v), up(v)};
        }
        double c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
        double mn = std::fmin(std::fmin(c1, c2), std::fmin(c3, c4));
        double mx = std::fmax(std::fmax(c1, c2), std::fmax(c3, c4));
        return DI{down(mn), up(mx)};
    }

    static constexpr int kIndefinite = 9;
    // -1 / 0 / +1, or kIndefinite if the interval straddles zero
    int sign() const {
        if (!finite()) return kIndefinite;
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (lo == 0 && hi == 0) return 0;
        return kIndefinite;
    }
};

using DIPoly = std::vector<DI>;  // ascending coefficients

enum class Tri { False, True, Unknown };

// Filter form of the hyperbolicity pencil test for two degree-m pullbacks
// (coefficient lists may be shorter than m+1; missing leads are exact zeros).
// True/False answers are proofs; Unknown means the exact path must decide.
Tri hyp_pencil_filter(const DIPoly& p1, const DIPoly& p2, int m);

}  // namespace algknot
