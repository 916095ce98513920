#include "algknot/interval.hpp"

namespace algknot {

namespace {

int didegree(const DIPoly& p) { return static_cast<int>(p.size()) - 1; }

// drop exact-zero leading coefficients; returns false (undecidable) if a
// leading coefficient straddles zero
bool ditrim(DIPoly& p) {
    while (!p.empty()) {
        int s = p.back().sign();
        if (s == DI::kIndefinite) return false;
        if (s != 0) return true;
        p.pop_back();
    }
    return true;
}

void dinormalize(DIPoly& p) {
    double mx = 0;
    for (const DI& c : p) mx = std::fmax(mx, std::fmax(std::fabs(c.lo), std::fabs(c.hi)));
    if (mx <= 0 || !std::isfinite(mx)) return;
    // scale by a power of two: exact for every coefficient
    DI s = DI::exact(std::ldexp(1.0, -std::ilogb(mx)));
    for (DI& c : p) c = c * s;
}

DIPoly diderivative(const DIPoly& p) {
    DIPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * DI::exact(static_cast<double>(k)));
    return d;
}

// signed pseudo-remainder chain in interval arithmetic; returns false when a
// sign decision is not possible
bool dichain(DIPoly p0, DIPoly p1, std::vector<DIPoly>& out) {
    if (!ditrim(p0) || !ditrim(p1)) return false;
    if (p0.empty()) return false;
    dinormalize(p0);
    out.push_back(p0);
    if (p1.empty()) return true;
    dinormalize(p1);
    out.push_back(p1);
    for (int guard = 0; guard < 64; ++guard) {
        const DIPoly& a = out[out.size() - 2];
        const DIPoly& b = out.back();
        DI lg = b.back();
        int lgs = lg.sign();
        if (lgs == DI::kIndefinite || lgs == 0) return false;
        DIPoly r = a;
        int applied = 0;
        while (didegree(r) >= didegree(b)) {
            int k = didegree(r) - didegree(b);
            DI lr = r.back();
            DIPoly nr(r.size() - 1);
            // lg * r - lr * t^k * b, top coefficient cancels exactly
            for (int i = 0; i < didegree(r); ++i) {
                DI v = lg * r[static_cast<size_t>(i)];
                int bi = i - k;
                if (bi >= 0 && bi < static_cast<int>(b.size()))
                    v = v - lr * b[static_cast<size_t>(bi)];
                nr[static_cast<size_t>(i)] = v;
            }
            r = std::move(nr);
            if (!ditrim(r)) return false;
            ++applied;
            if (r.empty()) break;
        }
        if (r.empty()) return true;
        bool flip = !(lgs < 0 && (applied % 2 != 0));
        if (flip)
            for (DI& c : r) c = -c;
        dinormalize(r);
        out.push_back(std::move(r));
        if (didegree(out.back()) == 0) return true;
    }
    return false;
}

// sign variation counts at -inf / +inf from leading coefficients
bool divariations(const std::vector<DIPoly>& chain, int& vneg, int& vpos) {
    vneg = vpos = 0;
    int prev_n = 0, prev_p = 0;
    for (const DIPoly& p : chain) {
        int s = p.back().sign();
        if (s == DI::kIndefinite || s == 0) return false;
        int sp = s;
        int sn = (didegree(p) % 2 == 0) ? s : -s;
        if (prev_p != 0 && sp != prev_p) ++vpos;
        if (prev_n != 0 && sn != prev_n) ++vneg;
        prev_p = sp;
        prev_n = sn;
    }
    return true;
}

// distinct real roots and gcd degree via the chain; false if undecidable
bool dicount(const DIPoly& p, int& distinct_real, int& gcd_degree) {
    std::vector<DIPoly> chain;
    DIPoly d = diderivative(p);
    if (!dichain(p, d, chain)) return false;
    int vn, vp;
    if (!divariations(chain, vn, vp)) return false;
    distinct_real = vn - vp;
    gcd_degree = didegree(chain.back());
    if (chain.size() == 1) gcd_degree = 0;
    return true;
}

}  // namespace

Tri hyp_pencil_filter(const DIPoly& p1_in, const DIPoly& p2_in, int m) {
    DIPoly p1 = p1_in, p2 = p2_in;
    if (!ditrim(p1) || !ditrim(p2)) return Tri::Unknown;
    if (p1.empty() || p2.empty()) return Tri::Unknown;
    const int d1 = didegree(p1), d2 = didegree(p2);
    if (d1 > m || d2 > m) return Tri::Unknown;
    if (d1 < m && d2 < m) return Tri::Unknown;  // common root at infinity: exact path
    if (d1 == 0 || d2 == 0) return Tri::Unknown;

    // coprimality (order by degree: the chain divides downward)
    {
        std::vector<DIPoly> chain;
        const DIPoly& hi_p = (d1 >= d2) ? p1 : p2;
        const DIPoly& lo_p = (d1 >= d2) ? p2 : p1;
        if (!dichain(hi_p, lo_p, chain)) return Tri::Unknown;
        if (didegree(chain.back()) != 0) return Tri::Unknown;  // nontrivial gcd: exact path
    }
    // both generators totally real and squarefree
    for (const DIPoly* p : {&p1, &p2}) {
        int real = 0, gdeg = 0;
        if (!dicount(*p, real, gdeg)) return Tri::Unknown;
        if (gdeg > 0) return Tri::False;  // coprime pair with a repeated root
        if (real < didegree(*p)) return Tri::False;
    }
    // Wronskian strictly sign-definite including infinity
    DIPoly w;
    {
        DIPoly d1p = diderivative(p1), d2p = diderivative(p2);
        w.assign(static_cast<size_t>(d1 + d2), DI::exact(0));
        auto acc = [&](const DIPoly& a, const DIPoly& b, double sgn) {
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j)
                    w[i + j] = w[i + j] + a[i] * b[j] * DI::exact(sgn);
        };
        acc(d1p, p2, 1.0);
        acc(p1, d2p, -1.0);
        if (!ditrim(w)) return Tri::Unknown;
    }
    if (didegree(w) < 2 * m - 2) return Tri::False;  // Jacobian root at infinity
    int wreal = 0, wg = 0;
    if (!dicount(w, wreal, wg)) return Tri::Unknown;
    return wreal == 0 ? Tri::True : Tri::False;
}

}  // namespace algknot
