#include "algknot/algebraic.hpp"

#include "algknot/errors.hpp"

namespace algknot {

RealAlg RealAlg::from_rational(const Rat& r) {
    auto def = std::make_shared<const Def>(UniPoly::linear(-r, Rat(1)));
    return RealAlg(def, r, r);
}

std::vector<RealAlg> RealAlg::roots_of(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("roots_of zero polynomial");
    UniPoly sf = squarefree_part(p);
    std::vector<RealAlg> out;
    if (sf.degree() <= 0) return out;
    auto def = std::make_shared<const Def>(sf);
    for (const auto& iv : isolate_squarefree(sf)) out.push_back(RealAlg(def, iv.lo, iv.hi));
    return out;
}

double RealAlg::approx() const { return mid().to_double(); }

void RealAlg::refine() {
    if (is_exact()) return;
    Rat m = mid();
    if (def_->ipoly.sign_at(m) == 0) {
        lo_ = m;
        hi_ = m;
        return;
    }
    if (def_->chain.count(lo_, m) == 1)
        hi_ = m;
    else
        lo_ = m;
}

void RealAlg::refine_below_width(const Rat& w) {
    while (!is_exact() && hi_ - lo_ >= w) refine();
}

int RealAlg::sign_of(const UniPoly& h) {
    if (h.is_zero()) return 0;
    if (is_exact()) return IntPoly::from(h).sign_at(lo_);
    UniPoly g = poly_gcd(def_->poly, h);
    if (g.degree() > 0) {
        SturmChain gc(g);
        if (gc.count(lo_, hi_) > 0) return 0;  // the shared root in our interval is us
    }
    IntPoly ih = IntPoly::from(h);
    SturmChain hc(ih);
    while (true) {
        if (hc.count(lo_, hi_) == 0) {
            int s = ih.sign_at(hi_);
            if (s != 0) return s;
        }
        refine();
        if (is_exact()) return ih.sign_at(lo_);
    }
}

int RealAlg::compare(const Rat& r) {
    return sign_of(UniPoly::linear(-r, Rat(1)));
}

int RealAlg::compare(RealAlg& a, RealAlg& b) {
    if (a.is_exact()) return -b.compare(a.lo_);
    if (b.is_exact()) return a.compare(b.lo_);
    UniPoly g = poly_gcd(a.def_->poly, b.def_->poly);
    std::optional<SturmChain> gc;
    if (g.degree() > 0) gc.emplace(g);
    while (true) {
        // each number lies strictly above its own lo, so a touching bound decides
        if (a.hi_ < b.lo_ || a.hi_ == b.lo_) return -1;
        if (b.hi_ < a.lo_ || b.hi_ == a.lo_) return 1;
        Rat lo = std::max(a.lo_, b.lo_);
        Rat hi = std::min(a.hi_, b.hi_);
        if (lo < hi) {
            // a shared definer root in (lo, hi] lies inside both isolating
            // intervals, hence equals both numbers
            if (gc && gc->count(lo, hi) > 0) return 0;
        } else if (lo == hi) {
            if (a.def_->ipoly.sign_at(hi) == 0 && b.def_->ipoly.sign_at(hi) == 0) return 0;
        }
        a.refine();
        b.refine();
        if (a.is_exact()) return -b.compare(a.lo_);
        if (b.is_exact()) return a.compare(b.lo_);
    }
}

// --- quotient ring ----------------------------------------------------------

UniPoly mod_reduce(const UniPoly& a, const UniPoly& G) {
    UniPoly q, r;
    UniPoly::divmod(a, G, q, r);
    return r;
}

UniPoly mod_mul(const UniPoly& a, const UniPoly& b, const UniPoly& G) {
    return mod_reduce(a * b, G);
}

void ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(Rat(1)), s1;
    UniPoly t0, t1 = UniPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(r0, r1, q, r);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = r0; s = s0; t = t0;
        return;
    }
    Rat lc = r0.leading();
    g = r0.monic();
    s = s0.scaled(lc.inverse());
    t = t0.scaled(lc.inverse());
}

std::optional<UniPoly> mod_inv(const UniPoly& a, const UniPoly& G) {
    UniPoly ar = mod_reduce(a, G);
    if (ar.is_zero()) return std::nullopt;
    UniPoly g, s, t;
    ext_gcd(ar, G, g, s, t);
    if (g.degree() != 0) return std::nullopt;
    return mod_reduce(s, G);
}

}  // namespace algknot
