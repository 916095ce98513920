#include "algknot/poly.hpp"

#include <algorithm>
#include <sstream>

#include "algknot/errors.hpp"

namespace algknot {

// --- UniPoly ----------------------------------------------------------------

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& a) {
    if (a.is_zero()) return UniPoly();
    return UniPoly(std::vector<Rat>{a});
}

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

UniPoly UniPoly::linear(const Rat& a0, const Rat& a1) {
    return UniPoly(std::vector<Rat>{a0, a1});
}

UniPoly UniPoly::from_roots(const std::vector<Rat>& roots) {
    UniPoly p = constant(Rat(1));
    for (const Rat& r : roots) p = p * linear(-r, Rat(1));
    return p;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const Rat& a) const {
    if (a.is_zero()) return UniPoly();
    std::vector<Rat> d(c_);
    for (Rat& x : d) x *= a;
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UniPoly UniPoly::reversed(int n) const {
    if (is_zero()) return UniPoly();
    if (n < degree()) throw Error("reversed: n below degree");
    std::vector<Rat> d(static_cast<size_t>(n) + 1, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) d[static_cast<size_t>(n) - k] = c_[k];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::compose_affine(const Rat& a, const Rat& b) const {
    // Horner on (a t + b)
    UniPoly acc;
    UniPoly lin = linear(b, a);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin;
        acc += constant(*it);
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> d(c_);
    for (Rat& x : d) x = -x;
    return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            d[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(std::move(d));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    r = a;
    q = UniPoly();
    if (a.degree() < b.degree()) return;
    std::vector<Rat> qc(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    Rat lb = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat f = r.leading() * lb;
        qc[static_cast<size_t>(k)] = f;
        // r -= f * t^k * b
        std::vector<Rat> sub(static_cast<size_t>(r.degree()) + 1, Rat(0));
        for (size_t j = 0; j < b.c_.size(); ++j) sub[static_cast<size_t>(k) + j] = b.c_[j] * f;
        r -= UniPoly(std::move(sub));
    }
    q = UniPoly(std::move(qc));
}

UniPoly UniPoly::div_exact(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw Error("div_exact: nonzero remainder");
    return q;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat a = coeff(k);
        if (a.is_zero()) continue;
        if (!first) os << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) os << "-";
        first = false;
        Rat mag = a.abs();
        if (k == 0 || mag != Rat(1)) os << mag.to_string();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// --- IntPoly ----------------------------------------------------------------

void IntPoly::trim() {
    while (!c.empty() && int_sign(c.back()) == 0) c.pop_back();
}

void IntPoly::make_primitive() {
    trim();
    if (c.empty()) return;
    BigInt g(0);
    for (const BigInt& x : c) {
        g = int_gcd(g, x);
        if (g == 1) return;
    }
    for (BigInt& x : c) x /= g;
}

IntPoly IntPoly::from(const UniPoly& p) {
    IntPoly out;
    if (p.is_zero()) return out;
    BigInt l(1);
    for (const Rat& a : p.coeffs()) {
        BigInt d = a.den();
        l = l / int_gcd(l, d) * d;  // lcm
    }
    out.c.reserve(p.coeffs().size());
    for (const Rat& a : p.coeffs()) out.c.push_back(a.num() * (l / a.den()));
    out.make_primitive();
    return out;
}

UniPoly IntPoly::to_unipoly() const {
    std::vector<Rat> d;
    d.reserve(c.size());
    for (const BigInt& x : c) d.push_back(Rat(x));
    return UniPoly(std::move(d));
}

IntPoly IntPoly::derivative() const {
    IntPoly out;
    if (c.size() <= 1) return out;
    out.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) out.c[k - 1] = c[k] * static_cast<long>(k);
    out.trim();
    return out;
}

int IntPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // b^n * p(a/b) = sum c_k a^k b^(n-k), exact in integers
    const BigInt a = x.num();
    const BigInt b = x.den();
    BigInt acc(0);
    BigInt bp(1);  // b^(n-k) accumulated backwards
    // Horner in a with clearing powers of b:
    // acc = (((c_n) * a + c_{n-1} b) * a + c_{n-2} b^2) ...
    acc = c.back();
    for (int k = degree() - 1; k >= 0; --k) {
        bp *= b;
        acc = acc * a + c[static_cast<size_t>(k)] * bp;
    }
    return int_sign(acc);
}

int IntPoly::sign_at_pos_inf() const { return is_zero() ? 0 : int_sign(c.back()); }

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = int_sign(c.back());
    return (degree() % 2 == 0) ? s : -s;
}

// --- Sturm chain ------------------------------------------------------------

namespace {

// Pseudo-remainder prem(f, g) with multiplier lc(g)^(deg f - deg g + 1),
// computed over the integers.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g, int& mult_sign) {
    IntPoly r = f;
    const BigInt lg = g.c.back();
    const int dg = g.degree();
    int steps = f.degree() - dg + 1;
    mult_sign = 1;
    int applied = 0;
    while (!r.is_zero() && r.degree() >= dg) {
        const int k = r.degree() - dg;
        const BigInt lr = r.c.back();
        // r = lg * r - lr * t^k * g
        std::vector<BigInt> d(r.c.size());
        for (size_t i = 0; i < r.c.size(); ++i) d[i] = lg * r.c[i];
        for (size_t j = 0; j < g.c.size(); ++j) d[static_cast<size_t>(k) + j] -= lr * g.c[j];
        r.c = std::move(d);
        r.trim();
        ++applied;
    }
    // we multiplied f by lg exactly `applied` times; pad to `steps` for the
    // canonical prem, but only the sign parity matters to callers
    if (int_sign(lg) < 0 && (applied % 2 != 0)) mult_sign = -1;
    (void)steps;
    return r;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) { build(IntPoly::from(p)); }
SturmChain::SturmChain(IntPoly p0) { build(std::move(p0)); }

void SturmChain::build(IntPoly p0) {
    if (p0.is_zero()) throw ZeroPolynomial("Sturm chain of zero polynomial");
    p0.make_primitive();
    seq_.push_back(p0);
    IntPoly p1 = p0.derivative();
    if (p1.is_zero()) return;
    p1.make_primitive();
    seq_.push_back(std::move(p1));
    while (true) {
        const IntPoly& a = seq_[seq_.size() - 2];
        const IntPoly& b = seq_.back();
        int msign = 1;
        IntPoly r = pseudo_rem(a, b, msign);
        if (r.is_zero()) break;
        // next = -rem(a, b) up to a positive factor; prem = lc(b)^e * rem
        if (msign > 0) {
            for (BigInt& x : r.c) x = -x;
        }
        r.make_primitive();
        seq_.push_back(std::move(r));
        if (seq_.back().degree() == 0) break;
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const IntPoly& p : seq_) s.push_back(p.sign_at(x));
    return count_variations(s);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const IntPoly& p : seq_) s.push_back(p.sign_at_neg_inf());
    return count_variations(s);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const IntPoly& p : seq_) s.push_back(p.sign_at_pos_inf());
    return count_variations(s);
}

int SturmChain::count(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) throw Error("sturm count: empty interval");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return variations_neg_inf() - variations_pos_inf(); }
int SturmChain::count_below(const Rat& hi) const { return variations_neg_inf() - variations_at(hi); }
int SturmChain::count_above(const Rat& lo) const { return variations_at(lo) - variations_pos_inf(); }

int SturmChain::gcd_degree() const {
    if (seq_.size() <= 1) return seq_.empty() ? -1 : std::max(seq_[0].degree(), 0);
    return seq_.back().degree();
}

// --- BinForm ----------------------------------------------------------------

BinForm::BinForm(UniPoly affine, int declared_degree) : deg_(declared_degree), aff_(std::move(affine)) {
    if (deg_ < 0) throw Error("binary form with negative degree");
    if (!aff_.is_zero() && aff_.degree() > deg_)
        throw Error("binary form: affine degree exceeds declared degree");
}

// --- root bounds and isolation ----------------------------------------------

Rat root_bound(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("root bound of zero polynomial");
    BigInt maxabs(0);
    for (size_t k = 0; k + 1 < p.c.size(); ++k) {
        BigInt a = abs(p.c[k]);
        if (a > maxabs) maxabs = a;
    }
    BigInt lead = abs(p.c.back());
    // 1 + ceil(max/lead)
    BigInt q = maxabs / lead + 1;
    return Rat(BigInt(q + 1));
}

namespace {

void isolate_rec(const SturmChain& chain, const IntPoly& p, const Rat& lo, const Rat& hi,
                 int nroots, std::vector<RootInterval>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.push_back(RootInterval{lo, hi, 1});
        return;
    }
    Rat mid = (lo + hi) * Rat(1, 2);
    if (p.sign_at(mid) == 0) {
        // exact rational root at mid
        int left = chain.count(lo, mid) - 1;  // roots in (lo, mid) = count(lo,mid] minus mid
        isolate_rec(chain, p, lo, mid, left, out);
        out.push_back(RootInterval{mid, mid, 1});
        int right = nroots - left - 1;
        isolate_rec(chain, p, mid, hi, right, out);
        // note: recursion above may interleave out-of-order; caller sorts
        return;
    }
    int left = chain.count(lo, mid);
    isolate_rec(chain, p, lo, mid, left, out);
    isolate_rec(chain, p, mid, hi, nroots - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_squarefree(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("isolate_squarefree of zero polynomial");
    if (p.degree() == 0) return {};
    IntPoly ip = IntPoly::from(p);
    SturmChain chain(ip);
    Rat b = root_bound(ip);
    int total = chain.count(-b, b);
    std::vector<RootInterval> out;
    isolate_rec(chain, ip, -b, b, total, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& z) { return a.lo < z.lo; });
    return out;
}

int RootIsolation::total_multiplicity() const {
    int m = infinity_multiplicity;
    for (const auto& iv : intervals) m += iv.multiplicity;
    return m;
}

int sturm_count(const UniPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw ZeroPolynomial("sturm_count of zero polynomial");
    if (!(lo < hi)) throw Error("sturm_count: lo must be below hi");
    if (p.degree() == 0) return 0;
    return SturmChain(p).count(lo, hi);
}

// --- gcd, squarefree --------------------------------------------------------

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    IntPoly r0 = IntPoly::from(a);
    IntPoly r1 = IntPoly::from(b);
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        if (r1.degree() == 0) return UniPoly::constant(Rat(1));
        int msign = 1;
        IntPoly r = pseudo_rem(r0, r1, msign);
        r.make_primitive();
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.to_unipoly().monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero polynomial");
    if (p.degree() == 0) return out;
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly a = poly_gcd(f, fp);
    UniPoly w = UniPoly::div_exact(f, a);
    UniPoly y = UniPoly::div_exact(fp, a);
    UniPoly z = y - w.derivative();
    int k = 1;
    while (!z.is_zero()) {
        UniPoly g = poly_gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, k);
        w = UniPoly::div_exact(w, g);
        y = UniPoly::div_exact(z, g);
        z = y - w.derivative();
        ++k;
    }
    if (w.degree() > 0) out.emplace_back(w, k);
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rat(1));
    UniPoly g = poly_gcd(p, p.derivative());
    return UniPoly::div_exact(p.monic(), g).monic();
}

bool all_roots_real(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("all_roots_real of zero polynomial");
    if (p.degree() <= 0) return true;
    SturmChain chain(p);
    int distinct_real = chain.count_all();
    int distinct_complex = p.degree() - chain.gcd_degree();
    return distinct_real == distinct_complex;
}

RootIsolation isolate_real_roots(const BinForm& f) {
    if (f.is_zero()) throw ZeroPolynomial("isolate_real_roots of zero form");
    RootIsolation out;
    out.infinity_multiplicity = f.infinity_mult();
    const UniPoly& aff = f.affine();
    if (aff.degree() <= 0) return out;
    auto factors = squarefree_decomposition(aff);
    struct Tagged {
        RootInterval iv;
        SturmChain chain;
    };
    std::vector<Tagged> tagged;
    for (auto& [fac, mult] : factors) {
        SturmChain chain(fac);
        for (auto& iv : isolate_squarefree(fac)) {
            iv.multiplicity = mult;
            tagged.push_back(Tagged{iv, chain});
        }
    }
    // refine until pairwise disjoint (factors are coprime, so this terminates)
    auto overlaps = [](const RootInterval& a, const RootInterval& b) {
        return !(a.hi < b.lo || b.hi < a.lo);
    };
    auto refine = [](Tagged& t) {
        if (t.iv.lo == t.iv.hi) return;
        Rat mid = (t.iv.lo + t.iv.hi) * Rat(1, 2);
        if (t.chain.count(t.iv.lo, mid) == 1)
            t.iv.hi = mid;
        else
            t.iv.lo = mid;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < tagged.size(); ++i)
            for (size_t j = i + 1; j < tagged.size(); ++j)
                if (overlaps(tagged[i].iv, tagged[j].iv)) {
                    // same point can only occur within one factor; distinct roots separate
                    if (tagged[i].iv.lo == tagged[i].iv.hi && tagged[j].iv.lo == tagged[j].iv.hi)
                        throw Error("isolate_real_roots: duplicate exact root across factors");
                    refine(tagged[i]);
                    refine(tagged[j]);
                    changed = true;
                }
    }
    std::sort(tagged.begin(), tagged.end(),
              [](const Tagged& a, const Tagged& b) { return a.iv.lo < b.iv.lo; });
    for (auto& t : tagged) out.intervals.push_back(t.iv);
    return out;
}

// --- resultant --------------------------------------------------------------

namespace {

// Bareiss fraction-free determinant over the integers.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (int_sign(m[k][k]) == 0) {
            size_t piv = k + 1;
            while (piv < n && int_sign(m[piv][k]) == 0) ++piv;
            if (piv == n) return BigInt(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / prev;  // exact by Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Rat resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("resultant with zero polynomial");
    const int dp = p.degree(), dq = q.degree();
    if (dp == 0) return rat_pow(p.coeff(0), dq);
    if (dq == 0) return rat_pow(q.coeff(0), dp);
    // integer images with scale bookkeeping: p = P/alpha, q = Q/beta
    IntPoly P, Q;
    BigInt alpha(1), beta(1);
    {
        BigInt l(1);
        for (const Rat& a : p.coeffs()) { BigInt d = a.den(); l = l / int_gcd(l, d) * d; }
        P.c.reserve(p.coeffs().size());
        for (const Rat& a : p.coeffs()) P.c.push_back(a.num() * (l / a.den()));
        alpha = l;
        l = 1;
        for (const Rat& a : q.coeffs()) { BigInt d = a.den(); l = l / int_gcd(l, d) * d; }
        Q.c.reserve(q.coeffs().size());
        for (const Rat& a : q.coeffs()) Q.c.push_back(a.num() * (l / a.den()));
        beta = l;
    }
    const size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    // rows of t^k * P for k = dq-1 .. 0, descending coefficient order
    for (int row = 0; row < dq; ++row)
        for (int j = 0; j <= dp; ++j)
            m[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = P.c[static_cast<size_t>(dp - j)];
    for (int row = 0; row < dp; ++row)
        for (int j = 0; j <= dq; ++j)
            m[static_cast<size_t>(dq + row)][static_cast<size_t>(row + j)] = Q.c[static_cast<size_t>(dq - j)];
    BigInt det = bareiss_det(std::move(m));
    BigInt denom = int_pow(alpha, static_cast<unsigned long>(dq)) *
                   int_pow(beta, static_cast<unsigned long>(dp));
    return Rat(det, denom);
}

// --- interlacing ------------------------------------------------------------

namespace {

// all projective roots of the form real, with multiplicity
bool form_totally_real(const BinForm& F) {
    if (F.is_zero()) return true;
    return all_roots_real(F.affine());
}

}  // namespace

bool pencil_totally_real(const BinForm& P, const BinForm& Q, bool require_base_real) {
    if (P.is_zero() && Q.is_zero()) throw ZeroPolynomial("pencil of two zero forms");
    if (P.degree() != Q.degree()) throw Error("pencil members must have equal declared degree");
    if (P.is_zero()) return form_totally_real(Q);
    if (Q.is_zero()) return form_totally_real(P);

    // split off the common factor (base points of the pencil)
    UniPoly g = poly_gcd(P.affine(), Q.affine());
    int common_inf = std::min(P.infinity_mult(), Q.infinity_mult());
    if (require_base_real && !all_roots_real(g)) return false;

    UniPoly pa = UniPoly::div_exact(P.affine(), g);
    UniPoly qa = UniPoly::div_exact(Q.affine(), g);
    int m = P.degree() - g.degree() - common_inf;
    BinForm Pr(pa, pa.degree() + (P.infinity_mult() - common_inf));
    BinForm Qr(qa, qa.degree() + (Q.infinity_mult() - common_inf));
    if (Pr.degree() != m || Qr.degree() != m) throw Error("pencil reduction degree mismatch");
    if (m == 0) return true;

    // a reduced member that is a pure power of u (constant affine part)
    if (pa.degree() == 0 && Pr.infinity_mult() > 0) {
        if (m == 1) return true;
        return false;
    }
    if (qa.degree() == 0 && Qr.infinity_mult() > 0) {
        if (m == 1) return true;
        return false;
    }

    // both reduced forms must be totally real and projectively squarefree
    if (!form_totally_real(Pr) || !form_totally_real(Qr)) return false;
    if (Pr.infinity_mult() > 1 || Qr.infinity_mult() > 1) return false;
    if (Pr.infinity_mult() == 1 && Qr.infinity_mult() == 1) return false;  // not coprime at inf
    if (pa.degree() > 0 && poly_gcd(pa, pa.derivative()).degree() > 0) return false;
    if (qa.degree() > 0 && poly_gcd(qa, qa.derivative()).degree() > 0) return false;

    if (m == 1) return true;

    // strict interlacing <=> the Wronskian form has no real projective root
    UniPoly w = pa.derivative() * qa - pa * qa.derivative();
    if (w.is_zero()) return false;  // proportional reduced pair of degree >= 2
    if (w.degree() < 2 * m - 2) return false;  // root at infinity
    return SturmChain(w).count_all() == 0;
}

bool interlace_check(const BinForm& P, const BinForm& Q) {
    return pencil_totally_real(P, Q, true);
}

}  // namespace algknot
