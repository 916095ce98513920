#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algknot/rat.hpp"

namespace algknot {

// Dense univariate polynomial over Rat, ascending powers, no trailing zeros.
// The zero polynomial has an empty coefficient list and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& a);
    static UniPoly variable();                           // t
    static UniPoly linear(const Rat& a0, const Rat& a1); // a0 + a1 t
    static UniPoly from_roots(const std::vector<Rat>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const;
    UniPoly derivative() const;
    UniPoly scaled(const Rat& a) const;
    UniPoly monic() const;
    // t^n * p(1/t); requires n >= degree.
    UniPoly reversed(int n) const;
    // p(a*t + b)
    UniPoly compose_affine(const Rat& a, const Rat& b) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division; throws ZeroPolynomial if b is zero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // Exact quotient; throws Error if remainder is nonzero.
    static UniPoly div_exact(const UniPoly& a, const UniPoly& b);

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Integer-coefficient image used by the sign machinery. Invariant: primitive
// (content 1) unless explicitly stated, no trailing zeros.
struct IntPoly {
    std::vector<BigInt> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim();
    void make_primitive();  // divide by positive content

    static IntPoly from(const UniPoly& p);  // clears denominators, keeps sign, primitive
    UniPoly to_unipoly() const;
    IntPoly derivative() const;

    // sign of c_n x^n + ... evaluated at the rational a/b (b > 0)
    int sign_at(const Rat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;
};

// Signed-remainder (Sturm) chain over the integers. Counts distinct real
// roots; works for non-squarefree input too.
class SturmChain {
  public:
    explicit SturmChain(const UniPoly& p);
    explicit SturmChain(IntPoly p0);

    int variations_at(const Rat& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;

    // number of distinct real roots in (lo, hi]
    int count(const Rat& lo, const Rat& hi) const;
    int count_all() const;
    int count_below(const Rat& hi) const;   // roots in (-inf, hi]
    int count_above(const Rat& lo) const;   // roots in (lo, +inf)

    // degree of gcd(p, p') read off the chain tail
    int gcd_degree() const;
    const std::vector<IntPoly>& elements() const { return seq_; }

  private:
    void build(IntPoly p0);
    std::vector<IntPoly> seq_;
};

// Binary form of explicit degree m: F(s,u) = sum c_k s^k u^(m-k), stored via
// its dehomogenization f(t) = F(t,1). The declared degree encodes roots at
// infinity: mult_inf = m - deg f.
class BinForm {
  public:
    BinForm() : deg_(0) {}
    BinForm(UniPoly affine, int declared_degree);
    static BinForm of(const UniPoly& p) { return BinForm(p, std::max(p.degree(), 0)); }

    int degree() const { return deg_; }
    const UniPoly& affine() const { return aff_; }
    int infinity_mult() const { return aff_.is_zero() ? 0 : deg_ - aff_.degree(); }
    bool is_zero() const { return aff_.is_zero(); }

    BinForm scaled(const Rat& a) const { return BinForm(aff_.scaled(a), deg_); }
    friend bool operator==(const BinForm& a, const BinForm& b) {
        return a.deg_ == b.deg_ && a.aff_ == b.aff_;
    }

  private:
    int deg_;
    UniPoly aff_;
};

struct RootInterval {
    Rat lo, hi;        // root in (lo, hi]; lo == hi means the exact rational root
    int multiplicity;
};

struct RootIsolation {
    std::vector<RootInterval> intervals;  // pairwise disjoint, ascending
    int infinity_multiplicity = 0;

    bool includes_infinity() const { return infinity_multiplicity > 0; }
    int total_multiplicity() const;
    int distinct_finite_count() const { return static_cast<int>(intervals.size()); }
};

// --- ratpoly operations ---------------------------------------------------

// Distinct real roots of p in (lo, hi]. p must be nonzero (squarefree by
// contract; non-squarefree input still counts distinct roots).
int sturm_count(const UniPoly& p, const Rat& lo, const Rat& hi);

// All real projective roots of the form, with multiplicities; the root at
// infinity is reported iff the leading coefficients vanish.
RootIsolation isolate_real_roots(const BinForm& f);

// Sylvester resultant. Zero iff p, q share a complex root.
Rat resultant(const UniPoly& p, const UniPoly& q);

// Hermite-Kakeya-Obreschkoff pencil test: true iff every member of the real
// pencil spanned by P and Q (equal declared degree) has only real projective
// roots counted with multiplicity.
bool interlace_check(const BinForm& P, const BinForm& Q);

// Same test after removing the gcd of P and Q without requiring the common
// factor to be real-rooted (the common factor corresponds to pencil base
// points, which hyperbolicity counts as real plane intersections).
bool pencil_totally_real(const BinForm& P, const BinForm& Q, bool require_base_real);

// gcd in Q[t], monic (1 for coprime, 0 if both zero).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Yun squarefree decomposition: p = lc * prod f_k^k with f_k monic squarefree
// pairwise coprime; returned as (f_k, k) for nonconstant f_k.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// squarefree part (radical), monic
UniPoly squarefree_part(const UniPoly& p);

// all roots of p real (with multiplicity), affine only
bool all_roots_real(const UniPoly& p);

// Isolating intervals for the distinct real roots of a squarefree p,
// ascending. Exposed for the algebraic-number layer.
std::vector<RootInterval> isolate_squarefree(const UniPoly& p);

// Cauchy bound: all complex roots have |z| < bound.
Rat root_bound(const IntPoly& p);

}  // namespace algknot
