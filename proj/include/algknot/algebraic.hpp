#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "algknot/poly.hpp"

namespace algknot {

// Real algebraic number: the unique root of a squarefree defining polynomial
// inside (lo, hi]; lo == hi encodes an exact rational. The defining data is
// shared between roots of the same polynomial. Interval refinement mutates
// this value in place; do not share one instance across threads.
class RealAlg {
  public:
    static RealAlg from_rational(const Rat& r);
    // all real roots of squarefree_part(p), ascending
    static std::vector<RealAlg> roots_of(const UniPoly& p);

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    Rat mid() const { return (lo_ + hi_) * Rat(1, 2); }
    double approx() const;

    void refine();
    void refine_below_width(const Rat& w);

    // exact sign of h at this number
    int sign_of(const UniPoly& h);
    // -1 / 0 / +1 for this vs r
    int compare(const Rat& r);
    static int compare(RealAlg& a, RealAlg& b);

    const UniPoly& defining() const { return def_->poly; }

  private:
    struct Def {
        UniPoly poly;      // squarefree
        IntPoly ipoly;
        SturmChain chain;
        explicit Def(UniPoly p) : poly(std::move(p)), ipoly(IntPoly::from(poly)), chain(ipoly) {}
    };
    RealAlg(std::shared_ptr<const Def> def, Rat lo, Rat hi)
        : def_(std::move(def)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    std::shared_ptr<const Def> def_;
    Rat lo_, hi_;
};

// --- arithmetic in Q[x]/(G) -------------------------------------------------
// G need not be irreducible; inversion reports failure when gcd(a, G) != 1.

UniPoly mod_reduce(const UniPoly& a, const UniPoly& G);
UniPoly mod_mul(const UniPoly& a, const UniPoly& b, const UniPoly& G);
std::optional<UniPoly> mod_inv(const UniPoly& a, const UniPoly& G);

// extended euclid: returns (g, s, t) with s a + t b = g, g monic gcd
void ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t);

}  // namespace algknot
