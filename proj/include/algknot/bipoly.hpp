#pragma once

#include <vector>

#include "algknot/poly.hpp"

namespace algknot {

// Bivariate polynomial with a designated main variable Y: coefficient of Y^k
// is a UniPoly in the secondary variable X. Used in two roles: (X, Y) = (e, f)
// for symmetric double-point systems, and (X, Y) = (s, t) for two-parameter
// sign expressions.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

    static BiPoly zero() { return BiPoly(); }
    static BiPoly of_x(const UniPoly& p);               // constant in Y
    static BiPoly of_y(const UniPoly& p);               // polynomial in Y alone
    static BiPoly monomial(const Rat& a, int i, int j); // a X^i Y^j

    bool is_zero() const { return c_.empty(); }
    int deg_y() const { return static_cast<int>(c_.size()) - 1; }
    int deg_x() const;
    const UniPoly& coeff_y(int k) const;
    const UniPoly& leading_y() const;
    Rat coeff(int i, int j) const;  // coefficient of X^i Y^j

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly scaled(const Rat& a) const;
    BiPoly mul_x(const UniPoly& p) const;  // multiply by polynomial in X

    UniPoly eval_y(const Rat& y) const;  // -> UniPoly in X
    UniPoly eval_x(const Rat& x) const;  // -> UniPoly in Y
    BiPoly swap_vars() const;

    BiPoly d_dy() const;
    BiPoly d_dx() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& xv, const std::string& yv) const;

  private:
    void trim();
    std::vector<UniPoly> c_;
};

// --- builders ---------------------------------------------------------------

// A(s) * B(t) as a BiPoly with X = s, Y = t.
BiPoly st_product(const UniPoly& a_of_s, const UniPoly& b_of_t);

// (A(s)B(t) - A(t)B(s)) / (s - t) rewritten in e = s + t, f = st;
// result has X = e, Y = f.
BiPoly divided_difference_ef(const UniPoly& A, const UniPoly& B);

// Rewrite a symmetric polynomial in (s, t) (X = s, Y = t) in terms of
// (e, f) = (s + t, st); throws if the input is not symmetric.
BiPoly symmetrize_st(const BiPoly& st);

// For antisymmetric F(s,t): F = (s - t) * G with G symmetric; returns G in
// (e, f). Throws if the input is not antisymmetric.
BiPoly antisymmetric_cofactor_st(const BiPoly& st);

// substitute X -> X' - lambda * Y (the shear e = x - lambda f); X' becomes the
// new secondary variable
BiPoly shear_x(const BiPoly& p, const Rat& lambda);

// --- elimination ------------------------------------------------------------

struct Sres01 {
    UniPoly res;       // S_0 = resultant wrt Y, a polynomial in X
    UniPoly s1_lin;    // S_1 = s1_lin * Y + s1_const
    UniPoly s1_const;
};

// Subresultants of index 0 and 1 wrt Y via determinant polynomials
// (fraction-free). Requires deg_y(A) >= 1 and deg_y(B) >= 1.
Sres01 subresultants01(const BiPoly& A, const BiPoly& B);

// resultant wrt Y only
UniPoly resultant_y(const BiPoly& A, const BiPoly& B);

// Value of P(X, f) * u^deg_y(P) reduced mod G, where f = -v/u in Q[X]/(G).
// Exact: substituting Y -> -v/u and clearing the denominator by u^deg_y.
UniPoly eval_y_fraction_cleared(const BiPoly& P, const UniPoly& u, const UniPoly& v,
                                const UniPoly& G);

// fraction-free determinant of a square polynomial matrix (entries consumed)
UniPoly poly_matrix_det(std::vector<std::vector<UniPoly>> m);

}  // namespace algknot
