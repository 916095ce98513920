#include "algknot/bipoly.hpp"

#include <sstream>

#include "algknot/algebraic.hpp"
#include "algknot/errors.hpp"

namespace algknot {

namespace {
const UniPoly kZeroPoly;
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::of_x(const UniPoly& p) {
    if (p.is_zero()) return BiPoly();
    return BiPoly(std::vector<UniPoly>{p});
}

BiPoly BiPoly::of_y(const UniPoly& p) {
    std::vector<UniPoly> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(UniPoly::constant(p.coeff(k)));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::monomial(const Rat& a, int i, int j) {
    if (a.is_zero()) return BiPoly();
    std::vector<UniPoly> c(static_cast<size_t>(j) + 1);
    std::vector<Rat> xc(static_cast<size_t>(i) + 1, Rat(0));
    xc[static_cast<size_t>(i)] = a;
    c[static_cast<size_t>(j)] = UniPoly(std::move(xc));
    return BiPoly(std::move(c));
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

const UniPoly& BiPoly::coeff_y(int k) const {
    if (k < 0 || k > deg_y()) return kZeroPoly;
    return c_[static_cast<size_t>(k)];
}

const UniPoly& BiPoly::leading_y() const {
    if (is_zero()) return kZeroPoly;
    return c_.back();
}

Rat BiPoly::coeff(int i, int j) const { return coeff_y(j).coeff(i); }

BiPoly BiPoly::operator-() const {
    std::vector<UniPoly> c(c_);
    for (auto& p : c) p = -p;
    return BiPoly(std::move(c));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<UniPoly> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(std::move(c));
}

BiPoly BiPoly::scaled(const Rat& a) const {
    if (a.is_zero()) return BiPoly();
    std::vector<UniPoly> c(c_);
    for (auto& p : c) p = p.scaled(a);
    return BiPoly(std::move(c));
}

BiPoly BiPoly::mul_x(const UniPoly& p) const {
    if (p.is_zero()) return BiPoly();
    std::vector<UniPoly> c(c_);
    for (auto& q : c) q = q * p;
    return BiPoly(std::move(c));
}

UniPoly BiPoly::eval_y(const Rat& y) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc.scaled(y) + *it;
    return acc;
}

UniPoly BiPoly::eval_x(const Rat& x) const {
    std::vector<Rat> out(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].eval(x);
    return UniPoly(std::move(out));
}

BiPoly BiPoly::swap_vars() const {
    BiPoly out;
    for (int j = 0; j <= deg_y(); ++j)
        for (int i = 0; i <= c_[static_cast<size_t>(j)].degree(); ++i) {
            Rat a = c_[static_cast<size_t>(j)].coeff(i);
            if (!a.is_zero()) out += monomial(a, j, i);
        }
    return out;
}

BiPoly BiPoly::d_dy() const {
    if (c_.size() <= 1) return BiPoly();
    std::vector<UniPoly> c(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k].scaled(Rat(static_cast<long>(k)));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::d_dx() const {
    std::vector<UniPoly> c(c_);
    for (auto& p : c) p = p.derivative();
    return BiPoly(std::move(c));
}

std::string BiPoly::to_string(const std::string& xv, const std::string& yv) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg_y(); k >= 0; --k) {
        if (coeff_y(k).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_y(k).to_string(xv) << ")";
        if (k > 0) {
            os << yv;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// --- builders ---------------------------------------------------------------

BiPoly st_product(const UniPoly& a_of_s, const UniPoly& b_of_t) {
    std::vector<UniPoly> c;
    c.reserve(static_cast<size_t>(b_of_t.degree()) + 1);
    for (int k = 0; k <= b_of_t.degree(); ++k) c.push_back(a_of_s.scaled(b_of_t.coeff(k)));
    return BiPoly(std::move(c));
}

namespace {

// S_n(e, f) = (t^n - s^n)/(t - s): S_0 = 0, S_1 = 1, S_n = e S_{n-1} - f S_{n-2}
std::vector<BiPoly> power_dividends(int nmax) {
    std::vector<BiPoly> S(static_cast<size_t>(nmax) + 1);
    if (nmax >= 1) S[1] = BiPoly::monomial(Rat(1), 0, 0);
    BiPoly e = BiPoly::monomial(Rat(1), 1, 0);
    BiPoly f = BiPoly::monomial(Rat(1), 0, 1);
    for (int n = 2; n <= nmax; ++n)
        S[static_cast<size_t>(n)] =
            e * S[static_cast<size_t>(n - 1)] - f * S[static_cast<size_t>(n - 2)];
    return S;
}

}  // namespace

BiPoly divided_difference_ef(const UniPoly& A, const UniPoly& B) {
    // (A(s)B(t) - A(t)B(s))/(s - t)
    //   = -sum_{i<j} (a_i b_j - a_j b_i) f^i S_{j-i}(e, f)
    int n = std::max(A.degree(), B.degree());
    if (n < 1) return BiPoly();
    auto S = power_dividends(n);
    BiPoly f = BiPoly::monomial(Rat(1), 0, 1);
    BiPoly out;
    BiPoly fpow = BiPoly::monomial(Rat(1), 0, 0);
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Rat m = A.coeff(i) * B.coeff(j) - A.coeff(j) * B.coeff(i);
            if (!m.is_zero()) out -= (fpow * S[static_cast<size_t>(j - i)]).scaled(m);
        }
        fpow = fpow * f;
    }
    return out;
}

namespace {

// expand F(s,t) with s = (e+z)/2, t = (e-z)/2 into a BiPoly with X = e, Y = z
BiPoly to_ez(const BiPoly& st) {
    BiPoly e_plus_z = BiPoly::monomial(Rat(1, 2), 1, 0) + BiPoly::monomial(Rat(1, 2), 0, 1);
    BiPoly e_minus_z = BiPoly::monomial(Rat(1, 2), 1, 0) - BiPoly::monomial(Rat(1, 2), 0, 1);
    // powers of s and t
    int ds = st.deg_x(), dt = st.deg_y();
    std::vector<BiPoly> sp(static_cast<size_t>(std::max(ds, 0)) + 1),
        tp(static_cast<size_t>(std::max(dt, 0)) + 1);
    sp[0] = BiPoly::monomial(Rat(1), 0, 0);
    for (int i = 1; i <= ds; ++i) sp[static_cast<size_t>(i)] = sp[static_cast<size_t>(i - 1)] * e_plus_z;
    tp[0] = BiPoly::monomial(Rat(1), 0, 0);
    for (int j = 1; j <= dt; ++j) tp[static_cast<size_t>(j)] = tp[static_cast<size_t>(j - 1)] * e_minus_z;
    BiPoly out;
    for (int j = 0; j <= dt; ++j) {
        const UniPoly& cj = st.coeff_y(j);
        for (int i = 0; i <= cj.degree(); ++i) {
            Rat a = cj.coeff(i);
            if (a.is_zero()) continue;
            out += (sp[static_cast<size_t>(i)] * tp[static_cast<size_t>(j)]).scaled(a);
        }
    }
    return out;
}

// replace z^2 -> e^2 - 4f in a polynomial with only even z powers
BiPoly even_z_to_ef(const BiPoly& ez) {
    BiPoly disc = BiPoly::monomial(Rat(1), 2, 0) - BiPoly::monomial(Rat(4), 0, 1);
    BiPoly out, dpow = BiPoly::monomial(Rat(1), 0, 0);
    for (int k = 0; 2 * k <= ez.deg_y(); ++k) {
        const UniPoly& c = ez.coeff_y(2 * k);
        if (!c.is_zero()) out += dpow.mul_x(c);
        dpow = dpow * disc;
    }
    return out;
}

}  // namespace

BiPoly symmetrize_st(const BiPoly& st) {
    BiPoly ez = to_ez(st);
    for (int k = 1; k <= ez.deg_y(); k += 2)
        if (!ez.coeff_y(k).is_zero()) throw Error("symmetrize_st: input not symmetric");
    return even_z_to_ef(ez);
}

BiPoly antisymmetric_cofactor_st(const BiPoly& st) {
    // F antisymmetric: F(e, z) has odd z powers only; F/(s - t) = F/z
    BiPoly ez = to_ez(st);
    for (int k = 0; k <= ez.deg_y(); k += 2)
        if (!ez.coeff_y(k).is_zero()) throw Error("antisymmetric_cofactor_st: input not antisymmetric");
    std::vector<UniPoly> shifted;
    for (int k = 1; k <= ez.deg_y(); ++k) shifted.push_back(ez.coeff_y(k));
    return even_z_to_ef(BiPoly(std::move(shifted)));
}

BiPoly shear_x(const BiPoly& p, const Rat& lambda) {
    // X -> X' - lambda Y
    BiPoly sub = BiPoly::monomial(Rat(1), 1, 0) - BiPoly::monomial(lambda, 0, 1);
    BiPoly out;
    for (int j = 0; j <= p.deg_y(); ++j) {
        const UniPoly& cj = p.coeff_y(j);
        if (cj.is_zero()) continue;
        // Horner in X over the substituted variable
        BiPoly acc;
        for (int i = cj.degree(); i >= 0; --i) {
            acc = acc * sub;
            acc += BiPoly::monomial(cj.coeff(i), 0, 0);
        }
        out += acc * BiPoly::monomial(Rat(1), 0, j);
    }
    return out;
}

// --- elimination ------------------------------------------------------------

namespace {

// Bareiss determinant over Q[X]; entries are consumed.
UniPoly bareiss_det_poly(std::vector<std::vector<UniPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return UniPoly::constant(Rat(1));
    UniPoly prev = UniPoly::constant(Rat(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return UniPoly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                UniPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = UniPoly::div_exact(t, prev);
            }
            m[i][k] = UniPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

UniPoly poly_matrix_det(std::vector<std::vector<UniPoly>> m) { return bareiss_det_poly(std::move(m)); }

namespace {

// rows of the order-j subresultant frame: Y^(q-j-1) A .. A, Y^(p-j-1) B .. B,
// columns indexed by Y-degree p+q-j-1 down to 0
std::vector<std::vector<UniPoly>> sres_frame(const BiPoly& A, const BiPoly& B, int j) {
    const int p = A.deg_y(), q = B.deg_y();
    const int rows = (q - j) + (p - j);
    const int cols = p + q - j;
    std::vector<std::vector<UniPoly>> m(static_cast<size_t>(rows),
                                        std::vector<UniPoly>(static_cast<size_t>(cols)));
    for (int r = 0; r < q - j; ++r)
        for (int k = 0; k <= p; ++k)
            m[static_cast<size_t>(r)][static_cast<size_t>(p - k + r)] = A.coeff_y(k);
    for (int r = 0; r < p - j; ++r)
        for (int k = 0; k <= q; ++k)
            m[static_cast<size_t>(q - j + r)][static_cast<size_t>(q - k + r)] = B.coeff_y(k);
    return m;
}

UniPoly sres_det(const std::vector<std::vector<UniPoly>>& frame, int cols_keep, int extra_col) {
    const size_t n = frame.size();
    std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        for (int j = 0; j < cols_keep; ++j) m[i][static_cast<size_t>(j)] = frame[i][static_cast<size_t>(j)];
        m[i][n - 1] = frame[i][static_cast<size_t>(extra_col)];
    }
    return bareiss_det_poly(std::move(m));
}

}  // namespace

Sres01 subresultants01(const BiPoly& A, const BiPoly& B) {
    const int p = A.deg_y(), q = B.deg_y();
    if (p < 1 || q < 1) throw Error("subresultants01: both inputs must involve Y");
    Sres01 out;
    {
        auto frame = sres_frame(A, B, 0);
        out.res = sres_det(frame, p + q - 1, p + q - 1);
    }
    if (p + q >= 3) {
        auto frame = sres_frame(A, B, 1);
        // columns: Y^(p+q-2) ... Y^0; keep the first p+q-3, then pick Y^1, Y^0
        out.s1_lin = sres_det(frame, p + q - 3, p + q - 3);      // column of Y^1
        out.s1_const = sres_det(frame, p + q - 3, p + q - 2);    // column of Y^0
    } else {
        // p = q = 1: the gcd at a common root is linear; use A itself
        out.s1_lin = A.coeff_y(1);
        out.s1_const = A.coeff_y(0);
    }
    return out;
}

UniPoly resultant_y(const BiPoly& A, const BiPoly& B) {
    const int p = A.deg_y(), q = B.deg_y();
    if (p < 0 || q < 0) throw ZeroPolynomial("resultant of zero polynomial");
    if (p == 0 && q == 0) return UniPoly::constant(Rat(1));
    if (p == 0) {
        // Res(a0(X), B) = a0^deg_y(B)
        UniPoly out = UniPoly::constant(Rat(1));
        for (int k = 0; k < q; ++k) out = out * A.coeff_y(0);
        return out;
    }
    if (q == 0) {
        UniPoly out = UniPoly::constant(Rat(1));
        for (int k = 0; k < p; ++k) out = out * B.coeff_y(0);
        return out;
    }
    auto frame = sres_frame(A, B, 0);
    return sres_det(frame, p + q - 1, p + q - 1);
}

UniPoly eval_y_fraction_cleared(const BiPoly& P, const UniPoly& u, const UniPoly& v,
                                const UniPoly& G) {
    // P(X, -v/u) * u^deg_y(P) mod G, via Horner:
    //   acc_n = c_n;  acc_{k} = acc_{k+1} * (-v) + c_k * u^(n-k)
    if (P.is_zero()) return UniPoly();
    const int n = P.deg_y();
    const UniPoly negv = -v;
    UniPoly acc = mod_reduce(P.coeff_y(n), G);
    UniPoly upow = UniPoly::constant(Rat(1));
    for (int k = n - 1; k >= 0; --k) {
        upow = mod_reduce(upow * u, G);
        acc = mod_reduce(acc * negv + P.coeff_y(k) * upow, G);
    }
    return acc;
}

}  // namespace algknot
