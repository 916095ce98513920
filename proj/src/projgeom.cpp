#include "algknot/projgeom.hpp"

#include <sstream>

#include "algknot/errors.hpp"

namespace algknot {

namespace {

template <size_t N>
void canon(std::array<Rat, N>& v) {
    for (size_t i = 0; i < N; ++i) {
        if (!v[i].is_zero()) {
            Rat inv = v[i].inverse();
            for (size_t j = i; j < N; ++j) v[j] *= inv;
            return;
        }
    }
}

template <size_t N>
bool allzero(const std::array<Rat, N>& v) {
    for (const Rat& r : v)
        if (!r.is_zero()) return false;
    return true;
}

template <size_t N>
std::string coords_str(const std::array<Rat, N>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < N; ++i) {
        if (i) os << " : ";
        os << v[i].to_string();
    }
    os << ")";
    return os.str();
}

}  // namespace

ProjPoint3::ProjPoint3(Rat a, Rat b, Rat c, Rat d) : x{a, b, c, d} {
    if (is_zero()) throw DegeneratePosition("projective point with all coordinates zero");
    canonicalize();
}
void ProjPoint3::canonicalize() { canon(x); }
bool ProjPoint3::is_zero() const { return allzero(x); }
std::string ProjPoint3::to_string() const { return coords_str(x); }

PlaneP3::PlaneP3(Rat a0, Rat a1, Rat a2, Rat a3) : a{a0, a1, a2, a3} {
    if (is_zero()) throw DegeneratePosition("zero plane covector");
    canonicalize();
}
void PlaneP3::canonicalize() { canon(a); }
bool PlaneP3::is_zero() const { return allzero(a); }
Rat PlaneP3::eval(const ProjPoint3& p) const {
    Rat s(0);
    for (int i = 0; i < 4; ++i) s += a[static_cast<size_t>(i)] * p.x[static_cast<size_t>(i)];
    return s;
}

void ProjLine3::canonicalize() { canon(pl); }
bool ProjLine3::is_zero() const { return allzero(pl); }
Rat ProjLine3::quadric_residual() const {
    return pl[0] * pl[5] - pl[1] * pl[4] + pl[2] * pl[3];
}
std::string ProjLine3::to_string() const { return coords_str(pl); }

ProjPoint2::ProjPoint2(Rat a, Rat b, Rat c) : x{a, b, c} {
    if (is_zero()) throw DegeneratePosition("projective point with all coordinates zero");
    canonicalize();
}
void ProjPoint2::canonicalize() { canon(x); }
bool ProjPoint2::is_zero() const { return allzero(x); }
std::string ProjPoint2::to_string() const { return coords_str(x); }

ProjLine2::ProjLine2(Rat a0, Rat a1, Rat a2) : a{a0, a1, a2} {
    if (is_zero()) throw DegeneratePosition("zero line covector");
    canonicalize();
}
void ProjLine2::canonicalize() { canon(a); }
bool ProjLine2::is_zero() const { return allzero(a); }
Rat ProjLine2::eval(const ProjPoint2& p) const {
    return a[0] * p.x[0] + a[1] * p.x[1] + a[2] * p.x[2];
}

// --- chart ------------------------------------------------------------------

AffineChart3 AffineChart3::standard() {
    AffineChart3 c;
    for (int i = 0; i < 4; ++i) c.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
    return c;
}

AffineChart3 AffineChart3::from_infinity_plane(const PlaneP3& h) {
    AffineChart3 c;
    c.m[0] = h.a;
    size_t pivot = 0;
    while (pivot < 4 && h.a[pivot].is_zero()) ++pivot;
    size_t row = 1;
    for (size_t j = 0; j < 4; ++j) {
        if (j == pivot) continue;
        c.m[row][j] = Rat(1);
        ++row;
    }
    if (c.det().sign() < 0) std::swap(c.m[2], c.m[3]);
    return c;
}

PlaneP3 AffineChart3::infinity_plane() const { return PlaneP3(m[0][0], m[0][1], m[0][2], m[0][3]); }
Rat AffineChart3::det() const { return det4(m); }
int AffineChart3::orientation() const { return det().sign(); }

// --- determinants -----------------------------------------------------------

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rat det4(const std::array<std::array<Rat, 4>, 4>& m) {
    Rat total(0);
    for (size_t c = 0; c < 4; ++c) {
        if (m[0][c].is_zero()) continue;
        std::array<std::array<Rat, 3>, 3> sub;
        for (size_t i = 1; i < 4; ++i) {
            size_t cc = 0;
            for (size_t j = 0; j < 4; ++j) {
                if (j == c) continue;
                sub[i - 1][cc++] = m[i][j];
            }
        }
        Rat term = m[0][c] * det3(sub);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

// --- joins and meets ---------------------------------------------------------

ProjLine3 join(const ProjPoint3& p, const ProjPoint3& q) {
    ProjLine3 l;
    l.pl[0] = p.x[0] * q.x[1] - p.x[1] * q.x[0];
    l.pl[1] = p.x[0] * q.x[2] - p.x[2] * q.x[0];
    l.pl[2] = p.x[0] * q.x[3] - p.x[3] * q.x[0];
    l.pl[3] = p.x[1] * q.x[2] - p.x[2] * q.x[1];
    l.pl[4] = p.x[1] * q.x[3] - p.x[3] * q.x[1];
    l.pl[5] = p.x[2] * q.x[3] - p.x[3] * q.x[2];
    if (l.is_zero()) throw DegeneratePosition("join of coincident points");
    l.canonicalize();
    return l;
}

namespace {

// antisymmetric matrix P with P[i][j] = p_ij; columns are points on the line
std::array<std::array<Rat, 4>, 4> pluecker_matrix(const ProjLine3& l) {
    std::array<std::array<Rat, 4>, 4> P{};
    auto set = [&](int i, int j, const Rat& v) {
        P[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        P[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v;
    };
    set(0, 1, l.pl[0]);
    set(0, 2, l.pl[1]);
    set(0, 3, l.pl[2]);
    set(1, 2, l.pl[3]);
    set(1, 3, l.pl[4]);
    set(2, 3, l.pl[5]);
    return P;
}

}  // namespace

std::pair<ProjPoint3, ProjPoint3> line_span(const ProjLine3& l) {
    auto P = pluecker_matrix(l);
    ProjPoint3 a, b;
    bool have_a = false;
    for (size_t j = 0; j < 4; ++j) {
        std::array<Rat, 4> col;
        for (size_t i = 0; i < 4; ++i) col[i] = P[i][j];
        if (allzero(col)) continue;
        if (!have_a) {
            a.x = col;
            a.canonicalize();
            have_a = true;
        } else {
            ProjPoint3 cand;
            cand.x = col;
            cand.canonicalize();
            if (!(cand == a)) {
                b = cand;
                return {a, b};
            }
        }
    }
    throw DegeneratePosition("degenerate Pluecker vector");
}

PlaneP3 plane_through(const ProjLine3& l, const ProjPoint3& p) {
    auto [a, b] = line_span(l);
    std::array<Rat, 4> n{};
    // covector components of y -> det[a, b, p, y]
    for (size_t k = 0; k < 4; ++k) {
        std::array<std::array<Rat, 3>, 3> sub;
        size_t cc = 0;
        for (size_t j = 0; j < 4; ++j) {
            if (j == k) continue;
            sub[0][cc] = a.x[j];
            sub[1][cc] = b.x[j];
            sub[2][cc] = p.x[j];
            ++cc;
        }
        Rat minor = det3(sub);
        n[k] = (k % 2 == 0) ? -minor : minor;  // expansion along the last row
    }
    if (allzero(n)) throw DegeneratePosition("plane through line and incident point");
    PlaneP3 h;
    h.a = n;
    h.canonicalize();
    return h;
}

PlaneP3 plane_through_points(const ProjPoint3& a, const ProjPoint3& b, const ProjPoint3& c) {
    return plane_through(join(a, b), c);
}

ProjPoint3 meet(const ProjLine3& l, const PlaneP3& h) {
    auto P = pluecker_matrix(l);
    std::array<Rat, 4> pt{};
    for (size_t i = 0; i < 4; ++i) {
        Rat s(0);
        for (size_t j = 0; j < 4; ++j) s += P[i][j] * h.a[j];
        pt[i] = s;
    }
    if (allzero(pt)) throw DegeneratePosition("line lies in the plane");
    ProjPoint3 p;
    p.x = pt;
    p.canonicalize();
    return p;
}

ProjLine3 line_from_planes(const PlaneP3& a, const PlaneP3& b) {
    // dual Pluecker coordinates q_ij = a_i b_j - a_j b_i, then the point-line
    // correspondence p01=q23, p02=-q13, p03=q12, p12=q03, p13=-q02, p23=q01
    auto q = [&](int i, int j) {
        return a.a[static_cast<size_t>(i)] * b.a[static_cast<size_t>(j)] -
               a.a[static_cast<size_t>(j)] * b.a[static_cast<size_t>(i)];
    };
    ProjLine3 l;
    l.pl[0] = q(2, 3);
    l.pl[1] = -q(1, 3);
    l.pl[2] = q(1, 2);
    l.pl[3] = q(0, 3);
    l.pl[4] = -q(0, 2);
    l.pl[5] = q(0, 1);
    if (l.is_zero()) throw DegeneratePosition("intersection of coincident planes");
    l.canonicalize();
    return l;
}

bool point_on_line(const ProjPoint3& p, const ProjLine3& l) {
    auto [a, b] = line_span(l);
    // rank [a; b; p] <= 2: all 3x3 minors of the 3x4 matrix vanish
    for (size_t drop = 0; drop < 4; ++drop) {
        std::array<std::array<Rat, 3>, 3> sub;
        size_t cc = 0;
        for (size_t j = 0; j < 4; ++j) {
            if (j == drop) continue;
            sub[0][cc] = a.x[j];
            sub[1][cc] = b.x[j];
            sub[2][cc] = p.x[j];
            ++cc;
        }
        if (!det3(sub).is_zero()) return false;
    }
    return true;
}

bool line_in_plane(const ProjLine3& l, const PlaneP3& h) {
    auto [a, b] = line_span(l);
    return h.eval(a).is_zero() && h.eval(b).is_zero();
}

Rat line_pairing(const ProjLine3& a, const ProjLine3& b) {
    return a.pl[0] * b.pl[5] - a.pl[1] * b.pl[4] + a.pl[2] * b.pl[3] + a.pl[3] * b.pl[2] -
           a.pl[4] * b.pl[1] + a.pl[5] * b.pl[0];
}

ProjLine2 join2(const ProjPoint2& p, const ProjPoint2& q) {
    ProjLine2 l;
    l.a[0] = p.x[1] * q.x[2] - p.x[2] * q.x[1];
    l.a[1] = p.x[2] * q.x[0] - p.x[0] * q.x[2];
    l.a[2] = p.x[0] * q.x[1] - p.x[1] * q.x[0];
    if (l.is_zero()) throw DegeneratePosition("join of coincident plane points");
    l.canonicalize();
    return l;
}

ProjPoint2 meet2(const ProjLine2& a, const ProjLine2& b) {
    ProjPoint2 p;
    p.x[0] = a.a[1] * b.a[2] - a.a[2] * b.a[1];
    p.x[1] = a.a[2] * b.a[0] - a.a[0] * b.a[2];
    p.x[2] = a.a[0] * b.a[1] - a.a[1] * b.a[0];
    if (p.is_zero()) throw DegeneratePosition("meet of coincident lines");
    p.canonicalize();
    return p;
}

std::array<std::array<Rat, 4>, 3> projection_map(const ProjPoint3& p) {
    size_t pivot = 0;
    while (pivot < 4 && p.x[pivot].is_zero()) ++pivot;
    std::array<std::array<Rat, 4>, 3> rows{};
    size_t r = 0;
    for (size_t j = 0; j < 4; ++j) {
        if (j == pivot) continue;
        rows[r][j] = Rat(1);
        rows[r][pivot] = -p.x[j];  // x_j - p_j x_pivot (p_pivot = 1 after canonicalization)
        ++r;
    }
    return rows;
}

ProjPoint2 apply_projection(const std::array<std::array<Rat, 4>, 3>& m, const ProjPoint3& p) {
    std::array<Rat, 3> v{};
    for (size_t i = 0; i < 3; ++i) {
        Rat s(0);
        for (size_t j = 0; j < 4; ++j) s += m[i][j] * p.x[j];
        v[i] = s;
    }
    if (allzero(v)) throw DegeneratePosition("projection applied to its own center");
    ProjPoint2 q;
    q.x = v;
    q.canonicalize();
    return q;
}

ProjLine3 fiber_line(const ProjPoint3& center, const std::array<std::array<Rat, 4>, 3>& m,
                     const ProjPoint2& q) {
    // two independent covectors w with w . q = 0, by the same pivot rule
    size_t pivot = 0;
    while (pivot < 3 && q.x[pivot].is_zero()) ++pivot;
    std::array<std::array<Rat, 3>, 2> w{};
    size_t r = 0;
    for (size_t j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        w[r][j] = Rat(1);
        w[r][pivot] = -q.x[j];
        ++r;
    }
    // planes (w^T m) x = 0 intersect along the fiber
    std::array<PlaneP3, 2> planes;
    for (size_t k = 0; k < 2; ++k) {
        std::array<Rat, 4> c{};
        for (size_t j = 0; j < 4; ++j)
            for (size_t i = 0; i < 3; ++i) c[j] += w[k][i] * m[i][j];
        PlaneP3 h;
        h.a = c;
        if (h.is_zero()) throw DegeneratePosition("degenerate fiber plane");
        h.canonicalize();
        planes[k] = h;
    }
    ProjLine3 l = line_from_planes(planes[0], planes[1]);
    if (!point_on_line(center, l)) throw Error("fiber line misses the center");
    return l;
}

}  // namespace algknot
