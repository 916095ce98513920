#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algknot/projection.hpp"
#include "algknot/rng.hpp"

namespace algknot {

// Integer Laurent polynomial with half-integer exponents (keys store twice
// the exponent). Canonical form strips zero coefficients.
class LaurentPoly {
  public:
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return term(1, 0); }
    static LaurentPoly term(long long coeff, int twice_exp);

    void add(long long coeff, int twice_exp);
    bool is_zero() const { return c_.empty(); }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    // substitute t -> 1/t
    LaurentPoly inverted() const;
    // canonical representative modulo units +-t^(k/2): lowest exponent 0,
    // lowest coefficient positive
    LaurentPoly unit_normalized() const;
    static bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

    const std::map<int, long long>& terms() const { return c_; }
    std::string to_string(const std::string& var = "t") const;

  private:
    void strip();
    std::map<int, long long> c_;
};

// Oriented link diagram as a combinatorial map. Each crossing has four slots
// in the order (under-in, over-in, under-out, over-out); edges carry the
// orientation and planarity comes from the per-sign cyclic slot order.
class Diagram {
  public:
    static constexpr int kUnderIn = 0, kOverIn = 1, kUnderOut = 2, kOverOut = 3;

    int crossings() const { return static_cast<int>(sign_.size()); }
    int edges() const { return static_cast<int>(edge_count_); }
    int components() const { return components_; }
    int sign(int c) const { return sign_[static_cast<size_t>(c)]; }
    int writhe() const;
    int edge_at(int c, int slot) const {
        return slots_[static_cast<size_t>(c)][static_cast<size_t>(slot)];
    }

    // build from per-crossing slot edge ids; validates the matching
    static Diagram from_slots(std::vector<int> signs, std::vector<std::array<int, 4>> slots,
                              int unknot_components = 0);
    // k-component unlink (no crossings)
    static Diagram unlink(int k);

    // cyclic counterclockwise slot order at a crossing (planar rotation)
    std::array<int, 4> cyclic_slots(int c) const;

    // standard PD tuples (under-in, then counterclockwise)
    std::vector<std::array<int, 4>> pd_code() const;
    std::string pd_string() const;

    // faces of the planar map, as dart cycles; used by the move generators
    struct Dart {
        int crossing;
        int cyc_pos;  // position in cyclic_slots
        friend bool operator==(const Dart& a, const Dart& b) {
            return a.crossing == b.crossing && a.cyc_pos == b.cyc_pos;
        }
    };
    std::vector<std::vector<Dart>> faces() const;

    // Reidemeister moves of types 1 and 2 (used by the invariance tests and
    // as sanity machinery): each returns the rewritten diagram.
    Diagram r1_add(int edge, bool positive_kink, Rng& rng) const;
    Diagram r2_add(int edge_over, int edge_under) const;  // edges must share a face
    std::optional<Diagram> r1_remove() const;             // removes one kink if present
    std::optional<Diagram> r2_remove() const;             // removes one bigon if present

    // random legal move sequence (R1/R2 additions and removals)
    Diagram random_moves(Rng& rng, int count, int max_crossings) const;

    int unknot_components() const { return unknot_components_; }

  private:
    std::vector<int> sign_;
    std::vector<std::array<int, 4>> slots_;
    size_t edge_count_ = 0;
    int components_ = 0;
    int unknot_components_ = 0;

    void recount();
};

// --- invariants ---------------------------------------------------------------

// Kauffman bracket state sum normalized by the writhe; crossing budget guards
// the 2^n states.
LaurentPoly jones(const Diagram& d, int max_crossings = 24);

// Alexander polynomial of a knot diagram (single component), normalized up to
// units; the unit_normalized representative is returned.
LaurentPoly alexander(const Diagram& d);

// closed braid (sigma_1 ... sigma_{q-1})^p
Diagram torus_reference(int p, int q);

// classical closed form (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)), unit-normalized
LaurentPoly torus_alexander_closed_form(int p, int q);

// --- projective diagrams -------------------------------------------------------

struct ProjVisit {
    int crossing;
    bool over;
};

struct ProjDiagram {
    // visits in increasing parameter order along the affine parameter line
    std::vector<ProjVisit> visits;      // length 2 * crossings
    std::vector<int> signs;             // per crossing
    std::vector<int> antipodal;         // per crossing: +1 same lift, -1 opposite lift
    // exact lift data per crossing, aligned to (earlier visit, later visit):
    // the signs of <Gamma(z), p> at the two parameters and the sign of the
    // squared height comparison, which together order the two lifted points
    // along the fiber arc toward the viewpoint
    std::vector<std::array<int, 2>> lift_h_signs;
    std::vector<int> lift_d2;
    int solitary_count = 0;
    int curve_degree = 0;
    ProjPoint3 center;

    int crossing_count() const { return static_cast<int>(signs.size()); }
    std::string gauss_code() const;
};

ProjDiagram build_diagram(const SpaceCurve& K, const ProjPoint3& p);
ProjDiagram build_diagram(const DoublePointAnalysis& a);

// antipodal double cover of the projective diagram: a diagram of the lifted
// link in the 3-sphere
Diagram lift_double_cover(const ProjDiagram& d);

// --- identification -------------------------------------------------------------

struct TorusIdentification {
    bool consistent = false;
    int p = 0, q = 0;
    bool mirrored = false;  // matched the mirror reference (w = -N_d inputs)
    bool jones_checked = false, alexander_checked = false;
    LaurentPoly jones_lift, jones_reference;
    LaurentPoly alexander_lift, alexander_reference, alexander_closed;
    int lift_crossings = 0, lift_components = 0;
    ProjPoint3 center_used;
    std::string note;  // matching invariants certify consistency, not isotopy
};

// Builds a diagram from a census-clean center, lifts it, and compares Jones
// (and Alexander for knots) against the standard torus reference of type
// (d, d-2).
TorusIdentification identify_torus(const SpaceCurve& K, std::uint64_t seed = 0,
                                   int jones_budget = 24);

}  // namespace algknot
