#include "algknot/mwgen.hpp"

#include <algorithm>

#include "algknot/errors.hpp"
#include "algknot/projection.hpp"
#include "algknot/rng.hpp"

namespace algknot {

SpaceCurve twisted_cubic_curve() {
    return SpaceCurve({UniPoly::constant(Rat(1)), UniPoly::variable(),
                       UniPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}),
                       UniPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)})});
}

SpaceCurve quadric_specimen(int d, const Rat& a_root, const std::vector<Rat>& c_roots,
                            const std::vector<Rat>& e_roots) {
    if (d < 3) throw InvalidParameters("quadric specimen needs degree >= 3");
    if (static_cast<int>(c_roots.size()) != d - 1 || static_cast<int>(e_roots.size()) != d - 1)
        throw InvalidParameters("root lists must have length d-1");
    // strict interlacing c_0 < e_0 < c_1 < e_1 < ...
    for (int k = 0; k + 1 < d; ++k) {
        if (k > 0 && !(e_roots[static_cast<size_t>(k - 1)] < c_roots[static_cast<size_t>(k)]))
            throw NotSmooth("roots must interlace strictly");
        if (!(c_roots[static_cast<size_t>(k)] < e_roots[static_cast<size_t>(k)]))
            throw NotSmooth("roots must interlace strictly");
    }
    UniPoly a = UniPoly::linear(-a_root, Rat(1));
    UniPoly c = UniPoly::from_roots(c_roots);
    UniPoly e = UniPoly::from_roots(e_roots);
    return SpaceCurve({a * c, a * e, c, e});
}

MwReport verify_mw(const SpaceCurve& K, int centers, std::uint64_t seed) {
    MwReport rep;
    rep.degree = K.degree();
    const int nd = max_writhe(rep.degree);
    try {
        rep.smooth = check_smooth(K).ok();
    } catch (const Error&) {
        return rep;
    }
    auto prof = torsion_profile(K, AffineChart3::standard());
    rep.torsion_definite = prof.zero_params.empty() && prof.sign_intervals.size() == 1 &&
                           prof.sign_intervals[0].sign == prof.sign_at_infinity &&
                           prof.sign_at_infinity != 0;
    if (rep.torsion_definite) rep.torsion_sign = prof.sign_at_infinity;

    bool have_w = false;
    rep.writhe_constant = true;
    rep.census_ok = true;
    for (int c = 0; c < centers; ++c) {
        WritheReport wr;
        try {
            wr = encomplexed_writhe(K, random_center(K, seed + 31 * static_cast<std::uint64_t>(c), c),
                                    12);
        } catch (const Error&) {
            continue;
        }
        ++rep.centers_checked;
        if (!have_w) {
            rep.w = wr.w;
            have_w = true;
        } else if (wr.w != rep.w) {
            rep.writhe_constant = false;
        }
        // maximal-writhe census: no imaginary pairs, at most one solitary
        // node, every crossing carrying the sign of w
        if (std::abs(wr.w) == nd) {
            bool ok = wr.census_imaginary == 0 && wr.census_solitary <= 1 &&
                      wr.crossing_contribution ==
                          (wr.w > 0 ? wr.census_crossings : -wr.census_crossings);
            rep.census_ok = rep.census_ok && ok;
        }
    }
    if (!have_w || rep.centers_checked < std::max(3, centers / 2)) return rep;
    rep.mirror_of_maximal = (rep.w == -nd);
    bool torsion_matches = rep.torsion_definite && (rep.torsion_sign == (rep.w > 0 ? 1 : -1));
    rep.is_mw = rep.smooth && rep.writhe_constant && std::abs(rep.w) == nd && rep.census_ok &&
                torsion_matches;
    return rep;
}

SpaceCurve corpus_specimen(int d) {
    if (d < 3 || d > 6) throw InvalidParameters("corpus specimens cover degrees 3 to 6");
    if (d == 3) return twisted_cubic_curve();
    std::vector<Rat> c_roots, e_roots;
    for (int k = 0; k < d - 1; ++k) {
        c_roots.push_back(Rat(2 * k));
        e_roots.push_back(Rat(2 * k + 1));
    }
    return quadric_specimen(d, Rat(-2), c_roots, e_roots);
}

SpaceCurve mw_specimen(int d, std::uint64_t seed, int budget) {
    if (d < 3) throw InvalidParameters("degree must be at least 3");
    if (d == 3) return twisted_cubic_curve();
    Rng rng(seed ^ 0xA5A5A5A5ULL);
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<Rat> c_roots, e_roots;
        Rat a_root;
        if (attempt == 0) {
            // deterministic first candidate: evens against odds
            for (int k = 0; k < d - 1; ++k) {
                c_roots.push_back(Rat(2 * k));
                e_roots.push_back(Rat(2 * k + 1));
            }
            a_root = Rat(-2);
        } else {
            Rat prev(-static_cast<long>(d) - 2);
            for (int k = 0; k < d - 1; ++k) {
                Rat cr = prev + Rat(1 + static_cast<long>(rng.below(3)), 1 + static_cast<long>(rng.below(2)));
                Rat er = cr + Rat(1 + static_cast<long>(rng.below(3)), 1 + static_cast<long>(rng.below(2)));
                c_roots.push_back(cr);
                e_roots.push_back(er);
                prev = er;
            }
            a_root = Rat(rng.range(-8, 8), 1 + static_cast<long>(rng.below(2)));
        }
        SpaceCurve cand = [&] {
            try {
                return quadric_specimen(d, a_root, c_roots, e_roots);
            } catch (const Error&) {
                return twisted_cubic_curve();  // placeholder, rejected below
            }
        }();
        if (cand.degree() != d) continue;
        MwReport rep = verify_mw(cand, 8, seed + static_cast<std::uint64_t>(attempt));
        if (!rep.is_mw) continue;
        if (rep.mirror_of_maximal) {
            SpaceCurve mirrored = mirror(cand);
            MwReport rep2 = verify_mw(mirrored, 8, seed + static_cast<std::uint64_t>(attempt) + 7);
            if (rep2.mw_positive()) return mirrored;
            continue;
        }
        return cand;
    }
    throw SearchFailed("no maximally writhed specimen of degree " + std::to_string(d) +
                       " found within budget");
}

}  // namespace algknot
