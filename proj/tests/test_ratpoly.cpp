#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algknot/algebraic.hpp"
#include "algknot/errors.hpp"
#include "algknot/poly.hpp"
#include "algknot/rng.hpp"

using namespace algknot;

namespace {

UniPoly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.push_back(Rat(v));
    return UniPoly(std::move(c));
}

UniPoly random_poly(Rng& rng, int deg, long span = 9) {
    std::vector<Rat> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = Rat(rng.range(-span, span));
    if (c.back().is_zero()) c.back() = Rat(1);
    return UniPoly(std::move(c));
}

// total real projective roots (with multiplicity) of a pencil member,
// independent of interlace_check's internals
int member_real_root_mult(const BinForm& F) {
    if (F.is_zero()) return -1;  // caller skips the zero member
    int total = F.infinity_mult();
    if (F.affine().degree() > 0)
        for (const auto& [fac, mult] : squarefree_decomposition(F.affine()))
            total += mult * SturmChain(fac).count_all();
    return total;
}

bool pencil_oracle(const BinForm& A, const BinForm& B, int samples) {
    // sweep (lambda : mu) over a projective range of rational slopes
    for (int k = -samples / 2; k <= samples / 2; ++k) {
        Rat lam(k, samples / 4 + 1);
        UniPoly aff = A.affine().scaled(lam) + B.affine();
        BinForm member(aff, A.degree());
        if (member.is_zero()) continue;
        if (member_real_root_mult(member) != A.degree()) return false;
    }
    // and the member at infinity of the pencil parameter: A itself
    if (!A.is_zero() && member_real_root_mult(A) != A.degree()) return false;
    return true;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rat::from_string("6/4") == Rat(3, 2));
    CHECK(Rat::from_string("-6/4").to_string() == "-3/2");
    CHECK(Rat::from_string("7").to_string() == "7");
    CHECK(Rat(5, 1).to_string() == "5");
    CHECK_THROWS_AS(Rat::from_string("1/0"), Error);
    CHECK(Rat(-4, 8).num() == BigInt(-1));
    CHECK(Rat(-4, 8).den() == BigInt(2));
}

TEST_CASE("unipoly arithmetic basics") {
    UniPoly p = P({-1, 0, 1});  // t^2 - 1
    UniPoly q = P({-2, 1});     // t - 2
    CHECK(p.eval(Rat(3)) == Rat(8));
    UniPoly quo, rem;
    UniPoly::divmod(p, q, quo, rem);
    CHECK(quo == P({2, 1}));
    CHECK(rem == P({3}));
    CHECK((quo * q + rem) == p);
    CHECK(p.derivative() == P({0, 2}));
    CHECK(UniPoly::from_roots({Rat(1), Rat(-1)}) == p);
}

TEST_CASE("sturm_count spec examples") {
    CHECK(sturm_count(P({-1, 0, 1}), Rat(-2), Rat(2)) == 2);
    CHECK(sturm_count(P({1, 0, 1}), Rat(-10), Rat(10)) == 0);
    CHECK(sturm_count(P({1, -3, 0, 1}), Rat(-2), Rat(2)) == 3);
    CHECK_THROWS_AS(sturm_count(UniPoly(), Rat(0), Rat(1)), ZeroPolynomial);
}

TEST_CASE("sturm_count half-open endpoint convention") {
    UniPoly p = P({-1, 0, 1});
    CHECK(sturm_count(p, Rat(0), Rat(1)) == 1);   // root at 1 included
    CHECK(sturm_count(p, Rat(1), Rat(2)) == 0);   // excluded at lo
    CHECK(sturm_count(p, Rat(-1), Rat(1)) == 1);
}

TEST_CASE("isolate_real_roots spec examples") {
    SUBCASE("t^2 - 1 as degree-2 form") {
        auto iso = isolate_real_roots(BinForm(P({-1, 0, 1}), 2));
        REQUIRE(iso.intervals.size() == 2);
        CHECK(!iso.includes_infinity());
        CHECK(iso.intervals[0].multiplicity == 1);
        CHECK(iso.intervals[0].hi < Rat(0));
        CHECK(iso.intervals[1].lo >= Rat(0));
        CHECK(iso.total_multiplicity() == 2);
    }
    SUBCASE("t as degree-2 form has a root at infinity") {
        auto iso = isolate_real_roots(BinForm(P({0, 1}), 2));
        REQUIRE(iso.intervals.size() == 1);
        CHECK(iso.infinity_multiplicity == 1);
        CHECK(iso.intervals[0].lo <= Rat(0));
        CHECK(iso.intervals[0].hi >= Rat(0));
        CHECK(iso.intervals[0].multiplicity == 1);
    }
    SUBCASE("(t-1)^2 as degree-2 form") {
        auto iso = isolate_real_roots(BinForm(P({1, -2, 1}), 2));
        REQUIRE(iso.intervals.size() == 1);
        CHECK(iso.intervals[0].multiplicity == 2);
        CHECK(!iso.includes_infinity());
    }
}

TEST_CASE("resultant spec examples") {
    CHECK(resultant(P({-1, 0, 1}), P({-2, 1})) == Rat(3));
    CHECK(resultant(P({-1, 1}), P({-1, 1})) == Rat(0));
    CHECK(resultant(P({1, 0, 1}), P({4, 0, 1})) == Rat(9));
    CHECK_THROWS_AS(resultant(UniPoly(), P({1})), ZeroPolynomial);
}

TEST_CASE("resultant bilinearity sanity") {
    // Res(p, q1*q2) = Res(p,q1) * Res(p,q2)
    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        UniPoly p = random_poly(rng, 3);
        UniPoly q1 = random_poly(rng, 2);
        UniPoly q2 = random_poly(rng, 2);
        CHECK(resultant(p, q1 * q2) == resultant(p, q1) * resultant(p, q2));
    }
}

TEST_CASE("interlace_check spec examples") {
    CHECK(interlace_check(BinForm(P({-1, 0, 1}), 2), BinForm(P({0, 1}), 2)));
    CHECK_FALSE(interlace_check(BinForm(P({1, 0, 1}), 2), BinForm(P({0, 0, 1}), 2)));
    UniPoly a = UniPoly::from_roots({Rat(1), Rat(3)});
    UniPoly b = UniPoly::from_roots({Rat(2), Rat(4)});
    CHECK(interlace_check(BinForm(a, 2), BinForm(b, 2)));
    CHECK_THROWS_AS(interlace_check(BinForm(UniPoly(), 2), BinForm(UniPoly(), 2)), ZeroPolynomial);
}

TEST_CASE("interlace_check nested roots fail") {
    UniPoly a = UniPoly::from_roots({Rat(-1), Rat(1)});
    UniPoly b = UniPoly::from_roots({Rat(-2), Rat(2)});
    CHECK_FALSE(interlace_check(BinForm(a, 2), BinForm(b, 2)));
}

TEST_CASE("interlace_check shared factors are allowed when real") {
    // (t-1)(t-3) and (t-1)(t-5): shared real root, quotient pencil linear
    UniPoly a = UniPoly::from_roots({Rat(1), Rat(3)});
    UniPoly b = UniPoly::from_roots({Rat(1), Rat(5)});
    CHECK(interlace_check(BinForm(a, 2), BinForm(b, 2)));
    // shared complex factor fails the strict check but passes the base-free one
    UniPoly c = P({1, 0, 1});  // t^2+1
    BinForm A(c * P({-1, 1}), 3), B(c * P({-5, 1}), 3);
    CHECK_FALSE(interlace_check(A, B));
    CHECK(pencil_totally_real(A, B, false));
}

TEST_CASE("property: sturm total count matches isolation") {
    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        int deg = 1 + static_cast<int>(rng.below(8));
        UniPoly p = squarefree_part(random_poly(rng, deg));
        if (p.degree() < 1) continue;
        Rat big(1000000);
        int by_sturm = sturm_count(p, -big, big);
        auto iso = isolate_real_roots(BinForm::of(p));
        CHECK(by_sturm == iso.distinct_finite_count());
    }
}

TEST_CASE("property: resultant vanishes exactly for planted common factors") {
    Rng rng(13);
    for (int it = 0; it < 40; ++it) {
        UniPoly common = P({rng.range(-5, 5), 1});
        UniPoly p = random_poly(rng, 2 + static_cast<int>(rng.below(3)));
        UniPoly q = random_poly(rng, 2 + static_cast<int>(rng.below(3)));
        CHECK(resultant(p * common, q * common) == Rat(0));
        bool coprime = poly_gcd(p, q).degree() == 0;
        CHECK((resultant(p, q) != Rat(0)) == coprime);
    }
}

TEST_CASE("property: interlace_check agrees with pencil sampling oracle") {
    Rng rng(17);
    int checked = 0;
    for (int it = 0; it < 120; ++it) {
        int deg = 2 + static_cast<int>(rng.below(5));
        BinForm A, B;
        if (rng.coin()) {
            // real-rooted candidates, sometimes genuinely interlacing
            std::vector<Rat> ra, rb;
            for (int k = 0; k < deg; ++k) {
                ra.push_back(Rat(2 * k) + Rat(rng.range(0, 1)));
                rb.push_back(Rat(2 * k + 1) + Rat(rng.range(0, 1)));
            }
            A = BinForm(UniPoly::from_roots(ra), deg);
            B = BinForm(UniPoly::from_roots(rb), deg);
        } else {
            A = BinForm(random_poly(rng, deg), deg);
            B = BinForm(random_poly(rng, deg), deg);
        }
        bool fast = interlace_check(A, B);
        bool sampled = pencil_oracle(A, B, 1000);
        if (fast) CHECK(sampled);
        // sampling that already found a bad member must refute the check
        if (!sampled) CHECK_FALSE(fast);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("property: interlace_check is symmetric") {
    Rng rng(19);
    for (int it = 0; it < 60; ++it) {
        int deg = 1 + static_cast<int>(rng.below(6));
        BinForm A(random_poly(rng, deg), deg);
        BinForm B(random_poly(rng, deg), deg);
        CHECK(interlace_check(A, B) == interlace_check(B, A));
    }
}

TEST_CASE("squarefree decomposition") {
    UniPoly p = UniPoly::from_roots({Rat(1), Rat(1), Rat(2), Rat(2), Rat(2), Rat(5)});
    auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == UniPoly::from_roots({Rat(5)}));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == UniPoly::from_roots({Rat(1)}));
    CHECK(parts[1].second == 2);
    CHECK(parts[2].first == UniPoly::from_roots({Rat(2)}));
    CHECK(parts[2].second == 3);
}

TEST_CASE("real algebraic numbers: ordering, signs, equality") {
    UniPoly p = P({-2, 0, 1});  // t^2 - 2
    auto roots = RealAlg::roots_of(p);
    REQUIRE(roots.size() == 2);
    RealAlg neg = roots[0], pos = roots[1];
    CHECK(pos.compare(Rat(1)) > 0);
    CHECK(pos.compare(Rat(2)) < 0);
    CHECK(neg.compare(Rat(0)) < 0);
    CHECK(pos.sign_of(p) == 0);
    CHECK(pos.sign_of(P({-1, 1})) > 0);          // sqrt2 - 1 > 0
    CHECK(pos.sign_of(P({-3, 0, 1})) < 0);       // 2 - 3 < 0
    // sqrt(2) equals a root of t^4 - 4 found independently
    auto quartic = RealAlg::roots_of(P({-4, 0, 0, 0, 1}));
    REQUIRE(quartic.size() == 2);
    CHECK(RealAlg::compare(pos, quartic[1]) == 0);
    CHECK(RealAlg::compare(neg, quartic[1]) < 0);
    RealAlg exact = RealAlg::from_rational(Rat(3, 2));
    CHECK(RealAlg::compare(exact, pos) > 0);
}

TEST_CASE("quotient ring inverse") {
    UniPoly G = P({-2, 0, 1});  // x^2 - 2
    UniPoly a = P({1, 1});      // x + 1
    auto inv = mod_inv(a, G);
    REQUIRE(inv.has_value());
    CHECK(mod_mul(a, *inv, G) == UniPoly::constant(Rat(1)));
    // gcd(x^2-2, x^2-2) fails to invert
    CHECK_FALSE(mod_inv(G, G).has_value());
}
