#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "maxff/curve.hpp"
#include "maxff/gf.hpp"
#include "maxff/iso.hpp"
#include "maxff/maps.hpp"

using namespace maxff;

TEST_CASE("function field arithmetic reduces by the defining relation") {
    Gf F(13);
    const CurveIndex c = validate_index(13, 1);
    CoordinateRing R(F, c);

    // y^(q+1) - x^(2i) (x^2 + 1) is the relation itself.
    const RingElem lhs = R.monomial(F.one(), 0, 14);
    const RingElem rhs = R.add(R.monomial(F.one(), 4, 0), R.monomial(F.one(), 2, 0));
    CHECK(R.is_zero(R.sub(lhs, rhs)));
    CHECK(R.equal(lhs, rhs));

    // One extra power of y carries the reduction along.
    const RingElem lhs2 = R.monomial(F.one(), 0, 15);
    const RingElem rhs2 = R.add(R.monomial(F.one(), 4, 1), R.monomial(F.one(), 2, 1));
    CHECK(R.equal(lhs2, rhs2));

    // Negative exponents cancel.
    CHECK(R.equal(R.mul(R.monomial(F.one(), 0, -1), R.monomial(F.one(), 0, 1)), R.one()));
    CHECK(R.equal(R.mul(R.monomial(F.one(), -3, 2), R.monomial(F.one(), 3, -2)), R.one()));
    CHECK(R.is_zero(R.zero()));
    CHECK(!R.is_zero(R.one()));
}

TEST_CASE("explicit isomorphism shapes at q = 13") {
    Gf F(13);
    // d = 7; 2*4 = 8 = 1 (mod 7) pairs indices 2 and 4 under the product rule,
    // but 4 is not canonical; among canonical indices 1*1 = 1 works.
    const MonomialMap m = iso_map(F, 1, 1, 1);
    CHECK(m.ux == -1);
    CHECK(m.vx == 7);
    CHECK(m.uy == 0);
    CHECK(m.vy == 1);
    CHECK(m.cx == F.pow(F.norm_minus_one(), 7));
    CHECK(m.cy == F.pow(F.norm_minus_one(), 2));

    CHECK_THROWS_AS(iso_map(F, 1, 1, 2), std::invalid_argument);  // 2 != 1 (mod 7)
    CHECK_THROWS_AS(iso_map(F, 5, 1, 1), std::invalid_argument);  // no such kind
    CHECK_THROWS_AS(iso_map(F, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("every congruent pair yields a relation-preserving map at q = 13") {
    Gf F(13);
    const long d = 7;
    for (long i : valid_indices(d))
        for (long j : valid_indices(d))
            for (int kind = 1; kind <= 4; ++kind) {
                long num = 0;
                switch (kind) {
                    case 1: num = i * j - 1; break;
                    case 2: num = i * j + i + 1; break;
                    case 3: num = i * j + i + j; break;
                    case 4: num = i * j + j + 1; break;
                }
                if (num % d != 0) continue;
                const MonomialMap m = iso_map(F, kind, i, j);
                CHECK(preserves_relation(F, m, CurveIndex{13, d, j}, CurveIndex{13, d, i}));
            }
}

TEST_CASE("relation verifier rejects a wrong map") {
    Gf F(13);
    const CurveIndex c = validate_index(13, 1);
    MonomialMap bad = identity_map(F);
    bad.uy = 1;  // y -> y x
    CHECK(!preserves_relation(F, bad, c, c));
    MonomialMap wrong_coeff = identity_map(F);
    wrong_coeff.cy = F.from_int(2);
    CHECK(!preserves_relation(F, wrong_coeff, c, c));
}

TEST_CASE("composition applies the outer map to the inner images") {
    Gf F(13);
    const MonomialMap id = identity_map(F);
    const MonomialMap p = pi_map(F);
    CHECK(compose(F, p, id) == p);
    CHECK(compose(F, id, p) == p);
    CHECK(compose(F, p, p) == id);
}

TEST_CASE("order-three automorphism where i^2 + i + 1 = 0") {
    Gf F(13);
    const CurveIndex c = validate_index(13, 2);
    const MonomialMap w = omega_map(F, 2);
    CHECK(w.ux == 2);
    CHECK(w.vx == -7);
    CHECK(w.uy == 1);
    CHECK(w.vy == -3);
    CHECK(preserves_relation(F, w, c, c));
    const auto ord = order_on_curve(F, c, w);
    REQUIRE(ord.has_value());
    CHECK(*ord == 3);

    CHECK_THROWS_AS(omega_map(F, 1), std::invalid_argument);  // 3 != 0 (mod 7)
    Gf G(17);
    for (long i : valid_indices(9)) CHECK_THROWS_AS(omega_map(G, i), std::invalid_argument);
}

TEST_CASE("involutions at index one") {
    Gf F(13);
    const CurveIndex c = validate_index(13, 1);
    const MonomialMap p = pi_map(F);
    const MonomialMap pp = pi_prime_map(F);
    CHECK(preserves_relation(F, p, c, c));
    CHECK(preserves_relation(F, pp, c, c));
    CHECK(order_on_curve(F, c, p) == 2);
    CHECK(order_on_curve(F, c, pp) == 2);

    // Both arise from the index-one extra automorphism by a diagonal twist.
    const MonomialMap w1 = omega1_map(F);
    const FieldElement b = F.pow(F.norm_minus_one(), -2);
    CHECK(compose(F, w1, h_element(F, true, b)) == p);
    CHECK(compose(F, w1, h_element(F, false, b)) == pp);
}

TEST_CASE("diagonal automorphisms") {
    Gf F(9);
    const CurveIndex c = validate_index(9, 1);
    const std::vector<MonomialMap> hs = h_group(F);
    CHECK(hs.size() == 20);
    for (const MonomialMap& h : hs) CHECK(preserves_relation(F, h, c, c));

    // A primitive scaling of y alone has full order q + 1.
    for (const MonomialMap& h : hs) {
        if (h.ux != 1 || !(h.cx == F.one())) continue;
        if (multiplicative_order(F, h.cy) != 10) continue;
        CHECK(order_on_curve(F, c, h) == 10);
        break;
    }
    // The norm witness has order 2(q+1), so it is not a valid y-coefficient.
    CHECK_THROWS_AS(h_element(F, false, F.norm_minus_one()), std::invalid_argument);
}

TEST_CASE("index shift and index inversion reductions") {
    Gf F(13);
    const long d = 7;
    for (long i : valid_indices(d)) {
        const CurveIndex ci{13, d, i};
        const MonomialMap s = shift_map(F, i, i + d);
        CHECK(preserves_relation(F, s, CurveIndex{13, d, i + d}, ci));
        const MonomialMap v = invert_map(F, i, d - i - 1);
        CHECK(preserves_relation(F, v, CurveIndex{13, d, d - i - 1}, ci));
        const auto round = order_on_curve(F, ci, compose(F, v, invert_map(F, d - i - 1, i)), 4);
        CHECK(round == 1);
    }
    CHECK_THROWS_AS(shift_map(F, 1, 2), std::invalid_argument);   // not congruent mod d
    CHECK_THROWS_AS(invert_map(F, 1, 3), std::invalid_argument);  // 1 + 3 + 1 != 0 (mod 7)
}

TEST_CASE("subfield generators at q = 13") {
    Gf F(13);
    const CurveIndex c1 = validate_index(13, 1);

    const auto s0 = subfield_generators(F, c1, SubfieldCase::Sigma0);
    REQUIRE(s0.has_value());
    CHECK(s0->target_fj == 2);
    CHECK(s0->relation_ok);

    // The inverse of 1 is 1, in the lower half: the direct case applies and
    // the complementary one does not.
    const auto s1 = subfield_generators(F, c1, SubfieldCase::Case1);
    REQUIRE(s1.has_value());
    CHECK(s1->case_j == 1);
    CHECK(s1->target_fj == 2);
    CHECK(s1->relation_ok);
    CHECK(!subfield_generators(F, c1, SubfieldCase::Case2).has_value());

    // The inverse of i + 1 = 2 is 4, in the upper half: the folded case
    // applies and produces the exceptional target d - 1.
    const auto s4 = subfield_generators(F, c1, SubfieldCase::Case4);
    REQUIRE(s4.has_value());
    CHECK(s4->case_j == 3);
    CHECK(s4->target_fj == 6);
    CHECK(s4->relation_ok);
    CHECK(!subfield_generators(F, c1, SubfieldCase::Case3).has_value());

    const CurveIndex c2 = validate_index(13, 2);
    const auto t2 = subfield_generators(F, c2, SubfieldCase::Case2);
    REQUIRE(t2.has_value());
    CHECK(t2->relation_ok);
    CHECK(t2->target_fj == 1);
}

TEST_CASE("automorphism group orders") {
    CHECK(aut_order(5, 1) == 360);
    CHECK(aut_order(13, 1) == 56);
    CHECK(aut_order(13, 2) == 42);
    CHECK(aut_order(13, 3) == 56);
    CHECK(aut_order(9, 1) == 40);
    CHECK(aut_order(9, 2) == 40);
    CHECK(aut_order(17, 1) == 72);
    CHECK(aut_order(17, 4) == 72);
    CHECK(aut_order(25, 2) == 26);
    CHECK(aut_order(25, 3) == 78);
    CHECK(aut_order(25, 6) == 104);
    CHECK(aut_order(29, 7) == 120);

    CHECK(aut_case(5, 1) == AutCase::SpecialQ5);
    CHECK(aut_case(13, 1) == AutCase::IndexOne);
    CHECK(aut_case(13, 2) == AutCase::OrderThree);
    CHECK(aut_case(13, 3) == AutCase::HalfIndex);
    CHECK(aut_case(25, 2) == AutCase::Generic);

    CHECK_THROWS_AS(aut_order(13, 6), std::invalid_argument);
    CHECK_THROWS_AS(aut_order(11, 1), std::invalid_argument);
}

TEST_CASE("order computation guards") {
    Gf F(13);
    const CurveIndex c = validate_index(13, 1);
    // Scale y by a coefficient of full order q + 1: the order search gives up
    // below that bound and finds it at the default bound 2(q + 1).
    MonomialMap grow = identity_map(F);
    for (long k = 1; k < F.order(); ++k)
        if (multiplicative_order(F, F.element(k)) == 14) {
            grow.cy = F.element(k);
            break;
        }
    REQUIRE(multiplicative_order(F, grow.cy) == 14);
    CHECK(order_on_curve(F, c, grow, 3) == std::nullopt);
    CHECK(order_on_curve(F, c, grow) == 14);
    CHECK(order_on_curve(F, c, identity_map(F)) == 1);
}
