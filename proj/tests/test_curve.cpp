#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "maxff/curve.hpp"
#include "maxff/gf.hpp"

using namespace maxff;

TEST_CASE("index validation") {
    const CurveIndex c = validate_index(13, 1);
    CHECK(c.q == 13);
    CHECK(c.d == 7);
    CHECK(c.i == 1);
    CHECK(validate_index(13, 5).i == 1);   // -6 = 1 (mod 7)
    CHECK(validate_index(13, 9).i == 2);
    CHECK(validate_index(5, 1).i == 1);    // d = 3 still admits i = 1
    CHECK_THROWS_AS(validate_index(11, 1), std::invalid_argument);  // d even
    CHECK_THROWS_AS(validate_index(15, 1), std::invalid_argument);  // not prime power
    CHECK_THROWS_AS(validate_index(13, 7), std::invalid_argument);  // i = 0 (mod d)
    CHECK_THROWS_AS(validate_index(25, 12), std::invalid_argument); // i = -1 (mod d)
    CHECK_THROWS_AS(validate_index(17, 2), std::invalid_argument);  // gcd(i+1, d) = 3
}

TEST_CASE("special field size flag") {
    CHECK(is_special_q(5));
    CHECK(!is_special_q(13));
}

TEST_CASE("principal divisors at q = 13, i = 1") {
    const CurveIndex c = validate_index(13, 1);
    const DivisorTable t = divisor_table(c);

    CHECK(t.div_x.degree() == 0);
    CHECK(t.div_y.degree() == 0);
    CHECK(t.div_x[PlaceLabel::Zero1] == 7);
    CHECK(t.div_x[PlaceLabel::Inf1] == -7);
    CHECK(t.div_y[PlaceLabel::Zero1] == 1);
    CHECK(t.div_y[PlaceLabel::Alpha] == 1);
    CHECK(t.div_y[PlaceLabel::MinusAlpha] == 1);
    CHECK(t.div_y[PlaceLabel::Inf1] == -2);

    // The differential has degree 2g - 2 and its coefficient over the
    // branch points is forced by that degree.
    CHECK(t.div_dx.degree() == 2 * (13 - 1) - 2);
    CHECK(t.div_dx[PlaceLabel::Zero1] == 6);
    CHECK(t.div_dx[PlaceLabel::Alpha] == 13);
    CHECK(t.div_dx[PlaceLabel::Inf1] == -8);
}

TEST_CASE("place counts match the closed form 3q^2 - 2q + 1") {
    for (long q : {5L, 9L, 13L}) {
        Gf F(q);
        for (long i = 1; i <= (q + 1) / 2; ++i) {
            CurveIndex c{};
            try {
                c = validate_index(q, i);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const long fast = count_places(F, c, CountMethod::Fast);
            CHECK(fast == 3 * q * q - 2 * q + 1);
            CHECK(fast == count_places(F, c, CountMethod::Naive));
            CHECK(fast == hasse_weil_upper(q));
        }
    }
}

TEST_CASE("counting guards") {
    Gf F(29);
    const CurveIndex c = validate_index(29, 1);
    CHECK(count_places(F, c, CountMethod::Fast) == hasse_weil_upper(29));
    CHECK_THROWS_AS(count_places(F, c, CountMethod::Naive), std::invalid_argument);
    Gf G(13);
    CHECK_THROWS_AS(count_places(G, c, CountMethod::Fast), std::invalid_argument);
}

TEST_CASE("upper bound closed form") {
    CHECK(hasse_weil_upper(13) == 482);
    CHECK(hasse_weil_upper(5) == 66);
    CHECK(hasse_weil_upper(9) == 226);
}

TEST_CASE("maximality wrapper") {
    Gf F(17);
    CHECK(is_maximal(F, validate_index(17, 1)));
    CHECK(is_maximal(F, validate_index(17, 4)));
}
