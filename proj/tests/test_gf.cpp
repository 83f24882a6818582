#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "maxff/gf.hpp"

using namespace maxff;

TEST_CASE("context construction and modulus selection") {
    Gf F(13);
    CHECK(F.p() == 13);
    CHECK(F.n() == 1);
    CHECK(F.q() == 13);
    CHECK(F.order() == 169);
    // Lexicographically first monic irreducible quadratic over GF(13), with
    // the constant coefficient compared first: z^2 + 3z + 1.
    CHECK(F.modulus() == std::vector<int32_t>{1, 3, 1});

    Gf G(9);
    CHECK(G.p() == 3);
    CHECK(G.n() == 2);
    CHECK(G.order() == 81);
    CHECK(G.modulus().size() == 5);

    CHECK_THROWS_AS(Gf(4), std::invalid_argument);   // even
    CHECK_THROWS_AS(Gf(15), std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(Gf(3), std::invalid_argument);   // too small
}

TEST_CASE("element enumeration round-trips") {
    Gf F(9);
    for (long k = 0; k < F.order(); ++k) CHECK(F.index_of(F.element(k)) == k);
    CHECK(F.element(0) == F.zero());
    CHECK(F.element(1) == F.one());
}

TEST_CASE("field axioms on the full multiplication table at q = 9") {
    Gf F(9);
    const long N = F.order();
    for (long aa = 0; aa < N; ++aa) {
        const FieldElement x = F.element(aa);
        CHECK(F.add(x, F.neg(x)) == F.zero());
        if (aa != 0) CHECK(F.mul(x, F.inv(x)) == F.one());
        for (long bb = aa; bb < N; ++bb) {
            const FieldElement y = F.element(bb);
            CHECK(F.mul(x, y) == F.mul(y, x));
            CHECK(F.add(x, y) == F.add(y, x));
        }
    }
}

TEST_CASE("power handles negative exponents and rejects bad zero cases") {
    Gf F(13);
    const FieldElement five = F.from_int(5);
    CHECK(F.pow(five, 0) == F.one());
    CHECK(F.pow(five, F.order() - 1) == F.one());
    CHECK(F.mul(F.pow(five, -3), F.pow(five, 3)) == F.one());
    CHECK(F.pow(F.zero(), 7) == F.zero());
    CHECK_THROWS_AS(F.pow(F.zero(), 0), std::domain_error);
    CHECK_THROWS_AS(F.pow(F.zero(), -2), std::domain_error);
}

TEST_CASE("frobenius x -> x^q fixes exactly the degree-two subfield") {
    Gf F(25);
    long fixed = 0;
    for (long k = 0; k < F.order(); ++k) {
        const FieldElement x = F.element(k);
        const bool fix = F.frobenius(x) == x;
        CHECK(fix == F.is_in_base(x));
        if (fix) ++fixed;
    }
    CHECK(fixed == 25);
}

TEST_CASE("norm lands in the base field and is multiplicative") {
    Gf F(9);
    for (long k = 0; k < F.order(); ++k) {
        const FieldElement x = F.element(k);
        CHECK(F.is_in_base(F.norm_to_base(x)));
        for (long l = 0; l < F.order(); ++l) {
            const FieldElement y = F.element(l);
            CHECK(F.norm_to_base(F.mul(x, y)) ==
                  F.mul(F.norm_to_base(x), F.norm_to_base(y)));
        }
    }
}

TEST_CASE("square root of -1 and the norm minus-one witness at q = 13") {
    Gf F(13);
    const FieldElement alpha = F.alpha();
    const FieldElement a = F.norm_minus_one();
    CHECK(alpha == FieldElement{{5, 0}});
    CHECK(a == FieldElement{{5, 0}});
    CHECK(F.mul(alpha, alpha) == F.neg(F.one()));
    CHECK(F.pow(a, 14) == F.neg(F.one()));
}

TEST_CASE("witnesses exist for every supported field size") {
    for (long q : {5L, 9L, 13L, 17L, 25L, 29L, 37L, 49L}) {
        Gf F(q);
        CHECK(F.mul(F.alpha(), F.alpha()) == F.neg(F.one()));
        const FieldElement a = F.norm_minus_one();
        CHECK(F.pow(a, q + 1) == F.neg(F.one()));
        // a^(q+1) = -1 forces the order of a off the divisors of q + 1.
        CHECK(2 * (q + 1) % multiplicative_order(F, a) == 0);
        CHECK((q + 1) % multiplicative_order(F, a) != 0);
    }
}

TEST_CASE("multiplicative order") {
    Gf F(13);
    CHECK(multiplicative_order(F, F.one()) == 1);
    CHECK(multiplicative_order(F, F.neg(F.one())) == 2);
    for (long k = 1; k < F.order(); ++k) {
        const FieldElement x = F.element(k);
        const long ord = multiplicative_order(F, x);
        CHECK((F.order() - 1) % ord == 0);
        CHECK(F.pow(x, ord) == F.one());
        for (long e = 1; e < ord; ++e)
            if (ord % e == 0) CHECK(!(F.pow(x, e) == F.one()));
    }
}

TEST_CASE("string rendering uses comma-separated coefficients") {
    Gf F(9);  // the working field has 2n = 4 coefficients over GF(3)
    CHECK(F.to_string(F.zero()) == "0,0,0,0");
    CHECK(F.to_string(F.element(5)) == "2,1,0,0");  // 2 + z
    Gf G(13);
    CHECK(G.to_string(G.from_int(7)) == "7,0");
}
