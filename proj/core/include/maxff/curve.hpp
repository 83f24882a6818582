#ifndef MAXFF_CURVE_HPP
#define MAXFF_CURVE_HPP

#include <array>

#include "maxff/gf.hpp"

namespace maxff {

// A member of the family  y^(q+1) = x^(2i) (x^2 + 1)  over GF(q^2), genus
// q - 1.  Requires d = (q+1)/2 odd (so q = 1 mod 4) and gcd(i(i+1), d) = 1,
// with i stored in canonical position 1 <= i <= (d-1)/2.
struct CurveIndex {
    long q = 0;
    long d = 0;
    long i = 0;
};

// Validates q, reduces i_raw to its canonical representative and checks the
// gcd condition.  q = 5 is admitted but callers should treat it as special
// (see is_special_q); the automorphism group there is exceptionally large.
CurveIndex validate_index(long q, long i_raw);

bool is_special_q(long q);  // true exactly for q = 5

// The six places that support the divisors of x, y and dx: two above x = 0,
// two above x = infinity, and one above each root of x^2 + 1.
enum class PlaceLabel { Zero1, Zero2, Inf1, Inf2, Alpha, MinusAlpha };

struct FormalDivisor {
    std::array<long, 6> coeff{};  // indexed by PlaceLabel order above

    long& operator[](PlaceLabel p) { return coeff[static_cast<size_t>(p)]; }
    long operator[](PlaceLabel p) const { return coeff[static_cast<size_t>(p)]; }
    long degree() const;
};

struct DivisorTable {
    FormalDivisor div_x;   // degree 0
    FormalDivisor div_y;   // degree 0
    FormalDivisor div_dx;  // degree 2q - 4 = 2g - 2
};

// Exact principal divisors of x and y, and the divisor of dx.  The dx
// coefficient on the places above x^2 + 1 = 0 is q: those places are totally
// ramified of index q + 1, and q is the unique value giving deg = 2g - 2.
DivisorTable divisor_table(const CurveIndex& c);

enum class CountMethod { Fast, Naive };

// Number of degree-one places over GF(q^2).  Both methods count affine
// solutions S and return S + 3; the correction accounts for the three
// ramified x-values 0, alpha, -alpha (fibers of 2, 1, 1 places but one
// affine point each) plus the two places above x = infinity.
//
// Fast iterates over x only, using that y^(q+1) = c has q + 1 solutions when
// c is in F_q* and none when c is outside F_q.  Naive iterates over all
// (x, y) pairs and is restricted to q <= 25.
long count_places(const Gf& F, const CurveIndex& c, CountMethod method = CountMethod::Fast);

long hasse_weil_upper(long q);  // q^2 + 1 + 2(q-1)q, the bound at genus q - 1

bool is_maximal(const Gf& F, const CurveIndex& c);

}  // namespace maxff

#endif
