#include "maxff/curve.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "maxff/iso.hpp"

namespace maxff {

namespace {

bool is_odd_prime_power(long q) {
    if (q < 3 || q % 2 == 0) return false;
    long p = 0;
    for (long c = 3; c * c <= q; c += 2)
        if (q % c == 0) {
            p = c;
            break;
        }
    if (p == 0) return true;  // q prime
    long t = q;
    while (t % p == 0) t /= p;
    return t == 1;
}

}  // namespace

CurveIndex validate_index(long q, long i_raw) {
    if (q < 5 || !is_odd_prime_power(q))
        throw std::invalid_argument("q must be an odd prime power >= 5, got " + std::to_string(q));
    const long d = (q + 1) / 2;
    if (d % 2 == 0)
        throw std::invalid_argument("unsupported q = " + std::to_string(q) +
                                    ": (q+1)/2 must be odd, so q = 1 (mod 4)");
    const long i = canonicalize_index(i_raw, d);
    if (std::gcd(i, d) != 1 || std::gcd(i + 1, d) != 1)
        throw std::invalid_argument("index " + std::to_string(i_raw) + " violates gcd(i(i+1), " +
                                    std::to_string(d) + ") = 1");
    return CurveIndex{q, d, i};
}

bool is_special_q(long q) { return q == 5; }

long FormalDivisor::degree() const {
    long s = 0;
    for (long c : coeff) s += c;
    return s;
}

DivisorTable divisor_table(const CurveIndex& c) {
    DivisorTable t;
    const long d = c.d, i = c.i, q = c.q;

    t.div_x[PlaceLabel::Zero1] = d;
    t.div_x[PlaceLabel::Zero2] = d;
    t.div_x[PlaceLabel::Inf1] = -d;
    t.div_x[PlaceLabel::Inf2] = -d;

    t.div_y[PlaceLabel::Zero1] = i;
    t.div_y[PlaceLabel::Zero2] = i;
    t.div_y[PlaceLabel::Alpha] = 1;
    t.div_y[PlaceLabel::MinusAlpha] = 1;
    t.div_y[PlaceLabel::Inf1] = -(i + 1);
    t.div_y[PlaceLabel::Inf2] = -(i + 1);

    t.div_dx[PlaceLabel::Zero1] = d - 1;
    t.div_dx[PlaceLabel::Zero2] = d - 1;
    t.div_dx[PlaceLabel::Alpha] = q;
    t.div_dx[PlaceLabel::MinusAlpha] = q;
    t.div_dx[PlaceLabel::Inf1] = -(d + 1);
    t.div_dx[PlaceLabel::Inf2] = -(d + 1);

    if (t.div_x.degree() != 0 || t.div_y.degree() != 0 || t.div_dx.degree() != 2 * q - 4)
        throw std::logic_error("divisor degree check failed");
    return t;
}

namespace {

// x^(2i) (x^2 + 1); pow(0, 2i) = 0 makes x = 0 need no special case
FieldElement curve_rhs(const Gf& F, const CurveIndex& c, const FieldElement& x) {
    const FieldElement factor = F.add(F.mul(x, x), F.one());
    return F.mul(F.pow(x, 2 * c.i), factor);
}

}  // namespace

long count_places(const Gf& F, const CurveIndex& c, CountMethod method) {
    if (F.q() != c.q) throw std::invalid_argument("field context does not match curve index");
    const long q = c.q, q2 = F.order();

    long affine = 0;
    if (method == CountMethod::Fast) {
        long zero_fibers = 0, full_fibers = 0;
        for (long k = 0; k < q2; ++k) {
            const FieldElement x = F.element(k);
            const FieldElement v = curve_rhs(F, c, x);
            if (F.is_zero(v))
                ++zero_fibers;
            else if (F.is_in_base(v))
                ++full_fibers;
        }
        if (zero_fibers != 3)
            throw std::logic_error("expected exactly three ramified affine x-values");
        affine = zero_fibers + (q + 1) * full_fibers;
    } else {
        if (q > 25)
            throw std::invalid_argument("naive counting is restricted to q <= 25; it scans q^4 pairs");
        for (long kx = 0; kx < q2; ++kx) {
            const FieldElement x = F.element(kx);
            const FieldElement rhs = curve_rhs(F, c, x);
            for (long ky = 0; ky < q2; ++ky) {
                const FieldElement y = F.element(ky);
                const FieldElement lhs = F.is_zero(y) ? F.zero() : F.pow(y, q + 1);
                if (lhs == rhs) ++affine;
            }
        }
    }
    return affine + 3;
}

long hasse_weil_upper(long q) { return q * q + 1 + 2 * (q - 1) * q; }

bool is_maximal(const Gf& F, const CurveIndex& c) {
    return count_places(F, c, CountMethod::Fast) == hasse_weil_upper(c.q);
}

}  // namespace maxff
