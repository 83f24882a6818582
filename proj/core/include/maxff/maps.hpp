#ifndef MAXFF_MAPS_HPP
#define MAXFF_MAPS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "maxff/curve.hpp"
#include "maxff/gf.hpp"

namespace maxff {

// Coordinate map with monomial components:
//   x -> cx * x^ux * y^vx,   y -> cy * x^uy * y^vy.
// Components are units times Laurent monomials, so cx != 0 and cy != 0.
struct MonomialMap {
    FieldElement cx;
    long ux = 0, vx = 0;
    FieldElement cy;
    long uy = 0, vy = 0;
    bool operator==(const MonomialMap&) const = default;
};

MonomialMap identity_map(const Gf& F);

// Substitutes inner's components into outer's formulas.  Exponents transform
// by integer matrix multiplication, coefficients pick up integer powers of
// the inner coefficients.  Purely formal; no curve relation is used.
MonomialMap compose(const Gf& F, const MonomialMap& outer, const MonomialMap& inner);

// Element of the localization of F_{q^2}[x, y]/(y^{q+1} - x^{2i}(x^2+1)) at
// the multiplicative set generated by {x, y, x^2+1}.  Numerator terms are
// keyed by (y-degree in [0, q], x-exponent in Z); denom is the exponent of
// (x^2+1) below the line.  The representation is a normal form: an element
// is zero iff terms is empty.
struct RingElem {
    std::map<std::pair<long, long>, FieldElement> terms;
    long denom = 0;
};

class CoordinateRing {
  public:
    CoordinateRing(const Gf& F, const CurveIndex& c);

    const Gf& field() const { return *F_; }
    const CurveIndex& index() const { return c_; }

    RingElem zero() const;
    RingElem one() const;
    // c * x^xexp * y^yexp reduced to normal form; yexp and xexp may be any
    // integers (y^{q+1} rewrites to x^{2i}(x^2+1), negative powers use the
    // localization).
    RingElem monomial(const FieldElement& c, long xexp, long yexp) const;

    RingElem add(const RingElem&, const RingElem&) const;
    RingElem sub(const RingElem&, const RingElem&) const;
    RingElem neg(const RingElem&) const;
    RingElem mul(const RingElem&, const RingElem&) const;

    bool is_zero(const RingElem&) const;
    bool equal(const RingElem&, const RingElem&) const;

    RingElem image_of_x(const MonomialMap& m) const { return monomial(m.cx, m.ux, m.vx); }
    RingElem image_of_y(const MonomialMap& m) const { return monomial(m.cy, m.uy, m.vy); }

  private:
    const Gf* F_;
    CurveIndex c_;

    void insert_monomial(RingElem& acc, const FieldElement& c, long xexp, long yexp) const;
    void normalize(RingElem&) const;
};

// The four explicit isomorphism families, one per congruence:
//   kind 1:  i j         = 1 (mod d)
//   kind 2:  i j + i + 1 = 0 (mod d)
//   kind 3:  i j + i + j = 0 (mod d)
//   kind 4:  i j + j + 1 = 0 (mod d)
// The returned map's components are expressions in the coordinates of the
// curve with exponent j and satisfy the defining relation of the curve with
// exponent i, i.e. preserves_relation(m, src=j, dst=i) holds.  Indices only
// need gcd(i(i+1), d) = gcd(j(j+1), d) = 1; they are not canonicalized.
// Throws std::invalid_argument when the congruence (or a gcd condition)
// fails.
MonomialMap iso_map(const Gf& F, int kind, long i, long j);

// (x, y) -> (x, y x^{-m}) for j = i + m d: expressions in curve j satisfying
// relation i.
MonomialMap shift_map(const Gf& F, long i, long j);

// (x, y) -> (1/x, y x^{-m}) for i = m d - j - 1.
MonomialMap invert_map(const Gf& F, long i, long j);

// Order-three automorphism, defined exactly when i^2 + i + 1 = 0 (mod d).
MonomialMap omega_map(const Gf& F, long i);

// Extra automorphism of the curve with exponent 1 and its two derived
// involutions.
MonomialMap omega1_map(const Gf& F);
MonomialMap pi_map(const Gf& F);
MonomialMap pi_prime_map(const Gf& F);

// (x, y) -> (ax, by) with a = +-1 and b^{q+1} = 1; these preserve every
// relation in the family.  h_group enumerates all 2(q+1) of them in a
// deterministic order.
MonomialMap h_element(const Gf& F, bool negate_x, const FieldElement& b);
std::vector<MonomialMap> h_group(const Gf& F);

// True iff m(y)^{q+1} - m(x)^{2j}(m(x)^2 + 1) reduces to zero in the
// coordinate ring of src, where j = dst.i.  This is the statement that m
// defines a morphism of function fields dst -> src on coordinates.  A
// numeric spot check at up to 64 deterministic affine points runs alongside
// the symbolic reduction; disagreement raises std::logic_error.
bool preserves_relation(const Gf& F, const MonomialMap& m, const CurveIndex& src,
                        const CurveIndex& dst);

// Component-wise equality after reduction in the coordinate ring of c.
bool equal_on_curve(const Gf& F, const CurveIndex& c, const MonomialMap& a,
                    const MonomialMap& b);

// Least k <= max_order with m^k the identity on the curve, nullopt if there
// is none (or exponents grow past the overflow guard, which certifies the
// order exceeds any value reachable by monomial maps of this size).
// max_order <= 0 selects the default 2(q+1), enough for every map above.
std::optional<long> order_on_curve(const Gf& F, const CurveIndex& c, const MonomialMap& m,
                                   long max_order = 0);

// The three degree-two subfields of the curve with index c sit under
// explicit generator pairs (x_k, y_k) satisfying y_k^{q+1} = x_k^{2j}(x_k^2+1)
// for an intermediate index j; the subfield generated by (x_k, y_k^2) then
// lies in the degree-d family z^d = t^m(t^2+1) with m = canonical_fj(2j).
enum class SubfieldCase { Sigma0, Case1, Case2, Case3, Case4 };

struct SubfieldGenerators {
    SubfieldCase kind = SubfieldCase::Sigma0;
    long case_j = 0;     // intermediate index j in the generator relation
    long target_fj = 0;  // canonical index of the degree-two subfield
    MonomialMap gen;     // x_k, y_k as monomials in the curve coordinates
    RingElem xk, yk;
    bool relation_ok = false;
};

// nullopt when the case's arithmetic precondition on i fails (the inverse of
// i, or of i+1, lands in the other half of [1, d-1]).  Sigma0 always
// applies.
std::optional<SubfieldGenerators> subfield_generators(const Gf& F, const CurveIndex& c,
                                                      SubfieldCase kind);

// Order of the automorphism group as stated by the classification: 4(q+1)
// for i = 1 and for i = (d-1)/2 (that curve is isomorphic to the i = 1
// one), 3(q+1) when i^2 + i + 1 = 0 (mod d), q+1 otherwise, and the special
// constant 360 at q = 5.
long aut_order(long q, long i_raw);

// Which of the cases above fired, for reporting.
enum class AutCase { SpecialQ5, IndexOne, HalfIndex, OrderThree, Generic };
AutCase aut_case(long q, long i_raw);

}  // namespace maxff

#endif
