#ifndef MAXFF_GAPS_HPP
#define MAXFF_GAPS_HPP

#include <array>
#include <vector>

#include "maxff/curve.hpp"

namespace maxff {

// Lattice triangle with integer vertices.  All triangles arising here are
// integral; interior point tests use exact integer cross products only.
struct Triangle {
    std::array<std::array<long, 2>, 3> v;
};

// Strictly interior lattice points, sorted lexicographically.
// Throws std::domain_error for a degenerate (zero area) triangle.
std::vector<std::array<long, 2>> interior_points(const Triangle& t);

// The three triangles controlling regular differentials and gap numbers:
//   delta  = ((0, q+1), (2i, 0), (2i+2, 0))     q-1 interior points
//   delta1 = ((i+1, d), (2i+1, 0), (2i+2, 0))   (q-1)/4 interior points
//   delta2 = ((i, d),   (2i, 0),  (2i+1, 0))    (q-1)/4 interior points
struct CurveTriangles {
    Triangle delta, delta1, delta2;
};

CurveTriangles triangles_for(const CurveIndex& c);

// Place classes with distinct gap behaviour: the two places above
// x = infinity, the two above x = 0, and the places above x^2 + 1 = 0.
enum class PlaceClass { Infinity, Zero, Alpha };

struct GapSet {
    PlaceClass place = PlaceClass::Infinity;
    std::vector<long> gaps;  // sorted ascending, exactly q - 1 values
};

// Weierstrass gap numbers at the chosen place, assembled from the interior
// points of the triangles above.  Each gap set is the union of two
// constituent sets that are provably disjoint; a collision means the
// transcription is wrong and raises std::logic_error.
GapSet gap_set(const CurveIndex& c, PlaceClass place);

// Interior lattice point count computed twice: by enumeration and by Pick's
// theorem (area - boundary/2 + 1, shoelace + gcd edge counts).  Disagreement
// raises std::logic_error; the common value is returned.
long interior_count_checked(const Triangle& t);

// interior_count_checked applied to delta; the result equals the genus q - 1.
long genus_by_pick(const CurveIndex& c);

// Complement of the gaps inside [0, 2g].
std::vector<long> nongaps(const GapSet& g, long genus);

// 0 present and closed under addition up to 2g (sums beyond 2g are always
// non-gaps and need no check).
bool is_numerical_semigroup(const std::vector<long>& nongap_set, long genus);

}  // namespace maxff

#endif
