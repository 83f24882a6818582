#ifndef MAXFF_VERIFY_HPP
#define MAXFF_VERIFY_HPP

#include <string>
#include <vector>

namespace maxff {

// One named verification result.  Detail carries the counterexample or the
// computed values when a check fails, and a short summary otherwise.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<Check>& checks);

// Point counts hit the upper bound q^2 + 1 + 2(q-1)q for every valid
// canonical index over each q.
std::vector<Check> check_maximality(const std::vector<long>& qs);

// Fast fiber counting agrees with the exhaustive affine scan.
std::vector<Check> check_fast_naive(const std::vector<long>& qs);

// Interior point counts: |delta| = q-1 by enumeration and by Pick's theorem,
// |delta1| = |delta2| = (q-1)/4, for every valid index.
std::vector<Check> check_lattice(const std::vector<long>& qs);

// Gap sets: cardinality q-1, range [1, 2q-3], 1 is a gap, d+i and d-i-1
// memberships, complements closed under addition.
std::vector<Check> check_gap_sets(const std::vector<long>& qs);

// At i = 1: d+2 is a gap at the places over x = 0 and x^2+1 = 0 but not at
// infinity, so the infinity gap set differs from the other two.
std::vector<Check> check_index_one_separation(const std::vector<long>& qs);

// Closed forms against brute force: pi_count and phi2 for odd d up to
// pi_phi_max_d, class_count formula vs enumeration for odd d up to
// class_max_d.
std::vector<Check> check_counting_formulas(long pi_phi_max_d, long class_max_d);

// Partition shape for every odd d in [7, max_d]: singleton classes exactly
// at solutions of i^2+i+1 = 0, one pair {1, (d-1)/2}, all other classes of
// size three.
std::vector<Check> check_class_structure(long max_d);

// Explicit maps at each q: every congruent ordered index pair yields a
// relation-preserving map for its kind, the negative control fails, all
// 2(q+1) diagonal automorphisms preserve the relation, omega has order 3
// where defined and conjugation by it 3-cycles the involutions, pi and pi'
// have order 2, and the shift/inversion reductions compose to the identity.
std::vector<Check> check_maps(const std::vector<long>& qs);

// Subfield index profiles over odd d in [min_d, max_d] for i in
// [1, (d-3)/2] (the top index (d-1)/2 shares the class of 1 and is excluded
// from the pattern claim): AllEqual iff i^2+i+1 = 0 (mod d), TwoEqual iff
// i = 1 (with the exceptional target d-1 present), else AllDistinct.  For each q given, the explicit
// generator pairs of the applicable cases pass their relation checks and
// land on the profile's target indices.
std::vector<Check> check_subfield_profiles(long min_d, long max_d, const std::vector<long>& qs);

// Automorphism order table over all valid canonical i for each q, plus the
// fixed expectations 360 at q=5 and 56 at (q=13, i=1).
std::vector<Check> check_aut_orders(const std::vector<long>& qs);

}  // namespace maxff

#endif
