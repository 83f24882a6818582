#ifndef MAXFF_ISO_HPP
#define MAXFF_ISO_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace maxff {

// Everything in this header is arithmetic mod d, d = (q+1)/2 odd.  The curve
// index i enters only through the congruences
//     i1 = i2,   i1*i2 = 1,   i1*i2 + i1 + i2 = 0,
//     i1*i2 + i1 + 1 = 0,     i1*i2 + i2 + 1 = 0     (mod d)
// that characterize when two members of the family are isomorphic, so the
// engine works for any odd d >= 5 without a field context.

struct FactoredInt {
    long value = 0;
    std::vector<std::pair<long, int>> factors;  // (prime, exponent), primes increasing
};

// Deterministic: trial division up to 10^6, then Pollard rho with a fixed
// parameter sequence.  The result is re-multiplied and primality-checked
// before returning; any mismatch throws std::logic_error.
FactoredInt factorize(long v);

long mod_inverse(long a, long m);  // a coprime to m, result in [1, m)

// Indices i in [1, (d-1)/2] with gcd(i(i+1), d) = 1, ascending.
std::vector<long> valid_indices(long d);

// Representative of {i_raw, -i_raw-1} mod d inside [1, (d-1)/2].  The two
// candidates sum to d-1, so exactly one lands in range; candidates 0 and d-1
// are rejected because they violate the gcd condition.
long canonicalize_index(long i_raw, long d);

// Both inputs must be canonical valid indices for d.
bool are_isomorphic(long i1, long i2, long d);

struct IsoPartition {
    long d = 0;
    std::vector<std::vector<long>> classes;  // sorted members, sorted by first member
    std::vector<long> singleton_indices;     // members of size-1 classes
    std::vector<long> pair_class;            // the unique size-2 class, if present
};

// Partition of valid_indices(d) under the isomorphism relation.  The direct
// relation is already transitive; the construction verifies this and throws
// std::logic_error if the closure ever adds a pair that fails the direct test.
IsoPartition partition_classes(long d);

enum class CountMode { ClosedForm, BruteForce };

// Number of i in [1, (d-3)/2] with i^2 + i + 1 = 0 (mod d).
// Closed form: 0 if 9 | d or any prime factor is 2 mod 3, else 2^(m1-1) with
// m1 the number of prime factors congruent to 1 mod 3.
long pi_count(long d, CountMode mode);

// Number of i in [0, d-1] with gcd(i(i+1), d) = 1.
// Closed form: product of p^(a-1) * (p-2) over the factorization of d.
long phi2(long d, CountMode mode);

// Number of isomorphism classes: (phi2(d) + 4*pi(d) + 3) / 6, which must
// divide exactly (std::logic_error otherwise), or |partition_classes(d)|.
enum class ClassCountMode { Formula, Enumeration };
long class_count(long d, ClassCountMode mode);

// Reduction for the index family z^d = t^j (t^2 + 1): representative of
// {j, -j-2} mod d inside [1, (d-3)/2] or the fixed point d-1.
// Requires gcd(j(j+2), d) = 1.
long canonical_fj(long j, long d);

enum class SubfieldPattern { AllDistinct, TwoEqual, AllEqual };

// The three degree-2 subfield targets of a member with canonical index i,
// one per involution class, already reduced by canonical_fj.
struct SubfieldProfile {
    long i = 0, d = 0;
    std::array<long, 3> fj;  // slots: doubling, inverse of i, inverse of i+1
    int case_inv = 0;        // 1 or 2, which branch the i-inverse slot used
    int case_inv1 = 0;       // 3 or 4, same for the (i+1)-inverse slot
    SubfieldPattern pattern = SubfieldPattern::AllDistinct;
};

SubfieldProfile subfield_indices(long i, long d);

}  // namespace maxff

#endif
