#include "maxff/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maxff {
namespace {

using u64 = uint64_t;
using u128 = __uint128_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Pollard rho (Brent variant) with a fixed increment sequence, so repeated
// runs factor identically.
u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(u64 v, std::map<long, int>& out) {
    if (v == 1) return;
    if (is_prime_u64(v)) {
        ++out[static_cast<long>(v)];
        return;
    }
    u64 f = pollard_rho(v);
    factor_into(f, out);
    factor_into(v / f, out);
}

void require_odd_at_least(long d, long least, const char* what) {
    if (d < least || d % 2 == 0)
        throw std::invalid_argument(std::string(what) + " requires an odd modulus >= " +
                                    std::to_string(least) + ", got " + std::to_string(d));
}

bool canonical_valid(long i, long d) {
    return i >= 1 && i <= (d - 1) / 2 && std::gcd(i, d) == 1 && std::gcd(i + 1, d) == 1;
}

void require_canonical_valid(long i, long d) {
    if (!canonical_valid(i, d))
        throw std::invalid_argument("index " + std::to_string(i) +
                                    " is not a canonical valid index for d = " + std::to_string(d));
}

// The four direct partners of i (solutions for j of the isomorphism
// congruences), canonicalized.  Every partner of a valid index is valid.
std::array<long, 4> partner_indices(long i, long d) {
    const long inv_i = mod_inverse(i, d);
    const long inv_i1 = mod_inverse(i + 1, d);
    auto canon = [d](long v) { return canonicalize_index(v % d, d); };
    return {
        canon(inv_i),                     // i*j = 1
        canon(d - 1 - inv_i),             // i*j + i + 1 = 0  ->  j = -1 - i^-1
        canon((d - inv_i1) * i % d),      // i*j + i + j = 0  ->  j = -i * (i+1)^-1
        canon(d - inv_i1),                // i*j + j + 1 = 0  ->  j = -(i+1)^-1
    };
}

}  // namespace

FactoredInt factorize(long v) {
    if (v < 2) throw std::invalid_argument("factorize requires an integer >= 2");
    FactoredInt out;
    out.value = v;
    std::map<long, int> acc;
    u64 rem = static_cast<u64>(v);
    for (u64 p = 2; p <= 1000000 && p * p <= rem; p += (p == 2 ? 1 : 2)) {
        while (rem % p == 0) {
            rem /= p;
            ++acc[static_cast<long>(p)];
        }
    }
    if (rem > 1) {
        if (rem <= 1000000ull * 1000000ull && is_prime_u64(rem))
            ++acc[static_cast<long>(rem)];
        else
            factor_into(rem, acc);
    }
    long check = 1;
    for (auto& [p, e] : acc) {
        if (!is_prime_u64(static_cast<u64>(p))) throw std::logic_error("factorize produced a composite factor");
        for (int k = 0; k < e; ++k) check *= p;
        out.factors.emplace_back(p, e);
    }
    if (check != v) throw std::logic_error("factorize self-check failed");
    return out;
}

long mod_inverse(long a, long m) {
    long r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long quot = r0 / r1;
        r0 -= quot * r1;
        std::swap(r0, r1);
        t0 -= quot * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse of a value not coprime to modulus");
    return ((t0 % m) + m) % m;
}

std::vector<long> valid_indices(long d) {
    require_odd_at_least(d, 3, "valid_indices");
    std::vector<long> out;
    for (long i = 1; i <= (d - 1) / 2; ++i)
        if (std::gcd(i, d) == 1 && std::gcd(i + 1, d) == 1) out.push_back(i);
    return out;
}

long canonicalize_index(long i_raw, long d) {
    require_odd_at_least(d, 3, "canonicalize_index");
    long r = ((i_raw % d) + d) % d;
    if (r == 0 || r == d - 1)
        throw std::invalid_argument("index " + std::to_string(i_raw) +
                                    " reduces to 0 or -1 mod " + std::to_string(d) +
                                    " and violates the gcd condition");
    return r <= (d - 1) / 2 ? r : d - 1 - r;
}

bool are_isomorphic(long i1, long i2, long d) {
    require_odd_at_least(d, 3, "are_isomorphic");
    require_canonical_valid(i1, d);
    require_canonical_valid(i2, d);
    if (i1 == i2) return true;
    const long prod = (i1 * i2) % d;
    if (prod == 1) return true;
    if ((prod + i1 + i2) % d == 0) return true;
    if ((prod + i1 + 1) % d == 0) return true;
    if ((prod + i2 + 1) % d == 0) return true;
    return false;
}

IsoPartition partition_classes(long d) {
    require_odd_at_least(d, 7, "partition_classes");
    IsoPartition out;
    out.d = d;
    const std::vector<long> valid = valid_indices(d);

    std::vector<char> seen_valid(static_cast<size_t>((d + 1) / 2), 0);
    for (long i : valid) seen_valid[static_cast<size_t>(i)] = 1;

    std::vector<char> assigned(static_cast<size_t>((d + 1) / 2), 0);
    long covered = 0;
    for (long i : valid) {
        if (assigned[static_cast<size_t>(i)]) continue;
        std::vector<long> cls{i};
        for (long j : partner_indices(i, d))
            if (j != i && std::find(cls.begin(), cls.end(), j) == cls.end()) cls.push_back(j);
        std::sort(cls.begin(), cls.end());

        for (long m : cls) {
            if (!seen_valid[static_cast<size_t>(m)])
                throw std::logic_error("partner of a valid index is not valid, d = " + std::to_string(d));
            // The direct relation must already be an equivalence: every
            // member must reproduce exactly this class.
            std::vector<long> cls_m{m};
            for (long j : partner_indices(m, d))
                if (j != m && std::find(cls_m.begin(), cls_m.end(), j) == cls_m.end()) cls_m.push_back(j);
            std::sort(cls_m.begin(), cls_m.end());
            if (cls_m != cls)
                throw std::logic_error("isomorphism relation failed transitivity at d = " +
                                       std::to_string(d) + ", index " + std::to_string(m));
            for (long other : cls)
                if (!are_isomorphic(m, other, d))
                    throw std::logic_error("transitive closure added a non-isomorphic pair at d = " +
                                           std::to_string(d));
            assigned[static_cast<size_t>(m)] = 1;
        }
        covered += static_cast<long>(cls.size());
        if (cls.size() > 3)
            throw std::logic_error("isomorphism class of size > 3 at d = " + std::to_string(d));
        if (cls.size() == 1) out.singleton_indices.push_back(cls[0]);
        if (cls.size() == 2) {
            if (!out.pair_class.empty())
                throw std::logic_error("more than one size-2 class at d = " + std::to_string(d));
            out.pair_class = cls;
        }
        out.classes.push_back(std::move(cls));
    }
    if (covered != static_cast<long>(valid.size()))
        throw std::logic_error("classes do not partition the valid indices at d = " + std::to_string(d));
    return out;
}

long pi_count(long d, CountMode mode) {
    require_odd_at_least(d, 7, "pi_count");
    if (mode == CountMode::BruteForce) {
        // r tracks (i^2 + i + 1) mod d incrementally; the step from i to i+1
        // adds 2i + 2.
        long count = 0;
        long r = 3 % d;
        long add = 4 % d;
        const long top = (d - 3) / 2;
        for (long i = 1; i <= top; ++i) {
            if (r == 0) ++count;
            r += add;
            if (r >= d) r -= d;
            add += 2;
            if (add >= d) add -= d;
        }
        return count;
    }
    const FactoredInt f = factorize(d);
    int m1 = 0;
    for (auto& [p, e] : f.factors) {
        if (p == 3 && e >= 2) return 0;
        if (p % 3 == 2) return 0;
        if (p % 3 == 1) ++m1;
    }
    if (m1 == 0) return 0;  // only reachable for d = 3, kept total
    return 1L << (m1 - 1);
}

long phi2(long d, CountMode mode) {
    require_odd_at_least(d, 3, "phi2");
    if (mode == CountMode::BruteForce) {
        // Direct count of i in [0, d-1] with gcd(i(i+1), d) = 1, which holds
        // iff no prime divisor of d divides i or i+1.  Marking the excluded
        // residues per prime replaces a gcd per i and keeps sweeps over many
        // d cheap; the buffer is reused across calls.
        std::vector<long> primes;
        for (long v = d, p = 3; v > 1; p += 2) {
            if (p * p > v) {
                primes.push_back(v);  // leftover is prime
                break;
            }
            if (v % p == 0) {
                primes.push_back(p);
                while (v % p == 0) v /= p;
            }
        }
        static thread_local std::vector<unsigned char> excluded;
        excluded.assign(static_cast<size_t>(d), 0);
        for (long p : primes) {
            for (long k = 0; k < d; k += p) excluded[static_cast<size_t>(k)] = 1;
            for (long k = p - 1; k < d; k += p) excluded[static_cast<size_t>(k)] = 1;
        }
        long count = 0;
        for (unsigned char e : excluded) count += e == 0;
        return count;
    }
    const FactoredInt f = factorize(d);
    long result = 1;
    for (auto& [p, e] : f.factors) {
        for (int k = 0; k < e - 1; ++k) result *= p;
        result *= p - 2;
    }
    return result;
}

long class_count(long d, ClassCountMode mode) {
    require_odd_at_least(d, 7, "class_count");
    if (mode == ClassCountMode::Enumeration)
        return static_cast<long>(partition_classes(d).classes.size());
    const long numerator = phi2(d, CountMode::ClosedForm) + 4 * pi_count(d, CountMode::ClosedForm) + 3;
    if (numerator % 6 != 0)
        throw std::logic_error("class count formula is not divisible by 6 at d = " + std::to_string(d));
    return numerator / 6;
}

long canonical_fj(long j, long d) {
    require_odd_at_least(d, 5, "canonical_fj");
    long r = ((j % d) + d) % d;
    if (std::gcd(r, d) != 1 || std::gcd((r + 2) % d, d) != 1)
        throw std::invalid_argument("index " + std::to_string(j) + " violates gcd(j(j+2), d) = 1 for d = " +
                                    std::to_string(d));
    if (r == d - 1) return d - 1;  // fixed point of j -> -j-2
    return r <= (d - 3) / 2 ? r : d - 2 - r;
}

SubfieldProfile subfield_indices(long i, long d) {
    require_odd_at_least(d, 5, "subfield_indices");
    require_canonical_valid(i, d);
    SubfieldProfile out;
    out.i = i;
    out.d = d;

    out.fj[0] = canonical_fj((2 * i) % d, d);

    const long inv_i = mod_inverse(i, d);
    long j_inv;
    if (inv_i <= (d - 1) / 2) {
        out.case_inv = 1;
        j_inv = inv_i;
    } else {
        out.case_inv = 2;
        j_inv = d - (inv_i + 1);
    }
    out.fj[1] = canonical_fj((2 * j_inv) % d, d);

    const long inv_i1 = mod_inverse(i + 1, d);
    long j_inv1;
    if (inv_i1 <= (d - 1) / 2) {
        out.case_inv1 = 3;
        j_inv1 = inv_i1 - 1;
    } else {
        out.case_inv1 = 4;
        j_inv1 = d - inv_i1;
    }
    out.fj[2] = canonical_fj((2 * j_inv1) % d, d);

    const bool ab = out.fj[0] == out.fj[1], bc = out.fj[1] == out.fj[2], ac = out.fj[0] == out.fj[2];
    if (ab && bc)
        out.pattern = SubfieldPattern::AllEqual;
    else if (ab || bc || ac)
        out.pattern = SubfieldPattern::TwoEqual;
    else
        out.pattern = SubfieldPattern::AllDistinct;
    return out;
}

}  // namespace maxff
