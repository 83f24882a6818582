#ifndef MAXFF_GF_HPP
#define MAXFF_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace maxff {

// Element of GF(q^2), q = p^n. Coefficient vector of length 2n over F_p,
// low degree first, entries normalized to [0, p).
struct FieldElement {
    std::vector<int32_t> c;
    bool operator==(const FieldElement&) const = default;
};

/*
 * Arithmetic context for GF(q^2) with q an odd prime power >= 5.
 *
 * The field is realized as F_p[z]/(m(z)) with m monic irreducible of degree
 * 2n.  m is the lexicographically smallest such polynomial, comparing the
 * coefficient tuples (c0, ..., c_{2n-1}) with integer representatives in
 * [0, p).  Element enumeration order is the base-p counter on coefficient
 * vectors, low coefficient moving fastest; element(k) has c_j = (k / p^j) % p.
 *
 * Two distinguished constants are fixed at construction, each the first
 * element in enumeration order satisfying its condition:
 *   alpha()          alpha^2 = -1
 *   norm_minus_one() a^(q+1) = -1
 * Both exist: q^2 = 1 (mod 4), and the norm map onto F_q* is surjective.
 */
class Gf {
public:
    explicit Gf(long q);

    long p() const { return p_; }
    long n() const { return n_; }
    long q() const { return q_; }
    long order() const { return q2_; }  // number of field elements, q^2

    // Modulus coefficients, low degree first, length 2n + 1, top coefficient 1.
    const std::vector<int32_t>& modulus() const { return mod_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long v) const;  // embedding of Z into the prime field
    FieldElement element(long k) const;   // k in [0, q^2)
    long index_of(const FieldElement& e) const;

    bool is_zero(const FieldElement& e) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws std::domain_error on 0
    FieldElement div(const FieldElement& a, const FieldElement& b) const;

    // Square and multiply.  For nonzero bases the exponent is reduced mod
    // q^2 - 1, so negative exponents are fine.  pow(0, k) = 0 for k > 0 and
    // throws std::domain_error for k <= 0.
    FieldElement pow(const FieldElement& a, long e) const;

    FieldElement frobenius(const FieldElement& e) const;     // e -> e^q
    FieldElement norm_to_base(const FieldElement& e) const;  // e -> e^(q+1), lands in F_q
    bool is_in_base(const FieldElement& e) const;            // e^q == e

    const FieldElement& alpha() const { return alpha_; }
    const FieldElement& norm_minus_one() const { return a_; }

    // "c0,c1,..." with decimal residues.
    std::string to_string(const FieldElement& e) const;

private:
    void validate(const FieldElement& e) const;

    long p_ = 0, n_ = 0, q_ = 0, q2_ = 0;
    std::vector<int32_t> mod_;
    FieldElement alpha_, a_;
};

// Least k >= 1 with e^k = 1; throws std::domain_error for e = 0.
long multiplicative_order(const Gf& F, const FieldElement& e);

}  // namespace maxff

#endif
