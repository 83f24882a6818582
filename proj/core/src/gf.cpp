#include "maxff/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxff {
namespace {

// Dense polynomial helpers over F_p, coefficients low degree first.
// Only used for modulus construction; field arithmetic below works with
// fixed-length vectors directly.
using Poly = std::vector<int32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int32_t>((r[i + j] + int64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

// a mod f with f monic.
Poly poly_mod(Poly a, const Poly& f, long p) {
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        int64_t c = a.back();
        size_t shift = a.size() - 1 - df;
        if (c != 0)
            for (size_t j = 0; j < f.size(); ++j) {
                int64_t v = (a[shift + j] - c * f[j]) % p;
                a[shift + j] = static_cast<int32_t>(v < 0 ? v + p : v);
            }
        a.pop_back();
        trim(a);
        if (a.size() <= df) break;
    }
    trim(a);
    return a;
}

Poly poly_powmod(Poly base, int64_t e, const Poly& f, long p) {
    Poly r = {1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

long inv_mod_p(long a, long p) {
    long r = 1, b = a % p, e = p - 2;  // p prime
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        long lead_inv = inv_mod_p(b.back(), p);
        Poly bm = b;
        for (auto& c : bm) c = static_cast<int32_t>(int64_t(c) * lead_inv % p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin test: f of degree m is irreducible over F_p iff z^(p^m) = z (mod f)
// and gcd(z^(p^(m/r)) - z, f) = 1 for every prime r dividing m.
bool is_irreducible(const Poly& f, long p) {
    const long m = static_cast<long>(f.size()) - 1;
    const Poly z = {0, 1};
    auto pow_p_k = [&](long k) {  // z^(p^k) mod f, by k repeated p-th powers
        Poly r = z;
        for (long t = 0; t < k; ++t) r = poly_powmod(std::move(r), p, f, p);
        return r;
    };
    if (pow_p_k(m) != poly_mod(z, f, p)) return false;
    long mm = m;
    for (long r = 2; r * r <= mm; ++r) {
        if (mm % r != 0) continue;
        Poly h = pow_p_k(m / r);
        // h - z
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<int32_t>((diff[1] - 1 + p) % p);
        trim(diff);
        Poly g = poly_gcd(diff, f, p);
        if (g.size() != 1) return false;
        while (mm % r == 0) mm /= r;
    }
    if (mm > 1) {
        Poly h = pow_p_k(m / mm);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<int32_t>((diff[1] - 1 + p) % p);
        trim(diff);
        Poly g = poly_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Gf::Gf(long q) {
    if (q < 5) throw std::invalid_argument("field parameter must be an odd prime power >= 5");
    if (q % 2 == 0) throw std::invalid_argument("field parameter must be odd");
    long p = 0, n = 0;
    for (long c = 3; c * c <= q; c += 2)
        if (q % c == 0) {
            p = c;
            break;
        }
    if (p == 0) p = q;  // q itself prime
    long t = q;
    while (t % p == 0) {
        t /= p;
        ++n;
    }
    if (t != 1) throw std::invalid_argument("field parameter must be a prime power");
    p_ = p;
    n_ = n;
    q_ = q;
    q2_ = q * q;

    // Lexicographically smallest monic irreducible of degree 2n: enumerate
    // (c0, ..., c_{2n-1}) ascending with c0 the most significant position.
    const long deg = 2 * n;
    long total = 1;
    for (long j = 0; j < deg; ++j) total *= p;
    for (long k = 0; k < total; ++k) {
        Poly f(deg + 1, 0);
        long rem = k;
        for (long j = deg - 1; j >= 0; --j) {  // c0 is the most significant digit
            f[j] = static_cast<int32_t>(rem % p);
            rem /= p;
        }
        f[deg] = 1;
        if (is_irreducible(f, p)) {
            mod_ = f;
            break;
        }
    }
    if (mod_.empty()) throw std::logic_error("no irreducible modulus found");

    // Distinguished constants, first in enumeration order.
    const FieldElement minus_one = from_int(-1);
    bool have_alpha = false, have_a = false;
    for (long k = 0; k < q2_ && !(have_alpha && have_a); ++k) {
        FieldElement e = element(k);
        if (!have_alpha && mul(e, e) == minus_one) {
            alpha_ = e;
            have_alpha = true;
        }
        if (!have_a && !is_zero(e) && pow(e, q_ + 1) == minus_one) {
            a_ = e;
            have_a = true;
        }
    }
    if (!have_alpha || !have_a) throw std::logic_error("distinguished field constants not found");
}

FieldElement Gf::zero() const { return FieldElement{std::vector<int32_t>(2 * n_, 0)}; }

FieldElement Gf::one() const {
    FieldElement e = zero();
    e.c[0] = 1;
    return e;
}

FieldElement Gf::from_int(long v) const {
    FieldElement e = zero();
    long r = v % p_;
    if (r < 0) r += p_;
    e.c[0] = static_cast<int32_t>(r);
    return e;
}

FieldElement Gf::element(long k) const {
    if (k < 0 || k >= q2_) throw std::invalid_argument("element index out of range");
    FieldElement e = zero();
    for (long j = 0; j < 2 * n_; ++j) {
        e.c[j] = static_cast<int32_t>(k % p_);
        k /= p_;
    }
    return e;
}

long Gf::index_of(const FieldElement& e) const {
    validate(e);
    long k = 0, pw = 1;
    for (long j = 0; j < 2 * n_; ++j) {
        k += e.c[j] * pw;
        pw *= p_;
    }
    return k;
}

void Gf::validate(const FieldElement& e) const {
    if (static_cast<long>(e.c.size()) != 2 * n_)
        throw std::invalid_argument("field element has wrong coefficient count for this context");
}

bool Gf::is_zero(const FieldElement& e) const {
    validate(e);
    return std::all_of(e.c.begin(), e.c.end(), [](int32_t v) { return v == 0; });
}

FieldElement Gf::add(const FieldElement& a, const FieldElement& b) const {
    validate(a);
    validate(b);
    FieldElement r = a;
    for (size_t j = 0; j < r.c.size(); ++j) {
        r.c[j] += b.c[j];
        if (r.c[j] >= p_) r.c[j] -= static_cast<int32_t>(p_);
    }
    return r;
}

FieldElement Gf::sub(const FieldElement& a, const FieldElement& b) const {
    validate(a);
    validate(b);
    FieldElement r = a;
    for (size_t j = 0; j < r.c.size(); ++j) {
        r.c[j] -= b.c[j];
        if (r.c[j] < 0) r.c[j] += static_cast<int32_t>(p_);
    }
    return r;
}

FieldElement Gf::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Gf::mul(const FieldElement& a, const FieldElement& b) const {
    validate(a);
    validate(b);
    const long deg = 2 * n_;
    std::vector<int64_t> prod(2 * deg - 1, 0);
    for (long i = 0; i < deg; ++i) {
        if (a.c[i] == 0) continue;
        for (long j = 0; j < deg; ++j) prod[i + j] += int64_t(a.c[i]) * b.c[j];
    }
    // reduce by the monic modulus
    for (long i = 2 * deg - 2; i >= deg; --i) {
        int64_t c = prod[i] % p_;
        if (c == 0) continue;
        for (long j = 0; j < deg; ++j) prod[i - deg + j] -= c * mod_[j];
        prod[i] = 0;
    }
    FieldElement r = zero();
    for (long j = 0; j < deg; ++j) {
        int64_t v = prod[j] % p_;
        if (v < 0) v += p_;
        r.c[j] = static_cast<int32_t>(v);
    }
    return r;
}

FieldElement Gf::pow(const FieldElement& a, long e) const {
    validate(a);
    if (is_zero(a)) {
        if (e <= 0) throw std::domain_error("zero cannot be raised to a non-positive power");
        return zero();
    }
    const long m = q2_ - 1;
    long r = e % m;
    if (r < 0) r += m;
    FieldElement acc = one(), base = a;
    while (r > 0) {
        if (r & 1) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

FieldElement Gf::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in GF(q^2)");
    return pow(a, q2_ - 2);
}

FieldElement Gf::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement Gf::frobenius(const FieldElement& e) const {
    if (is_zero(e)) return e;
    return pow(e, q_);
}

FieldElement Gf::norm_to_base(const FieldElement& e) const {
    if (is_zero(e)) return e;
    return pow(e, q_ + 1);
}

bool Gf::is_in_base(const FieldElement& e) const { return frobenius(e) == e; }

std::string Gf::to_string(const FieldElement& e) const {
    validate(e);
    std::string s;
    for (size_t j = 0; j < e.c.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(e.c[j]);
    }
    return s;
}

long multiplicative_order(const Gf& F, const FieldElement& e) {
    if (F.is_zero(e)) throw std::domain_error("zero has no multiplicative order");
    FieldElement acc = e;
    const FieldElement one = F.one();
    for (long k = 1; k < F.order(); ++k) {
        if (acc == one) return k;
        acc = F.mul(acc, e);
    }
    return F.order() - 1;  // unreachable for a field, kept for totality
}

}  // namespace maxff
