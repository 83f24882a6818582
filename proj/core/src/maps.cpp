#include "maxff/maps.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "maxff/iso.hpp"

namespace maxff {

namespace {

using TermKey = std::pair<long, long>;  // (y-degree, x-exponent)

long floor_div(long a, long b) {
    long r = a / b;
    if (a % b != 0 && a < 0) --r;
    return r;
}

void add_term(const Gf& F, std::map<TermKey, FieldElement>& m, const TermKey& k,
              const FieldElement& c) {
    auto it = m.find(k);
    if (it == m.end())
        m.emplace(k, c);
    else
        it->second = F.add(it->second, c);
}

void prune(const Gf& F, RingElem& e) {
    for (auto it = e.terms.begin(); it != e.terms.end();)
        it = F.is_zero(it->second) ? e.terms.erase(it) : std::next(it);
    if (e.terms.empty()) e.denom = 0;
}

// Multiply the numerator by (x^2+1)^times in place.
void lift_numerator(const Gf& F, std::map<TermKey, FieldElement>& terms, long times) {
    for (long s = 0; s < times; ++s) {
        std::map<TermKey, FieldElement> next;
        for (const auto& [k, c] : terms) {
            add_term(F, next, k, c);
            add_term(F, next, {k.first, k.second + 2}, c);
        }
        terms = std::move(next);
    }
}

// Affine points (x, y) with x, y, x^2+1 all nonzero, in the deterministic
// field enumeration order, at most max_count of them.
std::vector<std::pair<FieldElement, FieldElement>> sample_points(const Gf& F,
                                                                 const CurveIndex& c,
                                                                 std::size_t max_count) {
    const long q = F.q();
    // Kernel of the norm map, for expanding one fiber solution to all q+1.
    std::vector<FieldElement> kernel;
    for (long k = 1; k < F.order() && kernel.size() < static_cast<std::size_t>(q) + 1; ++k) {
        FieldElement e = F.element(k);
        if (F.one() == F.pow(e, q + 1)) kernel.push_back(e);
    }

    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (long k = 1; k < F.order() && pts.size() < max_count; ++k) {
        FieldElement x = F.element(k);
        if (F.is_zero(x)) continue;
        FieldElement x2p1 = F.add(F.mul(x, x), F.one());
        if (F.is_zero(x2p1)) continue;
        FieldElement f = F.mul(F.pow(x, 2 * c.i), x2p1);
        if (F.is_zero(f) || !F.is_in_base(f)) continue;
        FieldElement y0;
        bool found = false;
        for (long l = 1; l < F.order() && !found; ++l) {
            FieldElement y = F.element(l);
            if (F.is_zero(y)) continue;
            if (f == F.pow(y, q + 1)) {
                y0 = y;
                found = true;
            }
        }
        if (!found) continue;
        for (const FieldElement& z : kernel) {
            if (pts.size() >= max_count) break;
            pts.emplace_back(x, F.mul(y0, z));
        }
    }
    return pts;
}

bool on_curve_at(const Gf& F, const MonomialMap& m, const CurveIndex& dst,
                 const FieldElement& x, const FieldElement& y) {
    const long q = F.q();
    FieldElement X = F.mul(m.cx, F.mul(F.pow(x, m.ux), F.pow(y, m.vx)));
    FieldElement Y = F.mul(m.cy, F.mul(F.pow(x, m.uy), F.pow(y, m.vy)));
    FieldElement lhs = F.pow(Y, q + 1);
    FieldElement rhs = F.mul(F.pow(X, 2 * dst.i), F.add(F.mul(X, X), F.one()));
    return lhs == rhs;
}

long abs_exp_bound(const MonomialMap& m) {
    return std::max({std::abs(m.ux), std::abs(m.vx), std::abs(m.uy), std::abs(m.vy)});
}

}  // namespace

MonomialMap identity_map(const Gf& F) {
    MonomialMap m;
    m.cx = F.one();
    m.ux = 1;
    m.vx = 0;
    m.cy = F.one();
    m.uy = 0;
    m.vy = 1;
    return m;
}

MonomialMap compose(const Gf& F, const MonomialMap& outer, const MonomialMap& inner) {
    MonomialMap r;
    r.cx = F.mul(outer.cx, F.mul(F.pow(inner.cx, outer.ux), F.pow(inner.cy, outer.vx)));
    r.ux = outer.ux * inner.ux + outer.vx * inner.uy;
    r.vx = outer.ux * inner.vx + outer.vx * inner.vy;
    r.cy = F.mul(outer.cy, F.mul(F.pow(inner.cx, outer.uy), F.pow(inner.cy, outer.vy)));
    r.uy = outer.uy * inner.ux + outer.vy * inner.uy;
    r.vy = outer.uy * inner.vx + outer.vy * inner.vy;
    return r;
}

CoordinateRing::CoordinateRing(const Gf& F, const CurveIndex& c) : F_(&F), c_(c) {
    if (c.q != F.q()) throw std::invalid_argument("curve index and field context disagree on q");
    if (c.i < 1) throw std::invalid_argument("curve exponent must be positive");
}

RingElem CoordinateRing::zero() const { return RingElem{}; }

RingElem CoordinateRing::one() const {
    RingElem e;
    e.terms[{0, 0}] = F_->one();
    return e;
}

RingElem CoordinateRing::monomial(const FieldElement& c, long xexp, long yexp) const {
    RingElem out;
    if (F_->is_zero(c)) return out;
    const long q = F_->q();
    const long k = floor_div(yexp, q + 1);
    const long rho = yexp - k * (q + 1);
    const long base = xexp + 2 * c_.i * k;
    if (k >= 0) {
        if (k > 100000) throw std::logic_error("monomial fold too large");
        // Coefficients of c * (x^2+1)^k, built up one binomial factor at a
        // time.
        std::vector<FieldElement> row(1, c);
        for (long s = 0; s < k; ++s) {
            row.push_back(row.back());
            for (long t = static_cast<long>(row.size()) - 2; t >= 1; --t)
                row[t] = F_->add(row[t], row[t - 1]);
        }
        for (long t = 0; t < static_cast<long>(row.size()); ++t)
            if (!F_->is_zero(row[t])) out.terms[{rho, base + 2 * t}] = row[t];
    } else {
        out.denom = -k;
        out.terms[{rho, base}] = c;
    }
    normalize(out);
    return out;
}

RingElem CoordinateRing::add(const RingElem& a, const RingElem& b) const {
    RingElem out;
    out.denom = std::max(a.denom, b.denom);
    for (const RingElem* src : {&a, &b}) {
        std::map<TermKey, FieldElement> terms = src->terms;
        lift_numerator(*F_, terms, out.denom - src->denom);
        for (const auto& [k, c] : terms) add_term(*F_, out.terms, k, c);
    }
    prune(*F_, out);
    normalize(out);
    return out;
}

RingElem CoordinateRing::neg(const RingElem& a) const {
    RingElem out = a;
    for (auto& [k, c] : out.terms) c = F_->neg(c);
    return out;
}

RingElem CoordinateRing::sub(const RingElem& a, const RingElem& b) const {
    return add(a, neg(b));
}

RingElem CoordinateRing::mul(const RingElem& a, const RingElem& b) const {
    const long q = F_->q();
    const long i2 = 2 * c_.i;
    RingElem out;
    out.denom = a.denom + b.denom;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            const FieldElement c = F_->mul(ca, cb);
            long t = ka.first + kb.first;
            long e = ka.second + kb.second;
            if (t <= q) {
                add_term(*F_, out.terms, {t, e}, c);
            } else {
                // y^{q+1} -> x^{2i}(x^2+1); t - (q+1) lands back in [0, q-1].
                t -= q + 1;
                add_term(*F_, out.terms, {t, e + i2}, c);
                add_term(*F_, out.terms, {t, e + i2 + 2}, c);
            }
        }
    prune(*F_, out);
    normalize(out);
    return out;
}

bool CoordinateRing::is_zero(const RingElem& e) const {
    for (const auto& [k, c] : e.terms)
        if (!F_->is_zero(c)) return false;
    return true;
}

bool CoordinateRing::equal(const RingElem& a, const RingElem& b) const {
    return is_zero(sub(a, b));
}

void CoordinateRing::normalize(RingElem& e) const {
    prune(*F_, e);
    while (e.denom > 0) {
        // Try to divide every y-row of the numerator by (x^2+1); all rows
        // must cooperate or the denominator stays.
        std::map<TermKey, FieldElement> reduced;
        bool ok = true;
        auto it = e.terms.begin();
        while (ok && it != e.terms.end()) {
            const long t = it->first.first;
            auto row_end = it;
            long emin = it->first.second, emax = it->first.second;
            while (row_end != e.terms.end() && row_end->first.first == t) {
                emin = std::min(emin, row_end->first.second);
                emax = std::max(emax, row_end->first.second);
                ++row_end;
            }
            const long len = emax - emin + 1;
            if (len < 3 || len > 2000000) {
                ok = false;
                break;
            }
            std::vector<FieldElement> v(len, F_->zero());
            for (auto jt = it; jt != row_end; ++jt) v[jt->first.second - emin] = jt->second;
            // Synthetic division by x^2 + 1: after the sweep, positions 2..
            // hold the quotient and positions 0, 1 the remainder.
            for (long j = len - 1; j >= 2; --j)
                if (!F_->is_zero(v[j])) v[j - 2] = F_->sub(v[j - 2], v[j]);
            if (!F_->is_zero(v[0]) || !F_->is_zero(v[1])) {
                ok = false;
                break;
            }
            for (long j = 2; j < len; ++j)
                if (!F_->is_zero(v[j])) reduced[{t, emin + j - 2}] = v[j];
            it = row_end;
        }
        if (!ok) break;
        e.terms = std::move(reduced);
        --e.denom;
        if (e.terms.empty()) {
            e.denom = 0;
            break;
        }
    }
    if (e.terms.empty()) e.denom = 0;
}

MonomialMap iso_map(const Gf& F, int kind, long i, long j) {
    const long q = F.q();
    const long d = (q + 1) / 2;
    if (i < 1 || j < 1) throw std::invalid_argument("map indices must be positive");
    if (std::gcd(i, d) != 1 || std::gcd(i + 1, d) != 1 || std::gcd(j, d) != 1 ||
        std::gcd(j + 1, d) != 1)
        throw std::invalid_argument("map indices must satisfy the gcd condition");
    long num = 0;
    switch (kind) {
        case 1: num = i * j - 1; break;
        case 2: num = i * j + i + 1; break;
        case 3: num = i * j + i + j; break;
        case 4: num = i * j + j + 1; break;
        default: throw std::invalid_argument("map kind must be 1, 2, 3 or 4");
    }
    if (num % d != 0)
        throw std::invalid_argument("indices do not satisfy the congruence for this map kind");
    const long r = num / d;
    const FieldElement a = F.norm_minus_one();
    MonomialMap m;
    if (kind == 1 || kind == 2) {
        m.cx = F.pow(a, d);
        m.ux = (kind == 1) ? -j : -(j + 1);
        m.vx = d;
        m.cy = F.pow(a, i + 1);
        m.uy = -r;
        m.vy = i;
    } else {
        m.cx = F.pow(a, -d);
        m.ux = (kind == 3) ? j + 1 : j;
        m.vx = -d;
        m.cy = F.pow(a, -i);
        m.uy = r;
        m.vy = -(i + 1);
    }
    return m;
}

MonomialMap shift_map(const Gf& F, long i, long j) {
    const long d = (F.q() + 1) / 2;
    if (i < 1 || j < 1) throw std::invalid_argument("map indices must be positive");
    if ((j - i) % d != 0)
        throw std::invalid_argument("shift map needs indices congruent mod d");
    MonomialMap m = identity_map(F);
    m.uy = -(j - i) / d;
    return m;
}

MonomialMap invert_map(const Gf& F, long i, long j) {
    const long d = (F.q() + 1) / 2;
    if (i < 1 || j < 1) throw std::invalid_argument("map indices must be positive");
    if ((i + j + 1) % d != 0)
        throw std::invalid_argument("inversion map needs i = -j-1 mod d");
    MonomialMap m = identity_map(F);
    m.ux = -1;
    m.uy = -(i + j + 1) / d;
    return m;
}

MonomialMap omega_map(const Gf& F, long i) {
    const long d = (F.q() + 1) / 2;
    if ((i * i + i + 1) % d != 0)
        throw std::invalid_argument("no order-three coordinate automorphism at this index");
    return iso_map(F, 4, i, i);
}

MonomialMap omega1_map(const Gf& F) { return iso_map(F, 1, 1, 1); }

MonomialMap pi_map(const Gf& F) {
    MonomialMap m;
    m.cx = F.pow(F.norm_minus_one(), (F.q() + 1) / 2);
    m.ux = -1;
    m.vx = (F.q() + 1) / 2;
    m.cy = F.one();
    m.uy = 0;
    m.vy = 1;
    return m;
}

MonomialMap pi_prime_map(const Gf& F) {
    MonomialMap m = pi_map(F);
    m.cx = F.neg(m.cx);
    return m;
}

MonomialMap h_element(const Gf& F, bool negate_x, const FieldElement& b) {
    if (!(F.pow(b, F.q() + 1) == F.one()))
        throw std::invalid_argument("second coordinate scale must have norm one");
    MonomialMap m = identity_map(F);
    if (negate_x) m.cx = F.neg(m.cx);
    m.cy = b;
    return m;
}

std::vector<MonomialMap> h_group(const Gf& F) {
    std::vector<MonomialMap> out;
    for (long k = 1; k < F.order(); ++k) {
        FieldElement b = F.element(k);
        if (!(F.pow(b, F.q() + 1) == F.one())) continue;
        out.push_back(h_element(F, false, b));
        out.push_back(h_element(F, true, b));
    }
    return out;
}

bool preserves_relation(const Gf& F, const MonomialMap& m, const CurveIndex& src,
                        const CurveIndex& dst) {
    if (src.q != dst.q) throw std::invalid_argument("source and destination disagree on q");
    const long q = F.q();
    if (src.q != q) throw std::invalid_argument("curve index and field context disagree on q");

    CoordinateRing R(F, src);
    const long j = dst.i;
    RingElem lhs = R.monomial(F.pow(m.cy, q + 1), m.uy * (q + 1), m.vy * (q + 1));
    RingElem x2j = R.monomial(F.pow(m.cx, 2 * j), m.ux * 2 * j, m.vx * 2 * j);
    RingElem xsq = R.monomial(F.pow(m.cx, 2), m.ux * 2, m.vx * 2);
    RingElem rhs = R.mul(x2j, R.add(xsq, R.one()));
    const bool symbolic = R.is_zero(R.sub(lhs, rhs));

    const auto pts = sample_points(F, src, 64);
    if (!pts.empty()) {
        bool numeric = true;
        for (const auto& [x, y] : pts)
            if (!on_curve_at(F, m, dst, x, y)) {
                numeric = false;
                break;
            }
        if (numeric != symbolic)
            throw std::logic_error("symbolic and numeric relation checks disagree");
    }
    return symbolic;
}

bool equal_on_curve(const Gf& F, const CurveIndex& c, const MonomialMap& a,
                    const MonomialMap& b) {
    CoordinateRing R(F, c);
    return R.equal(R.image_of_x(a), R.image_of_x(b)) &&
           R.equal(R.image_of_y(a), R.image_of_y(b));
}

std::optional<long> order_on_curve(const Gf& F, const CurveIndex& c, const MonomialMap& m,
                                   long max_order) {
    const long limit = max_order > 0 ? max_order : 2 * (F.q() + 1);
    // Exponent matrices multiply exactly under composition, so guard growth
    // well below overflow of the products taken in compose().
    const long guard = (1L << 62) / (2 * std::max(2L, abs_exp_bound(m) + 1));
    MonomialMap acc = m;
    for (long k = 1; k <= limit; ++k) {
        if (acc.ux == 1 && acc.vx == 0 && acc.uy == 0 && acc.vy == 1 &&
            acc.cx == F.one() && acc.cy == F.one()) {
            if (!equal_on_curve(F, c, acc, identity_map(F)))
                throw std::logic_error("literal identity map failed the symbolic identity check");
            return k;
        }
        // A non-identity exponent matrix cannot act as the identity here:
        // x^u y^v = x would force v = 0 (y vanishes above x^2+1 = 0 where x
        // does not), then u = 1, and likewise for the y component.
        if (abs_exp_bound(acc) > guard) return std::nullopt;
        acc = compose(F, acc, m);
    }
    return std::nullopt;
}

std::optional<SubfieldGenerators> subfield_generators(const Gf& F, const CurveIndex& c,
                                                      SubfieldCase kind) {
    const CurveIndex v = validate_index(c.q, c.i);
    const long q = v.q, d = v.d, i = v.i;
    if (F.q() != q) throw std::invalid_argument("curve index and field context disagree on q");

    SubfieldGenerators out;
    out.kind = kind;
    long j = 0;
    MonomialMap g;
    switch (kind) {
        case SubfieldCase::Sigma0:
            g = identity_map(F);
            j = i;
            break;
        case SubfieldCase::Case1: {
            const long inv = mod_inverse(i, d);
            if (inv > (d - 1) / 2) return std::nullopt;
            j = inv;
            g = iso_map(F, 1, j, i);
            break;
        }
        case SubfieldCase::Case2: {
            const long inv = mod_inverse(i, d);
            if (inv <= (d - 1) / 2) return std::nullopt;
            j = d - (inv + 1);
            g = iso_map(F, 4, j, i);
            break;
        }
        case SubfieldCase::Case3: {
            const long inv = mod_inverse(i + 1, d);
            if (inv > (d - 1) / 2) return std::nullopt;
            j = inv - 1;
            g = iso_map(F, 3, j, i);
            break;
        }
        case SubfieldCase::Case4: {
            const long inv = mod_inverse(i + 1, d);
            if (inv <= (d - 1) / 2) return std::nullopt;
            j = d - inv;
            g = iso_map(F, 2, j, i);
            break;
        }
    }
    out.case_j = j;
    out.target_fj = canonical_fj(2 * j, d);
    out.gen = g;
    CoordinateRing R(F, v);
    out.xk = R.image_of_x(g);
    out.yk = R.image_of_y(g);
    out.relation_ok = preserves_relation(F, g, v, CurveIndex{q, d, j});
    return out;
}

AutCase aut_case(long q, long i_raw) {
    const CurveIndex c = validate_index(q, i_raw);
    if (q == 5) return AutCase::SpecialQ5;
    if (c.i == 1) return AutCase::IndexOne;
    if (c.i == (c.d - 1) / 2) return AutCase::HalfIndex;
    if ((c.i * c.i + c.i + 1) % c.d == 0) return AutCase::OrderThree;
    return AutCase::Generic;
}

long aut_order(long q, long i_raw) {
    switch (aut_case(q, i_raw)) {
        case AutCase::SpecialQ5: return 360;
        case AutCase::IndexOne:
        case AutCase::HalfIndex: return 4 * (q + 1);
        case AutCase::OrderThree: return 3 * (q + 1);
        case AutCase::Generic: return q + 1;
    }
    throw std::logic_error("unreachable automorphism case");
}

}  // namespace maxff
