#include "maxff/gaps.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maxff {

namespace {

using Pt = std::array<long, 2>;

// Twice the signed area of (o, a, b).
long cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Number of lattice points on the closed segment [a, b] minus one, so the
// boundary of a lattice triangle carries the sum of the three edge gcds.
long edge_gcd(const Pt& a, const Pt& b) {
    return std::gcd(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

void check_distinct(std::vector<long>& v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::logic_error(std::string("duplicate gap number in ") + what);
}

}  // namespace

std::vector<Pt> interior_points(const Triangle& t) {
    const long orient = cross(t.v[0], t.v[1], t.v[2]);
    if (orient == 0) throw std::domain_error("degenerate triangle");
    const long sgn = orient > 0 ? 1 : -1;

    long xlo = t.v[0][0], xhi = xlo, ylo = t.v[0][1], yhi = ylo;
    for (const auto& v : t.v) {
        xlo = std::min(xlo, v[0]);
        xhi = std::max(xhi, v[0]);
        ylo = std::min(ylo, v[1]);
        yhi = std::max(yhi, v[1]);
    }

    // Generated with x outer and y inner, so the result is already sorted
    // lexicographically.
    std::vector<Pt> pts;
    for (long x = xlo; x <= xhi; ++x)
        for (long y = ylo; y <= yhi; ++y) {
            const Pt p{x, y};
            bool inside = true;
            for (int e = 0; e < 3 && inside; ++e)
                inside = sgn * cross(t.v[e], t.v[(e + 1) % 3], p) > 0;
            if (inside) pts.push_back(p);
        }
    return pts;
}

CurveTriangles triangles_for(const CurveIndex& c) {
    const long q = c.q, d = c.d, i = c.i;
    CurveTriangles t;
    t.delta.v = {{{0, q + 1}, {2 * i, 0}, {2 * i + 2, 0}}};
    t.delta1.v = {{{i + 1, d}, {2 * i + 1, 0}, {2 * i + 2, 0}}};
    t.delta2.v = {{{i, d}, {2 * i, 0}, {2 * i + 1, 0}}};
    return t;
}

GapSet gap_set(const CurveIndex& c, PlaceClass place) {
    const long q = c.q, d = c.d, i = c.i;
    const CurveTriangles tri = triangles_for(c);
    const std::vector<Pt> delta = interior_points(tri.delta);

    // Each place class takes one batch of gap numbers from (a subset of) the
    // interior of delta and a second batch, shifted by q + 1, from the
    // interior of the relevant half triangle.
    std::vector<long> first, second;
    switch (place) {
        case PlaceClass::Infinity:
            for (const Pt& p : delta)
                if (p[1] < d) first.push_back(-p[0] * d - (p[1] - q - 1) * (i + 1));
            for (const Pt& p : interior_points(tri.delta1))
                second.push_back(-p[0] * d - (p[1] - q - 1) * (i + 1) + q + 1);
            break;
        case PlaceClass::Zero:
            for (const Pt& p : delta)
                if (p[1] < d) first.push_back(p[0] * d + (p[1] - q - 1) * i);
            for (const Pt& p : interior_points(tri.delta2))
                second.push_back(p[0] * d + (p[1] - q - 1) * i + q + 1);
            break;
        case PlaceClass::Alpha: {
            const std::vector<Pt> d1 = interior_points(tri.delta1);
            std::vector<Pt> rest;
            std::set_difference(delta.begin(), delta.end(), d1.begin(), d1.end(),
                                std::back_inserter(rest));
            if (rest.size() + d1.size() != delta.size())
                throw std::logic_error("half triangle interior escapes the full triangle");
            for (const Pt& p : rest) first.push_back(p[1]);
            for (const Pt& p : d1) second.push_back(p[1] + q + 1);
            break;
        }
    }

    check_distinct(first, "the unshifted constituent");
    check_distinct(second, "the shifted constituent");

    GapSet g;
    g.place = place;
    g.gaps.resize(first.size() + second.size());
    std::merge(first.begin(), first.end(), second.begin(), second.end(), g.gaps.begin());
    if (std::adjacent_find(g.gaps.begin(), g.gaps.end()) != g.gaps.end())
        throw std::logic_error("gap constituents overlap");
    if (static_cast<long>(g.gaps.size()) != q - 1)
        throw std::logic_error("gap count differs from q - 1");
    return g;
}

long interior_count_checked(const Triangle& t) {
    const long by_enum = static_cast<long>(interior_points(t).size());

    const long twice_area = std::abs(cross(t.v[0], t.v[1], t.v[2]));
    long boundary = 0;
    for (int e = 0; e < 3; ++e) boundary += edge_gcd(t.v[e], t.v[(e + 1) % 3]);
    if ((twice_area - boundary) % 2 != 0)
        throw std::logic_error("Pick parity violated: 2A and B differ mod 2");
    const long by_pick = (twice_area - boundary + 2) / 2;

    if (by_pick != by_enum)
        throw std::logic_error("interior point enumeration disagrees with Pick's theorem");
    return by_enum;
}

long genus_by_pick(const CurveIndex& c) { return interior_count_checked(triangles_for(c).delta); }

std::vector<long> nongaps(const GapSet& g, long genus) {
    std::vector<char> is_gap(2 * genus + 1, 0);
    for (long v : g.gaps) {
        if (v < 1 || v > 2 * genus)
            throw std::invalid_argument("gap number outside [1, 2g]");
        is_gap[v] = 1;
    }
    std::vector<long> out;
    for (long v = 0; v <= 2 * genus; ++v)
        if (!is_gap[v]) out.push_back(v);
    return out;
}

bool is_numerical_semigroup(const std::vector<long>& nongap_set, long genus) {
    const long top = 2 * genus;
    std::vector<char> in(top + 1, 0);
    for (long v : nongap_set) {
        if (v < 0 || v > top) return false;
        in[v] = 1;
    }
    if (!in[0]) return false;
    // Sums above 2g are always non-gaps, so closure only needs checking
    // inside the window.
    for (long a : nongap_set)
        for (long b : nongap_set)
            if (b <= a && a + b <= top && !in[a + b]) return false;
    return true;
}

}  // namespace maxff
