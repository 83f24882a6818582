#include "maxff/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "maxff/curve.hpp"
#include "maxff/gaps.hpp"
#include "maxff/gf.hpp"
#include "maxff/iso.hpp"
#include "maxff/maps.hpp"

namespace maxff {

namespace {

Check make_check(const std::string& name, bool pass, const std::string& detail) {
    return Check{name, pass, detail};
}

bool contains(const std::vector<long>& v, long x) {
    return std::binary_search(v.begin(), v.end(), x);
}

// Solutions of i^2 + i + 1 = 0 (mod d) among the canonical valid indices,
// found by direct scan.
std::vector<long> order_three_indices(long d) {
    std::vector<long> out;
    for (long i : valid_indices(d))
        if ((i * i + i + 1) % d == 0) out.push_back(i);
    return out;
}

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<Check> check_maximality(const std::vector<long>& qs) {
    std::vector<Check> out;
    for (long q : qs) {
        Gf F(q);
        const long d = (q + 1) / 2;
        const long bound = hasse_weil_upper(q);
        for (long i : valid_indices(d)) {
            const CurveIndex c = validate_index(q, i);
            const long n = count_places(F, c, CountMethod::Fast);
            std::ostringstream name, detail;
            name << "maximality q=" << q << " i=" << i;
            detail << "places=" << n << " bound=" << bound;
            out.push_back(make_check(name.str(), n == bound, detail.str()));
        }
    }
    return out;
}

std::vector<Check> check_fast_naive(const std::vector<long>& qs) {
    std::vector<Check> out;
    for (long q : qs) {
        Gf F(q);
        const long d = (q + 1) / 2;
        for (long i : valid_indices(d)) {
            const CurveIndex c = validate_index(q, i);
            const long fast = count_places(F, c, CountMethod::Fast);
            const long naive = count_places(F, c, CountMethod::Naive);
            std::ostringstream name, detail;
            name << "fast vs naive count q=" << q << " i=" << i;
            detail << "fast=" << fast << " naive=" << naive;
            out.push_back(make_check(name.str(), fast == naive, detail.str()));
        }
    }
    return out;
}

std::vector<Check> check_lattice(const std::vector<long>& qs) {
    std::vector<Check> out;
    for (long q : qs) {
        const long d = (q + 1) / 2;
        for (long i : valid_indices(d)) {
            const CurveIndex c = validate_index(q, i);
            const CurveTriangles t = triangles_for(c);
            const long g = genus_by_pick(c);
            const long n1 = interior_count_checked(t.delta1);
            const long n2 = interior_count_checked(t.delta2);
            const bool ok = g == q - 1 && n1 == (q - 1) / 4 && n2 == (q - 1) / 4;
            std::ostringstream name, detail;
            name << "lattice counts q=" << q << " i=" << i;
            detail << "|delta|=" << g << " |delta1|=" << n1 << " |delta2|=" << n2
                   << " expected " << q - 1 << " and " << (q - 1) / 4;
            out.push_back(make_check(name.str(), ok, detail.str()));
        }
    }
    return out;
}

std::vector<Check> check_gap_sets(const std::vector<long>& qs) {
    std::vector<Check> out;
    for (long q : qs) {
        const long d = (q + 1) / 2;
        const long g = q - 1;
        for (long i : valid_indices(d)) {
            const CurveIndex c = validate_index(q, i);
            const GapSet ginf = gap_set(c, PlaceClass::Infinity);
            const GapSet gzero = gap_set(c, PlaceClass::Zero);
            const GapSet galpha = gap_set(c, PlaceClass::Alpha);

            bool ok = true;
            std::ostringstream detail;
            for (const GapSet* s : {&ginf, &gzero, &galpha}) {
                if (static_cast<long>(s->gaps.size()) != g) ok = false;
                if (s->gaps.empty() || s->gaps.front() < 1 || s->gaps.back() > 2 * q - 3)
                    ok = false;
                if (!contains(s->gaps, 1)) ok = false;
                if (!is_numerical_semigroup(nongaps(*s, g), g)) ok = false;
            }
            if (!contains(gzero.gaps, d + i)) {
                ok = false;
                detail << "d+i missing from zero gaps; ";
            }
            if (!contains(ginf.gaps, d - i - 1)) {
                ok = false;
                detail << "d-i-1 missing from infinity gaps; ";
            }
            detail << "sizes " << ginf.gaps.size() << "/" << gzero.gaps.size() << "/"
                   << galpha.gaps.size() << ", range [1," << 2 * q - 3 << "]";
            std::ostringstream name;
            name << "gap sets q=" << q << " i=" << i;
            out.push_back(make_check(name.str(), ok, detail.str()));
        }
    }
    return out;
}

std::vector<Check> check_index_one_separation(const std::vector<long>& qs) {
    std::vector<Check> out;
    for (long q : qs) {
        const long d = (q + 1) / 2;
        const CurveIndex c = validate_index(q, 1);
        const GapSet ginf = gap_set(c, PlaceClass::Infinity);
        const GapSet gzero = gap_set(c, PlaceClass::Zero);
        const GapSet galpha = gap_set(c, PlaceClass::Alpha);
        const bool in_zero = contains(gzero.gaps, d + 2);
        const bool in_alpha = contains(galpha.gaps, d + 2);
        const bool in_inf = contains(ginf.gaps, d + 2);
        const bool distinct = ginf.gaps != gzero.gaps && ginf.gaps != galpha.gaps;
        std::ostringstream name, detail;
        name << "d+2 separates infinity gaps at q=" << q << " i=1";
        detail << "d+2=" << d + 2 << " in zero:" << in_zero << " in alpha:" << in_alpha
               << " in infinity:" << in_inf;
        out.push_back(
            make_check(name.str(), in_zero && in_alpha && !in_inf && distinct, detail.str()));
    }
    return out;
}

std::vector<Check> check_counting_formulas(long pi_phi_max_d, long class_max_d) {
    std::vector<Check> out;

    {
        long bad_d = 0, bad_closed = 0, bad_brute = 0, n = 0;
        for (long d = 7; d <= pi_phi_max_d && bad_d == 0; d += 2) {
            ++n;
            const long closed = pi_count(d, CountMode::ClosedForm);
            const long brute = pi_count(d, CountMode::BruteForce);
            if (closed != brute) {
                bad_d = d;
                bad_closed = closed;
                bad_brute = brute;
            }
        }
        std::ostringstream name, detail;
        name << "order-three index count, closed vs brute, odd d in [7," << pi_phi_max_d << "]";
        if (bad_d)
            detail << "mismatch at d=" << bad_d << ": closed=" << bad_closed
                   << " brute=" << bad_brute;
        else
            detail << n << " values agree";
        out.push_back(make_check(name.str(), bad_d == 0, detail.str()));
    }

    {
        long bad_d = 0, bad_closed = 0, bad_brute = 0, n = 0;
        for (long d = 7; d <= pi_phi_max_d && bad_d == 0; d += 2) {
            ++n;
            const long closed = phi2(d, CountMode::ClosedForm);
            const long brute = phi2(d, CountMode::BruteForce);
            if (closed != brute) {
                bad_d = d;
                bad_closed = closed;
                bad_brute = brute;
            }
        }
        std::ostringstream name, detail;
        name << "coprime index count, closed vs brute, odd d in [7," << pi_phi_max_d << "]";
        if (bad_d)
            detail << "mismatch at d=" << bad_d << ": closed=" << bad_closed
                   << " brute=" << bad_brute;
        else
            detail << n << " values agree";
        out.push_back(make_check(name.str(), bad_d == 0, detail.str()));
    }

    {
        long bad_d = 0, bad_f = 0, bad_e = 0, n = 0;
        for (long d = 7; d <= class_max_d && bad_d == 0; d += 2) {
            ++n;
            const long f = class_count(d, ClassCountMode::Formula);
            const long e = class_count(d, ClassCountMode::Enumeration);
            if (f != e) {
                bad_d = d;
                bad_f = f;
                bad_e = e;
            }
        }
        std::ostringstream name, detail;
        name << "class count, formula vs enumeration, odd d in [7," << class_max_d << "]";
        if (bad_d)
            detail << "mismatch at d=" << bad_d << ": formula=" << bad_f
                   << " enumeration=" << bad_e;
        else
            detail << n << " values agree";
        out.push_back(make_check(name.str(), bad_d == 0, detail.str()));
    }

    {
        long bad_d = 0, n = 0;
        for (long d = 7; d <= class_max_d && bad_d == 0; d += 2) {
            ++n;
            const long expect = (phi2(d, CountMode::ClosedForm) + 1) / 2;
            if (static_cast<long>(valid_indices(d).size()) != expect) bad_d = d;
        }
        std::ostringstream name, detail;
        name << "canonical index count equals (phi2+1)/2, odd d in [7," << class_max_d << "]";
        if (bad_d)
            detail << "mismatch at d=" << bad_d;
        else
            detail << n << " values agree";
        out.push_back(make_check(name.str(), bad_d == 0, detail.str()));
    }

    return out;
}

std::vector<Check> check_class_structure(long max_d) {
    std::vector<Check> out;
    long bad_d = 0, n = 0;
    std::string why;
    for (long d = 7; d <= max_d && bad_d == 0; d += 2) {
        ++n;
        const IsoPartition part = partition_classes(d);
        const std::vector<long> special = order_three_indices(d);

        if (part.singleton_indices != special) {
            bad_d = d;
            why = "singletons differ from the order-three index set";
            break;
        }
        const std::vector<long> expect_pair{1, (d - 1) / 2};
        if (part.pair_class != expect_pair) {
            bad_d = d;
            why = "pair class is not {1, (d-1)/2}";
            break;
        }
        long pairs = 0;
        for (const auto& cls : part.classes) {
            if (cls.size() == 2) ++pairs;
            if (cls.size() != 1 && cls.size() != 2 && cls.size() != 3) {
                bad_d = d;
                why = "class of unexpected size";
            }
        }
        if (pairs != 1) {
            bad_d = d;
            why = "pair class count is not one";
        }
    }
    std::ostringstream name, detail;
    name << "partition shape: singletons, one pair, rest triples, odd d in [7," << max_d << "]";
    if (bad_d)
        detail << "violated at d=" << bad_d << ": " << why;
    else
        detail << n << " values of d check out";
    out.push_back(make_check(name.str(), bad_d == 0, detail.str()));
    return out;
}

std::vector<Check> check_maps(const std::vector<long>& qs) {
    std::vector<Check> out;
    for (long q : qs) {
        Gf F(q);
        const long d = (q + 1) / 2;
        const std::vector<long> valid = valid_indices(d);

        {
            long tested = 0;
            bool ok = true;
            std::ostringstream detail;
            for (long i : valid)
                for (long j : valid)
                    for (int kind = 1; kind <= 4; ++kind) {
                        long num = 0;
                        switch (kind) {
                            case 1: num = i * j - 1; break;
                            case 2: num = i * j + i + 1; break;
                            case 3: num = i * j + i + j; break;
                            case 4: num = i * j + j + 1; break;
                        }
                        if (num % d != 0) continue;
                        ++tested;
                        const MonomialMap m = iso_map(F, kind, i, j);
                        if (!preserves_relation(F, m, CurveIndex{q, d, j}, CurveIndex{q, d, i})) {
                            ok = false;
                            detail << "kind " << kind << " fails at (i,j)=(" << i << "," << j
                                   << "); ";
                        }
                    }
            detail << tested << " congruent (i,j,kind) triples";
            std::ostringstream name;
            name << "explicit isomorphisms preserve relations q=" << q;
            out.push_back(make_check(name.str(), ok && tested > 0, detail.str()));
        }

        {
            bool ok = true;
            std::ostringstream detail;
            for (long i : valid) {
                const CurveIndex c = validate_index(q, i);
                MonomialMap bad = identity_map(F);
                bad.uy = 1;  // y -> y x, degree mismatch after reduction
                if (preserves_relation(F, bad, c, c)) {
                    ok = false;
                    detail << "control passed at i=" << i << "; ";
                }
            }
            detail << "control map rejected at every index";
            std::ostringstream name;
            name << "negative control map fails q=" << q;
            out.push_back(make_check(name.str(), ok, detail.str()));
        }

        {
            const std::vector<MonomialMap> hs = h_group(F);
            bool ok = static_cast<long>(hs.size()) == 2 * (q + 1);
            std::ostringstream detail;
            detail << hs.size() << " diagonal automorphisms";
            for (long i : valid) {
                const CurveIndex c = validate_index(q, i);
                for (const MonomialMap& h : hs)
                    if (!preserves_relation(F, h, c, c)) {
                        ok = false;
                        detail << "; fails at i=" << i;
                        break;
                    }
            }
            std::ostringstream name;
            name << "diagonal subgroup preserves relation q=" << q;
            out.push_back(make_check(name.str(), ok, detail.str()));
        }

        {
            const std::vector<long> special = order_three_indices(d);
            bool ok = true;
            std::ostringstream detail;
            if (special.empty()) {
                // No order-three map exists here; the constructor must refuse
                // every canonical index.
                for (long i : valid) {
                    bool threw = false;
                    try {
                        omega_map(F, i);
                    } catch (const std::invalid_argument&) {
                        threw = true;
                    }
                    if (!threw) {
                        ok = false;
                        detail << "constructor accepted i=" << i << "; ";
                    }
                }
                detail << "no order-three index exists; constructor refuses all";
            } else {
                for (long i : special) {
                    const CurveIndex c = validate_index(q, i);
                    const MonomialMap w = omega_map(F, i);
                    if (!preserves_relation(F, w, c, c)) ok = false;
                    const auto ord = order_on_curve(F, c, w);
                    if (!(ord && *ord == 3)) {
                        ok = false;
                        detail << "order not 3 at i=" << i << "; ";
                    }
                    // Conjugation by w must 3-cycle the three involutions.
                    const MonomialMap w2 = compose(F, w, w);
                    std::vector<MonomialMap> sigma = {
                        h_element(F, false, F.neg(F.one())),  // (x, -y)
                        h_element(F, true, F.one()),          // (-x, y)
                        h_element(F, true, F.neg(F.one()))};  // (-x, -y)
                    std::array<int, 3> image{-1, -1, -1};
                    for (int s = 0; s < 3; ++s) {
                        const MonomialMap conj = compose(F, compose(F, w, sigma[s]), w2);
                        for (int t = 0; t < 3; ++t)
                            if (equal_on_curve(F, c, conj, sigma[t])) image[s] = t;
                    }
                    const bool cycle =
                        image[0] != -1 && image[1] != -1 && image[2] != -1 &&
                        image[0] != 0 && image[image[0]] != 0 &&
                        image[image[0]] != image[0] && image[image[image[0]]] == 0;
                    if (!cycle) {
                        ok = false;
                        detail << "conjugation is not a 3-cycle at i=" << i << "; ";
                    } else {
                        detail << "i=" << i << " order 3, involutions cycled; ";
                    }
                }
            }
            std::ostringstream name;
            name << "order-three automorphism q=" << q;
            out.push_back(make_check(name.str(), ok, detail.str()));
        }

        {
            const CurveIndex c1 = validate_index(q, 1);
            const MonomialMap p = pi_map(F);
            const MonomialMap pp = pi_prime_map(F);
            const MonomialMap w1 = omega1_map(F);
            bool ok = true;
            std::ostringstream detail;
            if (!preserves_relation(F, p, c1, c1) || !preserves_relation(F, pp, c1, c1))
                ok = false;
            const auto op = order_on_curve(F, c1, p);
            const auto opp = order_on_curve(F, c1, pp);
            if (!(op && *op == 2 && opp && *opp == 2)) {
                ok = false;
                detail << "involution orders wrong; ";
            }
            if (!(compose(F, p, p) == identity_map(F))) {
                ok = false;
                detail << "pi^2 not literally the identity; ";
            }
            if (p.ux == 1 && p.vx == 0) {
                ok = false;
                detail << "pi degenerated to a diagonal map; ";
            }
            // Pre-composing the extra automorphism with (x, y/a^2) and
            // (-x, y/a^2) must give the two involutions exactly.
            const FieldElement b = F.pow(F.norm_minus_one(), -2);
            const MonomialMap hplus = h_element(F, false, b);
            const MonomialMap hminus = h_element(F, true, b);
            if (!(compose(F, w1, hminus) == p) || !(compose(F, w1, hplus) == pp)) {
                ok = false;
                detail << "derived involutions differ from the stated ones; ";
            }
            detail << "both involutions have order 2";
            std::ostringstream name;
            name << "extra involutions at index one q=" << q;
            out.push_back(make_check(name.str(), ok, detail.str()));
        }

        {
            bool ok = true;
            std::ostringstream detail;
            long tested = 0;
            for (long i : valid) {
                const CurveIndex ci{q, d, i};
                // Shift by one period: expressions in the i+d model satisfy
                // the canonical relation, and the round trip is the identity.
                const long js = i + d;
                const MonomialMap s_there = shift_map(F, i, js);
                const MonomialMap s_back = shift_map(F, js, i);
                if (!preserves_relation(F, s_there, CurveIndex{q, d, js}, ci)) ok = false;
                const auto so = order_on_curve(F, ci, compose(F, s_there, s_back), 4);
                if (!(so && *so == 1)) ok = false;
                // Index inversion: i = d - j - 1.
                const long ji = d - i - 1;
                const MonomialMap v_there = invert_map(F, i, ji);
                const MonomialMap v_back = invert_map(F, ji, i);
                if (!preserves_relation(F, v_there, CurveIndex{q, d, ji}, ci)) ok = false;
                const auto vo = order_on_curve(F, ci, compose(F, v_there, v_back), 4);
                if (!(vo && *vo == 1)) ok = false;
                ++tested;
            }
            detail << tested << " indices, both reductions round-trip to the identity";
            std::ostringstream name;
            name << "shift and inversion reductions q=" << q;
            out.push_back(make_check(name.str(), ok, detail.str()));
        }
    }
    return out;
}

std::vector<Check> check_subfield_profiles(long min_d, long max_d, const std::vector<long>& qs) {
    std::vector<Check> out;

    {
        bool ok = true;
        long bad_d = 0, bad_i = 0, n = 0;
        std::string why;
        for (long d = std::max(min_d, 7L); d <= max_d && ok; d += 2) {
            for (long i : valid_indices(d)) {
                // The top index (d-1)/2 always pairs with 1 and would show
                // TwoEqual for a different reason; the pattern claim covers
                // the range below it.
                if (i > (d - 3) / 2) continue;
                ++n;
                const SubfieldProfile p = subfield_indices(i, d);
                const bool order3 = (i * i + i + 1) % d == 0;
                SubfieldPattern expect = SubfieldPattern::AllDistinct;
                if (order3)
                    expect = SubfieldPattern::AllEqual;
                else if (i == 1)
                    expect = SubfieldPattern::TwoEqual;
                if (p.pattern != expect) {
                    ok = false;
                    bad_d = d;
                    bad_i = i;
                    why = "pattern mismatch";
                    break;
                }
                if (i == 1 && std::count(p.fj.begin(), p.fj.end(), d - 1) != 1) {
                    ok = false;
                    bad_d = d;
                    bad_i = i;
                    why = "index one profile lacks d-1";
                    break;
                }
            }
        }
        std::ostringstream name, detail;
        name << "subfield pattern classification, odd d in [" << std::max(min_d, 7L) << ","
             << max_d << "]";
        if (!ok)
            detail << why << " at d=" << bad_d << " i=" << bad_i;
        else
            detail << n << " profiles match";
        out.push_back(make_check(name.str(), ok, detail.str()));
    }

    for (long q : qs) {
        Gf F(q);
        const long d = (q + 1) / 2;
        bool ok = true;
        long tested = 0;
        std::ostringstream detail;
        for (long i : valid_indices(d)) {
            const CurveIndex c = validate_index(q, i);
            const SubfieldProfile p = subfield_indices(i, d);

            const auto s0 = subfield_generators(F, c, SubfieldCase::Sigma0);
            if (!s0 || !s0->relation_ok || s0->target_fj != p.fj[0]) {
                ok = false;
                detail << "doubling case broken at i=" << i << "; ";
            }

            const SubfieldCase inv_case =
                p.case_inv == 1 ? SubfieldCase::Case1 : SubfieldCase::Case2;
            const SubfieldCase inv_other =
                p.case_inv == 1 ? SubfieldCase::Case2 : SubfieldCase::Case1;
            const auto s1 = subfield_generators(F, c, inv_case);
            if (!s1 || !s1->relation_ok || s1->target_fj != p.fj[1]) {
                ok = false;
                detail << "inverse case broken at i=" << i << "; ";
            }
            if (subfield_generators(F, c, inv_other)) {
                ok = false;
                detail << "both inverse cases applicable at i=" << i << "; ";
            }

            const SubfieldCase inv1_case =
                p.case_inv1 == 3 ? SubfieldCase::Case3 : SubfieldCase::Case4;
            const SubfieldCase inv1_other =
                p.case_inv1 == 3 ? SubfieldCase::Case4 : SubfieldCase::Case3;
            const auto s2 = subfield_generators(F, c, inv1_case);
            if (!s2 || !s2->relation_ok || s2->target_fj != p.fj[2]) {
                ok = false;
                detail << "shifted-inverse case broken at i=" << i << "; ";
            }
            if (subfield_generators(F, c, inv1_other)) {
                ok = false;
                detail << "both shifted-inverse cases applicable at i=" << i << "; ";
            }
            ++tested;
        }
        detail << tested << " indices, all applicable cases verified";
        std::ostringstream name;
        name << "subfield generator relations q=" << q;
        out.push_back(make_check(name.str(), ok, detail.str()));
    }

    return out;
}

std::vector<Check> check_aut_orders(const std::vector<long>& qs) {
    std::vector<Check> out;

    {
        const long got = aut_order(5, 1);
        out.push_back(make_check("automorphism order at q=5",
                                 got == 360,
                                 "expected the special constant 360, got " + std::to_string(got)));
    }
    {
        const long got = aut_order(13, 1);
        out.push_back(make_check("automorphism order at q=13 i=1",
                                 got == 56,
                                 "expected 4(q+1) = 56, got " + std::to_string(got)));
    }

    for (long q : qs) {
        if (q == 5) continue;
        const long d = (q + 1) / 2;
        bool ok = true;
        std::ostringstream detail;
        for (long i : valid_indices(d)) {
            const long got = aut_order(q, i);
            const bool iso_to_one = are_isomorphic(i, 1, d);
            const bool order3 = (i * i + i + 1) % d == 0;
            long expect = q + 1;
            if (iso_to_one)
                expect = 4 * (q + 1);
            else if (order3)
                expect = 3 * (q + 1);
            if (got != expect) {
                ok = false;
                detail << "i=" << i << " got " << got << " expected " << expect << "; ";
            }
            // Cross-links: the 4(q+1) case must coincide with membership in
            // the class of index one, the 3(q+1) case with the all-equal
            // subfield profile.
            const AutCase ac = aut_case(q, i);
            const bool four = ac == AutCase::IndexOne || ac == AutCase::HalfIndex;
            if (four != iso_to_one) {
                ok = false;
                detail << "i=" << i << " case/class disagreement; ";
            }
            const bool all_equal =
                subfield_indices(i, d).pattern == SubfieldPattern::AllEqual;
            if ((ac == AutCase::OrderThree) != all_equal) {
                ok = false;
                detail << "i=" << i << " case/profile disagreement; ";
            }
        }
        detail << valid_indices(d).size() << " indices match the order table";
        std::ostringstream name;
        name << "automorphism order table q=" << q;
        out.push_back(make_check(name.str(), ok, detail.str()));
    }
    return out;
}

}  // namespace maxff
