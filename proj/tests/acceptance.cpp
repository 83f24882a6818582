// Acceptance gate: runs every check family at its full contractual parameter
// range and prints exactly one line per criterion.  Exit code is the number
// of failed criteria.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "maxff/verify.hpp"

using namespace maxff;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::vector<Check>()>& fn) {
    std::string verdict = "PASS";
    std::string note;
    try {
        const std::vector<Check> checks = fn();
        size_t passed = 0;
        for (const Check& c : checks)
            if (c.pass)
                ++passed;
            else if (note.empty())
                note = c.name + " (" + c.detail + ")";
        if (passed != checks.size() || checks.empty()) verdict = "FAIL";
        if (verdict == "PASS")
            note = std::to_string(passed) + " checks";
        else
            note = std::to_string(passed) + "/" + std::to_string(checks.size()) +
                   " checks; first failure: " + note;
    } catch (const std::exception& e) {
        verdict = "FAIL";
        note = std::string("exception: ") + e.what();
    }
    if (verdict == "FAIL") ++failures;
    std::printf("criterion %2d: %s  %s [%s]\n", number, verdict.c_str(), label.c_str(),
                note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    const std::vector<long> all_q = {9, 13, 17, 25, 29, 37, 49};

    criterion(1, "maximality at every valid index, q in {9..49}",
              [&] { return check_maximality(all_q); });
    criterion(2, "fast count equals naive count, q in {5, 9, 13}",
              [] { return check_fast_naive({5, 9, 13}); });
    criterion(3, "interior lattice counts match the genus and quarter slices",
              [&] { return check_lattice(all_q); });
    criterion(4, "gap sets: size, range, disjoint constituents, semigroup complement",
              [&] { return check_gap_sets(all_q); });
    criterion(5, "d+2 lies in the finite-place gaps only, i = 1",
              [&] { return check_index_one_separation(all_q); });
    criterion(6, "counting formulas vs direct counts, d to 99999 / 9999",
              [] { return check_counting_formulas(99999, 9999); });
    criterion(7, "class partition shape, d to 9999",
              [] { return check_class_structure(9999); });
    criterion(8, "explicit maps preserve relations with the stated orders, q in {13, 17, 25}",
              [] { return check_maps({13, 17, 25}); });
    criterion(9, "subfield patterns and generators, d to 99",
              [] { return check_subfield_profiles(7, 99, {13, 17, 25}); });
    criterion(10, "automorphism order table, q in {9, 13, 17, 25, 29} and q = 5",
              [] { return check_aut_orders({9, 13, 17, 25, 29}); });

    return failures;
}
