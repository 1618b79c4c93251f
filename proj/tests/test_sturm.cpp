#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "prespec/intpoly.hpp"
#include "prespec/sturm.hpp"
#include "prespec/types.hpp"

using namespace prespec;

namespace {

const IntPoly x2m2{-2, 0, 1};          // x^2 - 2
const IntPoly quartic{4, 0, -5, 0, 1}; // (x^2-1)(x^2-4)
const ExtRat ninf = ExtRat::neg_inf();
const ExtRat pinf = ExtRat::pos_inf();

ExtRat at(long num, long den = 1) { return ExtRat::at(Rat(num, den)); }

} // namespace

TEST_CASE("root counting") {
    CHECK(sturm_count(x2m2, at(0), pinf) == 1);
    CHECK(sturm_count(quartic, ninf, pinf) == 4);
    CHECK(sturm_count(IntPoly{1, 0, 1}, ninf, pinf) == 0); // x^2 + 1
    CHECK(count_real_roots(quartic) == 4);
    CHECK(count_real_roots(IntPoly{1, 0, 1}) == 0);

    SUBCASE("half-open endpoints: (lo, hi] excludes lo, includes hi") {
        CHECK(sturm_count(x2m2, at(0), at(2)) == 1);
        CHECK(sturm_count(quartic, at(-2), at(2)) == 3);  // -2 excluded, 2 included
        CHECK(sturm_count(quartic, at(-3), at(2)) == 4);
        CHECK(sturm_count(quartic, at(1), at(2)) == 1);   // 1 excluded
        CHECK(sturm_count(quartic, at(0), at(1)) == 1);   // 1 included
        CHECK(sturm_count(IntPoly{-1, 1}, at(1), pinf) == 0);
        CHECK(sturm_count(IntPoly{-1, 1}, at(0), at(1)) == 1);
    }
    SUBCASE("repeated roots count once") {
        IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1}; // (x-1)^2 (x+2)
        CHECK(count_real_roots(f) == 2);
        CHECK(sturm_count(f, at(0), at(2)) == 1);
    }
    SUBCASE("interval additivity") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> roots(-4, 4);
        for (int trial = 0; trial < 50; ++trial) {
            IntPoly f{1};
            for (int k = 0; k < 5; ++k) f = f * IntPoly{-roots(rng), 1};
            int whole = sturm_count(f, at(-5), at(5));
            int split = sturm_count(f, at(-5), at(0)) + sturm_count(f, at(0), at(5));
            REQUIRE(whole == split);
            REQUIRE(whole == count_real_roots(f));
        }
    }
    SUBCASE("known linear products") {
        IntPoly f = IntPoly{-1, 1} * IntPoly{-3, 1} * IntPoly{4, 1}; // roots 1, 3, -4
        CHECK(sturm_count(f, at(0), at(2)) == 1);
        CHECK(sturm_count(f, at(0), at(3)) == 2);
        CHECK(sturm_count(f, ninf, at(0)) == 1);
        CHECK(count_roots_above(f, Rat(0)) == 2);
        CHECK(count_roots_above(f, Rat(3)) == 0); // strictly greater
        CHECK(count_roots_above(f, Rat(5, 2)) == 1);
    }
}

TEST_CASE("totally real detection") {
    CHECK(is_totally_real(quartic));
    CHECK(is_totally_real(x2m2));
    CHECK(is_totally_real(IntPoly{0, 1}));
    CHECK(is_totally_real(IntPoly{1, 2, 1}));            // (x+1)^2, repeated but real
    CHECK_FALSE(is_totally_real(IntPoly{1, 0, 1}));      // x^2 + 1
    CHECK_FALSE(is_totally_real(IntPoly{-1, 0, 0, 1}));  // x^3 - 1
    CHECK_FALSE(is_totally_real(IntPoly{1, 1, 1, 1, 1})); // cyclotomic, roots on the circle
}

TEST_CASE("root bounds") {
    for (const IntPoly& f : {quartic, x2m2, IntPoly{-30, 1}, IntPoly{0, 3, 0, -4, 0, 1}}) {
        Rat m = root_bound(f);
        CHECK(sturm_count(f, ExtRat::at(-m), ExtRat::at(m)) == count_real_roots(f));
        CHECK(count_roots_above(f, m) == 0);
    }
}

TEST_CASE("extreme root isolation") {
    SUBCASE("x^2 - 4: boxes land on +-2") {
        auto [largest, smallest] = isolate_extreme_roots(IntPoly{-4, 0, 1}, Rat(1, 100));
        CHECK(largest.contains(Rat(2)));
        CHECK(smallest.contains(Rat(-2)));
        CHECK(largest.width() <= Rat(1, 100));
        CHECK(smallest.width() <= Rat(1, 100));
    }
    SUBCASE("largest root of x^3 - 3x - 2 is exactly 2") {
        auto [largest, smallest] = isolate_extreme_roots(IntPoly{-2, -3, 0, 1}, Rat(1, 1000));
        CHECK(largest.contains(Rat(2)));
        CHECK(smallest.contains(Rat(-1)));
    }
    SUBCASE("largest root of x^5 - 4x^3 + 3x is sqrt(3)") {
        IntPoly f{0, 3, 0, -4, 0, 1};
        auto [largest, smallest] = isolate_extreme_roots(f, Rat(1, 10));
        CHECK(largest.width() <= Rat(1, 10));
        // the box holds exactly one root of x^2 - 3, so it contains sqrt(3)
        CHECK(sturm_count(IntPoly{-3, 0, 1}, ExtRat::at(largest.lo), ExtRat::at(largest.hi)) == 1);
        // sqrt(3) lies in (1.7, 1.8): 1.7^2 < 3 < 1.8^2
        CHECK(Rat(17, 10) * Rat(17, 10) < 3);
        CHECK(Rat(18, 10) * Rat(18, 10) > 3);
        CHECK(largest.hi > Rat(17, 10));
        CHECK(largest.lo < Rat(18, 10));
        // the smallest box holds -sqrt(3), by the same squarefree witness
        CHECK(sturm_count(IntPoly{-3, 0, 1}, ExtRat::at(smallest.lo), ExtRat::at(smallest.hi)) == 1);
    }
    SUBCASE("refinement shrinks a box without losing the root") {
        auto [largest, smallest] = isolate_extreme_roots(x2m2, Rat(1));
        RootBox tight = refine_box(largest, Rat(1, 1024));
        CHECK(tight.width() <= Rat(1, 1024));
        CHECK(sturm_count(x2m2, ExtRat::at(tight.lo), ExtRat::at(tight.hi)) == 1);
        CHECK(tight.lo >= largest.lo);
        CHECK(tight.hi <= largest.hi);
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(isolate_extreme_roots(IntPoly{1, 0, 1}, Rat(1, 10)),
                        std::invalid_argument); // not totally real
        CHECK_THROWS_AS(isolate_extreme_roots(IntPoly{5}, Rat(1, 10)), std::invalid_argument);
        CHECK_THROWS_AS(isolate_extreme_roots(x2m2, Rat(0)), std::invalid_argument);
    }
}

TEST_CASE("largest-root comparison") {
    CHECK(compare_largest_roots(IntPoly{-1, 0, 1}, IntPoly{-4, 0, 1}) == Cmp::Less);
    CHECK(compare_largest_roots(IntPoly{-4, 0, 1}, IntPoly{-1, 0, 1}) == Cmp::Greater);
    CHECK(compare_largest_roots(x2m2, x2m2) == Cmp::Equal);
    // different polynomials sharing the largest root sqrt(2)
    CHECK(compare_largest_roots(x2m2, x2m2 * IntPoly{5, 1}) == Cmp::Equal);
    // sqrt(2) vs 1.5: rational vs irrational, no tie
    CHECK(compare_largest_roots(x2m2, IntPoly{-3, 2}) == Cmp::Less);
    CHECK(compare_largest_roots(IntPoly{-99, 70}, x2m2) == Cmp::Greater); // 99/70 > sqrt2
    // spectrum symmetry test used by the necessary conditions: reflected path spectrum
    IntPoly p5{0, 3, 0, -4, 0, 1};
    CHECK(compare_largest_roots(p5, p5.reflected()) == Cmp::Equal);
    IntPoly skew = IntPoly{-2, 1} * IntPoly{1, 1}; // roots 2, -1
    CHECK(compare_largest_roots(skew.reflected(), skew) == Cmp::Less);
}
