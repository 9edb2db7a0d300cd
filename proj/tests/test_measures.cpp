#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "splitmeasure/errors.hpp"
#include "splitmeasure/io.hpp"
#include "splitmeasure/measures.hpp"

using namespace splitmeasure;

namespace {

Rat R(long a, long b = 1) { return make_rat(a, b); }

}  // namespace

TEST_CASE("necklace polynomials") {
    CHECK(necklace_poly(0) == RatPoly::constant(1));
    CHECK(necklace_poly(1) == RatPoly::x());
    CHECK(necklace_poly(2) == RatPoly({0, R(-1, 2), R(1, 2)}));
    CHECK(necklace_poly(3).eval(2) == 2);
    CHECK(necklace_poly(6).eval(1) == 0);
    for (int m = 1; m <= 12; ++m) CHECK(necklace_poly(m).eval(0) == 0);
    for (int m = 2; m <= 12; ++m) CHECK(necklace_poly(m).eval(1) == 0);
    CHECK_THROWS_AS(necklace_poly(65), BudgetError);
    CHECK_THROWS_AS(necklace_poly(-1), BudgetError);
}

TEST_CASE("necklace values count primitive necklaces") {
    for (std::uint64_t q = 2; q <= 4; ++q)
        for (int m = 1; m <= 8; ++m) {
            CAPTURE(q);
            CAPTURE(m);
            CHECK(necklace_poly(m).eval(Rat(static_cast<unsigned long>(q))) ==
                  Rat(static_cast<unsigned long>(oracle::primitive_necklaces(q, m))));
        }
}

TEST_CASE("cycle polynomials") {
    const RatPoly x = RatPoly::x();
    const RatPoly one = RatPoly::constant(1);
    CHECK(cycle_poly(Partition({1, 1, 1})) == x * (x - one) * (x - one - one) * R(1, 6));
    CHECK(cycle_poly(Partition({2, 1})) == x * x * (x - one) * R(1, 2));
    CHECK(cycle_poly(Partition({3})) == RatPoly({0, R(-1, 3), 0, R(1, 3)}));
}

TEST_CASE("splitting measure examples") {
    CHECK(splitting_measure_class(3, 2, Partition({1, 1, 1})) == 0);
    CHECK(splitting_measure_class(3, 2, Partition({2, 1})) == R(1, 2));
    CHECK(splitting_measure_class(3, 2, Partition({3})) == R(1, 2));
    CHECK(splitting_measure_class(2, -2, Partition({2})) == R(1, 2));
    CHECK(splitting_measure_class(2, -2, Partition({1, 1})) == R(1, 2));
    CHECK(splitting_measure_element(3, 2, Partition({3})) == R(1, 4));
    CHECK(splitting_measure_element(3, 2, Partition({1, 1, 1})) == 0);
    CHECK(splitting_measure_class(1, R(7, 3), Partition({1})) == 1);

    // Both classes of S_2 carry exactly 1/2 at every z.
    const Rat big(1000000);
    for (const auto& mu : partitions_of(2)) CHECK(abs(splitting_measure_element(2, big, mu) - R(1, 2)) <= R(1, 1000000));
}

TEST_CASE("splitting measure errors") {
    CHECK_THROWS_AS(splitting_measure_class(3, 0, Partition({3})), PoleError);
    CHECK_THROWS_AS(splitting_measure_class(3, 1, Partition({3})), PoleError);
    CHECK_THROWS_WITH(splitting_measure_class(3, 1, Partition({3})), "pole at z=1");
    CHECK_THROWS_AS(splitting_measure_class(3, 2, Partition({2})), InputError);
    CHECK_THROWS_AS(measure_table(4, 0), PoleError);
}

TEST_CASE("measure tables") {
    const MeasureTable t3 = measure_table(3, 2);
    REQUIRE(t3.rows.size() == 3);
    CHECK(t3.row(Partition({1, 1, 1})).value == 0);
    CHECK(t3.row(Partition({2, 1})).value == R(1, 2));
    CHECK(t3.row(Partition({3})).value == R(1, 2));
    CHECK(t3.total() == 1);

    // Over F_3 there are 3 split and 3 irreducible square-free quadratics.
    const MeasureTable t2 = measure_table(2, 3);
    CHECK(t2.row(Partition({1, 1})).value == R(1, 2));
    CHECK(t2.row(Partition({2})).value == R(1, 2));

    for (const auto& r : measure_table(5, R(-7, 3)).rows)
        CHECK(r.value == Rat(r.class_size) * splitting_measure_element(5, R(-7, 3), r.type));

    CHECK(t3.to_csv() == "partition,class_size,value,decimal\n<3>,2,1/2,0.5\n\"<1,2>\",3,1/2,0.5\n<1^3>,1,0,0\n");
    const auto rows = parse_csv(measure_table(4, R(5, 2)).to_csv());
    CHECK(rows.size() == 6);
    CHECK(t3.to_json().find("\"<1^3>\"") != std::string::npos);
}

TEST_CASE("chebotarev measure") {
    CHECK(chebotarev_measure(Partition({3})) == R(1, 3));
    for (int n = 1; n <= 8; ++n)
        CHECK(chebotarev_measure(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
              make_rat(1, factorial(static_cast<unsigned>(n))));
    const Rat z(BigInt("1000000009"));
    for (int n = 2; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(abs(splitting_measure_class(n, z, mu) - chebotarev_measure(mu)) < R(1, 10000000));
}

TEST_CASE("partitions into at most n parts") {
    CHECK(partitions_at_most(0, 5) == 1);
    CHECK(partitions_at_most(3, 1) == 1);
    CHECK(partitions_at_most(4, 2) == 3);
    const auto p = oracle::partition_counts(20);
    for (int k = 0; k <= 20; ++k) CHECK(partitions_at_most(k, k + 1) == p[static_cast<std::size_t>(k)]);
}

TEST_CASE("ramification closed forms") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 97ULL}) {
        const Rat P(static_cast<unsigned long>(p));
        CHECK(bhargava_ramification(1, p) == 0);
        CHECK(bhargava_ramification(2, p) == 1 / (P + 1));
        CHECK(bhargava_ramification(3, p) == (P + 1) / (P * P + P + 1));
        CHECK(bhargava_ramification(4, p) == (P * P + 2 * P + 1) / (P * P * P + P * P + 2 * P + 1));
        CHECK(bhargava_ramification(5, p) ==
              (P * P * P + 2 * P * P + 2 * P + 1) / (P * P * P * P + P * P * P + 2 * P * P + 2 * P + 1));
    }
    CHECK_THROWS_AS(bhargava_ramification(3, 4), InputError);
}

TEST_CASE("vanishing pairs") {
    CHECK(vanishing_pairs(2).empty());
    CHECK(vanishing_pairs(3) == std::vector<VanishingPair>{{2, Partition({1, 1, 1})}});
    const auto v4 = vanishing_pairs(4);
    REQUIRE(v4.size() == 3);
    std::set<std::pair<std::uint64_t, Partition>> got;
    for (const auto& v : v4) got.insert({v.p, v.type});
    CHECK(got == std::set<std::pair<std::uint64_t, Partition>>{
                     {2, Partition({1, 1, 1, 1})}, {2, Partition({2, 2})}, {3, Partition({1, 1, 1, 1})}});
    CHECK_THROWS_AS(vanishing_pairs(1), InputError);
}

TEST_CASE("comparison table") {
    const auto c = comparison_table(3, 2);
    CHECK(c.ramification_box == R(1, 2));
    CHECK(c.ramification_bhargava == R(3, 7));
    CHECK(comparison_table(1, 5).ramification_bhargava == 0);
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t p : {2ULL, 3ULL, 11ULL}) {
            Rat s = 0, ch = 0;
            for (const auto& row : comparison_table(n, p).classes) {
                s += row.splitting;
                ch += row.chebotarev;
            }
            CHECK(s == 1);
            CHECK(ch == 1);
        }
    const auto rows = parse_csv(comparison_table(2, 3).to_csv());
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][0] == "ramification");
    CHECK(rows[1][2] == "1/3");
    CHECK(rows[1][4] == "1/4");
}
