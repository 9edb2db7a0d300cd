#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "splitmeasure/errors.hpp"
#include "splitmeasure/finitefield.hpp"
#include "splitmeasure/measures.hpp"

using namespace splitmeasure;

namespace {

std::vector<FqContext> test_fields() {
    return {fq_make(2), fq_make(3), fq_make(2, 2), fq_make(5), fq_make(7), fq_make(2, 3), fq_make(3, 2)};
}

Rat N(const Partition& mu, std::uint64_t q) { return cycle_poly(mu).eval(Rat(static_cast<unsigned long>(q))); }

}  // namespace

TEST_CASE("field construction") {
    const FqContext f2 = fq_make(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus().empty());
    const FqContext f4 = fq_make(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<Elem>{1, 1, 1});
    CHECK(fq_make(2, 3).modulus() == std::vector<Elem>{1, 0, 1, 1});
    CHECK_THROWS_AS(fq_make(4, 1), InputError);
    CHECK_THROWS_AS(fq_make(2, 7), InputError);
    CHECK_THROWS_AS(FqContext::with_modulus(2, {1, 0, 1}), InputError);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(31);
    for (const auto& k : test_fields()) {
        std::uniform_int_distribution<Elem> pick(0, k.q() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const Elem a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
            CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
            CHECK(k.add(a, k.neg(a)) == 0);
            CHECK(k.sub(k.add(a, b), b) == a);
            if (a) CHECK(k.mul(a, k.inv(a)) == 1);
            CHECK(k.pow(k.pth_root(a), k.p()) == a);
            CHECK(k.pow(a, k.q()) == a);
        }
        CHECK_THROWS_AS(k.inv(0), InputError);
    }
}

TEST_CASE("square-freeness and splitting type examples") {
    const FqContext f2 = fq_make(2);
    CHECK_FALSE(is_squarefree(FqPoly(f2, {0, 0, 1})));
    CHECK(is_squarefree(FqPoly(f2, {0, 1, 1})));
    CHECK_FALSE(is_squarefree(FqPoly(f2, {1, 0, 1})));
    CHECK(splitting_type(FqPoly(f2, {0, 1, 1})) == Partition({1, 1}));
    CHECK(splitting_type(FqPoly(f2, {1, 1, 1})) == Partition({2}));
    CHECK(splitting_type(FqPoly(f2, {1, 0, 1, 1})) == Partition({3}));
    CHECK_THROWS_AS(splitting_type(FqPoly(f2, {1, 0, 1})), InputError);
    CHECK_THROWS_AS(FqPoly(f2, {1, 1, 0}), InputError);

    CHECK(full_splitting_symbol(FqPoly(f2, {0, 0, 1})).to_string() == "(1^2)");
    CHECK(full_splitting_symbol(FqPoly(f2, {1, 0, 1})).to_string() == "(1^2)");
    // (x^2+x+1)^2 = x^4+x^2+1
    CHECK(full_splitting_symbol(FqPoly(f2, {1, 0, 1, 0, 1})).to_string() == "(2^2)");
    CHECK(full_splitting_symbol(FqPoly(f2, {0, 1, 1})) == SplittingSymbol::from_partition(Partition({1, 1})));
}

TEST_CASE("hand-listed quadratics over F_2") {
    // x^2, x^2+1 = (x+1)^2 repeat; x^2+x splits; x^2+x+1 is irreducible.
    const SplitTally t = exhaustive_tally(2, fq_make(2));
    CHECK(t.nonsquarefree_total == 2);
    CHECK(t.squarefree_count(Partition({1, 1})) == 1);
    CHECK(t.squarefree_count(Partition({2})) == 1);
    CHECK(t.total() == 4);
}

TEST_CASE("small tallies") {
    const SplitTally t3 = exhaustive_tally(3, fq_make(2));
    CHECK(t3.squarefree_count(Partition({1, 1, 1})) == 0);
    CHECK(t3.squarefree_count(Partition({2, 1})) == 2);
    CHECK(t3.squarefree_count(Partition({3})) == 2);
    CHECK(t3.nonsquarefree_total == 4);
    const SplitTally q3 = exhaustive_tally(2, fq_make(3));
    CHECK(q3.squarefree_count(Partition({1, 1})) == 3);
    CHECK(q3.squarefree_count(Partition({2})) == 3);
    CHECK(q3.nonsquarefree_total == 3);
}

TEST_CASE("tallies match cycle polynomials") {
    for (const auto& k : test_fields())
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(k.describe());
            CAPTURE(n);
            const SplitTally t = exhaustive_tally(n, k);
            const std::uint64_t q = k.q();
            std::uint64_t qn1 = 1;
            for (int i = 0; i < n - 1; ++i) qn1 *= q;
            // Every linear polynomial is square-free, so the count starts at n = 2.
            CHECK(t.nonsquarefree_total == (n >= 2 ? qn1 : 0));
            CHECK(t.total() == qn1 * q);
            std::uint64_t symbols = 0;
            for (const auto& [s, count] : t.symbol_counts) symbols += count;
            CHECK(symbols == t.total());
            const Rat squarefree(static_cast<unsigned long>(qn1 * q - qn1));
            for (const auto& mu : partitions_of(n)) {
                const Rat count(static_cast<unsigned long>(t.squarefree_count(mu)));
                CHECK(count == N(mu, q));
                if (n >= 2) CHECK(count / squarefree == splitting_measure_class(n, Rat(static_cast<unsigned long>(q)), mu));
            }
            CHECK(t.matches_formulas());
        }
}

TEST_CASE("irreducible counts") {
    CHECK(irreducible_count(3, fq_make(2)) == 2);
    CHECK(irreducible_count(2, fq_make(2, 2)) == 6);
    for (const auto& k : test_fields()) {
        CHECK(irreducible_count(1, k) == k.q());
        for (int n = 1; n <= 5; ++n)
            CHECK(Rat(static_cast<unsigned long>(irreducible_count(n, k))) ==
                  necklace_poly(n).eval(Rat(static_cast<unsigned long>(k.q()))));
    }
}

TEST_CASE("distinct-degree factorization agrees with trial division") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        const FqContext k = fq_make(p);
        for (int n = 1; n <= 4; ++n)
            for (const auto& f : oracle::modp::monics(p, n)) {
                const auto expected = oracle::modp::factor_degrees(f, p);
                const FqPoly g(k, f);
                REQUIRE(is_squarefree(g) == expected.has_value());
                if (expected) CHECK(splitting_type(g) == Partition(*expected));
            }
    }
}

TEST_CASE("trial-division irreducible lists") {
    for (std::uint64_t p : {2ULL, 3ULL}) {
        const FqContext k = fq_make(p);
        for (int d = 1; d <= 5; ++d) {
            const auto list = oracle::modp::irreducibles(p, d);
            CHECK(list.size() == irreducible_count(d, k));
            for (const auto& f : list) CHECK(splitting_type(FqPoly(k, f)) == Partition({d}));
        }
    }
}

TEST_CASE("tallies do not depend on the modulus") {
    const FqContext f8a = fq_make(2, 3);
    const FqContext f8b = FqContext::with_modulus(2, {1, 1, 0, 1});
    const FqContext f9a = fq_make(3, 2);
    const FqContext f9b = FqContext::with_modulus(3, {2, 1, 1});
    CHECK(f8a.modulus() != f8b.modulus());
    CHECK(f9a.modulus() != f9b.modulus());
    for (int n = 1; n <= 5; ++n) {
        const auto a = exhaustive_tally(n, f8a), b = exhaustive_tally(n, f8b);
        CHECK(a.squarefree_counts == b.squarefree_counts);
        CHECK(a.symbol_counts == b.symbol_counts);
        const auto c = exhaustive_tally(n, f9a), d = exhaustive_tally(n, f9b);
        CHECK(c.squarefree_counts == d.squarefree_counts);
        CHECK(c.symbol_counts == d.symbol_counts);
    }
}

TEST_CASE("tallies do not depend on the worker count") {
    const FqContext k = fq_make(3);
    const std::string one = exhaustive_tally(6, k, {kDefaultBudget, 1}).to_csv();
    for (unsigned w : {2u, 3u, 7u}) CHECK(exhaustive_tally(6, k, {kDefaultBudget, w}).to_csv() == one);
    const auto t1 = type_lookup_table(4, k, {kDefaultBudget, 1});
    CHECK(type_lookup_table(4, k, {kDefaultBudget, 5}) == t1);
}

TEST_CASE("merge is associative and commutative") {
    const FqContext k = fq_make(2);
    const SplitTally t = exhaustive_tally(4, k);
    SplitTally a = t, b = t, c = t;
    SplitTally ab = a;
    ab.merge(b);
    ab.merge(c);
    SplitTally bc = b;
    bc.merge(c);
    SplitTally a_bc = a;
    a_bc.merge(bc);
    CHECK(ab.to_csv() == a_bc.to_csv());
    SplitTally ba = b;
    ba.merge(a);
    SplitTally ab2 = a;
    ab2.merge(b);
    CHECK(ba.to_csv() == ab2.to_csv());
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(exhaustive_tally(7, fq_make(7), {1000, 1}), BudgetError);
    CHECK_THROWS_WITH_AS(checked_power(10, 9, 100'000'000), doctest::Contains("budget"), BudgetError);
    CHECK(checked_power(10, 8, 100'000'000) == 100'000'000);
}

TEST_CASE("lookup table matches classification") {
    const FqContext k = fq_make(3);
    const auto table = type_lookup_table(3, k);
    const auto parts = partitions_of(3);
    REQUIRE(table.size() == 27);
    for (std::uint64_t idx = 0; idx < 27; ++idx) {
        std::vector<Elem> c{idx % 3, idx / 3 % 3, idx / 9, 1};
        const FqPoly g(k, c);
        if (table[idx] < 0) CHECK_FALSE(is_squarefree(g));
        else CHECK(splitting_type(g) == parts[static_cast<std::size_t>(table[idx])]);
    }
}

TEST_CASE("tally serialization") {
    const SplitTally t = exhaustive_tally(3, fq_make(2));
    CHECK(t.to_csv() ==
          "symbol,count,target,match\n<3>,2,2,MATCH\n\"<1,2>\",2,2,MATCH\n<1^3>,0,0,MATCH\n\"(1^2,1)\",2,,\n(1^3),2,,\n"
          "nonsquarefree,4,4,MATCH\n");
    CHECK(t.to_json().find("\"nonsquarefree_total\": 4") != std::string::npos);
}
