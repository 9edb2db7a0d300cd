#pragma once

// Necklace and cycle polynomials, z-splitting measures on S_n, and the
// quantities of the discriminant-ordered number-field model they are compared with.

#include <cstdint>
#include <string>
#include <vector>

#include "splitmeasure/exactmath.hpp"
#include "splitmeasure/partitions.hpp"

namespace splitmeasure {

inline constexpr int kMaxNecklaceDegree = 64;

/// M_m(X) = (1/m) sum_{d | m} moebius(d) X^{m/d}; M_0 = 1.
/// At X = q a prime power this counts monic irreducibles of degree m over F_q.
/// Results come from a table built once on first use, so concurrent calls are safe.
const RatPoly& necklace_poly(int m);

/// N_mu(X) = prod_i binom(M_i(X), c_i(mu)).
RatPoly cycle_poly(const Partition& mu);

/// nu*_{n,z}(C_mu) = N_mu(z) / (z^{n-1} (z - 1)).
///
/// Throws PoleError for z in {0, 1} and InputError when mu is not a partition of n.
/// For n = 1 the value is 1: S_1 is trivial and every linear polynomial is square-free.
Rat splitting_measure_class(int n, const Rat& z, const Partition& mu);

/// nu*_{n,z}(g) for any g of cycle type mu: the class value divided by |C_mu|.
Rat splitting_measure_element(int n, const Rat& z, const Partition& mu);

struct MeasureRow {
    Partition type;
    BigInt class_size;
    Rat value;  // class mass nu*_{n,z}(C_mu)

    Rat element_value() const { return value / Rat(class_size); }
};

/// Class masses of nu*_{n,z} over every mu |- n, rows in partitions_of(n) order.
struct MeasureTable {
    int n = 0;
    Rat z;
    std::vector<MeasureRow> rows;

    Rat total() const;
    const MeasureRow& row(const Partition& mu) const;

    /// Header "partition,class_size,value,decimal".
    std::string to_csv() const;
    /// {"n":..,"z":"a/b","rows":{"<1^3>":{"class_size":..,"value":"..","decimal":".."},..}}
    std::string to_json() const;
};

MeasureTable measure_table(int n, const Rat& z);

/// Uniform measure on S_n pushed to classes: |C_mu| / n!.
Rat chebotarev_measure(const Partition& mu);

/// q(k, n): partitions of k into at most n parts; q(0, n) = 1.
BigInt partitions_at_most(int k, int n);

/// rho_n(p) = sum_{k=1}^{n-1} q(k,n-k) p^{n-1-k} / sum_{k=0}^{n-1} q(k,n-k) p^{n-1-k}.
Rat bhargava_ramification(int n, std::uint64_t p);

struct VanishingPair {
    std::uint64_t p;
    Partition type;

    friend bool operator==(const VanishingPair&, const VanishingPair&) = default;
};

/// All (p, mu) with nu*_{n,p}(C_mu) = 0, ordered by p then partitions_of(n) order.
///
/// Only primes p <= n - 1 are examined: for real t > n - 1 every class has
/// strictly positive mass, so no larger prime can contribute.
std::vector<VanishingPair> vanishing_pairs(int n);

struct ComparisonClassRow {
    Partition type;
    Rat splitting;   // nu*_{n,p}(C_mu)
    Rat chebotarev;  // |C_mu| / n!
};

struct ComparisonRow {
    int n = 0;
    std::uint64_t p = 0;
    Rat ramification_box;        // 1/p
    Rat ramification_bhargava;   // rho_n(p)
    std::vector<ComparisonClassRow> classes;

    /// A "ramification" row, then one "class" row per partition.
    std::string to_csv() const;
    std::string to_json() const;
};

ComparisonRow comparison_table(int n, std::uint64_t p);

}  // namespace splitmeasure
