#pragma once

// Box experiments: monic integer polynomials x^n + c_{n-1} x^{n-1} + ... + c_0
// with every c_j in (-B, B], their discriminants and mod-p splitting types,
// and how often a prescribed splitting behaviour occurs compared with the
// exact limiting densities.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "splitmeasure/exactmath.hpp"
#include "splitmeasure/finitefield.hpp"
#include "splitmeasure/partitions.hpp"

namespace splitmeasure {

/// Monic integer polynomial; coefficients c_0..c_{n-1}, the leading 1 implied.
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> lower) : coeffs(std::move(lower)) {}
    static IntPoly from_int64(std::span<const std::int64_t> lower);

    int degree() const noexcept { return static_cast<int>(coeffs.size()); }
    BigInt eval(const BigInt& x) const;
    std::string to_string() const;
};

/// Square-free splitting type of f mod p, or nullopt when f mod p has a
/// repeated factor (equivalently p divides Disc(f)).
std::optional<Partition> reduce_type(const IntPoly& f, std::uint64_t p);

/// Disc(f) = (-1)^{n(n-1)/2} Res(f, f'), the resultant taken as the
/// determinant of the Sylvester matrix (fraction-free elimination).
/// Returns 1 for n = 1.
BigInt integer_discriminant(const IntPoly& f);

enum class SnVerdict { certified_sn, unknown, reducible };

std::string to_string(SnVerdict v);

/// Primes below 200, the default probe set for sn_certify.
std::vector<std::uint64_t> default_probe_primes();

/// Certifies Gal(f) = S_n from mod-p cycle types (Dedekind), never wrongly.
///
/// Transitivity comes from degree incompatibility of the observed factor
/// patterns (or from the absence of rational roots when n <= 3). Primitivity
/// comes from n prime, an (n-1)-cycle, or a prime cycle longer than n/2. A
/// primitive group containing a transposition, a 3-cycle, or a prime cycle of
/// length <= n-3 contains A_n (Jordan); an odd class then forces S_n.
/// Returns reducible only when an integer root is found.
/// Throws InputError on an empty probe list.
SnVerdict sn_certify(const IntPoly& f, std::span<const std::uint64_t> probe_primes);

enum class BoxMode { exhaustive, sample };

struct BoxSpec {
    int n = 2;
    std::int64_t B = 1;
    std::vector<std::uint64_t> primes;  // S, distinct
    std::vector<Partition> types;       // U: empty, or one type per prime
    BoxMode mode = BoxMode::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool certify = false;
    std::vector<std::uint64_t> probe_primes;  // empty: default_probe_primes()
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

struct DensityReport {
    int n = 0;
    std::int64_t B = 0;
    std::vector<std::uint64_t> primes;
    std::vector<Partition> types;
    BoxMode mode = BoxMode::exhaustive;
    std::uint64_t seed = 0;

    std::uint64_t total = 0;
    std::uint64_t coprime_count = 0;  // gcd(Disc f, M) = 1
    std::uint64_t joint_count = 0;    // coprime and type mu_i at every p_i (only with types)
    /// Per prime: type histogram among coprime polynomials, every mu |- n present.
    std::vector<std::map<Partition, std::uint64_t, std::greater<>>> type_counts;

    bool certify = false;
    std::uint64_t certified = 0;
    std::uint64_t unknown = 0;
    std::uint64_t reducible = 0;
    std::uint64_t certified_coprime = 0;
    std::uint64_t certified_joint = 0;

    BigInt M() const;
    Rat target_coprime() const;  // prod (1 - 1/p_i)
    Rat target_split() const;    // prod nu*_{n,p_i}(C_{mu_i}); 1 without types
    Rat roundoff_bound() const;  // 2nM/B
    Rat envelope_bound() const;  // 4nM/B
    Rat coprime_ratio() const;
    Rat split_ratio() const;     // joint / coprime
    Rat coprime_deviation() const;
    Rat split_deviation() const;
    Rat certified_coprime_ratio() const;
    Rat certified_split_ratio() const;

    /// Adds the counts of a report over a disjoint part of the same box.
    void merge(const DensityReport& other);

    std::string to_csv() const;  // "quantity,exact,decimal"
    std::string to_json() const;
};

/// Runs the experiment. Exhaustive mode visits all (2B)^n polynomials; sample
/// mode draws `samples` of them uniformly. Throws InputError for B <= 0, bad
/// primes or types, BudgetError when the run exceeds `budget`.
///
/// Sampling is reproducible: draw block b (4096 samples) uses a mt19937_64
/// seeded with splitmix64(seed ^ splitmix64(b)), so results do not depend on
/// the worker count.
DensityReport run_density(const BoxSpec& spec);

struct CurveOptions {
    std::vector<Partition> types;  // empty: every mu |- n
    BoxMode mode = BoxMode::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool certify = false;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

struct CurveTable {
    int n = 0;
    std::uint64_t p = 0;
    std::vector<Partition> types;
    std::vector<DensityReport> rows;  // one per B

    /// B,total,coprime_count,coprime_ratio_exact_fraction,target_fraction,
    /// deviation_decimal,bound_4nM_over_B, then count/frequency per type;
    /// certification adds certified,certified_coprime_ratio,certified_deviation_decimal,unknown,reducible.
    std::string to_csv() const;
    std::string to_json() const;
};

CurveTable convergence_curve(int n, std::uint64_t p, std::span<const std::int64_t> B_list,
                             const CurveOptions& options = {});

}  // namespace splitmeasure
