#pragma once

// Finite fields F_q, monic polynomials over them, and the exhaustive
// factorization-type tally used as an independent check of the cycle
// polynomial counts.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "splitmeasure/partitions.hpp"

namespace splitmeasure {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// A field element. For q = p^f the value sum_i d_i p^i encodes sum_i d_i t^i,
/// where t is a root of the context's modulus; values below p form the prime field.
using Elem = std::uint64_t;

/// F_q with q = p^f. Immutable; copies share their lookup tables.
class FqContext {
public:
    /// The field of p^f elements. For f >= 2 the modulus is the irreducible
    /// monic of degree f whose coefficient vector (c_0, c_1, ..., c_{f-1}) is
    /// lexicographically smallest, c_0 compared first.
    /// Throws InputError when p is not prime or f is outside [1, 6].
    static FqContext make(std::uint64_t p, int f = 1);

    /// F_{p^f} defined by an explicit monic modulus (low-to-high, length f + 1).
    /// Throws InputError when the modulus is not irreducible over F_p.
    static FqContext with_modulus(std::uint64_t p, std::vector<Elem> modulus);

    std::uint64_t p() const noexcept { return p_; }
    int f() const noexcept { return f_; }
    std::uint64_t q() const noexcept { return q_; }
    /// Empty for prime fields.
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// Throws InputError for a == 0.
    Elem inv(Elem a) const;
    /// The unique b with b^p = a, i.e. a^{q/p}.
    Elem pth_root(Elem a) const;
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_integer(std::int64_t c) const;

    std::string describe() const;

private:
    FqContext(std::uint64_t p, int f, std::vector<Elem> modulus);

    Elem mul_slow(Elem a, Elem b) const;
    Elem add_slow(Elem a, Elem b) const;

    std::uint64_t p_ = 2;
    int f_ = 1;
    std::uint64_t q_ = 2;
    std::vector<Elem> modulus_;
    // q*q tables for small extension fields.
    std::shared_ptr<const std::vector<std::uint32_t>> mul_table_;
    std::shared_ptr<const std::vector<std::uint32_t>> add_table_;
};

inline FqContext fq_make(std::uint64_t p, int f = 1) { return FqContext::make(p, f); }

/// Arithmetic on dense coefficient vectors over F_q (low-to-high, no trailing zeros;
/// the zero polynomial is empty). Building blocks for FqPoly and for tests.
namespace fqpoly {

using Poly = std::vector<Elem>;

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const FqContext& k, const Poly& a, const Poly& b);
Poly sub(const FqContext& k, const Poly& a, const Poly& b);
Poly mul(const FqContext& k, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
void divmod(const FqContext& k, const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
Poly rem(const FqContext& k, const Poly& a, const Poly& b);
Poly quo(const FqContext& k, const Poly& a, const Poly& b);
/// Monic gcd (empty when both inputs are zero).
Poly gcd(const FqContext& k, Poly a, Poly b);
Poly derivative(const FqContext& k, const Poly& a);
/// base^e mod m.
Poly powmod(const FqContext& k, Poly base, std::uint64_t e, const Poly& m);
bool is_one(const Poly& a);

}  // namespace fqpoly

/// A monic polynomial over F_q. Holds a pointer to its context, which must outlive it.
class FqPoly {
public:
    /// Coefficients low-to-high; the last one must be 1 and all must be < q.
    FqPoly(const FqContext& ctx, std::vector<Elem> coefficients);

    /// x^n + c_{n-1} x^{n-1} + ... + c_0 reduced from integer coefficients c_0..c_{n-1}.
    static FqPoly from_integers(const FqContext& ctx, std::span<const std::int64_t> lower_coefficients);

    const FqContext& context() const noexcept { return *ctx_; }
    const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    std::string to_string() const;

private:
    const FqContext* ctx_;
    std::vector<Elem> coeffs_;
};

/// gcd(g, g') = 1. A polynomial in x^p has g' = 0 and is not square-free.
bool is_squarefree(const FqPoly& g);

/// Factor degrees of a square-free g by distinct-degree factorization.
/// Throws InputError when g is not square-free.
Partition splitting_type(const FqPoly& g);

/// (degree, exponent) of every distinct irreducible factor of g.
SplittingSymbol full_splitting_symbol(const FqPoly& g);

/// Counts over all q^n monic polynomials of degree n.
struct SplitTally {
    int n = 0;
    std::uint64_t q = 0;
    std::map<SplittingSymbol, std::uint64_t> symbol_counts;
    /// Every mu |- n has an entry, zero counts included; descending order.
    std::map<Partition, std::uint64_t, std::greater<>> squarefree_counts;
    std::uint64_t squarefree_total = 0;
    std::uint64_t nonsquarefree_total = 0;

    std::uint64_t total() const { return squarefree_total + nonsquarefree_total; }
    std::uint64_t squarefree_count(const Partition& mu) const;
    /// Tallies must share (n, q). Merging is associative and commutative.
    void merge(const SplitTally& other);

    /// Rows "symbol,count,target,match": square-free types keyed by bracket
    /// notation with target N_mu(q), then repeated-factor symbols, then a
    /// "nonsquarefree" row with target q^{n-1}.
    std::string to_csv() const;
    std::string to_json() const;
    /// True when every square-free count equals N_mu(q) and the
    /// non-square-free count equals q^{n-1}.
    bool matches_formulas() const;
};

struct EnumerationOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

/// Classifies every monic degree-n polynomial over F_q.
/// Throws BudgetError when q^n exceeds the budget.
SplitTally exhaustive_tally(int n, const FqContext& ctx, const EnumerationOptions& options = {});

/// Number of monic irreducible polynomials of degree n over F_q, by enumeration.
std::uint64_t irreducible_count(int n, const FqContext& ctx, const EnumerationOptions& options = {});

/// Splitting type of every monic degree-n polynomial over F_q, in the
/// mixed-radix order c_0 + c_1 q + ... + c_{n-1} q^{n-1}. Entries index into
/// partitions_of(n); -1 marks a polynomial that is not square-free.
std::vector<std::int16_t> type_lookup_table(int n, const FqContext& ctx, const EnumerationOptions& options = {});

/// q^n, or throws BudgetError when it exceeds `budget`.
std::uint64_t checked_power(std::uint64_t q, int n, std::uint64_t budget);

}  // namespace splitmeasure
