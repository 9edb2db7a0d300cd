#pragma once

// Integer partitions, conjugacy classes of S_n, and factorization splitting symbols.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitmeasure/exactmath.hpp"

namespace splitmeasure {

inline constexpr int kMaxPartitionN = 64;

/// A partition of n: parts in non-increasing order, all >= 1.
///
/// A partition names a conjugacy class of S_n (by cycle type) and, read as
/// factor degrees, a square-free splitting type of a degree-n polynomial.
class Partition {
public:
    Partition() = default;
    /// Accepts parts in any order; throws InputError on a part < 1 or an empty list.
    explicit Partition(std::vector<int> parts);

    /// Builds the partition with c_i parts equal to i.
    static Partition from_multiplicities(const std::map<int, int>& multiplicities);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Map part size i -> c_i, zero entries omitted.
    std::map<int, int> multiplicities() const;
    int multiplicity(int part) const;
    int distinct_parts() const;

    /// Element parity of the conjugacy class: n - (number of cycles) is even.
    bool is_even_permutation() const noexcept { return (n_ - length()) % 2 == 0; }

    /// "(2,1,1)"
    std::string to_parts_string() const;

    // Lexicographic on parts. partitions_of() lists in descending order.
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Every partition of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
/// Throws BudgetError unless 1 <= n <= 64.
std::vector<Partition> partitions_of(int n);

inline std::map<int, int> multiplicities(const Partition& mu) { return mu.multiplicities(); }

/// |C_mu| = n! / prod_i (i^{c_i} c_i!).
BigInt class_size(const Partition& mu);

/// ASCII bracket notation, ascending part sizes: (2,1,1) -> "<1^2,2>".
std::string format_bracket(const Partition& mu);

/// Parses "<1^2,2>", the Unicode form with U+27E8/U+27E9 brackets, or the flat
/// form "2+1+1". Throws ParseError (with byte position) on malformed input,
/// including a part size listed twice.
Partition parse_bracket(std::string_view text);

/// Splitting symbol of a factorization prod g_i^{e_i}: one (deg g_i, e_i) pair
/// per distinct irreducible factor, sorted by degree then exponent, both descending.
class SplittingSymbol {
public:
    using Pair = std::pair<int, int>;  // (degree, exponent)

    SplittingSymbol() = default;
    explicit SplittingSymbol(std::vector<Pair> pairs);

    /// The square-free symbol with one exponent-1 factor per part.
    static SplittingSymbol from_partition(const Partition& mu);

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    int n() const noexcept { return n_; }
    bool is_squarefree() const noexcept;
    /// Only valid when is_squarefree(); throws InputError otherwise.
    Partition to_partition() const;

    /// "(2,1)" for square-free symbols, exponents shown as "(1^2,1)".
    std::string to_string() const;

    friend auto operator<=>(const SplittingSymbol&, const SplittingSymbol&) = default;

private:
    std::vector<Pair> pairs_;
    int n_ = 0;
};

}  // namespace splitmeasure
