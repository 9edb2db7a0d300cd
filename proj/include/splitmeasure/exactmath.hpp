#pragma once

// Exact integer, rational and rational-polynomial arithmetic.
//
// Integers and rationals are GMP values (mpz_class / mpq_class). Every Rat
// produced by this library is canonical: lowest terms, positive denominator.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace splitmeasure {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws InputError when den == 0.
Rat make_rat(const BigInt& num, const BigInt& den = 1);

/// Parses "a/b", "-a/b" or an integer literal into a canonical Rat.
Rat parse_rat(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const Rat& x);

/// Decimal rendering rounded (half away from zero) to `significant` digits.
/// Plain positional notation, e.g. 1/720 -> "0.0013888888888888888889".
std::string to_decimal_string(const Rat& x, int significant = 20);

BigInt factorial(unsigned n);
BigInt pow_int(const BigInt& base, unsigned exponent);
Rat pow_rat(const Rat& base, unsigned exponent);

/// Generalized binomial w(w-1)...(w-k+1)/k!; equals 1 for k == 0.
Rat rat_binom(const Rat& w, unsigned k);

/// Deterministic primality for all 64-bit inputs (Miller-Rabin, fixed bases).
bool is_prime(std::uint64_t n);

/// Moebius function of m >= 1.
int moebius(std::uint64_t m);

/// Dense univariate polynomial over Q, coefficient i multiplies X^i.
/// The coefficient vector never has trailing zeros; the zero polynomial is empty.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coefficients);

    static RatPoly constant(const Rat& c);
    static RatPoly x();

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Rat> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of X^i (zero beyond the degree).
    Rat coeff(std::size_t i) const;
    Rat leading() const;

    /// Horner evaluation.
    Rat eval(const Rat& x) const;

    RatPoly& operator+=(const RatPoly& other);
    RatPoly& operator-=(const RatPoly& other);
    RatPoly& operator*=(const Rat& scalar);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form with descending powers, e.g. "1/2*X^2 - 1/2*X".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rat> coeffs_;
};

inline Rat poly_eval(const RatPoly& p, const Rat& x) { return p.eval(x); }
inline RatPoly poly_add(const RatPoly& a, const RatPoly& b) { return a + b; }
inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) { return a * b; }

/// p(p-1)...(p-k+1)/k! as a polynomial; the constant 1 when k == 0.
RatPoly poly_binom(const RatPoly& p, unsigned k);

}  // namespace splitmeasure
