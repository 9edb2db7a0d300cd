#include "splitmeasure/exactmath.hpp"

#include <algorithm>
#include <cctype>

#include "splitmeasure/errors.hpp"

namespace splitmeasure {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", offset + j);
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text, 0));
    BigInt num = parse_integer(text.substr(0, slash), 0);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("sign not allowed in denominator", slash + 1);
    BigInt den = parse_integer(den_text, slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    return make_rat(num, den);
}

std::string to_fraction_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal_string(const Rat& x, int significant) {
    if (x == 0) return "0";
    const bool negative = x < 0;
    const Rat a = abs(x);

    // Find e with 10^e <= a < 10^(e+1).
    const BigInt num = a.get_num();
    const BigInt den = a.get_den();
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    auto ten_pow = [](long k) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return r;
    };
    auto ge_pow10 = [&](long k) {  // a >= 10^k
        return k >= 0 ? num >= den * ten_pow(k) : num * ten_pow(-k) >= den;
    };
    while (!ge_pow10(e)) --e;
    while (ge_pow10(e + 1)) ++e;

    // digits = round(a * 10^(significant - 1 - e))
    const long shift = significant - 1 - e;
    BigInt scaled_num = num, scaled_den = den;
    if (shift >= 0) scaled_num *= ten_pow(shift);
    else scaled_den *= ten_pow(-shift);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
    if (2 * r >= scaled_den) ++q;

    std::string digits = q.get_str();
    long point = static_cast<long>(digits.size()) - shift;  // digits before the decimal point
    std::string out;
    if (point <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
    } else if (point >= static_cast<long>(digits.size())) {
        out = digits + std::string(static_cast<std::size_t>(point) - digits.size(), '0');
    } else {
        out = digits.substr(0, point) + "." + digits.substr(point);
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt pow_int(const BigInt& base, unsigned exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rat pow_rat(const Rat& base, unsigned exponent) {
    return make_rat(pow_int(base.get_num(), exponent), pow_int(base.get_den(), exponent));
}

Rat rat_binom(const Rat& w, unsigned k) {
    Rat r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= w - i;
        if (r == 0) return r;
    }
    r /= Rat(factorial(k));
    return r;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven witness set for n < 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int moebius(std::uint64_t m) {
    if (m == 0) throw InputError("moebius(0) is undefined");
    int sign = 1;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

RatPoly::RatPoly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::x() { return RatPoly(std::vector<Rat>{0, 1}); }

Rat RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat RatPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string RatPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const Rat mag = abs(c);
        if (out.empty()) out = c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += to_fraction_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly poly_binom(const RatPoly& p, unsigned k) {
    RatPoly acc = RatPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) acc = acc * (p - RatPoly::constant(i));
    acc *= Rat(1, 1) / Rat(factorial(k));
    return acc;
}

}  // namespace splitmeasure
