#include "splitmeasure/finitefield.hpp"

#include <algorithm>

#include "json.hpp"

#include "splitmeasure/detail/parallel.hpp"
#include "splitmeasure/errors.hpp"
#include "splitmeasure/io.hpp"
#include "splitmeasure/measures.hpp"

namespace splitmeasure {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTableLimit = 1024;

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw BudgetError("field size overflows 64 bits");
        r *= base;
    }
    return r;
}

bool irreducible_over_prime_field(std::uint64_t p, const fqpoly::Poly& g);

}  // namespace

FqContext::FqContext(std::uint64_t p, int f, std::vector<Elem> modulus)
    : p_(p), f_(f), q_(ipow(p, f)), modulus_(std::move(modulus)) {
    if (f_ >= 2 && q_ <= kTableLimit) {
        auto mul = std::make_shared<std::vector<std::uint32_t>>(q_ * q_);
        auto add = std::make_shared<std::vector<std::uint32_t>>(q_ * q_);
        for (Elem a = 0; a < q_; ++a) {
            for (Elem b = 0; b < q_; ++b) {
                (*mul)[a * q_ + b] = static_cast<std::uint32_t>(mul_slow(a, b));
                (*add)[a * q_ + b] = static_cast<std::uint32_t>(add_slow(a, b));
            }
        }
        mul_table_ = std::move(mul);
        add_table_ = std::move(add);
    }
}

FqContext FqContext::make(std::uint64_t p, int f) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (f < 1 || f > 6) throw InputError("extension degree must lie in [1, 6]");
    if (f == 1) return FqContext(p, 1, {});
    const std::uint64_t count = ipow(p, f);
    for (std::uint64_t k = 0; k < count; ++k) {
        // c_0 is the most significant digit of k.
        fqpoly::Poly g(static_cast<std::size_t>(f) + 1);
        std::uint64_t rest = k;
        for (int j = f - 1; j >= 0; --j) {
            g[static_cast<std::size_t>(j)] = rest % p;
            rest /= p;
        }
        g[static_cast<std::size_t>(f)] = 1;
        if (g[0] == 0) continue;
        if (irreducible_over_prime_field(p, g)) return FqContext(p, f, std::move(g));
    }
    throw Error("no irreducible modulus of degree " + std::to_string(f) + " found");
}

FqContext FqContext::with_modulus(std::uint64_t p, std::vector<Elem> modulus) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1) throw InputError("modulus must be monic of degree >= 1");
    for (Elem c : modulus)
        if (c >= p) throw InputError("modulus coefficient out of range");
    const int f = static_cast<int>(modulus.size()) - 1;
    if (f > 6) throw InputError("extension degree must lie in [1, 6]");
    if (f == 1) return FqContext(p, 1, {});
    if (!irreducible_over_prime_field(p, modulus)) throw InputError("modulus is reducible over F_p");
    return FqContext(p, f, std::move(modulus));
}

Elem FqContext::add_slow(Elem a, Elem b) const {
    Elem out = 0, scale = 1;
    for (int i = 0; i < f_; ++i) {
        const Elem da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        Elem s = da + db;
        if (s >= p_ || s < da) s -= p_;
        out += s * scale;
        scale *= p_;
    }
    return out;
}

Elem FqContext::mul_slow(Elem a, Elem b) const {
    std::vector<std::uint64_t> da(static_cast<std::size_t>(f_)), db(static_cast<std::size_t>(f_));
    for (int i = 0; i < f_; ++i) {
        da[static_cast<std::size_t>(i)] = a % p_;
        db[static_cast<std::size_t>(i)] = b % p_;
        a /= p_;
        b /= p_;
    }
    std::vector<std::uint64_t> prod(static_cast<std::size_t>(2 * f_ - 1), 0);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j) {
            auto& slot = prod[static_cast<std::size_t>(i + j)];
            slot = static_cast<std::uint64_t>(
                (static_cast<u128>(da[static_cast<std::size_t>(i)]) * db[static_cast<std::size_t>(j)] + slot) % p_);
        }
    // Reduce by the monic modulus from the top degree down.
    for (int d = 2 * f_ - 2; d >= f_; --d) {
        const std::uint64_t c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int j = 0; j < f_; ++j) {
            auto& slot = prod[static_cast<std::size_t>(d - f_ + j)];
            const std::uint64_t sub = static_cast<std::uint64_t>(static_cast<u128>(c) * modulus_[static_cast<std::size_t>(j)] % p_);
            slot = slot >= sub ? slot - sub : slot + (p_ - sub);
        }
    }
    Elem out = 0;
    for (int i = f_ - 1; i >= 0; --i) out = out * p_ + prod[static_cast<std::size_t>(i)];
    return out;
}

Elem FqContext::add(Elem a, Elem b) const {
    if (f_ == 1) {
        const Elem s = a + b;
        return (s >= p_ || s < a) ? s - p_ : s;
    }
    if (add_table_) return (*add_table_)[a * q_ + b];
    return add_slow(a, b);
}

Elem FqContext::neg(Elem a) const {
    if (f_ == 1) return a == 0 ? 0 : p_ - a;
    Elem out = 0, scale = 1;
    for (int i = 0; i < f_; ++i) {
        const Elem d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
    }
    return out;
}

Elem FqContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FqContext::mul(Elem a, Elem b) const {
    if (f_ == 1) return static_cast<Elem>(static_cast<u128>(a) * b % p_);
    if (mul_table_) return (*mul_table_)[a * q_ + b];
    return mul_slow(a, b);
}

Elem FqContext::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem FqContext::inv(Elem a) const {
    if (a == 0) throw InputError("inverse of zero");
    return pow(a, q_ - 2);
}

Elem FqContext::pth_root(Elem a) const { return f_ == 1 ? a : pow(a, q_ / p_); }

Elem FqContext::from_integer(std::int64_t c) const {
    if (c >= 0) return static_cast<std::uint64_t>(c) % p_;
    const std::uint64_t mag = static_cast<std::uint64_t>(-(c + 1)) + 1;
    const std::uint64_t r = mag % p_;
    return r == 0 ? 0 : p_ - r;
}

std::string FqContext::describe() const {
    std::string out = "F_" + std::to_string(q_);
    if (f_ >= 2) {
        out += " = F_" + std::to_string(p_) + "[t]/(";
        bool first = true;
        for (int i = f_; i >= 0; --i) {
            const Elem c = modulus_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) out += " + ";
            first = false;
            if (c != 1 || i == 0) out += std::to_string(c);
            if (i > 0) out += (c != 1 ? "*t" : "t") + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        out += ")";
    }
    return out;
}

namespace fqpoly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const FqContext& k, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
}

Poly sub(const FqContext& k, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
}

Poly mul(const FqContext& k, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

void divmod(const FqContext& k, const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
    if (b.empty()) throw InputError("polynomial division by zero");
    remainder = a;
    trim(remainder);
    const int db = degree(b);
    if (degree(remainder) < db) {
        quotient.clear();
        return;
    }
    quotient.assign(static_cast<std::size_t>(degree(remainder) - db + 1), 0);
    const Elem lead_inv = b.back() == 1 ? 1 : k.inv(b.back());
    for (int d = degree(remainder); d >= db; --d) {
        const Elem c = k.mul(remainder[static_cast<std::size_t>(d)], lead_inv);
        if (c == 0) continue;
        quotient[static_cast<std::size_t>(d - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& slot = remainder[static_cast<std::size_t>(d - db + j)];
            slot = k.sub(slot, k.mul(c, b[static_cast<std::size_t>(j)]));
        }
    }
    trim(remainder);
    trim(quotient);
}

Poly rem(const FqContext& k, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(k, a, b, q, r);
    return r;
}

Poly quo(const FqContext& k, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(k, a, b, q, r);
    return q;
}

Poly gcd(const FqContext& k, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const Elem inv = k.inv(a.back());
        for (auto& c : a) c = k.mul(c, inv);
    }
    return a;
}

Poly derivative(const FqContext& k, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = k.mul(a[i], k.from_integer(static_cast<std::int64_t>(i % k.p())));
    trim(out);
    return out;
}

Poly powmod(const FqContext& k, Poly base, std::uint64_t e, const Poly& m) {
    base = rem(k, base, m);
    Poly result = rem(k, Poly{1}, m);
    while (e) {
        if (e & 1) result = rem(k, mul(k, result, base), m);
        e >>= 1;
        if (e) base = rem(k, mul(k, base, base), m);
    }
    return result;
}

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

}  // namespace fqpoly

namespace {

using fqpoly::Poly;

bool irreducible_over_prime_field(std::uint64_t p, const Poly& g) {
    const FqContext fp = FqContext::make(p, 1);
    const int f = fqpoly::degree(g);
    const Poly x{0, 1};
    // Rabin-style: no factor of degree d <= f/2 divides g iff gcd(x^{p^d} - x, g) = 1.
    Poly h = fqpoly::rem(fp, x, g);
    for (int d = 1; 2 * d <= f; ++d) {
        h = fqpoly::powmod(fp, h, p, g);
        if (!fqpoly::is_one(fqpoly::gcd(fp, fqpoly::sub(fp, h, x), g))) return false;
    }
    return true;
}

// Degrees of the irreducible factors of a square-free monic polynomial.
std::vector<int> distinct_degree_parts(const FqContext& k, const Poly& g) {
    std::vector<int> parts;
    Poly remaining = g;
    const Poly x{0, 1};
    Poly h = fqpoly::rem(k, x, remaining);
    for (int d = 1; fqpoly::degree(remaining) >= 2 * d; ++d) {
        h = fqpoly::powmod(k, h, k.q(), remaining);
        Poly factor = fqpoly::gcd(k, fqpoly::sub(k, h, x), remaining);
        const int deg = fqpoly::degree(factor);
        if (deg > 0) {
            parts.insert(parts.end(), static_cast<std::size_t>(deg / d), d);
            remaining = fqpoly::quo(k, remaining, factor);
            h = fqpoly::rem(k, h, remaining);
        }
    }
    if (fqpoly::degree(remaining) > 0) parts.push_back(fqpoly::degree(remaining));
    return parts;
}

Poly pth_root_poly(const FqContext& k, const Poly& c) {
    Poly out;
    for (std::size_t i = 0; i < c.size(); i += k.p()) out.push_back(k.pth_root(c[i]));
    fqpoly::trim(out);
    return out;
}

// Square-free decomposition in characteristic p: (layer, multiplicity) with
// pairwise coprime square-free layers whose product with multiplicities is f.
void squarefree_layers(const FqContext& k, const Poly& f, int scale, std::vector<std::pair<Poly, int>>& out) {
    Poly c = fqpoly::gcd(k, f, fqpoly::derivative(k, f));
    Poly w = fqpoly::quo(k, f, c);
    int i = 1;
    while (fqpoly::degree(w) > 0) {
        Poly y = fqpoly::gcd(k, w, c);
        Poly factor = fqpoly::quo(k, w, y);
        if (fqpoly::degree(factor) > 0) out.emplace_back(std::move(factor), i * scale);
        w = std::move(y);
        c = fqpoly::quo(k, c, w);
        ++i;
    }
    if (fqpoly::degree(c) > 0)
        squarefree_layers(k, pth_root_poly(k, c), scale * static_cast<int>(k.p()), out);
}

SplittingSymbol classify(const FqContext& k, const Poly& g, bool& squarefree) {
    const Poly common = fqpoly::gcd(k, g, fqpoly::derivative(k, g));
    squarefree = fqpoly::degree(common) == 0;
    std::vector<SplittingSymbol::Pair> pairs;
    if (squarefree) {
        for (int d : distinct_degree_parts(k, g)) pairs.emplace_back(d, 1);
        return SplittingSymbol(std::move(pairs));
    }
    std::vector<std::pair<Poly, int>> layers;
    squarefree_layers(k, g, 1, layers);
    for (const auto& [layer, mult] : layers)
        for (int d : distinct_degree_parts(k, layer)) pairs.emplace_back(d, mult);
    return SplittingSymbol(std::move(pairs));
}

}  // namespace

FqPoly::FqPoly(const FqContext& ctx, std::vector<Elem> coefficients) : ctx_(&ctx), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty() || coeffs_.back() != 1) throw InputError("FqPoly must be monic");
    for (Elem c : coeffs_)
        if (c >= ctx.q()) throw InputError("coefficient outside F_" + std::to_string(ctx.q()));
}

FqPoly FqPoly::from_integers(const FqContext& ctx, std::span<const std::int64_t> lower_coefficients) {
    std::vector<Elem> coeffs;
    coeffs.reserve(lower_coefficients.size() + 1);
    for (std::int64_t c : lower_coefficients) coeffs.push_back(ctx.from_integer(c));
    coeffs.push_back(1);
    return FqPoly(ctx, std::move(coeffs));
}

std::string FqPoly::to_string() const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Elem c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i > 0) out += (c != 1 ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return out;
}

bool is_squarefree(const FqPoly& g) {
    if (g.degree() < 1) throw InputError("is_squarefree needs degree >= 1");
    const auto& k = g.context();
    const Poly dg = fqpoly::derivative(k, g.coefficients());
    if (dg.empty()) return false;
    return fqpoly::degree(fqpoly::gcd(k, g.coefficients(), dg)) == 0;
}

Partition splitting_type(const FqPoly& g) {
    if (!is_squarefree(g)) throw InputError("splitting_type: " + g.to_string() + " is not square-free");
    return Partition(distinct_degree_parts(g.context(), g.coefficients()));
}

SplittingSymbol full_splitting_symbol(const FqPoly& g) {
    if (g.degree() < 1) throw InputError("full_splitting_symbol needs degree >= 1");
    bool squarefree = false;
    return classify(g.context(), g.coefficients(), squarefree);
}

std::uint64_t SplitTally::squarefree_count(const Partition& mu) const {
    auto it = squarefree_counts.find(mu);
    return it == squarefree_counts.end() ? 0 : it->second;
}

void SplitTally::merge(const SplitTally& other) {
    if (other.n != n || other.q != q) throw InputError("cannot merge tallies of different (n, q)");
    for (const auto& [symbol, count] : other.symbol_counts) symbol_counts[symbol] += count;
    for (const auto& [mu, count] : other.squarefree_counts) squarefree_counts[mu] += count;
    squarefree_total += other.squarefree_total;
    nonsquarefree_total += other.nonsquarefree_total;
}

namespace {

BigInt target_count(const Partition& mu, std::uint64_t q) {
    const Rat value = cycle_poly(mu).eval(Rat(static_cast<unsigned long>(q)));
    return value.get_num();  // integer-valued at integers
}

BigInt nonsquarefree_target(std::uint64_t q, int n) {
    return pow_int(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned>(n - 1));
}

}  // namespace

bool SplitTally::matches_formulas() const {
    if (n >= 2 && BigInt(static_cast<unsigned long>(nonsquarefree_total)) != nonsquarefree_target(q, n)) return false;
    for (const auto& [mu, count] : squarefree_counts)
        if (BigInt(static_cast<unsigned long>(count)) != target_count(mu, q)) return false;
    return true;
}

std::string SplitTally::to_csv() const {
    std::vector<CsvRow> rows{{"symbol", "count", "target", "match"}};
    for (const auto& [mu, count] : squarefree_counts) {
        const BigInt target = target_count(mu, q);
        rows.push_back({format_bracket(mu), std::to_string(count), target.get_str(),
                        BigInt(static_cast<unsigned long>(count)) == target ? "MATCH" : "MISMATCH"});
    }
    for (const auto& [symbol, count] : symbol_counts) {
        if (symbol.is_squarefree()) continue;
        rows.push_back({symbol.to_string(), std::to_string(count), "", ""});
    }
    const BigInt target = nonsquarefree_target(q, n);
    rows.push_back({"nonsquarefree", std::to_string(nonsquarefree_total), target.get_str(),
                    BigInt(static_cast<unsigned long>(nonsquarefree_total)) == target ? "MATCH" : "MISMATCH"});
    return write_csv(rows);
}

std::string SplitTally::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["q"] = q;
    nlohmann::ordered_json sf = nlohmann::ordered_json::object();
    for (const auto& [mu, count] : squarefree_counts) {
        const BigInt target = target_count(mu, q);
        sf[format_bracket(mu)] = {{"count", count},
                                  {"target", target.get_str()},
                                  {"match", BigInt(static_cast<unsigned long>(count)) == target}};
    }
    j["squarefree"] = std::move(sf);
    nlohmann::ordered_json rep = nlohmann::ordered_json::object();
    for (const auto& [symbol, count] : symbol_counts)
        if (!symbol.is_squarefree()) rep[symbol.to_string()] = count;
    j["repeated"] = std::move(rep);
    j["squarefree_total"] = squarefree_total;
    j["nonsquarefree_total"] = nonsquarefree_total;
    j["nonsquarefree_target"] = nonsquarefree_target(q, n).get_str();
    j["all_match"] = matches_formulas();
    return j.dump(2) + "\n";
}

std::uint64_t checked_power(std::uint64_t q, int n, std::uint64_t budget) {
    u128 total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > budget)
            throw BudgetError("enumeration needs " + std::to_string(q) + "^" + std::to_string(n) +
                              " polynomials, over the budget of " + std::to_string(budget));
    }
    return static_cast<std::uint64_t>(total);
}

namespace {

using detail::run_partitioned;

// Visits monic degree-n polynomials with mixed-radix index in [begin, end),
// coefficient c_0 varying fastest.
template <class Visit>
void for_each_monic(const FqContext& k, int n, std::uint64_t begin, std::uint64_t end, Visit visit) {
    Poly g(static_cast<std::size_t>(n) + 1, 0);
    g[static_cast<std::size_t>(n)] = 1;
    std::uint64_t rest = begin;
    for (int j = 0; j < n; ++j) {
        g[static_cast<std::size_t>(j)] = rest % k.q();
        rest /= k.q();
    }
    for (std::uint64_t index = begin; index < end; ++index) {
        visit(g);
        for (int j = 0; j < n; ++j) {
            auto& c = g[static_cast<std::size_t>(j)];
            if (++c < k.q()) break;
            c = 0;
        }
    }
}

}  // namespace

SplitTally exhaustive_tally(int n, const FqContext& ctx, const EnumerationOptions& options) {
    if (n < 1) throw InputError("degree must be positive");
    const std::uint64_t total = checked_power(ctx.q(), n, options.budget);
    const unsigned workers = std::max(1u, options.workers);

    SplitTally base;
    base.n = n;
    base.q = ctx.q();
    if (n <= kMaxPartitionN)
        for (auto& mu : partitions_of(n)) base.squarefree_counts.emplace(std::move(mu), 0);

    std::vector<SplitTally> partial(workers, base);
    run_partitioned(total, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        SplitTally& t = partial[w];
        for_each_monic(ctx, n, begin, end, [&](const Poly& g) {
            bool squarefree = false;
            SplittingSymbol symbol = classify(ctx, g, squarefree);
            if (squarefree) {
                ++t.squarefree_total;
                ++t.squarefree_counts[symbol.to_partition()];
            } else {
                ++t.nonsquarefree_total;
            }
            ++t.symbol_counts[std::move(symbol)];
        });
    });
    SplitTally out = base;
    for (const auto& t : partial) out.merge(t);
    return out;
}

std::uint64_t irreducible_count(int n, const FqContext& ctx, const EnumerationOptions& options) {
    if (n < 1) throw InputError("degree must be positive");
    const std::uint64_t total = checked_power(ctx.q(), n, options.budget);
    const unsigned workers = std::max(1u, options.workers);
    std::vector<std::uint64_t> counts(workers, 0);
    run_partitioned(total, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        for_each_monic(ctx, n, begin, end, [&](const Poly& g) {
            const Poly dg = fqpoly::derivative(ctx, g);
            if (dg.empty() || fqpoly::degree(fqpoly::gcd(ctx, g, dg)) != 0) return;
            const auto parts = distinct_degree_parts(ctx, g);
            if (parts.size() == 1) ++counts[w];
        });
    });
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

std::vector<std::int16_t> type_lookup_table(int n, const FqContext& ctx, const EnumerationOptions& options) {
    if (n < 1) throw InputError("degree must be positive");
    const std::uint64_t total = checked_power(ctx.q(), n, options.budget);
    const auto parts = partitions_of(n);
    if (parts.size() > 32767) throw BudgetError("too many partitions for a lookup table");
    std::map<Partition, std::int16_t> index;
    for (std::size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i], static_cast<std::int16_t>(i));

    std::vector<std::int16_t> table(total, -1);
    run_partitioned(total, options.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t slot = begin;
        for_each_monic(ctx, n, begin, end, [&](const Poly& g) {
            const Poly dg = fqpoly::derivative(ctx, g);
            if (!dg.empty() && fqpoly::degree(fqpoly::gcd(ctx, g, dg)) == 0)
                table[slot] = index.at(Partition(distinct_degree_parts(ctx, g)));
            ++slot;
        });
    });
    return table;
}

}  // namespace splitmeasure
