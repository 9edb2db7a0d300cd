#include "splitmeasure/measures.hpp"

#include <array>

#include "json.hpp"

#include "splitmeasure/errors.hpp"
#include "splitmeasure/io.hpp"

namespace splitmeasure {

namespace {

RatPoly build_necklace(int m) {
    if (m == 0) return RatPoly::constant(1);
    std::vector<Rat> coeffs(static_cast<std::size_t>(m) + 1);
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        coeffs[static_cast<std::size_t>(m / d)] += moebius(static_cast<std::uint64_t>(d));
    }
    for (auto& c : coeffs) c /= m;
    return RatPoly(std::move(coeffs));
}

const std::array<RatPoly, kMaxNecklaceDegree + 1>& necklace_table() {
    static const auto table = [] {
        std::array<RatPoly, kMaxNecklaceDegree + 1> t;
        for (int m = 0; m <= kMaxNecklaceDegree; ++m) t[static_cast<std::size_t>(m)] = build_necklace(m);
        return t;
    }();
    return table;
}

void check_class_args(int n, const Rat& z, const Partition& mu) {
    if (n < 1) throw InputError("n must be positive");
    if (mu.n() != n) throw InputError("partition " + format_bracket(mu) + " is not a partition of " + std::to_string(n));
    if (z == 0) throw PoleError("pole at z=0");
    if (z == 1) throw PoleError("pole at z=1");
}

void check_prime(std::uint64_t p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

using ordered_json = nlohmann::ordered_json;

}  // namespace

const RatPoly& necklace_poly(int m) {
    if (m < 0 || m > kMaxNecklaceDegree)
        throw BudgetError("necklace_poly: degree must lie in [0, " + std::to_string(kMaxNecklaceDegree) + "]");
    return necklace_table()[static_cast<std::size_t>(m)];
}

RatPoly cycle_poly(const Partition& mu) {
    RatPoly acc = RatPoly::constant(1);
    for (auto [part, count] : mu.multiplicities())
        acc = acc * poly_binom(necklace_poly(part), static_cast<unsigned>(count));
    return acc;
}

Rat splitting_measure_class(int n, const Rat& z, const Partition& mu) {
    check_class_args(n, z, mu);
    if (n == 1) return 1;
    Rat numer = 1;
    for (auto [part, count] : mu.multiplicities()) {
        numer *= rat_binom(necklace_poly(part).eval(z), static_cast<unsigned>(count));
        if (numer == 0) return 0;
    }
    return numer / (pow_rat(z, static_cast<unsigned>(n - 1)) * (z - 1));
}

Rat splitting_measure_element(int n, const Rat& z, const Partition& mu) {
    return splitting_measure_class(n, z, mu) / Rat(class_size(mu));
}

Rat MeasureTable::total() const {
    Rat sum = 0;
    for (const auto& r : rows) sum += r.value;
    return sum;
}

const MeasureRow& MeasureTable::row(const Partition& mu) const {
    for (const auto& r : rows)
        if (r.type == mu) return r;
    throw InputError("no row for " + format_bracket(mu));
}

std::string MeasureTable::to_csv() const {
    std::vector<CsvRow> out{{"partition", "class_size", "value", "decimal"}};
    for (const auto& r : rows)
        out.push_back({format_bracket(r.type), r.class_size.get_str(), to_fraction_string(r.value),
                       to_decimal_string(r.value)});
    return write_csv(out);
}

std::string MeasureTable::to_json() const {
    ordered_json j;
    j["n"] = n;
    j["z"] = to_fraction_string(z);
    ordered_json body = ordered_json::object();
    for (const auto& r : rows) {
        body[format_bracket(r.type)] = {{"class_size", r.class_size.get_str()},
                                        {"value", to_fraction_string(r.value)},
                                        {"decimal", to_decimal_string(r.value)}};
    }
    j["rows"] = std::move(body);
    return j.dump(2) + "\n";
}

MeasureTable measure_table(int n, const Rat& z) {
    MeasureTable table;
    table.n = n;
    table.z = z;
    for (auto& mu : partitions_of(n)) {
        Rat value = splitting_measure_class(n, z, mu);
        BigInt size = class_size(mu);
        table.rows.push_back({std::move(mu), std::move(size), std::move(value)});
    }
    return table;
}

Rat chebotarev_measure(const Partition& mu) {
    return make_rat(class_size(mu), factorial(static_cast<unsigned>(mu.n())));
}

BigInt partitions_at_most(int k, int n) {
    if (k < 0 || n < 1) throw InputError("partitions_at_most: need k >= 0 and n >= 1");
    // Partitions of k into at most n parts = partitions of k into parts of size <= n.
    std::vector<BigInt> ways(static_cast<std::size_t>(k) + 1);
    ways[0] = 1;
    for (int part = 1; part <= std::min(n, k); ++part)
        for (int total = part; total <= k; ++total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(k)];
}

Rat bhargava_ramification(int n, std::uint64_t p) {
    if (n < 1) throw InputError("n must be positive");
    check_prime(p);
    const BigInt pp(std::to_string(p));
    BigInt numer = 0;
    BigInt denom = 0;
    for (int k = 0; k <= n - 1; ++k) {
        const BigInt term = partitions_at_most(k, n - k) * pow_int(pp, static_cast<unsigned>(n - 1 - k));
        denom += term;
        if (k >= 1) numer += term;
    }
    return make_rat(numer, denom);
}

std::vector<VanishingPair> vanishing_pairs(int n) {
    if (n < 2) throw InputError("vanishing_pairs needs n >= 2");
    std::vector<VanishingPair> out;
    const auto parts = partitions_of(n);
    for (std::uint64_t p = 2; p + 1 <= static_cast<std::uint64_t>(n); ++p) {
        if (!is_prime(p)) continue;
        for (const auto& mu : parts)
            if (splitting_measure_class(n, Rat(static_cast<unsigned long>(p)), mu) == 0) out.push_back({p, mu});
    }
    return out;
}

std::string ComparisonRow::to_csv() const {
    std::vector<CsvRow> out{{"kind", "partition", "polynomial_model", "polynomial_decimal", "field_model",
                             "field_decimal"}};
    out.push_back({"ramification", "", to_fraction_string(ramification_box), to_decimal_string(ramification_box),
                   to_fraction_string(ramification_bhargava), to_decimal_string(ramification_bhargava)});
    for (const auto& c : classes)
        out.push_back({"class", format_bracket(c.type), to_fraction_string(c.splitting),
                       to_decimal_string(c.splitting), to_fraction_string(c.chebotarev),
                       to_decimal_string(c.chebotarev)});
    return write_csv(out);
}

std::string ComparisonRow::to_json() const {
    ordered_json j;
    j["n"] = n;
    j["p"] = p;
    j["ramification"] = {{"polynomial_model", to_fraction_string(ramification_box)},
                         {"field_model", to_fraction_string(ramification_bhargava)}};
    ordered_json body = ordered_json::object();
    for (const auto& c : classes)
        body[format_bracket(c.type)] = {{"polynomial_model", to_fraction_string(c.splitting)},
                                        {"field_model", to_fraction_string(c.chebotarev)}};
    j["classes"] = std::move(body);
    return j.dump(2) + "\n";
}

ComparisonRow comparison_table(int n, std::uint64_t p) {
    check_prime(p);
    ComparisonRow row;
    row.n = n;
    row.p = p;
    row.ramification_box = make_rat(1, BigInt(std::to_string(p)));
    row.ramification_bhargava = bhargava_ramification(n, p);
    const Rat z(BigInt(std::to_string(p)));
    for (auto& mu : partitions_of(n)) {
        Rat split = splitting_measure_class(n, z, mu);
        Rat cheb = chebotarev_measure(mu);
        row.classes.push_back({std::move(mu), std::move(split), std::move(cheb)});
    }
    return row;
}

}  // namespace splitmeasure
