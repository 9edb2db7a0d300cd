#include "splitmeasure/boxlab.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "json.hpp"

#include "splitmeasure/detail/parallel.hpp"
#include "splitmeasure/errors.hpp"
#include "splitmeasure/io.hpp"
#include "splitmeasure/measures.hpp"

namespace splitmeasure {

IntPoly IntPoly::from_int64(std::span<const std::int64_t> lower) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(lower.size());
    for (std::int64_t c : lower) coeffs.emplace_back(static_cast<long>(c));
    return IntPoly(std::move(coeffs));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 1;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::to_string() const {
    const int n = degree();
    std::string out = n == 0 ? "1" : (n == 1 ? "x" : "x^" + std::to_string(n));
    for (int i = n - 1; i >= 0; --i) {
        const BigInt& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        out += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i > 0) out += (mag != 1 ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return out;
}

namespace {

FqPoly reduce_mod(const FqContext& ctx, const IntPoly& f) {
    std::vector<Elem> coeffs;
    coeffs.reserve(f.coeffs.size() + 1);
    for (const auto& c : f.coeffs) coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), ctx.p()));
    coeffs.push_back(1);
    return FqPoly(ctx, std::move(coeffs));
}

std::optional<Partition> reduce_type_in(const FqContext& ctx, const IntPoly& f) {
    FqPoly g = reduce_mod(ctx, f);
    if (!is_squarefree(g)) return std::nullopt;
    return splitting_type(g);
}

}  // namespace

std::optional<Partition> reduce_type(const IntPoly& f, std::uint64_t p) {
    if (f.degree() < 1) throw InputError("reduce_type needs degree >= 1");
    return reduce_type_in(FqContext::make(p, 1), f);
}

BigInt integer_discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw InputError("integer_discriminant needs degree >= 1");
    if (n == 1) return 1;

    // Descending coefficient lists of f and f'.
    std::vector<BigInt> a(static_cast<std::size_t>(n) + 1), b(static_cast<std::size_t>(n));
    a[0] = 1;
    for (int i = 1; i <= n; ++i) a[static_cast<std::size_t>(i)] = f.coeffs[static_cast<std::size_t>(n - i)];
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * (n - i);

    const int size = 2 * n - 1;
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(size), std::vector<BigInt>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n - 1; ++r)
        for (int j = 0; j <= n; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a[static_cast<std::size_t>(j)];
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(n - 1 + r)][static_cast<std::size_t>(r + j)] = b[static_cast<std::size_t>(j)];

    // Bareiss fraction-free elimination.
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < size - 1; ++k) {
        auto K = static_cast<std::size_t>(k);
        if (m[K][K] == 0) {
            int swap = -1;
            for (int r = k + 1; r < size; ++r)
                if (m[static_cast<std::size_t>(r)][K] != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(m[K], m[static_cast<std::size_t>(swap)]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            auto I = static_cast<std::size_t>(i);
            for (int j = k + 1; j < size; ++j) {
                auto J = static_cast<std::size_t>(j);
                m[I][J] = (m[I][J] * m[K][K] - m[I][K] * m[K][J]) / prev;
            }
            m[I][K] = 0;
        }
        prev = m[K][K];
    }
    BigInt res = m.back().back() * sign;
    if ((n * (n - 1) / 2) % 2) res = -res;
    return res;
}

std::string to_string(SnVerdict v) {
    switch (v) {
        case SnVerdict::certified_sn: return "certified_sn";
        case SnVerdict::unknown: return "unknown";
        case SnVerdict::reducible: return "reducible";
    }
    return "unknown";
}

std::vector<std::uint64_t> default_probe_primes() {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p < 200; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

namespace {

constexpr std::uint64_t kRootSearchLimit = 1'000'000'000'000ULL;

// Subset sums of the parts strictly between 0 and n, as a bitmask over degrees.
std::vector<bool> proper_factor_degrees(const Partition& mu) {
    const int n = mu.n();
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[0] = true;
    for (int part : mu.parts())
        for (int s = n; s >= part; --s)
            if (reach[static_cast<std::size_t>(s - part)]) reach[static_cast<std::size_t>(s)] = true;
    reach[0] = false;
    reach[static_cast<std::size_t>(n)] = false;
    return reach;
}

// True when some element of the class has a power that is a single l-cycle,
// l prime, accepted by `want`.
template <class Pred>
bool yields_prime_cycle(const Partition& mu, Pred want) {
    for (auto [part, count] : mu.multiplicities()) {
        if (count != 1 || !is_prime(static_cast<std::uint64_t>(part)) || !want(part)) continue;
        bool coprime_rest = true;
        for (int other : mu.parts())
            if (other != part && other % part == 0) coprime_rest = false;
        if (coprime_rest) return true;
    }
    return false;
}

enum class RootSearch { found, none, incomplete };

RootSearch integer_root(const IntPoly& f) {
    const BigInt& c0 = f.coeffs[0];
    if (c0 == 0) return RootSearch::found;
    const BigInt mag = abs(c0);
    if (mag > BigInt(static_cast<unsigned long>(kRootSearchLimit))) return RootSearch::incomplete;
    const std::uint64_t m = mag.get_ui();
    auto is_root = [&](std::uint64_t d) {
        const BigInt x(static_cast<unsigned long>(d));
        return f.eval(x) == 0 || f.eval(-x) == 0;
    };
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        if (is_root(d) || is_root(m / d)) return RootSearch::found;
    }
    return RootSearch::none;
}

}  // namespace

namespace {

// Given a transitive group of degree n >= 3 containing the observed classes.
bool forces_sn(int n, const std::set<Partition>& seen) {
    const bool odd = std::any_of(seen.begin(), seen.end(), [](const Partition& mu) { return !mu.is_even_permutation(); });
    if (!odd) return false;
    bool primitive = is_prime(static_cast<std::uint64_t>(n));
    for (const auto& mu : seen) {
        if (mu.parts() == std::vector<int>{n - 1, 1}) primitive = true;
        if (yields_prime_cycle(mu, [n](int l) { return 2 * l > n; })) primitive = true;
    }
    if (!primitive) return false;
    return std::any_of(seen.begin(), seen.end(), [n](const Partition& mu) {
        return yields_prime_cycle(mu, [n](int l) { return l == 2 || l == 3 || l <= n - 3; });
    });
}

}  // namespace

SnVerdict sn_certify(const IntPoly& f, std::span<const std::uint64_t> probe_primes) {
    if (probe_primes.empty()) throw InputError("sn_certify needs at least one probe prime");
    const int n = f.degree();
    if (n < 1) throw InputError("sn_certify needs degree >= 1");
    if (n == 1) return SnVerdict::certified_sn;

    std::set<Partition> seen;
    std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);  // proper factor degrees still possible
    possible[0] = possible[static_cast<std::size_t>(n)] = false;
    auto none_possible = [&] { return std::none_of(possible.begin(), possible.end(), [](bool b) { return b; }); };
    for (std::uint64_t p : probe_primes) {
        auto type = reduce_type(f, p);
        if (!type) continue;
        const auto degrees = proper_factor_degrees(*type);
        for (int d = 1; d < n; ++d)
            if (!degrees[static_cast<std::size_t>(d)]) possible[static_cast<std::size_t>(d)] = false;
        if (!seen.insert(std::move(*type)).second) continue;
        if (none_possible() && (n == 2 || forces_sn(n, seen))) return SnVerdict::certified_sn;
    }

    bool transitive = none_possible();
    if (possible[1]) {
        const RootSearch roots = integer_root(f);
        if (roots == RootSearch::found) return SnVerdict::reducible;
        // Below degree 4 every proper factorization has a linear factor.
        if (roots == RootSearch::none && n <= 3) transitive = true;
    }
    if (!transitive) return SnVerdict::unknown;
    if (n == 2 || forces_sn(n, seen)) return SnVerdict::certified_sn;
    return SnVerdict::unknown;
}

BigInt DensityReport::M() const {
    BigInt m = 1;
    for (auto p : primes) m *= BigInt(static_cast<unsigned long>(p));
    return m;
}

Rat DensityReport::target_coprime() const {
    Rat t = 1;
    for (auto p : primes) t *= 1 - make_rat(1, BigInt(static_cast<unsigned long>(p)));
    return t;
}

Rat DensityReport::target_split() const {
    Rat t = 1;
    for (std::size_t i = 0; i < types.size(); ++i)
        t *= splitting_measure_class(n, Rat(static_cast<unsigned long>(primes[i])), types[i]);
    return t;
}

Rat DensityReport::roundoff_bound() const { return make_rat(2 * n * M(), B); }

Rat DensityReport::envelope_bound() const { return make_rat(4 * n * M(), B); }

namespace {

Rat ratio(std::uint64_t a, std::uint64_t b) {
    if (b == 0) return 0;
    return make_rat(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(b)));
}

}  // namespace

Rat DensityReport::coprime_ratio() const { return ratio(coprime_count, total); }
Rat DensityReport::split_ratio() const { return ratio(joint_count, coprime_count); }
Rat DensityReport::coprime_deviation() const { return abs(coprime_ratio() - target_coprime()); }
Rat DensityReport::split_deviation() const { return abs(split_ratio() - target_split()); }
Rat DensityReport::certified_coprime_ratio() const { return ratio(certified_coprime, certified); }
Rat DensityReport::certified_split_ratio() const { return ratio(certified_joint, certified_coprime); }

void DensityReport::merge(const DensityReport& other) {
    total += other.total;
    coprime_count += other.coprime_count;
    joint_count += other.joint_count;
    if (type_counts.size() < other.type_counts.size()) type_counts.resize(other.type_counts.size());
    for (std::size_t i = 0; i < other.type_counts.size(); ++i)
        for (const auto& [mu, count] : other.type_counts[i]) type_counts[i][mu] += count;
    certified += other.certified;
    unknown += other.unknown;
    reducible += other.reducible;
    certified_coprime += other.certified_coprime;
    certified_joint += other.certified_joint;
}

std::string DensityReport::to_csv() const {
    std::vector<CsvRow> rows{{"quantity", "exact", "decimal"}};
    auto add = [&](const std::string& name, const Rat& value) {
        rows.push_back({name, to_fraction_string(value), to_decimal_string(value)});
    };
    auto add_count = [&](const std::string& name, std::uint64_t value) {
        rows.push_back({name, std::to_string(value), std::to_string(value)});
    };
    add_count("total", total);
    add_count("coprime_count", coprime_count);
    add("coprime_ratio", coprime_ratio());
    add("target_coprime", target_coprime());
    add("coprime_deviation", coprime_deviation());
    add("bound_2nM_over_B", roundoff_bound());
    add("bound_4nM_over_B", envelope_bound());
    if (!types.empty()) {
        add_count("joint_count", joint_count);
        add("split_ratio", split_ratio());
        add("target_split", target_split());
        add("split_deviation", split_deviation());
    }
    for (std::size_t i = 0; i < type_counts.size(); ++i)
        for (const auto& [mu, count] : type_counts[i])
            add_count("type_count p=" + std::to_string(primes[i]) + " " + format_bracket(mu), count);
    if (certify) {
        add_count("certified_sn", certified);
        add_count("unknown", unknown);
        add_count("reducible", reducible);
        add_count("certified_coprime", certified_coprime);
        add("certified_coprime_ratio", certified_coprime_ratio());
        if (!types.empty()) {
            add_count("certified_joint", certified_joint);
            add("certified_split_ratio", certified_split_ratio());
        }
    }
    return write_csv(rows);
}

std::string DensityReport::to_json() const {
    using json = nlohmann::ordered_json;
    auto frac = [](const Rat& r) { return json{{"exact", to_fraction_string(r)}, {"decimal", to_decimal_string(r)}}; };
    json j;
    j["n"] = n;
    j["B"] = B;
    j["primes"] = primes;
    json types_json = json::array();
    for (const auto& mu : types) types_json.push_back(format_bracket(mu));
    j["types"] = std::move(types_json);
    j["mode"] = mode == BoxMode::exhaustive ? "exhaustive" : "sample";
    if (mode == BoxMode::sample) j["seed"] = seed;
    j["total"] = total;
    j["coprime_count"] = coprime_count;
    j["coprime_ratio"] = frac(coprime_ratio());
    j["target_coprime"] = frac(target_coprime());
    j["coprime_deviation"] = frac(coprime_deviation());
    j["bound_2nM_over_B"] = frac(roundoff_bound());
    j["bound_4nM_over_B"] = frac(envelope_bound());
    j["gallagher_term"] = "unquantified o(1) term";
    if (!types.empty()) {
        j["joint_count"] = joint_count;
        j["split_ratio"] = frac(split_ratio());
        j["target_split"] = frac(target_split());
        j["split_deviation"] = frac(split_deviation());
    }
    json per_prime = json::object();
    for (std::size_t i = 0; i < type_counts.size(); ++i) {
        json counts = json::object();
        for (const auto& [mu, count] : type_counts[i]) counts[format_bracket(mu)] = count;
        per_prime[std::to_string(primes[i])] = std::move(counts);
    }
    j["type_counts"] = std::move(per_prime);
    if (certify) {
        j["sn_filter"] = {{"certified_sn", certified},
                          {"unknown", unknown},
                          {"reducible", reducible},
                          {"certified_coprime", certified_coprime},
                          {"certified_coprime_ratio", frac(certified_coprime_ratio())},
                          {"certified_joint", certified_joint},
                          {"certified_split_ratio", frac(certified_split_ratio())}};
    }
    return j.dump(2) + "\n";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform integer in [0, range) by rejection, independent of the standard library's distributions.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (true) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % range;
    }
}

constexpr std::uint64_t kSampleBlock = 4096;
constexpr std::uint64_t kLookupLimit = 1u << 22;

struct PrimeClassifier {
    std::uint64_t p;
    FqContext ctx;
    std::vector<std::int16_t> table;  // empty: classify directly
    std::vector<std::int64_t> weights;
};

struct Accumulator {
    std::uint64_t total = 0, coprime = 0, joint = 0;
    std::vector<std::vector<std::uint64_t>> type_counts;
    std::uint64_t certified = 0, unknown = 0, reducible = 0, certified_coprime = 0, certified_joint = 0;
};

class BoxRunner {
public:
    explicit BoxRunner(const BoxSpec& spec) : spec_(spec), parts_(partitions_of(spec.n)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) part_index_.emplace(parts_[i], static_cast<int>(i));
        for (auto p : spec.primes) {
            PrimeClassifier c{p, FqContext::make(p, 1), {}, {}};
            std::uint64_t size = 1;
            bool small = true;
            for (int j = 0; j < spec.n; ++j) {
                c.weights.push_back(static_cast<std::int64_t>(size));
                if (size > kLookupLimit / p) small = false;
                size *= small ? p : 1;
            }
            if (small) c.table = type_lookup_table(spec.n, c.ctx, {kLookupLimit, spec.workers});
            classifiers_.push_back(std::move(c));
        }
        for (const auto& mu : spec.types) target_index_.push_back(part_index_.at(mu));
        probes_ = spec.probe_primes.empty() ? default_probe_primes() : spec.probe_primes;
    }

    Accumulator fresh() const {
        Accumulator a;
        a.type_counts.assign(classifiers_.size(), std::vector<std::uint64_t>(parts_.size(), 0));
        return a;
    }

    void visit(const std::vector<std::int64_t>& c, Accumulator& acc) const {
        ++acc.total;
        bool coprime = true;
        bool joint = !target_index_.empty();
        std::vector<int>& idx = scratch();
        idx.resize(classifiers_.size());
        for (std::size_t i = 0; i < classifiers_.size(); ++i) {
            idx[i] = classify(classifiers_[i], c);
            if (idx[i] < 0) {
                coprime = false;
                break;
            }
            if (joint && idx[i] != target_index_[i]) joint = false;
        }
        if (coprime) {
            ++acc.coprime;
            for (std::size_t i = 0; i < classifiers_.size(); ++i) ++acc.type_counts[i][static_cast<std::size_t>(idx[i])];
        } else {
            joint = false;
        }
        if (joint) ++acc.joint;
        if (spec_.certify) {
            switch (sn_certify(IntPoly::from_int64(c), probes_)) {
                case SnVerdict::certified_sn:
                    ++acc.certified;
                    if (coprime) ++acc.certified_coprime;
                    if (joint) ++acc.certified_joint;
                    break;
                case SnVerdict::unknown: ++acc.unknown; break;
                case SnVerdict::reducible: ++acc.reducible; break;
            }
        }
    }

    DensityReport finish(const std::vector<Accumulator>& parts) const {
        DensityReport r;
        r.n = spec_.n;
        r.B = spec_.B;
        r.primes = spec_.primes;
        r.types = spec_.types;
        r.mode = spec_.mode;
        r.seed = spec_.seed;
        r.certify = spec_.certify;
        r.type_counts.resize(classifiers_.size());
        for (std::size_t i = 0; i < classifiers_.size(); ++i)
            for (const auto& mu : parts_) r.type_counts[i][mu] = 0;
        for (const auto& a : parts) {
            r.total += a.total;
            r.coprime_count += a.coprime;
            r.joint_count += a.joint;
            r.certified += a.certified;
            r.unknown += a.unknown;
            r.reducible += a.reducible;
            r.certified_coprime += a.certified_coprime;
            r.certified_joint += a.certified_joint;
            for (std::size_t i = 0; i < classifiers_.size(); ++i)
                for (std::size_t k = 0; k < parts_.size(); ++k) r.type_counts[i][parts_[k]] += a.type_counts[i][k];
        }
        return r;
    }

private:
    static std::vector<int>& scratch() {
        thread_local std::vector<int> v;
        return v;
    }

    int classify(const PrimeClassifier& c, const std::vector<std::int64_t>& coeffs) const {
        const auto p = static_cast<std::int64_t>(c.p);
        if (!c.table.empty()) {
            std::int64_t index = 0;
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                std::int64_t r = coeffs[j] % p;
                if (r < 0) r += p;
                index += r * c.weights[j];
            }
            return c.table[static_cast<std::size_t>(index)];
        }
        FqPoly g = FqPoly::from_integers(c.ctx, coeffs);
        if (!is_squarefree(g)) return -1;
        return part_index_.at(splitting_type(g));
    }

    const BoxSpec& spec_;
    std::vector<Partition> parts_;
    std::map<Partition, int> part_index_;
    std::vector<PrimeClassifier> classifiers_;
    std::vector<int> target_index_;
    std::vector<std::uint64_t> probes_;
};

void validate(const BoxSpec& spec) {
    if (spec.n < 2) throw InputError("box experiments need n >= 2");
    if (spec.n > 16) throw InputError("box experiments support n <= 16");
    if (spec.B <= 0) throw InputError("B must be positive");
    if (spec.B > (std::int64_t{1} << 40)) throw InputError("B must be at most 2^40");
    std::set<std::uint64_t> distinct;
    for (auto p : spec.primes) {
        if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw InputError("box primes must be below 2^31");
        if (!distinct.insert(p).second) throw InputError("primes must be distinct");
    }
    if (!spec.types.empty() && spec.types.size() != spec.primes.size())
        throw InputError("give either no types or one type per prime");
    for (const auto& mu : spec.types)
        if (mu.n() != spec.n) throw InputError(format_bracket(mu) + " is not a partition of " + std::to_string(spec.n));
    for (auto p : spec.probe_primes)
        if (!is_prime(p)) throw InputError("probe " + std::to_string(p) + " is not prime");
}

}  // namespace

DensityReport run_density(const BoxSpec& spec) {
    validate(spec);
    const unsigned workers = std::max(1u, spec.workers);
    std::uint64_t total = 0;
    if (spec.mode == BoxMode::exhaustive) {
        total = checked_power(static_cast<std::uint64_t>(2 * spec.B), spec.n, spec.budget);
    } else {
        if (spec.samples == 0) throw InputError("sample mode needs a positive sample count");
        if (spec.samples > spec.budget)
            throw BudgetError("sample count " + std::to_string(spec.samples) + " exceeds the budget of " +
                              std::to_string(spec.budget));
        total = spec.samples;
    }

    const BoxRunner runner(spec);
    std::vector<Accumulator> partial(workers, runner.fresh());
    const std::uint64_t side = static_cast<std::uint64_t>(2 * spec.B);
    const auto n = static_cast<std::size_t>(spec.n);

    if (spec.mode == BoxMode::exhaustive) {
        detail::run_partitioned(total, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
            std::vector<std::int64_t> c(n);
            std::uint64_t rest = begin;
            for (std::size_t j = 0; j < n; ++j) {
                c[j] = static_cast<std::int64_t>(rest % side) - spec.B + 1;
                rest /= side;
            }
            for (std::uint64_t index = begin; index < end; ++index) {
                runner.visit(c, partial[w]);
                for (std::size_t j = 0; j < n; ++j) {
                    if (++c[j] <= spec.B) break;
                    c[j] = -spec.B + 1;
                }
            }
        });
    } else {
        const std::uint64_t blocks = (total + kSampleBlock - 1) / kSampleBlock;
        detail::run_partitioned(blocks, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
            std::vector<std::int64_t> c(n);
            for (std::uint64_t b = begin; b < end; ++b) {
                std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(b)));
                const std::uint64_t count = std::min(kSampleBlock, total - b * kSampleBlock);
                for (std::uint64_t s = 0; s < count; ++s) {
                    for (std::size_t j = 0; j < n; ++j)
                        c[j] = static_cast<std::int64_t>(bounded(rng, side)) - spec.B + 1;
                    runner.visit(c, partial[w]);
                }
            }
        });
    }
    return runner.finish(partial);
}

std::string CurveTable::to_csv() const {
    const bool certify = !rows.empty() && rows.front().certify;
    CsvRow header{"B", "total", "coprime_count", "coprime_ratio_exact_fraction", "target_fraction",
                  "deviation_decimal", "bound_4nM_over_B"};
    for (const auto& mu : types) {
        header.push_back("count_" + format_bracket(mu));
        header.push_back("frequency_" + format_bracket(mu));
    }
    if (certify)
        for (const char* h : {"certified", "certified_coprime_ratio", "certified_deviation_decimal", "unknown", "reducible"})
            header.push_back(h);
    std::vector<CsvRow> out{header};
    for (const auto& r : rows) {
        CsvRow row{std::to_string(r.B), std::to_string(r.total), std::to_string(r.coprime_count),
                   to_fraction_string(r.coprime_ratio()), to_fraction_string(r.target_coprime()),
                   to_decimal_string(r.coprime_deviation()), to_fraction_string(r.envelope_bound())};
        for (const auto& mu : types) {
            const std::uint64_t count = r.type_counts.at(0).at(mu);
            row.push_back(std::to_string(count));
            row.push_back(to_fraction_string(ratio(count, r.coprime_count)));
        }
        if (certify) {
            row.push_back(std::to_string(r.certified));
            row.push_back(to_fraction_string(r.certified_coprime_ratio()));
            row.push_back(to_decimal_string(abs(r.certified_coprime_ratio() - r.target_coprime())));
            row.push_back(std::to_string(r.unknown));
            row.push_back(std::to_string(r.reducible));
        }
        out.push_back(std::move(row));
    }
    return write_csv(out);
}

std::string CurveTable::to_json() const {
    using json = nlohmann::ordered_json;
    json j;
    j["n"] = n;
    j["p"] = p;
    j["gallagher_term"] = "unquantified o(1) term";
    json rows_json = json::array();
    for (const auto& r : rows) {
        json row;
        row["B"] = r.B;
        row["total"] = r.total;
        row["coprime_count"] = r.coprime_count;
        row["coprime_ratio_exact_fraction"] = to_fraction_string(r.coprime_ratio());
        row["target_fraction"] = to_fraction_string(r.target_coprime());
        row["deviation_decimal"] = to_decimal_string(r.coprime_deviation());
        row["bound_4nM_over_B"] = to_fraction_string(r.envelope_bound());
        for (const auto& mu : types) {
            const std::uint64_t count = r.type_counts.at(0).at(mu);
            row["count_" + format_bracket(mu)] = count;
            row["frequency_" + format_bracket(mu)] = to_fraction_string(ratio(count, r.coprime_count));
        }
        if (r.certify) {
            row["certified"] = r.certified;
            row["certified_coprime_ratio"] = to_fraction_string(r.certified_coprime_ratio());
            row["certified_deviation_decimal"] = to_decimal_string(abs(r.certified_coprime_ratio() - r.target_coprime()));
            row["unknown"] = r.unknown;
            row["reducible"] = r.reducible;
        }
        rows_json.push_back(std::move(row));
    }
    j["rows"] = std::move(rows_json);
    return j.dump(2) + "\n";
}

CurveTable convergence_curve(int n, std::uint64_t p, std::span<const std::int64_t> B_list, const CurveOptions& options) {
    CurveTable table;
    table.n = n;
    table.p = p;
    table.types = options.types.empty() ? partitions_of(n) : options.types;
    for (std::int64_t B : B_list) {
        BoxSpec spec;
        spec.n = n;
        spec.B = B;
        spec.primes = {p};
        spec.mode = options.mode;
        spec.samples = options.samples;
        spec.seed = options.seed;
        spec.certify = options.certify;
        spec.budget = options.budget;
        spec.workers = options.workers;
        table.rows.push_back(run_density(spec));
    }
    return table;
}

}  // namespace splitmeasure
