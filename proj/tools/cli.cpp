#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "splitmeasure/boxlab.hpp"
#include "splitmeasure/errors.hpp"
#include "splitmeasure/finitefield.hpp"
#include "splitmeasure/io.hpp"
#include "splitmeasure/measures.hpp"

namespace splitmeasure::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
    std::string format = "csv";
    std::string output;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    CLI::Option* seed_opt = nullptr;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t budget_from_env() {
    const char* raw = std::getenv(kBudgetEnv);
    if (!raw || !*raw) return kDefaultBudget;
    std::string_view text(raw);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
        throw UsageError(std::string(kBudgetEnv) + " must be a positive integer, got '" + raw + "'");
    return value;
}

void add_common(CLI::App* sub, Common& c, bool seeded) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    sub->add_option("-o,--output", c.output, "Write the result to this file instead of stdout");
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    sub->add_option("--budget", c.budget, "Maximum number of polynomials to enumerate or sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    if (seeded) c.seed_opt = sub->add_option("--seed", c.seed, "Seed for sample mode");
}

std::string pretty(const std::string& csv) {
    const auto rows = parse_csv(csv);
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i) line += "  ";
            line += rows[r][i];
            if (i + 1 < rows[r].size()) line.append(width[i] - rows[r][i].size(), ' ');
        }
        out += line + "\n";
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
            out += std::string(total, '-') + "\n";
        }
    }
    return out;
}

void emit(const Common& c, const std::string& csv, const std::string& json_text, std::ostream& out) {
    std::string text = c.format == "json" ? json_text : c.format == "pretty" ? pretty(csv) : csv;
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw UsageError("cannot open " + c.output + " for writing");
    file << text;
    if (!file) throw UsageError("failed writing " + c.output);
}

std::vector<Partition> parse_types(const std::vector<std::string>& texts) {
    std::vector<Partition> out;
    for (const auto& t : texts) out.push_back(parse_bracket(t));
    return out;
}

void require_partitions_of(const std::vector<Partition>& types, int n) {
    for (const auto& mu : types)
        if (mu.n() != n) throw InputError(format_bracket(mu) + " is not a partition of " + std::to_string(n));
}

// q = p^f, or an InputError.
std::pair<std::uint64_t, int> split_prime_power(std::uint64_t q) {
    if (q < 2) throw InputError(std::to_string(q) + " is not a prime power");
    std::uint64_t p = 2;
    while (q % p) ++p;
    int f = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++f;
    }
    if (rest != 1) throw InputError(std::to_string(q) + " is not a prime power");
    return {p, f};
}

// measure ------------------------------------------------------------------

struct MeasureArgs {
    int n = 0;
    std::string z;
    std::vector<std::string> types;
};

void cmd_measure(const MeasureArgs& a, const Common& c, std::ostream& out) {
    const Rat z = parse_rat(a.z);
    const auto filter = parse_types(a.types);
    require_partitions_of(filter, a.n);
    MeasureTable table = measure_table(a.n, z);
    if (!filter.empty())
        std::erase_if(table.rows, [&](const MeasureRow& r) {
            return std::find(filter.begin(), filter.end(), r.type) == filter.end();
        });
    emit(c, table.to_csv(), table.to_json(), out);
}

// necklace -----------------------------------------------------------------

struct NecklaceArgs {
    int m = 0;
    bool upto = false;
    std::string z;
};

void cmd_necklace(const NecklaceArgs& a, const Common& c, std::ostream& out) {
    const bool with_value = !a.z.empty();
    const Rat z = with_value ? parse_rat(a.z) : Rat(0);
    CsvRow header{"m", "polynomial"};
    if (with_value) header.insert(header.end(), {"value", "decimal"});
    std::vector<CsvRow> rows{header};
    json j;
    if (with_value) j["z"] = to_fraction_string(z);
    json list = json::array();
    for (int m = a.upto ? 1 : a.m; m <= a.m; ++m) {
        const RatPoly& poly = necklace_poly(m);
        CsvRow row{std::to_string(m), poly.to_string()};
        json entry{{"m", m}, {"polynomial", poly.to_string()}};
        if (with_value) {
            const Rat v = poly.eval(z);
            row.insert(row.end(), {to_fraction_string(v), to_decimal_string(v)});
            entry["value"] = to_fraction_string(v);
        }
        rows.push_back(std::move(row));
        list.push_back(std::move(entry));
    }
    j["rows"] = std::move(list);
    emit(c, write_csv(rows), j.dump(2) + "\n", out);
}

// cyclepoly ----------------------------------------------------------------

struct CyclepolyArgs {
    int n = 0;
    std::vector<std::string> types;
    std::string z;
};

void cmd_cyclepoly(const CyclepolyArgs& a, const Common& c, std::ostream& out) {
    const bool with_value = !a.z.empty();
    const Rat z = with_value ? parse_rat(a.z) : Rat(0);
    const auto types = a.types.empty() ? partitions_of(a.n) : parse_types(a.types);
    CsvRow header{"partition", "polynomial"};
    if (with_value) header.insert(header.end(), {"value", "decimal"});
    std::vector<CsvRow> rows{header};
    json j;
    if (with_value) j["z"] = to_fraction_string(z);
    json body = json::object();
    for (const auto& mu : types) {
        const RatPoly poly = cycle_poly(mu);
        CsvRow row{format_bracket(mu), poly.to_string()};
        json entry{{"polynomial", poly.to_string()}};
        if (with_value) {
            const Rat v = poly.eval(z);
            row.insert(row.end(), {to_fraction_string(v), to_decimal_string(v)});
            entry["value"] = to_fraction_string(v);
        }
        rows.push_back(std::move(row));
        body[format_bracket(mu)] = std::move(entry);
    }
    j["rows"] = std::move(body);
    emit(c, write_csv(rows), j.dump(2) + "\n", out);
}

// oracle -------------------------------------------------------------------

struct OracleArgs {
    int n = 0;
    std::uint64_t p = 0;
    int f = 1;
    std::uint64_t q = 0;
};

int cmd_oracle(const OracleArgs& a, const Common& c, std::ostream& out) {
    std::uint64_t p = a.p;
    int f = a.f;
    if (a.q) std::tie(p, f) = split_prime_power(a.q);
    const FqContext ctx = FqContext::make(p, f);
    const SplitTally tally = exhaustive_tally(a.n, ctx, {c.budget, c.workers});
    emit(c, tally.to_csv(), tally.to_json(), out);
    return tally.matches_formulas() ? ok : domain;
}

// box / curve --------------------------------------------------------------

struct BoxArgs {
    int n = 0;
    std::int64_t B = 0;
    std::vector<std::uint64_t> primes;
    std::vector<std::string> types;
    std::uint64_t samples = 0;
    bool certify = false;
    std::vector<std::uint64_t> probes;
};

void cmd_box(const BoxArgs& a, const Common& c, std::ostream& out) {
    BoxSpec spec;
    spec.n = a.n;
    spec.B = a.B;
    spec.primes = a.primes;
    spec.types = parse_types(a.types);
    spec.mode = a.samples ? BoxMode::sample : BoxMode::exhaustive;
    spec.samples = a.samples;
    spec.seed = c.seed;
    spec.certify = a.certify;
    spec.probe_primes = a.probes;
    spec.budget = c.budget;
    spec.workers = c.workers;
    const DensityReport report = run_density(spec);
    emit(c, report.to_csv(), report.to_json(), out);
}

struct CurveArgs {
    int n = 0;
    std::uint64_t p = 0;
    std::vector<std::int64_t> B;
    std::vector<std::string> types;
    std::uint64_t samples = 0;
    bool certify = false;
};

void cmd_curve(const CurveArgs& a, const Common& c, std::ostream& out) {
    CurveOptions options;
    options.types = parse_types(a.types);
    require_partitions_of(options.types, a.n);
    options.mode = a.samples ? BoxMode::sample : BoxMode::exhaustive;
    options.samples = a.samples;
    options.seed = c.seed;
    options.certify = a.certify;
    options.budget = c.budget;
    options.workers = c.workers;
    // Fail fast on the largest box before running the smaller ones.
    if (options.mode == BoxMode::exhaustive)
        for (auto B : a.B)
            if (B > 0) checked_power(static_cast<std::uint64_t>(2 * B), a.n, options.budget);
    const CurveTable table = convergence_curve(a.n, a.p, a.B, options);
    emit(c, table.to_csv(), table.to_json(), out);
}

// vanishing / compare ------------------------------------------------------

struct VanishingArgs {
    int n = 0;
    bool no_oracle = false;
};

void cmd_vanishing(const VanishingArgs& a, const Common& c, std::ostream& out) {
    const auto pairs = vanishing_pairs(a.n);
    std::map<std::uint64_t, SplitTally> tallies;
    if (!a.no_oracle)
        for (const auto& v : pairs)
            if (!tallies.contains(v.p))
                tallies.emplace(v.p, exhaustive_tally(a.n, FqContext::make(v.p, 1), {c.budget, c.workers}));

    CsvRow header{"p", "partition", "value"};
    if (!a.no_oracle) header.insert(header.end(), {"oracle_count", "confirmed"});
    std::vector<CsvRow> rows{header};
    json list = json::array();
    for (const auto& v : pairs) {
        CsvRow row{std::to_string(v.p), format_bracket(v.type), "0"};
        json entry{{"p", v.p}, {"partition", format_bracket(v.type)}, {"value", "0"}};
        if (!a.no_oracle) {
            const std::uint64_t count = tallies.at(v.p).squarefree_count(v.type);
            row.insert(row.end(), {std::to_string(count), count == 0 ? "yes" : "no"});
            entry["oracle_count"] = count;
            entry["confirmed"] = count == 0;
        }
        rows.push_back(std::move(row));
        list.push_back(std::move(entry));
    }
    json j{{"n", a.n}, {"pairs", std::move(list)}};
    emit(c, write_csv(rows), j.dump(2) + "\n", out);
}

struct CompareArgs {
    int n = 0;
    std::uint64_t p = 0;
};

void cmd_compare(const CompareArgs& a, const Common& c, std::ostream& out) {
    const ComparisonRow row = comparison_table(a.n, a.p);
    emit(c, row.to_csv(), row.to_json(), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Splitting measures on S_n: exact tables, finite-field oracles and box experiments", "splitmeasure"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Common common;
    try {
        common.budget = budget_from_env();
        common.workers = std::max(1u, std::thread::hardware_concurrency());
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    MeasureArgs measure;
    auto* s_measure = app.add_subcommand("measure", "Class masses of the z-splitting measure on S_n");
    s_measure->add_option("-n", measure.n, "Degree")->required()->check(CLI::Range(1, kMaxPartitionN));
    s_measure->add_option("-z", measure.z, "Parameter, an integer or a/b")->required();
    s_measure->add_option("--type", measure.types, "Only these classes, e.g. \"<1^2,2>\"");
    add_common(s_measure, common, false);

    NecklaceArgs necklace;
    auto* s_necklace = app.add_subcommand("necklace", "Necklace polynomial M_m(X)");
    s_necklace->add_option("-m", necklace.m, "Degree")->required()->check(CLI::Range(0, kMaxNecklaceDegree));
    s_necklace->add_flag("--upto", necklace.upto, "List every degree 1..m");
    s_necklace->add_option("-z", necklace.z, "Also evaluate at this rational");
    add_common(s_necklace, common, false);

    CyclepolyArgs cyclepoly;
    auto* s_cycle = app.add_subcommand("cyclepoly", "Cycle polynomial N_mu(X)");
    auto* cycle_n = s_cycle->add_option("-n", cyclepoly.n, "Every partition of n")->check(CLI::Range(1, kMaxPartitionN));
    auto* cycle_t = s_cycle->add_option("--type", cyclepoly.types, "A single partition, e.g. \"<1,2>\"");
    cycle_n->excludes(cycle_t);
    s_cycle->add_option("-z", cyclepoly.z, "Also evaluate at this rational");
    add_common(s_cycle, common, false);

    OracleArgs oracle;
    auto* s_oracle = app.add_subcommand("oracle", "Tally every monic degree-n polynomial over F_q");
    s_oracle->add_option("-n", oracle.n, "Degree")->required()->check(CLI::Range(1, 32));
    auto* o_p = s_oracle->add_option("-p", oracle.p, "Characteristic");
    auto* o_f = s_oracle->add_option("-f", oracle.f, "Extension degree")->check(CLI::Range(1, 6))->capture_default_str();
    auto* o_q = s_oracle->add_option("-q", oracle.q, "Field size (a prime power)");
    o_q->excludes(o_p)->excludes(o_f);
    add_common(s_oracle, common, false);

    BoxArgs box;
    auto* s_box = app.add_subcommand("box", "Density experiment over the box of monic integer polynomials");
    s_box->add_option("-n", box.n, "Degree")->required();
    s_box->add_option("-B", box.B, "Coefficients lie in (-B, B]")->required();
    s_box->add_option("--primes", box.primes, "Prime set S")->required()->delimiter(',');
    s_box->add_option("--type", box.types, "Target type per prime, in the order of --primes");
    auto* box_samples = s_box->add_option("--sample", box.samples, "Sample this many polynomials instead of enumerating");
    s_box->add_flag("--certify", box.certify, "Also sort polynomials by S_n certification");
    s_box->add_option("--probes", box.probes, "Probe primes for certification")->delimiter(',');
    add_common(s_box, common, true);
    box_samples->needs(common.seed_opt);

    CurveArgs curve;
    auto* s_curve = app.add_subcommand("curve", "Deviation from the limiting densities as B grows");
    s_curve->add_option("-n", curve.n, "Degree")->required();
    s_curve->add_option("-p", curve.p, "Prime")->required();
    s_curve->add_option("-B", curve.B, "Box sizes")->required()->delimiter(',');
    s_curve->add_option("--type", curve.types, "Types to report (default: all)");
    auto* curve_samples = s_curve->add_option("--sample", curve.samples, "Samples per box instead of enumerating");
    s_curve->add_flag("--certify", curve.certify, "Also sort polynomials by S_n certification");
    add_common(s_curve, common, true);
    curve_samples->needs(common.seed_opt);

    VanishingArgs vanishing;
    auto* s_vanishing = app.add_subcommand("vanishing", "Primes p and classes with zero p-splitting mass");
    s_vanishing->add_option("-n", vanishing.n, "Degree")->required()->check(CLI::Range(2, kMaxPartitionN));
    s_vanishing->add_flag("--no-oracle", vanishing.no_oracle, "Skip the finite-field confirmation");
    add_common(s_vanishing, common, false);

    CompareArgs compare;
    auto* s_compare = app.add_subcommand("compare", "Polynomial model against the field model at a prime");
    s_compare->add_option("-n", compare.n, "Degree")->required()->check(CLI::Range(1, kMaxPartitionN));
    s_compare->add_option("-p", compare.p, "Prime")->required();
    add_common(s_compare, common, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (*s_measure) cmd_measure(measure, common, out);
        else if (*s_necklace) cmd_necklace(necklace, common, out);
        else if (*s_cycle) {
            if (!*cycle_n && !*cycle_t) throw UsageError("cyclepoly needs -n or --type");
            cmd_cyclepoly(cyclepoly, common, out);
        }
        else if (*s_oracle) {
            if (!*o_p && !*o_q) throw UsageError("oracle needs -p or -q");
            return cmd_oracle(oracle, common, out);
        } else if (*s_box) cmd_box(box, common, out);
        else if (*s_curve) cmd_curve(curve, common, out);
        else if (*s_vanishing) cmd_vanishing(vanishing, common, out);
        else if (*s_compare) cmd_compare(compare, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return budget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain;
    }
    return ok;
}

}  // namespace splitmeasure::cli
