#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitmeasure/boxlab.hpp"
#include "splitmeasure/errors.hpp"
#include "splitmeasure/finitefield.hpp"
#include "splitmeasure/measures.hpp"

namespace py = pybind11;
using namespace splitmeasure;

namespace {

py::object to_int(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rat& r) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_int(r.get_num()), to_int(r.get_den()));
}

// Accepts int, Fraction or a "a/b" string; floats are refused since they are not exact.
Rat to_rat(const py::handle& z) {
    if (py::isinstance<py::float_>(z)) throw InputError("z must be exact: pass an int, Fraction or \"a/b\" string");
    return parse_rat(py::str(z).cast<std::string>());
}

Partition to_partition(const py::handle& mu) {
    if (py::isinstance<py::str>(mu)) return parse_bracket(mu.cast<std::string>());
    return Partition(mu.cast<std::vector<int>>());
}

py::tuple parts(const Partition& mu) { return py::cast(mu.parts()); }

py::list coefficients(const RatPoly& p) {
    py::list out;
    for (const Rat& c : p.coefficients()) out.append(to_fraction(c));
    return out;
}

std::vector<Partition> to_partitions(const py::handle& types) {
    std::vector<Partition> out;
    if (types.is_none()) return out;
    for (const auto& t : types) out.push_back(to_partition(t));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact splitting measures, finite-field oracles and integer box densities.";

    // Translators run newest first, so subclasses are registered after their bases.
    auto& base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    auto& input = py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", input.ptr());

    m.attr("DEFAULT_BUDGET") = kDefaultBudget;

    m.def("partitions_of", [](int n) {
        py::list out;
        for (const auto& mu : partitions_of(n)) out.append(parts(mu));
        return out;
    }, py::arg("n"));
    m.def("class_size", [](const py::object& mu) { return to_int(class_size(to_partition(mu))); }, py::arg("mu"));
    m.def("format_bracket", [](const py::object& mu) { return format_bracket(to_partition(mu)); }, py::arg("mu"));
    m.def("parse_bracket", [](const std::string& s) { return parts(parse_bracket(s)); }, py::arg("text"));

    m.def("necklace_poly", [](int m_) { return coefficients(necklace_poly(m_)); }, py::arg("m"),
          "Coefficients of M_m(X), constant term first.");
    m.def("cycle_poly", [](const py::object& mu) { return coefficients(cycle_poly(to_partition(mu))); }, py::arg("mu"),
          "Coefficients of N_mu(X), constant term first.");
    m.def("splitting_measure_class", [](int n, const py::object& z, const py::object& mu) {
        return to_fraction(splitting_measure_class(n, to_rat(z), to_partition(mu)));
    }, py::arg("n"), py::arg("z"), py::arg("mu"));
    m.def("splitting_measure_element", [](int n, const py::object& z, const py::object& mu) {
        return to_fraction(splitting_measure_element(n, to_rat(z), to_partition(mu)));
    }, py::arg("n"), py::arg("z"), py::arg("mu"));
    m.def("measure_table", [](int n, const py::object& z) {
        py::dict out;
        for (const auto& row : measure_table(n, to_rat(z)).rows) out[py::cast(format_bracket(row.type))] = to_fraction(row.value);
        return out;
    }, py::arg("n"), py::arg("z"), "Class masses keyed by bracket notation.");
    m.def("chebotarev_measure", [](const py::object& mu) { return to_fraction(chebotarev_measure(to_partition(mu))); },
          py::arg("mu"));
    m.def("bhargava_ramification", [](int n, std::uint64_t p) { return to_fraction(bhargava_ramification(n, p)); },
          py::arg("n"), py::arg("p"));
    m.def("vanishing_pairs", [](int n) {
        py::list out;
        for (const auto& v : vanishing_pairs(n)) out.append(py::make_tuple(v.p, parts(v.type)));
        return out;
    }, py::arg("n"));
    m.def("comparison_json", [](int n, std::uint64_t p) { return comparison_table(n, p).to_json(); },
          py::arg("n"), py::arg("p"));

    m.def("tally_json", [](int n, std::uint64_t p, int f, std::uint64_t budget, unsigned workers) {
        py::gil_scoped_release release;
        return exhaustive_tally(n, fq_make(p, f), {budget, workers}).to_json();
    }, py::arg("n"), py::arg("p"), py::arg("f") = 1, py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

    m.def("box_json", [](int n, std::int64_t B, std::vector<std::uint64_t> primes, const py::object& types,
                         std::uint64_t samples, std::uint64_t seed, bool certify, std::uint64_t budget, unsigned workers) {
        BoxSpec spec;
        spec.n = n;
        spec.B = B;
        spec.primes = std::move(primes);
        spec.types = to_partitions(types);
        spec.mode = samples ? BoxMode::sample : BoxMode::exhaustive;
        spec.samples = samples;
        spec.seed = seed;
        spec.certify = certify;
        spec.budget = budget;
        spec.workers = workers;
        py::gil_scoped_release release;
        return run_density(spec).to_json();
    }, py::arg("n"), py::arg("B"), py::arg("primes"), py::arg("types") = py::none(), py::arg("samples") = 0,
       py::arg("seed") = 0, py::arg("certify") = false, py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

    m.def("sn_certify", [](std::vector<std::int64_t> coeffs, const py::object& probes) {
        const IntPoly f = IntPoly::from_int64(coeffs);
        const auto primes = probes.is_none() ? default_probe_primes() : probes.cast<std::vector<std::uint64_t>>();
        return to_string(sn_certify(f, primes));
    }, py::arg("coeffs"), py::arg("probes") = py::none(),
       "Verdict for the monic polynomial with the given lower coefficients, constant term first.");
}
