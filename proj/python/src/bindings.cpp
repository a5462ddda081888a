#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frob/constructions.hpp"
#include "frob/record_io.hpp"
#include "frob/verifier.hpp"

namespace py = pybind11;
using namespace frob;

namespace {

py::int_ to_py(const BigInt& v) {
    const std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

std::vector<BigInt> from_py(const std::vector<py::int_>& v) {
    std::vector<BigInt> out;
    for (const auto& x : v) out.emplace_back(py::cast<std::string>(py::str(static_cast<py::handle>(x))));
    return out;
}

py::dict series_dict(const TruncatedSeries& s) {
    py::dict d;
    d["coeffs"] = to_py(s.coeffs);
    d["terminated"] = s.terminated;
    return d;
}

int resolve_trunc(const DegreeList& spec, std::optional<int> trunc, int cap) {
    return trunc ? *trunc : default_truncation(spec, cap);
}

py::object record_dict(const VerificationRecord& r) {
    return py::module_::import("json").attr("loads")(record_to_json_line(r));
}

CaseSpec make_spec(int n, int d, int m, int k, int trunc, std::uint64_t seed, std::uint32_t prime, int trials) {
    CaseSpec s;
    s.n = n, s.d = d, s.m = m, s.k = k, s.trunc = trunc, s.seed = seed, s.prime = prime, s.trials = trials;
    return s;
}

}  // namespace

PYBIND11_MODULE(_frob, m) {
    m.doc() = "Hilbert series of ideals generated by generic forms";
    m.attr("__version__") = kToolVersion;
    m.attr("DEFAULT_PRIME") = kDefaultPrime;
    m.attr("DEFAULT_SEED") = kDefaultSeed;

    py::register_exception<Error>(m, "FrobError", PyExc_ValueError);

    m.def(
        "expand_rational",
        [](int n, const std::vector<int>& degrees, int trunc) {
            return to_py(expand_rational(DegreeList(n, degrees), trunc).coeffs);
        },
        py::arg("n"), py::arg("degrees"), py::arg("trunc"));

    m.def(
        "conjectured_series",
        [](int n, const std::vector<int>& degrees, std::optional<int> trunc, int cap) {
            const DegreeList spec(n, degrees);
            return series_dict(conjectured_series(spec, resolve_trunc(spec, trunc, cap)));
        },
        py::arg("n"), py::arg("degrees"), py::arg("trunc") = py::none(), py::arg("cap") = kDefaultTruncationCap);

    m.def(
        "hilbert_function",
        [](int n, const std::vector<std::string>& generators, int max_deg) {
            std::vector<Monomial> gens;
            for (const auto& g : generators) gens.push_back(parse_monomial(g, n));
            return series_dict(quotient_hilbert_function(MonomialIdeal(n, std::move(gens)), max_deg));
        },
        py::arg("n"), py::arg("generators"), py::arg("max_deg"));

    m.def(
        "random_forms",
        [](int n, int d, int mpow, int k, std::uint64_t seed, std::uint32_t prime) {
            return write_forms(random_power_family(n, d, mpow, k, seed, prime));
        },
        py::arg("n"), py::arg("d"), py::arg("m") = 1, py::arg("k"), py::arg("seed") = kDefaultSeed,
        py::arg("prime") = kDefaultPrime);

    m.def(
        "quotient_series",
        [](const std::string& forms_text, int n, int max_deg, std::uint32_t prime) {
            const auto q = hilbert_series_of_quotient(parse_forms(forms_text, n, prime), max_deg);
            return series_dict(q.series);
        },
        py::arg("forms"), py::arg("n"), py::arg("max_deg"), py::arg("prime") = kDefaultPrime);

    m.def(
        "verify",
        [](int n, int d, int mpow, int k, int trunc, std::uint64_t seed, std::uint32_t prime, int trials) {
            VerificationRecord r;
            {
                py::gil_scoped_release release;
                r = verify_case(make_spec(n, d, mpow, k, trunc, seed, prime, trials));
            }
            return record_dict(r);
        },
        py::arg("n"), py::arg("d"), py::arg("m") = 1, py::arg("k"), py::arg("trunc") = -1,
        py::arg("seed") = kDefaultSeed, py::arg("prime") = kDefaultPrime, py::arg("trials") = kDefaultTrials);

    m.def(
        "verify_interval",
        [](int n, int d, int mpow, int k_low, int k_high, std::uint64_t seed, std::uint32_t prime) {
            CaseSpec base;
            base.seed = seed;
            base.prime = prime;
            IntervalWitness w;
            {
                py::gil_scoped_release release;
                w = verify_interval(n, d, mpow, k_low, k_high, base);
            }
            py::dict out;
            out["k_low"] = w.k_low;
            out["k_high"] = w.k_high;
            out["e_surj"] = w.e_surj;
            out["e_ind"] = w.e_ind;
            out["deduced"] = w.deduced;
            out["verified"] = w.verified;
            out["low"] = record_dict(w.low);
            out["high"] = record_dict(w.high);
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("m") = 1, py::arg("k_low"), py::arg("k_high"),
        py::arg("seed") = kDefaultSeed, py::arg("prime") = kDefaultPrime);

    m.def(
        "froberg_ideal",
        [](int n, int d, int l) {
            const auto ideal = froberg_monomial_ideal({n, d, l});
            std::vector<std::string> out;
            for (const auto& g : ideal.generators()) out.push_back(to_string(g));
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("l"));

    m.def(
        "search",
        [](int n, int d, int k, const std::vector<py::int_>& target, bool terminated, bool prune,
           std::uint64_t budget) -> std::optional<std::vector<std::string>> {
            SearchOptions opts;
            opts.prune = prune;
            opts.budget = budget;
            const auto r = exhaustive_monomial_search(n, d, k, TruncatedSeries(from_py(target), terminated), opts);
            if (!r.ideal) return std::nullopt;
            std::vector<std::string> out;
            for (const auto& g : r.ideal->generators()) out.push_back(to_string(g));
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("k"), py::arg("target"), py::arg("terminated") = true,
        py::arg("prune") = true, py::arg("budget") = SearchOptions{}.budget);
}
