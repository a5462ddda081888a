#include "frob/macaulay.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "frob/error.hpp"
#include "parallel.hpp"

namespace frob {

ModPPoly ModPPoly::zero(int n, int d, std::uint32_t prime) {
    return ModPPoly{n, d, prime, std::vector<std::uint32_t>(monomial_count_index(n, d), 0)};
}

ModPPoly ModPPoly::from_monomial(const Monomial& m, std::uint32_t prime) {
    ModPPoly f = zero(m.nvars(), m.degree(), prime);
    f.coeffs[MonomialOrderTable(m.nvars(), m.degree()).rank(m)] = 1;
    return f;
}

bool ModPPoly::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint32_t FormRng::uniform(std::uint32_t p) {
    // Largest multiple of p representable, so the accepted range is unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / p * p;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return static_cast<std::uint32_t>(v % p);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    if (trial == 0) return seed;
    // splitmix64 step keyed by the trial number.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int FormFamily::min_degree() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& f : forms) m = std::min(m, f.d);
    return m;
}

ModPPoly random_form(int n, int d, std::uint32_t prime, FormRng& rng) {
    if (d < 1) throw InvalidParams("random forms need degree >= 1");
    ModPPoly f = ModPPoly::zero(n, d, prime);
    for (auto& c : f.coeffs) c = rng.uniform(prime);
    return f;
}

ModPPoly multiply(const ModPPoly& f, const ModPPoly& g) {
    if (f.n != g.n || f.prime != g.prime) throw InvalidParams("multiplying forms from different rings");
    const PrimeField field(f.prime);
    const ProductRankTable table(f.n, f.d, g.d);
    ModPPoly out = ModPPoly::zero(f.n, f.d + g.d, f.prime);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            auto& slot = out.coeffs[table(i, j)];
            slot = field.add(slot, field.mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return out;
}

ModPPoly power(const ModPPoly& f, int m) {
    if (m < 1) throw InvalidParams("power needs exponent >= 1");
    ModPPoly base = f;
    std::optional<ModPPoly> acc;
    for (int e = m;;) {
        if (e & 1) acc = acc ? multiply(*acc, base) : base;
        e >>= 1;
        if (!e) break;
        base = multiply(base, base);
    }
    return *acc;
}

FormFamily random_power_family(int n, int d, int m, int k, std::uint64_t seed, std::uint32_t prime) {
    if (n < 1 || d < 1 || m < 1 || k < 0) throw InvalidParams("bad family parameters");
    FormFamily fam{n, prime, seed, {}};
    FormRng rng(seed);
    fam.forms.reserve(k);
    for (int i = 0; i < k; ++i) {
        ModPPoly g = random_form(n, d, prime, rng);
        fam.forms.push_back(m == 1 ? std::move(g) : power(g, m));
    }
    return fam;
}

DegreeStats macaulay_shape(const FormFamily& family, int e) {
    DegreeStats s;
    s.degree = e;
    s.cols = e >= 0 ? monomial_count_index(family.n, e) : 0;
    for (const auto& g : family.forms)
        if (g.d <= e) s.rows += monomial_count_index(family.n, e - g.d);
    return s;
}

DegreeStats ideal_dimension_at_degree(const FormFamily& family, int e, std::size_t matrix_budget) {
    DegreeStats s = macaulay_shape(family, e);
    if (s.rows == 0) return s;
    if (s.cols != 0 && s.rows > matrix_budget / s.cols)
        throw ResourceLimit("Macaulay matrix at degree " + std::to_string(e) + " is " + std::to_string(s.rows) +
                            " x " + std::to_string(s.cols) + ", over the budget of " +
                            std::to_string(matrix_budget) + " entries");
    const PrimeField field(family.prime);
    IncrementalRank basis(s.cols, field);
    std::map<int, ProductRankTable> tables;
    std::vector<std::uint32_t> row(s.cols);
    for (const auto& g : family.forms) {
        if (g.d > e || basis.full()) continue;
        const auto& table = tables.try_emplace(g.d, family.n, e - g.d, g.d).first->second;
        for (std::size_t u = 0; u < table.rows() && !basis.full(); ++u) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t j = 0; j < g.coeffs.size(); ++j) row[table(u, j)] = g.coeffs[j];
            basis.add_row(row);
        }
    }
    s.rank = basis.rank();
    s.computed = true;
    return s;
}

QuotientSeries hilbert_series_of_quotient(const FormFamily& family, int max_deg, const MacaulayOptions& opts) {
    if (max_deg < 0) throw InvalidParams("max_deg must be nonnegative");
    const auto len = static_cast<std::size_t>(max_deg) + 1;
    QuotientSeries out;
    out.degrees.resize(len);
    detail::parallel_for(len, opts.workers, [&](std::size_t e) {
        out.degrees[e] = ideal_dimension_at_degree(family, static_cast<int>(e), opts.matrix_budget);
    });
    std::vector<BigInt> coeffs(len);
    bool terminated = false;
    for (std::size_t e = 0; e < len; ++e) {
        coeffs[e] = BigInt(out.degrees[e].cols) - out.degrees[e].rank;
        if (coeffs[e] == 0) terminated = true;
    }
    // R_e ⊆ I forces R_{e'} ⊆ I for e' > e, so a zero makes the series a
    // polynomial; zeros after it are what the ranks must show anyway.
    out.series = TruncatedSeries(std::move(coeffs), terminated);
    return out;
}

std::string write_forms(const FormFamily& family) {
    std::ostringstream os;
    for (const auto& f : family.forms) {
        os << f.d << ':';
        for (auto c : f.coeffs) os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

FormFamily parse_forms(std::string_view text, int n, std::uint32_t prime) {
    FormFamily fam{n, prime, 0, {}};
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": missing ':'");
        ModPPoly f;
        f.n = n;
        f.prime = prime;
        try {
            f.d = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad degree");
        }
        std::istringstream cs(line.substr(colon + 1));
        std::uint64_t c;
        while (cs >> c) {
            if (c >= prime) throw ParseError("line " + std::to_string(lineno) + ": coefficient not reduced");
            f.coeffs.push_back(static_cast<std::uint32_t>(c));
        }
        if (!cs.eof()) throw ParseError("line " + std::to_string(lineno) + ": bad coefficient");
        if (f.d < 0 || f.coeffs.size() != monomial_count_index(n, f.d))
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(monomial_count_index(n, std::max(f.d, 0))) + " coefficients");
        fam.forms.push_back(std::move(f));
    }
    return fam;
}

}  // namespace frob
