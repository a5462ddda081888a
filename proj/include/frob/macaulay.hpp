#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "frob/modp.hpp"
#include "frob/monomials.hpp"
#include "frob/series.hpp"

namespace frob {

// Homogeneous form of degree d in n variables over F_p. coeffs[i] belongs to
// the monomial of rank i in MonomialOrderTable(n, d).
struct ModPPoly {
    int n = 1;
    int d = 0;
    std::uint32_t prime = kDefaultPrime;
    std::vector<std::uint32_t> coeffs;

    static ModPPoly zero(int n, int d, std::uint32_t prime);
    static ModPPoly from_monomial(const Monomial& m, std::uint32_t prime);

    bool is_zero() const;
    bool operator==(const ModPPoly&) const = default;
};

// Deterministic coefficient source. Uniform draws use rejection sampling on
// the raw 64-bit stream so a (seed, prime) pair replays bit-exactly on any
// standard library.
class FormRng {
public:
    explicit FormRng(std::uint64_t seed) : engine_(seed) {}
    std::uint32_t uniform(std::uint32_t p);

private:
    std::mt19937_64 engine_;
};

// Seed used for retry number `trial` of a case seeded with `seed`. Trial 0
// is the seed itself.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

struct FormFamily {
    int n = 1;
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    std::vector<ModPPoly> forms;

    int min_degree() const;
};

ModPPoly random_form(int n, int d, std::uint32_t prime, FormRng& rng);
ModPPoly multiply(const ModPPoly& f, const ModPPoly& g);
// Repeated squaring.
ModPPoly power(const ModPPoly& f, int m);

// k random degree-d forms, each raised to the m-th power. Forms are drawn in
// index order and coefficients in rank order, so the family for k is a prefix
// of the family for k + 1.
FormFamily random_power_family(int n, int d, int m, int k, std::uint64_t seed,
                               std::uint32_t prime = kDefaultPrime);

// Size and rank of one Macaulay matrix.
struct DegreeStats {
    int degree = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    bool computed = false;  // false when short-circuited (no generator fits)

    bool operator==(const DegreeStats&) const = default;
};

inline constexpr std::size_t kDefaultMatrixBudget = 40'000'000;

struct MacaulayOptions {
    std::size_t matrix_budget = kDefaultMatrixBudget;  // rows * cols per matrix
    unsigned workers = 1;
};

// Number of rows and columns of the degree-e Macaulay matrix.
DegreeStats macaulay_shape(const FormFamily& family, int e);

// dim I_e as the rank of the matrix whose rows are (monomial of degree
// e - deg g) * g over all generators g. Throws ResourceLimit when rows * cols
// exceeds the budget.
DegreeStats ideal_dimension_at_degree(const FormFamily& family, int e,
                                      std::size_t matrix_budget = kDefaultMatrixBudget);

struct QuotientSeries {
    TruncatedSeries series;
    std::vector<DegreeStats> degrees;
};

// Coefficient e is C(n+e-1, e) - dim I_e, each degree computed on its own.
QuotientSeries hilbert_series_of_quotient(const FormFamily& family, int max_deg,
                                          const MacaulayOptions& opts = {});

// "d: c0 c1 c2 ..." per form, coefficients in rank order.
std::string write_forms(const FormFamily& family);
FormFamily parse_forms(std::string_view text, int n, std::uint32_t prime);

}  // namespace frob
