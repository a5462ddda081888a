#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "frob/bigint.hpp"
#include "frob/error.hpp"
#include "frob/monomials.hpp"
#include "frob/series.hpp"

namespace frob {

// All degree-d monomials except x_1 x_j^{d-1} for 2 <= j <= l, in n >= 4
// variables with d >= 2. l = 1 gives the full power of the maximal ideal.
struct FrobergFamilyParams {
    int n = 4;
    int d = 2;
    int l = 1;

    // Generator count C(n+d-1, d) - l + 1.
    BigInt k() const;
};

MonomialIdeal froberg_monomial_ideal(const FrobergFamilyParams& p);

class HypothesisFailed : public Error {
public:
    enum class Which { NotInMaximalPower, MissingNextPower, BelowThreshold };
    HypothesisFailed(Which which, const std::string& what) : Error(what), which_(which) {}
    Which which() const { return which_; }

private:
    Which which_;
};

struct Theorem1Report {
    BigInt r;                  // degree-d monomials lying in I
    BigInt threshold;          // C(n+d, d+1); hypothesis is n*r >= threshold
    bool contains_m_power = false;
    TruncatedSeries predicted;  // sum_{i<d} C(n+i-1,i) t^i + (C(n+d-1,d) - r) t^d
    bool matches_conjectured = false;
    bool matches_sieve = false;
};

// Checks m^{d+1} ⊆ I ⊆ m^d and n*r >= C(n+d, d+1), then builds the predicted
// series and cross-checks it against ⌈(1-t^d)^r/(1-t)^n⌉ and the sieve.
// Throws HypothesisFailed naming the broken hypothesis.
Theorem1Report check_theorem1(const MonomialIdeal& ideal, int n, int d);

// (n+d - n(d+1)) * C(n+d-1, d) <= -n^2 (d+1), i.e. the inequality with the
// denominator cleared.
bool induction_inequality_check(int n, int d);

// (C(n+d-1,d) - n + 1, C(n+d-1,d)).
std::pair<BigInt, BigInt> corollary1_range(int n, int d);

struct SearchOptions {
    bool prune = true;  // pure powers forced + variable-permutation symmetry
    std::uint64_t budget = 10'000'000;  // candidate sets examined
    bool progress = false;  // counts to stderr
};

struct SearchResult {
    std::optional<MonomialIdeal> ideal;
    std::uint64_t candidates_examined = 0;
};

// Looks for k degree-d monomials whose quotient has Hilbert function `target`
// over target's range (zero-extended past it when the target is terminated).
// Throws BudgetExceeded when the candidate space exceeds the budget.
SearchResult exhaustive_monomial_search(int n, int d, int k, const TruncatedSeries& target,
                                        const SearchOptions& opts = {});

// Two equal products x_i^{d-1} * m and x_i^d * (m / x_i), both of degree
// 2d - 1, for a mixed generator m divisible by x_i.
struct SyzygyWitness {
    Monomial mixed_generator;
    Monomial pure_generator;  // x_i^d
    Monomial mixed_multiplier;  // x_i^{d-1}
    Monomial pure_multiplier;   // m / x_i
    Monomial product;
};

// Throws InvalidParams unless every x_i^d is a generator.
std::optional<SyzygyWitness> trivial_syzygy_witness(int n, int d, const MonomialIdeal& generators);

}  // namespace frob
