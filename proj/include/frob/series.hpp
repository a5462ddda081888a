#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "frob/bigint.hpp"

namespace frob {

// Raw integer power series truncated at degree `trunc` (inclusive).
struct SignedSeries {
    std::vector<BigInt> coeffs;

    int trunc() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const SignedSeries&) const = default;
};

// Nonnegative series, e.g. a Hilbert series H_{R/I}(t) up to `trunc`.
// `terminated` means every coefficient past the stored range is zero, so
// the series is a polynomial and may be zero-extended.
struct TruncatedSeries {
    std::vector<BigInt> coeffs;
    bool terminated = false;

    TruncatedSeries() = default;
    TruncatedSeries(std::vector<BigInt> c, bool term);

    int trunc() const { return static_cast<int>(coeffs.size()) - 1; }
    // Coefficient at degree e, zero-extended past trunc for terminated series.
    BigInt at(int e) const;
    // Degree of the first zero coefficient, or -1 if there is none in range.
    int first_zero() const;
    bool operator==(const TruncatedSeries&) const = default;
};

// k = degrees.size() generators of degrees d_i in n variables.
struct DegreeList {
    int n = 1;
    std::vector<int> degrees;

    DegreeList() = default;
    DegreeList(int n, std::vector<int> degrees);

    // n variables, k generators all of degree d.
    static DegreeList uniform(int n, int d, int k);
    int k() const { return static_cast<int>(degrees.size()); }
};

enum class Ordering { Less, Equal, Greater };

// Taylor coefficients of prod(1 - t^{d_i}) / (1 - t)^n through degree trunc.
SignedSeries expand_rational(const DegreeList& spec, int trunc);

// Keeps coefficients while every coefficient so far is strictly positive;
// zero from the first nonpositive one on.
TruncatedSeries ceiling(const SignedSeries& f);

TruncatedSeries conjectured_series(const DegreeList& spec, int trunc);

// Lexicographic comparison by first differing coefficient. A shorter series
// is zero-extended only when terminated; throws IncomparableTruncation
// otherwise.
Ordering lex_compare(const TruncatedSeries& f, const TruncatedSeries& g);

inline constexpr int kDefaultTruncationCap = 64;

// One past the degree where the conjectured series terminates, bounded by
// cap. For k <= n returns cap unless the (complete-intersection) series
// ends before it. Throws CapExceeded when k > n and the series runs past cap.
int default_truncation(const DegreeList& spec, int cap = kDefaultTruncationCap);

// "1 + 4t + 5t^2"; a non-terminated series gets a trailing "+ O(t^N)".
std::string to_ascii(const TruncatedSeries& s);
std::string to_ascii(const SignedSeries& s);
// "[1,4,5,0]"; coefficients may exceed 64 bits, so this is written by hand.
std::string to_json_array(const std::vector<BigInt>& coeffs);

}  // namespace frob
