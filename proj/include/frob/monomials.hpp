#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "frob/bigint.hpp"
#include "frob/series.hpp"

namespace frob {

// Exponent vector x_1^{e_1} ... x_n^{e_n}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
    static Monomial variable(int n, int i, int power = 1);

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }

    bool divides(const Monomial& other) const;
    // Nonzero exponent in exactly one variable (or the constant 1).
    bool is_pure_power() const;

    Monomial operator*(const Monomial& other) const;
    // Exact quotient; throws InvalidParams if `other` does not divide *this.
    Monomial operator/(const Monomial& other) const;

    auto operator<=>(const Monomial& other) const { return exp_ <=> other.exp_; }
    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

private:
    std::vector<int> exp_;
    int degree_ = 0;
};

// "x1^2*x3"; the constant monomial renders as "1".
std::string to_string(const Monomial& m);
// Inverse of to_string; n is the ambient variable count.
Monomial parse_monomial(std::string_view text, int n);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

BigInt monomial_count(int n, int d);
// Machine-word count for indexing; throws ResourceLimit on overflow.
std::size_t monomial_count_index(int n, int d);

// Bijection {0, ..., C(n+d-1, d) - 1} <-> degree-d monomials. Order is
// lexicographic on exponent vectors with x_1 most significant, so the
// largest power of x_1 comes first: x^2, xy, y^2 for n = d = 2.
class MonomialOrderTable {
public:
    MonomialOrderTable(int n, int d);

    int nvars() const { return n_; }
    int degree() const { return d_; }
    std::size_t size() const { return size_; }

    std::size_t rank(const Monomial& m) const;
    Monomial unrank(std::size_t index) const;

private:
    int n_;
    int d_;
    std::size_t size_;
    // binom_[a][b] = C(a + b, b) = number of degree-b monomials in a+1 vars.
    std::vector<std::vector<std::uint64_t>> binom_;
    std::uint64_t count(int vars, int deg) const;
};

std::vector<Monomial> enumerate_monomials(int n, int d);
std::size_t rank(const Monomial& m);
Monomial unrank(int n, int d, std::size_t index);

// For every pair (i, j) of ranks in degrees a and b, the rank of the product
// in degree a + b. Shared by polynomial multiplication and Macaulay rows.
class ProductRankTable {
public:
    ProductRankTable(int n, int a, int b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return table_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> table_;
};

// Monomial ideal kept in minimal form: no generator divides another. An empty
// generator set is the zero ideal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n, std::vector<Monomial> generators = {});

    // The power of the maximal ideal (x_1, ..., x_n)^d.
    static MonomialIdeal maximal_power(int n, int d);

    int nvars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Monomial& m) const;

private:
    int n_;
    std::vector<Monomial> gens_;
};

// One generator per line; blank lines and '#' comments are skipped.
std::string write_ideal(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(std::string_view text, int n);

// Coefficient e counts degree-e monomials outside the ideal.
TruncatedSeries quotient_hilbert_function(const MonomialIdeal& ideal, int max_deg);

// Every degree-e monomial lies in the ideal.
bool contains_power_of_maximal_ideal(const MonomialIdeal& ideal, int e);

}  // namespace frob
