#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace frob {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t v);

// Z/pZ for an odd prime p < 2^31. Elements are plain uint32 in [0, p); the
// bound leaves headroom for Shoup-style lazy reduction in the row kernels.
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t modulus() const { return p_; }

    Element reduce(std::uint64_t v) const { return static_cast<Element>(v % p_); }
    Element add(Element a, Element b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b); }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t{a} * b % p_); }
    // Throws DivisionByZero on zero.
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    DenseMatrix transpose() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

// Gaussian elimination; the matrix is overwritten with an echelon form.
std::size_t rank(DenseMatrix& m, const PrimeField& field);
// Non-destructive convenience overload.
std::size_t rank_of(DenseMatrix m, const PrimeField& field);

// dst[j] -= f * src[j] for j >= from.
void row_submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t f,
                std::size_t from, const PrimeField& field);

// Row-at-a-time rank. The basis is kept in semi-echelon form: every row's
// leading entry is its pivot, normalized to 1, so an incoming row is reduced
// by one sweep over the pivot columns in increasing order.
class IncrementalRank {
public:
    IncrementalRank(std::size_t cols, const PrimeField& field);

    // Reduces `row` (modified in place) against the basis and keeps it if
    // nonzero. Returns true when the row was independent.
    bool add_row(std::span<std::uint32_t> row);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }
    // Rank reached the column count; further rows cannot change anything.
    bool full() const { return pivots_.size() == cols_; }

private:
    std::size_t cols_;
    PrimeField field_;
    // Basis rows in insertion order.
    std::vector<std::vector<std::uint32_t>> basis_;
    std::vector<std::size_t> pivots_;
    // pivot_row_[c] = index into basis_ of the row pivoting on column c, or npos.
    std::vector<std::size_t> pivot_row_;
};

}  // namespace frob
