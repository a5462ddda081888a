#include "frob/modp.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <string>

#include "frob/error.hpp"

namespace frob {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (v % p == 0) return v == p;
    }
    std::uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic witness set below 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod64(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p <= 2 || p >= (1u << 31) || !is_prime(p))
        throw InvalidParams("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
    return static_cast<Element>(powmod64(a, e, p_));
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of zero mod " + std::to_string(p_));
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void row_submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t f,
                std::size_t from, const PrimeField& field) {
    if (f == 0) return;
    const std::uint32_t p = field.modulus();
    // Shoup multiplication by the fixed factor g = -f: with
    // g' = floor(g * 2^32 / p), g*s - ((g'*s) >> 32) * p lies in [0, 2p).
    const std::uint32_t g = p - f;
    const std::uint64_t gs = (std::uint64_t{g} << 32) / p;
    std::uint32_t* d = dst.data();
    const std::uint32_t* s = src.data();
    const std::size_t n = dst.size();
    for (std::size_t j = from; j < n; ++j) {
        const std::uint64_t q = (gs * s[j]) >> 32;
        std::uint32_t prod = static_cast<std::uint32_t>(std::uint64_t{g} * s[j] - q * p);
        prod = prod >= p ? prod - p : prod;
        std::uint32_t sum = d[j] + prod;  // < 2p < 2^32
        d[j] = sum >= p ? sum - p : sum;
    }
}

std::size_t rank(DenseMatrix& m, const PrimeField& field) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            auto a = m.row(piv), b = m.row(r);
            std::swap_ranges(a.begin() + c, a.end(), b.begin() + c);
        }
        const std::uint32_t inv = field.inv(m(r, c));
        auto prow = m.row(r);
        for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], inv);
        for (std::size_t i = r + 1; i < rows; ++i) row_submul(m.row(i), prow, m(i, c), c, field);
        ++r;
    }
    return r;
}

std::size_t rank_of(DenseMatrix m, const PrimeField& field) { return rank(m, field); }

IncrementalRank::IncrementalRank(std::size_t cols, const PrimeField& field)
    : cols_(cols), field_(field), pivot_row_(cols, std::numeric_limits<std::size_t>::max()) {}

bool IncrementalRank::add_row(std::span<std::uint32_t> row) {
    if (row.size() != cols_) throw InvalidParams("row length does not match column count");
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::size_t lead = none;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        const std::size_t b = pivot_row_[c];
        if (b == none) {
            if (lead == none) lead = c;
            continue;
        }
        // Basis row b is zero left of c and 1 at c.
        row_submul(row, basis_[b], row[c], c, field_);
    }
    if (lead == none) return false;
    const std::uint32_t inv = field_.inv(row[lead]);
    std::vector<std::uint32_t> stored(cols_, 0);
    for (std::size_t j = lead; j < cols_; ++j) stored[j] = field_.mul(row[j], inv);
    pivot_row_[lead] = basis_.size();
    pivots_.push_back(lead);
    basis_.push_back(std::move(stored));
    return true;
}

}  // namespace frob
