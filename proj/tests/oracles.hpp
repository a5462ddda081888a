#pragma once
// Reference computations for the tests. Each one takes a different route from
// the library code it checks: naive convolution instead of prefix sums,
// odometer enumeration instead of rank tables, rational elimination instead of
// modular elimination.

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t len) {
    std::vector<Int> out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// prod (1 - t^{d_i}) * (1 + t + t^2 + ...)^n, by repeated naive convolution.
inline std::vector<Int> expand(int n, const std::vector<int>& degrees, int trunc) {
    const std::size_t len = trunc + 1;
    std::vector<Int> acc(len, 0);
    acc[0] = 1;
    for (int d : degrees) {
        std::vector<Int> f(d + 1, 0);
        f[0] = 1;
        f[d] = -1;
        acc = convolve(acc, f, len);
    }
    const std::vector<Int> geometric(len, 1);
    for (int i = 0; i < n; ++i) acc = convolve(acc, geometric, len);
    return acc;
}

// All exponent vectors of total degree d, by odometer over [0, d]^n.
inline std::vector<std::vector<int>> exponent_vectors(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 0);
    while (true) {
        int s = 0;
        for (int x : e) s += x;
        if (s == d) out.push_back(e);
        int i = 0;
        while (i < n && e[i] == d) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }
    return out;
}

inline bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::vector<std::uint64_t> monomial_hilbert(int n, const std::vector<std::vector<int>>& gens, int max_deg) {
    std::vector<std::uint64_t> out;
    for (int e = 0; e <= max_deg; ++e) {
        std::uint64_t c = 0;
        for (const auto& m : exponent_vectors(n, e)) {
            bool in = false;
            for (const auto& g : gens) in = in || divides(g, m);
            if (!in) ++c;
        }
        out.push_back(c);
    }
    return out;
}

inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Sparse integer form: exponent vector -> coefficient.
using IntForm = std::map<std::vector<int>, Int>;

inline IntForm multiply(const IntForm& f, const IntForm& g) {
    IntForm out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            std::vector<int> e(a);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i];
            out[e] += ca * cb;
        }
    return out;
}

// Rank over Q of the degree-e Macaulay matrix of integer forms of degree D.
inline std::size_t macaulay_rank_q(int n, const std::vector<IntForm>& forms, int D, int e) {
    if (e < D) return 0;
    const auto cols = exponent_vectors(n, e);
    std::map<std::vector<int>, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : forms)
        for (const auto& u : exponent_vectors(n, e - D)) {
            std::vector<Rational> row(cols.size(), 0);
            for (const auto& [m, c] : f) {
                std::vector<int> prod(m);
                for (int i = 0; i < n; ++i) prod[i] += u[i];
                row[col_index.at(prod)] += Rational(c);
            }
            rows.push_back(std::move(row));
        }
    return rational_rank(std::move(rows));
}

}  // namespace oracle
