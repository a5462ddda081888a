#include "frob/monomials.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

#include "frob/error.hpp"

namespace frob {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_) {
        if (e < 0) throw InvalidParams("negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::variable(int n, int i, int power) {
    if (i < 0 || i >= n) throw IndexOutOfRange("variable index " + std::to_string(i) + " out of range");
    std::vector<int> e(n, 0);
    e[i] = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (other.exp_.size() != exp_.size()) throw InvalidParams("monomials live in different rings");
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

bool Monomial::is_pure_power() const {
    return std::count_if(exp_.begin(), exp_.end(), [](int e) { return e > 0; }) <= 1;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (other.exp_.size() != exp_.size()) throw InvalidParams("monomials live in different rings");
    std::vector<int> e(exp_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw InvalidParams(to_string(other) + " does not divide " + to_string(*this));
    std::vector<int> e(exp_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exp_[i];
    return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int parse_int(std::string_view s, std::string_view context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
    const std::string_view body = trim(text);
    std::vector<int> e(n, 0);
    if (body == "1") return Monomial(std::move(e));
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto next = body.find('*', pos);
        if (next == std::string_view::npos) next = body.size();
        const std::string_view factor = trim(body.substr(pos, next - pos));
        if (factor.size() < 2 || factor[0] != 'x') throw ParseError("bad monomial '" + std::string(text) + "'");
        const auto caret = factor.find('^');
        const int var = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
        const int pw = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), text);
        if (var < 1 || var > n) throw ParseError("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n));
        if (pw < 0) throw ParseError("negative exponent in '" + std::string(text) + "'");
        e[var - 1] += pw;
        pos = next + 1;
    }
    return Monomial(std::move(e));
}

BigInt monomial_count(int n, int d) {
    if (n < 1 || d < 0) throw InvalidParams("monomial_count needs n >= 1 and d >= 0");
    return binomial(n + d - 1, d);
}

std::size_t monomial_count_index(int n, int d) {
    if (d < 0) return 0;
    const std::uint64_t c = to_u64(monomial_count(n, d));
    if (c > std::numeric_limits<std::uint32_t>::max())
        throw ResourceLimit("too many monomials of degree " + std::to_string(d) + " to index");
    return static_cast<std::size_t>(c);
}

MonomialOrderTable::MonomialOrderTable(int n, int d) : n_(n), d_(d), size_(monomial_count_index(n, d)) {
    binom_.assign(n, std::vector<std::uint64_t>(d + 1, 1));
    for (int a = 1; a < n; ++a)
        for (int b = 1; b <= d; ++b) binom_[a][b] = binom_[a - 1][b] + binom_[a][b - 1];
}

std::uint64_t MonomialOrderTable::count(int vars, int deg) const {
    if (vars == 0) return deg == 0 ? 1 : 0;
    return binom_[vars - 1][deg];
}

std::size_t MonomialOrderTable::rank(const Monomial& m) const {
    if (m.nvars() != n_ || m.degree() != d_)
        throw InvalidParams("monomial " + to_string(m) + " is not of degree " + std::to_string(d_) + " in " +
                            std::to_string(n_) + " variables");
    // Monomials before m: at the first position where they differ, they carry
    // a larger exponent; the remaining degree spreads over later variables.
    std::uint64_t r = 0;
    int rem = d_;
    for (int i = 0; i + 1 < n_; ++i) {
        const int tail = n_ - i - 1;
        for (int b = m[i] + 1; b <= rem; ++b) r += count(tail, rem - b);
        rem -= m[i];
    }
    return static_cast<std::size_t>(r);
}

Monomial MonomialOrderTable::unrank(std::size_t index) const {
    if (index >= size_)
        throw IndexOutOfRange("rank " + std::to_string(index) + " out of range for " + std::to_string(size_) +
                              " monomials");
    std::vector<int> e(n_, 0);
    std::uint64_t idx = index;
    int rem = d_;
    for (int i = 0; i + 1 < n_; ++i) {
        const int tail = n_ - i - 1;
        int b = rem;
        while (idx >= count(tail, rem - b)) {
            idx -= count(tail, rem - b);
            --b;
        }
        e[i] = b;
        rem -= b;
    }
    e[n_ - 1] = rem;
    return Monomial(std::move(e));
}

std::vector<Monomial> enumerate_monomials(int n, int d) {
    const MonomialOrderTable table(n, d);
    std::vector<Monomial> out;
    out.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) out.push_back(table.unrank(i));
    return out;
}

std::size_t rank(const Monomial& m) { return MonomialOrderTable(m.nvars(), m.degree()).rank(m); }

Monomial unrank(int n, int d, std::size_t index) { return MonomialOrderTable(n, d).unrank(index); }

ProductRankTable::ProductRankTable(int n, int a, int b)
    : rows_(monomial_count_index(n, a)), cols_(monomial_count_index(n, b)) {
    const MonomialOrderTable ta(n, a), tb(n, b), tab(n, a + b);
    const auto left = enumerate_monomials(n, a);
    const auto right = enumerate_monomials(n, b);
    table_.resize(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            table_[i * cols_ + j] = static_cast<std::uint32_t>(tab.rank(left[i] * right[j]));
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
    if (n < 1) throw InvalidParams("need at least one variable");
    for (const auto& g : generators)
        if (g.nvars() != n) throw InvalidParams("generator " + to_string(g) + " has the wrong variable count");
    // Lower degrees first so every divisor is seen before its multiples.
    std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a > b;
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto& g : generators) {
        const bool redundant =
            std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
        if (!redundant) gens_.push_back(std::move(g));
    }
}

MonomialIdeal MonomialIdeal::maximal_power(int n, int d) { return MonomialIdeal(n, enumerate_monomials(n, d)); }

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::string write_ideal(const MonomialIdeal& ideal) {
    std::string out;
    for (const auto& g : ideal.generators()) out += to_string(g) + '\n';
    return out;
}

MonomialIdeal parse_ideal(std::string_view text, int n) {
    std::vector<Monomial> gens;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        gens.push_back(parse_monomial(body, n));
    }
    return MonomialIdeal(n, std::move(gens));
}

TruncatedSeries quotient_hilbert_function(const MonomialIdeal& ideal, int max_deg) {
    if (max_deg < 0) throw InvalidParams("max_deg must be nonnegative");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(max_deg) + 1, 0);
    bool terminated = false;
    for (int e = 0; e <= max_deg; ++e) {
        std::uint64_t survivors = 0;
        for (const auto& m : enumerate_monomials(ideal.nvars(), e))
            if (!ideal.contains(m)) ++survivors;
        coeffs[e] = survivors;
        // Once every degree-e monomial is in I, so is every higher one.
        if (survivors == 0) {
            terminated = true;
            break;
        }
    }
    return TruncatedSeries(std::move(coeffs), terminated);
}

bool contains_power_of_maximal_ideal(const MonomialIdeal& ideal, int e) {
    const auto all = enumerate_monomials(ideal.nvars(), e);
    return std::all_of(all.begin(), all.end(), [&](const Monomial& m) { return ideal.contains(m); });
}

}  // namespace frob
