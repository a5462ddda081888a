#include "frob/constructions.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

namespace frob {

BigInt FrobergFamilyParams::k() const { return monomial_count(n, d) - l + 1; }

MonomialIdeal froberg_monomial_ideal(const FrobergFamilyParams& p) {
    if (p.n < 4 || p.d < 2 || p.l < 1 || p.l > p.n)
        throw InvalidParams("family needs n >= 4, d >= 2 and 1 <= l <= n (got n=" + std::to_string(p.n) +
                            ", d=" + std::to_string(p.d) + ", l=" + std::to_string(p.l) + ")");
    std::vector<Monomial> excluded;
    for (int j = 1; j < p.l; ++j) {
        std::vector<int> e(p.n, 0);
        e[0] = 1;
        e[j] = p.d - 1;
        excluded.emplace_back(std::move(e));
    }
    std::vector<Monomial> gens;
    for (auto& m : enumerate_monomials(p.n, p.d))
        if (std::find(excluded.begin(), excluded.end(), m) == excluded.end()) gens.push_back(std::move(m));
    return MonomialIdeal(p.n, std::move(gens));
}

Theorem1Report check_theorem1(const MonomialIdeal& ideal, int n, int d) {
    if (ideal.nvars() != n) throw InvalidParams("ideal lives in a different ring");
    if (d < 1) throw InvalidParams("degree must be positive");
    for (const auto& g : ideal.generators())
        if (g.degree() < d)
            throw HypothesisFailed(HypothesisFailed::Which::NotInMaximalPower,
                                   "generator " + to_string(g) + " has degree below " + std::to_string(d));

    Theorem1Report rep;
    rep.contains_m_power = contains_power_of_maximal_ideal(ideal, d + 1);
    if (!rep.contains_m_power)
        throw HypothesisFailed(HypothesisFailed::Which::MissingNextPower,
                               "the ideal does not contain every monomial of degree " + std::to_string(d + 1));

    std::int64_t r = 0;
    for (const auto& m : enumerate_monomials(n, d))
        if (ideal.contains(m)) ++r;
    rep.r = r;
    rep.threshold = binomial(n + d, d + 1);
    if (BigInt(n) * rep.r < rep.threshold)
        throw HypothesisFailed(HypothesisFailed::Which::BelowThreshold,
                               "n*r = " + (BigInt(n) * rep.r).str() + " is below C(n+d, d+1) = " + rep.threshold.str());

    std::vector<BigInt> coeffs;
    for (int i = 0; i < d; ++i) coeffs.push_back(binomial(n + i - 1, i));
    coeffs.push_back(binomial(n + d - 1, d) - rep.r);
    rep.predicted = TruncatedSeries(std::move(coeffs), true);

    const auto conj = conjectured_series(DegreeList::uniform(n, d, static_cast<int>(r)), d + 1);
    rep.matches_conjectured = conj.terminated && lex_compare(conj, rep.predicted) == Ordering::Equal;
    const auto sieve = quotient_hilbert_function(ideal, d + 1);
    rep.matches_sieve = sieve.terminated && lex_compare(sieve, rep.predicted) == Ordering::Equal;
    return rep;
}

bool induction_inequality_check(int n, int d) {
    if (n < 4 || d < 2) throw InvalidParams("inequality is stated for n >= 4, d >= 2");
    const BigInt lhs = BigInt(n + d - n * (d + 1)) * binomial(n + d - 1, d);
    const BigInt rhs = -BigInt(n) * n * (d + 1);
    return lhs <= rhs;
}

std::pair<BigInt, BigInt> corollary1_range(int n, int d) {
    if (n < 4 || d < 2) throw InvalidParams("range is stated for n >= 4, d >= 2");
    const BigInt top = monomial_count(n, d);
    return {top - n + 1, top};
}

namespace {

// Advances c (sorted, values in [0, universe)) to the next k-combination.
bool next_combination(std::vector<std::size_t>& c, std::size_t universe) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < universe - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool matches_target(const MonomialIdeal& ideal, const TruncatedSeries& target) {
    const int top = target.trunc() + (target.terminated ? 1 : 0);
    const auto hf = quotient_hilbert_function(ideal, top);
    for (int e = 0; e <= top; ++e) {
        const BigInt got = e <= hf.trunc() ? hf.coeffs[e] : BigInt(0);
        if (got != target.at(e)) return false;
    }
    return true;
}

}  // namespace

SearchResult exhaustive_monomial_search(int n, int d, int k, const TruncatedSeries& target,
                                        const SearchOptions& opts) {
    if (n < 1 || d < 1 || k < 0) throw InvalidParams("bad search parameters");
    const auto mons = enumerate_monomials(n, d);
    const std::size_t total = mons.size();
    SearchResult result;
    if (static_cast<std::size_t>(k) > total) return result;

    // Without x_i^d the powers x_i^e never enter I, so a terminating target
    // forces every pure power.
    const bool force_pure = opts.prune && target.first_zero() >= 0;
    std::vector<std::size_t> forced, free;
    for (std::size_t i = 0; i < total; ++i) (force_pure && mons[i].is_pure_power() ? forced : free).push_back(i);
    if (forced.size() > static_cast<std::size_t>(k)) return result;
    const std::size_t choose = static_cast<std::size_t>(k) - forced.size();

    const BigInt space = binomial(static_cast<std::int64_t>(free.size()), static_cast<std::int64_t>(choose));
    if (space > opts.budget)
        throw BudgetExceeded("search space of " + space.str() + " candidate sets exceeds the budget of " +
                             std::to_string(opts.budget));
    if (space == 0) return result;

    // Rank images of each monomial under every variable permutation.
    std::vector<std::vector<std::size_t>> perm_images;
    if (opts.prune && n <= 6) {
        const MonomialOrderTable table(n, d);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::size_t> img(total);
            for (std::size_t i = 0; i < total; ++i) {
                std::vector<int> e(n);
                for (int v = 0; v < n; ++v) e[perm[v]] = mons[i][v];
                img[i] = table.rank(Monomial(std::move(e)));
            }
            perm_images.push_back(std::move(img));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<std::size_t> combo(choose);
    std::iota(combo.begin(), combo.end(), 0);
    std::vector<std::size_t> set, image;
    do {
        set = forced;
        for (auto c : combo) set.push_back(free[c]);
        std::sort(set.begin(), set.end());
        // Only the lexicographically least image of a set under the symmetric
        // group is examined.
        bool canonical = true;
        for (const auto& img : perm_images) {
            image.clear();
            for (auto i : set) image.push_back(img[i]);
            std::sort(image.begin(), image.end());
            if (image < set) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        ++result.candidates_examined;
        if (opts.progress && result.candidates_examined % 65536 == 0)
            std::cerr << "search: " << result.candidates_examined << " candidates examined\n";
        std::vector<Monomial> gens;
        for (auto i : set) gens.push_back(mons[i]);
        MonomialIdeal ideal(n, std::move(gens));
        if (matches_target(ideal, target)) {
            result.ideal = std::move(ideal);
            break;
        }
    } while (next_combination(combo, free.size()));
    if (opts.progress) std::cerr << "search: " << result.candidates_examined << " candidates examined, done\n";
    return result;
}

std::optional<SyzygyWitness> trivial_syzygy_witness(int n, int d, const MonomialIdeal& generators) {
    if (generators.nvars() != n) throw InvalidParams("ideal lives in a different ring");
    const auto& gens = generators.generators();
    for (int i = 0; i < n; ++i) {
        const Monomial pure = Monomial::variable(n, i, d);
        if (std::find(gens.begin(), gens.end(), pure) == gens.end())
            throw InvalidParams("generator set lacks " + to_string(pure));
    }
    for (const auto& m : gens) {
        if (m.is_pure_power()) continue;
        int i = 0;
        while (m[i] == 0) ++i;
        SyzygyWitness w{m, Monomial::variable(n, i, d), Monomial::variable(n, i, d - 1),
                        m / Monomial::variable(n, i), Monomial()};
        w.product = w.mixed_multiplier * w.mixed_generator;
        return w;
    }
    return std::nullopt;
}

}  // namespace frob
