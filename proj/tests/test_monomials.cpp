#include <random>
#include <set>

#include "doctest.h"
#include "frob/error.hpp"
#include "frob/monomials.hpp"
#include "oracles.hpp"

using namespace frob;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// (x^2, y^2, z^2, w^2, xy)
MonomialIdeal squares_plus_xy() {
    return MonomialIdeal(4, {mono({2, 0, 0, 0}), mono({0, 2, 0, 0}), mono({0, 0, 2, 0}), mono({0, 0, 0, 2}),
                             mono({1, 1, 0, 0})});
}

std::vector<std::vector<int>> exps(const MonomialIdeal& I) {
    std::vector<std::vector<int>> out;
    for (const auto& g : I.generators()) out.push_back(g.exponents());
    return out;
}

}  // namespace

TEST_SUITE("monomials") {

TEST_CASE("monomial_count") {
    CHECK(monomial_count(3, 15) == 136);
    CHECK(monomial_count(4, 2) == 10);
    CHECK(monomial_count(4, 2) == static_cast<long long>(oracle::exponent_vectors(4, 2).size()));
    for (int n = 1; n < 6; ++n) CHECK(monomial_count(n, 0) == 1);
    CHECK_THROWS_AS(monomial_count(0, 3), InvalidParams);
}

TEST_CASE("enumerate, rank, unrank") {
    const auto two = enumerate_monomials(2, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == mono({2, 0}));
    CHECK(two[1] == mono({1, 1}));
    CHECK(two[2] == mono({0, 2}));
    CHECK(rank(mono({2, 0})) == 0);
    CHECK(unrank(2, 2, 2) == mono({0, 2}));
    CHECK_THROWS_AS(unrank(2, 2, 3), IndexOutOfRange);
}

TEST_CASE("rank and unrank are inverse and order-preserving") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= 10; ++d) {
            const MonomialOrderTable table(n, d);
            REQUIRE(table.size() == oracle::exponent_vectors(n, d).size());
            for (std::size_t i = 0; i < table.size(); ++i) {
                const Monomial m = table.unrank(i);
                CHECK(m.degree() == d);
                CHECK(table.rank(m) == i);
                if (i > 0) CHECK(table.unrank(i - 1) > m);
            }
        }
}

TEST_CASE("product rank table agrees with rank of products") {
    const ProductRankTable t(3, 2, 3);
    const auto a = enumerate_monomials(3, 2), b = enumerate_monomials(3, 3);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) CHECK(t(i, j) == rank(a[i] * b[j]));
}

TEST_CASE("string round trip") {
    CHECK(to_string(mono({2, 0, 1})) == "x1^2*x3");
    CHECK(to_string(mono({0, 0})) == "1");
    CHECK(parse_monomial("x1^2*x3", 3) == mono({2, 0, 1}));
    CHECK(parse_monomial(" 1 ", 2) == mono({0, 0}));
    CHECK_THROWS_AS(parse_monomial("x4", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("y^2", 3), ParseError);
    for (const auto& m : enumerate_monomials(4, 3)) CHECK(parse_monomial(to_string(m), 4) == m);

    const auto I = squares_plus_xy();
    CHECK(parse_ideal(write_ideal(I), 4).generators() == I.generators());
    CHECK(parse_ideal("# comment\nx1*x2\n\nx1^2\n", 2).generators().size() == 2);
}

TEST_CASE("ideal minimalization") {
    const MonomialIdeal I(2, {mono({1, 0}), mono({2, 0}), mono({1, 1}), mono({0, 3}), mono({1, 0})});
    REQUIRE(I.generators().size() == 2);
    CHECK(I.contains(mono({3, 2})));
    CHECK_FALSE(I.contains(mono({0, 2})));
}

TEST_CASE("quotient_hilbert_function examples") {
    // Degree-3 survivors are x*z*w and y*z*w.
    CHECK(quotient_hilbert_function(squares_plus_xy(), 3).coeffs ==
          std::vector<BigInt>{1, 4, 5, 2});
    const auto I = squares_plus_xy();
    const auto oracle_hf = oracle::monomial_hilbert(4, exps(I), 3);
    CHECK(oracle_hf == std::vector<std::uint64_t>{1, 4, 5, 2});

    const auto m2 = quotient_hilbert_function(MonomialIdeal::maximal_power(4, 2), 3);
    CHECK(m2.coeffs == std::vector<BigInt>{1, 4, 0, 0});
    CHECK(m2.terminated);

    const auto zero = quotient_hilbert_function(MonomialIdeal(3), 2);
    CHECK(zero.coeffs == std::vector<BigInt>{1, 3, 6});
    CHECK_FALSE(zero.terminated);
}

TEST_CASE("contains_power_of_maximal_ideal examples") {
    CHECK(contains_power_of_maximal_ideal(MonomialIdeal::maximal_power(3, 2), 3));
    CHECK_FALSE(contains_power_of_maximal_ideal(squares_plus_xy(), 3));
    CHECK_FALSE(squares_plus_xy().contains(mono({1, 0, 1, 1})));
}

TEST_CASE("sieve properties on random ideals") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = 1 + rng() % 4;
        std::vector<Monomial> gens;
        const int ngens = rng() % 6;
        for (int i = 0; i < ngens; ++i) {
            std::vector<int> e(n);
            for (auto& x : e) x = rng() % 3;
            gens.emplace_back(e);
        }
        const MonomialIdeal I(n, gens);
        const int top = 6;
        const auto hf = quotient_hilbert_function(I, top);
        const auto ref = oracle::monomial_hilbert(n, exps(I), top);
        for (int e = 0; e <= top; ++e) {
            const std::uint64_t got = e <= hf.trunc() ? hf.coeffs[e].convert_to<std::uint64_t>() : 0;
            CHECK(got == ref[e]);
            const bool full = contains_power_of_maximal_ideal(I, e);
            CHECK(full == (ref[e] == 0));
            if (full) {
                CHECK(contains_power_of_maximal_ideal(I, e + 1));
                CHECK(contains_power_of_maximal_ideal(I, e + 2));
            }
        }
        if (I.is_zero())
            for (int e = 0; e <= top; ++e) CHECK(hf.coeffs[e] == monomial_count(n, e));
    }
}

}
