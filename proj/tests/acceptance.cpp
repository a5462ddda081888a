// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frob/constructions.hpp"
#include "frob/macaulay.hpp"
#include "frob/verifier.hpp"

using namespace frob;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > limit_seconds) {
        std::ostringstream os;
        os << "took " << secs << " s, limit " << limit_seconds << " s";
        out.require(false, os.str());
    }
    if (!out.ok) ++failures;
    std::printf("[%s] %-62s %8.3f s%s%s\n", out.ok ? "PASS" : "FAIL", name.c_str(), secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

std::vector<BigInt> ints(std::initializer_list<long long> v) {
    std::vector<BigInt> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

CaseSpec spec(int n, int d, int m, int k) {
    CaseSpec s;
    s.n = n;
    s.d = d;
    s.m = m;
    s.k = k;
    return s;
}

}  // namespace

int main() {
    // 1. Golden numbers.
    criterion("AC1a  golden conjectured series", 1.0, [](Outcome& o) {
        o.require(to_ascii(conjectured_series(DegreeList::uniform(4, 2, 5), 4)) == "1 + 4t + 5t^2", "n=4 [2]x5");
        const auto s26 = conjectured_series(DegreeList::uniform(3, 14, 26), 17);
        o.require(s26.coeffs[14] == 94 && s26.coeffs[15] == 58, "k=26 coefficients 94, 58");
        o.require(s26.first_zero() == 16 && s26.terminated, "k=26 terminates at t^16");
        for (int i = 0; i <= 13; ++i) o.require(s26.coeffs[i] == binomial(i + 2, 2), "k=26 binomial prefix");
        const auto s45 = conjectured_series(DegreeList::uniform(3, 14, 45), 17);
        o.require(s45.coeffs[14] == 75 && s45.coeffs[15] == 1, "k=45 coefficients 75, 1");
        o.require(monomial_count(3, 15) == 136, "136 monomials of degree 15");
    });
    criterion("AC1b  45 random degree-14 forms: dim I_15 = 135", 30.0, [](Outcome& o) {
        const auto plain = random_power_family(3, 14, 1, 45, kDefaultSeed);
        const auto s = ideal_dimension_at_degree(plain, 15);
        o.require(s.rows == 135 && s.cols == 136, "matrix is 135 x 136");
        o.require(s.rank == 135, "rank " + std::to_string(s.rank) + " != 135");
        const auto powers = random_power_family(3, 2, 7, 45, kDefaultSeed);
        o.require(ideal_dimension_at_degree(powers, 15).rank == 135, "seventh powers of quadrics: rank != 135");
    });

    // 2. The monomial family hits the expected series.
    criterion("AC2   monomial family attains the expected series, (n,d) in {4,5,6}x{2,3,4}", 10.0, [](Outcome& o) {
        for (int n = 4; n <= 6; ++n)
            for (int d = 2; d <= 4; ++d)
                for (int l = 1; l <= n; ++l) {
                    const auto I = froberg_monomial_ideal({n, d, l});
                    const auto rep = check_theorem1(I, n, d);
                    const int k = static_cast<int>(I.generators().size());
                    const auto conj = conjectured_series(DegreeList::uniform(n, d, k), d + 1);
                    const bool eq = lex_compare(quotient_hilbert_function(I, d + 1), conj) == Ordering::Equal;
                    o.require(rep.matches_conjectured && rep.matches_sieve && eq,
                              "n=" + std::to_string(n) + " d=" + std::to_string(d) + " l=" + std::to_string(l));
                }
    });

    // 3. No monomial ideal of five quadrics in four variables.
    const TruncatedSeries ex1(ints({1, 4, 5, 0}), true);
    criterion("AC3a  no monomial ideal of 5 quadrics in 4 vars (pruned)", 1.0, [&](Outcome& o) {
        const auto r = exhaustive_monomial_search(4, 2, 5, ex1);
        o.require(!r.ideal, "pruned search found an ideal");
    });
    criterion("AC3b  unpruned search over all 252 candidates agrees", 10.0, [&](Outcome& o) {
        SearchOptions raw;
        raw.prune = false;
        const auto r = exhaustive_monomial_search(4, 2, 5, ex1, raw);
        o.require(!r.ideal, "unpruned search found an ideal");
        o.require(r.candidates_examined == 252, "examined " + std::to_string(r.candidates_examined));
    });

    // 4. Table slice.
    for (auto [n, d, m] : {std::tuple{4, 2, 2}, {4, 2, 3}, {4, 3, 2}, {5, 2, 2}}) {
        const int top = static_cast<int>(monomial_count_index(n, d * m));
        const auto reps = plan_sweep(n, d, m, 1, top).representatives();
        for (int k : reps) {
            std::ostringstream name;
            name << "AC4   n=" << n << " d=" << d << " m=" << m << " k=" << k << " verified";
            criterion(name.str(), 60.0, [&, n = n, d = d, m = m](Outcome& o) {
                const auto r = verify_case(spec(n, d, m, k));
                o.require(r.verdict == Verdict::Verified, to_string(r.verdict) + " " + to_ascii(r.computed));
                o.require(r.computed == r.conjectured, "series differ");
            });
        }
        (void)top;
    }

    // 5. Interval engine on 26..45 forms of degree 14 in three variables.
    criterion("AC5   interval 26..45 for n=3, d=2, m=7", 300.0, [](Outcome& o) {
        const auto w = verify_interval(3, 2, 7, 26, 45);
        o.require(w.verified, "not verified");
        o.require(w.low.verdict == Verdict::Verified && w.high.verdict == Verdict::Verified, "endpoints");
        o.require(w.e_surj == 16, "e_surj " + std::to_string(w.e_surj));
        o.require(w.e_ind == 15, "e_ind " + std::to_string(w.e_ind));
        o.require(w.low.computed.coeffs[14] == 94 && w.low.computed.coeffs[15] == 58, "k=26 series");
        o.require(w.high.computed.coeffs[14] == 75 && w.high.computed.coeffs[15] == 1, "k=45 series");
        o.require(w.deduced.size() == 18, "deduced " + std::to_string(w.deduced.size()));
        const auto& top = w.high.degrees[15];
        o.require(top.rows == 135 && top.rank == 135 && top.cols == 136, "135 independent rows at degree 15");
    });

    // 6. Property suites.
    criterion("AC6a  ceiling idempotent with zero tail", 10.0, [](Outcome& o) {
        std::mt19937 rng(61);
        for (int i = 0; i < 2000; ++i) {
            std::vector<BigInt> c;
            const int len = 1 + rng() % 16;
            for (int j = 0; j < len; ++j) c.emplace_back(static_cast<int>(rng() % 11) - 3);
            const auto once = ceiling(SignedSeries{c});
            o.require(ceiling(SignedSeries{once.coeffs}).coeffs == once.coeffs, "idempotence");
            const int z = once.first_zero();
            if (z >= 0)
                for (int j = z; j < len; ++j) o.require(once.coeffs[j] == 0, "zero tail");
        }
    });
    criterion("AC6b  lex order is total on terminated series", 10.0, [](Outcome& o) {
        std::mt19937 rng(62);
        std::vector<TruncatedSeries> pool;
        for (int i = 0; i < 60; ++i) {
            std::vector<BigInt> c;
            const int len = 1 + rng() % 5;
            for (int j = 0; j < len; ++j) c.emplace_back(static_cast<int>(rng() % 3));
            pool.emplace_back(c, true);
        }
        for (const auto& a : pool)
            for (const auto& b : pool) {
                const auto ab = lex_compare(a, b), ba = lex_compare(b, a);
                o.require((ab == Ordering::Less) == (ba == Ordering::Greater), "antisymmetry");
                for (const auto& c : pool)
                    if (ab != Ordering::Greater && lex_compare(b, c) != Ordering::Greater)
                        o.require(lex_compare(a, c) != Ordering::Greater, "transitivity");
            }
    });
    criterion("AC6c  specialization and first-order bounds, 200 cases", 60.0, [](Outcome& o) {
        std::mt19937 rng(63);
        for (int iter = 0; iter < 200; ++iter) {
            const int n = 1 + rng() % 3, trunc = rng() % 11, k = rng() % 5;
            FormFamily fam{n, kDefaultPrime, 0, {}};
            FormRng frng(rng());
            std::vector<int> degs;
            for (int i = 0; i < k; ++i) {
                degs.push_back(1 + rng() % 4);
                fam.forms.push_back(random_form(n, degs.back(), kDefaultPrime, frng));
            }
            const auto q = hilbert_series_of_quotient(fam, trunc);
            const auto bound = first_order_bound(DegreeList(n, degs), trunc);
            for (int e = 0; e <= trunc; ++e) {
                const auto& s = q.degrees[e];
                o.require(s.rank <= s.rows && s.rank <= s.cols, "rank exceeds matrix shape");
                o.require(q.series.coeffs[e] >= bound[e], "first-order bound");
            }
        }
    });
    criterion("AC6d  incremental rank equals batch rank up to 200x300", 60.0, [](Outcome& o) {
        const PrimeField f;
        std::mt19937_64 rng(64);
        for (auto [rows, cols, inner] : {std::tuple{200, 300, 200}, {200, 300, 77}, {300, 200, 150}, {120, 120, 119}}) {
            DenseMatrix a(rows, inner), b(inner, cols), m(rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < inner; ++c) a(r, c) = rng() % f.modulus();
            for (int r = 0; r < inner; ++r)
                for (int c = 0; c < cols; ++c) b(r, c) = rng() % f.modulus();
            for (int r = 0; r < rows; ++r)
                for (int t = 0; t < inner; ++t)
                    for (int c = 0; c < cols; ++c) m(r, c) = f.add(m(r, c), f.mul(a(r, t), b(t, c)));
            IncrementalRank inc(cols, f);
            for (int r = 0; r < rows; ++r) {
                std::vector<std::uint32_t> row(m.row(r).begin(), m.row(r).end());
                inc.add_row(row);
            }
            o.require(inc.rank() == rank_of(m, f), "incremental vs batch");
        }
    });
    criterion("AC6e  replaying a record reproduces it", 30.0, [](Outcome& o) {
        auto s = spec(4, 2, 2, 9);
        s.seed = 77;
        const auto a = verify_case(s), b = verify_case(s);
        o.require(a.computed == b.computed && a.conjectured == b.conjectured, "series");
        o.require(a.degrees == b.degrees && a.seeds_tried == b.seeds_tried && a.verdict == b.verdict, "record");
    });

    // 7. Degenerate family.
    criterion("AC7   identical generators yield NotAttained", 30.0, [](Outcome& o) {
        const FamilyBuilder same = [](const CaseSpec& s, std::uint64_t seed) {
            const auto one = random_power_family(s.n, s.d, s.m, 1, seed, s.prime);
            FormFamily fam{s.n, s.prime, seed, {}};
            for (int i = 0; i < s.k; ++i) fam.forms.push_back(one.forms[0]);
            return fam;
        };
        for (auto s : {spec(3, 2, 1, 4), spec(4, 2, 2, 5), spec(3, 2, 7, 26)}) {
            const auto r = verify_case_with(s, same);
            o.require(r.verdict == Verdict::NotAttained, "verdict " + to_string(r.verdict));
            o.require(static_cast<int>(r.seeds_tried.size()) == s.trials, "all trials used");
        }
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
