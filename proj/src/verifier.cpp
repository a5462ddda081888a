#include "frob/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "parallel.hpp"

namespace frob {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "Verified";
        case Verdict::NotAttained: return "NotAttained";
        case Verdict::Error: return "Error";
    }
    return "Error";
}

Verdict parse_verdict(const std::string& s) {
    if (s == "Verified") return Verdict::Verified;
    if (s == "NotAttained") return Verdict::NotAttained;
    if (s == "Error") return Verdict::Error;
    throw ParseError("unknown verdict '" + s + "'");
}

void CaseSpec::validate() const {
    if (n < 1 || d < 1 || m < 1) throw InvalidParams("need n, d, m >= 1");
    if (k < 1) throw InvalidParams("need at least one generator");
    if (BigInt(k) > monomial_count(n, m * d))
        throw InvalidParams("k = " + std::to_string(k) + " exceeds the " + monomial_count(n, m * d).str() +
                            " monomials of degree " + std::to_string(m * d) + "; extra generators are dependent");
    if (trials < 1) throw InvalidParams("need at least one trial");
    if (trunc < -1) throw InvalidParams("bad truncation");
    PrimeField check(prime);
}

std::vector<BigInt> first_order_bound(const DegreeList& spec, int trunc) {
    std::vector<BigInt> out;
    for (int e = 0; e <= trunc; ++e) {
        BigInt v = binomial(spec.n + e - 1, e);
        for (int dg : spec.degrees)
            if (dg <= e) v -= binomial(spec.n + e - dg - 1, e - dg);
        out.push_back(std::move(v));
    }
    return out;
}

FamilyBuilder random_family_builder() {
    return [](const CaseSpec& spec, std::uint64_t seed) {
        return random_power_family(spec.n, spec.d, spec.m, spec.k, seed, spec.prime);
    };
}

VerificationRecord verify_case(const CaseSpec& spec, const VerifyOptions& opts) {
    return verify_case_with(spec, random_family_builder(), opts);
}

VerificationRecord verify_case_with(const CaseSpec& spec, const FamilyBuilder& builder, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    spec.validate();
    VerificationRecord rec;
    rec.spec = spec;
    const DegreeList degrees = spec.degree_list();
    if (rec.spec.trunc < 0) rec.spec.trunc = default_truncation(degrees, opts.trunc_cap);
    const int trunc = rec.spec.trunc;
    rec.conjectured = conjectured_series(degrees, trunc);
    const auto bound = first_order_bound(degrees, trunc);

    rec.verdict = Verdict::NotAttained;
    for (int t = 0; t < spec.trials; ++t) {
        const std::uint64_t seed = trial_seed(spec.seed, t);
        rec.seeds_tried.push_back(seed);
        const FormFamily family = builder(rec.spec, seed);
        QuotientSeries q = hilbert_series_of_quotient(family, trunc, opts.macaulay);
        rec.rank_calls += std::count_if(q.degrees.begin(), q.degrees.end(), [](const DegreeStats& s) { return s.computed; });
        rec.computed = std::move(q.series);
        rec.degrees = std::move(q.degrees);

        // Any specialization satisfies the first-order bound and is lex >= the
        // conjectured minimum; a violation means the computation is broken.
        for (int e = 0; e <= trunc; ++e) {
            if (rec.computed.coeffs[e] < bound[e]) {
                rec.verdict = Verdict::Error;
                rec.message = "coefficient of t^" + std::to_string(e) + " is below the first-order bound";
                break;
            }
        }
        if (rec.verdict == Verdict::Error) break;
        const Ordering ord = lex_compare(rec.computed, rec.conjectured);
        if (ord == Ordering::Equal) {
            rec.verdict = Verdict::Verified;
            rec.message.clear();
            break;
        }
        if (ord == Ordering::Less) {
            rec.verdict = Verdict::Error;
            rec.message = "computed series is lex-smaller than the conjectured minimum";
            break;
        }
        rec.message = "series not attained in " + std::to_string(t + 1) +
                      " trial(s); this is not a disproof, rerun with another prime or seed";
    }
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

void check_interval_pinning(int n, int generator_degree, int k_low, int k_high, IntervalInputs in) {
    const int D = generator_degree;
    const int top = std::max(in.e_surj, in.e_ind) + 1;
    for (int k = k_low; k <= k_high; ++k) {
        const TruncatedSeries conj = conjectured_series(DegreeList::uniform(n, D, k), top);
        for (int e = 0; e <= top; ++e) {
            BigInt pinned;
            if (e <= in.e_ind) {
                // Full row rank: dim I_e is the number of rows.
                pinned = binomial(n + e - 1, e) - BigInt(k) * binomial(n + e - D - 1, e - D);
                if (pinned < 0)
                    throw DeductionInapplicable(e, k, "more rows than columns at degree " + std::to_string(e) +
                                                          " for k = " + std::to_string(k));
            } else if (in.e_surj >= 0 && e >= in.e_surj) {
                pinned = 0;
            } else {
                throw DeductionInapplicable(e, k, "degree " + std::to_string(e) + " is not pinned for k = " +
                                                      std::to_string(k));
            }
            if (pinned != conj.at(e))
                throw DeductionInapplicable(e, k, "pinned coefficient of t^" + std::to_string(e) + " for k = " +
                                                      std::to_string(k) + " differs from the conjectured series");
        }
    }
}

namespace {

int full_row_rank_degree(const VerificationRecord& rec) {
    int best = -1;
    for (const auto& s : rec.degrees) {
        if (s.rank != s.rows) break;
        best = s.degree;
    }
    return best;
}

CaseSpec with_k(const CaseSpec& base, int n, int d, int m, int k) {
    CaseSpec s = base;
    s.n = n;
    s.d = d;
    s.m = m;
    s.k = k;
    s.trunc = -1;
    return s;
}

}  // namespace

IntervalWitness deduce_interval(const VerificationRecord& low, const VerificationRecord& high) {
    const auto& a = low.spec;
    const auto& b = high.spec;
    if (a.n != b.n || a.d != b.d || a.m != b.m) throw InvalidParams("endpoint records describe different cells");
    if (a.k > b.k) throw InvalidParams("empty interval");
    IntervalWitness w;
    w.n = a.n;
    w.d = a.d;
    w.m = a.m;
    w.k_low = a.k;
    w.k_high = b.k;
    w.low = low;
    w.high = high;
    for (const auto* r : {&w.low, &w.high})
        if (r->verdict != Verdict::Verified)
            throw DeductionInapplicable(-1, r->spec.k, "endpoint k = " + std::to_string(r->spec.k) +
                                                           " is not verified (" + to_string(r->verdict) + ")");
    w.e_surj = w.low.computed.first_zero();
    w.e_ind = full_row_rank_degree(w.high);
    if (w.k_low < w.k_high) {
        if (w.e_surj < 0)
            throw DeductionInapplicable(-1, w.k_low, "the quotient at k = " + std::to_string(w.k_low) +
                                                         " does not vanish within the truncation");
        check_interval_pinning(w.n, w.m * w.d, w.k_low, w.k_high, {w.e_surj, w.e_ind});
        for (int k = w.k_low + 1; k < w.k_high; ++k) w.deduced.push_back(k);
    }
    w.verified = true;
    return w;
}

IntervalWitness verify_interval(int n, int d, int m, int k_low, int k_high, const CaseSpec& base,
                                const VerifyOptions& opts) {
    if (k_low > k_high) throw InvalidParams("empty interval");
    const auto low = verify_case(with_k(base, n, d, m, k_low), opts);
    const auto high = k_high == k_low ? low : verify_case(with_k(base, n, d, m, k_high), opts);
    return deduce_interval(low, high);
}

std::vector<int> SweepPlan::covered() const {
    std::set<int> ks;
    for (const auto& c : cases) ks.insert(c.k);
    for (auto [lo, hi] : intervals)
        for (int k = lo; k <= hi; ++k) ks.insert(k);
    return {ks.begin(), ks.end()};
}

std::vector<int> SweepPlan::representatives() const {
    std::vector<int> all = covered();
    all.insert(all.end(), skipped.begin(), skipped.end());
    std::sort(all.begin(), all.end());
    if (all.empty()) return {};
    const int lo = all.front(), hi = all.back();
    std::vector<int> reps;
    const int first = std::clamp(n + 1, lo, hi);
    for (int k : {first, (first + hi) / 2, hi})
        if (std::find(reps.begin(), reps.end(), k) == reps.end()) reps.push_back(k);
    return reps;
}

namespace {

// Largest matrix (rows * cols) the case would build, at its default truncation.
double largest_matrix(int n, int D, int k, int trunc) {
    double best = 0;
    for (int e = D; e <= trunc; ++e) {
        const double rows = static_cast<double>(k) * binomial(n + e - D - 1, e - D).convert_to<double>();
        best = std::max(best, rows * binomial(n + e - 1, e).convert_to<double>());
    }
    return best;
}

// Largest e such that the conjectured coefficients through e all equal the
// full-row-rank count C(n+e-1, e) - k C(n+e-D-1, e-D).
int predicted_independence_degree(int n, int D, int k, int trunc) {
    const TruncatedSeries conj = conjectured_series(DegreeList::uniform(n, D, k), trunc);
    int best = -1;
    for (int e = 0; e <= trunc; ++e) {
        const BigInt rowrank = binomial(n + e - 1, e) - BigInt(k) * binomial(n + e - D - 1, e - D);
        if (rowrank < 0 || conj.at(e) != rowrank) break;
        best = e;
    }
    return best;
}

}  // namespace

SweepPlan plan_sweep(int n, int d, int m, int k_first, int k_last, const CaseSpec& base, std::size_t matrix_budget,
                     int trunc_cap) {
    const int D = m * d;
    if (k_first < 1 || k_first > k_last || BigInt(k_last) > monomial_count(n, D))
        throw InvalidParams("k range must lie within [1, " + monomial_count(n, D).str() + "]");
    SweepPlan plan;
    plan.n = n;
    plan.d = d;
    plan.m = m;

    auto trunc_of = [&](int k) -> int {
        try {
            return default_truncation(DegreeList::uniform(n, D, k), trunc_cap);
        } catch (const CapExceeded&) {
            return -1;
        }
    };
    auto fits = [&](int k, int trunc) {
        return trunc >= 0 && largest_matrix(n, D, k, trunc) <= static_cast<double>(matrix_budget);
    };
    auto add_case = [&](int k, int trunc) {
        if (fits(k, trunc))
            plan.cases.push_back(with_k(base, n, d, m, k));
        else
            plan.skipped.push_back(k);
    };

    for (int k = k_first; k <= k_last;) {
        const int trunc = trunc_of(k);
        const int e_surj = trunc >= 0 ? conjectured_series(DegreeList::uniform(n, D, k), trunc).first_zero() : -1;
        if (k <= n || e_surj < 0) {
            add_case(k, trunc);
            ++k;
            continue;
        }
        int hi = k;
        while (hi + 1 <= k_last && trunc_of(hi + 1) == trunc) {
            const int e_ind = predicted_independence_degree(n, D, hi + 1, trunc);
            try {
                check_interval_pinning(n, D, k, hi + 1, {e_surj, e_ind});
            } catch (const DeductionInapplicable&) {
                break;
            }
            ++hi;
        }
        if (hi > k && fits(k, trunc) && fits(hi, trunc)) {
            plan.cases.push_back(with_k(base, n, d, m, k));
            plan.cases.push_back(with_k(base, n, d, m, hi));
            plan.intervals.emplace_back(k, hi);
        } else if (hi > k) {
            for (int j = k; j <= hi; ++j) plan.skipped.push_back(j);
        } else {
            add_case(k, trunc);
        }
        k = hi + 1;
    }
    return plan;
}

const std::vector<TableCell>& verified_table() {
    static const std::vector<TableCell> table{{4, 2, 2}, {4, 2, 3}, {4, 3, 2}, {4, 2, 4}, {4, 3, 3}, {5, 2, 2}};
    return table;
}

std::vector<std::pair<int, std::vector<int>>> corollary2_degrees() {
    std::vector<std::pair<int, std::vector<int>>> out;
    for (const auto& c : verified_table()) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == c.n; });
        if (it == out.end()) {
            out.emplace_back(c.n, std::vector<int>{});
            it = std::prev(out.end());
        }
        if (std::find(it->second.begin(), it->second.end(), c.d * c.m) == it->second.end())
            it->second.push_back(c.d * c.m);
    }
    for (auto& [n, ds] : out) std::sort(ds.begin(), ds.end());
    return out;
}

std::vector<VerificationRecord> verify_all(const std::vector<CaseSpec>& specs, const VerifyOptions& opts,
                                           unsigned workers) {
    std::vector<VerificationRecord> out(specs.size());
    detail::parallel_for(specs.size(), workers, [&](std::size_t i) {
        try {
            out[i] = verify_case(specs[i], opts);
        } catch (const ResourceLimit& e) {
            out[i].spec = specs[i];
            out[i].verdict = Verdict::Error;
            out[i].message = e.what();
        } catch (const CapExceeded& e) {
            out[i].spec = specs[i];
            out[i].verdict = Verdict::Error;
            out[i].message = e.what();
        }
    });
    return out;
}

std::vector<VerificationRecord> corollary2_suite(const SuiteOptions& opts) {
    std::vector<CaseSpec> specs;
    for (const auto& cell : verified_table()) {
        const int top = monomial_count_index(cell.n, cell.d * cell.m);
        const SweepPlan plan = plan_sweep(cell.n, cell.d, cell.m, 1, top, opts.base, opts.matrix_budget);
        if (opts.representatives_only) {
            for (int k : plan.representatives()) specs.push_back(with_k(opts.base, cell.n, cell.d, cell.m, k));
        } else {
            specs.insert(specs.end(), plan.cases.begin(), plan.cases.end());
        }
    }
    VerifyOptions vopts;
    vopts.macaulay.matrix_budget = opts.matrix_budget;
    return verify_all(specs, vopts, opts.workers);
}

MixComparison compare_pure_power_mix(int n, int d, int k, std::uint64_t seed, std::uint32_t prime,
                                     const VerifyOptions& opts) {
    if (k < n) throw InvalidParams("the mixed family needs k >= n");
    MixComparison cmp{n, d, k, seed, 0, {}, {}, false};
    cmp.trunc = default_truncation(DegreeList::uniform(n, d, k), opts.trunc_cap);
    FormFamily generic = random_power_family(n, d, 1, k, seed, prime);
    FormFamily mixed{n, prime, seed, {}};
    for (int i = 0; i < n; ++i) mixed.forms.push_back(ModPPoly::from_monomial(Monomial::variable(n, i, d), prime));
    for (int i = n; i < k; ++i) mixed.forms.push_back(generic.forms[i]);
    cmp.generic = hilbert_series_of_quotient(generic, cmp.trunc, opts.macaulay).series;
    cmp.pure_mixed = hilbert_series_of_quotient(mixed, cmp.trunc, opts.macaulay).series;
    cmp.equal = cmp.generic == cmp.pure_mixed;
    return cmp;
}

}  // namespace frob
