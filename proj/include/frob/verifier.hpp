#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frob/error.hpp"
#include "frob/macaulay.hpp"
#include "frob/series.hpp"

namespace frob {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr int kDefaultTrials = 3;
inline constexpr std::uint64_t kDefaultSeed = 20170613;

// k forms g_i of degree d raised to the m-th power (m = 1: plain generic
// forms), n variables. trunc < 0 means "use default_truncation".
struct CaseSpec {
    int n = 3;
    int d = 2;
    int m = 1;
    int k = 1;
    int trunc = -1;
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t prime = kDefaultPrime;
    int trials = kDefaultTrials;

    int generator_degree() const { return m * d; }
    DegreeList degree_list() const { return DegreeList::uniform(n, m * d, k); }
    // Throws InvalidParams on out-of-range fields.
    void validate() const;
    bool operator==(const CaseSpec&) const = default;
};

enum class Verdict { Verified, NotAttained, Error };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct VerificationRecord {
    CaseSpec spec;  // as requested, with trunc resolved
    TruncatedSeries conjectured;
    TruncatedSeries computed;  // from the last trial run
    Verdict verdict = Verdict::Error;
    std::vector<std::uint64_t> seeds_tried;  // the last one produced `computed`
    std::vector<DegreeStats> degrees;
    std::string message;  // error text or notes
    double millis = 0;
    std::string version = kToolVersion;
    std::size_t rank_calls = 0;  // Macaulay ranks computed, over all trials
    bool from_cache = false;

    // Rank computations this process performed for the record: zero when it
    // was served from the cache.
    std::size_t rank_computations() const { return from_cache ? 0 : rank_calls; }
};

struct VerifyOptions {
    int trunc_cap = kDefaultTruncationCap;
    MacaulayOptions macaulay;
};

// Builds the generator family for one trial from that trial's seed.
using FamilyBuilder = std::function<FormFamily(const CaseSpec& spec, std::uint64_t seed)>;

// Random forms of degree d raised to the m-th power.
FamilyBuilder random_family_builder();

// Computes the quotient series for up to spec.trials seeds and compares it to
// ⌈(1 - t^{md})^k / (1 - t)^n⌉. A match at one specialization certifies the
// generic case (specialization can only enlarge the series, and the generic
// series is lex-minimal). A mismatch in every trial gives NotAttained, which
// is never a disproof. ResourceLimit propagates.
VerificationRecord verify_case(const CaseSpec& spec, const VerifyOptions& opts = {});
VerificationRecord verify_case_with(const CaseSpec& spec, const FamilyBuilder& builder,
                                    const VerifyOptions& opts = {});

// Coefficientwise lower bound C(n+e-1,e) - sum_g C(n+e-deg g-1, e-deg g).
std::vector<BigInt> first_order_bound(const DegreeList& spec, int trunc);

class DeductionInapplicable : public Error {
public:
    DeductionInapplicable(int degree, int k, const std::string& what)
        : Error(what), degree_(degree), k_(k) {}
    int degree() const { return degree_; }  // unpinned degree, -1 if none
    int k() const { return k_; }

private:
    int degree_;
    int k_;
};

// Every k in [k_low, k_high] gets the conjectured series: the k_low family
// fills R_e for e >= e_surj, which persists for more forms, and the k_high
// Macaulay matrix has full row rank at e_ind, which persists for fewer forms
// and in lower degrees. Both facts pin dim I_e for every e only when the gap
// between them closes; that is checked for each k.
struct IntervalWitness {
    int n = 0, d = 0, m = 1;
    int k_low = 0, k_high = 0;
    int e_surj = -1;  // first degree with zero quotient at k_low
    int e_ind = -1;   // largest degree with full row rank at k_high
    VerificationRecord low;
    VerificationRecord high;
    std::vector<int> deduced;  // k strictly inside, established by deduction
    bool verified = false;
};

struct IntervalInputs {
    int e_surj;
    int e_ind;
};

// Pinning check on its own, for a given surjectivity/independence degree
// pair. Throws DeductionInapplicable naming the first k and degree that fail.
void check_interval_pinning(int n, int generator_degree, int k_low, int k_high, IntervalInputs in);

// The deduction step on two endpoint records that already exist (same n, d,
// m, both Verified). verify_interval runs the endpoints and then calls this.
IntervalWitness deduce_interval(const VerificationRecord& low, const VerificationRecord& high);

IntervalWitness verify_interval(int n, int d, int m, int k_low, int k_high,
                                const CaseSpec& base = {}, const VerifyOptions& opts = {});

struct SweepPlan {
    int n = 0, d = 0, m = 1;
    std::vector<CaseSpec> cases;                  // verified directly
    std::vector<std::pair<int, int>> intervals;   // (k_low, k_high), endpoints in `cases`
    std::vector<int> skipped;                     // k whose largest matrix exceeds budget

    // k values covered by the plan, sorted.
    std::vector<int> covered() const;
    // n + 1, the midpoint and the top of the range, clipped to [k_first, k_last].
    std::vector<int> representatives() const;
};

// Groups consecutive k with the same conjectured termination degree into an
// interval when the pinning check passes on the conjectured values; everything
// else (including k <= n) is an individual case.
SweepPlan plan_sweep(int n, int d, int m, int k_first, int k_last, const CaseSpec& base = {},
                     std::size_t matrix_budget = kDefaultMatrixBudget, int trunc_cap = kDefaultTruncationCap);

// One cell of the table of verified (n, d, m) combinations.
struct TableCell {
    int n, d, m;
};
// The six table cells, in table order.
const std::vector<TableCell>& verified_table();
// Degrees d*m the table covers per n: {4: {4, 6, 8, 9}, 5: {4}}.
std::vector<std::pair<int, std::vector<int>>> corollary2_degrees();

struct SuiteOptions {
    std::size_t matrix_budget = kDefaultMatrixBudget;
    bool representatives_only = true;  // n+1, mid, top instead of the full plan
    CaseSpec base;
    unsigned workers = 1;
};

// verify_case over the table cells; cases over budget become Error records
// carrying the ResourceLimit message.
std::vector<VerificationRecord> corollary2_suite(const SuiteOptions& opts = {});

// Runs the specs concurrently (up to `workers`), returns records in input order.
std::vector<VerificationRecord> verify_all(const std::vector<CaseSpec>& specs, const VerifyOptions& opts,
                                           unsigned workers);

struct MixComparison {
    int n, d, k;
    std::uint64_t seed;
    int trunc;
    TruncatedSeries generic;     // (g_1, ..., g_k)
    TruncatedSeries pure_mixed;  // (x_1^d, ..., x_n^d, g_{n+1}, ..., g_k)
    bool equal = false;
};

// Experimental: compares the two families. Never feeds a verdict.
MixComparison compare_pure_power_mix(int n, int d, int k, std::uint64_t seed,
                                     std::uint32_t prime = kDefaultPrime, const VerifyOptions& opts = {});

}  // namespace frob
