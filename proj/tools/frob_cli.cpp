// frob: Hilbert series of quotients by generic forms, and case-by-case
// verification of the expected (minimal) series over a prime field.
//
// Exit codes: 0 all verdicts Verified, 2 some case NotAttained, 3 usage,
// resource or internal error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frob/constructions.hpp"
#include "frob/record_io.hpp"
#include "frob/verifier.hpp"

using namespace frob;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotAttained = 2;
constexpr int kExitError = 3;

struct Config {
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
    int trunc_cap = kDefaultTruncationCap;
    int trials = kDefaultTrials;
    unsigned workers = 1;
    std::size_t matrix_budget = kDefaultMatrixBudget;
    std::string cache;

    void validate() const {
        PrimeField check(prime);
        if (trunc_cap < 1 || trials < 1 || workers < 1 || matrix_budget < 1)
            throw InvalidParams("configuration values must be positive");
    }
    CaseSpec base() const {
        CaseSpec s;
        s.prime = prime;
        s.seed = seed;
        s.trials = trials;
        return s;
    }
    VerifyOptions verify_options() const {
        VerifyOptions o;
        o.trunc_cap = trunc_cap;
        o.macaulay.matrix_budget = matrix_budget;
        o.macaulay.workers = workers;
        return o;
    }
};

// "2x5" -> five 2s; "2,2,3" -> as listed; both combine: "14x26,3".
std::vector<int> parse_degrees(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto x = item.find('x');
        try {
            const int d = std::stoi(item.substr(0, x));
            const int reps = x == std::string::npos ? 1 : std::stoi(item.substr(x + 1));
            if (reps < 0) throw InvalidParams("negative repeat count in '" + item + "'");
            out.insert(out.end(), reps, d);
        } catch (const std::logic_error&) {
            throw InvalidParams("bad degree list item '" + item + "'");
        }
    }
    return out;
}

std::vector<BigInt> parse_coeffs(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw InvalidParams("bad coefficient '" + item + "'");
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Cache-aware verification of many specs; returns records in order.
std::vector<VerificationRecord> run_cases(const std::vector<CaseSpec>& specs, const Config& cfg) {
    const VerifyOptions vopts = cfg.verify_options();
    std::optional<RecordCache> cache;
    if (!cfg.cache.empty()) cache.emplace(cfg.cache);

    std::vector<VerificationRecord> out(specs.size());
    std::vector<CaseSpec> todo;
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CaseSpec resolved = specs[i];
        if (cache) {
            try {
                if (resolved.trunc < 0)
                    resolved.trunc = default_truncation(resolved.degree_list(), cfg.trunc_cap);
                if (auto hit = cache->find(resolved)) {
                    out[i] = std::move(*hit);
                    continue;
                }
            } catch (const CapExceeded&) {
                // verify_all reports it as an Error record.
            }
        }
        todo.push_back(specs[i]);
        slots.push_back(i);
    }
    auto fresh = verify_all(todo, vopts, cfg.workers);
    for (std::size_t j = 0; j < fresh.size(); ++j) {
        if (cache && fresh[j].verdict != Verdict::Error) cache->append(fresh[j]);
        out[slots[j]] = std::move(fresh[j]);
    }
    return out;
}

void report_telemetry(const std::vector<VerificationRecord>& recs) {
    std::size_t ranks = 0, hits = 0;
    for (const auto& r : recs) {
        ranks += r.rank_computations();
        hits += r.from_cache;
    }
    std::cerr << "rank computations: " << ranks << " (cache hits: " << hits << ")\n";
}

int exit_code_for(const std::vector<VerificationRecord>& recs) {
    int code = kExitOk;
    for (const auto& r : recs) {
        if (r.verdict == Verdict::Error) return kExitError;
        if (r.verdict == Verdict::NotAttained) code = kExitNotAttained;
    }
    return code;
}

void print_record(const VerificationRecord& r, bool json) {
    if (json) {
        std::cout << record_to_json_line(r) << '\n';
        return;
    }
    const auto& s = r.spec;
    std::cout << "case        n=" << s.n << " d=" << s.d << " m=" << s.m << " k=" << s.k << " trunc=" << s.trunc
              << " prime=" << s.prime << " seed=" << s.seed << '\n'
              << "conjectured " << to_ascii(r.conjectured) << '\n'
              << "computed    " << (r.computed.coeffs.empty() ? "-" : to_ascii(r.computed)) << '\n'
              << "verdict     " << to_string(r.verdict) << (r.from_cache ? " (cached)" : "") << '\n';
    if (!r.message.empty()) std::cout << "note        " << r.message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert series of ideals generated by generic forms"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--prime", cfg.prime, "Prime modulus below 2^31")->envname("FROB_PRIME");
    app.add_option("--seed", cfg.seed, "Seed for random forms")->envname("FROB_SEED");
    app.add_option("--cap", cfg.trunc_cap, "Truncation cap for default truncation");
    app.add_option("--trials", cfg.trials, "Random specializations tried before NotAttained");
    app.add_option("--workers", cfg.workers, "Worker threads");
    app.add_option("--budget", cfg.matrix_budget, "Largest Macaulay matrix, in entries");
    app.add_option("--cache", cfg.cache, "JSON-lines record cache")->envname("FROB_CACHE");

    // series
    auto* series = app.add_subcommand("series", "Print the expected series ⌈prod(1-t^d_i)/(1-t)^n⌉");
    int s_n = 0, s_d = 0, s_m = 1, s_k = 0, s_trunc = -1;
    std::string s_deg;
    bool s_raw = false;
    series->add_option("--n", s_n, "Variables")->required();
    series->add_option("--deg", s_deg, "Degrees, e.g. 2x5 or 2,2,3");
    series->add_option("--d", s_d, "Base degree (with --k)");
    series->add_option("--m", s_m, "Power (with --d, --k)");
    series->add_option("--k", s_k, "Number of forms (with --d)");
    series->add_option("--trunc", s_trunc, "Truncation degree");
    series->add_flag("--raw", s_raw, "Also print the expansion before the ceiling");

    // verify
    auto* verify = app.add_subcommand("verify", "Verify one case");
    CaseSpec v_spec;
    std::string v_dump;
    bool v_json = false;
    verify->add_option("--n", v_spec.n)->required();
    verify->add_option("--d", v_spec.d)->required();
    verify->add_option("--m", v_spec.m, "Power of each form");
    verify->add_option("--k", v_spec.k)->required();
    verify->add_option("--trunc", v_spec.trunc);
    verify->add_option("--dump-forms", v_dump, "Write the first trial's forms to this file");
    verify->add_flag("--json", v_json, "Print the record as a JSON line");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Plan and verify a range of k");
    int w_n = 0, w_d = 0, w_m = 1, w_from = 1, w_to = -1;
    bool w_reps = false;
    sweep->add_option("--n", w_n)->required();
    sweep->add_option("--d", w_d)->required();
    sweep->add_option("--m", w_m);
    sweep->add_option("--k-from", w_from);
    sweep->add_option("--k-to", w_to, "Default: number of monomials of degree d*m");
    sweep->add_flag("--representatives", w_reps, "Only n+1, the midpoint and the top of the range");

    // interval
    auto* interval = app.add_subcommand("interval", "Verify the endpoints of an interval of k and deduce the rest");
    int i_n = 0, i_d = 0, i_m = 1, i_lo = 0, i_hi = 0;
    interval->add_option("--n", i_n)->required();
    interval->add_option("--d", i_d)->required();
    interval->add_option("--m", i_m);
    interval->add_option("--k-low", i_lo)->required();
    interval->add_option("--k-high", i_hi)->required();

    // construct
    auto* construct = app.add_subcommand("construct", "Monomial family: all degree-d monomials except x1*xj^(d-1) for 2 <= j <= l");
    FrobergFamilyParams c_params;
    construct->add_option("--n", c_params.n)->required();
    construct->add_option("--d", c_params.d)->required();
    construct->add_option("--l", c_params.l)->required();

    // search
    auto* search = app.add_subcommand("search", "Search for k monomials of degree d with a given Hilbert function");
    int q_n = 0, q_d = 0, q_k = 0;
    std::string q_target;
    bool q_open = false, q_no_prune = false;
    std::uint64_t q_max = SearchOptions{}.budget;
    search->add_option("--n", q_n)->required();
    search->add_option("--d", q_d)->required();
    search->add_option("--k", q_k)->required();
    search->add_option("--target", q_target, "Comma-separated coefficients; default: the expected series");
    search->add_flag("--open", q_open, "Target is not terminated (no zero extension)");
    search->add_flag("--no-prune", q_no_prune, "Disable pure-power forcing and symmetry reduction");
    search->add_option("--max-candidates", q_max);

    // table
    auto* table = app.add_subcommand("table", "Re-verify the table of (n, d, m) cells");
    std::string t_budget = "small";
    table->add_option("--budget", t_budget, "small: desk cells only; full: all six cells")
        ->check(CLI::IsMember({"small", "full"}));

    // hf
    auto* hf = app.add_subcommand("hf", "Hilbert function of a monomial quotient");
    int h_n = 0, h_max = 0;
    std::string h_file;
    hf->add_option("--n", h_n)->required();
    hf->add_option("--ideal", h_file, "One generator per line, e.g. x1^2*x3")->required();
    hf->add_option("--max-deg", h_max)->required();

    // compare
    auto* compare = app.add_subcommand("compare", "Experimental: (g_1..g_k) against (x_i^d, g_{n+1}..g_k)");
    int p_n = 0, p_d = 0, p_k = 0;
    compare->add_option("--n", p_n)->required();
    compare->add_option("--d", p_d)->required();
    compare->add_option("--k", p_k)->required();

    // forms
    auto* forms = app.add_subcommand("forms", "Print a random family in the form text format");
    int f_n = 0, f_d = 0, f_m = 1, f_k = 0;
    forms->add_option("--n", f_n)->required();
    forms->add_option("--d", f_d)->required();
    forms->add_option("--m", f_m);
    forms->add_option("--k", f_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        cfg.validate();

        if (*series) {
            std::vector<int> degs = parse_degrees(s_deg);
            if (s_deg.empty()) {
                if (s_d < 1 || s_k < 0) throw InvalidParams("give --deg, or --d and --k");
                degs.assign(s_k, s_d * s_m);
            }
            const DegreeList spec(s_n, degs);
            const int trunc = s_trunc >= 0 ? s_trunc : default_truncation(spec, cfg.trunc_cap);
            const auto raw = expand_rational(spec, trunc);
            const auto ceil = ceiling(raw);
            std::cout << to_ascii(ceil) << '\n' << to_json_array(ceil.coeffs) << '\n';
            if (s_raw) std::cout << to_ascii(raw) << '\n' << to_json_array(raw.coeffs) << '\n';
            return kExitOk;
        }

        if (*verify) {
            CaseSpec s = cfg.base();
            s.n = v_spec.n;
            s.d = v_spec.d;
            s.m = v_spec.m;
            s.k = v_spec.k;
            s.trunc = v_spec.trunc;
            if (!v_dump.empty()) {
                std::ofstream out(v_dump);
                out << write_forms(random_power_family(s.n, s.d, s.m, s.k, s.seed, s.prime));
            }
            const auto recs = run_cases({s}, cfg);
            print_record(recs[0], v_json);
            report_telemetry(recs);
            return exit_code_for(recs);
        }

        if (*sweep) {
            const int top = w_to > 0 ? w_to : static_cast<int>(monomial_count_index(w_n, w_d * w_m));
            const SweepPlan plan = plan_sweep(w_n, w_d, w_m, w_from, top, cfg.base(), cfg.matrix_budget, cfg.trunc_cap);
            std::vector<CaseSpec> specs;
            if (w_reps) {
                for (int k : plan.representatives()) {
                    CaseSpec s = cfg.base();
                    s.n = w_n, s.d = w_d, s.m = w_m, s.k = k;
                    specs.push_back(s);
                }
            } else {
                specs = plan.cases;
            }
            const auto recs = run_cases(specs, cfg);
            std::map<int, std::string> status;  // k -> "method verdict"
            std::map<int, const VerificationRecord*> by_k;
            for (const auto& r : recs) {
                by_k[r.spec.k] = &r;
                status[r.spec.k] = "direct    " + to_string(r.verdict);
            }
            int code = exit_code_for(recs);
            if (!w_reps) {
                for (auto [lo, hi] : plan.intervals) {
                    try {
                        const auto w = deduce_interval(*by_k.at(lo), *by_k.at(hi));
                        for (int k : w.deduced) status[k] = "deduced   Verified";
                    } catch (const DeductionInapplicable& e) {
                        for (int k = lo + 1; k < hi; ++k) status[k] = "unproven  -";
                        std::cerr << "interval " << lo << ".." << hi << ": " << e.what() << '\n';
                        code = std::max(code, kExitNotAttained);
                    }
                }
                for (int k : plan.skipped) {
                    status[k] = "skipped   over budget";
                    code = kExitError;
                }
            }
            std::cout << std::setw(5) << "k" << "  method    verdict      series\n";
            for (const auto& [k, st] : status) {
                std::cout << std::setw(5) << k << "  ";
                if (auto it = by_k.find(k); it != by_k.end())
                    std::cout << std::left << std::setw(21) << st << std::right << "  " << to_ascii(it->second->conjectured);
                else
                    std::cout << st;
                std::cout << '\n';
            }
            std::cout << "cases run: " << recs.size() << ", intervals: " << (w_reps ? 0 : plan.intervals.size())
                      << ", k covered: " << status.size() << '\n';
            report_telemetry(recs);
            return code;
        }

        if (*interval) {
            const auto w = verify_interval(i_n, i_d, i_m, i_lo, i_hi, cfg.base(), cfg.verify_options());
            print_record(w.low, false);
            if (i_hi != i_lo) print_record(w.high, false);
            std::cout << "surjective from degree " << w.e_surj << " at k=" << w.k_low
                      << "; full row rank through degree " << w.e_ind << " at k=" << w.k_high << '\n'
                      << "interval " << w.k_low << ".." << w.k_high << ": Verified (" << w.deduced.size()
                      << " deduced)\n";
            report_telemetry({w.low, w.high});
            return kExitOk;
        }

        if (*construct) {
            const auto ideal = froberg_monomial_ideal(c_params);
            std::cout << "# " << ideal.generators().size() << " generators\n" << write_ideal(ideal);
            const auto rep = check_theorem1(ideal, c_params.n, c_params.d);
            std::cout << "r = " << rep.r << ", n*r = " << BigInt(c_params.n) * rep.r
                      << " >= C(n+d, d+1) = " << rep.threshold << '\n'
                      << "series " << to_ascii(rep.predicted) << '\n'
                      << "matches expected series: " << (rep.matches_conjectured ? "yes" : "no")
                      << ", matches sieve: " << (rep.matches_sieve ? "yes" : "no") << '\n';
            return rep.matches_conjectured && rep.matches_sieve ? kExitOk : kExitNotAttained;
        }

        if (*search) {
            TruncatedSeries target;
            if (q_target.empty()) {
                const auto spec = DegreeList::uniform(q_n, q_d, q_k);
                target = conjectured_series(spec, default_truncation(spec, cfg.trunc_cap));
            } else {
                target = TruncatedSeries(parse_coeffs(q_target), !q_open);
            }
            SearchOptions opts;
            opts.prune = !q_no_prune;
            opts.budget = q_max;
            opts.progress = true;
            const auto r = exhaustive_monomial_search(q_n, q_d, q_k, target, opts);
            std::cout << "target " << to_ascii(target) << '\n';
            if (r.ideal)
                std::cout << "found\n" << write_ideal(*r.ideal);
            else
                std::cout << "none: no " << q_k << " monomials of degree " << q_d << " give this series\n";
            std::cout << "candidates examined: " << r.candidates_examined << '\n';
            return kExitOk;
        }

        if (*table) {
            const bool full = t_budget == "full";
            std::vector<CaseSpec> specs;
            std::vector<std::vector<int>> ks;
            for (const auto& c : verified_table()) {
                const bool stretch = (c.n == 4 && c.d == 2 && c.m == 4) || (c.n == 4 && c.d == 3 && c.m == 3);
                ks.emplace_back();
                if (stretch && !full) continue;
                const int top = static_cast<int>(monomial_count_index(c.n, c.d * c.m));
                for (int k : plan_sweep(c.n, c.d, c.m, 1, top, cfg.base(), cfg.matrix_budget, cfg.trunc_cap)
                                 .representatives()) {
                    CaseSpec s = cfg.base();
                    s.n = c.n, s.d = c.d, s.m = c.m, s.k = k;
                    specs.push_back(s);
                    ks.back().push_back(k);
                }
            }
            const auto recs = run_cases(specs, cfg);
            std::cout << " n  d  m  d*m  k tested       verdict\n";
            std::size_t next = 0;
            for (std::size_t i = 0; i < verified_table().size(); ++i) {
                const auto& c = verified_table()[i];
                std::string ktext, verdict = "not run (stretch; --budget full)";
                if (!ks[i].empty()) {
                    verdict = "Verified";
                    for (int k : ks[i]) {
                        const auto& r = recs[next++];
                        ktext += (ktext.empty() ? "" : ",") + std::to_string(k);
                        if (r.verdict != Verdict::Verified) verdict = to_string(r.verdict) + " at k=" + std::to_string(k);
                    }
                }
                std::cout << std::setw(2) << c.n << std::setw(3) << c.d << std::setw(3) << c.m << std::setw(5)
                          << c.d * c.m << "  " << std::left << std::setw(13) << (ktext.empty() ? "-" : ktext)
                          << std::right << "  " << verdict << '\n';
            }
            report_telemetry(recs);
            return exit_code_for(recs);
        }

        if (*hf) {
            const auto ideal = parse_ideal(read_file(h_file), h_n);
            const auto s = quotient_hilbert_function(ideal, h_max);
            std::cout << to_ascii(s) << '\n' << to_json_array(s.coeffs) << '\n';
            return kExitOk;
        }

        if (*compare) {
            const auto c = compare_pure_power_mix(p_n, p_d, p_k, cfg.seed, cfg.prime, cfg.verify_options());
            std::cout << "generic      " << to_ascii(c.generic) << '\n'
                      << "pure powers  " << to_ascii(c.pure_mixed) << '\n'
                      << "equal        " << (c.equal ? "yes" : "no") << " (experimental; not a verdict)\n";
            return kExitOk;
        }

        if (*forms) {
            std::cout << write_forms(random_power_family(f_n, f_d, f_m, f_k, cfg.seed, cfg.prime));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "frob: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "frob: internal error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
