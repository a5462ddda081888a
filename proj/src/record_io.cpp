#include "frob/record_io.hpp"

#include <fstream>

#include "json.hpp"

namespace frob {

using nlohmann::json;

namespace {

json coeffs_json(const TruncatedSeries& s) {
    json a = json::array();
    for (const auto& c : s.coeffs) a.push_back(to_u64(c));
    return a;
}

TruncatedSeries series_from(const json& a, bool terminated) {
    std::vector<BigInt> c;
    for (const auto& v : a) c.emplace_back(v.get<std::uint64_t>());
    return TruncatedSeries(std::move(c), terminated);
}

bool same_request(const CaseSpec& a, const CaseSpec& b) {
    return a.n == b.n && a.d == b.d && a.m == b.m && a.k == b.k && a.prime == b.prime && a.seed == b.seed &&
           a.trials == b.trials && a.trunc == b.trunc;
}

}  // namespace

std::string record_to_json_line(const VerificationRecord& rec) {
    json j;
    const auto& s = rec.spec;
    j["n"] = s.n;
    j["d"] = s.d;
    j["m"] = s.m;
    j["k"] = s.k;
    j["prime"] = s.prime;
    j["seed"] = s.seed;
    j["trunc"] = s.trunc;
    j["trials"] = s.trials;
    j["conjectured"] = coeffs_json(rec.conjectured);
    j["conjectured_terminated"] = rec.conjectured.terminated;
    j["computed"] = coeffs_json(rec.computed);
    j["computed_terminated"] = rec.computed.terminated;
    j["verdict"] = to_string(rec.verdict);
    j["seeds"] = rec.seeds_tried;
    json ranks = json::array();
    for (const auto& dg : rec.degrees)
        ranks.push_back({{"degree", dg.degree}, {"rows", dg.rows}, {"cols", dg.cols}, {"rank", dg.rank},
                         {"computed", dg.computed}});
    j["ranks"] = std::move(ranks);
    j["rank_calls"] = rec.rank_calls;
    j["millis"] = rec.millis;
    j["version"] = rec.version;
    if (!rec.message.empty()) j["message"] = rec.message;
    return j.dump();
}

VerificationRecord record_from_json_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
        VerificationRecord rec;
        auto& s = rec.spec;
        s.n = j.at("n");
        s.d = j.at("d");
        s.m = j.at("m");
        s.k = j.at("k");
        s.prime = j.at("prime");
        s.seed = j.at("seed");
        s.trunc = j.at("trunc");
        s.trials = j.value("trials", kDefaultTrials);
        rec.conjectured = series_from(j.at("conjectured"), j.value("conjectured_terminated", false));
        rec.computed = series_from(j.at("computed"), j.value("computed_terminated", false));
        rec.verdict = parse_verdict(j.at("verdict"));
        rec.seeds_tried = j.value("seeds", std::vector<std::uint64_t>{});
        for (const auto& r : j.value("ranks", json::array()))
            rec.degrees.push_back(DegreeStats{r.at("degree"), r.at("rows"), r.at("cols"), r.at("rank"),
                                              r.value("computed", true)});
        rec.rank_calls = j.value("rank_calls", std::size_t{0});
        rec.millis = j.value("millis", 0.0);
        rec.version = j.value("version", std::string{});
        rec.message = j.value("message", std::string{});
        return rec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad record line: ") + e.what());
    }
}

RecordCache::RecordCache(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<VerificationRecord> RecordCache::load() const {
    std::vector<VerificationRecord> out;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(record_from_json_line(line));
    }
    return out;
}

std::optional<VerificationRecord> RecordCache::find(const CaseSpec& spec) const {
    for (auto& rec : load()) {
        if (rec.verdict == Verdict::Verified && same_request(rec.spec, spec)) {
            rec.from_cache = true;
            return rec;
        }
    }
    return std::nullopt;
}

void RecordCache::append(const VerificationRecord& rec) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open cache file " + path_.string());
    out << record_to_json_line(rec) << '\n';
}

}  // namespace frob
