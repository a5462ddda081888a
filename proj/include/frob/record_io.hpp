#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "frob/verifier.hpp"

namespace frob {

// One JSON object per record: n, d, m, k, prime, seed, trunc, trials,
// conjectured, computed, terminated flags, verdict, seeds, ranks, millis,
// version.
std::string record_to_json_line(const VerificationRecord& rec);
VerificationRecord record_from_json_line(const std::string& line);

// Append-only JSON-lines file of records. Lookups match on the requested
// spec: n, d, m, k, prime, seed, trials and the resolved trunc.
class RecordCache {
public:
    explicit RecordCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }
    // Verified record for this spec, if present.
    std::optional<VerificationRecord> find(const CaseSpec& spec) const;
    void append(const VerificationRecord& rec);
    std::vector<VerificationRecord> load() const;

private:
    std::filesystem::path path_;
};

}  // namespace frob
