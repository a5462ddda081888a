#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "frob/record_io.hpp"

using namespace frob;

TEST_SUITE("record_io") {

TEST_CASE("record round trip") {
    CaseSpec s;
    s.n = 3;
    s.d = 2;
    s.m = 2;
    s.k = 5;
    const auto rec = verify_case(s);
    const std::string line = record_to_json_line(rec);
    CHECK(line.find('\n') == std::string::npos);
    const auto back = record_from_json_line(line);
    CHECK(back.spec == rec.spec);
    CHECK(back.conjectured == rec.conjectured);
    CHECK(back.computed == rec.computed);
    CHECK(back.verdict == rec.verdict);
    CHECK(back.seeds_tried == rec.seeds_tried);
    CHECK(back.degrees == rec.degrees);
    CHECK(back.rank_calls == rec.rank_calls);
    CHECK(back.version == rec.version);
    CHECK(back.millis == doctest::Approx(rec.millis));
    CHECK_THROWS_AS(record_from_json_line("{\"n\": 3}"), ParseError);
    CHECK_THROWS_AS(record_from_json_line("not json"), ParseError);
}

TEST_CASE("cache lookup") {
    const auto path = std::filesystem::temp_directory_path() / "frob_cache_test.jsonl";
    std::filesystem::remove(path);
    RecordCache cache(path);
    CaseSpec s;
    s.n = 3;
    s.d = 1;
    s.m = 2;
    s.k = 4;
    auto rec = verify_case(s);
    CHECK_FALSE(cache.find(rec.spec).has_value());
    cache.append(rec);

    const auto hit = cache.find(rec.spec);
    REQUIRE(hit.has_value());
    CHECK(hit->from_cache);
    CHECK(hit->rank_computations() == 0);
    CHECK(hit->computed == rec.computed);

    auto other = rec.spec;
    other.seed += 1;
    CHECK_FALSE(cache.find(other).has_value());

    // Records that did not verify are never served from the cache.
    auto failed = rec;
    failed.spec.k = 5;
    failed.verdict = Verdict::NotAttained;
    cache.append(failed);
    CHECK_FALSE(cache.find(failed.spec).has_value());
    CHECK(cache.load().size() == 2);
    std::filesystem::remove(path);
}

}
