#include <doctest.h>

#include "slopekit/census_io.hpp"
#include "slopekit/error.hpp"

using namespace slopekit;

namespace {

bool same_records(const std::vector<CensusRecord>& a, const std::vector<CensusRecord>& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!census_same_pair(a[i], b[i]) || a[i].verified != b[i].verified) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("TSV output") {
    const std::vector<CensusRecord> one{
        {TorusKnot(5, 13), 133, 2, CableKnot(2, 33, TorusKnot(5, 3)), true}};
    CHECK(census_to_tsv(one) == std::string(kCensusHeader) + "\n5\t13\t133\t2\t2\t33\t3\t5\ttrue\n");
    CHECK(census_to_tsv({}) == std::string(kCensusHeader) + "\n");
    CHECK(census_to_jsonl(one) ==
          "{\"r\":5,\"s\":13,\"p\":133,\"q\":2,\"w\":2,\"c\":33,\"companion_r\":3,\"companion_b\":5,"
          "\"verified\":true}\n");
    CHECK(census_to_jsonl({}).empty());
}

TEST_CASE("round trips") {
    const std::vector<CensusRecord> census = cable_census(60, 5);
    REQUIRE_FALSE(census.empty());
    CHECK(same_records(census_from_tsv(census_to_tsv(census)), census));
    CHECK(same_records(census_from_jsonl(census_to_jsonl(census)), census));
    CHECK(census_to_tsv(census_from_jsonl(census_to_jsonl(census))) == census_to_tsv(census));
}

TEST_CASE("malformed input") {
    const std::string header = std::string(kCensusHeader) + "\n";
    CHECK_THROWS_AS(census_from_tsv(""), DomainError);
    CHECK_THROWS_AS(census_from_tsv("r\ts\n"), DomainError);
    CHECK_THROWS_AS(census_from_tsv(header + "5\t13\t133\n"), DomainError);
    CHECK_THROWS_AS(census_from_tsv(header + "5\t13\t133\t2\t2\t33\t3\t5\tyes\n"), DomainError);
    CHECK_THROWS_AS(census_from_tsv(header + "5\tx\t133\t2\t2\t33\t3\t5\ttrue\n"), DomainError);
    CHECK_THROWS_AS(census_from_tsv(header + "5\t10\t133\t2\t2\t33\t3\t5\ttrue\n"), DomainError);
    CHECK(census_from_tsv(header).empty());
    CHECK_THROWS_AS(census_from_jsonl("{\"r\":5}\n"), DomainError);
    CHECK_THROWS_AS(census_from_jsonl("not json\n"), DomainError);
    CHECK_THROWS_AS(census_from_jsonl("{\"r\":\"5\",\"s\":13,\"p\":133,\"q\":2,\"w\":2,\"c\":33,\"companion_r\":3,"
                                      "\"companion_b\":5,\"verified\":true}\n"),
                    DomainError);
}
