#include "metallic/patterns.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace metallic;

namespace {

const PatternResult& find_result(const PatternReport& report,
                                 const std::string& id) {
    for (const auto& r : report.results) {
        if (r.id == id) {
            return r;
        }
    }
    FAIL("no pattern with id " << id);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("pattern ids are stable and unique", "[patterns]") {
    PatternReport report = check_patterns(3);
    std::set<std::string> ids;
    for (const auto& r : report.results) {
        ids.insert(r.id);
    }
    CHECK(ids.size() == report.results.size());
    CHECK(report.results.size() == 13);
    // the same set comes back for any bound
    PatternReport wider = check_patterns(9);
    REQUIRE(wider.results.size() == report.results.size());
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        CHECK(wider.results[i].id == report.results[i].id);
    }
}

TEST_CASE("column-0 ladder matches 2^i i!", "[patterns]") {
    PatternReport report = check_patterns(3);
    CHECK(find_result(report, "column0-ladder").passed);

    // the first few ladder values, straight from the triangles: 1, 2, 8, 48
    FamilyCache cache(3);
    const long long expected[] = {1, 2, 8, 48};
    for (std::size_t i = 0; i <= 3; ++i) {
        CHECK(to_integer(cache.poly(FamilyKind::F, i).coefficient(0)) ==
              expected[i]);
    }
}

TEST_CASE("t family step entries", "[patterns]") {
    PatternReport report = check_patterns(5);
    CHECK(find_result(report, "t-step-two").passed);

    // entries 2 at rows 1, 3, 5 just below the top degree
    FamilyCache cache(5);
    for (std::size_t i : {0u, 1u, 2u}) {
        CHECK(to_integer(cache.poly(FamilyKind::T, 2 * i + 1)
                             .coefficient(2 * i)) == 2);
    }
}

TEST_CASE("row bound zero passes vacuously", "[patterns]") {
    PatternReport report = check_patterns(0);
    CHECK(report.checked_rows == 0);
    CHECK(report.all_passed());
}

TEST_CASE("all patterns hold through row 30", "[patterns]") {
    PatternReport report = check_patterns(30);
    for (const auto& r : report.results) {
        INFO(r.id << ": " << r.description);
        REQUIRE(r.passed);
        REQUIRE(!r.counterexample.has_value());
    }
    CHECK(report.all_passed());
    CHECK(report.checked_rows == 30);
}
