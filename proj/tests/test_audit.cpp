#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "topolab/audit.hpp"

using namespace topolab;

TEST_CASE("statement_case dispatch") {
    CHECK(statement_case({Family::JoinPaths, 2, 2}) == "r=s=2");
    CHECK(statement_case({Family::JoinPaths, 2, 7}) == "r=2,s>2");
    CHECK(statement_case({Family::CoronaPaths, 7, 2}) == "r>2,s=2");
    CHECK(statement_case({Family::CoronaPaths, 5, 5}) == "r,s>2");
    CHECK(statement_case({Family::JoinCycles, 3, 9}) == "all");
}

TEST_CASE("stated formulas that match the derived forms audit clean") {
    // join-complete matches for any r,s
    for (int r : {1, 2, 5, 11})
        for (int s : {1, 3, 8}) {
            AuditRecord rec = audit_statement({Family::JoinComplete, r, s}, IndexKind::ESO);
            CHECK(rec.delta <= kAuditTolerance);
            CHECK(!rec.known_discrepancy);
            rec = audit_statement({Family::JoinComplete, r, s}, IndexKind::EU);
            CHECK(rec.delta <= kAuditTolerance);
        }
    // join-cycles EU matches even though its ESO sibling does not
    AuditRecord rec = audit_statement({Family::JoinCycles, 4, 6}, IndexKind::EU);
    CHECK(rec.delta <= kAuditTolerance);
}

TEST_CASE("corona-cycles EU statement misses the rs factor") {
    AuditRecord rec = audit_statement({Family::CoronaCycles, 3, 3}, IndexKind::EU);
    CHECK(rec.known_discrepancy);
    CHECK(rec.delta > kAuditTolerance);
    // derived value is 63 + 42*sqrt(3); the stated one drops 3*sqrt(3)*(rs-1)
    CHECK(rec.normative_value == doctest::Approx(63.0 + 42.0 * std::sqrt(3.0)));
    CHECK(rec.statement_value ==
          doctest::Approx(rec.normative_value - 3.0 * std::sqrt(3.0) * 8.0));
}

TEST_CASE("cycle-complete ESO statement has the wrong clique term") {
    AuditRecord rec = audit_statement({Family::JoinCycleComplete, 3, 3}, IndexKind::ESO);
    CHECK(rec.known_discrepancy);
    CHECK(rec.delta > kAuditTolerance);
    CHECK(rec.normative_value == doctest::Approx(750.0 * std::sqrt(2.0)));
    // at s=1 the clique term vanishes and the statement agrees
    rec = audit_statement({Family::JoinCycleComplete, 5, 1}, IndexKind::ESO);
    CHECK(rec.delta <= kAuditTolerance);
}

TEST_CASE("every curated erratum diverges at its first_divergence point") {
    for (const ErratumEntry& e : builtin_errata()) {
        int r = 0, s = 0;
        CHECK(std::sscanf(e.first_divergence.c_str(), "r=%d,s=%d", &r, &s) == 2);
        FamilySpec spec{e.family, r, s};
        CHECK(statement_case(spec) == e.case_id);
        AuditRecord rec = audit_statement(spec, e.kind);
        CHECK(rec.known_discrepancy);
        CHECK(rec.delta > kAuditTolerance);
    }
}

TEST_CASE("no stated closed form for plain Sombor") {
    CHECK_THROWS_AS(statement_value({Family::JoinPaths, 2, 2}, IndexKind::SO),
                    std::invalid_argument);
}

TEST_CASE("shipped errata file matches the builtin table") {
    std::ifstream in(TOPOLAB_SOURCE_DIR "/data/errata.csv");
    REQUIRE(in.good());
    std::vector<ErratumEntry> fromFile = load_errata(in);
    CHECK(fromFile == builtin_errata());
}

TEST_CASE("errata loader handles quoting and rejects malformed lines") {
    std::istringstream ok(
        "family,kind,case,description,first_divergence\n"
        "# comment\n"
        "join-paths,eso,\"r,s>2\",\"terms, with commas\",\"r=3,s=3\"\n");
    std::vector<ErratumEntry> entries = load_errata(ok);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].family == Family::JoinPaths);
    CHECK(entries[0].case_id == "r,s>2");
    CHECK(entries[0].description == "terms, with commas");

    std::istringstream bad("join-paths,eso,all\n");
    CHECK_THROWS(load_errata(bad));
    std::istringstream bad2("join-paths,eso,\"all,oops\n");
    CHECK_THROWS(load_errata(bad2));
}
