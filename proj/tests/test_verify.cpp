#include <doctest.h>

#include <string>
#include <tuple>

#include "topolab/report_json.hpp"
#include "topolab/verify.hpp"

using namespace topolab;

TEST_CASE("single-point sweep reproduces the golden join of two P_2") {
    SweepOptions opts;
    opts.families = {Family::JoinPaths};
    opts.kinds = {IndexKind::ESO, IndexKind::EU};
    opts.r_max = 2;
    opts.s_max = 2;
    SweepReport report = run_sweep(opts);
    REQUIRE(report.records.size() == 2);
    CHECK(report.records[0].kind == IndexKind::ESO);
    CHECK(report.records[0].oracle == "108*sqrt(2)");
    CHECK(report.records[0].closed == "108*sqrt(2)");
    CHECK(report.records[0].exact_equal);
    CHECK(report.records[0].float_delta == 0.0);
    CHECK(report.records[1].oracle == "18*sqrt(3)");
    CHECK(report.all_exact);
}

TEST_CASE("record count is grid size x families x kinds") {
    SweepOptions opts;
    opts.r_max = 6;
    opts.s_max = 7;
    opts.kinds = {IndexKind::ESO, IndexKind::EU, IndexKind::SO};
    SweepReport report = run_sweep(opts);
    std::size_t expected = 0;
    for (Family f : kAllFamilies)
        expected += (std::size_t)(6 - sweep_min_r(f) + 1) * (7 - sweep_min_s(f) + 1) * 3;
    CHECK(report.records.size() == expected);
    CHECK(report.all_exact);
    // records sorted by (family, kind, r, s)
    for (std::size_t i = 1; i < report.records.size(); ++i) {
        const auto& a = report.records[i - 1];
        const auto& b = report.records[i];
        auto key = [](const VerificationRecord& rec) {
            return std::tuple{(int)rec.family, (int)rec.kind, rec.r, rec.s};
        };
        CHECK(key(a) < key(b));
    }
}

TEST_CASE("grid bounds below a family minimum are rejected") {
    SweepOptions opts;
    opts.families = {Family::JoinCycles};
    opts.r_max = 2;
    opts.s_max = 5;
    CHECK_THROWS_AS(run_sweep(opts), std::invalid_argument);
}

TEST_CASE("csv output is deterministic and carries the fixed columns") {
    SweepOptions opts;
    opts.families = {Family::JoinPaths, Family::CoronaCycles};
    opts.r_max = 5;
    opts.s_max = 5;
    opts.audit = true;
    std::string first = to_csv(run_sweep(opts));
    std::string second = to_csv(run_sweep(opts));
    CHECK(first == second);
    CHECK(first.rfind("family,kind,r,s,exact_equal,float_delta,oracle,closed\n", 0) == 0);
    CHECK(first.find("join-paths,eso,2,2,true,0.000000000,108*sqrt(2),108*sqrt(2)\n") !=
          std::string::npos);

    std::string json1 = to_json(run_sweep(opts));
    std::string json2 = to_json(run_sweep(opts));
    CHECK(json1 == json2);
}

TEST_CASE("parallel sweep output equals single-threaded output") {
    SweepOptions opts;
    opts.r_max = 8;
    opts.s_max = 8;
    opts.audit = true;
    opts.threads = 1;
    std::string serial = to_csv(run_sweep(opts));
    opts.threads = 4;
    std::string parallel = to_csv(run_sweep(opts));
    CHECK(serial == parallel);
}

TEST_CASE("audit hits on the default grid are exactly the known errata") {
    SweepOptions opts;
    opts.audit = true;
    opts.r_max = 10;
    opts.s_max = 10;
    SweepReport report = run_sweep(opts);
    CHECK(report.all_exact);
    CHECK(!report.errata_hits.empty());
    CHECK(report.audit_clean);
    for (const ErrataHit& hit : report.errata_hits) {
        CHECK(hit.known);
        CHECK(hit.delta > kAuditTolerance);
    }
}

TEST_CASE("seeded fault injection flips the verdict") {
    SweepOptions opts;
    opts.r_max = 6;
    opts.s_max = 6;
    SweepReport clean = run_sweep(opts);
    CHECK(clean.all_exact);

    opts.fault_seed = 20240811ull;
    SweepReport faulty = run_sweep(opts);
    CHECK(!faulty.all_exact);
    // exactly one record diverges, and its float delta is visible
    int bad = 0;
    for (const VerificationRecord& rec : faulty.records)
        if (!rec.exact_equal) {
            ++bad;
            CHECK(rec.float_delta > 1e-12);
        }
    CHECK(bad == 1);
}

TEST_CASE("summary rows add up") {
    SweepOptions opts;
    opts.families = {Family::JoinComplete};
    opts.kinds = {IndexKind::ESO};
    opts.r_max = 4;
    opts.s_max = 4;
    SweepReport report = run_sweep(opts);
    REQUIRE(report.summary.size() == 1);
    CHECK(report.summary[0].pass == 9);
    CHECK(report.summary[0].fail == 0);
}
