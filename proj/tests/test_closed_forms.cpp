#include <doctest.h>

#include <stdexcept>

#include "topolab/families.hpp"

using namespace topolab;

TEST_CASE("family names round-trip") {
    for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(parse_family("join-stars"), std::invalid_argument);
}

TEST_CASE("domain checks name the violated constraint") {
    CHECK_THROWS_AS(symbolic_partition({Family::JoinPaths, 1, 5}), std::domain_error);
    CHECK_THROWS_AS(symbolic_partition({Family::JoinCycles, 2, 3}), std::domain_error);
    CHECK_THROWS_AS(symbolic_partition({Family::CoronaCycles, 3, 2}), std::domain_error);
    CHECK_THROWS_AS(build_family_graph({Family::JoinComplete, 0, 1}), std::domain_error);
    try {
        symbolic_partition({Family::JoinCycles, 2, 3});
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("join-cycles requires r >= 3") != std::string::npos);
    }
    // cycle-complete accepts s = 1 (no clique edges)
    CHECK_NOTHROW(symbolic_partition({Family::JoinCycleComplete, 3, 1}));
}

TEST_CASE("symbolic partitions at spot points") {
    CHECK(symbolic_partition({Family::JoinPaths, 2, 3}) ==
          EdgeClassPartition{{{3, 4}, 6}, {{4, 4}, 3}});

    CHECK(symbolic_partition({Family::JoinCycles, 3, 4}) ==
          EdgeClassPartition{{{5, 5}, 4}, {{5, 6}, 12}, {{6, 6}, 3}});

    CHECK(symbolic_partition({Family::CoronaPaths, 2, 2}) ==
          EdgeClassPartition{{{2, 2}, 2}, {{2, 3}, 4}, {{3, 3}, 1}});

    CHECK(symbolic_partition({Family::CoronaCycles, 3, 3}) ==
          EdgeClassPartition{{{3, 3}, 9}, {{3, 5}, 9}, {{5, 5}, 3}});

    // same-degree collisions merge: P_2 + P_2 = K_4 is a single class
    CHECK(symbolic_partition({Family::JoinPaths, 2, 2}) == EdgeClassPartition{{{3, 3}, 6}});
}

TEST_CASE("closed_index golden values") {
    CHECK(closed_index({Family::JoinPaths, 2, 2}, IndexKind::ESO) ==
          RadicalSum::term(Rational(108), 2));
    CHECK(closed_index({Family::JoinPaths, 2, 2}, IndexKind::EU) ==
          RadicalSum::term(Rational(18), 3));

    CHECK(closed_index({Family::JoinPaths, 2, 3}, IndexKind::ESO) ==
          RadicalSum::term(Rational(210), 1) + RadicalSum::term(Rational(96), 2));

    CHECK(closed_index({Family::CoronaPaths, 2, 2}, IndexKind::ESO) ==
          RadicalSum::term(Rational(34), 2) + RadicalSum::term(Rational(20), 13));
    CHECK(closed_index({Family::CoronaPaths, 2, 2}, IndexKind::EU) ==
          RadicalSum::term(Rational(7), 3) + RadicalSum::term(Rational(4), 19));

    // corona of triangles: 63 + 42*sqrt(3)
    CHECK(closed_index({Family::CoronaCycles, 3, 3}, IndexKind::EU) ==
          RadicalSum::term(Rational(63), 1) + RadicalSum::term(Rational(42), 3));

    // C_3 + K_3 = K_6
    CHECK(closed_index({Family::JoinCycleComplete, 3, 3}, IndexKind::ESO) ==
          RadicalSum::term(Rational(750), 2));
}

TEST_CASE("join-complete closed form equals the explicit formula") {
    for (int r = 1; r <= 8; ++r)
        for (int s = 1; s <= 8; ++s) {
            const long long t = r + s;
            CHECK(closed_index({Family::JoinComplete, r, s}, IndexKind::ESO) ==
                  RadicalSum::term(Rational(t * (t - 1) * (t - 1) * (t - 1)), 2));
            CHECK(closed_index({Family::JoinComplete, r, s}, IndexKind::EU) ==
                  RadicalSum::term(Rational(t * (t - 1) * (t - 1), 2), 3));
        }
    CHECK(closed_index({Family::JoinComplete, 3, 3}, IndexKind::ESO) ==
          RadicalSum::term(Rational(750), 2));
    CHECK(closed_index({Family::JoinComplete, 3, 3}, IndexKind::EU) ==
          RadicalSum::term(Rational(75), 3));
}

TEST_CASE("partition fidelity and closed-form exactness on a spot grid") {
    for (Family f : kAllFamilies) {
        const int r0 = family_min_r(f), s0 = family_min_s(f);
        for (int r = r0; r <= r0 + 4; ++r)
            for (int s = s0; s <= s0 + 4; ++s) {
                const FamilySpec spec{f, r, s};
                Graph g = build_family_graph(spec);
                CHECK((long long)g.vertex_count() == family_order(spec));
                CHECK((long long)g.edge_count() == family_size(spec));
                CHECK(symbolic_partition(spec) == edge_partition(g));
                for (IndexKind k : {IndexKind::ESO, IndexKind::EU, IndexKind::SO})
                    CHECK(closed_index(spec, k) == index_exact(g, k));
            }
    }
}

TEST_CASE("case boundaries r=2,3 and s=2,3 yield no negative counts") {
    for (Family f : {Family::JoinPaths, Family::CoronaPaths}) {
        for (int r : {2, 3, 4})
            for (int s : {2, 3, 4}) {
                for (const auto& [pair, count] : symbolic_partition({f, r, s})) {
                    CHECK(count > 0);
                    CHECK(pair.first <= pair.second);
                }
            }
    }
}

TEST_CASE("partition totals match the size formulas") {
    for (Family f : kAllFamilies) {
        for (int r = family_min_r(f); r <= family_min_r(f) + 6; ++r)
            for (int s = family_min_s(f); s <= family_min_s(f) + 6; ++s) {
                long long total = 0;
                for (const auto& [pair, count] : symbolic_partition({f, r, s})) total += count;
                CHECK(total == family_size({f, r, s}));
            }
    }
}
