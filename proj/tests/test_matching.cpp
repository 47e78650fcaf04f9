#include <doctest.h>

#include "test_support.hpp"
#include "wilf/enumeration.hpp"

using namespace wilf;
using testsupport::crossing_nesting_by_subsets;
using testsupport::sample_crossing_matching;
using testsupport::sample_nesting_matching;
using testsupport::sample_two_col_tableau;
using testsupport::sample_two_row_tableau;

TEST_CASE("matching validation and type") {
    CHECK_THROWS_AS(Matching({{1, 2}, {2, 3}}), domain_error);
    CHECK_THROWS_AS(Matching({{1, 2}, {4, 5}}), domain_error);
    CHECK_THROWS_AS(Matching({{2, 1}}), domain_error);
    CHECK(sample_crossing_matching().type() == testsupport::kSampleTypeWord);
    CHECK(Matching({{1, 2}}).type() == "UD");
}

TEST_CASE("reflection") {
    CHECK(sample_crossing_matching().is_bilaterally_symmetric());
    CHECK(Matching({{1, 2}, {3, 4}}).is_bilaterally_symmetric());
    CHECK(Matching({{1, 3}, {2, 4}}).is_bilaterally_symmetric());
    Matching m({{1, 2}, {3, 6}, {4, 5}});
    CHECK(m.reflected() == Matching({{1, 4}, {2, 3}, {5, 6}}));
    CHECK_FALSE(m.is_bilaterally_symmetric());
    CHECK(m.reflected().reflected() == m);
}

TEST_CASE("crossing and nesting numbers") {
    CHECK(crossing_nesting(Matching({{1, 3}, {2, 4}})) == std::make_pair(2, 1));
    CHECK(crossing_nesting(Matching({{1, 6}, {2, 5}, {3, 4}})) == std::make_pair(1, 3));
    CHECK(crossing_nesting(sample_crossing_matching()) == std::make_pair(2, 3));
    CHECK(crossing_nesting(Matching()) == std::make_pair(0, 0));
    for (int n = 1; n <= 4; ++n)
        for_each_matching(n, [&](const Matching& m) {
            CHECK(crossing_nesting(m) == crossing_nesting_by_subsets(m));
        });
}

TEST_CASE("valleys") {
    auto v = valleys(sample_crossing_matching());
    CHECK(v.val == std::set<int>{3, 10});
    CHECK(v.val_tilde == std::set<int>{3, 7});
    CHECK(valleys(Matching({{1, 2}})).val.empty());
    CHECK(valleys(Matching({{1, 4}, {2, 3}})).val.empty());
}

TEST_CASE("oscillating tableau validation and features") {
    CHECK_THROWS_AS(OscillatingTableau({Partition({1})}), domain_error);
    CHECK_THROWS_AS(OscillatingTableau({Partition{}, Partition({2}), Partition{}}), domain_error);
    OscillatingTableau single({Partition{}, Partition({1}), Partition{}});
    auto f = osc_features(single);
    CHECK(f.type == "UD");
    CHECK(f.symmetric);
    REQUIRE(f.val.has_value());
    REQUIRE(f.peak.has_value());
    CHECK(f.val->empty());
    CHECK(f.peak->empty());

    auto two_row = osc_features(sample_two_row_tableau());
    CHECK(two_row.type == testsupport::kSampleTypeWord);
    REQUIRE(two_row.val.has_value());
    CHECK(*two_row.val == std::set<int>{3, 10});
    CHECK_FALSE(two_row.peak.has_value());  // shapes reach three columns

    auto two_col = osc_features(sample_two_col_tableau());
    CHECK(two_col.type == testsupport::kSampleTypeWord);
    REQUIRE(two_col.peak.has_value());
    CHECK(*two_col.peak == std::set<int>{3, 10});
    CHECK_FALSE(two_col.val.has_value());  // shapes reach three rows
}

TEST_CASE("insertion correspondence on the worked matchings") {
    CHECK(phi(sample_crossing_matching()) == sample_two_row_tableau());
    CHECK(phi(sample_nesting_matching()) == sample_two_col_tableau());
    CHECK(phi(Matching({{1, 2}})) ==
          OscillatingTableau({Partition{}, Partition({1}), Partition{}}));
    CHECK(phi_inv(sample_two_col_tableau()) == sample_nesting_matching());
}

TEST_CASE("insertion correspondence round trip and statistics, exhaustively") {
    for (int n = 0; n <= 4; ++n) {
        BigInt count = 0;
        for_each_matching(n, [&](const Matching& m) {
            ++count;
            OscillatingTableau o = phi(m);
            CHECK(o.steps() == 2 * n);
            CHECK(o.type() == m.type());
            CHECK(phi_inv(o) == m);
            auto [cr, ne] = crossing_nesting(m);
            CHECK(cr == o.max_rows());
            CHECK(ne == o.max_cols());
            CHECK(phi(m.reflected()) == o.reversed());
        });
        BigInt expect = 1;
        for (int i = 1; i <= 2 * n - 1; i += 2) expect *= i;
        CHECK(count == expect);
    }
}

TEST_CASE("valley transport for symmetric matchings") {
    for (int n = 1; n <= 5; ++n) {
        for_each_matching(n, [&](const Matching& m) {
            if (!m.is_bilaterally_symmetric()) return;
            auto [cr, ne] = crossing_nesting(m);
            auto f = osc_features(phi(m));
            if (cr <= 2) {
                REQUIRE(f.val.has_value());
                CHECK(*f.val == valleys(m).val);
            }
            if (ne <= 2) {
                REQUIRE(f.peak.has_value());
                CHECK(*f.peak == valleys(m).val);
            }
        });
    }
}
