#include <doctest.h>

#include "test_support.hpp"
#include "wilf/enumeration.hpp"

using namespace wilf;
using testsupport::all_syt;
using testsupport::lis_by_scan;

TEST_CASE("partition basics") {
    Partition p({4, 3, 2, 2});
    CHECK(p.size() == 11);
    CHECK(p.conjugate() == Partition({4, 4, 2, 1}));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(Partition({3, 2, 1}).self_conjugate());
    CHECK_FALSE(p.self_conjugate());
    CHECK_THROWS_AS(Partition({2, 3}), domain_error);
    CHECK(added_cell(Partition({2, 1}), Partition({2, 2})) == std::make_pair(2, 2));
    CHECK(added_cell(Partition({2, 1}), Partition({3, 1})) == std::make_pair(1, 3));
    CHECK_FALSE(added_cell(Partition({2, 1}), Partition({2, 1})));
    CHECK_FALSE(added_cell(Partition({2, 2}), Partition({3, 1})).has_value());
}

TEST_CASE("tableau validation and descents") {
    StandardYoungTableau t({{1, 2, 5, 8}, {3, 4, 7}, {6, 9}, {10, 11}});
    CHECK(syt_descents(t) == std::set<int>{2, 5, 8, 9});
    CHECK(syt_descents(StandardYoungTableau({{1, 2, 3, 4}})).empty());
    CHECK(syt_descents(StandardYoungTableau({{1}, {2}, {3}})) == std::set<int>{1, 2});
    CHECK_THROWS_AS(StandardYoungTableau({{1, 3}, {2, 4, 5}}), domain_error);
    CHECK_THROWS_AS(StandardYoungTableau({{2, 3}, {4, 5}}), domain_error);
    CHECK_THROWS_AS(StandardYoungTableau({{1, 4}, {2, 3}}), domain_error);
}

TEST_CASE("rank sequences") {
    RankProfile rp = rank_sequence(Permutation::parse("6482(10)19375"));
    CHECK(rp.max_rank == 3);
    CHECK(rp.rank_classes.at(3) == std::vector<int>{5, 7, 9, 10});
    RankProfile id = rank_sequence(Permutation::identity(5));
    CHECK(id.ranks == std::vector<int>{1, 2, 3, 4, 5});
    RankProfile dec = rank_sequence(Permutation::parse("54321"));
    CHECK(dec.ranks == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(dec.max_rank == 1);
}

TEST_CASE("rank rearrangement on the worked pair") {
    Permutation p = Permutation::parse("6482(10)19375");
    Permutation s = Permutation::parse("648291(10)357");
    CHECK(west_f(p, 4) == s);
    CHECK(west_f_inv(s, 4) == p);
    // positions of rank <= k-2 are fixed
    RankProfile rp = rank_sequence(p);
    Permutation f = west_f(p, 4);
    for (int i = 1; i <= p.size(); ++i)
        if (rp.ranks[static_cast<size_t>(i) - 1] <= 2) CHECK(f.at(i) == p.at(i));
    // no top-rank element: the map is the identity
    Permutation low = Permutation::parse("53142");  // avoids 123
    CHECK(west_f(low, 4) == low);
    // rejections name a witness of the offending pattern
    std::string msg = testsupport::capture_error([] { west_f(Permutation::parse("52134678"), 4); });
    CHECK(msg.find("contains 1234") != std::string::npos);
    CHECK(msg.find("positions") != std::string::npos);
    msg = testsupport::capture_error([] { west_f_inv(Permutation::parse("1243"), 4); });
    CHECK(msg.find("contains 1243") != std::string::npos);
}

TEST_CASE("rank rearrangement is a bijection between the two avoidance classes") {
    const Permutation i4 = Permutation::parse("1234");
    const Permutation i2_21 = Permutation::parse("1243");
    for (int len = 2; len <= 8; len += 2) {
        auto domain = enumerate_class(ClassSpec::of(BaseClass::Involutions, len, {i4}));
        auto target = enumerate_class(ClassSpec::of(BaseClass::Involutions, len, {i2_21}));
        std::set<Permutation> image;
        for (const auto& p : domain) {
            Permutation s = west_f(p, 4);
            CHECK_FALSE(s.contains(i2_21));
            CHECK(s.is_involution());
            CHECK(west_f_inv(s, 4) == p);
            image.insert(s);
        }
        CHECK(image.size() == domain.size());
        CHECK(image == std::set<Permutation>(target.begin(), target.end()));
    }
}

TEST_CASE("insertion tableau of an involution") {
    CHECK(rsk_involution(Permutation::parse("321546")) ==
          StandardYoungTableau({{1, 4, 6}, {2, 5}, {3}}));
    CHECK(rsk_involution(Permutation::identity(5)) == StandardYoungTableau({{1, 2, 3, 4, 5}}));
    CHECK(rsk_involution(Permutation::parse("4321")) == StandardYoungTableau({{1}, {2}, {3}, {4}}));
    CHECK_THROWS_AS(rsk_involution(Permutation::parse("231")), domain_error);
}

TEST_CASE("insertion tableau: descents, columns and round trip, exhaustively") {
    for (int n = 1; n <= 8; ++n) {
        generate(ClassSpec::of(BaseClass::Involutions, n), [&](const Permutation& p) {
            StandardYoungTableau t = rsk_involution(p);
            CHECK(syt_descents(t) == descent_set(p));
            CHECK(t.column_count() == lis_by_scan(p));
            CHECK(rsk_involution_inv(t) == p);
        });
    }
    // every tableau arises: inverse is total on tableaux
    for (const auto& t : all_syt(6, 6)) {
        Permutation p = rsk_involution_inv(t);
        CHECK(p.is_involution());
        CHECK(rsk_involution(p) == t);
    }
}

TEST_CASE("column augmentation") {
    StandardYoungTableau t({{1, 4, 6}, {2, 5}, {3}});
    StandardYoungTableau expect({{1, 4, 6}, {2, 5, 9}, {3, 8}, {7}});
    CHECK(eta(t) == expect);
    CHECK(eta_inv(expect) == t);
    CHECK_THROWS_AS(eta(StandardYoungTableau({{1, 2, 3, 4}})), domain_error);
    CHECK_THROWS_AS(eta(StandardYoungTableau()), domain_error);
    for (int n = 1; n <= 8; ++n) {
        for (const auto& s : all_syt(n, 3)) {
            StandardYoungTableau up = eta(s);
            CHECK(up.column_count() == 3);
            CHECK(eta_inv(up) == s);
            std::set<int> expected_descents = syt_descents(s);
            expected_descents.insert(s.size());
            CHECK(syt_descents(up) == expected_descents);
        }
    }
}

namespace {

std::set<int> run_descents(int len, int first_even) {
    // {1} together with the even numbers first_even, first_even+2, ..., len-2
    std::set<int> d{1};
    for (int t = first_even; t <= len - 2; t += 2) d.insert(t);
    return d;
}

}  // namespace

TEST_CASE("tableau augmentation map on involution words") {
    CHECK(gamma_map(Permutation::parse("321546")) == Permutation::parse("732859146"));
    CHECK(gamma_inv(Permutation::parse("732859146")) == Permutation::parse("321546"));
    CHECK_THROWS_AS(gamma_map(Permutation::parse("213")), domain_error);  // odd length
    CHECK_THROWS_AS(gamma_map(Permutation::parse("1234")), domain_error);

    // image-set equality with the descent-filtered class of length 2n+1
    for (int n = 2; n <= 4; ++n) {
        auto domain = enumerate_class(ClassSpec::of(BaseClass::Involutions, 2 * n - 2,
                                                    {Permutation::parse("1234")})
                                          .with_descents(run_descents(2 * n - 2, 2)));
        auto target = enumerate_class(ClassSpec::of(BaseClass::Involutions, 2 * n + 1,
                                                    {Permutation::parse("1234")})
                                          .with_descents(run_descents(2 * n, 2)));
        std::set<Permutation> image;
        for (const auto& p : domain) {
            Permutation s = gamma_map(p);
            CHECK(gamma_inv(s) == p);
            image.insert(s);
        }
        CHECK(image.size() == domain.size());
        CHECK(image == std::set<Permutation>(target.begin(), target.end()));
    }
}
