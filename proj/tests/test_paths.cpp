#include <doctest.h>

#include "test_support.hpp"

using namespace wilf;
using testsupport::all_two_row_oscillating;
using testsupport::sample_two_col_tableau;
using testsupport::sample_two_row_tableau;

TEST_CASE("path basics") {
    LatticePath p(0, 0, "UUDD");
    CHECK(p.heights() == std::vector<int>{0, 1, 2, 1, 0});
    CHECK(p.is_dyck());
    CHECK(p.is_symmetric());
    CHECK_FALSE(LatticePath(0, 0, "UDDU").is_dyck());
    CHECK(LatticePath(0, 0, "UUDDUD").is_dyck());
    CHECK_FALSE(LatticePath(0, 0, "UUDDUD").is_symmetric());
    LatticePath seg(3, 2, "UD");
    LatticePath mirrored = seg.reflected(4);
    CHECK(mirrored.x0() == 3);
    CHECK(mirrored.y0() == 2);
    CHECK(mirrored.word() == "UD");
    CHECK(LatticePath(0, 0, "UUD").reflected(3).word() == "UDD");
    CHECK_THROWS_AS(LatticePath(0, 0, "UX"), domain_error);
}

TEST_CASE("pair validation") {
    CHECK_NOTHROW(DyckPair(LatticePath(0, 0, "UUDD"), LatticePath(0, 0, "UDUD")));
    CHECK_THROWS_AS(DyckPair(LatticePath(0, 0, "UDUD"), LatticePath(0, 0, "UUDD")), domain_error);
    CHECK_THROWS_AS(DyckPair(LatticePath(0, 0, "UUDD"), LatticePath(0, 0, "UD")), domain_error);
}

TEST_CASE("two-row correspondence on the worked tableau") {
    DyckPair pr = psi(sample_two_row_tableau());
    CHECK(pr.p.word() == testsupport::kSamplePWord);
    CHECK(pr.q.word() == testsupport::kSampleQWord);
    CHECK(psi_inv(pr) == sample_two_row_tableau());
    DyckPair tiny = psi(OscillatingTableau({Partition{}, Partition({1}), Partition{}}));
    CHECK(tiny.p.word() == "UD");
    CHECK(tiny.q.word() == "UD");
    CHECK_THROWS_AS(psi(sample_two_col_tableau()), domain_error);  // three rows appear
}

TEST_CASE("two-column correspondence on the worked tableau") {
    DyckPair pr = psibar(sample_two_col_tableau());
    CHECK(pr.p.word() == testsupport::kSamplePWord);
    CHECK(pr.q.word() == testsupport::kSampleQPrimeWord);
    CHECK(psibar_inv(pr) == sample_two_col_tableau());
    CHECK_THROWS_AS(psibar(sample_two_row_tableau()), domain_error);  // three columns appear
    // two Dyck paths of equal length always have equal height parity, so the
    // parity guard inside the inverse can only reject hand-built bad input;
    // a valid mixed pair decodes fine
    OscillatingTableau o = psi_inv(DyckPair(LatticePath(0, 0, "UUDD"), LatticePath(0, 0, "UDUD")));
    CHECK(o == OscillatingTableau({Partition{}, Partition({1}), Partition({1, 1}), Partition({1}), Partition{}}));
}

TEST_CASE("two-row correspondence round trips exhaustively") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& o : all_two_row_oscillating(n)) {
            DyckPair pr = psi(o);
            CHECK(pr.p.word() == o.type());
            CHECK(psi_inv(pr) == o);
            CHECK(o.is_symmetric() == pr.is_symmetric());
            auto f = osc_features(o);
            if (o.is_symmetric()) {
                REQUIRE(f.val.has_value());
                CHECK(*f.val == ab_sets(pr).first);
            }
            // the conjugate tableau feeds the two-column correspondence
            std::vector<Partition> conj;
            for (const auto& s : o.shapes()) conj.push_back(s.conjugate());
            OscillatingTableau oc(conj);
            DyckPair prc = psibar(oc);
            CHECK(prc.p.word() == oc.type());
            CHECK(psibar_inv(prc) == oc);
            auto fc = osc_features(oc);
            if (oc.is_symmetric()) {
                REQUIRE(fc.peak.has_value());
                CHECK(*fc.peak == ab_sets(prc).second);
            }
        }
    }
}

TEST_CASE("A and B index sets") {
    DyckPair fig_b(LatticePath(0, 0, testsupport::kSamplePWord),
                   LatticePath(0, 0, testsupport::kSampleQPrimeWord));
    auto [a2, b2] = ab_sets(fig_b);
    CHECK(a2 == std::set<int>{2, 4});
    CHECK(b2 == std::set<int>{3, 10});
    DyckPair fig_a(LatticePath(0, 0, testsupport::kSamplePWord),
                   LatticePath(0, 0, testsupport::kSampleQWord));
    CHECK(ab_sets(fig_a).first == std::set<int>{3, 10});
    DyckPair square(LatticePath(0, 0, "UUDD"), LatticePath(0, 0, "UUDD"));
    CHECK(ab_sets(square).first.empty());
    CHECK(ab_sets(square).second.empty());
}

TEST_CASE("cyclic shift transformation, worked cases") {
    auto rising = [](int y0, int len) { return LatticePath(0, y0, std::string(static_cast<size_t>(len), 'U')); };
    // leading down step: plain cyclic shift, heights rise by one inside
    CHECK(alpha_transform(rising(2, 3), LatticePath(0, 2, "DUD")).word() == "UDD");
    // leading up step, strictly positive inside: plain cyclic shift
    CHECK(alpha_transform(rising(1, 3), LatticePath(0, 1, "UUD")).word() == "UDU");
    // leading up step with an interior return to the axis
    CHECK(alpha_transform(rising(0, 5), LatticePath(0, 0, "UDUDU")).word() == "UUDUD");
    // inverses of the same three cases
    CHECK(beta_transform(rising(2, 3), LatticePath(0, 2, "UDD")).word() == "DUD");
    CHECK(beta_transform(rising(1, 3), LatticePath(0, 1, "UDU")).word() == "UUD");
    CHECK(beta_transform(rising(0, 5), LatticePath(0, 0, "UUDUD")).word() == "UDUDU");
    // a single step is fixed
    CHECK(alpha_transform(rising(0, 1), LatticePath(0, 0, "U")).word() == "U");
    CHECK(beta_transform(rising(0, 1), LatticePath(0, 0, "U")).word() == "U");
    // empty input is the identity
    CHECK(alpha_transform(rising(0, 0), LatticePath(0, 0, "")).word().empty());
    // domain checks: above the rising path, or below the axis
    CHECK_THROWS_AS(alpha_transform(rising(0, 2), LatticePath(0, 1, "UU")), domain_error);
    CHECK_THROWS_AS(alpha_transform(rising(1, 2), LatticePath(0, 1, "DD")), domain_error);
}

TEST_CASE("cyclic shift transformation is an involution pair, exhaustively") {
    for (int start : {0, 1, 2}) {
        for (int gap : {0, 1, 3}) {
            for (int m = 0; m <= 7; ++m) {
                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    std::string w;
                    for (int i = 0; i < m; ++i) w.push_back(mask & (1u << i) ? 'U' : 'D');
                    LatticePath r(0, start, w);
                    LatticePath s(0, start + gap, std::string(static_cast<size_t>(m), 'U'));
                    auto hr = r.heights();
                    auto hs = s.heights();
                    bool valid = true;
                    for (size_t i = 0; i < hr.size(); ++i) valid = valid && hr[i] >= 0 && hr[i] <= hs[i];
                    if (!valid) continue;
                    LatticePath rp = alpha_transform(s, r);
                    CHECK(beta_transform(s, rp) == r);
                    CHECK(alpha_transform(s, beta_transform(s, r)) == r);
                    CHECK(rp.y0() == r.y0());
                    CHECK(rp.end_y() == r.end_y());
                    CHECK(rp.min_height() >= 0);
                }
            }
        }
    }
}

TEST_CASE("maximal chain decomposition") {
    auto chains = maximal_chains(LatticePath(0, 0, testsupport::kSamplePWord));
    CHECK(chains == std::vector<std::pair<int, int>>{{0, 5}, {5, 8}, {8, 11}, {11, 16}});
    for (const auto& o : all_two_row_oscillating(5)) {
        LatticePath p = psi(o).p;
        auto cs = maximal_chains(p);
        CHECK(cs.size() % 2 == 0);
        for (size_t i = 0; i < cs.size(); ++i) {
            char expected = i % 2 == 0 ? 'U' : 'D';
            for (int t = cs[i].first; t < cs[i].second; ++t)
                CHECK(p.word()[static_cast<size_t>(t)] == expected);
        }
    }
}

TEST_CASE("block rewrite on the worked pair") {
    DyckPair in(LatticePath(0, 0, testsupport::kSamplePWord),
                LatticePath(0, 0, testsupport::kSampleQWord));
    DyckPair out = theta(in);
    CHECK(out.p == in.p);
    CHECK(out.q.word() == testsupport::kSampleQPrimeWord);
    CHECK(theta_inv(out) == in);
    DyckPair square(LatticePath(0, 0, "UUUDDD"), LatticePath(0, 0, "UUUDDD"));
    CHECK(theta(square) == square);
    CHECK_THROWS_AS(theta(DyckPair(LatticePath(0, 0, "UUDDUD"), LatticePath(0, 0, "UDUDUD"))),
                    domain_error);  // first path not symmetric
}

TEST_CASE("block rewrite properties, exhaustively") {
    for (int n = 1; n <= 6; ++n) {
        for_each_symmetric_noncrossing_pair(n, [&](const DyckPair& pr) {
            DyckPair out = theta(pr);
            CHECK(out.p == pr.p);
            CHECK(out.q.is_symmetric());
            CHECK(ab_sets(pr).first == ab_sets(out).second);
            CHECK(theta_inv(out) == pr);
        });
    }
}
