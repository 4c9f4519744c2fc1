#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"

#include "gwalk/pst.hpp"
#include "gwalk/walk_regularity.hpp"

#include <set>

using namespace gwalk;
using gwalk::testing::petersen;
using gwalk::testing::spectral_corpus;

TEST_CASE("chebyshev_matrix: T2 on C4 is the antipodal permutation") {
    Graph c4 = construct("cycle(4)");
    RatMat p(4, 4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (c4.adjacent(x, y)) p(x, y) = make_rat(1, 2);
    RatMat t2 = chebyshev_matrix(p, 2);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(t2(x, y) == Rat((x + 2) % 4 == y ? 1 : 0));

    CHECK(chebyshev_matrix(p, 0).is_identity());
    CHECK(chebyshev_matrix(p, 1) == p);
}

TEST_CASE("chebyshev scalar sanity through 1x1 matrices") {
    // T_6(cos(pi/3)) = cos(2 pi) = 1, evaluated exactly at the rational 1/2.
    RatMat half(1, 1);
    half(0, 0) = make_rat(1, 2);
    CHECK(chebyshev_matrix(half, 6)(0, 0) == 1);
    // T_3(0) = 0, T_4(-1) = 1, T_5(1) = 1.
    RatMat zero(1, 1);
    CHECK(chebyshev_matrix(zero, 3)(0, 0) == 0);
    RatMat minus(1, 1);
    minus(0, 0) = -1;
    CHECK(chebyshev_matrix(minus, 4)(0, 0) == 1);
    RatMat one(1, 1);
    one(0, 0) = 1;
    CHECK(chebyshev_matrix(one, 5)(0, 0) == 1);
}

TEST_CASE("T_m(P) = sum of T_m(lambda) E_lambda on corpus graphs") {
    for (const auto& e : spectral_corpus(27)) {
        auto ctx = spectral_context(e.graph);
        RatMat p(ctx.n, ctx.n);
        Rat inv_k = make_rat(1, ctx.k);
        for (int x = 0; x < ctx.n; ++x)
            for (int y = 0; y < ctx.n; ++y)
                if (e.graph.adjacent(x, y)) p(x, y) = inv_k;
        for (long m : {2L, 7L, 12L, 24L}) {
            ScalarMat expect(ctx.n, ctx.n);
            for (size_t i = 0; i < ctx.p_eigenvalues.size(); ++i) {
                // scalar T_m at the eigenvalue, via the same recurrence
                ExactScalar prev(1), cur = ctx.p_eigenvalues[i];
                for (long s = 1; s < m; ++s) {
                    ExactScalar next =
                        ExactScalar(2) * ctx.p_eigenvalues[i] * cur - prev;
                    prev = cur;
                    cur = next;
                }
                expect = expect + ctx.projections[i].scaled(m == 0 ? ExactScalar(1) : cur);
            }
            CHECK(to_scalar(chebyshev_matrix(p, m)) == expect);
        }
    }
}

TEST_CASE("pst_at_time: examples") {
    auto pairs_c4 = pst_at_time(construct("cycle(4)"), 2);
    std::set<std::pair<int, int>> want{{0, 2}, {2, 0}, {1, 3}, {3, 1}};
    CHECK(std::set<std::pair<int, int>>(pairs_c4.begin(), pairs_c4.end()) == want);

    for (long tau = 1; tau <= 10; ++tau) // C5 is periodic with period 10
        CHECK(pst_at_time(construct("cycle(5)"), tau).empty());

    Graph k333 = construct("complete_multipartite(3,3,3)");
    for (long tau = 1; tau <= 12; ++tau) // period 12 covers all times
        CHECK(pst_at_time(k333, tau).empty());

    CHECK_THROWS_AS(pst_at_time(construct("complete_multipartite(2,3)"), 2), UnsupportedGraph);
}

TEST_CASE("pst reports are symmetric in the pair") {
    for (const auto& e : spectral_corpus(16)) {
        for (long tau = 1; tau <= 12; ++tau) {
            auto pairs = pst_at_time(e.graph, tau);
            std::set<std::pair<int, int>> got(pairs.begin(), pairs.end());
            for (auto [x, y] : got) REQUIRE(got.count({y, x}) == 1);
        }
    }
}

TEST_CASE("eigenvalue_support: examples") {
    // K4: both eigenvalues of P = {1, -1/3} are in every support.
    auto ctx_k4 = spectral_context(construct("complete(4)"));
    auto sup = eigenvalue_support(ctx_k4, 0);
    REQUIRE(sup.eigenvalues.size() == 2);
    CHECK(sup.eigenvalues[0] == ExactScalar(1));
    CHECK(sup.eigenvalues[1] == ExactScalar(make_rat(-1, 3)));

    // Every connected SRG has full support.
    for (const auto& e : spectral_corpus(30)) {
        if (!srg_recognize(e.graph)) continue;
        auto ctx = spectral_context(e.graph);
        for (int x = 0; x < ctx.n; ++x)
            CHECK(eigenvalue_support(ctx, x).eigenvalues.size() ==
                  static_cast<size_t>(ctx.spectrum.distinct_count()));
    }

    // hamming(3,3): all four eigenvalues in every support.
    auto ctx_h = spectral_context(construct("hamming(3,3)"));
    for (int x = 0; x < 27; ++x)
        CHECK(eigenvalue_support(ctx_h, x).eigenvalues.size() == 4);
}

TEST_CASE("support properties: 1 in Theta and |Theta| >= 3 (regular non-complete)") {
    for (const auto& e : spectral_corpus(100)) {
        if (basic_predicates(e.graph).complete) continue;
        auto ctx = spectral_context(e.graph);
        for (int x = 0; x < ctx.n; ++x) {
            auto sup = eigenvalue_support(ctx, x);
            CHECK(sup.eigenvalues.size() >= 3);
            CHECK(sup.eigenvalues.front() == ExactScalar(1)); // k/k, descending order
        }
    }
}

TEST_CASE("support sizes measured on regular 4-eigenvalue graphs") {
    // Whether Theta_P(e_x) = sigma(P) for every regular graph with four
    // distinct eigenvalues is open; we measure rather than assume, and record
    // that no corpus graph is a counterexample candidate.
    for (const auto& e : spectral_corpus(100)) {
        auto ctx = spectral_context(e.graph);
        if (ctx.spectrum.distinct_count() != 4) continue;
        for (int x = 0; x < ctx.n; ++x)
            CHECK_MESSAGE(eigenvalue_support(ctx, x).eigenvalues.size() == 4,
                          "counterexample candidate: ", e.name, " vertex ", x);
    }
}

TEST_CASE("strong_cospectrality: C4 antipodal vs adjacent") {
    auto ctx = spectral_context(construct("cycle(4)"));
    auto anti = strong_cospectrality(ctx, 0, 2);
    REQUIRE(anti);
    CHECK((*anti)[0] == 1); // Perron projection always +

    CHECK_FALSE(strong_cospectrality(ctx, 0, 1));

    // K3: Perron sign +, but the second projection breaks cospectrality.
    auto ctx_k3 = spectral_context(construct("complete(3)"));
    CHECK_FALSE(strong_cospectrality(ctx_k3, 0, 1));
}

TEST_CASE("angle_certificate: frozen examples") {
    auto j1 = angle_certificate(ExactScalar(make_rat(-1, 2)), 6);
    REQUIRE(j1);
    CHECK(j1->j == 4);
    CHECK(j1->even);

    auto j2 = angle_certificate(ExactScalar(0), 12);
    REQUIRE(j2);
    CHECK(j2->j == 6);
    CHECK(j2->even);

    // cos(2 pi / 5) = (-1 + sqrt 5)/4, so tau = 5 gives j = 2.
    ExactScalar c25 = ExactScalar::quadratic(make_rat(-1, 4), make_rat(1, 4), 5);
    auto j3 = angle_certificate(c25, 5);
    REQUIRE(j3);
    CHECK(j3->j == 2);
    CHECK(j3->even);
    // Its minimal polynomial: 16 x^2 + 8x - 4 = 0.
    CHECK((ExactScalar(16) * c25 * c25 + ExactScalar(8) * c25 - ExactScalar(4)).is_zero());

    // Recognized cosine, but no j for this tau: cos(2pi/5) needs 5 | 2 tau.
    CHECK_FALSE(angle_certificate(c25, 7).has_value());

    // Not a rational-angle cosine at all: 1/3 (Niven), sqrt(5)/3 (outside table).
    CHECK_THROWS_AS(angle_certificate(ExactScalar(make_rat(1, 3)), 12), UnrecognizedAngle);
    CHECK_THROWS_AS(angle_certificate(ExactScalar::quadratic(0, make_rat(1, 3), 5), 12),
                    UnrecognizedAngle);
}

TEST_CASE("angle parity is well defined across equivalent j") {
    // lambda = 0: j = tau/2 when even; parities for tau = 2, 4, 6, 8 alternate.
    for (long tau : {2L, 4L, 6L, 8L, 10L, 12L}) {
        auto c = angle_certificate(ExactScalar(0), tau);
        REQUIRE(c);
        CHECK(c->j == tau / 2);
    }
    CHECK_FALSE(angle_certificate(ExactScalar(0), 3).has_value());
}

TEST_CASE("pst_via_conditions: examples and oracle agreement") {
    auto ctx = spectral_context(construct("cycle(4)"));
    auto v = pst_via_conditions(ctx, 0, 2, 2);
    CHECK(v.transfers);
    REQUIRE(v.certificate);
    CHECK(v.certificate->signs.size() == 3);

    CHECK_FALSE(pst_via_conditions(ctx, 0, 1, 2).transfers);

    auto ctx5 = spectral_context(construct("cycle(5)"));
    for (int y = 1; y < 5; ++y)
        for (long tau = 1; tau <= 10; ++tau)
            CHECK_FALSE(pst_via_conditions(ctx5, 0, y, tau).transfers);

    auto ctx_h = spectral_context(construct("hamming(3,3)"));
    for (long tau : {6L, 12L}) {
        for (int y = 1; y < 27; ++y) CHECK_FALSE(pst_via_conditions(ctx_h, 0, y, tau).transfers);
    }
}

TEST_CASE("oracle equivalence: Chebyshev route == condition route (n <= 16, tau <= 24)") {
    // The full n <= 30 sweep is acceptance criterion 5; this is the fast guard.
    for (const auto& e : spectral_corpus(16)) {
        auto ctx = spectral_context(e.graph);
        RatMat p(ctx.n, ctx.n);
        Rat inv_k = make_rat(1, ctx.k);
        for (int x = 0; x < ctx.n; ++x)
            for (int y = 0; y < ctx.n; ++y)
                if (e.graph.adjacent(x, y)) p(x, y) = inv_k;
        RatMat prev = RatMat::identity(ctx.n);
        RatMat cur = p;
        for (long tau = 1; tau <= 24; ++tau) {
            for (int x = 0; x < ctx.n; ++x)
                for (int y = 0; y < ctx.n; ++y) {
                    if (x == y) continue;
                    bool chebyshev = true;
                    for (int i = 0; i < ctx.n && chebyshev; ++i)
                        chebyshev = (cur(i, x) == Rat(i == y ? 1 : 0));
                    bool conditions = pst_via_conditions(ctx, x, y, tau).transfers;
                    REQUIRE(chebyshev == conditions);
                }
            RatMat next = (p * cur).scaled(Rat(2)) - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
}

TEST_CASE("algebraic_integer_filter: examples") {
    auto pet = algebraic_integer_filter(petersen());
    CHECK(pet.status == FilterStatus::Fail);
    CHECK(*pet.failing == ExactScalar(make_rat(1, 3)));

    CHECK(algebraic_integer_filter(construct("complement(hamming(3,2))")).status ==
          FilterStatus::Pass);
    CHECK(algebraic_integer_filter(construct("cycle(5)")).status == FilterStatus::Pass);
    // Paley(13): 2 theta / k = (-1 +- sqrt 13)/6 has trace -1/3, not integral.
    CHECK(algebraic_integer_filter(construct("cay(13;1,3,4)")).status == FilterStatus::Fail);

    // Genuine SWR with spectrum {12, 3, 0, -3}: fails at lambda = 1/4, and the
    // scan is skipped outright.
    Graph other = construct("complement(cartesian(complete_multipartite(3,3),complete(3)))");
    auto f = algebraic_integer_filter(other);
    CHECK(f.status == FilterStatus::Fail);
    CHECK(*f.failing == ExactScalar(make_rat(1, 4)));
    auto scan = minimal_time_scan(other);
    CHECK(scan.checked_times.empty());
    CHECK(scan.pairs.empty());
    CHECK_FALSE(scan.periodic.value_or(true));
}

TEST_CASE("minimal_time_scan: examples") {
    auto c4 = minimal_time_scan(construct("cycle(4)"));
    REQUIRE(c4.pairs.size() == 4);
    for (const auto& p : c4.pairs) CHECK(p.tau == 2);

    // Spectrum {8, 4, 0, -4}: only {6, 12} are checked, verdict no.
    auto ext = minimal_time_scan(construct("coclique(complement(hamming(3,2)),2)"));
    CHECK(ext.checked_times == std::vector<long>{6, 12});
    CHECK(ext.pairs.empty());
    CHECK(ext.periodic.value_or(false));

    // Octahedron: partition mates transfer at tau = 6.
    auto octa = minimal_time_scan(construct("complete_multipartite(2,2,2)"));
    REQUIRE(octa.pairs.size() == 6);
    for (const auto& p : octa.pairs) {
        CHECK(p.tau == 6);
        CHECK(!construct("complete_multipartite(2,2,2)").adjacent(p.x, p.y));
    }

    // Petersen: filter fails, no scan at all.
    auto pet = minimal_time_scan(petersen());
    CHECK(pet.filter.status == FilterStatus::Fail);
    CHECK(pet.checked_times.empty());
    CHECK(pet.pairs.empty());

    // A graph outside the SRG/genuine classes whose filter fails is still
    // certified aperiodic (the filter condition is necessary for periodicity).
    auto circ = minimal_time_scan(construct("cay(12;1,2,3)"));
    CHECK(circ.filter.status == FilterStatus::Fail);
    REQUIRE(circ.periodic.has_value());
    CHECK_FALSE(*circ.periodic);

    // C7: spectrum unsupported, filter skipped, Chebyshev scan still runs.
    auto c7 = minimal_time_scan(construct("cycle(7)"), 20);
    CHECK(c7.filter.status == FilterStatus::Skipped);
    CHECK(c7.spectrum == "unsupported");
    CHECK(c7.pairs.empty());
    CHECK_FALSE(c7.checked_times.empty());
}

TEST_CASE("PST-admitting SRG/SWR corpus graphs are exactly K_{2,2} and K_{2,2,2}") {
    // Downstream of the genuine-SWR spectrum theorem: no genuine corpus graph
    // admits PST, and among strongly regular ones only the two known
    // realizations do. (Even cycles C_6, C_8 do admit antipodal PST, but they
    // are neither strongly regular nor strongly walk-regular.)
    for (const auto& e : spectral_corpus(100)) {
        auto tag = classify_swr(e.graph).tag;
        if (tag != SwrTag::Genuine && tag != SwrTag::StronglyRegular) continue;
        auto report = minimal_time_scan(e.graph, 24);
        if (report.pairs.empty()) continue;
        CHECK(tag == SwrTag::StronglyRegular);
        bool expected = e.name == "cycle(4)" || e.name == "complete_multipartite(2,2)" ||
                        e.name == "complete_multipartite(2,2,2)";
        CHECK_MESSAGE(expected, "unexpected PST on ", e.name);
    }
}

TEST_CASE("report_to_json emits the documented schema") {
    auto j = report_to_json(minimal_time_scan(construct("cycle(4)")));
    CHECK(j["graph"] == "cycle(4)");
    CHECK(j["filter"] == "pass");
    CHECK(j["periodic"] == true);
    CHECK(j["pst"].size() == 4);
    CHECK(j["pst"][0].contains("signs"));
    CHECK(j["pst"][0].contains("angles"));
    CHECK(j["spectrum"] == "{[2]^1, [0]^2, [-2]^1}");
}
