#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"

#include "gwalk/grover.hpp"
#include "gwalk/pst.hpp"
#include "gwalk/spectral.hpp"

using namespace gwalk;
using gwalk::testing::petersen;
using gwalk::testing::spectral_corpus;

namespace {

/// Unnormalized boundary indicator: row x marks the arcs with terminus x.
IntMat boundary_indicator(const Graph& g, const std::vector<Arc>& order) {
    IntMat d(g.n(), static_cast<int>(order.size()));
    for (size_t a = 0; a < order.size(); ++a) d(order[a].terminus, static_cast<int>(a)) = 1;
    return d;
}

RatMat shift_matrix(const std::vector<Arc>& order) {
    const int m = static_cast<int>(order.size());
    RatMat r(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (order[i] == order[j].inverse()) r(i, j) = 1;
    return r;
}

} // namespace

TEST_CASE("build_operators: K2 is the arc swap") {
    auto ops = build_operators(construct("complete_multipartite(1,1)"));
    REQUIRE(ops.U.rows() == 2);
    CHECK(ops.U(0, 0) == 0);
    CHECK(ops.U(0, 1) == 1);
    CHECK(ops.U(1, 0) == 1);
    CHECK(ops.U(1, 1) == 0);
    CHECK((ops.U * ops.U).is_identity());
}

TEST_CASE("build_operators: valency 2 gives a 0/1 permutation matrix") {
    // For k = 2 the coin is the swap, so U has entries in {0, 1} with a single
    // 1 per row and column.
    auto ops = build_operators(construct("cycle(3)"));
    for (int i = 0; i < 6; ++i) {
        Rat row_sum = 0, col_sum = 0;
        for (int j = 0; j < 6; ++j) {
            REQUIRE((ops.U(i, j) == 0 || ops.U(i, j) == 1));
            row_sum += ops.U(i, j);
            col_sum += ops.U(j, i);
        }
        CHECK(row_sum == 1);
        CHECK(col_sum == 1);
    }
}

TEST_CASE("build_operators: entry ranges and P = A/k") {
    Graph ch32 = construct("complement(hamming(3,2))");
    auto ops = build_operators(ch32);
    REQUIRE(ops.U.rows() == 32);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            const Rat& v = ops.U(i, j);
            bool allowed = v == 0 || v == make_rat(1, 2) || v == make_rat(-1, 2);
            REQUIRE(allowed);
        }
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            CHECK(ops.P(x, y) == (ch32.adjacent(x, y) ? make_rat(1, 4) : Rat(0)));

    CHECK_THROWS_AS(build_operators(construct("complete_multipartite(2,3)")), UnsupportedGraph);
    Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(build_operators(disconnected), UnsupportedGraph);
}

TEST_CASE("U is orthogonal and intertwines with P on the corpus") {
    for (const auto& e : spectral_corpus(16)) {
        auto ops = build_operators(e.graph);
        int k = *basic_predicates(e.graph).regular;
        CHECK((ops.U.transpose() * ops.U).is_identity());

        RatMat d = to_rational(boundary_indicator(e.graph, ops.arc_order));
        RatMat r = shift_matrix(ops.arc_order);
        RatMat a = to_rational(e.graph.adjacency_matrix());
        // P = d R d* entrywise: unnormalized, d R d^T = k P = A.
        CHECK(d * r * d.transpose() == a);
        CHECK((r * r).is_identity());
        // d d^T = k I (the normalized boundary satisfies dd* = I).
        CHECK(d * d.transpose() == RatMat::identity(e.graph.n()).scaled(Rat(k)));
        // Discriminant intertwining in its Chebyshev form:
        // d U^m d* = T_m(P), i.e. (1/k) dtilde U^m dtilde^T = T_m(P).
        RatMat upow = RatMat::identity(ops.U.rows());
        for (long m = 1; m <= 3; ++m) {
            upow = upow * ops.U;
            CHECK((d * upow * d.transpose()).scaled(make_rat(1, k)) ==
                  chebyshev_matrix(ops.P, m));
        }
    }
}

TEST_CASE("check_periodic_direct: examples") {
    auto c4 = check_periodic_direct(build_operators(construct("cycle(4)")), 24);
    CHECK(c4.periodic);
    CHECK(*c4.period <= 24);

    auto ch32 = check_periodic_direct(build_operators(construct("complement(hamming(3,2))")), 24);
    CHECK(ch32.periodic);
    CHECK(*ch32.period == 12);

    auto pet = check_periodic_direct(build_operators(petersen()), 120);
    CHECK_FALSE(pet.periodic);

    CHECK_THROWS_AS(check_periodic_direct(build_operators(construct("cycle(3)")), 0),
                    std::domain_error);
}

TEST_CASE("check_periodic_spectral: SRG families and genuine graphs") {
    auto c5 = check_periodic_spectral(construct("cycle(5)"));
    CHECK(c5.periodic);

    auto h33 = check_periodic_spectral(construct("hamming(3,3)"));
    CHECK(h33.periodic);
    CHECK(*h33.period == 12);
    CHECK(*h33.period % 12 == 0);

    auto pet = check_periodic_spectral(petersen());
    CHECK_FALSE(pet.periodic);

    auto paley = check_periodic_spectral(construct("cay(13;1,3,4)"));
    CHECK_FALSE(paley.periodic);

    // Genuine strongly walk-regular, but the spectrum {12, 3, 0, -3} is not of
    // the half form, so not periodic.
    auto other = check_periodic_spectral(
        construct("complement(cartesian(complete_multipartite(3,3),complete(3)))"));
    CHECK_FALSE(other.periodic);

    // Outside both classes: C6 is neither SRG nor genuine SWR.
    CHECK_THROWS_AS(check_periodic_spectral(construct("cycle(6)")), UnsupportedGraph);
}

TEST_CASE("direct and spectral verdicts agree where both apply") {
    for (const auto& e : spectral_corpus(100)) {
        if (2 * e.graph.edge_count() > 300) continue; // direct powering gate
        PeriodicityVerdict spectral;
        try {
            spectral = check_periodic_spectral(e.graph);
        } catch (const UnsupportedGraph&) {
            continue;
        }
        auto direct = check_periodic_direct(build_operators(e.graph), 24);
        if (spectral.periodic) {
            REQUIRE(direct.periodic);
            // The spectral period is a valid exponent: the minimal one divides it.
            CHECK(*spectral.period % *direct.period == 0);
        } else {
            CHECK_FALSE(direct.periodic);
        }
    }
}

TEST_CASE("U^12 = I exactly when the spectrum is {k, k/2, 0, -k/2}") {
    // Small members of the table families; the acceptance suite covers the rest.
    for (const char* expr : {"complement(hamming(3,2))", "line(hamming(3,2))"}) {
        auto ops = build_operators(construct(expr));
        auto verdict = check_periodic_direct(ops, 12);
        REQUIRE(verdict.periodic);
        CHECK(12 % *verdict.period == 0);
    }
}

TEST_CASE("operators_to_json dumps exact numerator/denominator pairs") {
    auto ops = build_operators(construct("cycle(3)"));
    auto j = operators_to_json(ops);
    CHECK(j["k"] == 2);
    CHECK(j["arcs"].size() == 6);
    CHECK(j["U"].size() == 6);
    CHECK(j["P"][0][1][0] == "1");
    CHECK(j["P"][0][1][1] == "2"); // P_{01} = 1/2
}

TEST_CASE("arc-space ground truth: U^tau maps the vertex-type state at x to y") {
    // On C4 the antipodal transfer at tau = 2 is visible directly in arc space:
    // U^2 (unnormalized d^T e_0) = d^T e_2, exactly (the global phase is 1).
    Graph c4 = construct("cycle(4)");
    auto ops = build_operators(c4);
    IntMat d = boundary_indicator(c4, ops.arc_order);
    RatMat u2 = ops.U * ops.U;
    const int m = static_cast<int>(ops.arc_order.size());
    for (int a = 0; a < m; ++a) {
        Rat got = 0;
        for (int b = 0; b < m; ++b)
            if (d(0, b) == 1) got += u2(a, b); // U^2 applied to the state at vertex 0
        CHECK(got == Rat(d(2, a)));
    }
}
