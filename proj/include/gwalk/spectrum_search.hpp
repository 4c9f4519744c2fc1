#pragma once

#include "gwalk/graph.hpp"
#include "gwalk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwalk {

/// One feasible spectrum {[k]^1, [k/2]^a, [0]^b, [-k/2]^c} with the derived
/// combinatorial data (triangles through a vertex, quadrangle counts).
struct FeasibleRow {
    long k = 0;
    long n = 0;
    long alpha = 0, beta = 0, gamma = 0;
    Int t_x, q, q_x;

    std::string spectrum_string() const; // "{[k]^1, [k/2]^a, [0]^b, [-k/2]^c}"
    bool operator==(const FeasibleRow& o) const {
        return k == o.k && n == o.n && alpha == o.alpha && beta == o.beta && gamma == o.gamma &&
               t_x == o.t_x && q == o.q && q_x == o.q_x;
    }
};

/// All n passing conditions (i)-(iv) for one even valency k >= 4, ascending.
std::vector<FeasibleRow> feasible_rows(long k);

struct ClosedWalkVerdict {
    bool kept = true;
    long eliminated_at_r = 0; // first violating r when !kept
};

/// Checks c_r = (k^r + alpha (k/2)^r + gamma (-k/2)^r)/n is a non-negative
/// integer for r = 1..r_max.
ClosedWalkVerdict closed_walk_filter(const FeasibleRow& row, long r_max);

/// Concatenation of feasible_rows(k) for even k in [4, k_max].
std::vector<FeasibleRow> enumerate_tables(long k_max);

struct CandidateVerdict {
    bool ok = true;
    std::vector<std::string> mismatches;
};

/// Confirms the graph realizes the row: exact spectrum, per-vertex triangle
/// count t_x, quadrangle counts q and q_x, and the Hoffman identity
/// h(A) = (h(k)/n) J for h(x) = (x - k/2) x (x + k/2).
CandidateVerdict verify_candidate_graph(const Graph& g, const FeasibleRow& row);

/// Rows realized as coclique extensions of smaller feasible rows:
/// (k, n) = (m k', m n') with (k', n') itself feasible.
struct CocliqueHint {
    long k = 0, n = 0, m = 0, base_k = 0, base_n = 0;
};

std::vector<CocliqueHint> coclique_hints(const std::vector<FeasibleRow>& rows);

// Emitters. Columns: k, n, alpha, beta, gamma, t_x, q, q_x, spectrum.
std::string rows_to_tsv(const std::vector<FeasibleRow>& rows);
std::string rows_to_json_lines(const std::vector<FeasibleRow>& rows);
std::string rows_to_markdown(const std::vector<FeasibleRow>& rows);

/// Bundled reference table of feasible rows for k <= 20, with the
/// known realizations. existence_expr is a construction expression when the
/// realizing graph is constructible here; note explains the other markers.
struct GoldenRow {
    long k = 0, n = 0;
    long alpha = 0, beta = 0, gamma = 0;
    std::string existence_expr; // empty when not constructible
    std::string note;           // "?", "-", "coset-graph", ...
};

const std::vector<GoldenRow>& golden_table();

/// Golden rows whose realizing graph this library can construct (<= 81 vertices).
std::vector<GoldenRow> constructible_existence_rows();

} // namespace gwalk
