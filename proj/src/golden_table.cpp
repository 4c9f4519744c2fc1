#include "gwalk/spectrum_search.hpp"

namespace gwalk {

// Bundled transcription of the k <= 20 feasibility tables. Multiplicities are
// (alpha, beta, gamma) for {[k]^1, [k/2]^alpha, [0]^beta, [-k/2]^gamma}.
// existence_expr names a realizing graph in the construction grammar when one
// is buildable here; note marks the rest:
//   "?"            existence unknown
//   "-"            spectrum feasible but ruled out by an external
//                  nonexistence result (excluded-by-citation)
//   "coset-graph"  realized by the coset graph of the dual of a binary
//                  three-weight code; construction data not bundled
//   "q=0"          the row forces a quadrangle-free graph
const std::vector<GoldenRow>& golden_table() {
    static const std::vector<GoldenRow> rows = {
        {4, 8, 1, 3, 3, "complement(hamming(3,2))", ""},
        {4, 12, 3, 3, 5, "line(hamming(3,2))", ""},

        {6, 27, 6, 12, 8, "hamming(3,3)", ""},
        {6, 81, 24, 30, 26, "", "? q=0"},

        {8, 16, 1, 11, 3, "coclique(complement(hamming(3,2)),2)", ""},
        {8, 24, 3, 15, 5, "coclique(line(hamming(3,2)),2)", ""},
        {8, 32, 5, 19, 7, "", "coset-graph"},
        {8, 48, 9, 27, 11, "", "?"},
        {8, 64, 13, 35, 15, "", "coset-graph"},
        {8, 96, 21, 51, 23, "", "?"},
        {8, 192, 45, 99, 47, "", "?"},

        {10, 25, 2, 18, 4, "", "- excluded by an external nonexistence result"},
        {10, 75, 12, 48, 14, "", "?"},
        {10, 125, 22, 78, 24, "", "?"},
        {10, 375, 72, 228, 74, "", "?"},

        {12, 24, 1, 19, 3, "coclique(complement(hamming(3,2)),3)", ""},
        {12, 36, 3, 27, 5, "coclique(line(hamming(3,2)),3)", ""},
        {12, 54, 6, 39, 8, "coclique(hamming(3,3),2)", ""},
        {12, 72, 9, 51, 11, "", "?"},
        {12, 108, 15, 75, 17, "", "?"},
        {12, 162, 24, 111, 26, "", "?"},
        {12, 216, 33, 147, 35, "", "?"},
        {12, 324, 51, 219, 53, "", "?"},
        {12, 648, 105, 435, 107, "", "?"},

        {14, 49, 4, 38, 6, "", "?"},
        {14, 147, 18, 108, 20, "", "?"},
        {14, 343, 46, 248, 48, "", "?"},
        {14, 1029, 144, 738, 146, "", "?"},

        {16, 32, 1, 27, 3, "coclique(complement(hamming(3,2)),4)", ""},
        {16, 48, 3, 39, 5, "coclique(line(hamming(3,2)),4)", ""},
        {16, 64, 5, 51, 7, "", "coset-graph"},
        {16, 96, 9, 75, 11, "", "?"},
        {16, 128, 13, 99, 15, "", "coset-graph"},
        {16, 192, 21, 147, 23, "", "?"},
        {16, 256, 29, 195, 31, "", "?"},
        {16, 384, 45, 291, 47, "", "?"},
        {16, 512, 61, 387, 63, "", "?"},
        {16, 768, 93, 579, 95, "", "?"},
        {16, 1536, 189, 1155, 191, "", "?"},

        {18, 81, 6, 66, 8, "coclique(hamming(3,3),3)", ""},
        {18, 243, 24, 192, 26, "", "?"},
        {18, 729, 78, 570, 80, "", "?"},
        {18, 2187, 240, 1704, 242, "", "?"},

        {20, 40, 1, 35, 3, "coclique(complement(hamming(3,2)),5)", ""},
        {20, 50, 2, 43, 4, "", "?"},
        {20, 60, 3, 51, 5, "coclique(line(hamming(3,2)),5)", ""},
        {20, 100, 7, 83, 9, "", "?"},
        {20, 120, 9, 99, 11, "", "?"},
        {20, 150, 12, 123, 14, "", "?"},
        {20, 200, 17, 163, 19, "", "?"},
        {20, 250, 22, 203, 24, "", "?"},
        {20, 300, 27, 243, 29, "", "?"},
        {20, 500, 47, 403, 49, "", "?"},
        {20, 600, 57, 483, 59, "", "?"},
        {20, 750, 72, 603, 74, "", "?"},
        {20, 1000, 97, 803, 99, "", "?"},
        {20, 1500, 147, 1203, 149, "", "?"},
        {20, 3000, 297, 2403, 299, "", "?"},
    };
    return rows;
}

std::vector<GoldenRow> constructible_existence_rows() {
    std::vector<GoldenRow> out;
    for (const GoldenRow& row : golden_table())
        if (!row.existence_expr.empty()) out.push_back(row);
    return out;
}

} // namespace gwalk
