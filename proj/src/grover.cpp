#include "gwalk/grover.hpp"

#include "gwalk/pst.hpp"
#include "gwalk/spectral.hpp"
#include "gwalk/walk_regularity.hpp"

#include <map>
#include <numeric>

namespace gwalk {

WalkOperators build_operators(const Graph& g) {
    auto preds = basic_predicates(g);
    if (!preds.regular || *preds.regular < 1)
        throw UnsupportedGraph("Grover operators need a regular graph with k >= 1: " + g.label());
    if (!preds.connected)
        throw UnsupportedGraph("Grover operators need a connected graph: " + g.label());
    const int k = *preds.regular;

    WalkOperators ops;
    ops.k = k;
    ops.arc_order = arcs(g);
    const int m = static_cast<int>(ops.arc_order.size());

    std::map<std::pair<int, int>, int> arc_index;
    for (int i = 0; i < m; ++i)
        arc_index[{ops.arc_order[i].origin, ops.arc_order[i].terminus}] = i;

    Rat two_over_k = make_rat(2, k);
    ops.U = RatMat(m, m);
    for (int col = 0; col < m; ++col) {
        const Arc& b = ops.arc_order[col];
        int inv = arc_index.at({b.terminus, b.origin});
        // Column b of U: 2/k on every arc leaving t(b), minus 1 on b^{-1}.
        for (int row = 0; row < m; ++row)
            if (ops.arc_order[row].origin == b.terminus) ops.U(row, col) = two_over_k;
        ops.U(inv, col) -= 1;
    }

    ops.P = RatMat(g.n(), g.n());
    Rat inv_k = make_rat(1, k);
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y)
            if (g.adjacent(x, y)) ops.P(x, y) = inv_k;
    return ops;
}

PeriodicityVerdict check_periodic_direct(const WalkOperators& ops, long tau_max) {
    if (tau_max < 1) throw std::domain_error("tau_max must be >= 1");
    const int m = ops.U.rows();
    // Work with the integer matrix N = k*U: U^t = I iff N^t = k^t I.
    IntMat scaled(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rat v = ops.U(i, j) * ops.k;
            scaled(i, j) = to_integer(v);
        }
    IntMat power = IntMat::identity(m);
    Int k_pow = 1;
    for (long t = 1; t <= tau_max; ++t) {
        power = power * scaled;
        k_pow *= ops.k;
        bool ident = true;
        for (int i = 0; i < m && ident; ++i)
            for (int j = 0; j < m; ++j) {
                bool ok = (i == j) ? power(i, j) == k_pow : power(i, j) == 0;
                if (!ok) {
                    ident = false;
                    break;
                }
            }
        if (ident) return {true, t, PeriodicityMethod::DirectPower};
    }
    return {false, std::nullopt, PeriodicityMethod::DirectPower};
}

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

/// Order of e^{i pi a/b} in the unit circle: smallest t with t*a/b even.
long rotation_order(long a, long b) {
    long t = 1;
    while ((t * a) % (2 * b) != 0) ++t;
    return t;
}

} // namespace

PeriodicityVerdict check_periodic_spectral(const Graph& g) {
    if (auto p = srg_recognize(g)) {
        auto family = srg_periodicity_class(*p);
        if (!family) return {false, std::nullopt, PeriodicityMethod::Spectral};
        // sigma(U) consists of the lifts e^{+-i arccos(theta/k)} plus possibly
        // +-1; the lcm of their orders is a valid exponent.
        auto spec = exact_spectrum(g.adjacency_matrix());
        long period = 2;
        for (const auto& [theta, mult] : spec.eigenvalues) {
            ExactScalar lam = theta / ExactScalar(static_cast<long>(p->k));
            auto angle = recognize_cosine_angle(lam);
            if (!angle) throw std::logic_error("periodic SRG family with unrecognized angle");
            period = lcm_long(period, rotation_order(angle->first, angle->second));
        }
        return {true, period, PeriodicityMethod::Spectral};
    }
    auto cls = classify_swr(g);
    if (cls.tag == SwrTag::Genuine) {
        auto preds = basic_predicates(g);
        long k = *preds.regular;
        auto spec = exact_spectrum(g.adjacency_matrix());
        bool half_spectrum =
            spec.distinct_count() == 4 && spec.eigenvalues[0].first == ExactScalar(Int(k)) &&
            spec.eigenvalues[1].first == ExactScalar(make_rat(k, 2)) &&
            spec.eigenvalues[2].first == ExactScalar(0) &&
            spec.eigenvalues[3].first == ExactScalar(-make_rat(k, 2));
        if (half_spectrum) {
            // sigma(U) = {+-1, e^{+-i pi/2}, e^{+-i pi/3}, e^{+-2i pi/3}}, so U^12 = I.
            return {true, 12, PeriodicityMethod::Spectral};
        }
        return {false, std::nullopt, PeriodicityMethod::Spectral};
    }
    throw UnsupportedGraph(
        "spectral periodicity is decided only for strongly regular and genuine "
        "strongly walk-regular graphs: " +
        g.label());
}

nlohmann::json operators_to_json(const WalkOperators& ops) {
    nlohmann::json j;
    j["k"] = ops.k;
    j["arcs"] = nlohmann::json::array();
    for (const Arc& a : ops.arc_order) j["arcs"].push_back({a.origin, a.terminus});
    auto dump = [](const RatMat& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < m.cols(); ++jj) {
                const Rat& v = m(i, jj);
                row.push_back({v.get_num().get_str(), v.get_den().get_str()});
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["U"] = dump(ops.U);
    j["P"] = dump(ops.P);
    return j;
}

} // namespace gwalk
