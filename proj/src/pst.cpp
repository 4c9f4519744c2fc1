#include "gwalk/pst.hpp"

#include "gwalk/grover.hpp"
#include "gwalk/walk_regularity.hpp"

#include <algorithm>
#include <numeric>

namespace gwalk {

SpectralContext spectral_context(const Graph& g) {
    auto preds = basic_predicates(g);
    if (!preds.regular || !preds.connected)
        throw UnsupportedGraph("spectral context needs a connected regular graph: " + g.label());
    SpectralContext ctx;
    ctx.k = *preds.regular;
    ctx.n = g.n();
    IntMat a = g.adjacency_matrix();
    ctx.spectrum = exact_spectrum(a);
    RatMat ar = to_rational(a);
    ExactScalar k_scalar(static_cast<long>(ctx.k));
    for (const auto& [theta, mult] : ctx.spectrum.eigenvalues) {
        ctx.p_eigenvalues.push_back(theta / k_scalar);
        ctx.projections.push_back(eigenprojection(ar, ctx.spectrum, theta));
    }
    return ctx;
}

RatMat chebyshev_matrix(const RatMat& p, long tau) {
    if (!p.square()) throw std::invalid_argument("chebyshev_matrix requires a square matrix");
    if (tau < 0) throw std::domain_error("chebyshev_matrix requires tau >= 0");
    RatMat prev = RatMat::identity(p.rows());
    if (tau == 0) return prev;
    RatMat cur = p;
    for (long m = 1; m < tau; ++m) {
        RatMat next = (p * cur).scaled(Rat(2)) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

/// Ordered pairs (x, y), x != y, whose columns satisfy T e_x = e_y.
std::vector<std::pair<int, int>> transfer_pairs(const RatMat& t) {
    std::vector<std::pair<int, int>> pairs;
    const int n = t.rows();
    for (int x = 0; x < n; ++x) {
        int y = -1;
        bool unit = true;
        for (int i = 0; i < n && unit; ++i) {
            const Rat& v = t(i, x);
            if (v == 0) continue;
            if (v == 1 && y == -1)
                y = i;
            else
                unit = false;
        }
        if (unit && y >= 0 && y != x) pairs.emplace_back(x, y);
    }
    return pairs;
}

RatMat discriminant_of(const Graph& g) {
    auto preds = basic_predicates(g);
    if (!preds.regular || *preds.regular < 1 || !preds.connected)
        throw UnsupportedGraph("PST analysis needs a connected regular graph: " + g.label());
    int k = *preds.regular;
    RatMat p(g.n(), g.n());
    Rat inv_k = make_rat(1, k);
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y)
            if (g.adjacent(x, y)) p(x, y) = inv_k;
    return p;
}

} // namespace

std::vector<std::pair<int, int>> pst_at_time(const Graph& g, long tau) {
    if (tau < 1) throw std::domain_error("pst_at_time requires tau >= 1");
    return transfer_pairs(chebyshev_matrix(discriminant_of(g), tau));
}

SupportSet eigenvalue_support(const SpectralContext& ctx, int x) {
    if (x < 0 || x >= ctx.n) throw std::domain_error("vertex out of range");
    SupportSet s;
    s.vertex = x;
    for (size_t i = 0; i < ctx.projections.size(); ++i) {
        const ScalarMat& e = ctx.projections[i];
        for (int r = 0; r < e.rows(); ++r)
            if (!e(r, x).is_zero()) {
                s.eigenvalues.push_back(ctx.p_eigenvalues[i]);
                break;
            }
    }
    return s;
}

SupportSet eigenvalue_support(const Graph& g, int x) {
    return eigenvalue_support(spectral_context(g), x);
}

std::optional<std::vector<int>> strong_cospectrality(const SpectralContext& ctx, int x, int y) {
    if (x == y) throw std::domain_error("strong cospectrality needs distinct vertices");
    std::vector<int> signs;
    for (const ScalarMat& e : ctx.projections) {
        bool plus = true, minus = true, zero = true;
        for (int r = 0; r < e.rows(); ++r) {
            const ExactScalar& ex = e(r, x);
            const ExactScalar& ey = e(r, y);
            if (!ex.is_zero() || !ey.is_zero()) zero = false;
            if (!(ex == ey)) plus = false;
            if (!(ex == -ey)) minus = false;
            if (!plus && !minus) return std::nullopt;
        }
        signs.push_back((zero || plus) ? +1 : -1);
    }
    return signs;
}

std::optional<std::pair<long, long>> recognize_cosine_angle(const ExactScalar& lambda) {
    // Rational cosines of rational angles (Niven): 0, +-1/2, +-1.
    if (lambda.is_rational()) {
        const Rat& v = lambda.as_rational();
        if (v == 1) return {{0, 1}};
        if (v == -1) return {{1, 1}};
        if (v == 0) return {{1, 2}};
        if (v == make_rat(1, 2)) return {{1, 3}};
        if (v == make_rat(-1, 2)) return {{2, 3}};
        return std::nullopt;
    }
    // Quadratic table: cos(pi/4), cos(pi/6), and the degree-2 cosines of
    // pi/5-multiples, with their mirrors.
    struct Entry {
        ExactScalar value;
        long a, b;
    };
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        Rat half = make_rat(1, 2);
        Rat quarter = make_rat(1, 4);
        t.push_back({ExactScalar::quadratic(0, half, 2), 1, 4});       // cos(pi/4)
        t.push_back({ExactScalar::quadratic(0, -half, 2), 3, 4});      // cos(3pi/4)
        t.push_back({ExactScalar::quadratic(0, half, 3), 1, 6});       // cos(pi/6)
        t.push_back({ExactScalar::quadratic(0, -half, 3), 5, 6});      // cos(5pi/6)
        t.push_back({ExactScalar::quadratic(quarter, quarter, 5), 1, 5});    // cos(pi/5)
        t.push_back({ExactScalar::quadratic(-quarter, quarter, 5), 2, 5});   // cos(2pi/5)
        t.push_back({ExactScalar::quadratic(quarter, -quarter, 5), 3, 5});   // cos(3pi/5)
        t.push_back({ExactScalar::quadratic(-quarter, -quarter, 5), 4, 5});  // cos(4pi/5)
        return t;
    }();
    for (const auto& entry : table)
        if (entry.value == lambda) return {{entry.a, entry.b}};
    return std::nullopt;
}

std::optional<AngleCertificate> angle_certificate(const ExactScalar& lambda, long tau) {
    if (tau < 1) throw std::domain_error("angle_certificate requires tau >= 1");
    auto angle = recognize_cosine_angle(lambda);
    if (!angle)
        throw UnrecognizedAngle("eigenvalue " + lambda.str() +
                                " is not the cosine of a rational multiple of pi");
    auto [a, b] = *angle;
    // lambda = cos(j pi / tau) for j in [0, tau] iff j/tau = a/b (cos is
    // injective on [0, pi]), i.e. j = a*tau/b integral.
    if ((a * tau) % b != 0) return std::nullopt;
    long j = a * tau / b;
    return AngleCertificate{j, j % 2 == 0};
}

PstVerdict pst_via_conditions(const SpectralContext& ctx, int x, int y, long tau) {
    if (x == y) throw std::domain_error("pst_via_conditions needs distinct vertices");
    if (tau < 1) throw std::domain_error("pst_via_conditions requires tau >= 1");
    PstVerdict v;

    auto signs = strong_cospectrality(ctx, x, y);
    if (!signs) {
        v.reason = "not strongly cospectral";
        return v;
    }
    SupportSet support = eigenvalue_support(ctx, x);
    auto in_support = [&](const ExactScalar& lam) {
        return std::find(support.eigenvalues.begin(), support.eigenvalues.end(), lam) !=
               support.eigenvalues.end();
    };

    PstCertificate cert;
    for (size_t i = 0; i < ctx.p_eigenvalues.size(); ++i)
        cert.signs.emplace_back(ctx.p_eigenvalues[i], (*signs)[i]);

    for (size_t i = 0; i < ctx.p_eigenvalues.size(); ++i) {
        const ExactScalar& lam = ctx.p_eigenvalues[i];
        if (!in_support(lam)) continue; // conditions quantify over Theta_P(e_x)
        std::optional<AngleCertificate> cert_j;
        try {
            cert_j = angle_certificate(lam, tau);
        } catch (const UnrecognizedAngle&) {
            v.reason = "eigenvalue " + lam.str() + " admits no angle certificate";
            return v;
        }
        if (!cert_j) {
            v.reason = "eigenvalue " + lam.str() + " is not cos(j pi/" + std::to_string(tau) + ")";
            return v;
        }
        bool need_even = (*signs)[i] > 0;
        if (cert_j->even != need_even) {
            v.reason = "parity mismatch at eigenvalue " + lam.str();
            return v;
        }
        cert.angles.emplace_back(lam, cert_j->j);
    }
    v.transfers = true;
    v.reason = "strong cospectrality and angle parities hold";
    v.certificate = std::move(cert);
    return v;
}

PstVerdict pst_via_conditions(const Graph& g, int x, int y, long tau) {
    return pst_via_conditions(spectral_context(g), x, y, tau);
}

FilterVerdict algebraic_integer_filter(const Graph& g) {
    auto preds = basic_predicates(g);
    if (!preds.regular || !preds.connected)
        throw UnsupportedGraph("filter needs a connected regular graph: " + g.label());
    SpectrumReport spec = exact_spectrum(g.adjacency_matrix());
    ExactScalar k_scalar(static_cast<long>(*preds.regular));
    for (const auto& [theta, mult] : spec.eigenvalues) {
        ExactScalar two_lambda = (theta / k_scalar) * ExactScalar(2);
        bool ok;
        if (two_lambda.is_rational()) {
            ok = is_integer(two_lambda.as_rational());
        } else {
            // Algebraic integer in Q(sqrt(m)) iff trace and norm are integers.
            ok = is_integer(two_lambda.trace()) && is_integer(two_lambda.norm());
        }
        if (!ok) return {FilterStatus::Fail, theta / k_scalar};
    }
    return {FilterStatus::Pass, std::nullopt};
}

namespace {

bool has_half_spectrum(const SpectrumReport& spec, long k) {
    return spec.distinct_count() == 4 && spec.eigenvalues[0].first == ExactScalar(Int(k)) &&
           spec.eigenvalues[1].first == ExactScalar(make_rat(k, 2)) &&
           spec.eigenvalues[2].first == ExactScalar(0) &&
           spec.eigenvalues[3].first == ExactScalar(-make_rat(k, 2));
}

} // namespace

PstReport minimal_time_scan(const Graph& g, long tau_max) {
    if (tau_max < 1) throw std::domain_error("tau_max must be >= 1");
    auto preds = basic_predicates(g);
    if (!preds.regular || !preds.connected)
        throw UnsupportedGraph("minimal_time_scan needs a connected regular graph: " + g.label());
    const long k = *preds.regular;

    PstReport report;
    report.graph_label = g.label();

    std::optional<SpectralContext> ctx;
    try {
        ctx = spectral_context(g);
        report.spectrum = ctx->spectrum.spectrum_string();
        report.filter = algebraic_integer_filter(g);
    } catch (const IrreducibleCubicOrHigher&) {
        report.spectrum = "unsupported";
        report.filter = {FilterStatus::Skipped, std::nullopt};
    }

    // Periodicity via the spectral route where it applies.
    try {
        auto verdict = check_periodic_spectral(g);
        report.periodic = verdict.periodic;
        report.period = verdict.period;
    } catch (const UnsupportedGraph&) {
        // Outside the SRG / genuine classes; fall back to bounded powering on
        // small arc spaces.
        if (2 * g.edge_count() <= 300) {
            auto verdict = check_periodic_direct(build_operators(g), 120);
            if (verdict.periodic) {
                report.periodic = true;
                report.period = verdict.period;
            }
        }
    }

    // Failing the necessary condition settles the question with no scan; the
    // same condition is necessary for periodicity, so that verdict is settled
    // too when the classed routes left it open.
    if (report.filter.status == FilterStatus::Fail) {
        if (!report.periodic) report.periodic = false;
        return report;
    }

    std::vector<long> taus;
    if (ctx && has_half_spectrum(ctx->spectrum, k)) {
        taus = {6, 12}; // minimal PST time for this spectrum is 6 or 12
    } else {
        long bound = tau_max;
        if (report.periodic.value_or(false) && report.period && *report.period < bound)
            bound = *report.period; // PST beyond one period repeats
        for (long t = 1; t <= bound; ++t) taus.push_back(t);
    }
    report.checked_times = taus;

    RatMat p = discriminant_of(g);
    std::map<std::pair<int, int>, long> first_time;
    RatMat prev = RatMat::identity(g.n());
    RatMat cur = p;
    long cur_tau = 1;
    for (long tau : taus) {
        while (cur_tau < tau) {
            RatMat next = (p * cur).scaled(Rat(2)) - prev;
            prev = std::move(cur);
            cur = std::move(next);
            ++cur_tau;
        }
        for (auto [x, y] : transfer_pairs(cur))
            if (!first_time.count({x, y})) first_time[{x, y}] = tau;
    }

    for (const auto& [pair, tau] : first_time) {
        PstPair entry;
        entry.x = pair.first;
        entry.y = pair.second;
        entry.tau = tau;
        if (ctx) {
            auto verdict = pst_via_conditions(*ctx, entry.x, entry.y, tau);
            if (!verdict.transfers)
                throw std::logic_error("Chebyshev route and condition route disagree at tau=" +
                                       std::to_string(tau));
            entry.certificate = *verdict.certificate;
        }
        report.pairs.push_back(std::move(entry));
    }
    return report;
}

nlohmann::json report_to_json(const PstReport& report) {
    nlohmann::json j;
    j["graph"] = report.graph_label;
    j["spectrum"] = report.spectrum;
    switch (report.filter.status) {
        case FilterStatus::Pass: j["filter"] = "pass"; break;
        case FilterStatus::Fail: j["filter"] = "fail"; break;
        case FilterStatus::Skipped: j["filter"] = "skipped"; break;
    }
    if (report.filter.failing) j["filter_failing_eigenvalue"] = report.filter.failing->str();
    if (report.periodic)
        j["periodic"] = *report.periodic;
    else
        j["periodic"] = nullptr;
    if (report.period)
        j["period"] = *report.period;
    else
        j["period"] = nullptr;
    j["checked_times"] = report.checked_times;
    j["pst"] = nlohmann::json::array();
    for (const PstPair& p : report.pairs) {
        nlohmann::json e;
        e["x"] = p.x;
        e["y"] = p.y;
        e["tau"] = p.tau;
        e["signs"] = nlohmann::json::array();
        for (const auto& [lam, s] : p.certificate.signs)
            e["signs"].push_back({{"eigenvalue", lam.str()}, {"sign", s}});
        e["angles"] = nlohmann::json::array();
        for (const auto& [lam, jj] : p.certificate.angles)
            e["angles"].push_back({{"eigenvalue", lam.str()}, {"j", jj}});
        j["pst"].push_back(std::move(e));
    }
    return j;
}

} // namespace gwalk
