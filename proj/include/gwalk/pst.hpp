#pragma once

#include "gwalk/exact_scalar.hpp"
#include "gwalk/graph.hpp"
#include "gwalk/matrix.hpp"
#include "gwalk/spectral.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwalk {

/// Shared exact spectral data of a connected k-regular graph: the adjacency
/// spectrum, the discriminant eigenvalues theta/k (same descending order),
/// and the Lagrange eigenprojections (identical for A and P).
struct SpectralContext {
    int k = 0;
    int n = 0;
    SpectrumReport spectrum;               // of the adjacency matrix
    std::vector<ExactScalar> p_eigenvalues; // theta/k, descending
    std::vector<ScalarMat> projections;     // E_lambda, same order
};

/// Throws UnsupportedGraph (non-regular/disconnected) or
/// IrreducibleCubicOrHigher (spectrum outside Q(sqrt(D))).
SpectralContext spectral_context(const Graph& g);

/// Chebyshev polynomial of the first kind at a matrix:
/// T_0 = I, T_1 = P, T_{m+1} = 2 P T_m - T_{m-1}, exact.
RatMat chebyshev_matrix(const RatMat& p, long tau);

/// All ordered pairs x != y with T_tau(P) e_x = e_y exactly
/// (the Chebyshev characterization of arc-space transfer). Sorted by (x, y).
std::vector<std::pair<int, int>> pst_at_time(const Graph& g, long tau);

struct SupportSet {
    int vertex = 0;
    std::vector<ExactScalar> eigenvalues; // subset of sigma(P), descending
};

/// Eigenvalue support Theta_P(e_x) = { lambda : E_lambda e_x != 0 }.
SupportSet eigenvalue_support(const SpectralContext& ctx, int x);
SupportSet eigenvalue_support(const Graph& g, int x);

/// Per-eigenvalue signs s with E_lambda e_x = s * E_lambda e_y for all
/// lambda in sigma(P); zero projections record +1. Absent when the columns
/// disagree for some eigenvalue.
std::optional<std::vector<int>> strong_cospectrality(const SpectralContext& ctx, int x, int y);

struct AngleCertificate {
    long j = 0; // least j in [0, tau] with lambda = cos(j pi / tau)
    bool even = false;
};

/// Writes lambda = cos(a pi / b) in lowest terms over the finite table of
/// degree <= 2 rational-angle cosines; nullopt if lambda is not such a cosine.
std::optional<std::pair<long, long>> recognize_cosine_angle(const ExactScalar& lambda);

/// Recognizes lambda among exact cosines of rational angles (degree <= 2) and
/// returns the least j in [0, tau] with lambda = cos(j pi / tau). Returns
/// nullopt when lambda is such a cosine but no j fits tau. Throws
/// UnrecognizedAngle when lambda is not a rational-angle cosine at all (then
/// no certificate exists for any tau).
std::optional<AngleCertificate> angle_certificate(const ExactScalar& lambda, long tau);

struct PstCertificate {
    std::vector<std::pair<ExactScalar, int>> signs;  // lambda -> +-1 over sigma(P)
    std::vector<std::pair<ExactScalar, long>> angles; // lambda -> j over Theta_P(e_x)
};

struct PstVerdict {
    bool transfers = false;
    std::string reason; // which condition failed, for reports
    std::optional<PstCertificate> certificate;
};

/// Eigenprojection route: strong cospectrality, then angle certificates with
/// parities matching the signs, quantified over Theta_P(e_x).
PstVerdict pst_via_conditions(const SpectralContext& ctx, int x, int y, long tau);
PstVerdict pst_via_conditions(const Graph& g, int x, int y, long tau);

enum class FilterStatus { Pass, Fail, Skipped };

struct FilterVerdict {
    FilterStatus status = FilterStatus::Skipped;
    std::optional<ExactScalar> failing; // first failing lambda in sigma(P), descending
};

/// Necessary condition for PST and periodicity: 2*lambda must be an algebraic
/// integer for every lambda in sigma(P). Rational lambda: 2*theta/k in Z.
/// Quadratic lambda: integrality of trace and norm of 2*lambda.
FilterVerdict algebraic_integer_filter(const Graph& g);

struct PstPair {
    int x = 0, y = 0;
    long tau = 0; // minimal transferring time for this ordered pair
    PstCertificate certificate;
};

struct PstReport {
    std::string graph_label;
    std::string spectrum; // "{[k]^1, ...}" or "unsupported"
    FilterVerdict filter;
    std::optional<bool> periodic;
    std::optional<long> period;
    std::vector<long> checked_times;
    std::vector<PstPair> pairs; // sorted by (x, y)
};

/// Full PST scan. Spectrum {k, k/2, 0, -k/2}: only tau in {6, 12} need
/// checking. Otherwise scans tau = 1..tau_max, stopping at the period when
/// the spectral route certifies one, and short-circuits to "no PST" without
/// scanning when the algebraic-integer filter fails.
PstReport minimal_time_scan(const Graph& g, long tau_max = 60);

nlohmann::json report_to_json(const PstReport& report);

} // namespace gwalk
