#pragma once

#include "gwalk/graph.hpp"
#include "gwalk/matrix.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace gwalk {

/// Exact Grover-walk matrices of a connected k-regular graph over the
/// canonical arc order. The boundary matrix d itself (entries 1/sqrt(k)) is
/// never materialized: dd* = I and P = A/k keep every check inside Q.
struct WalkOperators {
    std::vector<Arc> arc_order;
    RatMat U; // 2|E| x 2|E| time evolution, orthogonal
    RatMat P; // n x n discriminant, equals A/k
    int k = 0;
};

/// Builds U entrywise from U_{a,b} = (2/k) [o(a)=t(b)] - [a=b^{-1}] and P = A/k.
/// Throws UnsupportedGraph for non-regular or disconnected input.
WalkOperators build_operators(const Graph& g);

enum class PeriodicityMethod { DirectPower, Spectral };

struct PeriodicityVerdict {
    bool periodic = false;
    std::optional<long> period; // minimal for DirectPower; a valid exponent for Spectral
    PeriodicityMethod method = PeriodicityMethod::DirectPower;
};

/// Repeated exact multiplication; returns the first tau <= tau_max with
/// U^tau = I, else not-periodic-within-bound.
PeriodicityVerdict check_periodic_direct(const WalkOperators& ops, long tau_max);

/// Spectral route. SRGs: periodic iff the parameters sit in one of the three
/// family. Genuine strongly walk-regular graphs: periodic iff the spectrum is
/// {k, k/2, 0, -k/2} (then U^12 = I). Throws UnsupportedGraph outside both
/// classes. The reported period is a valid exponent, not necessarily minimal.
PeriodicityVerdict check_periodic_spectral(const Graph& g);

/// Exact JSON dump of U and P as numerator/denominator pairs.
nlohmann::json operators_to_json(const WalkOperators& ops);

} // namespace gwalk
