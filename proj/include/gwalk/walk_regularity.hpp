#pragma once

#include "gwalk/exact_scalar.hpp"
#include "gwalk/graph.hpp"
#include "gwalk/spectral.hpp"

#include <array>
#include <optional>
#include <string>

namespace gwalk {

/// Parameters (n, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
    long n = 0, k = 0, lambda = 0, mu = 0;

    /// k(k - lambda - 1) = (n - 1 - k) mu, and 0 < k < n-1.
    bool valid() const {
        return 0 < k && k < n - 1 && k * (k - lambda - 1) == (n - 1 - k) * mu;
    }
    bool operator==(const SrgParams& o) const {
        return n == o.n && k == o.k && lambda == o.lambda && mu == o.mu;
    }
};

/// Parameters for which a strongly regular graph can be periodic; each family
/// determines the graph uniquely (K_{m,m}, K_{m,m,m}, C_5).
enum class SrgFamily { Kmm, Kmmm, C5 };

std::optional<SrgParams> srg_recognize(const Graph& g);

/// theta_pm = (lambda - mu +- sqrt((lambda-mu)^2 - 4(k-mu))) / 2, exact.
std::pair<ExactScalar, ExactScalar> srg_eigenvalues(const SrgParams& p);

/// True iff the eigenvalues are irrational (conference-type half case); then
/// the parameters are forced to (4mu+1, 2mu, mu-1, mu).
bool srg_half_case(const SrgParams& p);

std::optional<SrgFamily> srg_periodicity_class(const SrgParams& p);

const char* srg_family_name(SrgFamily f);

/// Coefficients (a, b, c) with A^ell = aI + bA + cJ, exactly, when they exist.
/// The candidate solution is read off one diagonal, one adjacent and one
/// non-adjacent entry, then verified on all n^2 entries.
std::optional<std::array<Rat, 3>> is_strongly_l_walk_regular(const Graph& g, long ell);

/// Exact evaluation of
///   (t2 - t3) t1^ell + (t3 - t1) t2^ell + (t1 - t2) t3^ell == 0
/// for pairwise distinct eigenvalues and odd ell >= 3.
bool swr_eigenvalue_criterion(const ExactScalar& t1, const ExactScalar& t2,
                              const ExactScalar& t3, long ell);

enum class SwrTag {
    Empty,
    DisjointComplete,
    StronglyRegular,
    DisjointCompleteBipartite, // plus isolated vertices
    Genuine,
    NotSwr,
};

const char* swr_tag_name(SwrTag t);

struct SwrClass {
    SwrTag tag = SwrTag::NotSwr;
    std::optional<long> witness_ell; // smallest witnessing ell where applicable
    std::optional<SrgParams> srg;    // for the strongly-regular tag
};

/// Assigns exactly one of the van Dam-Omidi classes. "Genuine" requires a
/// connected regular graph with exactly four distinct eigenvalues passing the
/// A^ell test for some odd ell in [3, ell_max].
SwrClass classify_swr(const Graph& g, long ell_max = 21);

/// Number of distinct adjacency eigenvalues: degree of the minimal polynomial.
/// Works even when the spectrum lies outside Q(sqrt(D)).
int distinct_eigenvalue_count(const Graph& g);

} // namespace gwalk
