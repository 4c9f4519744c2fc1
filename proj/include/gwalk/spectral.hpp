#pragma once

#include "gwalk/exact_scalar.hpp"
#include "gwalk/matrix.hpp"
#include "gwalk/polynomial.hpp"

#include <string>
#include <vector>

namespace gwalk {

/// Exact spectrum of an integer symmetric matrix: distinct eigenvalues in
/// Q or a quadratic field, sorted descending, with multiplicities, plus the
/// monic integer characteristic polynomial.
struct SpectrumReport {
    std::vector<std::pair<ExactScalar, int>> eigenvalues;
    IntPoly charpoly;
    int n = 0;

    int distinct_count() const { return static_cast<int>(eigenvalues.size()); }
    bool contains(const ExactScalar& v) const;
    int multiplicity(const ExactScalar& v) const;
    /// "{[6]^1, [3]^6, [0]^12, [-3]^8}"
    std::string spectrum_string() const;
};

/// Monic characteristic polynomial det(xI - m) by the exact Leverrier trace
/// recursion. With require_integer_input the entries must be integers (the
/// recursion then runs fraction-free); either way the result must come out
/// with integer coefficients.
IntPoly char_poly(const RatMat& m, bool require_integer_input = false);
IntPoly char_poly(const IntMat& m);

/// Factors the characteristic polynomial of a symmetric integer matrix into
/// linear and irreducible quadratic integer factors. Quadratic factors yield
/// conjugate pairs a +- b*sqrt(D). Throws IrreducibleCubicOrHigher when an
/// irreducible factor of degree >= 3 remains.
SpectrumReport exact_spectrum(const IntMat& a);

/// Lagrange eigenprojection E_lambda = prod_{mu != lambda} (A - mu I)/(lambda - mu).
/// Entries lie in Q or in the single quadratic field of the spectrum.
ScalarMat eigenprojection(const RatMat& a, const SpectrumReport& spectrum,
                          const ExactScalar& lambda);

/// Horner evaluation of a polynomial (ascending rational coefficients) at a
/// square matrix, exactly.
RatMat mat_poly_eval(const std::vector<Rat>& coeffs, const RatMat& m);

} // namespace gwalk
