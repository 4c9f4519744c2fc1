#pragma once

#include "gwalk/exact_scalar.hpp"
#include "gwalk/rational.hpp"

#include <string>
#include <vector>

namespace gwalk {

/// Integer-coefficient polynomial, coefficients ascending by degree.
/// The zero polynomial is {0}; otherwise the leading coefficient is nonzero.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() : c{Int(0)} {}
    explicit IntPoly(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.size() == 1 && c[0] == 0; }
    const Int& leading() const { return c.back(); }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    ExactScalar eval(const ExactScalar& x) const;

    IntPoly derivative() const;

    /// Quotient by (x - root) when the division is exact.
    bool try_deflate_linear(const Int& root, IntPoly& quotient) const;
    /// Quotient by x^2 - t*x + s when the division is exact.
    bool try_deflate_quadratic(const Int& t, const Int& s, IntPoly& quotient) const;

    /// Human-readable form, highest degree first, e.g. "x^3 - 3*x - 2".
    std::string str(const std::string& var = "x") const;

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

} // namespace gwalk
