#pragma once

#include "gwalk/errors.hpp"
#include "gwalk/rational.hpp"

#include <string>

namespace gwalk {

/// Element of Q or of a real quadratic field Q(sqrt(D)), stored as a + b*sqrt(D)
/// with exact rational a, b and square-free integer D > 1.  D == 0 marks a plain
/// rational (then b == 0).  Arithmetic never mixes two distinct fields; doing so
/// throws FieldMismatch.
class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0), d_(0) {}
    ExactScalar(long v) : a_(v), b_(0), d_(0) {}        // NOLINT(google-explicit-constructor)
    ExactScalar(const Int& v) : a_(v), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(const Rat& v) : a_(v), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)

    /// a + b*sqrt(d); requires d > 1 square-free. Collapses to rational when b == 0.
    static ExactScalar quadratic(const Rat& a, const Rat& b, long d);

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    long field() const { return d_; }

    /// Value as a plain rational; throws FieldMismatch if irrational.
    const Rat& as_rational() const;

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }
    bool operator<(const ExactScalar& o) const { return cmp(o) < 0; }
    bool operator>(const ExactScalar& o) const { return cmp(o) > 0; }

    /// Exact sign (-1, 0, +1) of a + b*sqrt(d).
    int sign() const;
    /// Exact three-way comparison as real numbers; unlike the arithmetic
    /// operators this works across distinct quadratic fields.
    int cmp(const ExactScalar& o) const;

    ExactScalar conjugate() const { return quadratic_raw(a_, -b_, d_); }
    /// Field norm a^2 - b^2 d (= a^2 for rationals).
    Rat norm() const { return a_ * a_ - b_ * b_ * d_; }
    /// Field trace 2a.
    Rat trace() const { return 2 * a_; }

    std::string str() const;
    double approx() const;

private:
    static ExactScalar quadratic_raw(const Rat& a, const Rat& b, long d);
    /// Returns the common field of the two operands, throwing on a clash.
    static long join_field(const ExactScalar& x, const ExactScalar& y);

    Rat a_, b_;
    long d_;
};

/// x^e by repeated multiplication; e >= 0.
ExactScalar pow(const ExactScalar& x, long e);

/// True if n has no repeated prime factor (n > 1).
bool is_squarefree(long n);

/// Writes v = square * d with d square-free; returns {square root, d}.
std::pair<Int, Int> extract_square_part(const Int& v);

} // namespace gwalk
