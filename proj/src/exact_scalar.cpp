#include "gwalk/exact_scalar.hpp"

#include <sstream>
#include <cmath>

namespace gwalk {

ExactScalar ExactScalar::quadratic(const Rat& a, const Rat& b, long d) {
    if (b == 0) return ExactScalar(a);
    if (d <= 1 || !is_squarefree(d))
        throw FieldMismatch("quadratic scalar requires square-free D > 1, got " + std::to_string(d));
    return quadratic_raw(a, b, d);
}

ExactScalar ExactScalar::quadratic_raw(const Rat& a, const Rat& b, long d) {
    ExactScalar s;
    s.a_ = a;
    s.b_ = b;
    s.d_ = (b == 0) ? 0 : d;
    return s;
}

const Rat& ExactScalar::as_rational() const {
    if (!is_rational()) throw FieldMismatch("scalar " + str() + " is not rational");
    return a_;
}

long ExactScalar::join_field(const ExactScalar& x, const ExactScalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
    throw FieldMismatch("cannot mix Q(sqrt(" + std::to_string(x.d_) + ")) with Q(sqrt(" +
                        std::to_string(y.d_) + "))");
}

ExactScalar ExactScalar::operator-() const { return quadratic_raw(-a_, -b_, d_); }

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    long d = join_field(*this, o);
    return quadratic_raw(a_ + o.a_, b_ + o.b_, d);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    long d = join_field(*this, o);
    return quadratic_raw(a_ - o.a_, b_ - o.b_, d);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    long d = join_field(*this, o);
    // (a + b√d)(c + e√d) = (ac + be·d) + (ae + bc)√d
    return quadratic_raw(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.is_zero()) throw std::domain_error("ExactScalar division by zero");
    if (o.is_rational()) return quadratic_raw(a_ / o.a_, b_ / o.a_, d_);
    long d = join_field(*this, o);
    Rat n = o.norm(); // nonzero: sqrt(d) irrational
    ExactScalar inv = quadratic_raw(o.a_ / n, -o.b_ / n, d);
    return *this * inv;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return b_ == 0 || d_ == o.d_;
}

int ExactScalar::cmp(const ExactScalar& o) const {
    if (d_ == 0 || o.d_ == 0 || d_ == o.d_) return (*this - o).sign();
    // Distinct quadratic fields: decide sign(r + b*sqrt(d) - e*sqrt(f))
    // with r = a - o.a, b = b_, e = o.b_, both radical parts nonzero.
    const Rat r = a_ - o.a_;
    const Rat& b = b_;
    const Rat& e = o.b_;
    int sb = sgn(b), se = sgn(e);
    int s; // sign of T = b*sqrt(d) - e*sqrt(f); never 0 (d != f square-free)
    if (sb > 0 && se < 0)
        s = 1;
    else if (sb < 0 && se > 0)
        s = -1;
    else {
        int c = ::cmp(b * b * d_, e * e * o.d_); // sign(T1^2 - T2^2), nonzero
        s = sb > 0 ? c : -c;
    }
    if (r == 0) return s;
    int sr = sgn(r);
    if (sr == s) return sr;
    // r and T have opposite signs: the larger magnitude wins. Compare
    // r^2 - T^2 = (r^2 - b^2 d - e^2 f) + 2be*sqrt(df), one radical again.
    Rat u = r * r - b * b * d_ - e * e * o.d_;
    Rat v = 2 * b * e;
    auto [sq, g] = extract_square_part(Int(d_) * Int(o.d_));
    int mag = quadratic_raw(u, v * Rat(sq), g.get_si()).sign();
    if (mag == 0) throw std::logic_error("rational equals a proper quadratic irrational");
    return mag > 0 ? sr : s;
}

int ExactScalar::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // Opposite signs: compare |a|^2 against b^2 d.
    int c = ::cmp(a_ * a_, b_ * b_ * d_);
    if (c == 0) return 0; // unreachable for square-free d, kept for safety
    return c > 0 ? sa : sb;
}

std::string ExactScalar::str() const {
    if (is_rational()) return rat_str(a_);
    std::ostringstream os;
    if (a_ != 0) os << rat_str(a_) << (sgn(b_) > 0 ? "+" : "");
    if (b_ == 1)
        os << "sqrt(" << d_ << ")";
    else if (b_ == -1)
        os << "-sqrt(" << d_ << ")";
    else
        os << rat_str(b_) << "*sqrt(" << d_ << ")";
    return os.str();
}

double ExactScalar::approx() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

ExactScalar pow(const ExactScalar& x, long e) {
    ExactScalar r(1);
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

bool is_squarefree(long n) {
    if (n < 1) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

std::pair<Int, Int> extract_square_part(const Int& v) {
    if (v <= 0) throw std::domain_error("extract_square_part requires a positive value");
    Int sq = 1, rest = v;
    for (Int p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            sq *= p;
        }
    }
    return {sq, rest};
}

} // namespace gwalk
