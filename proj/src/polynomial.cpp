#include "gwalk/polynomial.hpp"

#include <sstream>

namespace gwalk {

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(Int(0));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

ExactScalar IntPoly::eval(const ExactScalar& x) const {
    ExactScalar acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + ExactScalar(Rat(*it));
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (degree() == 0) return IntPoly();
    std::vector<Int> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

bool IntPoly::try_deflate_linear(const Int& root, IntPoly& quotient) const {
    if (degree() < 1) return false;
    std::vector<Int> q(c.size() - 1);
    Int carry = c.back();
    for (int i = degree() - 1; i >= 0; --i) {
        q[i] = carry;
        carry = c[i] + carry * root;
    }
    if (carry != 0) return false;
    quotient = IntPoly(std::move(q));
    return true;
}

bool IntPoly::try_deflate_quadratic(const Int& t, const Int& s, IntPoly& quotient) const {
    int n = degree();
    if (n < 2) return false;
    // Long division by the monic quadratic x^2 - t*x + s.
    std::vector<Int> work = c;
    std::vector<Int> q(n - 1);
    for (int i = n; i >= 2; --i) {
        q[i - 2] = work[i];
        work[i - 1] += t * q[i - 2];
        work[i - 2] -= s * q[i - 2];
    }
    if (work[0] != 0 || work[1] != 0) return false;
    quotient = IntPoly(std::move(q));
    return true;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace gwalk
