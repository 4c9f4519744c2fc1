#pragma once

#include <gmpxx.h>

#include <string>

namespace gwalk {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Numerator of an integral rational; caller guarantees is_integer(r).
inline Int to_integer(const Rat& r) { return r.get_num(); }

/// Canonical "p/q" string ("p" when q == 1), as used in JSON reports.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int sign_of(const Rat& r) { return sgn(r); }

} // namespace gwalk
