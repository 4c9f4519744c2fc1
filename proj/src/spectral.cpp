#include "gwalk/spectral.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gwalk {

bool SpectrumReport::contains(const ExactScalar& v) const {
    for (const auto& [val, mult] : eigenvalues)
        if (val == v) return true;
    return false;
}

int SpectrumReport::multiplicity(const ExactScalar& v) const {
    for (const auto& [val, mult] : eigenvalues)
        if (val == v) return mult;
    return 0;
}

std::string SpectrumReport::spectrum_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < eigenvalues.size(); ++i) {
        if (i) os << ", ";
        os << "[" << eigenvalues[i].first.str() << "]^" << eigenvalues[i].second;
    }
    os << "}";
    return os.str();
}

namespace {

template <class T>
std::vector<T> leverrier(const Mat<T>& m) {
    // Faddeev-LeVerrier: B_0 = A, c_{n-1} = -tr B_0,
    // B_k = A (B_{k-1} + c_{n-k} I), c_{n-k-1} = -tr(B_k)/(k+1).
    // For integer input every B_k and c stay integral.
    const int n = m.rows();
    std::vector<T> coeffs(n + 1, T(0));
    coeffs[n] = T(1);
    Mat<T> b = m;
    coeffs[n - 1] = -b.trace();
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) b(i, i) += coeffs[n - k + 1];
        b = m * b;
        T tr = b.trace();
        if constexpr (std::is_same_v<T, Int>) {
            // Exact by Newton's identities.
            T q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
            if (r != 0) throw std::logic_error("Leverrier trace not divisible");
            coeffs[n - k] = -q;
        } else {
            coeffs[n - k] = -tr / k;
        }
    }
    return coeffs;
}

} // namespace

IntPoly char_poly(const IntMat& m) {
    if (!m.square()) throw std::invalid_argument("char_poly requires a square matrix");
    if (m.rows() == 0) throw std::invalid_argument("char_poly requires a nonempty matrix");
    return IntPoly(leverrier(m));
}

IntPoly char_poly(const RatMat& m, bool require_integer_input) {
    if (!m.square()) throw std::invalid_argument("char_poly requires a square matrix");
    if (m.rows() == 0) throw std::invalid_argument("char_poly requires a nonempty matrix");
    bool integral = true;
    for (int i = 0; i < m.rows() && integral; ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) {
                integral = false;
                break;
            }
    if (require_integer_input && !integral)
        throw std::invalid_argument("char_poly: non-integer entries under the integer-input flag");
    if (integral) {
        IntMat mi(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) mi(i, j) = to_integer(m(i, j));
        return char_poly(mi);
    }
    auto rc = leverrier(m);
    std::vector<Int> ic(rc.size());
    for (size_t i = 0; i < rc.size(); ++i) {
        if (!is_integer(rc[i]))
            throw std::domain_error("char_poly: characteristic polynomial is not integral");
        ic[i] = to_integer(rc[i]);
    }
    return IntPoly(std::move(ic));
}

namespace {

/// Divisors d of v with |d| <= bound, both signs, ascending by |d|.
std::vector<Int> bounded_divisors(const Int& v, const Int& bound) {
    std::vector<Int> out;
    Int av = abs(v);
    for (Int d = 1; d <= bound; ++d) {
        if (av % d == 0) {
            out.push_back(d);
            out.push_back(-d);
        }
    }
    return out;
}

struct QuadFactor {
    Int t, s; // x^2 - t x + s
    int multiplicity;
};

} // namespace

SpectrumReport exact_spectrum(const IntMat& a) {
    if (!a.square()) throw std::invalid_argument("exact_spectrum requires a square matrix");
    if (!a.is_symmetric()) throw std::invalid_argument("exact_spectrum requires a symmetric matrix");
    const int n = a.rows();

    SpectrumReport report;
    report.n = n;
    report.charpoly = char_poly(a);

    // Gershgorin bound on every eigenvalue.
    Int bound = 0;
    for (int i = 0; i < n; ++i) {
        Int row = 0;
        for (int j = 0; j < n; ++j) row += abs(a(i, j));
        bound = std::max(bound, row);
    }
    if (bound == 0) bound = 1;

    IntPoly residual = report.charpoly;
    std::vector<std::pair<ExactScalar, int>> eigs;

    // Zero roots first (the constant term need not be factored).
    {
        int mult = 0;
        IntPoly q;
        while (residual.degree() > 0 && residual.try_deflate_linear(Int(0), q)) {
            residual = q;
            ++mult;
        }
        if (mult > 0) eigs.emplace_back(ExactScalar(0), mult);
    }

    // Rational-root sieve: monic integer polynomial, so rational roots are
    // integers dividing the constant term, and Gershgorin bounds them.
    for (Int r = -bound; r <= bound; ++r) {
        if (r == 0 || residual.degree() < 1) continue;
        if (residual.c[0] % r != 0) continue;
        int mult = 0;
        IntPoly q;
        while (residual.try_deflate_linear(r, q)) {
            residual = q;
            ++mult;
        }
        if (mult > 0) eigs.emplace_back(ExactScalar(Int(r)), mult);
    }

    // Remaining roots are quadratic conjugate pairs (if the matrix is in the
    // supported class): peel off monic integer quadratics x^2 - t x + s.
    std::vector<QuadFactor> quads;
    while (residual.degree() >= 2) {
        bool found = false;
        Int sbound = bound * bound;
        for (const Int& s : bounded_divisors(residual.c[0], sbound)) {
            for (Int t = -2 * bound; t <= 2 * bound && !found; ++t) {
                IntPoly q;
                if (residual.try_deflate_quadratic(t, s, q)) {
                    int mult = 1;
                    residual = q;
                    IntPoly q2;
                    while (residual.try_deflate_quadratic(t, s, q2)) {
                        residual = q2;
                        ++mult;
                    }
                    quads.push_back({t, s, mult});
                    found = true;
                }
            }
            if (found) break;
        }
        if (!found)
            throw IrreducibleCubicOrHigher(
                "characteristic polynomial has an irreducible factor of degree >= 3; "
                "spectrum lies outside Q(sqrt(D))");
    }
    if (residual.degree() != 0)
        throw IrreducibleCubicOrHigher("odd-degree residual factor");

    for (const auto& qf : quads) {
        Int disc = qf.t * qf.t - 4 * qf.s;
        if (disc <= 0) throw std::logic_error("symmetric matrix produced complex eigenvalues");
        auto [sq, d] = extract_square_part(disc);
        if (d == 1) throw std::logic_error("rational roots escaped the sieve");
        long dl = d.get_si();
        Rat half_t = make_rat(qf.t, Int(2));
        Rat half_sq = make_rat(sq, Int(2));
        eigs.emplace_back(ExactScalar::quadratic(half_t, half_sq, dl), qf.multiplicity);
        eigs.emplace_back(ExactScalar::quadratic(half_t, -half_sq, dl), qf.multiplicity);
    }

    std::sort(eigs.begin(), eigs.end(),
              [](const auto& x, const auto& y) { return x.first.cmp(y.first) > 0; });
    report.eigenvalues = std::move(eigs);

    // Exactness cross-checks: multiplicities account for n and the first two
    // power sums match the matrix traces. Radical parts are accumulated per
    // field (conjugate pairs must cancel), so mixed-field spectra validate too.
    Int total = 0;
    Rat s1 = 0, s2 = 0;
    std::map<long, Rat> rad1, rad2;
    for (const auto& [val, mult] : report.eigenvalues) {
        total += mult;
        const Rat& va = val.rational_part();
        const Rat& vb = val.radical_part();
        s1 += Rat(mult) * va;
        s2 += Rat(mult) * (va * va + vb * vb * val.field());
        if (!val.is_rational()) {
            rad1[val.field()] += Rat(mult) * vb;
            rad2[val.field()] += Rat(mult) * 2 * va * vb;
        }
    }
    if (total != n) throw std::logic_error("spectrum multiplicities do not sum to n");
    for (const auto& [field, sum] : rad1)
        if (sum != 0 || rad2[field] != 0)
            throw std::logic_error("conjugate eigenvalues do not cancel");
    if (s1 != Rat(a.trace())) throw std::logic_error("spectrum trace identity failed");
    Int tr2 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr2 += a(i, j) * a(j, i);
    if (s2 != Rat(tr2)) throw std::logic_error("spectrum square-trace identity failed");
    return report;
}

ScalarMat eigenprojection(const RatMat& a, const SpectrumReport& spectrum,
                          const ExactScalar& lambda) {
    if (!a.square()) throw std::invalid_argument("eigenprojection requires a square matrix");
    if (!spectrum.contains(lambda))
        throw std::domain_error("eigenprojection: " + lambda.str() + " is not in the spectrum");
    ScalarMat e = ScalarMat::identity(a.rows());
    ScalarMat as = to_scalar(a);
    ExactScalar denom(1);
    for (const auto& [mu, mult] : spectrum.eigenvalues) {
        if (mu == lambda) continue;
        ScalarMat shifted = as;
        for (int i = 0; i < shifted.rows(); ++i) shifted(i, i) -= mu;
        e = e * shifted;
        denom *= (lambda - mu);
    }
    ExactScalar inv = ExactScalar(1) / denom;
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) e(i, j) *= inv;
    return e;
}

RatMat mat_poly_eval(const std::vector<Rat>& coeffs, const RatMat& m) {
    if (!m.square()) throw std::invalid_argument("mat_poly_eval requires a square matrix");
    const int n = m.rows();
    RatMat acc(n, n);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

} // namespace gwalk
