#pragma once

#include "gwalk/exact_scalar.hpp"
#include "gwalk/rational.hpp"
#include "gwalk/threads.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace gwalk {

/// Dense row-major matrix over an exact scalar type (Int, Rat, ExactScalar).
/// No floating point exists anywhere in this module.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        const int n = cols_, oc = o.cols_;
        auto row_task = [&](int i) {
            for (int k = 0; k < n; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                const T* brow = &o.e_[static_cast<size_t>(k) * oc];
                T* rrow = &r.e_[static_cast<size_t>(i) * oc];
                for (int j = 0; j < oc; ++j) {
                    if constexpr (std::is_same_v<T, Int>) {
                        mpz_addmul(rrow[j].get_mpz_t(), aik.get_mpz_t(), brow[j].get_mpz_t());
                    } else {
                        rrow[j] += aik * brow[j];
                    }
                }
            }
        };
        if (static_cast<long>(rows_) * n * oc >= 1 << 16)
            parallel_for(rows_, row_task);
        else
            for (int i = 0; i < rows_; ++i) row_task(i);
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        assert(square());
        T t(0);
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_identity() const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_zero() const {
        for (const T& v : e_)
            if (v != T(0)) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    std::vector<T> column(int j) const {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> e_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using ScalarMat = Mat<ExactScalar>;

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline ScalarMat to_scalar(const RatMat& m) {
    ScalarMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = ExactScalar(m(i, j));
    return r;
}

} // namespace gwalk
