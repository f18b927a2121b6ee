#pragma once

// Minimal dense matrix containers.  Sizes here are tiny (n <= a few dozen
// primaries), so everything is a flat vector with row-major indexing.

#include "modinv/scalar.hpp"

#include <algorithm>
#include <vector>

namespace modinv {

template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat out(a.rows_, b.cols_, T(0));
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& v = a(r, k);
                for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
            }
        return out;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<long long>;
using RealMat = Mat<Real>;
using CplxMat = Mat<Cplx>;

inline long long trace(const IntMat& m) {
    long long t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline std::vector<long long> mat_vec(const IntMat& m, const std::vector<long long>& v) {
    std::vector<long long> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

inline Real max_abs(const CplxMat& m) {
    Real mx(0);
    for (const Cplx& z : m.data()) mx = std::max(mx, Real(z.abs()));
    return mx;
}

// Symmetric Jacobi eigendecomposition; returns eigenvalues ascending and the
// matching orthonormal eigenvectors as rows of `vectors`.
struct SymmetricEigen {
    std::vector<Real> values;
    RealMat vectors;
};

inline SymmetricEigen jacobi_eigen(RealMat a) {
    const std::size_t n = a.rows();
    RealMat v = RealMat::identity(n);
    const long digits = static_cast<long>(Real::default_precision());
    const Real tiny = pow(Real(10), -(2 * digits - 8));
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off(0);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        Real scale(0);
        for (std::size_t p = 0; p < n; ++p) scale += a(p, p) * a(p, p);
        if (off <= tiny * (scale + Real(1))) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) == 0) continue;
                Real theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                         (abs(theta) + sqrt(theta * theta + 1));
                Real c = 1 / sqrt(t * t + 1);
                Real s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    Real akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    SymmetricEigen out;
    out.values.reserve(n);
    out.vectors = RealMat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values.push_back(a(order[i], order[i]));
        for (std::size_t k = 0; k < n; ++k) out.vectors(i, k) = v(k, order[i]);
    }
    return out;
}

// Solves a (small) linear system A x = b by Gaussian elimination with
// partial pivoting.
inline std::vector<Real> solve_linear(RealMat a, std::vector<Real> b) {
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a(r, col)) > abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0) throw ComputationError("singular linear system");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            Real f = a(r, col) / a(col, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<Real> x(n, Real(0));
    for (std::size_t i = n; i-- > 0;) {
        Real s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace modinv
