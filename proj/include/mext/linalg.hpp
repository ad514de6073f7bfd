#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mext/rational.hpp"

namespace mext {

using cplx = std::complex<double>;

/// Dense row-major complex matrix, sized for desk-scale modular data.
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    CMatrix conj() const {
        CMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            m.a_[i] = std::conj(a_[i]);
        return m;
    }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("CMatrix: dimension mismatch");
        CMatrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                cplx v = x(i, k);
                if (v == cplx())
                    continue;
                for (int j = 0; j < y.cols_; ++j)
                    z(i, j) += v * y(k, j);
            }
        return z;
    }

    /// max |this - other| entrywise
    double max_diff(const CMatrix& other) const {
        double m = 0;
        for (std::size_t i = 0; i < a_.size(); ++i)
            m = std::max(m, std::abs(a_[i] - other.a_[i]));
        return m;
    }

  private:
    int rows_, cols_;
    std::vector<cplx> a_;
};

inline CMatrix kronecker(const CMatrix& x, const CMatrix& y) {
    CMatrix z(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            for (int k = 0; k < y.rows(); ++k)
                for (int l = 0; l < y.cols(); ++l)
                    z(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    return z;
}

/// residual of S * conj(S)^T = c * Id
inline double unitarity_residual(const CMatrix& s, double c) {
    int n = s.rows();
    double worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0;
            for (int k = 0; k < n; ++k)
                acc += s(i, k) * std::conj(s(j, k));
            cplx want = (i == j) ? cplx(c) : cplx(0);
            worst = std::max(worst, std::abs(acc - want));
        }
    return worst;
}

/// Perron-Frobenius eigenvalue of a non-negative integer matrix, via power
/// iteration on N + I (the shift handles oscillating spectra).
inline double perron_frobenius(const std::vector<std::vector<int>>& n) {
    std::size_t dim = n.size();
    std::vector<double> v(dim, 1.0), w(dim);
    double lambda = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        for (std::size_t i = 0; i < dim; ++i) {
            double acc = v[i]; // shift by identity
            for (std::size_t j = 0; j < dim; ++j)
                acc += n[i][j] * v[j];
            w[i] = acc;
        }
        double norm = 0;
        for (double x : w)
            norm = std::max(norm, std::abs(x));
        if (norm == 0)
            return 0;
        for (std::size_t i = 0; i < dim; ++i)
            w[i] /= norm;
        double next = norm - 1.0;
        std::swap(v, w);
        if (iter > 3 && std::abs(next - lambda) < 1e-13)
            return next;
        lambda = next;
    }
    return lambda;
}

/// exp(2 pi i r)
inline cplx root_of_unity(const Rational& r) {
    return std::polar(1.0, 2.0 * std::numbers::pi * r.mod1().to_double());
}

} // namespace mext
