#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace mext {

/// Dense arbitrary-precision integer matrix.
class ZMatrix {
  public:
    ZMatrix() : rows_(0), cols_(0) {}
    ZMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const mpz_class& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    static ZMatrix identity(int n) {
        ZMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    friend ZMatrix operator*(const ZMatrix& x, const ZMatrix& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("ZMatrix: dimension mismatch");
        ZMatrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const mpz_class& v = x(i, k);
                if (v == 0)
                    continue;
                for (int j = 0; j < y.cols_; ++j)
                    z(i, j) += v * y(k, j);
            }
        return z;
    }

  private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

/// S = U A V with U, V unimodular and S diagonal with d_1 | d_2 | ...
struct SmithForm {
    ZMatrix s;
    ZMatrix u; // tracked iff requested
    ZMatrix v;
    int rank = 0;
    std::vector<mpz_class> diag; // the positive invariant factors d_1..d_rank
};

/// Smith normal form by gcd elimination with minimal-pivot selection.
inline SmithForm smith_normal_form(ZMatrix a, bool want_u, bool want_v) {
    int m = a.rows(), n = a.cols();
    SmithForm f;
    if (want_u)
        f.u = ZMatrix::identity(m);
    if (want_v)
        f.v = ZMatrix::identity(n);

    auto row_sub = [&](int dst, int src, const mpz_class& q) { // row dst -= q row src
        if (q == 0)
            return;
        for (int j = 0; j < n; ++j)
            a(dst, j) -= q * a(src, j);
        if (want_u)
            for (int j = 0; j < m; ++j)
                f.u(dst, j) -= q * f.u(src, j);
    };
    auto col_sub = [&](int dst, int src, const mpz_class& q) {
        if (q == 0)
            return;
        for (int i = 0; i < m; ++i)
            a(i, dst) -= q * a(i, src);
        if (want_v)
            for (int i = 0; i < n; ++i)
                f.v(i, dst) -= q * f.v(i, src);
    };
    auto row_swap = [&](int x, int y) {
        if (x == y)
            return;
        for (int j = 0; j < n; ++j)
            std::swap(a(x, j), a(y, j));
        if (want_u)
            for (int j = 0; j < m; ++j)
                std::swap(f.u(x, j), f.u(y, j));
    };
    auto col_swap = [&](int x, int y) {
        if (x == y)
            return;
        for (int i = 0; i < m; ++i)
            std::swap(a(i, x), a(i, y));
        if (want_v)
            for (int i = 0; i < n; ++i)
                std::swap(f.v(i, x), f.v(i, y));
    };
    auto row_negate = [&](int x) {
        for (int j = 0; j < n; ++j)
            a(x, j) = -a(x, j);
        if (want_u)
            for (int j = 0; j < m; ++j)
                f.u(x, j) = -f.u(x, j);
    };

    int t = 0;
    while (t < m && t < n) {
        // minimal-abs nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a(i, j) != 0 &&
                    (pi < 0 || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a(i, t) == 0)
                    continue;
                mpz_class q = a(i, t) / a(t, t); // truncated
                row_sub(i, t, q);
                if (a(i, t) != 0) { // remainder smaller than pivot: promote
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a(t, j) == 0)
                    continue;
                mpz_class q = a(t, j) / a(t, t);
                col_sub(j, t, q);
                if (a(t, j) != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility: pivot must divide the whole trailing block
                for (int i = t + 1; i < m && clean; ++i)
                    for (int j = t + 1; j < n && clean; ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            row_sub(t, i, mpz_class(-1)); // row t += row i
                            clean = false;
                        }
            }
        }
        if (a(t, t) < 0)
            row_negate(t);
        ++t;
    }
    f.rank = t;
    f.diag.reserve(std::size_t(t));
    for (int i = 0; i < t; ++i)
        f.diag.push_back(a(i, i));
    f.s = std::move(a);
    return f;
}

/// Basis of the integer kernel lattice {x : A x = 0}, as matrix columns.
inline ZMatrix kernel_basis(const ZMatrix& a) {
    SmithForm f = smith_normal_form(a, false, true);
    int n = a.cols();
    int k = n - f.rank;
    ZMatrix ker(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            ker(i, j) = f.v(i, f.rank + j);
    return ker;
}

/// Solves K y = b exactly for K with full column rank; throws if b is not in
/// the column lattice of K.
struct LatticeSolver {
    explicit LatticeSolver(const ZMatrix& k) : cols_(k.cols()), f_(smith_normal_form(k, true, true)) {
        if (f_.rank != cols_)
            throw std::invalid_argument("LatticeSolver: matrix does not have full column rank");
    }

    std::vector<mpz_class> solve(const std::vector<mpz_class>& b) const {
        int m = f_.s.rows();
        if (int(b.size()) != m)
            throw std::invalid_argument("LatticeSolver: size mismatch");
        std::vector<mpz_class> c(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < m; ++j)
                if (f_.u(i, j) != 0 && b[std::size_t(j)] != 0)
                    acc += f_.u(i, j) * b[std::size_t(j)];
            c[std::size_t(i)] = acc;
        }
        for (int i = cols_; i < m; ++i)
            if (c[std::size_t(i)] != 0)
                throw std::invalid_argument("LatticeSolver: vector is not in the lattice");
        std::vector<mpz_class> z(static_cast<std::size_t>(cols_));
        for (int i = 0; i < cols_; ++i) {
            if (c[std::size_t(i)] % f_.diag[std::size_t(i)] != 0)
                throw std::invalid_argument("LatticeSolver: vector is not in the lattice");
            z[std::size_t(i)] = c[std::size_t(i)] / f_.diag[std::size_t(i)];
        }
        std::vector<mpz_class> y(static_cast<std::size_t>(cols_));
        for (int i = 0; i < cols_; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < cols_; ++j)
                acc += f_.v(i, j) * z[std::size_t(j)];
            y[std::size_t(i)] = acc;
        }
        return y;
    }

  private:
    int cols_;
    SmithForm f_;
};

} // namespace mext
