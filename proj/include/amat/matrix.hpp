#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "amat/errors.hpp"
#include "amat/scalar.hpp"

namespace amat {

/// Dense row-major matrix over one of the three coefficient fields.
///
/// Scalars multiply entries on whichever side the formula writes them;
/// over the quaternions the two sides differ, so helpers that scale
/// columns say so in their names.
template <class S>
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = scalar_from_real<S>(1.0);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix adjoint() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = scalar_conj((*this)(i, j));
        return r;
    }

    S trace() const {
        if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
        S t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const S& x : a_) s += scalar_abs_sq(x);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const S& x : a_) m = std::max(m, scalar_abs_sq(x));
        return std::sqrt(m);
    }

    Matrix col(int j) const {
        Matrix c(rows_, 1);
        for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    void set_col(int j, const Matrix& c) {
        if (c.rows() != rows_ || c.cols() != 1) throw DimensionMismatch("set_col shape");
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
    }

    /// Columns [j0, j0+count) as an rows x count matrix.
    Matrix cols_range(int j0, int count) const {
        Matrix r(rows_, count);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < count; ++j) r(i, j) = (*this)(i, j0 + j);
        return r;
    }

    /// Writes `block` into this matrix with top-left corner (i0, j0).
    void set_block(int i0, int j0, const Matrix& block) {
        if (i0 + block.rows() > rows_ || j0 + block.cols() > cols_)
            throw DimensionMismatch("set_block out of range");
        for (int i = 0; i < block.rows(); ++i)
            for (int j = 0; j < block.cols(); ++j) (*this)(i0 + i, j0 + j) = block(i, j);
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o, "+=");
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o, "-=");
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    Matrix& operator*=(double t) {
        for (S& x : a_) x = x * t;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(double t, Matrix a) { return a *= t; }
    friend Matrix operator*(Matrix a, double t) { return a *= t; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
        Matrix c(a.rows(), b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int k = 0; k < a.cols(); ++k) {
                const S aik = a(i, k);
                for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

private:
    void check_same_shape(const Matrix& o, const char* what) const {
        if (o.rows() != rows_ || o.cols() != cols_)
            throw DimensionMismatch(std::string("shape mismatch in ") + what);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> a_;
};

using MatR = Matrix<double>;
using MatC = Matrix<Cplx>;
using MatH = Matrix<Quat>;

template <class S>
Matrix<S> adjoint(const Matrix<S>& m) {
    return m.adjoint();
}

template <class S>
Matrix<S> hermitian_part(const Matrix<S>& m) {
    return 0.5 * (m + m.adjoint());
}

/// <x, y> = x* y, conjugate-linear in the first argument. Quaternion valued
/// over H; columns only.
template <class S>
S column_dot(const Matrix<S>& x, const Matrix<S>& y) {
    if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows())
        throw DimensionMismatch("column_dot expects equal-length columns");
    S s{};
    for (int i = 0; i < x.rows(); ++i) s += scalar_conj(x(i, 0)) * y(i, 0);
    return s;
}

template <class S>
double column_norm(const Matrix<S>& x) {
    double s = 0.0;
    for (int i = 0; i < x.rows(); ++i) s += scalar_abs_sq(x(i, 0));
    return std::sqrt(s);
}

/// Column scaled by q on the right: (v q)_i = v_i q. The right side keeps
/// quaternionic spans intact (subspaces are right modules here).
template <class S>
Matrix<S> col_scale_right(const Matrix<S>& v, const S& q) {
    Matrix<S> r(v.rows(), 1);
    for (int i = 0; i < v.rows(); ++i) r(i, 0) = v(i, 0) * q;
    return r;
}

/// Modified Gram-Schmidt on the columns, in place, two passes.
/// Throws if a column degenerates (norm below `drop_tol` after projection),
/// unless drop_tol <= 0 in which case degenerate columns are an error anyway.
template <class S>
void orthonormalize_columns(Matrix<S>& m, double drop_tol = 1e-8) {
    const int n = m.cols();
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < n; ++j) {
            Matrix<S> v = m.col(j);
            for (int k = 0; k < j; ++k) {
                const Matrix<S> u = m.col(k);
                const S c = column_dot(u, v);
                for (int i = 0; i < v.rows(); ++i) v(i, 0) -= u(i, 0) * c;
            }
            const double nrm = column_norm(v);
            if (nrm < drop_tol)
                throw Error("orthonormalize_columns: dependent column " + std::to_string(j));
            v *= 1.0 / nrm;
            m.set_col(j, v);
        }
    }
}

}  // namespace amat
