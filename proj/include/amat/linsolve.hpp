#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "amat/errors.hpp"
#include "amat/matrix.hpp"

namespace amat {

/// LU factorization with partial pivoting, valid over R, C and H.
///
/// Over the quaternions the order of the updates matters: the multiplier
/// sits on the left (a_ik = m * a_kk, so m = a_ik * a_kk^{-1}) and row
/// updates subtract m * row_k. Pivoting is by absolute value.
template <class S>
class Lu {
public:
    explicit Lu(Matrix<S> a) : lu_(std::move(a)) {
        if (!lu_.is_square()) throw DimensionMismatch("LU expects a square matrix");
        const int n = lu_.rows();
        perm_.resize(n);
        std::iota(perm_.begin(), perm_.end(), 0);
        const double tiny = 4.0 * 2.22e-16 * lu_.max_abs() * n + 1e-300;
        for (int k = 0; k < n; ++k) {
            int piv = k;
            double best = scalar_abs_sq(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                const double cand = scalar_abs_sq(lu_(i, k));
                if (cand > best) {
                    best = cand;
                    piv = i;
                }
            }
            if (std::sqrt(best) <= tiny) throw Singular("LU: pivot " + std::to_string(k));
            if (piv != k) {
                for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
                std::swap(perm_[k], perm_[piv]);
            }
            const S pivot_inv = scalar_inverse(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                const S mult = lu_(i, k) * pivot_inv;
                lu_(i, k) = mult;
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= mult * lu_(k, j);
            }
        }
    }

    /// Solves A x = b for a single column b.
    Matrix<S> solve(const Matrix<S>& b) const {
        const int n = lu_.rows();
        if (b.rows() != n || b.cols() != 1) throw DimensionMismatch("LU solve shape");
        Matrix<S> x(n, 1);
        for (int i = 0; i < n; ++i) {
            S s = b(perm_[i], 0);
            for (int j = 0; j < i; ++j) s -= lu_(i, j) * x(j, 0);
            x(i, 0) = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            S s = x(i, 0);
            for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x(j, 0);
            x(i, 0) = scalar_inverse(lu_(i, i)) * s;
        }
        return x;
    }

private:
    static S scalar_inverse(const S& x) {
        if constexpr (field_of<S> == Field::Quaternion) {
            return x.inverse();
        } else {
            return scalar_from_real<S>(1.0) / x;
        }
    }

    Matrix<S> lu_;
    std::vector<int> perm_;
};

/// A^{-1} by LU; throws Singular when a pivot collapses.
template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
    const Lu<S> lu(a);
    const int n = a.rows();
    Matrix<S> inv(n, n);
    for (int j = 0; j < n; ++j) {
        Matrix<S> e(n, 1);
        e(j, 0) = scalar_from_real<S>(1.0);
        inv.set_col(j, lu.solve(e));
    }
    return inv;
}

}  // namespace amat
