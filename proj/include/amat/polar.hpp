#pragma once

#include "amat/linsolve.hpp"
#include "amat/matrix.hpp"
#include "amat/svd.hpp"

namespace amat {

/// Unitary factor of the polar decomposition X = U H by Newton averaging,
///     U <- (U + (U*)^{-1}) / 2,
/// started at U = X and stopped when ||U*U - I|| <= tol_polar in operator
/// norm. Well-conditioned inputs (||X|| <= 1, ||X^{-1}|| <= sqrt(2))
/// converge in at most five steps; the iteration cap only matters far
/// outside that regime.
///
/// iterations_out, when given, receives the number of Newton updates taken.
template <class S>
Matrix<S> polar_unitary(const Matrix<S>& x, double tol_polar = 1e-13, int max_iter = 30,
                        int* iterations_out = nullptr) {
    if (!x.is_square()) throw DimensionMismatch("polar_unitary expects a square matrix");
    const Matrix<S> id = Matrix<S>::identity(x.rows());
    Matrix<S> u = x;
    if (iterations_out) *iterations_out = 0;
    if (operator_norm(u.adjoint() * u - id) <= tol_polar) return u;
    for (int k = 1; k <= max_iter; ++k) {
        u = 0.5 * (u + inverse(u.adjoint()));
        if (operator_norm(u.adjoint() * u - id) <= tol_polar) {
            if (iterations_out) *iterations_out = k;
            return u;
        }
    }
    throw NoConvergence("polar_unitary: no convergence after " + std::to_string(max_iter) +
                        " iterations");
}

}  // namespace amat
