#pragma once

#include <cmath>

#include "amat/matrix.hpp"
#include "amat/svd.hpp"

namespace amat {

inline constexpr double kDefaultTolProj = 1e-10;

/// A validated orthogonal projection: Hermitian idempotent with measured
/// residual certificates. Dimension means trace (rounded to the nearest
/// integer, which must be within tolerance of the raw trace).
template <class S>
struct Projection {
    Matrix<S> mat;
    double residual_idem = 0.0;  // ||P^2 - P||, operator norm
    double residual_herm = 0.0;  // ||P* - P||, operator norm
    int dim = 0;                 // rounded trace

    int n() const { return mat.rows(); }
};

/// Gatekeeper for projection inputs. Throws NotAProjection naming the
/// failing residual.
template <class S>
Projection<S> validate_projection(const Matrix<S>& m, double tol_proj = kDefaultTolProj) {
    if (!m.is_square()) throw NotAProjection("projection candidate is not square");
    Projection<S> p;
    p.residual_herm = operator_norm(m.adjoint() - m);
    p.residual_idem = operator_norm(m * m - m);
    if (!(p.residual_herm <= tol_proj))
        throw NotAProjection("hermitian residual " + std::to_string(p.residual_herm) +
                             " exceeds tol " + std::to_string(tol_proj));
    if (!(p.residual_idem <= tol_proj))
        throw NotAProjection("idempotency residual " + std::to_string(p.residual_idem) +
                             " exceeds tol " + std::to_string(tol_proj));
    const double tr = scalar_real(m.trace());
    p.dim = static_cast<int>(std::lround(tr));
    if (!(std::abs(tr - p.dim) <= tol_proj * std::max(1, m.rows())))
        throw NotAProjection("trace " + std::to_string(tr) + " is not near an integer");
    if (p.dim < 0 || p.dim > m.rows())
        throw NotAProjection("trace " + std::to_string(tr) + " outside [0, n]");
    p.mat = m;
    return p;
}

/// The 2x2 building blocks of the canonical two-projection form:
/// block_p = [[1,0],[0,0]] and block_q(theta) its partner rotated by theta.
template <class S>
Matrix<S> block_p() {
    Matrix<S> m(2, 2);
    m(0, 0) = scalar_from_real<S>(1.0);
    return m;
}

template <class S>
Matrix<S> block_q(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Matrix<S> m(2, 2);
    m(0, 0) = scalar_from_real<S>(c * c);
    m(0, 1) = scalar_from_real<S>(c * s);
    m(1, 0) = scalar_from_real<S>(c * s);
    m(1, 1) = scalar_from_real<S>(s * s);
    return m;
}

}  // namespace amat
