#pragma once

#include <cmath>
#include <vector>

#include "amat/canonical.hpp"
#include "amat/polar.hpp"
#include "amat/projection.hpp"
#include "amat/svd.hpp"

namespace amat {

/// A principal pair: unit vectors v in range(P) and w in range(Q) with
/// <v, w> = cos(angle), the inner product made real nonnegative by a
/// right phase twist of w.
template <class S>
struct PrincipalPair {
    double angle = 0.0;
    Matrix<S> v;
    Matrix<S> w;
};

namespace detail {

// Right-multiplies w by a unit scalar so that <v, w> is real >= 0.
// Near angle pi/2 the inner product is numerically zero and any phase is
// as good as another, so nothing is done.
template <class S>
void fix_pair_phase(const Matrix<S>& v, Matrix<S>& w) {
    const S q = column_dot(v, w);
    const double a = scalar_abs(q);
    if (a > 1e-12) {
        S unit = scalar_conj(q);
        unit = unit * (1.0 / a);
        w = col_scale_right(w, unit);
    }
}

}  // namespace detail

/// Principal vectors by the isometry-factor route: P = EE*, Q = FF*, then
/// the SVD U Omega V* of E*F pairs the columns of EU with columns of FV;
/// the angles are arccos of the singular values. Ascending by angle.
template <class S>
std::vector<PrincipalPair<S>> principal_vectors_svd(const Projection<S>& p,
                                                    const Projection<S>& q) {
    detail::check_pair_shape(p, q);
    const int j = std::min(p.dim, q.dim);
    if (j == 0) return {};
    const Matrix<S> e = range_basis(p);
    const Matrix<S> f = range_basis(q);
    const Svd<S> s = svd(e.adjoint() * f);
    const Matrix<S> eu = e * s.u;
    const Matrix<S> fv = f * s.v;
    std::vector<PrincipalPair<S>> pairs(j);
    for (int k = 0; k < j; ++k) {
        pairs[k].angle = std::acos(std::clamp(s.sigma[k], 0.0, 1.0));
        pairs[k].v = eu.col(k);
        pairs[k].w = fv.col(k);
        detail::fix_pair_phase(pairs[k].v, pairs[k].w);
    }
    return pairs;
}

/// Principal vectors via the polar route: U is the unitary factor of
/// X = QP + (I-Q)(I-P), and each eigenvector v of PQP at or above 1/2
/// pairs with U v. Only valid for ||P - Q|| <= 1/sqrt(2), which keeps all
/// angles at or below pi/4 so the 1/2 cut captures exactly the principal
/// directions. Ascending by angle.
template <class S>
std::vector<PrincipalPair<S>> principal_vectors_polar(const Projection<S>& p,
                                                      const Projection<S>& q,
                                                      double tol_polar = 1e-13,
                                                      int max_iter = 30) {
    detail::check_pair_shape(p, q);
    const double dist = operator_norm(p.mat - q.mat);
    const double bound = 1.0 / std::sqrt(2.0);
    if (dist > bound + 2e-12)
        throw PrecondViolated("principal_vectors_polar: ||P - Q|| = " + std::to_string(dist) +
                              " exceeds 1/sqrt(2)");
    const int n = p.n();
    const Matrix<S> id = Matrix<S>::identity(n);
    const Matrix<S> x = q.mat * p.mat + (id - q.mat) * (id - p.mat);
    const Matrix<S> u = polar_unitary(x, tol_polar, max_iter);

    const EigenSystem<S> es = hermitian_eigen(p.mat * q.mat * p.mat);
    std::vector<PrincipalPair<S>> pairs;
    for (int k = n - 1; k >= 0; --k) {  // descending lambda = ascending angle
        const double lam = es.eigenvalues[k];
        if (lam < 0.5) break;
        PrincipalPair<S> pr;
        pr.angle = detail::angle_from_cos_sq(lam);
        pr.v = es.eigenvectors.col(k);
        pr.w = u * pr.v;
        detail::fix_pair_phase(pr.v, pr.w);
        pairs.push_back(std::move(pr));
    }
    return pairs;
}

/// Orthogonal projection onto the span of the v-columns (or w-columns)
/// whose angle lies within `tol` of `angle`. Basis-free comparison handle
/// for cross-algorithm tests with degenerate angles.
template <class S>
Matrix<S> angle_cluster_projection(const std::vector<PrincipalPair<S>>& pairs, double angle,
                                   double tol, bool use_w = false) {
    if (pairs.empty()) throw Error("angle_cluster_projection: no pairs");
    const int n = pairs.front().v.rows();
    Matrix<S> cols(n, 0);
    std::vector<Matrix<S>> picked;
    for (const auto& pr : pairs)
        if (std::abs(pr.angle - angle) <= tol) picked.push_back(use_w ? pr.w : pr.v);
    Matrix<S> basis(n, static_cast<int>(picked.size()));
    for (size_t k = 0; k < picked.size(); ++k) basis.set_col(static_cast<int>(k), picked[k]);
    if (picked.empty()) return Matrix<S>(n, n);
    orthonormalize_columns(basis, 0.1);
    return basis * basis.adjoint();
}

}  // namespace amat
