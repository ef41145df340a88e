#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "amat/eigensolve.hpp"
#include "amat/projection.hpp"
#include "amat/svd.hpp"

namespace amat {

constexpr double kHalfPi = 1.5707963267948966;

/// Simultaneous block-diagonalization data for a pair of projections:
/// conjugating the block pair built from `angles`, r and s by `u`
/// reproduces the input pair. Angles are ascending; J = min(dim P, dim Q).
///
/// `swapped` records that dim P > dim Q on input and the roles were
/// exchanged internally (the block form wants the smaller projection
/// first); reconstruct undoes the exchange.
template <class S>
struct CanonicalForm {
    Matrix<S> u;
    std::vector<double> angles;
    int r = 0;
    int s = 0;
    bool swapped = false;

    int n() const { return u.rows(); }
    int num_angles() const { return static_cast<int>(angles.size()); }
};

/// Orthonormal basis of the range (top eigenvectors of the projection).
template <class S>
Matrix<S> range_basis(const Projection<S>& p) {
    const EigenSystem<S> es = hermitian_eigen(p.mat);
    int count = 0;
    for (double lam : es.eigenvalues)
        if (lam >= 0.5) ++count;
    if (count != p.dim)
        throw Error("range_basis: eigenvalue count " + std::to_string(count) +
                    " disagrees with the projection dimension " + std::to_string(p.dim));
    return es.eigenvectors.cols_range(p.n() - count, count);
}

template <class S>
Matrix<S> kernel_basis(const Projection<S>& p) {
    const EigenSystem<S> es = hermitian_eigen(p.mat);
    int count = 0;
    for (double lam : es.eigenvalues)
        if (lam < 0.5) ++count;
    return es.eigenvectors.cols_range(0, count);
}

namespace detail {

template <class S>
void check_pair_shape(const Projection<S>& p, const Projection<S>& q) {
    if (p.n() != q.n()) throw DimensionMismatch("projection pair has mismatched sizes");
}

inline double angle_from_cos_sq(double lambda) {
    return std::acos(std::sqrt(std::clamp(lambda, 0.0, 1.0)));
}

}  // namespace detail

/// Principal angles between range(P) and range(Q), ascending, length
/// min(dim P, dim Q). Computed as arccos of the singular values of E*F
/// for orthonormal range bases E, F (the classical subspace-angle route).
template <class S>
std::vector<double> principal_angles(const Projection<S>& p, const Projection<S>& q) {
    detail::check_pair_shape(p, q);
    const int j = std::min(p.dim, q.dim);
    if (j == 0) return {};
    const Matrix<S> e = range_basis(p);
    const Matrix<S> f = range_basis(q);
    const Svd<S> s = svd(e.adjoint() * f);
    std::vector<double> angles(j);
    for (int i = 0; i < j; ++i) angles[i] = std::acos(std::clamp(s.sigma[i], 0.0, 1.0));
    return angles;  // sigma descending => angles ascending
}

/// Canonical form of a projection pair.
///
/// Construction: eigendecompose Q compressed to range(P) for the angles
/// and the first block columns; partners for interior angles are the
/// normalized components of Q u orthogonal to u; endpoint angles draw
/// their partners from the corner subspaces (computed as eigenvectors of
/// Q compressed to ker(P)); leftovers fill the I_r and zero blocks. The
/// corner bookkeeping is cross-checked against the dimension counts and
/// any inconsistency throws AngleClassificationAmbiguous. Pairs whose
/// common range exceeds the joint kernel admit no block form of this
/// shape and land on the same error.
template <class S>
CanonicalForm<S> canonical_form(const Projection<S>& p_in, const Projection<S>& q_in,
                                double tol_angle = -1.0) {
    detail::check_pair_shape(p_in, q_in);
    const int n = p_in.n();
    if (tol_angle < 0.0) tol_angle = 1e-12 * n;

    CanonicalForm<S> cf;
    cf.swapped = p_in.dim > q_in.dim;
    const Projection<S>& a = cf.swapped ? q_in : p_in;
    const Projection<S>& b = cf.swapped ? p_in : q_in;
    const int j_count = a.dim;

    // Angles and first block columns, from range(A).
    std::vector<double> lambdas(j_count);
    Matrix<S> block_first(n, j_count);
    if (j_count > 0) {
        const Matrix<S> e = range_basis(a);
        const EigenSystem<S> es = hermitian_eigen(e.adjoint() * (b.mat * e));
        const Matrix<S> lifted = e * es.eigenvectors;
        // Ascending lambda = descending angle; flip so angles ascend.
        for (int k = 0; k < j_count; ++k) {
            lambdas[k] = std::clamp(es.eigenvalues[j_count - 1 - k], 0.0, 1.0);
            block_first.set_col(k, lifted.col(j_count - 1 - k));
        }
    }

    int n_zero = 0, n_right = 0;
    for (double lam : lambdas) {
        if (lam >= 1.0 - tol_angle) ++n_zero;
        if (lam <= tol_angle) ++n_right;
    }

    // Corner subspaces inside ker(A), as spectral multiplicities of the
    // compressed B.
    std::vector<Matrix<S>> pool_ones, pool_zeros;
    int n_middle = 0;
    if (n - j_count > 0) {
        const Projection<S>& a_ref = a;
        const Matrix<S> f0 = kernel_basis(a_ref);
        const EigenSystem<S> ker = hermitian_eigen(f0.adjoint() * (b.mat * f0));
        const Matrix<S> lifted = f0 * ker.eigenvectors;
        for (int k = 0; k < n - j_count; ++k) {
            const double mu = ker.eigenvalues[k];
            if (mu >= 1.0 - tol_angle)
                pool_ones.push_back(lifted.col(k));
            else if (mu <= tol_angle)
                pool_zeros.push_back(lifted.col(k));
            else
                ++n_middle;
        }
    }

    const int r = static_cast<int>(pool_ones.size()) - n_right;
    const int s = static_cast<int>(pool_zeros.size()) - n_zero;
    const int n_interior = j_count - n_zero - n_right;
    if (r != b.dim - a.dim || s != n - 2 * j_count - r || n_middle != n_interior || r < 0 ||
        s < 0)
        throw AngleClassificationAmbiguous(
            "canonical_form: corner dimension counts are inconsistent (r=" + std::to_string(r) +
            ", s=" + std::to_string(s) + ", middle=" + std::to_string(n_middle) +
            ", interior=" + std::to_string(n_interior) + ")");

    // Assemble U: per angle the block pair (u_j, partner), then the I_r
    // columns, then the joint kernel.
    cf.u = Matrix<S>(n, n);
    cf.angles.resize(j_count);
    size_t next_one = 0, next_zero = 0;
    for (int k = 0; k < j_count; ++k) {
        const double lam = lambdas[k];
        cf.angles[k] = detail::angle_from_cos_sq(lam);
        const Matrix<S> u = block_first.col(k);
        Matrix<S> partner(n, 1);
        if (lam >= 1.0 - tol_angle) {
            cf.angles[k] = 0.0;
            partner = pool_zeros[next_zero++];
        } else if (lam <= tol_angle) {
            cf.angles[k] = kHalfPi;
            partner = pool_ones[next_one++];
        } else {
            partner = b.mat * u;
            for (int i = 0; i < n; ++i) partner(i, 0) -= u(i, 0) * scalar_from_real<S>(lam);
            const double nrm = column_norm(partner);
            partner *= 1.0 / nrm;
        }
        cf.u.set_col(2 * k, u);
        cf.u.set_col(2 * k + 1, partner);
    }
    int col = 2 * j_count;
    for (int k = 0; k < r; ++k) cf.u.set_col(col++, pool_ones[next_one++]);
    for (int k = 0; k < s; ++k) cf.u.set_col(col++, pool_zeros[next_zero++]);

    // Columns are orthonormal up to rounding; polish so reconstruction
    // conjugates by an honest unitary.
    orthonormalize_columns(cf.u, 0.1);
    cf.r = r;
    cf.s = s;
    return cf;
}

/// Block pair described by a canonical form, before conjugation.
template <class S>
std::pair<Matrix<S>, Matrix<S>> canonical_blocks(const std::vector<double>& angles, int r, int s) {
    const int j = static_cast<int>(angles.size());
    const int n = 2 * j + r + s;
    Matrix<S> dp(n, n), dq(n, n);
    for (int k = 0; k < j; ++k) {
        dp.set_block(2 * k, 2 * k, block_p<S>());
        dq.set_block(2 * k, 2 * k, block_q<S>(angles[k]));
    }
    for (int k = 0; k < r; ++k) dq(2 * j + k, 2 * j + k) = scalar_from_real<S>(1.0);
    return {std::move(dp), std::move(dq)};
}

/// Rebuilds the projection pair from its canonical data.
template <class S>
std::pair<Projection<S>, Projection<S>> reconstruct(const CanonicalForm<S>& cf,
                                                    double tol_proj = kDefaultTolProj) {
    auto [dp, dq] = canonical_blocks<S>(cf.angles, cf.r, cf.s);
    const Matrix<S> ua = cf.u.adjoint();
    Projection<S> p = validate_projection(cf.u * dp * ua, tol_proj);
    Projection<S> q = validate_projection(cf.u * dq * ua, tol_proj);
    if (cf.swapped) std::swap(p, q);
    return {std::move(p), std::move(q)};
}

}  // namespace amat
