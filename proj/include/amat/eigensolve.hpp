#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "amat/detail/eigen_bridge.hpp"
#include "amat/embedding.hpp"
#include "amat/matrix.hpp"

namespace amat {

/// Full eigensystem of a Hermitian matrix over the input field.
/// Eigenvalues ascending; eigenvector columns orthonormal over the field.
template <class S>
struct EigenSystem {
    std::vector<double> eigenvalues;
    Matrix<S> eigenvectors;
};

namespace detail {

template <class S>
EigenSystem<S> carrier_hermitian_eigen(const Matrix<S>& m) {
    Eigen::SelfAdjointEigenSolver<typename EigenOf<S>::type> es(to_eigen(m));
    if (es.info() != Eigen::Success) throw Error("hermitian eigensolver failed to converge");
    EigenSystem<S> out;
    out.eigenvalues.resize(m.rows());
    for (int i = 0; i < m.rows(); ++i) out.eigenvalues[i] = es.eigenvalues()(i);
    out.eigenvectors = from_eigen(es.eigenvectors());
    return out;
}

// Eigensystem of a quaternionic Hermitian matrix via the complex embedding.
//
// chi(M) is Hermitian with every eigenvalue of even multiplicity (Kramers):
// if chi(M) v = lambda v then chi(M) (T v) = lambda (T v) with T v
// orthogonal to v. Within each numerically degenerate cluster we greedily
// pick a T-transversal set {v_1, ..., v_m}: span{v_i, T v_i} are mutually
// orthogonal, so the unembedded quaternionic columns come out orthonormal.
inline EigenSystem<Quat> quaternion_hermitian_eigen(const MatH& m, double tol_eig) {
    const int n = m.rows();
    const MatC x = embed_complex(m);
    const EigenSystem<Cplx> es = carrier_hermitian_eigen(x);

    // Cluster ascending eigenvalues. Kramers partners split only by
    // rounding, so any gap below the cluster width belongs to one cluster.
    const double scale = std::max(1.0, std::max(std::abs(es.eigenvalues.front()),
                                                std::abs(es.eigenvalues.back())));
    const double cluster_gap = std::max(tol_eig, 1e3 * 2.22e-16 * scale);

    EigenSystem<Quat> out;
    out.eigenvalues.reserve(n);
    out.eigenvectors = MatH(n, n);
    int emitted = 0;

    int begin = 0;
    while (begin < 2 * n) {
        int end = begin + 1;
        while (end < 2 * n && es.eigenvalues[end] - es.eigenvalues[end - 1] <= cluster_gap) ++end;
        int size = end - begin;
        if (size % 2 != 0) {
            // A Kramers pair cannot straddle a genuine gap; extend the cluster.
            if (end < 2 * n) {
                ++end;
                ++size;
            } else {
                throw Error("quaternion eigensolver: odd Kramers cluster");
            }
        }

        std::vector<MatC> basis;
        basis.reserve(size);
        for (int idx = begin; idx < end; ++idx) basis.push_back(es.eigenvectors.col(idx));
        std::vector<double> vals(es.eigenvalues.begin() + begin, es.eigenvalues.begin() + end);

        while (!basis.empty()) {
            MatC v = basis.front();
            const double vn = column_norm(v);
            v *= 1.0 / vn;
            const MatC tv = apply_antiunitary_T(v);
            out.eigenvalues.push_back(vals.front());
            out.eigenvectors.set_col(emitted++, unembed_column(v));

            // Project span{v, Tv} out of the rest, then keep an orthonormal
            // basis of what survives (two dimensions disappear).
            std::vector<MatC> rest;
            std::vector<double> rest_vals;
            int expected = static_cast<int>(basis.size()) - 2;
            for (size_t r = 1; r < basis.size(); ++r) {
                MatC c = basis[r];
                const Cplx a1 = column_dot(v, c);
                const Cplx a2 = column_dot(tv, c);
                for (int i = 0; i < c.rows(); ++i) c(i, 0) -= v(i, 0) * a1 + tv(i, 0) * a2;
                for (const MatC& kept : rest) {
                    const Cplx b = column_dot(kept, c);
                    for (int i = 0; i < c.rows(); ++i) c(i, 0) -= kept(i, 0) * b;
                }
                const double nrm = column_norm(c);
                if (static_cast<int>(rest.size()) < expected && nrm > 1e-3) {
                    c *= 1.0 / nrm;
                    rest.push_back(c);
                    rest_vals.push_back(vals[r]);
                }
            }
            if (static_cast<int>(rest.size()) != std::max(0, expected))
                throw Error("quaternion eigensolver: Kramers transversal selection failed");
            basis = std::move(rest);
            vals = std::move(rest_vals);
        }
        begin = end;
    }
    if (emitted != n) throw Error("quaternion eigensolver: wrong eigenvector count");
    return out;
}

}  // namespace detail

/// Default symmetry tolerance used by hermitian_eigen and friends.
inline double default_tol_eig(int n) { return 1e-10 * n; }

/// Eigendecomposition of a Hermitian matrix over R, C or H.
///
/// The input is symmetrized to (M + M*)/2 after checking that the
/// Hermitian defect is within tol_eig (Frobenius, an upper bound for the
/// operator norm). Quaternionic matrices go through the complex embedding;
/// each Kramers pair contributes one quaternionic eigenvector.
template <class S>
EigenSystem<S> hermitian_eigen(const Matrix<S>& m, double tol_eig = -1.0) {
    if (!m.is_square()) throw DimensionMismatch("hermitian_eigen expects a square matrix");
    if (tol_eig < 0.0) tol_eig = default_tol_eig(m.rows());
    const double defect = (m - m.adjoint()).frobenius_norm();
    if (!(defect <= tol_eig))
        throw NotHermitian("hermitian_eigen: ||M - M*|| = " + std::to_string(defect));
    const Matrix<S> h = hermitian_part(m);
    if constexpr (field_of<S> == Field::Quaternion) {
        return detail::quaternion_hermitian_eigen(h, tol_eig);
    } else {
        return detail::carrier_hermitian_eigen(h);
    }
}

}  // namespace amat
